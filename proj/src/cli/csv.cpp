#include "qhlab/cli/csv.hpp"

#include <charconv>
#include <fstream>
#include <stdexcept>

namespace qhlab::cli {

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc())
        throw std::runtime_error("format_double: to_chars failed");
    return std::string(buf, ptr);
}

void write_csv(const CsvTable& t, const std::filesystem::path& file) {
    std::ofstream out(file, std::ios::binary);  // binary: no platform newline games
    if (!out) throw std::runtime_error("write_csv: cannot open " + file.string());
    const bool labeled = !t.label_header.empty();
    if (labeled && t.labels.size() != t.rows.size())
        throw std::runtime_error("write_csv: label/row count mismatch");
    for (const auto& [k, v] : t.metadata) out << "#" << k << "=" << v << "\n";
    if (labeled) out << t.label_header << (t.header.empty() ? "" : ",");
    for (std::size_t i = 0; i < t.header.size(); ++i)
        out << (i ? "," : "") << t.header[i];
    out << "\n";
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        const auto& row = t.rows[r];
        if (row.size() != t.header.size())
            throw std::runtime_error("write_csv: ragged row");
        if (labeled) out << t.labels[r] << (row.empty() ? "" : ",");
        for (std::size_t i = 0; i < row.size(); ++i)
            out << (i ? "," : "") << format_double(row[i]);
        out << "\n";
    }
}

void write_text(const std::string& content, const std::filesystem::path& file) {
    std::ofstream out(file, std::ios::binary);
    if (!out) throw std::runtime_error("write_text: cannot open " + file.string());
    out << content;
}

}  // namespace qhlab::cli
