#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

namespace qhlab::cli {

/// Rectangular numeric table with `#key=value` provenance comments. Values
/// are printed in shortest round-trip decimal form so identical runs are
/// byte-identical.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
    std::vector<std::pair<std::string, std::string>> metadata;  // written in given order

    // Optional leading string column (outcome labels and the like).
    std::string label_header;
    std::vector<std::string> labels;

    void add_row(std::initializer_list<double> vals) { rows.emplace_back(vals); }
    void add_row(std::string label, std::initializer_list<double> vals) {
        labels.push_back(std::move(label));
        rows.emplace_back(vals);
    }
};

std::string format_double(double v);

void write_csv(const CsvTable& t, const std::filesystem::path& file);

void write_text(const std::string& content, const std::filesystem::path& file);

}  // namespace qhlab::cli
