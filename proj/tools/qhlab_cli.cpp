// qhlab: experiment registry and reproduction harness.
//
//   qhlab list
//   qhlab run <name> [--config file.json] [--set key=value ...] [--out dir]
//
// Exit codes: 0 success, 2 bad arguments or schema, 3 infeasible bound,
// 4 internal invariant violation.

#include <cstdio>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "qhlab/bounds/bounds.hpp"
#include "qhlab/cli/experiments.hpp"

namespace {

using qhlab::cli::json;

// `--set key=value`; values parse as JSON when possible, else as strings.
json parse_set(const std::vector<std::string>& sets) {
    json out = json::object();
    for (const auto& kv : sets) {
        auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0)
            throw qhlab::cli::schema_error("--set expects key=value, got '" + kv + "'");
        std::string key = kv.substr(0, eq), val = kv.substr(eq + 1);
        json parsed = json::parse(val, nullptr, false);
        out[key] = parsed.is_discarded() ? json(val) : parsed;
    }
    return out;
}

int do_list() {
    for (const auto& e : qhlab::cli::registry()) {
        std::printf("%-20s %s (%s)\n", e.name.c_str(), e.description.c_str(),
                    e.figure.c_str());
        for (const auto& p : e.params)
            std::printf("    %-14s default %-10s %s\n", p.key.c_str(), p.def.dump().c_str(),
                        p.help.c_str());
    }
    return 0;
}

int do_run(const std::string& name, const std::string& config_file,
           const std::vector<std::string>& sets, const std::string& outdir) {
    json config = json::object();
    if (!config_file.empty()) {
        std::ifstream in(config_file);
        if (!in) throw qhlab::cli::schema_error("cannot open config file " + config_file);
        config = json::parse(in);  // throws on malformed JSON
    }
    // CLI flags override JSON keys.
    json overrides = parse_set(sets);
    for (auto it = overrides.begin(); it != overrides.end(); ++it)
        config[it.key()] = it.value();
    qhlab::cli::run_experiment(name, config, outdir);
    std::printf("wrote outputs for '%s' to %s\n", name.c_str(), outdir.c_str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quantum homogenizer / paradox laboratory"};
    app.require_subcommand(1);

    app.add_subcommand("list", "list the registered experiments");

    auto* run = app.add_subcommand("run", "run one experiment");
    std::string name, config_file, outdir = ".";
    std::vector<std::string> sets;
    run->add_option("name", name, "experiment name")->required();
    run->add_option("--config", config_file, "JSON config file");
    run->add_option("--set", sets, "key=value override (repeatable)");
    run->add_option("--out", outdir, "output directory");

    try {
        app.parse(argc, argv);
        if (app.got_subcommand("list")) return do_list();
        return do_run(name, config_file, sets, outdir);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const qhlab::cli::schema_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const qhlab::bounds::infeasible_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const qhlab::cli::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
}
