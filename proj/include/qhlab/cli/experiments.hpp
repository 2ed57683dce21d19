#pragma once

#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

namespace qhlab::cli {

using json = nlohmann::json;

/// Parameter validation failed; exit code 2.
struct schema_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParamSpec {
    enum class Type { Number, Integer, Boolean, String };
    std::string key;
    Type type;
    json def;
    std::string help;
};

/// One reproduction experiment: deterministic parameters in, CSV tables and
/// a gnuplot script out.
struct Experiment {
    std::string name;
    std::string description;
    std::string figure;  // thesis-figure tag
    std::vector<ParamSpec> params;
    std::function<void(const json&, const std::filesystem::path&)> run;
};

const std::vector<Experiment>& registry();
const Experiment* find_experiment(const std::string& name);

/// Fill defaults, reject unknown keys and type mismatches (schema_error).
json validate_params(const Experiment& e, const json& config);

/// Validate and run; outputs land in outdir (created if needed).
void run_experiment(const std::string& name, const json& config,
                    const std::filesystem::path& outdir);

}  // namespace qhlab::cli
