#include "qhlab/cli/experiments.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "qhlab/bounds/bounds.hpp"
#include "qhlab/cli/csv.hpp"
#include "qhlab/collision/exact.hpp"
#include "qhlab/collision/nmr.hpp"
#include "qhlab/collision/surface.hpp"
#include "qhlab/heisenberg/descriptors.hpp"
#include "qhlab/paradox/circuits.hpp"
#include "qhlab/paradox/hardy.hpp"

namespace qhlab::cli {

namespace {

namespace fs = std::filesystem;
using collision::HomogenizerConfig;
using collision::Task;

void meta_params(CsvTable& t, const json& p) {
    // Sorted keys (nlohmann objects iterate sorted) keep provenance stable.
    for (auto it = p.begin(); it != p.end(); ++it)
        t.metadata.push_back({it.key(), it.value().dump()});
}

std::string task_name(Task t) {
    return t == Task::PureToMixed ? "pure-to-mixed" : "mixed-to-pure";
}

Task parse_task(const std::string& s) {
    if (s == "pure-to-mixed") return Task::PureToMixed;
    if (s == "mixed-to-pure") return Task::MixedToPure;
    throw schema_error("task must be pure-to-mixed or mixed-to-pure, got '" + s + "'");
}

std::vector<Task> parse_tasks(const std::string& s) {
    if (s == "both") return {Task::PureToMixed, Task::MixedToPure};
    return {parse_task(s)};
}

// Random unit vector and a second one perpendicular to it.
std::pair<BlochVector, BlochVector> random_perp_pair(std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    auto unit = [&] {
        double x, y, z, n;
        do {
            x = g(rng);
            y = g(rng);
            z = g(rng);
            n = std::sqrt(x * x + y * y + z * z);
        } while (n < 1e-6);
        return BlochVector{x / n, y / n, z / n};
    };
    BlochVector u = unit();
    BlochVector v;
    double n;
    do {
        BlochVector w = unit();
        double d = w.x * u.x + w.y * u.y + w.z * u.z;
        v = {w.x - d * u.x, w.y - d * u.y, w.z - d * u.z};
        n = v.norm();
    } while (n < 1e-6);
    v = {v.x / n, v.y / n, v.z / n};
    return {u, v};
}

void exp_rel_det_surface(const json& p, const fs::path& out) {
    double eta = p.at("eta");
    int size = p.at("size");
    std::string plot = "set logscale z\nset xlabel 'N'\nset ylabel 'n'\n";
    for (Task task : parse_tasks(p.at("task"))) {
        HomogenizerConfig cfg = task == Task::PureToMixed
                                    ? HomogenizerConfig::pure_to_mixed(eta, size, size)
                                    : HomogenizerConfig::mixed_to_pure(eta, size, size);
        auto surf = collision::deterioration_surface(cfg);
        CsvTable t;
        meta_params(t, p);
        t.metadata.push_back({"classification", collision::to_string(surf.classification)});
        t.metadata.push_back({"diag_log_slope", format_double(surf.diag_slope)});
        t.header = {"n", "N", "eps", "delta", "R"};
        for (int n = 1; n <= size; ++n)
            for (int N = 1; N <= size; ++N)
                t.add_row({double(n), double(N), surf.at_eps(n, N), surf.at_delta(n, N),
                           surf.at_R(n, N)});
        std::string base = "rel_det_" + task_name(task);
        write_csv(t, out / (base + ".csv"));
        plot += "splot '" + base + ".csv' using 2:1:5 with pm3d title 'R " + task_name(task) +
                "'\npause -1\n";
    }
    write_text(plot, out / "plot.gp");
}

void exp_resources_curve(const json& p, const fs::path& out) {
    double eta = p.at("eta");
    double err = p.at("target_error");
    int n_max = p.at("n_max");
    long long cap = p.at("cap");
    auto ptm = bounds::resources_curve(err, eta, Task::PureToMixed, 1, n_max, cap);
    auto mtp = bounds::resources_curve(err, eta, Task::MixedToPure, 1, n_max, cap);
    CsvTable t;
    meta_params(t, p);
    t.header = {"n", "N_pure_to_mixed", "saturated_ptm", "N_mixed_to_pure", "saturated_mtp"};
    for (std::size_t i = 0; i < ptm.size(); ++i)
        t.add_row({double(ptm[i].n), double(ptm[i].N), ptm[i].saturated ? 1.0 : 0.0,
                   double(mtp[i].N), mtp[i].saturated ? 1.0 : 0.0});
    write_csv(t, out / "resources.csv");
    write_text(
        "set xlabel 'n homogenizations'\nset ylabel 'minimal N'\n"
        "plot 'resources.csv' using 1:2 with linespoints title 'pure-to-mixed', "
        "'resources.csv' using 1:4 with linespoints title 'mixed-to-pure'\npause -1\n",
        out / "plot.gp");
}

void exp_cswap_gap(const json& p, const fs::path& out) {
    int grid = p.at("grid");
    int pairs = p.at("pairs");
    std::uint64_t seed = p.at("seed").get<std::uint64_t>();

    CsvTable bound;
    meta_params(bound, p);
    auto mx = bounds::cswap_fidelity_gap_max();
    bound.metadata.push_back({"bound_max", format_double(mx.value)});
    bound.metadata.push_back({"bound_argmax_alpha", format_double(mx.arg)});
    bound.header = {"alpha", "bound"};
    for (int i = 0; i <= grid; ++i) {
        double a = double(i) / grid;
        bound.add_row({a, bounds::cswap_fidelity_gap(a)});
    }

    CsvTable meas;
    meta_params(meas, p);
    meas.header = {"alpha", "beta", "eta", "measured_gap", "bound_at_alpha"};
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> mag(0.0, 1.0);
    std::uniform_real_distribution<double> ang(1e-3, M_PI / 2 - 1e-3);
    int exceed = 0;
    double worst = 0.0;
    for (int i = 0; i < pairs; ++i) {
        auto [u, v] = random_perp_pair(rng);
        double a = mag(rng), b = mag(rng), eta = ang(rng);
        BlochVector res{a * u.x, a * u.y, a * u.z};
        BlochVector sys{b * v.x, b * v.y, b * v.z};
        double g = bounds::measured_cswap_pswap_gap(sys, res, eta);
        double bd = bounds::cswap_fidelity_gap(a);
        meas.add_row({a, b, eta, g, bd});
        if (g > bd + 1e-12) ++exceed;
        worst = std::max(worst, g);
    }
    meas.metadata.push_back({"measured_max", format_double(worst)});
    meas.metadata.push_back({"pairs_exceeding_bound", std::to_string(exceed)});
    write_csv(bound, out / "cswap_gap_bound.csv");
    write_csv(meas, out / "cswap_gap_measured.csv");
    write_text(
        "set xlabel 'alpha'\nset ylabel 'fidelity gap ratio'\n"
        "plot 'cswap_gap_bound.csv' using 1:2 with lines title 'bound', "
        "'cswap_gap_measured.csv' using 1:4 with points pt 7 ps 0.3 title 'exact gap'\npause -1\n",
        out / "plot.gp");
}

void exp_cswap_bounds(const json& p, const fs::path& out) {
    double delta = p.at("delta"), d = p.at("d"), eta = p.at("eta"), Delta = p.at("Delta");
    long long n = p.at("n").get<long long>();

    CsvTable t;
    meta_params(t, p);
    long long N1 = bounds::min_reservoir_size(delta, d);
    auto reuse = bounds::max_reuses(delta, d, eta);
    auto rb = bounds::reuse_reservoir_bound(Delta, d, n, eta);  // infeasible -> exit 3
    t.header = {"min_reservoir_size", "max_reuses", "reuse_N_min", "d_prime"};
    t.add_row({double(N1), reuse ? double(*reuse) : -1.0, double(rb.N_min), rb.d_prime});
    write_csv(t, out / "bounds_summary.csv");

    CsvTable sweep;
    meta_params(sweep, p);
    sweep.header = {"delta_over_d", "min_reservoir_size"};
    for (int i = 1; i < 100; ++i) {
        double x = i / 100.0;
        sweep.add_row({x, double(bounds::min_reservoir_size(x * d, d))});
    }
    write_csv(sweep, out / "bounds_sweep.csv");
    write_text(
        "set xlabel 'delta/d'\nset ylabel 'N'\nset logscale y\n"
        "plot 'bounds_sweep.csv' using 1:2 with lines title 'minimum reservoir size'\npause -1\n",
        out / "plot.gp");
}

void exp_nmr_circuit(const json& p, const fs::path& out) {
    int points = p.at("points");
    CsvTable t;
    meta_params(t, p);
    t.header = {"eta", "fA_sim", "fA_form", "fB_sim", "fB_form", "fC_sim", "fC_form",
                "fD_sim", "fD_form", "S_A", "S_B", "S_C", "S_D", "S_tot"};
    double worst = 0.0;
    for (int i = 0; i <= points; ++i) {
        double eta = (M_PI / 2) * double(i) / points;
        auto r = collision::nmr_circuit(eta);
        double stot = r.entropy[0] + r.entropy[1] + r.entropy[2] + r.entropy[3];
        t.add_row({eta, r.f_sim[0], r.f_form[0], r.f_sim[1], r.f_form[1], r.f_sim[2],
                   r.f_form[2], r.f_sim[3], r.f_form[3], r.entropy[0], r.entropy[1],
                   r.entropy[2], r.entropy[3], stot});
        for (int q = 0; q < 4; ++q)
            worst = std::max(worst, std::abs(r.f_sim[q] - r.f_form[q]));
    }
    t.metadata.push_back({"max_abs_sim_minus_form", format_double(worst)});
    write_csv(t, out / "nmr.csv");
    write_text(
        "set xlabel 'eta'\nset ylabel 'f'\n"
        "plot 'nmr.csv' using 1:2 w l t 'f_A', '' using 1:4 w l t 'f_B', "
        "'' using 1:6 w l t 'f_C', '' using 1:8 w l t 'f_D'\npause -1\n"
        "set ylabel 'S (bits)'\n"
        "plot 'nmr.csv' using 1:11 w l t 'S_B', '' using 1:12 w l t 'S_C', "
        "'' using 1:14 w l t 'S_tot'\npause -1\n",
        out / "plot.gp");
}

void exp_hardy_scan(const json& p, const fs::path& out) {
    int grid = p.at("grid");
    auto scan = paradox::scan_hardy(grid);
    CsvTable t;
    meta_params(t, p);
    t.metadata.push_back({"argmax_p_paradox_a", format_double(scan.max_p_paradox.arg)});
    t.metadata.push_back({"max_p_paradox", format_double(scan.max_p_paradox.value)});
    t.metadata.push_back({"argmax_p_hardy_a", format_double(scan.max_p_hardy.arg)});
    t.metadata.push_back({"max_p_hardy", format_double(scan.max_p_hardy.value)});
    t.metadata.push_back({"argmax_I1_a", format_double(scan.max_I1.arg)});
    t.metadata.push_back({"max_I1", format_double(scan.max_I1.value)});
    t.header = {"a", "S_tot", "P_paradox", "P_Hardy", "I1", "I12"};
    for (const auto& r : scan.rows)
        t.add_row({r.a, r.s_tot, r.p_paradox, r.p_hardy, r.I1, r.I12});
    write_csv(t, out / "hardy_scan.csv");
    write_text(
        "set xlabel 'a'\n"
        "plot 'hardy_scan.csv' using 1:2 w l t 'S_tot', '' using 1:3 w l t 'P_paradox', "
        "'' using 1:4 w l t 'P_Hardy', '' using 1:5 w l t 'I1', '' using 1:6 w l t 'I12'\n"
        "pause -1\n",
        out / "plot.gp");
}

void distribution_csv(const paradox::CircuitOutcome& o, const json& p, const fs::path& file) {
    CsvTable t;
    meta_params(t, p);
    for (const auto& [k, v] : o.metrics) t.metadata.push_back({k, format_double(v)});
    if (!o.forbidden_outcome.empty())
        t.metadata.push_back({"forbidden_outcome", o.forbidden_outcome});
    t.label_header = "outcome";
    t.header = {"probability"};
    for (const auto& [label, prob] : o.distribution) t.add_row(label, {prob});
    write_csv(t, file);
}

void exp_penrose(const json& p, const fs::path& out) {
    double a2 = p.at("alpha_sq");
    double sign = p.at("beta_sign");
    if (a2 < 0.0 || a2 > 1.0) throw schema_error("alpha_sq must lie in [0,1]");
    double alpha = std::sqrt(a2);
    double beta = (sign < 0 ? -1.0 : 1.0) * std::sqrt(1.0 - a2);
    auto o = paradox::penrose_circuit(alpha, beta);
    distribution_csv(o, p, out / "penrose.csv");
    write_text("set style data histograms\nset style fill solid\n"
               "plot 'penrose.csv' using 2:xtic(1) title 'P(outcome)'\npause -1\n",
               out / "plot.gp");
}

void exp_fr(const json& p, const fs::path& out) {
    std::string variant = p.at("variant");
    std::string plot = "set style data histograms\nset style fill solid\n";
    if (variant == "original" || variant == "both") {
        distribution_csv(paradox::fr_circuit(paradox::FrVariant::Original), p,
                         out / "fr_original.csv");
        plot += "plot 'fr_original.csv' using 2:xtic(1) title 'original'\npause -1\n";
    }
    if (variant == "with-observer" || variant == "both") {
        distribution_csv(paradox::fr_circuit(paradox::FrVariant::WithExternalObserver), p,
                         out / "fr_observer.csv");
        plot += "plot 'fr_observer.csv' using 2:xtic(1) title 'with external observer'\npause -1\n";
    }
    if (variant != "original" && variant != "with-observer" && variant != "both")
        throw schema_error("variant must be original, with-observer or both");
    write_text(plot, out / "plot.gp");
}

void exp_pigeonhole(const json& p, const fs::path& out) {
    int a = p.at("pair_first"), b = p.at("pair_second");
    bool check = p.at("insert_check");
    auto o = paradox::pigeonhole_circuit({a, b}, check);
    distribution_csv(o, p, out / "pigeonhole.csv");
    if (o.has_postselected) {
        CsvTable t;
        meta_params(t, p);
        t.metadata.push_back({"p_same", format_double(o.postselect_probability)});
        t.label_header = "outcome";
        t.header = {"probability_given_same"};
        for (const auto& [label, prob] : o.postselected) t.add_row(label, {prob});
        write_csv(t, out / "pigeonhole_postselected.csv");
    }
    write_text("set style data histograms\nset style fill solid\n"
               "plot 'pigeonhole.csv' using 2:xtic(1) title 'P(outcome)'\npause -1\n",
               out / "plot.gp");
}

void exp_info_conservation(const json& p, const fs::path& out) {
    int states = p.at("states");
    std::uint64_t seed = p.at("seed").get<std::uint64_t>();
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g(0.0, 1.0);

    CsvTable t;
    meta_params(t, p);
    t.header = {"state", "acc_qubit1", "acc_qubit2", "inacc", "total"};
    double worst_dev = 0.0;
    for (int i = 0; i < states; ++i) {
        // Haar-random 2-qubit pure state, prepared as a custom circuit on the
        // descriptor network via its Schrodinger statevector.
        Vec amps(4);
        for (int k = 0; k < 4; ++k) amps[k] = cxd(g(rng), g(rng));
        amps.normalize();
        auto net = heisenberg::init_network(2);
        // Evolve by any unitary whose first column is `amps` (QR of the
        // column, then a phase fix so U|00> = amps exactly).
        Eigen::HouseholderQR<Mat> qr{Mat(amps)};
        Mat u = qr.householderQ();
        u.col(0) *= (u.col(0).adjoint() * amps)(0, 0);
        net = heisenberg::evolve(net, Gate(2, u, "prep"), {0, 1});
        auto rep = heisenberg::info_report(net);
        double tot = rep.acc_per_qubit[0] + rep.acc_per_qubit[1] + rep.inacc;
        worst_dev = std::max(worst_dev, std::abs(tot - 2.0));
        t.add_row({double(i), rep.acc_per_qubit[0], rep.acc_per_qubit[1], rep.inacc, tot});
    }
    t.metadata.push_back({"max_conservation_deviation", format_double(worst_dev)});
    write_csv(t, out / "info.csv");
    write_text(
        "set xlabel 'accessible bits (qubit 1)'\nset ylabel 'inaccessible bits'\n"
        "plot 'info.csv' using 2:4 with points pt 7 title 'random pure 2-qubit states'\n"
        "pause -1\n",
        out / "plot.gp");
}

void exp_homogenizer_compare(const json& p, const fs::path& out) {
    double eta = p.at("eta");
    int size = p.at("size");
    CsvTable t;
    meta_params(t, p);
    t.header = {"task", "kind", "index", "bloch_recurrence", "bloch_exact", "abs_diff"};
    double worst = 0.0;
    for (Task task : parse_tasks(p.at("task"))) {
        HomogenizerConfig rc = task == Task::PureToMixed
                                   ? HomogenizerConfig::pure_to_mixed(eta, size, size)
                                   : HomogenizerConfig::mixed_to_pure(eta, size, size);
        auto series = collision::recurrence_series(rc);
        HomogenizerConfig ec = rc;
        ec.engine = collision::Engine::Exact;
        auto run = collision::exact_homogenize(ec);
        double tid = task == Task::PureToMixed ? 0.0 : 1.0;
        for (int I = 1; I <= size; ++I) {
            double ex = collision::bloch_component(run.system_after_pass[I - 1], ec);
            double re = series.beta(I, size);
            worst = std::max(worst, std::abs(ex - re));
            t.add_row({tid, 0.0, double(I), re, ex, std::abs(ex - re)});
        }
        for (int j = 1; j <= size; ++j) {
            double ex = collision::bloch_component(run.reservoir_final[j - 1], ec);
            double re = series.alpha(size, j);
            worst = std::max(worst, std::abs(ex - re));
            t.add_row({tid, 1.0, double(j), re, ex, std::abs(ex - re)});
        }
    }
    t.metadata.push_back({"max_abs_diff", format_double(worst)});
    write_csv(t, out / "compare.csv");
    write_text(
        "set xlabel 'qubit index'\nset ylabel 'Bloch size'\n"
        "plot 'compare.csv' using 3:4 with points title 'recurrence', "
        "'compare.csv' using 3:5 with points title 'exact'\npause -1\n",
        out / "plot.gp");
}

std::vector<Experiment> make_registry() {
    using T = ParamSpec::Type;
    std::vector<Experiment> v;
    v.push_back({"rel-det-surface",
                 "error, robustness and relative deterioration over the (n, N) grid",
                 "fig: relative deterioration",
                 {{"eta", T::Number, 0.01, "coupling strength"},
                  {"size", T::Integer, 60, "n_max = N_max"},
                  {"task", T::String, "both", "pure-to-mixed | mixed-to-pure | both"}},
                 exp_rel_det_surface});
    v.push_back({"resources-curve",
                 "reservoir size required for n homogenizations at fixed accuracy",
                 "fig: resources",
                 {{"eta", T::Number, 0.3, "coupling strength"},
                  {"target_error", T::Number, 0.1, "per-system error bound"},
                  {"n_max", T::Integer, 20, "largest homogenization count"},
                  {"cap", T::Integer, 5000, "reservoir-size cap"}},
                 exp_resources_curve});
    v.push_back({"cswap-gap",
                 "CSWAP/PSWAP fidelity-gap bound versus the exact measured gap",
                 "fig: fidelity comparison (approx 2% bound)",
                 {{"grid", T::Integer, 1000, "bound curve sample count"},
                  {"pairs", T::Integer, 1000, "random perpendicular Bloch pairs"},
                  {"seed", T::Integer, 7, "RNG seed"}},
                 exp_cswap_gap});
    v.push_back({"cswap-bounds",
                 "convergence and reuse bounds for the homogenizers",
                 "eqs: minimum gates / reuse constraint / worst-case reservoir",
                 {{"delta", T::Number, 0.1, "target trace distance"},
                  {"d", T::Number, 2.0, "initial Bloch distance"},
                  {"eta", T::Number, 0.1, "coupling strength"},
                  {"n", T::Integer, 5, "intended reuse count"},
                  {"Delta", T::Number, 0.5, "total error budget"}},
                 exp_cswap_bounds});
    v.push_back({"nmr-circuit",
                 "four-qubit linear-chain homogenizer, simulated vs closed forms",
                 "fig: nmr circuit / VN entropies of B and C",
                 {{"points", T::Integer, 50, "eta grid points over [0, pi/2]"}},
                 exp_nmr_circuit});
    v.push_back({"hardy-scan",
                 "Hardy-state family sweep: entropies, paradox probabilities, incompatibility",
                 "fig: incompatibility",
                 {{"grid", T::Integer, 1000, "a-grid points"}},
                 exp_hardy_scan});
    v.push_back({"penrose",
                 "two-qubit circuit behind the impossible-chain argument",
                 "fig: original short circuit",
                 {{"alpha_sq", T::Number, 1.0 / 3.0, "|alpha|^2 of U|0>"},
                  {"beta_sign", T::Number, 1.0, "sign of beta"}},
                 exp_penrose});
    v.push_back({"fr",
                 "Frauchiger-Renner circuit, original and external-observer variants",
                 "fig: FR circuit / FR observers",
                 {{"variant", T::String, "both", "original | with-observer | both"}},
                 exp_fr});
    v.push_back({"pigeonhole",
                 "quantum pigeonhole circuit with same/different check and post-selection",
                 "fig: pigeonhole circuit",
                 {{"pair_first", T::Integer, 1, "first qubit of the checked pair (1..3)"},
                  {"pair_second", T::Integer, 2, "second qubit of the checked pair (1..3)"},
                  {"insert_check", T::Boolean, true, "insert the ancilla parity check"}},
                 exp_pigeonhole});
    v.push_back({"info-conservation",
                 "locally accessible/inaccessible information over random pure 2-qubit states",
                 "table: information capacity",
                 {{"states", T::Integer, 200, "number of random states"},
                  {"seed", T::Integer, 11, "RNG seed"}},
                 exp_info_conservation});
    v.push_back({"homogenizer-compare",
                 "recurrence versus exact engine on a small homogenizer",
                 "fig: rel det 0.01 (exact vs approximate)",
                 {{"eta", T::Number, 0.01, "coupling strength"},
                  {"size", T::Integer, 3, "N = n"},
                  {"task", T::String, "both", "pure-to-mixed | mixed-to-pure | both"}},
                 exp_homogenizer_compare});
    return v;
}

}  // namespace

const std::vector<Experiment>& registry() {
    static const std::vector<Experiment> r = make_registry();
    return r;
}

const Experiment* find_experiment(const std::string& name) {
    for (const auto& e : registry())
        if (e.name == name) return &e;
    return nullptr;
}

json validate_params(const Experiment& e, const json& config) {
    if (!config.is_object()) throw schema_error("config must be a JSON object");
    json out = json::object();
    for (const auto& spec : e.params) out[spec.key] = spec.def;
    for (auto it = config.begin(); it != config.end(); ++it) {
        const ParamSpec* spec = nullptr;
        for (const auto& s : e.params)
            if (s.key == it.key()) spec = &s;
        if (!spec) throw schema_error("unknown parameter '" + it.key() + "'");
        const json& v = it.value();
        switch (spec->type) {
            case ParamSpec::Type::Number:
                if (!v.is_number()) throw schema_error("parameter '" + spec->key + "' must be a number");
                break;
            case ParamSpec::Type::Integer:
                if (!v.is_number_integer())
                    throw schema_error("parameter '" + spec->key + "' must be an integer");
                break;
            case ParamSpec::Type::Boolean:
                if (!v.is_boolean())
                    throw schema_error("parameter '" + spec->key + "' must be a boolean");
                break;
            case ParamSpec::Type::String:
                if (!v.is_string())
                    throw schema_error("parameter '" + spec->key + "' must be a string");
                break;
        }
        out[spec->key] = v;
    }
    return out;
}

void run_experiment(const std::string& name, const json& config,
                    const std::filesystem::path& outdir) {
    const Experiment* e = find_experiment(name);
    if (!e) {
        std::ostringstream msg;
        msg << "unknown experiment '" << name << "'; valid names:";
        for (const auto& x : registry()) msg << " " << x.name;
        throw schema_error(msg.str());
    }
    json p = validate_params(*e, config);
    std::filesystem::create_directories(outdir);
    e->run(p, outdir);
}

}  // namespace qhlab::cli
