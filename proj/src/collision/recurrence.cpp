#include "qhlab/collision/recurrence.hpp"

#include <cmath>

namespace qhlab::collision {

HomogenizerConfig HomogenizerConfig::pure_to_mixed(double eta, int n, int N, Engine e) {
    HomogenizerConfig c;
    c.eta = eta;
    c.n = n;
    c.N = N;
    c.task = Task::PureToMixed;
    c.system_bloch = {0, 0, 1};
    c.reservoir_bloch = {0, 0, 0};
    c.engine = e;
    return c;
}

HomogenizerConfig HomogenizerConfig::mixed_to_pure(double eta, int n, int N, Engine e) {
    HomogenizerConfig c = pure_to_mixed(eta, n, N, e);
    c.task = Task::MixedToPure;
    c.system_bloch = {0, 0, 0};
    c.reservoir_bloch = {0, 0, 1};
    return c;
}

HomogenizerConfig HomogenizerConfig::custom(double eta, int n, int N, BlochVector system,
                                            BlochVector reservoir, Engine e) {
    HomogenizerConfig c = pure_to_mixed(eta, n, N, e);
    c.task = Task::Custom;
    c.system_bloch = system;
    c.reservoir_bloch = reservoir;
    return c;
}

void HomogenizerConfig::validate() const {
    if (!(eta > 0.0) || eta > M_PI / 2 + 1e-15)
        throw std::invalid_argument("HomogenizerConfig: eta must lie in (0, pi/2]");
    if (N < 1 || n < 1) throw std::invalid_argument("HomogenizerConfig: N, n >= 1");
    system_bloch.validate();
    reservoir_bloch.validate();
    if (engine == Engine::Exact) {
        int qubits = n + N + (swap_kind == SwapKind::CSwap ? 1 : 0);
        if (qubits > 12)
            throw std::invalid_argument("HomogenizerConfig: exact engine limited to 12 qubits");
    }
}

std::pair<double, double> HomogenizerConfig::parallel_components() const {
    const BlochVector &s = system_bloch, &r = reservoir_bloch;
    double cx = s.y * r.z - s.z * r.y;
    double cy = s.z * r.x - s.x * r.z;
    double cz = s.x * r.y - s.y * r.x;
    if (std::sqrt(cx * cx + cy * cy + cz * cz) > 1e-12)
        throw std::invalid_argument(
            "recurrence_series: system and reservoir Bloch vectors must be parallel");
    // Shared axis from whichever vector is nonzero; both zero is fine (0,0).
    double sn = s.norm(), rn = r.norm();
    if (sn < 1e-15 && rn < 1e-15) return {0.0, 0.0};
    double ax, ay, az;
    if (sn >= rn) {
        ax = s.x / sn;
        ay = s.y / sn;
        az = s.z / sn;
    } else {
        ax = r.x / rn;
        ay = r.y / rn;
        az = r.z / rn;
    }
    return {s.x * ax + s.y * ay + s.z * az, r.x * ax + r.y * ay + r.z * az};
}

BlochSeries recurrence_series(const HomogenizerConfig& cfg) {
    cfg.validate();
    if (cfg.engine != Engine::Recurrence)
        throw std::invalid_argument("recurrence_series: config selects the exact engine");
    auto [b0, a0] = cfg.parallel_components();

    BlochSeries s;
    s.n = cfg.n;
    s.N = cfg.N;
    s.beta0 = b0;
    s.alpha0 = a0;
    const int W = cfg.N + 1;
    s.alpha_grid.assign(std::size_t(cfg.n + 1) * W, 0.0);
    s.beta_grid.assign(std::size_t(cfg.n + 1) * W, 0.0);

    auto A = [&](int I, int j) -> double& { return s.alpha_grid[std::size_t(I) * W + j]; };
    auto B = [&](int I, int j) -> double& { return s.beta_grid[std::size_t(I) * W + j]; };

    for (int j = 0; j <= cfg.N; ++j) A(0, j) = a0;
    for (int I = 0; I <= cfg.n; ++I) B(I, 0) = b0;

    const double c2 = std::cos(cfg.eta) * std::cos(cfg.eta);
    const double s2 = 1.0 - c2;
    for (int I = 1; I <= cfg.n; ++I)
        for (int j = 1; j <= cfg.N; ++j) {
            B(I, j) = c2 * B(I, j - 1) + s2 * A(I - 1, j);
            A(I, j) = s2 * B(I, j - 1) + c2 * A(I - 1, j);
        }
    return s;
}

double error_metric(double beta_nN, double alpha0) {
    return 1.0 - fidelity_bloch(beta_nN, alpha0);
}

double error_metric(const BlochSeries& s) { return error_metric(s.beta(s.n, s.N), s.alpha0); }

double log_robustness(const BlochSeries& s, int upto_N) {
    double acc = 0.0;
    for (int j = 1; j <= upto_N; ++j) acc += std::log(fidelity_bloch(s.alpha(s.n, j), s.alpha0));
    return acc;
}

double robustness_metric(const BlochSeries& s) { return std::exp(log_robustness(s, s.N)); }

double total_entropy(const BlochSeries& s) {
    double tot = 0.0;
    for (int j = 1; j <= s.N; ++j) tot += entropy_from_bloch(s.alpha(s.n, j));
    for (int I = 1; I <= s.n; ++I) tot += entropy_from_bloch(s.beta(I, s.N));
    return tot;
}

}  // namespace qhlab::collision
