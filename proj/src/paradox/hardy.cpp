#include "qhlab/paradox/hardy.hpp"

#include <cmath>

namespace qhlab::paradox {

namespace {

double incompatibility(double x2, double y2) {
    // I(V, W) = 2 ln((x2 + y2) / max(x2, y2)) for the relevant basis overlaps.
    return 2.0 * std::log((x2 + y2) / std::max(x2, y2));
}

HardyState state_on_diag(double a) {
    double b2 = (1.0 - a * a) / 2.0;
    double b = std::sqrt(std::max(b2, 0.0));
    return HardyState(a, b, b);
}

}  // namespace

ParadoxMetrics hardy_metrics(const HardyState& h) {
    double a2 = std::norm(h.a), b2 = std::norm(h.b), c2 = std::norm(h.c);
    ParadoxMetrics m;
    m.degenerate = h.degenerate();
    if (!m.degenerate) {
        m.p_hardy = b2 * c2 * (1.0 - b2 - c2) / ((1.0 - b2) * (1.0 - c2));
        m.p_paradox = a2 * b2 * c2;
        m.I1 = incompatibility(a2, b2);
        m.I2 = incompatibility(a2, c2);
        m.I12 = m.I1 * m.I2;
    }
    double disc = std::sqrt(std::max(0.25 - b2 * c2, 0.0));
    m.s_tot = 2.0 * entropy_from_bloch(2.0 * disc);  // eigenvalues 1/2 +- disc
    return m;
}

StateVector hardy_statevector(const HardyState& h) {
    Vec amps = Vec::Zero(4);
    amps[0] = h.a;  // |00>
    amps[1] = h.b;  // |01>
    amps[2] = h.c;  // |10>
    return StateVector(2, std::move(amps));
}

double hardy_projection_probability(const HardyState& h) {
    double n1 = std::sqrt(std::norm(h.a) + std::norm(h.b));
    double n2 = std::sqrt(std::norm(h.a) + std::norm(h.c));
    if (n1 < 1e-15 || n2 < 1e-15) return 0.0;
    // |w1perp> = (b* |0> - a* |1>)/n1 on qubit 1, |w2perp> = (c* |0> - a* |1>)/n2.
    Eigen::Vector2cd w1p(std::conj(h.b) / n1, -std::conj(h.a) / n1);
    Eigen::Vector2cd w2p(std::conj(h.c) / n2, -std::conj(h.a) / n2);
    Vec bra = Vec::Zero(4);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) bra[2 * i + j] = w1p[i] * w2p[j];
    StateVector psi = hardy_statevector(h);
    cxd amp = bra.dot(psi.amps);  // Eigen dot conjugates the left argument
    return std::norm(amp);
}

HardyScan scan_hardy(int grid_points) {
    if (grid_points < 100) throw std::invalid_argument("scan_hardy: need >= 100 grid points");
    HardyScan out;
    out.rows.reserve(grid_points + 1);
    for (int i = 0; i <= grid_points; ++i) {
        double a = double(i) / grid_points;
        ParadoxMetrics m = hardy_metrics(state_on_diag(a));
        out.rows.push_back({a, m.s_tot, m.p_paradox, m.p_hardy, m.I1, m.I12});
    }
    auto metric = [](double a, auto pick) {
        return pick(hardy_metrics(state_on_diag(a)));
    };
    // 1e-12 bracket: the I1 maximum sits at a kink, and the acceptance
    // tolerance on its value (1e-9) is linear in the bracket width there.
    out.max_p_paradox = bounds::golden_section_max(
        [&](double a) { return metric(a, [](const ParadoxMetrics& m) { return m.p_paradox; }); },
        0.0, 1.0, 1e-12);
    out.max_p_hardy = bounds::golden_section_max(
        [&](double a) { return metric(a, [](const ParadoxMetrics& m) { return m.p_hardy; }); },
        0.0, 1.0, 1e-12);
    out.max_I1 = bounds::golden_section_max(
        [&](double a) { return metric(a, [](const ParadoxMetrics& m) { return m.I1; }); }, 0.0,
        1.0, 1e-12);
    return out;
}

}  // namespace qhlab::paradox
