#include "qhlab/collision/exact.hpp"

#include <cmath>

namespace qhlab::collision {

namespace {

Mat kron(const Mat& a, const Mat& b) {
    Mat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

Mat control_state(double eta) {
    Eigen::Vector2cd c(std::cos(eta), std::sin(eta));
    return c * c.adjoint();
}

}  // namespace

double bloch_component(const DensityMatrix& q, const HomogenizerConfig& cfg) {
    BlochVector b = bloch_from_density(q);
    const BlochVector &s = cfg.system_bloch, &r = cfg.reservoir_bloch;
    double sn = s.norm(), rn = r.norm();
    double ax = 0, ay = 0, az = 1;
    if (sn >= rn && sn > 1e-15) {
        ax = s.x / sn;
        ay = s.y / sn;
        az = s.z / sn;
    } else if (rn > 1e-15) {
        ax = r.x / rn;
        ay = r.y / rn;
        az = r.z / rn;
    }
    return b.x * ax + b.y * ay + b.z * az;
}

ExactRun exact_homogenize(const HomogenizerConfig& cfg) {
    cfg.validate();
    if (cfg.engine != Engine::Exact)
        throw std::invalid_argument("exact_homogenize: config selects the recurrence engine");

    const int n = cfg.n, N = cfg.N;
    const int reg = n + N;  // system + reservoir qubits; CSWAP control is appended on demand

    Mat sys1 = density_from_bloch(cfg.system_bloch).mat;
    Mat res1 = density_from_bloch(cfg.reservoir_bloch).mat;

    Mat rho = sys1;
    for (int i = 1; i < n; ++i) rho = kron(rho, sys1);
    for (int j = 0; j < N; ++j) rho = kron(rho, res1);

    const Gate pswap = standard_gate(GateKind::PSwap, {cfg.eta});
    const Gate cswap = standard_gate(GateKind::CSwap);
    const Mat ctrl = control_state(cfg.eta);

    ExactRun run;
    auto record_entropy = [&](const Mat& m) {
        if (cfg.track_joint_entropy)
            run.joint_entropy_curve.push_back(von_neumann_entropy(DensityMatrix(reg, m)));
    };
    record_entropy(rho);

    for (int I = 0; I < n; ++I) {
        for (int j = 0; j < N; ++j) {
            if (cfg.swap_kind == SwapKind::PSwap) {
                DensityMatrix d(reg, std::move(rho));
                apply_gate(d, pswap, {I, n + j});
                rho = std::move(d.mat);
            } else {
                // Fresh control, CSWAP(control, system, reservoir), trace control.
                DensityMatrix d(reg + 1, kron(rho, ctrl));
                apply_gate(d, cswap, {reg, I, n + j});
                std::vector<int> keep(reg);
                for (int q = 0; q < reg; ++q) keep[q] = q;
                rho = partial_trace(d, keep).mat;
            }
            record_entropy(rho);
        }
        run.system_after_pass.push_back(partial_trace(DensityMatrix(reg, rho), {I}));
    }
    for (int j = 0; j < N; ++j)
        run.reservoir_final.push_back(partial_trace(DensityMatrix(reg, rho), {n + j}));
    run.joint = DensityMatrix(reg, std::move(rho));
    return run;
}

double total_entropy(const ExactRun& run) {
    double tot = 0.0;
    for (const auto& xi : run.reservoir_final) tot += von_neumann_entropy(xi);
    for (const auto& rhoI : run.system_after_pass) tot += von_neumann_entropy(rhoI);
    return tot;
}

}  // namespace qhlab::collision
