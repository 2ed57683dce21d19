#include "qhlab/qcore/ops.hpp"

#include <algorithm>
#include <cmath>

namespace qhlab {

DensityMatrix to_density(const StateVector& s) {
    return DensityMatrix(s.n, s.amps * s.amps.adjoint());
}

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep) {
    if (keep.empty()) throw std::invalid_argument("partial_trace: empty keep set");
    kernels::check_targets(keep, static_cast<int>(keep.size()), rho.n);

    const int n = rho.n;
    const int k = static_cast<int>(keep.size());
    std::vector<int> traced;
    for (int q = 0; q < n; ++q)
        if (std::find(keep.begin(), keep.end(), q) == keep.end()) traced.push_back(q);

    const std::size_t dk = dim_of(k);
    const std::size_t dt = std::size_t(1) << traced.size();
    Mat out = Mat::Zero(dk, dk);

    auto full_index = [&](std::size_t kept_bits, std::size_t traced_bits) {
        std::size_t idx = 0;
        for (int i = 0; i < k; ++i)
            if ((kept_bits >> (k - 1 - i)) & 1) idx |= std::size_t(1) << (n - 1 - keep[i]);
        for (std::size_t i = 0; i < traced.size(); ++i)
            if ((traced_bits >> (traced.size() - 1 - i)) & 1)
                idx |= std::size_t(1) << (n - 1 - traced[i]);
        return idx;
    };

    for (std::size_t r = 0; r < dk; ++r)
        for (std::size_t c = 0; c < dk; ++c) {
            cxd acc = 0.0;
            for (std::size_t t = 0; t < dt; ++t)
                acc += rho.mat(full_index(r, t), full_index(c, t));
            out(r, c) = acc;
        }
    return DensityMatrix(k, std::move(out));
}

double fidelity_qubit(const DensityMatrix& p, const DensityMatrix& q) {
    if (p.n != 1 || q.n != 1) throw std::invalid_argument("fidelity_qubit: need 1-qubit states");
    double dp = p.mat.determinant().real();
    double dq = q.mat.determinant().real();
    if (dp < -kAlgTol || dq < -kAlgTol)
        throw std::invalid_argument("fidelity_qubit: negative determinant (invalid density)");
    dp = std::max(dp, 0.0);
    dq = std::max(dq, 0.0);
    double f = (p.mat * q.mat).trace().real() + 2.0 * std::sqrt(dp) * std::sqrt(dq);
    return std::clamp(f, 0.0, 1.0);
}

double fidelity_bloch(double beta, double alpha) {
    double ra = std::max(1.0 - alpha * alpha, 0.0);
    double rb = std::max(1.0 - beta * beta, 0.0);
    return 0.5 * (1.0 + alpha * beta + std::sqrt(ra * rb));
}

double trace_distance_qubit(const DensityMatrix& p, const DensityMatrix& q) {
    BlochVector a = bloch_from_density(p);
    BlochVector b = bloch_from_density(q);
    double dx = a.x - b.x, dy = a.y - b.y, dz = a.z - b.z;
    return std::sqrt(dx * dx + dy * dy + dz * dz);
}

double von_neumann_entropy(const DensityMatrix& rho) {
    Eigen::SelfAdjointEigenSolver<Mat> es(rho.mat, Eigen::EigenvaluesOnly);
    double s = 0.0;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
        double lam = es.eigenvalues()[i];
        if (lam < -kAlgTol)
            throw std::invalid_argument("von_neumann_entropy: negative eigenvalue");
        if (lam <= 0.0) continue;  // 0 log 0 := 0, small negatives clamped
        s -= lam * std::log2(lam);
    }
    return std::max(s, 0.0);
}

double entropy_from_bloch(double b) {
    double p = 0.5 * (1.0 + std::min(std::abs(b), 1.0));
    double s = 0.0;
    if (p > 0.0 && p < 1.0) s = -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
    return s;
}

BlochVector bloch_from_density(const DensityMatrix& rho) {
    if (rho.n != 1) throw std::invalid_argument("bloch_from_density: need 1 qubit");
    BlochVector b;
    b.x = (rho.mat * pauli_x()).trace().real();
    b.y = (rho.mat * pauli_y()).trace().real();
    b.z = (rho.mat * pauli_z()).trace().real();
    return b;
}

DensityMatrix density_from_bloch(const BlochVector& b) {
    b.validate();
    Mat m = 0.5 * (id2() + b.x * pauli_x() + b.y * pauli_y() + b.z * pauli_z());
    return DensityMatrix(1, std::move(m));
}

Gate coherence_preprocess_unitary(double p, double phase) {
    if (p < 0.0 || p > 1.0)
        throw std::invalid_argument("coherence_preprocess_unitary: p outside [0,1]");
    double sp = std::sqrt(p), sq = std::sqrt(1.0 - p);
    Mat u(2, 2);
    u << sp, -sq, sq, sp;
    Mat zphase(2, 2);
    zphase << 1, 0, 0, std::polar(1.0, phase);
    return Gate(1, Mat(u * zphase), "CoherencePreprocess", {p, phase});
}

}  // namespace qhlab
