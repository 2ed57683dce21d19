#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace qhlab {

using cxd = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

// Tolerances: algebraic identities vs accumulated-circuit checks.
inline constexpr double kAlgTol = 1e-10;
inline constexpr double kCircuitTol = 1e-9;

inline std::size_t dim_of(int n_qubits) { return std::size_t(1) << n_qubits; }

/// Dense n-qubit pure state. Qubit 0 is the most significant bit of the
/// basis-state index, so |q0 q1 ... q_{n-1}> reads left to right.
struct StateVector {
    int n = 0;
    Vec amps;

    StateVector() = default;

    explicit StateVector(int n_qubits) : n(n_qubits), amps(Vec::Zero(dim_of(n_qubits))) {
        if (n_qubits < 1) throw std::invalid_argument("StateVector: need n >= 1");
        amps[0] = 1.0;
    }

    StateVector(int n_qubits, Vec a) : n(n_qubits), amps(std::move(a)) { validate(); }

    static StateVector basis(int n_qubits, std::size_t index) {
        StateVector s(n_qubits);
        s.amps[0] = 0.0;
        s.amps[static_cast<Eigen::Index>(index)] = 1.0;
        return s;
    }

    std::size_t dim() const { return static_cast<std::size_t>(amps.size()); }

    void validate() const {
        if (n < 1 || dim() != dim_of(n))
            throw std::invalid_argument("StateVector: length must be 2^n, n >= 1");
        if (std::abs(amps.norm() - 1.0) > kAlgTol)
            throw std::invalid_argument("StateVector: not normalized");
    }
};

/// Dense n-qubit density operator, same qubit-index convention as StateVector.
struct DensityMatrix {
    int n = 0;
    Mat mat;

    DensityMatrix() = default;

    DensityMatrix(int n_qubits, Mat m) : n(n_qubits), mat(std::move(m)) {
        if (n < 1 || mat.rows() != mat.cols() || static_cast<std::size_t>(mat.rows()) != dim_of(n))
            throw std::invalid_argument("DensityMatrix: shape must be 2^n x 2^n, n >= 1");
    }

    static DensityMatrix maximally_mixed(int n_qubits) {
        std::size_t d = dim_of(n_qubits);
        return DensityMatrix(n_qubits, Mat::Identity(d, d) / double(d));
    }

    std::size_t dim() const { return static_cast<std::size_t>(mat.rows()); }

    // Full invariant check (Hermitian, unit trace, psd). Eigenvalue scan is
    // O(d^3), so this is a separate call rather than part of every operation.
    void validate() const {
        if ((mat - mat.adjoint()).cwiseAbs().maxCoeff() > kAlgTol)
            throw std::invalid_argument("DensityMatrix: not Hermitian");
        if (std::abs(mat.trace().real() - 1.0) > kAlgTol || std::abs(mat.trace().imag()) > kAlgTol)
            throw std::invalid_argument("DensityMatrix: trace != 1");
        Eigen::SelfAdjointEigenSolver<Mat> es(mat, Eigen::EigenvaluesOnly);
        if (es.eigenvalues().minCoeff() < -kAlgTol)
            throw std::invalid_argument("DensityMatrix: negative eigenvalue");
    }
};

struct BlochVector {
    double x = 0, y = 0, z = 0;

    double norm() const { return std::sqrt(x * x + y * y + z * z); }

    void validate() const {
        if (norm() > 1.0 + kAlgTol) throw std::invalid_argument("BlochVector: |b| > 1");
    }
};

/// Unitary gate on `arity` qubits, with a label and the real parameters it
/// was built from (if any).
struct Gate {
    int arity = 0;
    Mat mat;
    std::string label;
    std::vector<double> params;

    Gate() = default;

    Gate(int a, Mat m, std::string lbl, std::vector<double> p = {})
        : arity(a), mat(std::move(m)), label(std::move(lbl)), params(std::move(p)) {
        if (arity < 1 || mat.rows() != mat.cols() ||
            static_cast<std::size_t>(mat.rows()) != dim_of(arity))
            throw std::invalid_argument("Gate: shape must be 2^arity x 2^arity");
        validate();
    }

    void validate() const {
        Mat shouldBeId = mat * mat.adjoint();
        if ((shouldBeId - Mat::Identity(mat.rows(), mat.cols())).cwiseAbs().maxCoeff() > kAlgTol)
            throw std::invalid_argument("Gate '" + label + "': not unitary");
    }
};

}  // namespace qhlab
