#include "qhlab/qcore/gates.hpp"

#include <cmath>

namespace qhlab {

const Mat& pauli_x() {
    static const Mat m = [] {
        Mat x(2, 2);
        x << 0, 1, 1, 0;
        return x;
    }();
    return m;
}

const Mat& pauli_y() {
    static const Mat m = [] {
        Mat y(2, 2);
        y << 0, cxd(0, -1), cxd(0, 1), 0;
        return y;
    }();
    return m;
}

const Mat& pauli_z() {
    static const Mat m = [] {
        Mat z(2, 2);
        z << 1, 0, 0, -1;
        return z;
    }();
    return m;
}

const Mat& id2() {
    static const Mat m = Mat::Identity(2, 2);
    return m;
}

namespace {

Mat swap4() {
    Mat s = Mat::Zero(4, 4);
    s(0, 0) = 1;
    s(1, 2) = 1;
    s(2, 1) = 1;
    s(3, 3) = 1;
    return s;
}

}  // namespace

Gate standard_gate(GateKind kind, const std::vector<double>& params) {
    auto need = [&](std::size_t k) {
        if (params.size() != k)
            throw std::invalid_argument("standard_gate: wrong parameter count");
    };
    switch (kind) {
        case GateKind::Identity:
            need(0);
            return Gate(1, Mat::Identity(2, 2), "I");
        case GateKind::X:
            need(0);
            return Gate(1, pauli_x(), "X");
        case GateKind::H: {
            need(0);
            Mat h(2, 2);
            h << 1, 1, 1, -1;
            return Gate(1, h / std::sqrt(2.0), "H");
        }
        case GateKind::CNOT: {
            need(0);
            Mat m = Mat::Zero(4, 4);
            m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1;
            return Gate(2, m, "CNOT");
        }
        case GateKind::SWAP:
            need(0);
            return Gate(2, swap4(), "SWAP");
        case GateKind::PSwap: {
            need(1);
            double eta = params[0];
            Mat m = std::cos(eta) * Mat::Identity(4, 4) + cxd(0, 1) * std::sin(eta) * swap4();
            return Gate(2, m, "PSWAP", params);
        }
        case GateKind::CSwap: {
            need(0);
            Mat m = Mat::Identity(8, 8);
            m.block(4, 4, 4, 4) = swap4();
            return Gate(3, m, "CSWAP");
        }
        case GateKind::Rx: {
            need(1);
            double phi = params[0];
            Mat m = std::cos(phi / 2) * Mat::Identity(2, 2) -
                    cxd(0, 1) * std::sin(phi / 2) * pauli_x();
            return Gate(1, m, "Rx", params);
        }
        case GateKind::UTheta: {
            need(1);
            double theta = params[0];
            if (std::abs(std::abs(theta) - 1.0) > 1e-12)
                throw std::invalid_argument("standard_gate: UTheta needs theta = +1 or -1");
            return Gate(1, theta > 0 ? Mat(Mat::Identity(2, 2)) : Mat(pauli_x()), "UTheta",
                        params);
        }
    }
    throw std::invalid_argument("standard_gate: unknown kind");
}

Gate custom_gate(const Mat& m, const std::string& label) {
    if (m.rows() != 2 || m.cols() != 2)
        throw std::invalid_argument("custom_gate: expected a 2x2 matrix");
    return Gate(1, m, label);  // Gate ctor rejects non-unitary input
}

void apply_gate(StateVector& s, const Gate& g, const std::vector<int>& targets,
                kernels::Exec ex) {
    kernels::check_targets(targets, g.arity, s.n);
    kernels::apply_unitary_sv(s.amps, g.mat, targets, s.n, ex);
}

void apply_gate(DensityMatrix& rho, const Gate& g, const std::vector<int>& targets,
                kernels::Exec ex) {
    kernels::check_targets(targets, g.arity, rho.n);
    kernels::apply_unitary_dm(rho.mat, g.mat, targets, rho.n, ex);
}

}  // namespace qhlab
