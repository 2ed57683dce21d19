#pragma once

#include <array>
#include <stdexcept>
#include <vector>

#include "qhlab/qcore/ops.hpp"

namespace qhlab::heisenberg {

/// Heisenberg-picture qubit network: per qubit a, the evolving observable
/// triple q_a = (q_ax, q_ay, q_az) as dense 2^n x 2^n matrices, against the
/// fixed Heisenberg state |0...0><0...0|. Gates conjugate descriptors;
/// descriptors of untouched qubits are left bit-identical (their change is
/// exactly zero by the cross-qubit commutation).
struct DescriptorNetwork {
    int n = 0;
    int t = 0;                 // time step = number of gates applied
    std::vector<Mat> q;        // 3n matrices, q[3a + i] with i = 0:x, 1:y, 2:z
    Mat u_total;               // cumulative circuit unitary (conjugation operator)

    const Mat& comp(int a, int i) const { return q[std::size_t(3 * a + i)]; }
};

DescriptorNetwork init_network(int n);  // 1 <= n <= 10

DescriptorNetwork evolve(const DescriptorNetwork& net, const Gate& g,
                         const std::vector<int>& targets);

/// <word> = tr(rho0 word) = word(0,0) for the all-|0> Heisenberg state.
/// Meaningful (real) for products of descriptor components on distinct
/// qubits; the real part is returned.
double expectation(const DescriptorNetwork& net, const Mat& word);

/// Product of components [(qubit, axis), ...], axis 0/1/2 = x/y/z.
Mat word(const DescriptorNetwork& net, const std::vector<std::pair<int, int>>& comps);

struct no_sharpest_observable : std::runtime_error {
    no_sharpest_observable()
        : std::runtime_error("sharpest_observable: maximally mixed qubit has none") {}
};

/// O = sum_i <q_ai> q_ai / gamma with gamma = |<q_a>|; Var(O) = 1 - gamma^2.
struct SharpestObservable {
    Mat op;                       // 2^n Boolean observable, op^2 = 1
    double gamma = 0.0;           // <O> in (0, 1]
    int qubit = 0;
    std::array<double, 3> axis{}; // <q_ai>/gamma, the qubit-local Bloch direction

    double variance() const { return 1.0 - gamma * gamma; }
};

SharpestObservable sharpest_observable(const DescriptorNetwork& net, int a);

/// rho = (1 + gamma O)/2 restricted to the qubit: diagonal in O's eigenbasis
/// with weights (1 +- gamma)/2.
DensityMatrix density_from_sharpest(const SharpestObservable& s);

/// Locally accessible information per qubit (1 - S(rho_a), bits), the
/// network total (n for a pure network), and their difference.
struct InfoReport {
    std::vector<double> acc_per_qubit;
    double acc_network = 0.0;
    double inacc = 0.0;
};

InfoReport info_report(const DescriptorNetwork& net);

/// Reduced single-qubit state reconstructed from the local expectations.
DensityMatrix reduced_qubit(const DescriptorNetwork& net, int a);

/// <word Pi>/<Pi> with Pi = (1 + sign * condition)/2. Throws on a
/// zero-probability condition (<Pi> <= 1e-12).
double relative_descriptor_expectation(const DescriptorNetwork& net, const Mat& observable_word,
                                       const Mat& condition_word, int sign);

}  // namespace qhlab::heisenberg
