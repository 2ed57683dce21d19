#pragma once

#include <vector>

#include "qhlab/collision/recurrence.hpp"

namespace qhlab::collision {

/// Full unitary run of the homogenizer. System qubits pass through the whole
/// reservoir one after another; nothing is approximated. For the CSWAP
/// variant a fresh control qubit cos(eta)|0> + sin(eta)|1> mediates each
/// interaction and is traced out immediately afterwards, reusing one ancilla
/// slot.
struct ExactRun {
    std::vector<DensityMatrix> system_after_pass;  // I = 1..n, one qubit each
    std::vector<DensityMatrix> reservoir_final;    // j = 1..N, one qubit each
    DensityMatrix joint;                           // system+reservoir register at the end
    std::vector<double> joint_entropy_curve;       // filled when cfg.track_joint_entropy
};

ExactRun exact_homogenize(const HomogenizerConfig& cfg);

/// Sum of the marginals' entropies, bits (same bookkeeping as the series
/// overload of total_entropy).
double total_entropy(const ExactRun& run);

/// Signed Bloch component of a 1-qubit state along the task axis of `cfg`
/// (z when both initial vectors vanish).
double bloch_component(const DensityMatrix& q, const HomogenizerConfig& cfg);

}  // namespace qhlab::collision
