#pragma once

#include <array>

#include "qhlab/qcore/ops.hpp"

namespace qhlab::collision {

/// Four-qubit linear-chain homogenizer: qubits A, B pure |0>, qubits C, D
/// maximally mixed. Partial swaps act only between the middle pair of the
/// chain; full SWAPs rotate the registers so every system-reservoir pair
/// meets, in the order B-C, B-D, A-C, A-D.
struct NmrResult {
    std::array<double, 4> f_sim;   // tr(rho sigma_z) per logical qubit A..D
    std::array<double, 4> f_form;  // closed forms: f_B = c^4, f_A quartic in c^2, complements
    std::array<double, 4> entropy; // per-qubit von Neumann entropy, bits
};

NmrResult nmr_circuit(double eta);

double nmr_fA_form(double eta);  // 4c^2 - 9c^4 + 8c^6 - 2c^8
double nmr_fB_form(double eta);  // cos^4(eta)

}  // namespace qhlab::collision
