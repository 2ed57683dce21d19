#pragma once

#include <vector>

#include "qhlab/qcore/kernels.hpp"
#include "qhlab/qcore/types.hpp"

namespace qhlab {

enum class GateKind { Identity, X, H, CNOT, SWAP, PSwap, CSwap, Rx, UTheta };

/// Exact unitaries for the gate set used throughout.
///   PSwap(eta)  = cos(eta) 1 + i sin(eta) SWAP
///   CSwap       = |0><0| x 1 + |1><1| x SWAP   (control first)
///   Rx(phi)     = cos(phi/2) 1 - i sin(phi/2) X
///   UTheta(t)   = identity for t = +1, X for t = -1
Gate standard_gate(GateKind kind, const std::vector<double>& params = {});

/// Arbitrary single-qubit gate; throws if the matrix is not unitary.
Gate custom_gate(const Mat& m, const std::string& label = "custom");

void apply_gate(StateVector& s, const Gate& g, const std::vector<int>& targets,
                kernels::Exec ex = kernels::default_exec());
void apply_gate(DensityMatrix& rho, const Gate& g, const std::vector<int>& targets,
                kernels::Exec ex = kernels::default_exec());

// Pauli matrices and friends, used all over the physics modules.
const Mat& pauli_x();
const Mat& pauli_y();
const Mat& pauli_z();
const Mat& id2();

}  // namespace qhlab
