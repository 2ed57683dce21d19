#pragma once

#include <vector>

#include "qhlab/qcore/gates.hpp"
#include "qhlab/qcore/types.hpp"

namespace qhlab {

DensityMatrix to_density(const StateVector& s);

/// Reduced state on the (distinct, in-range, non-empty) qubits in `keep`,
/// which keep their relative order.
DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep);

/// Jozsa fidelity for qubits: F = tr(rho xi) + 2 sqrt(det rho det xi).
/// Squared-overlap convention; equals |<psi|phi>|^2 on pure states.
double fidelity_qubit(const DensityMatrix& p, const DensityMatrix& q);

/// Same fidelity for two qubit states with parallel Bloch vectors of signed
/// sizes beta, alpha along a shared axis: (1 + ab + sqrt((1-a^2)(1-b^2)))/2.
double fidelity_bloch(double beta, double alpha);

/// Euclidean distance between the Bloch vectors, in [0, 2].
double trace_distance_qubit(const DensityMatrix& p, const DensityMatrix& q);

/// Von Neumann entropy in bits. Eigenvalues in [-1e-10, 0) are clamped to 0.
double von_neumann_entropy(const DensityMatrix& rho);

/// Entropy in bits of a qubit with Bloch size |b| <= 1.
double entropy_from_bloch(double b);

BlochVector bloch_from_density(const DensityMatrix& rho);
DensityMatrix density_from_bloch(const BlochVector& b);

/// Rotation taking sqrt(1-p)|0> + sqrt(p) e^{-i phase}|1> to |1>. The real
/// rotation [[sqrt p, -sqrt(1-p)], [sqrt(1-p), sqrt p]] composed with a
/// z-phase that absorbs `phase` first.
Gate coherence_preprocess_unitary(double p, double phase);

}  // namespace qhlab
