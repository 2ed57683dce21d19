#pragma once

#include <vector>

#include "qhlab/qcore/types.hpp"

namespace qhlab::kernels {

// Execution policy for the gate-application kernels. Serial is the reference
// implementation; Parallel uses OpenMP over the non-target index groups.
// Both paths perform identical arithmetic per amplitude, so results agree
// bitwise and the test suite holds them to that.
enum class Exec { Serial, Parallel };

Exec default_exec();
void set_default_exec(Exec e);

/// amps <- G amps, with the 2^k x 2^k matrix g acting on `targets`
/// (targets[0] is the most significant bit of the gate's own index space).
void apply_unitary_sv(Vec& amps, const Mat& g, const std::vector<int>& targets, int n, Exec ex);

/// rho <- G rho G^dagger.
void apply_unitary_dm(Mat& rho, const Mat& g, const std::vector<int>& targets, int n, Exec ex);

void check_targets(const std::vector<int>& targets, int arity, int n);

}  // namespace qhlab::kernels
