#pragma once

#include <string>
#include <vector>

#include "qhlab/collision/recurrence.hpp"

namespace qhlab::collision {

enum class LimitClass { TendsToZero, Diverges, Plateaus, Inconclusive };

std::string to_string(LimitClass c);

/// Error, robustness and relative deterioration over the full (n, N) grid,
/// n, N = 1..n_max/N_max, plus a limit classification along the n = N
/// diagonal: log R is fitted against log k over the upper half of the
/// diagonal; slope < -0.05 reads TendsToZero, slope > 0.05 Diverges,
/// |slope| <= 0.05 with a flat tail Plateaus, anything else Inconclusive.
struct DeteriorationSurface {
    int n_max = 0, N_max = 0;
    std::vector<double> eps, delta, R;  // n_max x N_max, row-major, index (n-1)*N_max + (N-1)
    LimitClass classification = LimitClass::Inconclusive;
    double diag_slope = 0.0;

    double at_eps(int n, int N) const { return eps[std::size_t(n - 1) * N_max + (N - 1)]; }
    double at_delta(int n, int N) const { return delta[std::size_t(n - 1) * N_max + (N - 1)]; }
    double at_R(int n, int N) const { return R[std::size_t(n - 1) * N_max + (N - 1)]; }
};

DeteriorationSurface deterioration_surface(const HomogenizerConfig& cfg);

/// Relative deterioration along the diagonal k = kmin..kmax (recurrence
/// engine), plus the classification of that diagonal.
struct DiagonalClassification {
    std::vector<double> R;  // R at k = kmin..kmax
    double slope = 0.0;
    LimitClass cls = LimitClass::Inconclusive;
};

DiagonalClassification classify_diagonal(const HomogenizerConfig& cfg, int kmin, int kmax);

}  // namespace qhlab::collision
