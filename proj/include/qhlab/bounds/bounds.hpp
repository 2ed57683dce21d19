#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qhlab/collision/recurrence.hpp"

namespace qhlab::bounds {

/// A closed-form bound cannot be met; `condition` names the violated
/// precondition.
struct infeasible_error : std::runtime_error {
    std::string condition;
    explicit infeasible_error(std::string cond)
        : std::runtime_error("infeasible bound: " + cond), condition(std::move(cond)) {}
};

/// Smallest integer N >= ln(delta/d) / ln(1 - delta/d), the reservoir size
/// needed to homogenize within trace distance delta starting a Bloch
/// distance d away, with the coupling fixed by s^2 = delta/d.
long long min_reservoir_size(double delta, double d);

/// Largest integer n with c^{2n} >= 1 - delta/d: how many system qubits one
/// reservoir qubit can meet before drifting delta away. nullopt when eta = 0
/// would make the count unbounded.
std::optional<long long> max_reuses(double delta, double d, double eta);

struct ReuseBound {
    long long N_min;
    double d_prime;  // c^{2n} d, the worst-case initial distance after n-1 reuses
};

/// Worst-case reservoir size for homogenizing n system qubits all within
/// Delta. Throws infeasible_error when c^{2(n-1)} <= (d - Delta)/d.
ReuseBound reuse_reservoir_bound(double Delta, double d, long long n, double eta);

/// Upper bound on the CSWAP/PSWAP fidelity-gap ratio as a function of the
/// reservoir Bloch size alpha:
///   sqrt(1-a^2) (sqrt(3-a^2) - sqrt(3-a^2-a/2)) / (3 + sqrt(1-a^2) sqrt(3-a^2)).
double cswap_fidelity_gap(double alpha);

struct ScalarMax {
    double arg;
    double value;
};

/// Golden-section maximizer on [lo, hi]; assumes a unimodal objective.
ScalarMax golden_section_max(const std::function<double(double)>& f, double lo, double hi,
                             double bracket_tol);

ScalarMax cswap_fidelity_gap_max();

/// |F_inc - F_coh| / F_inc after one exact interaction: CSWAP versus PSWAP
/// system state, each held against the reservoir target.
double measured_cswap_pswap_gap(const BlochVector& system, const BlochVector& reservoir,
                                double eta);

struct ResourcePoint {
    int n;
    long long N;
    bool saturated;  // N hit the cap before meeting the error target
};

/// For each n in [n_min, n_max], the smallest reservoir size N (recurrence
/// engine) for which all n system qubits end with error <= target_error.
std::vector<ResourcePoint> resources_curve(double target_error, double eta,
                                           collision::Task task, int n_min, int n_max,
                                           long long N_cap);

}  // namespace qhlab::bounds
