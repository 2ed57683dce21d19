#pragma once

#include <vector>

#include "qhlab/qcore/ops.hpp"
#include "qhlab/qcore/types.hpp"

namespace qhlab::collision {

enum class SwapKind { PSwap, CSwap };
enum class Task { PureToMixed, MixedToPure, Custom };
enum class Engine { Exact, Recurrence };

/// One homogenization scenario: N identical reservoir qubits, n system qubits
/// passed through them one after another, coupling eta.
struct HomogenizerConfig {
    SwapKind swap_kind = SwapKind::PSwap;
    double eta = 0.0;
    int N = 1;
    int n = 1;
    Task task = Task::PureToMixed;
    BlochVector system_bloch{0, 0, 1};     // beta^I_0 for every system qubit
    BlochVector reservoir_bloch{0, 0, 0};  // alpha^0_j for every reservoir qubit
    Engine engine = Engine::Recurrence;
    bool track_joint_entropy = false;  // exact engine: record S(joint) after each interaction

    static HomogenizerConfig pure_to_mixed(double eta, int n, int N,
                                           Engine e = Engine::Recurrence);
    static HomogenizerConfig mixed_to_pure(double eta, int n, int N,
                                           Engine e = Engine::Recurrence);
    static HomogenizerConfig custom(double eta, int n, int N, BlochVector system,
                                    BlochVector reservoir, Engine e = Engine::Recurrence);

    void validate() const;

    // Signed Bloch sizes along the shared axis; throws if the two vectors are
    // not parallel (the recurrence derivation needs a common axis).
    std::pair<double, double> parallel_components() const;  // {beta0, alpha0}
};

/// Bloch-size grids alpha^I_j, beta^I_j produced by the weak-coupling
/// recurrence. Row I = iteration count (0..n), column j = reservoir position
/// (0..N). alpha is defined for j >= 1, beta for I >= 1; the I = 0 row and
/// j = 0 column carry the initial conditions.
struct BlochSeries {
    int n = 0, N = 0;
    double beta0 = 0.0, alpha0 = 0.0;
    std::vector<double> alpha_grid, beta_grid;  // (n+1) x (N+1), row-major

    double alpha(int I, int j) const { return alpha_grid[std::size_t(I) * (N + 1) + j]; }
    double beta(int I, int j) const { return beta_grid[std::size_t(I) * (N + 1) + j]; }
};

/// Iterates beta^I_j = c^2 beta^I_{j-1} + s^2 alpha^{I-1}_j,
///          alpha^I_j = s^2 beta^I_{j-1} + c^2 alpha^{I-1}_j.
BlochSeries recurrence_series(const HomogenizerConfig& cfg);

/// eps^n_N = 1 - F(rho^n_N, xi^0).
double error_metric(const BlochSeries& s);
double error_metric(double beta_nN, double alpha0);

/// delta^n_N = prod_j F(xi^n_j, xi^0), in log space.
double robustness_metric(const BlochSeries& s);
double log_robustness(const BlochSeries& s, int upto_N);

/// S_tot = sum_j S(xi^n_j) + sum_I S(rho^I_N), in bits.
double total_entropy(const BlochSeries& s);

}  // namespace qhlab::collision
