#pragma once

#include <vector>

#include "qhlab/bounds/bounds.hpp"
#include "qhlab/qcore/ops.hpp"

namespace qhlab::paradox {

/// Two-qubit state a|00> + b|01> + c|10> (the thesis's v -> |0>, u -> |1>;
/// first ket slot = qubit 1). Supports a Hardy-type argument iff abc != 0.
struct HardyState {
    cxd a, b, c;

    HardyState(cxd a_, cxd b_, cxd c_) : a(a_), b(b_), c(c_) { validate(); }

    void validate() const {
        double n2 = std::norm(a) + std::norm(b) + std::norm(c);
        if (std::abs(n2 - 1.0) > 1e-12)
            throw std::invalid_argument("HardyState: |a|^2+|b|^2+|c|^2 != 1");
    }

    bool degenerate() const { return std::abs(a * b * c) < 1e-15; }
};

struct ParadoxMetrics {
    double p_hardy = 0.0;    // probability of the classically forbidden outcome
    double p_paradox = 0.0;  // |a b c|^2, product of the three post-selections
    double I1 = 0.0, I2 = 0.0, I12 = 0.0;  // incompatibilities, nats
    double s_tot = 0.0;                    // summed reduced-state entropies, bits
    bool degenerate = false;               // abc = 0: paradox quantities forced to 0
};

ParadoxMetrics hardy_metrics(const HardyState& h);

StateVector hardy_statevector(const HardyState& h);

/// Independent oracle for P_Hardy: explicit construction of w1, w2 from
/// (a, b, c) and direct projection |<w1perp w2perp|psi>|^2.
double hardy_projection_probability(const HardyState& h);

struct HardyScanRow {
    double a, s_tot, p_paradox, p_hardy, I1, I12;
};

/// Sweep of the b = c family over a in [0, 1], plus golden-section argmaxes.
struct HardyScan {
    std::vector<HardyScanRow> rows;
    bounds::ScalarMax max_p_paradox;  // arg = a
    bounds::ScalarMax max_p_hardy;
    bounds::ScalarMax max_I1;
};

HardyScan scan_hardy(int grid_points);  // >= 100

}  // namespace qhlab::paradox
