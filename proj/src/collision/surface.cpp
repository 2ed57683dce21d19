#include "qhlab/collision/surface.hpp"

#include <cmath>

namespace qhlab::collision {

std::string to_string(LimitClass c) {
    switch (c) {
        case LimitClass::TendsToZero: return "TendsToZero";
        case LimitClass::Diverges: return "Diverges";
        case LimitClass::Plateaus: return "Plateaus";
        case LimitClass::Inconclusive: return "Inconclusive";
    }
    return "?";
}

namespace {

struct FitResult {
    double slope;
    double tail_variation;
};

// Least-squares slope of log R against log k over the upper half of the
// diagonal samples, plus the spread of log R over that stretch.
FitResult fit_upper_half(const std::vector<int>& ks, const std::vector<double>& Rdiag) {
    std::size_t lo = ks.size() / 2;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    std::size_t m = ks.size() - lo;
    double ymin = std::log(Rdiag[lo]), ymax = ymin;
    for (std::size_t i = lo; i < ks.size(); ++i) {
        double x = std::log(double(ks[i]));
        double y = std::log(Rdiag[i]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ymin = std::min(ymin, y);
        ymax = std::max(ymax, y);
    }
    double denom = double(m) * sxx - sx * sx;
    double slope = denom != 0.0 ? (double(m) * sxy - sx * sy) / denom : 0.0;
    return {slope, ymax - ymin};
}

LimitClass classify(const FitResult& f) {
    if (f.slope < -0.05) return LimitClass::TendsToZero;
    if (f.slope > 0.05) return LimitClass::Diverges;
    if (f.tail_variation < 0.1) return LimitClass::Plateaus;
    return LimitClass::Inconclusive;
}

}  // namespace

DeteriorationSurface deterioration_surface(const HomogenizerConfig& cfg) {
    BlochSeries s = recurrence_series(cfg);  // one full-grid run feeds every cell
    DeteriorationSurface out;
    out.n_max = cfg.n;
    out.N_max = cfg.N;
    out.eps.resize(std::size_t(cfg.n) * cfg.N);
    out.delta.resize(out.eps.size());
    out.R.resize(out.eps.size());

    for (int n = 1; n <= cfg.n; ++n) {
        double logd = 0.0;
        for (int N = 1; N <= cfg.N; ++N) {
            logd += std::log(fidelity_bloch(s.alpha(n, N), s.alpha0));
            double e = error_metric(s.beta(n, N), s.alpha0);
            std::size_t i = std::size_t(n - 1) * cfg.N + (N - 1);
            out.eps[i] = e;
            out.delta[i] = std::exp(logd);
            out.R[i] = e * std::exp(-logd);
        }
    }

    std::vector<int> ks;
    std::vector<double> Rdiag;
    for (int k = 1; k <= std::min(cfg.n, cfg.N); ++k) {
        ks.push_back(k);
        Rdiag.push_back(out.at_R(k, k));
    }
    FitResult f = fit_upper_half(ks, Rdiag);
    out.diag_slope = f.slope;
    out.classification = classify(f);
    return out;
}

DiagonalClassification classify_diagonal(const HomogenizerConfig& cfg, int kmin, int kmax) {
    if (kmin < 1 || kmax < kmin + 1)
        throw std::invalid_argument("classify_diagonal: need kmin >= 1, kmax > kmin");
    HomogenizerConfig big = cfg;
    big.n = big.N = kmax;
    BlochSeries s = recurrence_series(big);

    DiagonalClassification out;
    std::vector<int> ks;
    // log-robustness prefix over j for each n is recomputed per k; the grid
    // itself is shared, so the whole sweep stays O(kmax^2).
    for (int k = kmin; k <= kmax; ++k) {
        double e = error_metric(s.beta(k, k), s.alpha0);
        double logd = 0.0;
        for (int j = 1; j <= k; ++j) logd += std::log(fidelity_bloch(s.alpha(k, j), s.alpha0));
        out.R.push_back(e * std::exp(-logd));
        ks.push_back(k);
    }
    FitResult f = fit_upper_half(ks, out.R);
    out.slope = f.slope;
    out.cls = classify(f);
    return out;
}

}  // namespace qhlab::collision
