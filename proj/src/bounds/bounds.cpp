#include "qhlab/bounds/bounds.hpp"

#include <cmath>
#include <functional>

#include "qhlab/collision/exact.hpp"

namespace qhlab::bounds {

namespace {

// Ceiling with exact-integer ties kept (58.4 -> 59, 1.0 -> 1).
long long ceil_bound(double x) { return static_cast<long long>(std::ceil(x - 1e-9)); }
long long floor_bound(double x) { return static_cast<long long>(std::floor(x + 1e-9)); }

}  // namespace

long long min_reservoir_size(double delta, double d) {
    if (!(delta > 0.0) || !(d > 0.0) || d > 2.0 + 1e-12)
        throw std::invalid_argument("min_reservoir_size: need delta > 0, 0 < d <= 2");
    if (!(delta < d)) throw std::invalid_argument("min_reservoir_size: need delta < d");
    double x = delta / d;
    long long N = ceil_bound(std::log(x) / std::log1p(-x));
    return std::max<long long>(N, 1);
}

std::optional<long long> max_reuses(double delta, double d, double eta) {
    if (!(delta > 0.0) || !(delta < d))
        throw std::invalid_argument("max_reuses: need 0 < delta < d");
    if (eta < 0.0 || eta >= M_PI / 2)
        throw std::invalid_argument("max_reuses: need 0 <= eta < pi/2");
    if (eta == 0.0) return std::nullopt;  // identity coupling never deteriorates
    double logc = std::log(std::cos(eta));
    return floor_bound(std::log1p(-delta / d) / (2.0 * logc));
}

ReuseBound reuse_reservoir_bound(double Delta, double d, long long n, double eta) {
    if (!(Delta > 0.0) || !(Delta < d))
        throw std::invalid_argument("reuse_reservoir_bound: need 0 < Delta < d");
    if (n < 1) throw std::invalid_argument("reuse_reservoir_bound: need n >= 1");
    if (!(eta > 0.0) || eta >= M_PI / 2)
        throw std::invalid_argument("reuse_reservoir_bound: need 0 < eta < pi/2");
    double c = std::cos(eta);
    double c2n1 = std::pow(c, 2.0 * double(n - 1));
    double x = (d - Delta) / (d * c2n1);
    if (!(x < 1.0)) throw infeasible_error("c^{2(n-1)} > (d - Delta)/d");
    ReuseBound out;
    out.d_prime = std::pow(c, 2.0 * double(n)) * d;
    out.N_min = std::max<long long>(ceil_bound(std::log1p(-x) / std::log(x)), 1);
    return out;
}

double cswap_fidelity_gap(double alpha) {
    if (alpha < 0.0 || alpha > 1.0)
        throw std::invalid_argument("cswap_fidelity_gap: alpha outside [0,1]");
    double a2 = alpha * alpha;
    double root = std::sqrt(1.0 - a2);
    double num = root * (std::sqrt(3.0 - a2) - std::sqrt(3.0 - a2 - alpha / 2.0));
    double den = 3.0 + root * std::sqrt(3.0 - a2);
    return num / den;
}

ScalarMax golden_section_max(const std::function<double(double)>& f, double lo, double hi,
                             double bracket_tol) {
    const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double c = b - phi * (b - a);
    double d = a + phi * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > bracket_tol) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + phi * (b - a);
            fd = f(d);
        }
    }
    double mid = 0.5 * (a + b);
    return {mid, f(mid)};
}

ScalarMax cswap_fidelity_gap_max() {
    return golden_section_max([](double a) { return cswap_fidelity_gap(a); }, 0.0, 1.0, 1e-8);
}

double measured_cswap_pswap_gap(const BlochVector& system, const BlochVector& reservoir,
                                double eta) {
    using namespace collision;
    DensityMatrix target = density_from_bloch(reservoir);
    auto one_pass = [&](SwapKind kind) {
        HomogenizerConfig cfg = HomogenizerConfig::custom(eta, 1, 1, system, reservoir,
                                                          Engine::Exact);
        cfg.swap_kind = kind;
        return fidelity_qubit(exact_homogenize(cfg).system_after_pass[0], target);
    };
    double f_inc = one_pass(SwapKind::CSwap);
    double f_coh = one_pass(SwapKind::PSwap);
    return std::abs(f_inc - f_coh) / f_inc;
}

std::vector<ResourcePoint> resources_curve(double target_error, double eta,
                                           collision::Task task, int n_min, int n_max,
                                           long long N_cap) {
    using namespace collision;
    if (!(target_error > 0.0) || target_error >= 0.5)
        throw std::invalid_argument("resources_curve: target error must lie in (0, 0.5)");
    if (n_min < 1 || n_max < n_min) throw std::invalid_argument("resources_curve: bad n range");
    if (task == Task::Custom)
        throw std::invalid_argument("resources_curve: named tasks only");

    auto worst_error = [&](int n, long long N) {
        HomogenizerConfig cfg = task == Task::PureToMixed
                                    ? HomogenizerConfig::pure_to_mixed(eta, n, int(N))
                                    : HomogenizerConfig::mixed_to_pure(eta, n, int(N));
        BlochSeries s = recurrence_series(cfg);
        double worst = 0.0;
        for (int I = 1; I <= n; ++I)
            worst = std::max(worst, error_metric(s.beta(I, int(N)), s.alpha0));
        return worst;
    };

    std::vector<ResourcePoint> out;
    for (int n = n_min; n <= n_max; ++n) {
        if (worst_error(n, N_cap) > target_error) {
            out.push_back({n, N_cap, true});
            continue;
        }
        long long lo = 1, hi = N_cap;
        while (lo < hi) {
            long long mid = lo + (hi - lo) / 2;
            if (worst_error(n, mid) <= target_error)
                hi = mid;
            else
                lo = mid + 1;
        }
        out.push_back({n, lo, false});
    }
    return out;
}

}  // namespace qhlab::bounds
