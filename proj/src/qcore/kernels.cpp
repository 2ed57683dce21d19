#include "qhlab/qcore/kernels.hpp"

#include <algorithm>
#include <atomic>

namespace qhlab::kernels {

namespace {
std::atomic<Exec> g_exec{Exec::Parallel};
}

Exec default_exec() { return g_exec.load(); }
void set_default_exec(Exec e) { g_exec.store(e); }

void check_targets(const std::vector<int>& targets, int arity, int n) {
    if (static_cast<int>(targets.size()) != arity)
        throw std::invalid_argument("apply_gate: target count != gate arity");
    for (std::size_t i = 0; i < targets.size(); ++i) {
        if (targets[i] < 0 || targets[i] >= n)
            throw std::out_of_range("apply_gate: qubit index out of range");
        for (std::size_t j = i + 1; j < targets.size(); ++j)
            if (targets[i] == targets[j])
                throw std::invalid_argument("apply_gate: duplicate target");
    }
}

namespace {

// Insert zero bits at the (ascending) positions in `shifts`, spreading the
// (n-k)-bit rest index over the full n-bit index space.
inline std::size_t expand_rest(std::size_t r, const std::vector<int>& shifts_asc) {
    for (int s : shifts_asc) {
        std::size_t low = r & ((std::size_t(1) << s) - 1);
        r = ((r >> s) << (s + 1)) | low;
    }
    return r;
}

struct GatePlan {
    int k = 0;
    std::size_t groups = 0;
    std::vector<int> tshift;       // bit position of each gate qubit in the state index
    std::vector<int> shifts_asc;   // same, sorted ascending for expand_rest
};

GatePlan make_plan(const std::vector<int>& targets, int n) {
    GatePlan p;
    p.k = static_cast<int>(targets.size());
    p.groups = std::size_t(1) << (n - p.k);
    p.tshift.resize(p.k);
    for (int i = 0; i < p.k; ++i) p.tshift[i] = n - 1 - targets[i];
    p.shifts_asc = p.tshift;
    std::sort(p.shifts_asc.begin(), p.shifts_asc.end());
    return p;
}

// One gathered gate application on a strided view: base points at element 0,
// stride is the distance (in elements) between consecutive state indices.
inline void apply_group(cxd* data, std::size_t base, std::size_t stride, const Mat& g,
                        const GatePlan& p) {
    const int sub = 1 << p.k;
    cxd in[8];   // k <= 3 for every gate in this project
    std::size_t idx[8];
    for (int j = 0; j < sub; ++j) {
        std::size_t full = base;
        for (int i = 0; i < p.k; ++i)
            if ((j >> (p.k - 1 - i)) & 1) full |= std::size_t(1) << p.tshift[i];
        idx[j] = full;
        in[j] = data[full * stride];
    }
    for (int r = 0; r < sub; ++r) {
        cxd acc = 0.0;
        for (int c = 0; c < sub; ++c) acc += g(r, c) * in[c];
        data[idx[r] * stride] = acc;
    }
}

void apply_sv_impl(cxd* data, std::size_t stride, const Mat& g, const GatePlan& p, Exec ex) {
    const std::ptrdiff_t groups = static_cast<std::ptrdiff_t>(p.groups);
    if (ex == Exec::Parallel) {
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t r = 0; r < groups; ++r)
            apply_group(data, expand_rest(std::size_t(r), p.shifts_asc), stride, g, p);
    } else {
        for (std::ptrdiff_t r = 0; r < groups; ++r)
            apply_group(data, expand_rest(std::size_t(r), p.shifts_asc), stride, g, p);
    }
}

}  // namespace

void apply_unitary_sv(Vec& amps, const Mat& g, const std::vector<int>& targets, int n, Exec ex) {
    if (static_cast<std::size_t>(g.rows()) != (std::size_t(1) << targets.size()))
        throw std::invalid_argument("apply_unitary_sv: gate size mismatch");
    if (targets.size() > 3) throw std::invalid_argument("apply_unitary_sv: arity > 3 unsupported");
    GatePlan p = make_plan(targets, n);
    apply_sv_impl(amps.data(), 1, g, p, ex);
}

void apply_unitary_dm(Mat& rho, const Mat& g, const std::vector<int>& targets, int n, Exec ex) {
    if (static_cast<std::size_t>(g.rows()) != (std::size_t(1) << targets.size()))
        throw std::invalid_argument("apply_unitary_dm: gate size mismatch");
    if (targets.size() > 3) throw std::invalid_argument("apply_unitary_dm: arity > 3 unsupported");
    GatePlan p = make_plan(targets, n);
    const std::ptrdiff_t d = rho.rows();
    cxd* data = rho.data();  // column-major

    // rho <- U rho: act on the row index of every column.
    if (ex == Exec::Parallel) {
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t c = 0; c < d; ++c)
            apply_sv_impl(data + c * d, 1, g, p, Exec::Serial);
    } else {
        for (std::ptrdiff_t c = 0; c < d; ++c) apply_sv_impl(data + c * d, 1, g, p, Exec::Serial);
    }

    // rho <- rho U^dagger: act on the column index of every row with conj(g).
    Mat gc = g.conjugate();
    if (ex == Exec::Parallel) {
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t r = 0; r < d; ++r)
            apply_sv_impl(data + r, static_cast<std::size_t>(d), gc, p, Exec::Serial);
    } else {
        for (std::ptrdiff_t r = 0; r < d; ++r)
            apply_sv_impl(data + r, static_cast<std::size_t>(d), gc, p, Exec::Serial);
    }
}

}  // namespace qhlab::kernels
