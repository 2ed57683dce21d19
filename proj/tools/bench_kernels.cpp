// Timing comparison of the serial reference kernels against the OpenMP
// paths: random gate chains on large statevectors and density matrices.

#include <chrono>
#include <cstdio>
#include <random>

#include <omp.h>

#include "qhlab/qcore/gates.hpp"

using namespace qhlab;
namespace chrono = std::chrono;

namespace {

double ms_since(chrono::steady_clock::time_point t0) {
    return chrono::duration<double, std::milli>(chrono::steady_clock::now() - t0).count();
}

std::vector<std::pair<Gate, std::vector<int>>> random_circuit(int n, int gates,
                                                              std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::uniform_real_distribution<double> ang(0.0, M_PI);
    std::vector<std::pair<Gate, std::vector<int>>> ops;
    for (int i = 0; i < gates; ++i) {
        if (i % 3 == 2) {
            int a = pick(rng), b;
            do { b = pick(rng); } while (b == a);
            ops.push_back({standard_gate(GateKind::PSwap, {ang(rng)}), {a, b}});
        } else {
            ops.push_back({standard_gate(i % 3 ? GateKind::H : GateKind::Rx,
                                         i % 3 ? std::vector<double>{} : std::vector<double>{ang(rng)}),
                           {pick(rng)}});
        }
    }
    return ops;
}

double bench_sv(int n, int gates, kernels::Exec ex) {
    auto ops = random_circuit(n, gates, 99);
    StateVector s(n);
    auto t0 = chrono::steady_clock::now();
    for (auto& [g, t] : ops) apply_gate(s, g, t, ex);
    return ms_since(t0);
}

double bench_dm(int n, int gates, kernels::Exec ex) {
    auto ops = random_circuit(n, gates, 7);
    DensityMatrix rho = DensityMatrix::maximally_mixed(n);
    auto t0 = chrono::steady_clock::now();
    for (auto& [g, t] : ops) apply_gate(rho, g, t, ex);
    return ms_since(t0);
}

}  // namespace

int main() {
    std::printf("OpenMP max threads: %d\n\n", omp_get_max_threads());
    std::printf("%-34s %12s %12s %8s\n", "workload", "serial (ms)", "openmp (ms)", "speedup");

    struct Row {
        const char* name;
        double serial, parallel;
    };
    Row rows[] = {
        {"statevector 12q, 300 gates", bench_sv(12, 300, kernels::Exec::Serial),
         bench_sv(12, 300, kernels::Exec::Parallel)},
        {"statevector 12q, 3000 gates", bench_sv(12, 3000, kernels::Exec::Serial),
         bench_sv(12, 3000, kernels::Exec::Parallel)},
        {"density matrix 10q, 60 gates", bench_dm(10, 60, kernels::Exec::Serial),
         bench_dm(10, 60, kernels::Exec::Parallel)},
        {"density matrix 11q, 40 gates", bench_dm(11, 40, kernels::Exec::Serial),
         bench_dm(11, 40, kernels::Exec::Parallel)},
    };
    for (const auto& r : rows)
        std::printf("%-34s %12.2f %12.2f %7.2fx\n", r.name, r.serial, r.parallel,
                    r.serial / r.parallel);
    return 0;
}
