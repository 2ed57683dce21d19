#include "qhlab/collision/nmr.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace qhlab::collision {

double nmr_fB_form(double eta) {
    double c = std::cos(eta);
    return c * c * c * c;
}

double nmr_fA_form(double eta) {
    double c2 = std::cos(eta) * std::cos(eta);
    return ((-2.0 * c2 + 8.0) * c2 - 9.0) * c2 * c2 + 4.0 * c2;
}

NmrResult nmr_circuit(double eta) {
    if (eta < 0.0 || eta > M_PI / 2 + 1e-15)
        throw std::invalid_argument("nmr_circuit: eta outside [0, pi/2]");

    // Chain positions p0..p3 hold logical qubits A,B,C,D initially.
    Mat pure(2, 2), mm(2, 2);
    pure << 1, 0, 0, 0;
    mm << 0.5, 0, 0, 0.5;

    auto kron = [](const Mat& a, const Mat& b) {
        Mat out(a.rows() * b.rows(), a.cols() * b.cols());
        for (Eigen::Index i = 0; i < a.rows(); ++i)
            for (Eigen::Index j = 0; j < a.cols(); ++j)
                out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        return out;
    };

    DensityMatrix rho(4, kron(kron(pure, pure), kron(mm, mm)));
    std::array<int, 4> pos = {0, 1, 2, 3};  // logical A..D -> chain position

    const Gate pswap = standard_gate(GateKind::PSwap, {eta});
    const Gate swap = standard_gate(GateKind::SWAP);
    auto do_swap = [&](int pa, int pb) {
        apply_gate(rho, swap, {pa, pb});
        for (int q = 0; q < 4; ++q)
            if (pos[q] == pa) pos[q] = pb;
            else if (pos[q] == pb) pos[q] = pa;
    };
    auto middle_pswap = [&] { apply_gate(rho, pswap, {1, 2}); };

    middle_pswap();   // B x C
    do_swap(2, 3);    // bring D into the middle
    middle_pswap();   // B x D
    do_swap(0, 1);    // bring A into the middle...
    do_swap(2, 3);    // ...and C back
    middle_pswap();   // A x C
    do_swap(2, 3);    // D back into the middle
    middle_pswap();   // A x D

    NmrResult out;
    for (int q = 0; q < 4; ++q) {
        DensityMatrix r1 = partial_trace(rho, {pos[q]});
        out.f_sim[q] = (r1.mat * pauli_z()).trace().real();
        out.entropy[q] = von_neumann_entropy(r1);
    }
    out.f_form[0] = nmr_fA_form(eta);
    out.f_form[1] = nmr_fB_form(eta);
    out.f_form[2] = 1.0 - out.f_form[1];
    out.f_form[3] = 1.0 - out.f_form[0];
    return out;
}

}  // namespace qhlab::collision
