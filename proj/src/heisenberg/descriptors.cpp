#include "qhlab/heisenberg/descriptors.hpp"

#include <cmath>

namespace qhlab::heisenberg {

namespace {

// Dense embedding of a k-qubit gate on `targets` of an n-qubit register,
// qubit 0 = most significant index bit.
Mat embed(const Mat& g, const std::vector<int>& targets, int n) {
    const std::size_t dim = dim_of(n);
    const int k = static_cast<int>(targets.size());
    Mat U = Mat::Zero(dim, dim);
    for (std::size_t col = 0; col < dim; ++col) {
        std::size_t gcol = 0;
        for (int i = 0; i < k; ++i)
            gcol = (gcol << 1) | ((col >> (n - 1 - targets[i])) & 1);
        for (std::size_t grow = 0; grow < dim_of(k); ++grow) {
            cxd amp = g(grow, gcol);
            if (amp == cxd(0, 0)) continue;
            std::size_t row = col;
            for (int i = 0; i < k; ++i) {
                std::size_t bit = std::size_t(1) << (n - 1 - targets[i]);
                if ((grow >> (k - 1 - i)) & 1)
                    row |= bit;
                else
                    row &= ~bit;
            }
            U(row, col) += amp;
        }
    }
    return U;
}

const Mat& sigma(int i) {
    switch (i) {
        case 0: return pauli_x();
        case 1: return pauli_y();
        default: return pauli_z();
    }
}

}  // namespace

DescriptorNetwork init_network(int n) {
    if (n < 1 || n > 10) throw std::invalid_argument("init_network: need 1 <= n <= 10");
    DescriptorNetwork net;
    net.n = n;
    net.u_total = Mat::Identity(dim_of(n), dim_of(n));
    net.q.reserve(std::size_t(3) * n);
    for (int a = 0; a < n; ++a)
        for (int i = 0; i < 3; ++i) net.q.push_back(embed(sigma(i), {a}, n));
    return net;
}

DescriptorNetwork evolve(const DescriptorNetwork& net, const Gate& g,
                         const std::vector<int>& targets) {
    kernels::check_targets(targets, g.arity, net.n);
    DescriptorNetwork out = net;

    // Functional form of the gate at the current time step. Conjugating with
    // it advances exactly the targets' descriptors; all other descriptors
    // commute with it and are left untouched (bit-identical).
    Mat u_emb = embed(g.mat, targets, net.n);
    Mat w = net.u_total.adjoint() * u_emb * net.u_total;
    for (int a : targets)
        for (int i = 0; i < 3; ++i) {
            Mat& qm = out.q[std::size_t(3 * a + i)];
            qm = w.adjoint() * qm * w;
        }
    out.u_total = u_emb * net.u_total;
    out.t = net.t + 1;
    return out;
}

double expectation(const DescriptorNetwork&, const Mat& w) { return w(0, 0).real(); }

Mat word(const DescriptorNetwork& net, const std::vector<std::pair<int, int>>& comps) {
    if (comps.empty()) throw std::invalid_argument("word: empty component list");
    Mat w = net.comp(comps[0].first, comps[0].second);
    for (std::size_t i = 1; i < comps.size(); ++i)
        w = w * net.comp(comps[i].first, comps[i].second);
    return w;
}

SharpestObservable sharpest_observable(const DescriptorNetwork& net, int a) {
    if (a < 0 || a >= net.n) throw std::out_of_range("sharpest_observable: bad qubit");
    std::array<double, 3> e{};
    for (int i = 0; i < 3; ++i) e[i] = expectation(net, net.comp(a, i));
    double gamma = std::sqrt(e[0] * e[0] + e[1] * e[1] + e[2] * e[2]);
    if (gamma <= 1e-12) throw no_sharpest_observable();

    SharpestObservable s;
    s.gamma = gamma;
    s.qubit = a;
    for (int i = 0; i < 3; ++i) s.axis[i] = e[i] / gamma;
    s.op = (e[0] * net.comp(a, 0) + e[1] * net.comp(a, 1) + e[2] * net.comp(a, 2)) / gamma;
    return s;
}

DensityMatrix density_from_sharpest(const SharpestObservable& s) {
    Mat local = s.axis[0] * pauli_x() + s.axis[1] * pauli_y() + s.axis[2] * pauli_z();
    return DensityMatrix(1, Mat(0.5 * (id2() + s.gamma * local)));
}

DensityMatrix reduced_qubit(const DescriptorNetwork& net, int a) {
    Mat m = id2();
    Mat acc = 0.5 * m;
    for (int i = 0; i < 3; ++i)
        acc += 0.5 * expectation(net, net.comp(a, i)) * sigma(i);
    return DensityMatrix(1, std::move(acc));
}

InfoReport info_report(const DescriptorNetwork& net) {
    InfoReport rep;
    rep.acc_network = double(net.n);  // globally pure network, unitary evolution
    double sum = 0.0;
    for (int a = 0; a < net.n; ++a) {
        double acc = 1.0 - von_neumann_entropy(reduced_qubit(net, a));
        rep.acc_per_qubit.push_back(acc);
        sum += acc;
    }
    rep.inacc = rep.acc_network - sum;
    return rep;
}

double relative_descriptor_expectation(const DescriptorNetwork& net, const Mat& observable_word,
                                       const Mat& condition_word, int sign) {
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("relative_descriptor_expectation: sign must be +-1");
    Mat pi = 0.5 * (Mat::Identity(condition_word.rows(), condition_word.cols()) +
                    double(sign) * condition_word);
    double denom = expectation(net, pi);
    if (denom <= 1e-12)
        throw std::invalid_argument("relative_descriptor_expectation: zero-probability condition");
    Mat num = observable_word * pi;
    return expectation(net, num) / denom;
}

}  // namespace qhlab::heisenberg
