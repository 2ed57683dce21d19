#include "qhlab/paradox/circuits.hpp"

#include <cmath>

namespace qhlab::paradox {

double CircuitOutcome::probability(const std::string& label) const {
    for (const auto& [k, p] : distribution)
        if (k == label) return p;
    throw std::invalid_argument("CircuitOutcome: no outcome labeled " + label);
}

StateVector run_circuit_sv(int n, const std::vector<GateOp>& ops) {
    StateVector s(n);
    for (const auto& op : ops) apply_gate(s, op.gate, op.targets);
    return s;
}

DensityMatrix run_circuit_dm(int n, const std::vector<GateOp>& ops) {
    DensityMatrix rho = to_density(StateVector(n));
    for (const auto& op : ops) apply_gate(rho, op.gate, op.targets);
    return rho;
}

namespace {

Gate controlled_h() {
    // Standard controlled-Hadamard: H on the target when the control is |1>.
    Mat m = Mat::Identity(4, 4);
    double r = 1.0 / std::sqrt(2.0);
    m(2, 2) = r;
    m(2, 3) = r;
    m(3, 2) = r;
    m(3, 3) = -r;
    return Gate(2, m, "CH");
}

void check_sum(std::vector<std::pair<std::string, double>>& dist) {
    double tot = 0.0;
    for (auto& [k, p] : dist) tot += p;
    if (std::abs(tot - 1.0) > kAlgTol)
        throw std::logic_error("CircuitOutcome: probabilities do not sum to 1");
}

std::string bits_label(std::size_t idx, int n) {
    std::string s(n, '0');
    for (int q = 0; q < n; ++q)
        if ((idx >> (n - 1 - q)) & 1) s[q] = '1';
    return s;
}

}  // namespace

std::vector<GateOp> penrose_ops(double alpha, double beta) {
    if (std::abs(alpha * alpha + beta * beta - 1.0) > 1e-12)
        throw std::invalid_argument("penrose_circuit: alpha^2 + beta^2 != 1");
    Mat u(2, 2);
    u << alpha, -beta, beta, alpha;
    std::vector<GateOp> ops;
    ops.push_back({custom_gate(u, "U"), {0}});
    ops.push_back({controlled_h(), {0, 1}});
    ops.push_back({standard_gate(GateKind::H), {0}});
    ops.push_back({standard_gate(GateKind::H), {1}});
    return ops;
}

CircuitOutcome penrose_circuit(double alpha, double beta) {
    auto ops = penrose_ops(alpha, beta);
    std::vector<GateOp> pre(ops.begin(), ops.begin() + 2);  // before the H x H stage
    StateVector psi_pre = run_circuit_sv(2, pre);
    StateVector psi = run_circuit_sv(2, ops);

    CircuitOutcome out;
    for (std::size_t i = 0; i < 4; ++i)
        out.distribution.push_back({bits_label(i, 2), std::norm(psi.amps[i])});
    check_sum(out.distribution);

    // |<++|psi_pre>| = amplitude of the all-zeros outcome after H x H.
    cxd ovl = 0.0;
    for (std::size_t i = 0; i < 4; ++i) ovl += 0.5 * psi_pre.amps[i];
    out.metrics["overlap"] = std::abs(ovl);

    const double ah = std::sqrt(1.0 / 3.0), bh = std::sqrt(2.0 / 3.0);
    if (std::abs(alpha - ah) < 1e-9 && std::abs(beta - bh) < 1e-9)
        out.forbidden_outcome = "11";
    else if (std::abs(alpha - ah) < 1e-9 && std::abs(beta + bh) < 1e-9)
        out.forbidden_outcome = "01";
    return out;
}

std::vector<GateOp> fr_ops(FrVariant variant) {
    // Qubit order (Original): 0 coin, 1 Fbar, 2 qubit, 3 F.
    // WithExternalObserver prepends E as qubit 0 and shifts the rest.
    const int off = variant == FrVariant::WithExternalObserver ? 1 : 0;
    Mat u(2, 2);
    double a = std::sqrt(1.0 / 3.0), b = std::sqrt(2.0 / 3.0);
    u << a, -b, b, a;

    std::vector<GateOp> ops;
    ops.push_back({custom_gate(u, "U"), {off + 0}});
    if (variant == FrVariant::WithExternalObserver)
        ops.push_back({standard_gate(GateKind::CNOT), {1, 0}});  // coin -> E
    ops.push_back({standard_gate(GateKind::CNOT), {off + 0, off + 1}});
    ops.push_back({controlled_h(), {off + 1, off + 2}});
    ops.push_back({standard_gate(GateKind::CNOT), {off + 2, off + 3}});
    // Bell rotations: CNOT then H on each pair.
    ops.push_back({standard_gate(GateKind::CNOT), {off + 0, off + 1}});
    ops.push_back({standard_gate(GateKind::H), {off + 0}});
    ops.push_back({standard_gate(GateKind::CNOT), {off + 2, off + 3}});
    ops.push_back({standard_gate(GateKind::H), {off + 2}});
    return ops;
}

CircuitOutcome fr_circuit(FrVariant variant) {
    const int n = variant == FrVariant::WithExternalObserver ? 5 : 4;
    const int off = n - 4;
    StateVector psi = run_circuit_sv(n, fr_ops(variant));

    // After CNOT+H, (control, target) = (0,0) reads phi+, (1,0) phi-,
    // (0,1) psi+, (1,1) psi-.
    auto bell_label = [](int cbit, int tbit) {
        static const char* names[2][2] = {{"phi+", "psi+"}, {"phi-", "psi-"}};
        return std::string(names[cbit][tbit]);
    };

    std::map<std::string, double> acc;
    for (std::size_t i = 0; i < psi.dim(); ++i) {
        double p = std::norm(psi.amps[i]);
        auto bit = [&](int q) { return int((i >> (n - 1 - q)) & 1); };
        std::string label;
        if (variant == FrVariant::WithExternalObserver)
            label += "E=" + std::to_string(bit(0)) + ",";
        label += bell_label(bit(off + 0), bit(off + 1)) + ":" + bell_label(bit(off + 2), bit(off + 3));
        acc[label] += p;
    }
    CircuitOutcome out;
    for (const auto& [k, p] : acc) out.distribution.push_back({k, p});
    check_sum(out.distribution);
    return out;
}

std::vector<GateOp> pigeonhole_ops(std::pair<int, int> pair, bool insert_check) {
    if (pair.first < 1 || pair.first > 3 || pair.second < 1 || pair.second > 3 ||
        pair.first == pair.second)
        throw std::invalid_argument("pigeonhole_circuit: pair must name two of qubits 1..3");
    std::vector<GateOp> ops;
    for (int q = 0; q < 3; ++q) ops.push_back({standard_gate(GateKind::H), {q}});
    if (insert_check) {
        // Ancilla is qubit 3; two CNOTs record same (|0>) / different (|1>).
        ops.push_back({standard_gate(GateKind::CNOT), {pair.first - 1, 3}});
        ops.push_back({standard_gate(GateKind::CNOT), {pair.second - 1, 3}});
    }
    // y-basis measurement as Rx(pi/2) + z readout; z outcome 0 reads |+i>.
    for (int q = 0; q < 3; ++q) ops.push_back({standard_gate(GateKind::Rx, {M_PI / 2}), {q}});
    return ops;
}

CircuitOutcome pigeonhole_circuit(std::pair<int, int> pair, bool insert_check) {
    const int n = insert_check ? 4 : 3;
    StateVector psi = run_circuit_sv(n, pigeonhole_ops(pair, insert_check));

    auto ylabel = [](int bit) { return bit == 0 ? std::string("+i") : std::string("-i"); };
    CircuitOutcome out;
    double p_same = 0.0;
    std::vector<std::pair<std::string, double>> cond;

    for (std::size_t i = 0; i < psi.dim(); ++i) {
        double p = std::norm(psi.amps[i]);
        auto bit = [&](int q) { return int((i >> (n - 1 - q)) & 1); };
        std::string y = ylabel(bit(0)) + ylabel(bit(1)) + ylabel(bit(2));
        std::string label = insert_check
                                ? (bit(3) == 0 ? "same," : "different,") + y
                                : y;
        out.distribution.push_back({label, p});
        if (insert_check && bit(3) == 0) {
            p_same += p;
            cond.push_back({y, p});
        }
    }
    check_sum(out.distribution);

    if (insert_check) {
        out.has_postselected = true;
        out.postselect_probability = p_same;
        for (auto& [k, p] : cond) p = p_same > 0 ? p / p_same : 0.0;
        out.postselected = std::move(cond);
    }
    return out;
}

}  // namespace qhlab::paradox
