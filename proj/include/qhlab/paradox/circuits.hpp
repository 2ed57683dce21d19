#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qhlab/qcore/ops.hpp"

namespace qhlab::paradox {

/// Measurement statistics of a paradox circuit. Distributions are kept in a
/// fixed basis order so output is deterministic.
struct CircuitOutcome {
    std::vector<std::pair<std::string, double>> distribution;
    bool has_postselected = false;
    std::vector<std::pair<std::string, double>> postselected;  // conditional distribution
    double postselect_probability = 0.0;                       // probability of the condition
    std::string forbidden_outcome;  // set when the faulty classical chain forbids a label
    std::map<std::string, double> metrics;

    double probability(const std::string& label) const;
};

/// A circuit as a plain gate list, so the same description can be run through
/// the statevector and the density-matrix engines (the tests hold the two
/// within 1e-10 of each other).
struct GateOp {
    Gate gate;
    std::vector<int> targets;
};

StateVector run_circuit_sv(int n, const std::vector<GateOp>& ops);
DensityMatrix run_circuit_dm(int n, const std::vector<GateOp>& ops);

/// Two-qubit chain circuit: U on qubit A with U|0> = alpha|0> + beta|1>,
/// controlled-H from A onto B, then H x H and a computational measurement.
/// `metrics["overlap"]` carries |<++|psi>| of the pre-measurement state (the
/// amplitude of the all-zeros outcome); for the Hardy parameters
/// alpha = sqrt(1/3) it equals sqrt(3)/2 while the forbidden outcome |11>
/// still arrives with probability |<--|psi>|^2 = 1/12.
CircuitOutcome penrose_circuit(double alpha, double beta);
std::vector<GateOp> penrose_ops(double alpha, double beta);

enum class FrVariant { Original, WithExternalObserver };

/// Unitary Frauchiger-Renner protocol; Bell measurements realized as
/// CNOT + H + computational readout. Original: distribution over the two
/// Bell pairs. WithExternalObserver: joint distribution over E and the two
/// Bell pairs; the E=1, phi-phi- term vanishes.
CircuitOutcome fr_circuit(FrVariant variant);
std::vector<GateOp> fr_ops(FrVariant variant);

/// Three qubits prepared |+++>, y-basis measurement via Rx(pi/2) + z
/// readout; optional same/different parity check of `pair` onto an ancilla.
/// With the check, `postselected` conditions on the ancilla reading "same".
CircuitOutcome pigeonhole_circuit(std::pair<int, int> pair, bool insert_check);
std::vector<GateOp> pigeonhole_ops(std::pair<int, int> pair, bool insert_check);

}  // namespace qhlab::paradox
