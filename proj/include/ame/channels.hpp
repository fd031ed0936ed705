#pragma once

#include <map>
#include <string>
#include <vector>

#include "ame/complex_matrix.hpp"
#include "ame/states.hpp"

namespace ame {

// Single-qubit channel as an explicit Kraus list: rho maps to
// sum_i K_i rho K_i^dagger with sum_i K_i^dagger K_i = I.
struct SingleQubitChannel {
    std::vector<ComplexMatrix> kraus_ops;
    std::string label;
    std::map<std::string, double> params;
};

// max |sum_i K_i^dagger K_i - I|. Zero (to rounding) for every channel
// constructed here.
double completeness_deviation(const SingleQubitChannel& ch);

// Kraus set {sqrt(1-3p/4) I, sqrt(p/4) X, sqrt(p/4) Y, sqrt(p/4) Z}
// for p in [0, 1].
SingleQubitChannel depolarizing(double p);

// Kraus set {sqrt(1-p) I, sqrt(p)|0><0|, sqrt(p)|1><1|} for p in [0, 1].
SingleQubitChannel dephasing_projector(double p);

// Kraus set {sqrt(1-p/2) I, sqrt(p/2) Z}; acts identically to
// dephasing_projector(p) on every density matrix.
SingleQubitChannel dephasing_z(double p);

// Kraus set {sqrt(1-p-q-r) I, sqrt(p) X, sqrt(q) Y, sqrt(r) Z} for
// p, q, r >= 0 with p + q + r <= 1.
SingleQubitChannel pauli_channel(double p, double q, double r);

// sum_i (I x ... x K_i x ... x I) rho (...)^dagger with the Kraus
// operator lifted onto the given qubit via Kronecker products.
DensityMatrix apply_to_qubit(const DensityMatrix& rho, const SingleQubitChannel& ch,
                             std::size_t qubit);

// The symmetric product channel: the same single-qubit channel applied
// to every qubit (channels on distinct qubits commute, so the order is
// irrelevant).
DensityMatrix apply_symmetric(const DensityMatrix& rho, const SingleQubitChannel& ch);

// Channel catalog selector used by sweep configs and the CLI.
enum class ChannelKind { depolarizing, dephasing, pauli };

// Parses "depolarizing" | "dephasing" | "pauli"; throws ConfigError
// otherwise.
ChannelKind parse_channel_kind(const std::string& name);
std::string to_string(ChannelKind kind);

// Builds the channel for one grid point. The dephasing kind uses the
// two-operator Z form; q and r are only read for the Pauli kind.
SingleQubitChannel make_channel(ChannelKind kind, double p, double q = 0.0, double r = 0.0);

}  // namespace ame
