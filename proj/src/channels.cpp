#include "ame/channels.hpp"

#include <cmath>
#include <utility>

namespace ame {

namespace {

void require_probability(double p, const char* name) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw ParamOutOfRange(std::string(name) + " must lie in [0, 1]");
    }
}

}  // namespace

double completeness_deviation(const SingleQubitChannel& ch) {
    ComplexMatrix sum(2, 2);
    for (const ComplexMatrix& k : ch.kraus_ops) {
        sum = add(sum, matmul(dagger(k), k));
    }
    return sum.max_abs_diff(ComplexMatrix::identity(2));
}

SingleQubitChannel depolarizing(double p) {
    require_probability(p, "p");
    SingleQubitChannel ch;
    ch.label = "depolarizing";
    ch.params = {{"p", p}};
    ch.kraus_ops.push_back(scale(ComplexMatrix::identity(2), std::sqrt(1.0 - 0.75 * p)));
    const double w = std::sqrt(0.25 * p);
    ch.kraus_ops.push_back(scale(pauli_x(), w));
    ch.kraus_ops.push_back(scale(pauli_y(), w));
    ch.kraus_ops.push_back(scale(pauli_z(), w));
    return ch;
}

SingleQubitChannel dephasing_projector(double p) {
    require_probability(p, "p");
    SingleQubitChannel ch;
    ch.label = "dephasing";
    ch.params = {{"p", p}};
    ch.kraus_ops.push_back(scale(ComplexMatrix::identity(2), std::sqrt(1.0 - p)));
    ch.kraus_ops.push_back(scale(basis_projector(0), std::sqrt(p)));
    ch.kraus_ops.push_back(scale(basis_projector(1), std::sqrt(p)));
    return ch;
}

SingleQubitChannel dephasing_z(double p) {
    require_probability(p, "p");
    SingleQubitChannel ch;
    ch.label = "dephasing";
    ch.params = {{"p", p}};
    ch.kraus_ops.push_back(scale(ComplexMatrix::identity(2), std::sqrt(1.0 - 0.5 * p)));
    ch.kraus_ops.push_back(scale(pauli_z(), std::sqrt(0.5 * p)));
    return ch;
}

SingleQubitChannel pauli_channel(double p, double q, double r) {
    if (!(p >= 0.0) || !(q >= 0.0) || !(r >= 0.0) || !(p + q + r <= 1.0)) {
        throw ParamOutOfRange("pauli channel needs p,q,r >= 0 and p+q+r <= 1");
    }
    SingleQubitChannel ch;
    ch.label = "pauli";
    ch.params = {{"p", p}, {"q", q}, {"r", r}};
    ch.kraus_ops.push_back(scale(ComplexMatrix::identity(2), std::sqrt(1.0 - p - q - r)));
    ch.kraus_ops.push_back(scale(pauli_x(), std::sqrt(p)));
    ch.kraus_ops.push_back(scale(pauli_y(), std::sqrt(q)));
    ch.kraus_ops.push_back(scale(pauli_z(), std::sqrt(r)));
    return ch;
}

DensityMatrix apply_to_qubit(const DensityMatrix& rho, const SingleQubitChannel& ch,
                             std::size_t qubit) {
    const std::size_t n = rho.num_qubits();
    if (qubit < 1 || qubit > n) {
        throw QubitOutOfRange("qubit index outside [1, n]");
    }
    const ComplexMatrix left = ComplexMatrix::identity(std::size_t{1} << (qubit - 1));
    const ComplexMatrix right = ComplexMatrix::identity(std::size_t{1} << (n - qubit));

    ComplexMatrix acc(rho.dim(), rho.dim());
    for (const ComplexMatrix& k : ch.kraus_ops) {
        const ComplexMatrix lifted = kron(kron(left, k), right);
        acc = add(acc, matmul(matmul(lifted, rho.matrix()), dagger(lifted)));
    }
    return DensityMatrix(n, std::move(acc));
}

DensityMatrix apply_symmetric(const DensityMatrix& rho, const SingleQubitChannel& ch) {
    DensityMatrix out = rho;
    for (std::size_t qubit = 1; qubit <= rho.num_qubits(); ++qubit) {
        out = apply_to_qubit(out, ch, qubit);
    }
    return out;
}

ChannelKind parse_channel_kind(const std::string& name) {
    if (name == "depolarizing") return ChannelKind::depolarizing;
    if (name == "dephasing") return ChannelKind::dephasing;
    if (name == "pauli") return ChannelKind::pauli;
    throw ConfigError("unknown channel type: " + name);
}

std::string to_string(ChannelKind kind) {
    switch (kind) {
        case ChannelKind::depolarizing:
            return "depolarizing";
        case ChannelKind::dephasing:
            return "dephasing";
        case ChannelKind::pauli:
            return "pauli";
    }
    return "?";
}

SingleQubitChannel make_channel(ChannelKind kind, double p, double q, double r) {
    switch (kind) {
        case ChannelKind::depolarizing:
            return depolarizing(p);
        case ChannelKind::dephasing:
            return dephasing_z(p);
        case ChannelKind::pauli:
            return pauli_channel(p, q, r);
    }
    throw ConfigError("unknown channel kind");
}

}  // namespace ame
