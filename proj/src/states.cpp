#include "ame/states.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <utility>

#include "json.hpp"

namespace ame {

namespace {

constexpr double kNormTol = 1e-12;
constexpr double kUnitaryTol = 1e-9;

struct SignedTerm {
    unsigned index;
    int sign;
};

// Term lists of the five-qubit-code codewords. The binary literals
// read left to right as the ket factors, qubit 1 first.
constexpr SignedTerm kAme5ZeroTerms[] = {
    {0b00000, +1}, {0b10010, +1}, {0b01001, +1}, {0b10100, +1},
    {0b01010, +1}, {0b11011, -1}, {0b00110, -1}, {0b11000, -1},
    {0b11101, -1}, {0b00011, -1}, {0b11110, -1}, {0b01111, -1},
    {0b10001, -1}, {0b01100, -1}, {0b10111, -1}, {0b00101, +1},
};

constexpr SignedTerm kAme5OneTerms[] = {
    {0b11111, +1}, {0b01101, +1}, {0b10110, +1}, {0b01011, +1},
    {0b10101, +1}, {0b00100, -1}, {0b11001, -1}, {0b00111, -1},
    {0b00010, -1}, {0b11100, -1}, {0b00001, -1}, {0b10000, -1},
    {0b01110, -1}, {0b10011, -1}, {0b01000, -1}, {0b11010, +1},
};

PureState from_terms(std::size_t num_qubits, const SignedTerm* terms, std::size_t count,
                     double coefficient) {
    std::vector<Complex> amps(std::size_t{1} << num_qubits, Complex(0.0, 0.0));
    for (std::size_t k = 0; k < count; ++k) {
        amps[terms[k].index] = terms[k].sign * coefficient;
    }
    return PureState(num_qubits, std::move(amps));
}

}  // namespace

PureState::PureState(std::size_t num_qubits, std::vector<Complex> amplitudes)
    : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {
    if (num_qubits_ == 0) {
        throw DimensionMismatch("state needs at least one qubit");
    }
    if (amplitudes_.size() != (std::size_t{1} << num_qubits_)) {
        throw DimensionMismatch("amplitude count is not 2^num_qubits");
    }
    for (const Complex& a : amplitudes_) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw Error("state has non-finite amplitudes");
        }
    }
    if (std::abs(norm_squared() - 1.0) > kNormTol) {
        throw Error("state is not normalized within 1e-12");
    }
}

double PureState::norm_squared() const {
    double n = 0.0;
    for (const Complex& a : amplitudes_) {
        n += std::norm(a);
    }
    return n;
}

DensityMatrix::DensityMatrix(std::size_t num_qubits, ComplexMatrix matrix)
    : num_qubits_(num_qubits), matrix_(std::move(matrix)) {
    const std::size_t d = std::size_t{1} << num_qubits_;
    if (matrix_.rows() != d || matrix_.cols() != d) {
        throw DimensionMismatch("density matrix shape is not 2^n x 2^n");
    }
    if (!matrix_.is_finite()) {
        throw Error("density matrix has non-finite entries");
    }
    if (matrix_.hermiticity_deviation() > 1e-9) {
        throw NotHermitian("density matrix deviates from Hermitian beyond 1e-9");
    }
    if (std::abs(trace(matrix_) - Complex(1.0, 0.0)) > 1e-9) {
        throw Error("density matrix trace deviates from 1 beyond 1e-9");
    }
}

PureState bell() {
    const double s = 1.0 / std::sqrt(2.0);
    return PureState(2, {s, 0.0, 0.0, s});
}

PureState ghz3() {
    const double s = 1.0 / std::sqrt(2.0);
    std::vector<Complex> amps(8, Complex(0.0, 0.0));
    amps[0] = s;
    amps[7] = s;
    return PureState(3, std::move(amps));
}

PureState ame5_logical_zero() {
    return from_terms(5, kAme5ZeroTerms, 16, 0.25);
}

PureState ame5_logical_one() {
    return from_terms(5, kAme5OneTerms, 16, 0.25);
}

PureState ame6() {
    const double s = 0.25 / std::sqrt(2.0);
    std::vector<Complex> amps(64, Complex(0.0, 0.0));
    for (const SignedTerm& t : kAme5ZeroTerms) {
        amps[t.index] = t.sign * s;
    }
    for (const SignedTerm& t : kAme5OneTerms) {
        amps[32 + t.index] = t.sign * s;
    }
    return PureState(6, std::move(amps));
}

PureState phi5_prime() {
    return apply_single_qubit_unitary(ame5_logical_zero(), 5, hadamard());
}

PureState apply_single_qubit_unitary(const PureState& s, std::size_t qubit,
                                     const ComplexMatrix& u) {
    if (qubit < 1 || qubit > s.num_qubits()) {
        throw QubitOutOfRange("qubit index outside [1, n]");
    }
    if (u.rows() != 2 || u.cols() != 2) {
        throw DimensionMismatch("single-qubit unitary must be 2x2");
    }
    if (matmul(dagger(u), u).max_abs_diff(ComplexMatrix::identity(2)) > kUnitaryTol) {
        throw NotUnitary("matrix deviates from unitary beyond 1e-9");
    }

    const std::size_t bit = std::size_t{1} << (s.num_qubits() - qubit);
    std::vector<Complex> out(s.amplitudes());
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (i & bit) {
            continue;
        }
        const Complex a0 = s.amplitudes()[i];
        const Complex a1 = s.amplitudes()[i | bit];
        out[i] = u(0, 0) * a0 + u(0, 1) * a1;
        out[i | bit] = u(1, 0) * a0 + u(1, 1) * a1;
    }
    return PureState(s.num_qubits(), std::move(out));
}

DensityMatrix density(const PureState& s) {
    const std::size_t d = s.dim();
    ComplexMatrix m(d, d);
    for (std::size_t i = 0; i < d; ++i) {
        const Complex ai = s.amplitudes()[i];
        if (ai == Complex(0.0, 0.0)) {
            continue;
        }
        for (std::size_t j = 0; j < d; ++j) {
            m(i, j) = ai * std::conj(s.amplitudes()[j]);
        }
    }
    return DensityMatrix(s.num_qubits(), std::move(m));
}

std::optional<PureState> named_state(std::string_view name) {
    if (name == "bell") return bell();
    if (name == "ghz3") return ghz3();
    if (name == "phi5") return ame5_logical_zero();
    if (name == "phi5_prime") return phi5_prime();
    if (name == "phi6") return ame6();
    return std::nullopt;
}

std::vector<std::string> named_state_list() {
    return {"bell", "ghz3", "phi5", "phi5_prime", "phi6"};
}

std::string state_to_json(const PureState& s) {
    std::ostringstream out;
    out << "{\"num_qubits\": " << s.num_qubits() << ", \"amplitudes\": [";
    char buf[64];
    for (std::size_t i = 0; i < s.dim(); ++i) {
        if (i) {
            out << ", ";
        }
        std::snprintf(buf, sizeof(buf), "[%.17g, %.17g]", s.amplitudes()[i].real(),
                      s.amplitudes()[i].imag());
        out << buf;
    }
    out << "]}";
    return out.str();
}

PureState state_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("state file is not valid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("num_qubits") || !j.contains("amplitudes")) {
        throw ConfigError("state file needs num_qubits and amplitudes");
    }
    if (!j["num_qubits"].is_number_unsigned() || !j["amplitudes"].is_array()) {
        throw ConfigError("state file fields have wrong types");
    }
    const std::size_t n = j["num_qubits"].get<std::size_t>();
    if (n == 0 || n > 20) {
        throw ConfigError("num_qubits outside supported range");
    }
    std::vector<Complex> amps;
    amps.reserve(j["amplitudes"].size());
    for (const auto& entry : j["amplitudes"]) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
            !entry[1].is_number()) {
            throw ConfigError("amplitudes must be [re, im] pairs");
        }
        amps.emplace_back(entry[0].get<double>(), entry[1].get<double>());
    }
    try {
        return PureState(n, std::move(amps));
    } catch (const Error& e) {
        throw ConfigError(std::string("invalid state: ") + e.what());
    }
}

PureState load_state_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open state file: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return state_from_json(buf.str());
}

void save_state_file(const PureState& s, const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw ConfigError("cannot write state file: " + path);
    }
    out << state_to_json(s) << "\n";
}

}  // namespace ame
