#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ame/complex_matrix.hpp"

namespace ame {

// Pure state over n qubits.
//
// Basis-index convention used everywhere in this library: qubit 1 is
// the most significant bit of the basis index, i.e. the leftmost
// tensor factor, so |q1 q2 ... qn> sits at index
// q1*2^(n-1) + q2*2^(n-2) + ... + qn.
class PureState {
public:
    // Validates length 2^n, finiteness, and normalization within 1e-12.
    PureState(std::size_t num_qubits, std::vector<Complex> amplitudes);

    std::size_t num_qubits() const { return num_qubits_; }
    std::size_t dim() const { return amplitudes_.size(); }
    const std::vector<Complex>& amplitudes() const { return amplitudes_; }

    // Squared 2-norm of the amplitude vector.
    double norm_squared() const;

private:
    std::size_t num_qubits_ = 0;
    std::vector<Complex> amplitudes_;
};

// Hermitian, unit-trace matrix on 2^n dimensions. The constructor
// checks shape, finiteness, hermiticity (1e-9) and trace (1e-9);
// positivity is enforced downstream by the entropy diagnostic.
class DensityMatrix {
public:
    DensityMatrix(std::size_t num_qubits, ComplexMatrix matrix);

    std::size_t num_qubits() const { return num_qubits_; }
    std::size_t dim() const { return matrix_.rows(); }
    const ComplexMatrix& matrix() const { return matrix_; }

private:
    std::size_t num_qubits_ = 0;
    ComplexMatrix matrix_;
};

// (|00> + |11>)/sqrt(2), the two-qubit AME state.
PureState bell();

// (|000> + |111>)/sqrt(2), the three-qubit AME state.
PureState ghz3();

// Logical codewords of the five-qubit code; both are AME(5,2) states
// written as 16-term superpositions with coefficients +-1/4.
PureState ame5_logical_zero();
PureState ame5_logical_one();

// (|0>|0_L> + |1>|1_L>)/sqrt(2) with the fresh qubit as qubit 1.
PureState ame6();

// Hadamard on qubit 5 of ame5_logical_zero(); AME but not equivalent
// to it under symmetric non-depolarizing noise.
PureState phi5_prime();

// Applies a 2x2 unitary to one tensor factor. Throws NotUnitary when
// max|u^dagger u - I| > 1e-9 and QubitOutOfRange for qubit outside
// [1, n].
PureState apply_single_qubit_unitary(const PureState& s, std::size_t qubit, const ComplexMatrix& u);

// Outer product |s><s|.
DensityMatrix density(const PureState& s);

// Catalog lookup for the sweep/CLI state names:
// bell, ghz3, phi5 (= ame5_logical_zero), phi5_prime, phi6 (= ame6).
std::optional<PureState> named_state(std::string_view name);
std::vector<std::string> named_state_list();

// JSON serialization: {"num_qubits": n, "amplitudes": [[re, im], ...]}.
// Amplitudes are written with 17 significant digits so that the
// normalization invariant survives a round trip.
std::string state_to_json(const PureState& s);
PureState state_from_json(const std::string& text);
PureState load_state_file(const std::string& path);
void save_state_file(const PureState& s, const std::string& path);

}  // namespace ame
