#pragma once

#include <cstddef>
#include <vector>

#include "ame/spectra.hpp"
#include "ame/states.hpp"

namespace ame {

// A split of the n qubits into subset A and its implied complement B.
// Indices are 1-based, sorted, distinct, with 1 <= |A| <= n-1.
class Bipartition {
public:
    Bipartition(std::size_t num_qubits, std::vector<std::size_t> subset_a);

    std::size_t num_qubits() const { return num_qubits_; }
    std::size_t m() const { return subset_a_.size(); }
    const std::vector<std::size_t>& subset_a() const { return subset_a_; }
    std::vector<std::size_t> subset_b() const;

private:
    std::size_t num_qubits_ = 0;
    std::vector<std::size_t> subset_a_;
};

// Entanglement record for one cut; all values in bits.
struct MeasureRecord {
    double log_negativity = 0.0;
    double coherent_info_a_to_b = 0.0;
    double coherent_info_b_to_a = 0.0;
    double coherent_info_max = 0.0;
};

// Directed coherent informations I(A>B) = S(rho_B) - S(rho_AB) and
// I(B>A) = S(rho_A) - S(rho_AB), plus their maximum.
struct CoherentInfo {
    double a_to_b = 0.0;
    double b_to_a = 0.0;
    double max_directed = 0.0;
};

// Reduced state on the kept qubits (1-based indices, any order on
// input; kept qubits retain their ascending register order in the
// output). Throws EmptySubset / IndexOutOfRange.
DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<std::size_t>& keep);

// Transposes the B-subsystem indices. The result is Hermitian with the
// same trace but is generally not positive, hence plain ComplexMatrix.
ComplexMatrix partial_transpose(const DensityMatrix& rho, const Bipartition& part);

// -sum_i lambda_i log2 lambda_i over the clamped spectrum. Eigenvalues
// in [-1e-10, 0] count as exact zeros; anything below -1e-10 raises
// NotPSD, which distinguishes rounding noise from genuine bugs.
double von_neumann_entropy(const DensityMatrix& rho);

// log2 of the trace norm of the partial transpose; >= 0 for any state.
double log_negativity(const DensityMatrix& rho, const Bipartition& part);

CoherentInfo coherent_information(const DensityMatrix& rho, const Bipartition& part);

// Variant taking a precomputed S(rho_AB); sweeps share the full-state
// entropy across all cuts of the same noisy state.
CoherentInfo coherent_information(const DensityMatrix& rho, const Bipartition& part,
                                  double entropy_ab);

// Log-negativity and coherent informations for one cut in one record.
MeasureRecord evaluate_measures(const DensityMatrix& rho, const Bipartition& part);
MeasureRecord evaluate_measures(const DensityMatrix& rho, const Bipartition& part,
                                double entropy_ab);

// True iff S(rho_A) >= m - tol for every subset A with
// 1 <= m <= floor(n/2) qubits.
bool is_ame(const PureState& s, double tol = 1e-9);

}  // namespace ame
