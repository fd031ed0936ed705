#pragma once

#include <vector>

#include "ame/complex_matrix.hpp"

namespace ame {

// Hermiticity tolerance accepted by the spectral routines. Partial
// transposition and repeated channel application accumulate rounding,
// so the input is symmetrized before diagonalization.
inline constexpr double kHermiticityTol = 1e-9;

// Real eigenvalues of a Hermitian matrix, sorted ascending.
struct Spectrum {
    std::vector<double> eigenvalues;
};

// Full eigendecomposition m = V diag(eigenvalues) V^dagger with the
// eigenvalues ascending and the eigenvectors as columns of a unitary.
struct Eigensystem {
    std::vector<double> eigenvalues;
    ComplexMatrix eigenvectors;
};

// Cyclic complex Jacobi diagonalization. Throws NotSquare for
// non-square input and NotHermitian when max|m - m^dagger| exceeds
// kHermiticityTol.
Eigensystem hermitian_eigensystem(const ComplexMatrix& m);
Spectrum hermitian_spectrum(const ComplexMatrix& m);

// Sum of |eigenvalue| over the Hermitian spectrum. Equals the trace
// norm ||m|| = Tr sqrt(m^dagger m) for Hermitian m.
double trace_norm_hermitian(const ComplexMatrix& m);

}  // namespace ame
