#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "ame/errors.hpp"

namespace ame {

using Complex = std::complex<double>;

// Dense complex matrix, row-major storage. Everything in this project
// lives at dimension <= 128, so there is no sparse or blocked path.
class ComplexMatrix {
public:
    ComplexMatrix() = default;

    // Zero-filled rows x cols matrix.
    ComplexMatrix(std::size_t rows, std::size_t cols);

    // Takes ownership of row-major entries; throws DimensionMismatch if
    // the entry count does not equal rows * cols.
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

    static ComplexMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Complex& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    const std::vector<Complex>& entries() const { return entries_; }
    std::vector<Complex>& entries() { return entries_; }

    bool is_square() const { return rows_ == cols_; }
    bool is_finite() const;

    // max_ij |m_ij - conj(m_ji)|; throws NotSquare for non-square input.
    double hermiticity_deviation() const;
    bool is_hermitian(double tol = 1e-9) const { return hermiticity_deviation() <= tol; }

    // max_ij |a_ij - b_ij|; throws DimensionMismatch on shape mismatch.
    double max_abs_diff(const ComplexMatrix& other) const;

    // max_ij |m_ij|
    double max_abs() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> entries_;
};

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix add(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix scale(const ComplexMatrix& a, Complex factor);

// Conjugate transpose.
ComplexMatrix dagger(const ComplexMatrix& a);

Complex trace(const ComplexMatrix& a);

// Kronecker product with index convention
// (i_a * b.rows + i_b, j_a * b.cols + j_b).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Single-qubit constants.
ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();
ComplexMatrix hadamard();

// |0><0| for bit = 0, |1><1| for bit = 1.
ComplexMatrix basis_projector(int bit);

}  // namespace ame
