#include "ame/complex_matrix.hpp"

#include <cmath>
#include <utility>

namespace ame {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Complex(0.0, 0.0)) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) {
        throw DimensionMismatch("entry count does not match matrix shape");
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

bool ComplexMatrix::is_finite() const {
    for (const Complex& z : entries_) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            return false;
        }
    }
    return true;
}

double ComplexMatrix::hermiticity_deviation() const {
    if (!is_square()) {
        throw NotSquare("hermiticity check requires a square matrix");
    }
    double dev = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = i; j < cols_; ++j) {
            dev = std::max(dev, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
        }
    }
    return dev;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw DimensionMismatch("matrix shapes differ");
    }
    double diff = 0.0;
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        diff = std::max(diff, std::abs(entries_[k] - other.entries_[k]));
    }
    return diff;
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const Complex& z : entries_) {
        m = std::max(m, std::abs(z));
    }
    return m;
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) {
        throw DimensionMismatch("matmul: inner dimensions differ");
    }
    ComplexMatrix c(a.rows(), b.cols());
    const std::size_t n = a.rows(), k_dim = a.cols(), m = b.cols();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < k_dim; ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex(0.0, 0.0)) {
                continue;
            }
            for (std::size_t j = 0; j < m; ++j) {
                c(i, j) += aik * b(k, j);
            }
        }
    }
    return c;
}

ComplexMatrix add(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionMismatch("add: matrix shapes differ");
    }
    ComplexMatrix c(a.rows(), a.cols());
    for (std::size_t k = 0; k < c.entries().size(); ++k) {
        c.entries()[k] = a.entries()[k] + b.entries()[k];
    }
    return c;
}

ComplexMatrix scale(const ComplexMatrix& a, Complex factor) {
    ComplexMatrix c(a.rows(), a.cols());
    for (std::size_t k = 0; k < c.entries().size(); ++k) {
        c.entries()[k] = a.entries()[k] * factor;
    }
    return c;
}

ComplexMatrix dagger(const ComplexMatrix& a) {
    ComplexMatrix c(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            c(j, i) = std::conj(a(i, j));
        }
    }
    return c;
}

Complex trace(const ComplexMatrix& a) {
    if (!a.is_square()) {
        throw NotSquare("trace requires a square matrix");
    }
    Complex t(0.0, 0.0);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        t += a(i, i);
    }
    return t;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t ia = 0; ia < a.rows(); ++ia) {
        for (std::size_t ja = 0; ja < a.cols(); ++ja) {
            const Complex av = a(ia, ja);
            if (av == Complex(0.0, 0.0)) {
                continue;
            }
            for (std::size_t ib = 0; ib < b.rows(); ++ib) {
                for (std::size_t jb = 0; jb < b.cols(); ++jb) {
                    c(ia * b.rows() + ib, ja * b.cols() + jb) = av * b(ib, jb);
                }
            }
        }
    }
    return c;
}

ComplexMatrix pauli_x() {
    ComplexMatrix m(2, 2);
    m(0, 1) = 1.0;
    m(1, 0) = 1.0;
    return m;
}

ComplexMatrix pauli_y() {
    ComplexMatrix m(2, 2);
    m(0, 1) = Complex(0.0, -1.0);
    m(1, 0) = Complex(0.0, 1.0);
    return m;
}

ComplexMatrix pauli_z() {
    ComplexMatrix m(2, 2);
    m(0, 0) = 1.0;
    m(1, 1) = -1.0;
    return m;
}

ComplexMatrix hadamard() {
    const double s = 1.0 / std::sqrt(2.0);
    ComplexMatrix m(2, 2);
    m(0, 0) = s;
    m(0, 1) = s;
    m(1, 0) = s;
    m(1, 1) = -s;
    return m;
}

ComplexMatrix basis_projector(int bit) {
    ComplexMatrix m(2, 2);
    m(bit ? 1 : 0, bit ? 1 : 0) = 1.0;
    return m;
}

}  // namespace ame
