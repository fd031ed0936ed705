#include "ame/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace ame {

namespace {

// In-place cyclic Jacobi on the flat n x n Hermitian matrix `a`.
// Each rotation U annihilates one off-diagonal pair: U is the complex
// Givens rotation built from the phase of a[p][q] and the classic real
// Jacobi angle for the magnitudes. When `v` is non-null the rotations
// are accumulated there, so afterwards a_in = V diag V^dagger.
void jacobi_diagonalize(std::vector<Complex>& a, std::size_t n, std::vector<Complex>* v) {
    if (v) {
        v->assign(n * n, Complex(0.0, 0.0));
        for (std::size_t i = 0; i < n; ++i) {
            (*v)[i * n + i] = 1.0;
        }
    }
    if (n < 2) {
        return;
    }

    double scale = 0.0;
    for (const Complex& z : a) {
        scale = std::max(scale, std::abs(z));
    }
    if (scale == 0.0) {
        return;
    }
    const double conv_tol = 1e-14 * scale;
    const double rotate_tol = 0.1 * conv_tol;

    const int max_sweeps = 100;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex apq = a[p * n + q];
                const double abs_apq = std::abs(apq);
                if (abs_apq <= rotate_tol) {
                    continue;
                }

                const double app = a[p * n + p].real();
                const double aqq = a[q * n + q].real();
                const Complex phase = apq / abs_apq;
                const double tau = (aqq - app) / (2.0 * abs_apq);
                const double t = (tau >= 0.0)
                                     ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                     : 1.0 / (tau - std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const Complex s_col = s * std::conj(phase);  // right factor, columns
                const Complex s_row = s * phase;             // left factor, rows

                // A <- A U with U = [[c, s], [-s conj(phase), c conj(phase)]]
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex akp = a[k * n + p];
                    const Complex akq = a[k * n + q];
                    a[k * n + p] = c * akp - s_col * akq;
                    a[k * n + q] = s * akp + c * std::conj(phase) * akq;
                }
                // A <- U^dagger A
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex apk = a[p * n + k];
                    const Complex aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s_row * aqk;
                    a[q * n + k] = s * apk + c * phase * aqk;
                }
                // Pin the annihilated pair and keep the diagonal real.
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                a[p * n + p] = Complex(a[p * n + p].real(), 0.0);
                a[q * n + q] = Complex(a[q * n + q].real(), 0.0);

                if (v) {
                    std::vector<Complex>& vv = *v;
                    for (std::size_t k = 0; k < n; ++k) {
                        const Complex vkp = vv[k * n + p];
                        const Complex vkq = vv[k * n + q];
                        vv[k * n + p] = c * vkp - s_col * vkq;
                        vv[k * n + q] = s * vkp + c * std::conj(phase) * vkq;
                    }
                }
            }
        }
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                off = std::max(off, std::abs(a[p * n + q]));
            }
        }
        if (off <= conv_tol) {
            return;
        }
    }
    throw Error("Jacobi eigensolver failed to converge");
}

// Validates and returns the symmetrized entries (m + m^dagger)/2.
std::vector<Complex> checked_hermitian_entries(const ComplexMatrix& m) {
    if (!m.is_square()) {
        throw NotSquare("hermitian_spectrum requires a square matrix");
    }
    if (!m.is_finite()) {
        throw Error("matrix has non-finite entries");
    }
    if (m.hermiticity_deviation() > kHermiticityTol) {
        throw NotHermitian("matrix deviates from Hermitian beyond 1e-9");
    }
    const std::size_t n = m.rows();
    std::vector<Complex> a(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            a[i * n + j] = 0.5 * (m(i, j) + std::conj(m(j, i)));
        }
    }
    return a;
}

}  // namespace

Eigensystem hermitian_eigensystem(const ComplexMatrix& m) {
    const std::size_t n = m.rows();
    std::vector<Complex> a = checked_hermitian_entries(m);
    std::vector<Complex> v;
    jacobi_diagonalize(a, n, &v);

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return a[x * n + x].real() < a[y * n + y].real();
    });

    Eigensystem out;
    out.eigenvalues.resize(n);
    out.eigenvectors = ComplexMatrix(n, n);
    for (std::size_t col = 0; col < n; ++col) {
        const std::size_t src = order[col];
        out.eigenvalues[col] = a[src * n + src].real();
        for (std::size_t row = 0; row < n; ++row) {
            out.eigenvectors(row, col) = v[row * n + src];
        }
    }
    return out;
}

Spectrum hermitian_spectrum(const ComplexMatrix& m) {
    const std::size_t n = m.rows();
    std::vector<Complex> a = checked_hermitian_entries(m);
    jacobi_diagonalize(a, n, nullptr);

    Spectrum out;
    out.eigenvalues.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        out.eigenvalues[i] = a[i * n + i].real();
    }
    std::sort(out.eigenvalues.begin(), out.eigenvalues.end());
    return out;
}

double trace_norm_hermitian(const ComplexMatrix& m) {
    const Spectrum s = hermitian_spectrum(m);
    double norm = 0.0;
    for (double lambda : s.eigenvalues) {
        norm += std::abs(lambda);
    }
    return norm;
}

}  // namespace ame
