#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "ame/complex_matrix.hpp"
#include "ame/spectra.hpp"
#include "test_helpers.hpp"

using namespace ame;
using testutil::random_hermitian;
using testutil::random_matrix;
using testutil::random_unitary;

TEST_CASE("kron of identities is the identity") {
    const ComplexMatrix i2 = ComplexMatrix::identity(2);
    CHECK(kron(i2, i2).max_abs_diff(ComplexMatrix::identity(4)) == 0.0);
}

TEST_CASE("kron(X, Z) entry table") {
    const ComplexMatrix k = kron(pauli_x(), pauli_z());
    REQUIRE(k.rows() == 4);
    REQUIRE(k.cols() == 4);
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            Complex expected(0.0, 0.0);
            if (i == 0 && j == 2) expected = 1.0;
            if (i == 1 && j == 3) expected = -1.0;
            if (i == 2 && j == 0) expected = 1.0;
            if (i == 3 && j == 1) expected = -1.0;
            CHECK(std::abs(k(i, j) - expected) == 0.0);
        }
    }
}

TEST_CASE("kron of basis projectors lands on the right diagonal slot") {
    const ComplexMatrix k = kron(basis_projector(0), basis_projector(1));
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(k(i, i).real() == (i == 1 ? 1.0 : 0.0));
    }
    CHECK(k.max_abs() == 1.0);
}

TEST_CASE("kron mixed-product identity on random 2x2 inputs") {
    std::mt19937 rng(81231);
    for (int iter = 0; iter < 50; ++iter) {
        const ComplexMatrix a = random_matrix(2, 2, rng);
        const ComplexMatrix b = random_matrix(2, 2, rng);
        const ComplexMatrix c = random_matrix(2, 2, rng);
        const ComplexMatrix d = random_matrix(2, 2, rng);
        const ComplexMatrix lhs = matmul(kron(a, b), kron(c, d));
        const ComplexMatrix rhs = kron(matmul(a, c), matmul(b, d));
        CHECK(lhs.max_abs_diff(rhs) <= 1e-12);
    }
}

TEST_CASE("matrix algebra basics") {
    CHECK(dagger(pauli_y()).max_abs_diff(pauli_y()) == 0.0);
    CHECK(trace(ComplexMatrix::identity(4)) == Complex(4.0, 0.0));
    CHECK(matmul(pauli_x(), pauli_x()).max_abs_diff(ComplexMatrix::identity(2)) == 0.0);

    CHECK_THROWS_AS(matmul(ComplexMatrix(2, 3), ComplexMatrix(2, 3)), DimensionMismatch);
    CHECK_THROWS_AS(add(ComplexMatrix(2, 2), ComplexMatrix(3, 3)), DimensionMismatch);
    CHECK_THROWS_AS(trace(ComplexMatrix(2, 3)), NotSquare);
    CHECK_THROWS_AS(ComplexMatrix(2, 2, std::vector<Complex>(3)), DimensionMismatch);
}

TEST_CASE("hermitian_spectrum of small fixed matrices") {
    const Spectrum id2 = hermitian_spectrum(ComplexMatrix::identity(2));
    CHECK(id2.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(id2.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-12));

    const Spectrum sx = hermitian_spectrum(pauli_x());
    CHECK(sx.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(sx.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-12));

    // Bell projector: rank one, spectrum {0, 0, 0, 1}.
    ComplexMatrix bell(4, 4);
    bell(0, 0) = 0.5;
    bell(0, 3) = 0.5;
    bell(3, 0) = 0.5;
    bell(3, 3) = 0.5;
    const Spectrum sb = hermitian_spectrum(bell);
    for (int i = 0; i < 3; ++i) {
        CHECK(std::abs(sb.eigenvalues[i]) <= 1e-12);
    }
    CHECK(sb.eigenvalues[3] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("hermitian_spectrum rejects bad input") {
    CHECK_THROWS_AS(hermitian_spectrum(ComplexMatrix(2, 3)), NotSquare);

    ComplexMatrix skew(2, 2);
    skew(0, 1) = Complex(0.0, 1.0);
    skew(1, 0) = Complex(0.0, 1.0);  // conj would need -i
    CHECK_THROWS_AS(hermitian_spectrum(skew), NotHermitian);

    // Deviation right at the boundary is accepted.
    ComplexMatrix near(2, 2);
    near(0, 1) = Complex(0.5, 0.0);
    near(1, 0) = Complex(0.5 + 0.9e-9, 0.0);
    CHECK_NOTHROW(hermitian_spectrum(near));
}

TEST_CASE("eigenvalue sum matches trace, eigendecomposition reconstructs") {
    std::mt19937 rng(424242);
    for (std::size_t n : {2u, 3u, 5u, 8u, 16u, 64u}) {
        const ComplexMatrix m = random_hermitian(n, rng);
        const Eigensystem es = hermitian_eigensystem(m);

        double sum = 0.0;
        for (double lambda : es.eigenvalues) {
            sum += lambda;
        }
        CHECK(std::abs(sum - trace(m).real()) <= 1e-9);

        // V diag V^dagger == m
        ComplexMatrix vd = es.eigenvectors;
        for (std::size_t col = 0; col < n; ++col) {
            for (std::size_t row = 0; row < n; ++row) {
                vd(row, col) *= es.eigenvalues[col];
            }
        }
        const ComplexMatrix rebuilt = matmul(vd, dagger(es.eigenvectors));
        CHECK(rebuilt.max_abs_diff(m) <= 1e-9);

        // ascending order
        for (std::size_t i = 1; i < n; ++i) {
            CHECK(es.eigenvalues[i - 1] <= es.eigenvalues[i]);
        }
    }
}

TEST_CASE("spectrum is invariant under unitary conjugation") {
    std::mt19937 rng(7771);
    for (int iter = 0; iter < 10; ++iter) {
        const std::size_t n = 6;
        const ComplexMatrix m = random_hermitian(n, rng);
        const ComplexMatrix u = random_unitary(n, rng);
        const ComplexMatrix conjugated = matmul(matmul(u, m), dagger(u));
        const Spectrum s1 = hermitian_spectrum(m);
        const Spectrum s2 = hermitian_spectrum(conjugated);
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(std::abs(s1.eigenvalues[i] - s2.eigenvalues[i]) <= 1e-9);
        }
    }
}

TEST_CASE("trace norm bounds and fixed values") {
    CHECK(trace_norm_hermitian(pauli_z()) == doctest::Approx(2.0).epsilon(1e-12));

    // Partial transpose of the Bell state: spectrum {-1/2, 1/2, 1/2, 1/2}.
    ComplexMatrix bell_pt(4, 4);
    bell_pt(0, 0) = 0.5;
    bell_pt(3, 3) = 0.5;
    bell_pt(1, 2) = 0.5;
    bell_pt(2, 1) = 0.5;
    CHECK(trace_norm_hermitian(bell_pt) == doctest::Approx(2.0).epsilon(1e-12));

    std::mt19937 rng(99123);
    for (int iter = 0; iter < 30; ++iter) {
        const ComplexMatrix m = random_hermitian(5, rng);
        CHECK(trace_norm_hermitian(m) >= std::abs(trace(m).real()) - 1e-12);
    }
}

TEST_CASE("PSD matrices have nonnegative spectra") {
    std::mt19937 rng(5150);
    for (int iter = 0; iter < 20; ++iter) {
        const ComplexMatrix a = random_matrix(6, 6, rng);
        const ComplexMatrix psd = matmul(a, dagger(a));
        const Spectrum s = hermitian_spectrum(psd);
        CHECK(s.eigenvalues.front() >= -1e-9);
    }
}

TEST_CASE("zero and 1x1 matrices diagonalize trivially") {
    const Spectrum zero = hermitian_spectrum(ComplexMatrix(3, 3));
    for (double lambda : zero.eigenvalues) {
        CHECK(lambda == 0.0);
    }
    ComplexMatrix one(1, 1);
    one(0, 0) = -2.5;
    CHECK(hermitian_spectrum(one).eigenvalues[0] == -2.5);
}
