#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <random>

#include "ame/measures.hpp"
#include "ame/spectra.hpp"
#include "ame/states.hpp"
#include "test_helpers.hpp"

using namespace ame;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

// Independent transcription of the 16-term codeword lists; indices are
// the ket strings read as binary, qubit 1 first.
struct Term {
    unsigned index;
    double coeff;
};

const Term kZeroL[] = {
    {0, +0.25},  {18, +0.25}, {9, +0.25},  {20, +0.25}, {10, +0.25}, {27, -0.25},
    {6, -0.25},  {24, -0.25}, {29, -0.25}, {3, -0.25},  {30, -0.25}, {15, -0.25},
    {17, -0.25}, {12, -0.25}, {23, -0.25}, {5, +0.25},
};

const Term kOneL[] = {
    {31, +0.25}, {13, +0.25}, {22, +0.25}, {11, +0.25}, {21, +0.25}, {4, -0.25},
    {25, -0.25}, {7, -0.25},  {2, -0.25},  {28, -0.25}, {1, -0.25},  {16, -0.25},
    {14, -0.25}, {19, -0.25}, {8, -0.25},  {26, +0.25},
};

void check_term_list(const PureState& s, const Term* terms, std::size_t count) {
    std::vector<double> expected(s.dim(), 0.0);
    for (std::size_t k = 0; k < count; ++k) {
        expected[terms[k].index] = terms[k].coeff;
    }
    for (std::size_t i = 0; i < s.dim(); ++i) {
        CHECK(s.amplitudes()[i].imag() == 0.0);
        CHECK(s.amplitudes()[i].real() == doctest::Approx(expected[i]).epsilon(1e-15));
    }
}

}  // namespace

TEST_CASE("bell state amplitudes") {
    const PureState s = bell();
    REQUIRE(s.num_qubits() == 2);
    CHECK(s.amplitudes()[0].real() == doctest::Approx(kInvSqrt2));
    CHECK(std::abs(s.amplitudes()[1]) == 0.0);
    CHECK(std::abs(s.amplitudes()[2]) == 0.0);
    CHECK(s.amplitudes()[3].real() == doctest::Approx(kInvSqrt2));
    CHECK(s.norm_squared() == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("ghz3 amplitudes and entropies") {
    const PureState s = ghz3();
    for (std::size_t i = 0; i < 8; ++i) {
        const double expected = (i == 0 || i == 7) ? kInvSqrt2 : 0.0;
        CHECK(std::abs(s.amplitudes()[i] - Complex(expected, 0.0)) == 0.0);
    }
    const DensityMatrix rho = density(s);
    for (std::size_t q = 1; q <= 3; ++q) {
        CHECK(von_neumann_entropy(partial_trace(rho, {q})) ==
              doctest::Approx(1.0).epsilon(1e-12));
    }
    CHECK(von_neumann_entropy(rho) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("five-qubit codewords match their term lists") {
    check_term_list(ame5_logical_zero(), kZeroL, 16);
    check_term_list(ame5_logical_one(), kOneL, 16);
}

TEST_CASE("codewords are orthonormal") {
    const PureState zero = ame5_logical_zero();
    const PureState one = ame5_logical_one();
    Complex overlap(0.0, 0.0);
    for (std::size_t i = 0; i < zero.dim(); ++i) {
        overlap += std::conj(zero.amplitudes()[i]) * one.amplitudes()[i];
    }
    CHECK(std::abs(overlap) <= 1e-15);
    CHECK(zero.norm_squared() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(one.norm_squared() == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("ame6 stacks the codewords with the fresh qubit first") {
    const PureState s = ame6();
    REQUIRE(s.num_qubits() == 6);
    CHECK(s.amplitudes()[0].real() == doctest::Approx(0.25 * kInvSqrt2).epsilon(1e-15));
    const PureState zero = ame5_logical_zero();
    const PureState one = ame5_logical_one();
    for (std::size_t i = 0; i < 32; ++i) {
        CHECK(std::abs(s.amplitudes()[i] - kInvSqrt2 * zero.amplitudes()[i]) <= 1e-15);
        CHECK(std::abs(s.amplitudes()[32 + i] - kInvSqrt2 * one.amplitudes()[i]) <= 1e-15);
    }
    CHECK(partial_trace(density(s), {1})
              .matrix()
              .max_abs_diff(scale(ComplexMatrix::identity(2), 0.5)) <= 1e-12);
}

TEST_CASE("catalog states are AME, the four-qubit GHZ is not") {
    CHECK(is_ame(bell()));
    CHECK(is_ame(ghz3()));
    CHECK(is_ame(ame5_logical_zero()));
    CHECK(is_ame(ame5_logical_one()));
    CHECK(is_ame(ame6()));
    CHECK(is_ame(phi5_prime()));
    CHECK_FALSE(is_ame(testutil::ghz(4)));
}

TEST_CASE("hadamard on qubit 2 of bell gives the +/- expansion") {
    const PureState s = apply_single_qubit_unitary(bell(), 2, hadamard());
    CHECK(s.amplitudes()[0].real() == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(s.amplitudes()[1].real() == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(s.amplitudes()[2].real() == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(s.amplitudes()[3].real() == doctest::Approx(-0.5).epsilon(1e-15));
}

TEST_CASE("single-qubit unitary basics") {
    const PureState zz = PureState(2, {1.0, 0.0, 0.0, 0.0});
    const PureState flipped = apply_single_qubit_unitary(zz, 1, pauli_x());
    CHECK(std::abs(flipped.amplitudes()[2] - Complex(1.0, 0.0)) == 0.0);

    const PureState same = apply_single_qubit_unitary(bell(), 1, ComplexMatrix::identity(2));
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(std::abs(same.amplitudes()[i] - bell().amplitudes()[i]) == 0.0);
    }

    CHECK_THROWS_AS(apply_single_qubit_unitary(bell(), 0, pauli_x()), QubitOutOfRange);
    CHECK_THROWS_AS(apply_single_qubit_unitary(bell(), 3, pauli_x()), QubitOutOfRange);
    ComplexMatrix not_unitary(2, 2);
    not_unitary(0, 0) = 2.0;
    not_unitary(1, 1) = 1.0;
    CHECK_THROWS_AS(apply_single_qubit_unitary(bell(), 1, not_unitary), NotUnitary);
}

TEST_CASE("unitaries preserve the norm and the reduction spectra") {
    std::mt19937 rng(31337);
    for (int iter = 0; iter < 10; ++iter) {
        const PureState s = testutil::random_pure(4, rng);
        const std::size_t qubit = 1 + (rng() % 4);
        const ComplexMatrix u = testutil::random_unitary(2, rng);
        const PureState t = apply_single_qubit_unitary(s, qubit, u);
        CHECK(t.norm_squared() == doctest::Approx(1.0).epsilon(1e-12));

        // Entanglement spectrum of any cut is untouched.
        for (std::size_t keep = 1; keep <= 4; ++keep) {
            const Spectrum before = hermitian_spectrum(partial_trace(density(s), {keep}).matrix());
            const Spectrum after = hermitian_spectrum(partial_trace(density(t), {keep}).matrix());
            for (std::size_t i = 0; i < before.eigenvalues.size(); ++i) {
                CHECK(std::abs(before.eigenvalues[i] - after.eigenvalues[i]) <= 1e-9);
            }
        }
    }
}

TEST_CASE("phi5_prime is the hadamard image of the logical zero") {
    const PureState direct = phi5_prime();
    const PureState manual = apply_single_qubit_unitary(ame5_logical_zero(), 5, hadamard());
    for (std::size_t i = 0; i < direct.dim(); ++i) {
        CHECK(std::abs(direct.amplitudes()[i] - manual.amplitudes()[i]) == 0.0);
    }
    CHECK(direct.norm_squared() == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("density of a basis state and of bell") {
    const PureState zero(1, {1.0, 0.0});
    const DensityMatrix rho0 = density(zero);
    CHECK(rho0.matrix()(0, 0) == Complex(1.0, 0.0));
    CHECK(rho0.matrix()(1, 1) == Complex(0.0, 0.0));

    const Spectrum s = hermitian_spectrum(density(bell()).matrix());
    for (int i = 0; i < 3; ++i) {
        CHECK(std::abs(s.eigenvalues[i]) <= 1e-12);
    }
    CHECK(s.eigenvalues[3] == doctest::Approx(1.0).epsilon(1e-12));

    CHECK(trace(density(ame6()).matrix()).real() == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("bell reduces to the maximally mixed qubit") {
    const DensityMatrix reduced = partial_trace(density(bell()), {1});
    CHECK(reduced.matrix().max_abs_diff(scale(ComplexMatrix::identity(2), 0.5)) <= 1e-15);
}

TEST_CASE("state JSON round trip") {
    std::mt19937 rng(9182);
    const PureState s = testutil::random_pure(3, rng);
    const PureState back = state_from_json(state_to_json(s));
    REQUIRE(back.num_qubits() == 3);
    for (std::size_t i = 0; i < s.dim(); ++i) {
        CHECK(std::abs(back.amplitudes()[i] - s.amplitudes()[i]) <= 1e-16);
    }
}

TEST_CASE("state JSON rejects malformed input") {
    CHECK_THROWS_AS(state_from_json("not json"), ConfigError);
    CHECK_THROWS_AS(state_from_json("{\"num_qubits\": 2}"), ConfigError);
    CHECK_THROWS_AS(state_from_json("{\"num_qubits\": 2, \"amplitudes\": [[1, 0]]}"),
                    ConfigError);
    // Unnormalized amplitudes.
    CHECK_THROWS_AS(
        state_from_json(
            "{\"num_qubits\": 1, \"amplitudes\": [[0.8, 0.0], [0.7, 0.0]]}"),
        ConfigError);
}

TEST_CASE("constructors reject malformed amplitude vectors") {
    CHECK_THROWS_AS(PureState(2, {1.0, 0.0}), DimensionMismatch);
    CHECK_THROWS_AS(PureState(1, {0.9, 0.0}), Error);
}

TEST_CASE("named_state covers the sweep catalog") {
    for (const std::string& name : named_state_list()) {
        REQUIRE(named_state(name).has_value());
        CHECK(is_ame(*named_state(name)));
    }
    CHECK_FALSE(named_state("nope").has_value());
}
