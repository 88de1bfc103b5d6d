#include <doctest.h>

#include <random>

#include "polyent/linalg.hpp"
#include "polyent/reproduce.hpp"
#include "polyent/states.hpp"

using namespace polyent;

namespace {

// Seeded Hermitian test matrix with entries of order 1.
CMatrix random_hermitian(Eigen::Index d, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto u = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53 - 0.5; };
    CMatrix g(d, d);
    for (Eigen::Index i = 0; i < d; ++i)
        for (Eigen::Index j = 0; j < d; ++j) g(i, j) = Complex(u(), u());
    return 0.5 * (g + g.adjoint().eval());
}

CMatrix random_psd(Eigen::Index d, std::uint64_t seed) {
    const CMatrix h = random_hermitian(d, seed);
    return h * h.adjoint();
}

} // namespace

TEST_CASE("hermitian_eig on diagonal and identity input") {
    const auto id = hermitian_eig(CMatrix::Identity(4, 4));
    for (int k = 0; k < 4; ++k) CHECK(id.values[k] == doctest::Approx(1.0).epsilon(1e-12));

    CMatrix d2 = CMatrix::Zero(2, 2);
    d2(0, 0) = 2.0 / 3.0;
    d2(1, 1) = 1.0 / 3.0;
    const auto eig = hermitian_eig(d2);
    CHECK(eig.values[0] == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(eig.values[1] == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("hermitian_eig descending order, orthonormality, reconstruction") {
    for (std::uint64_t seed : {11u, 12u, 13u, 14u}) {
        CMatrix m = random_hermitian(8, seed);
        m /= m.norm();  // unit Frobenius norm
        const auto eig = hermitian_eig(m);
        for (Eigen::Index k = 0; k + 1 < eig.values.size(); ++k)
            CHECK(eig.values[k] >= eig.values[k + 1]);
        CHECK((eig.vectors.adjoint() * eig.vectors - CMatrix::Identity(8, 8))
                  .cwiseAbs()
                  .maxCoeff() <= 1e-10);
        const CMatrix rebuilt =
            eig.vectors * eig.values.asDiagonal() * eig.vectors.adjoint();
        CHECK((rebuilt - m).norm() <= 1e-10);
        CHECK(m.trace().real() == doctest::Approx(eig.values.sum()).epsilon(1e-10));
    }
}

TEST_CASE("hermitian_eig of the W state reduced density matrix") {
    const DensityMatrix rho = density(w3_state());
    const CMatrix rho_a = partial_trace(rho.matrix(), 3, {0});
    const auto eig = hermitian_eig(rho_a);
    CHECK(eig.values[0] == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(eig.values[1] == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("hermitian_eig rejects non-Hermitian input") {
    CMatrix m = CMatrix::Zero(2, 2);
    m(0, 1) = Complex(1.0, 0.0);  // m(1,0) stays 0
    CHECK_THROWS_AS(hermitian_eig(m), NotHermitian);
}

TEST_CASE("matrix_sqrt_psd closed cases") {
    CHECK((matrix_sqrt_psd(CMatrix::Identity(2, 2)) - CMatrix::Identity(2, 2)).norm() <= 1e-12);

    CMatrix d = CMatrix::Zero(2, 2);
    d(0, 0) = 4.0;
    d(1, 1) = 9.0;
    const CMatrix s = matrix_sqrt_psd(d);
    CHECK(s(0, 0).real() == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(s(1, 1).real() == doctest::Approx(3.0).epsilon(1e-12));

    const CMatrix mm = 0.25 * CMatrix::Identity(4, 4);
    const CMatrix root = matrix_sqrt_psd(mm);
    CHECK((root - 0.5 * CMatrix::Identity(4, 4)).norm() <= 1e-12);
}

TEST_CASE("matrix_sqrt_psd reconstructs random PSD matrices") {
    for (std::uint64_t seed : {21u, 22u, 23u}) {
        const CMatrix m = random_psd(16, seed);
        const CMatrix s = matrix_sqrt_psd(m);
        CHECK((s * s - m).norm() <= 1e-8 * std::max(1.0, m.norm()));
    }
}

TEST_CASE("matrix_sqrt_psd rejects indefinite input") {
    CMatrix m = CMatrix::Identity(2, 2);
    m(1, 1) = -0.5;
    CHECK_THROWS_AS(matrix_sqrt_psd(m), NotPSD);
}

TEST_CASE("partial_trace product, W and Bell cases") {
    // |00><00| keep {0} -> |0><0|
    CVector v00 = CVector::Zero(4);
    v00[0] = 1.0;
    const CMatrix r0 = partial_trace(CMatrix(v00 * v00.adjoint()), 2, {0});
    CHECK(r0(0, 0).real() == doctest::Approx(1.0));
    CHECK(std::abs(r0(1, 1)) <= 1e-15);

    // W3 keep {0} -> diag(2/3, 1/3)
    const CMatrix ra = partial_trace(density(w3_state()).matrix(), 3, {0});
    CHECK(ra(0, 0).real() == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(ra(1, 1).real() == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(std::abs(ra(0, 1)) <= 1e-14);

    // Bell keep {1} -> maximally mixed
    CVector bell = CVector::Zero(4);
    bell[0] = bell[3] = 1.0 / std::sqrt(2.0);
    const CMatrix rb = partial_trace(CMatrix(bell * bell.adjoint()), 2, {1});
    CHECK((rb - 0.5 * CMatrix::Identity(2, 2)).cwiseAbs().maxCoeff() <= 1e-14);
}

TEST_CASE("partial_trace validates indices and preserves density properties") {
    const CMatrix rho = density(w3_state()).matrix();
    CHECK_THROWS_AS(partial_trace(rho, 3, {3}), BadIndex);
    CHECK_THROWS_AS(partial_trace(rho, 3, {0, 0}), BadIndex);
    CHECK_THROWS_AS(partial_trace(rho, 3, {}), BadIndex);

    const CMatrix red = partial_trace(rho, 3, {0, 2});
    CHECK(is_hermitian(red, 1e-12));
    CHECK(red.trace().real() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("partial_trace composes") {
    for (std::uint64_t seed : {31u, 32u}) {
        CMatrix m = random_psd(8, seed);
        m /= m.trace().real();
        const CMatrix once = partial_trace(m, 3, {0});
        const CMatrix in_two_steps = partial_trace(partial_trace(m, 3, {0, 1}), 2, {0});
        CHECK((once - in_two_steps).cwiseAbs().maxCoeff() <= 1e-12);
    }
}

TEST_CASE("tensor products") {
    const CMatrix i4 = tensor(CMatrix::Identity(2, 2), CMatrix::Identity(2, 2));
    CHECK((i4 - CMatrix::Identity(4, 4)).norm() <= 1e-15);

    CMatrix sy = CMatrix::Zero(2, 2);
    sy(0, 1) = Complex(0.0, -1.0);
    sy(1, 0) = Complex(0.0, 1.0);
    const CMatrix yy = tensor(sy, sy);
    CMatrix expect = CMatrix::Zero(4, 4);
    expect(0, 3) = -1.0;
    expect(1, 2) = 1.0;
    expect(2, 1) = 1.0;
    expect(3, 0) = -1.0;
    CHECK((yy - expect).cwiseAbs().maxCoeff() <= 1e-15);

    CMatrix a = CMatrix::Zero(2, 2), b = CMatrix::Zero(2, 2);
    a(0, 0) = 1.0;
    a(1, 1) = 2.0;
    b(0, 0) = 3.0;
    b(1, 1) = 4.0;
    const CMatrix ab = tensor(a, b);
    CHECK(ab(0, 0).real() == doctest::Approx(3.0));
    CHECK(ab(1, 1).real() == doctest::Approx(4.0));
    CHECK(ab(2, 2).real() == doctest::Approx(6.0));
    CHECK(ab(3, 3).real() == doctest::Approx(8.0));
}
