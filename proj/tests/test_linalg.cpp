#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "spinflip/catalog.hpp"
#include "spinflip/harness.hpp"
#include "spinflip/linalg.hpp"
#include "spinflip/state.hpp"

using namespace spinflip;

namespace {

ComplexMatrix random_matrix(std::size_t d, std::uint64_t seed) {
    Rng rng(seed);
    ComplexMatrix m(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) m(i, j) = rng.complex_gaussian();
    return m;
}

ComplexMatrix random_hermitian(std::size_t d, std::uint64_t seed) {
    ComplexMatrix g = random_matrix(d, seed);
    return matmul(g, adjoint(g)) - matmul(adjoint(g), g) + g + adjoint(g);
}

ComplexMatrix random_psd(std::size_t d, std::uint64_t seed) {
    ComplexMatrix g = random_matrix(d, seed);
    return matmul(g, adjoint(g));
}

}  // namespace

TEST_CASE("kron basics") {
    const ComplexMatrix i2 = ComplexMatrix::identity(2);
    CHECK(max_abs_diff(kron(i2, i2), ComplexMatrix::identity(4)) == 0.0);

    const ComplexMatrix d = kron(pauli(0), pauli(3));
    ComplexMatrix expect(4);
    expect(0, 0) = 1.0;
    expect(1, 1) = -1.0;
    expect(2, 2) = 1.0;
    expect(3, 3) = -1.0;
    CHECK(max_abs_diff(d, expect) == 0.0);
}

TEST_CASE("kron of sigma2 with itself maps e00 to -e11") {
    const ComplexMatrix yy = kron(pauli(2), pauli(2));
    // Column 0 of the product is the image of the basis vector e00.
    CHECK(yy(0, 0) == cplx(0.0));
    CHECK(yy(1, 0) == cplx(0.0));
    CHECK(yy(2, 0) == cplx(0.0));
    CHECK(yy(3, 0) == cplx(-1.0));
}

TEST_CASE("kron associativity is entrywise exact") {
    // Small-integer entries keep the triple products exact in double, so the
    // two association orders must agree bit for bit.
    auto integer_matrix = [](std::size_t d, int shift) {
        ComplexMatrix m(d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                m(i, j) = cplx(static_cast<double>((7 * i + 3 * j + shift) % 5) - 2.0,
                               static_cast<double>((5 * i + j + shift) % 7) - 3.0);
        return m;
    };
    const ComplexMatrix a = integer_matrix(2, 1);
    const ComplexMatrix b = integer_matrix(3, 2);
    const ComplexMatrix c = integer_matrix(2, 3);
    const ComplexMatrix lhs = kron(kron(a, b), c);
    const ComplexMatrix rhs = kron(a, kron(b, c));
    CHECK(max_abs_diff(lhs, rhs) == 0.0);
}

TEST_CASE("kron dimension cap") {
    const std::size_t saved = max_dim();
    set_max_dim(4);
    const ComplexMatrix i4 = ComplexMatrix::identity(4);
    CHECK_THROWS_AS(kron(i4, ComplexMatrix::identity(2)), validation_error);
    set_max_dim(saved);
}

TEST_CASE("matmul identities") {
    CHECK(max_abs_diff(matmul(pauli(0), pauli(1)), pauli(1)) == 0.0);
    CHECK(max_abs_diff(matmul(pauli(1), pauli(1)), pauli(0)) == 0.0);
    // sigma1 sigma2 = i sigma3
    const ComplexMatrix prod = matmul(pauli(1), pauli(2));
    ComplexMatrix expect = pauli(3);
    expect *= cplx(0.0, 1.0);
    CHECK(max_abs_diff(prod, expect) < 1e-15);

    CHECK_THROWS_AS(matmul(pauli(1), ComplexMatrix::identity(4)), validation_error);
}

TEST_CASE("adjoint") {
    CHECK(max_abs_diff(adjoint(pauli(2)), pauli(2)) == 0.0);
    ComplexMatrix m = ComplexMatrix::identity(2);
    m *= cplx(0.0, 1.0);
    ComplexMatrix expect = ComplexMatrix::identity(2);
    expect *= cplx(0.0, -1.0);
    CHECK(max_abs_diff(adjoint(m), expect) == 0.0);

    const ComplexMatrix r = random_matrix(5, 21);
    CHECK(max_abs_diff(adjoint(adjoint(r)), r) == 0.0);
}

TEST_CASE("trace") {
    CHECK(trace(ComplexMatrix::identity(4)) == cplx(4.0));
    CHECK(trace(pauli(3)) == cplx(0.0));

    // For rho = |00><00| the spin flip is |11><11|; the projectors are
    // orthogonal so the overlap trace vanishes.
    const DensityMatrix rho = pure_density(basis_product({0, 0}));
    const DensityMatrix flipped = spin_flip(rho);
    CHECK(std::abs(trace(matmul(rho.mat(), flipped.mat()))) < 1e-15);
}

TEST_CASE("trace is cyclic") {
    for (std::uint64_t s = 0; s < 10; ++s) {
        const ComplexMatrix a = random_matrix(6, 100 + s);
        const ComplexMatrix b = random_matrix(6, 200 + s);
        const cplx ab = trace(matmul(a, b));
        const cplx ba = trace(matmul(b, a));
        CHECK(std::abs(ab - ba) < 1e-12);
    }
}

TEST_CASE("hermitian_eigen on diagonal and Pauli input") {
    ComplexMatrix d(3);
    d(0, 0) = 3.0;
    d(1, 1) = 1.0;
    d(2, 2) = 2.0;
    const EigenSystem es = hermitian_eigen(d);
    CHECK(es.values[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(es.values[1] == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(es.values[2] == doctest::Approx(3.0).epsilon(1e-12));

    const EigenSystem ex = hermitian_eigen(pauli(1));
    CHECK(ex.values[0] == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(ex.values[1] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("hermitian_eigen rejects non-Hermitian input") {
    ComplexMatrix m(2);
    m(0, 1) = 1.0;
    CHECK_THROWS_AS(hermitian_eigen(m), validation_error);
}

TEST_CASE("hermitian_eigen reconstruction and unitarity on random input") {
    for (std::uint64_t s = 0; s < 8; ++s) {
        const std::size_t d = std::size_t{1} << (1 + s % 4);  // up to 4 qubits
        const ComplexMatrix h = random_hermitian(d, 300 + s);
        const EigenSystem es = hermitian_eigen(h);

        ComplexMatrix recon(d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                cplx sum = 0.0;
                for (std::size_t k = 0; k < d; ++k)
                    sum += es.vectors(i, k) * es.values[k] * std::conj(es.vectors(j, k));
                recon(i, j) = sum;
            }
        CHECK(max_abs_diff(recon, h) < 1e-10 * std::max(1.0, max_abs(h)));

        const ComplexMatrix vhv = matmul(adjoint(es.vectors), es.vectors);
        CHECK(max_abs_diff(vhv, ComplexMatrix::identity(d)) < 1e-10);
    }
}

TEST_CASE("eigenvalues of the concurrence product for a pure Bell state") {
    // rho = rho~ = P[Phi+]; sqrt(rho) rho~ sqrt(rho) = rho, a rank-1 projector.
    const DensityMatrix rho = pure_density(bell_state(BellState::phi_plus));
    const ComplexMatrix root = psd_sqrt(rho.mat());
    const ComplexMatrix prod =
        matmul(matmul(root, spin_flip_matrix(rho.mat())), root);
    const EigenSystem es = hermitian_eigen(prod);
    CHECK(es.values[0] == doctest::Approx(0.0).epsilon(1e-10));
    CHECK(es.values[1] == doctest::Approx(0.0).epsilon(1e-10));
    CHECK(es.values[2] == doctest::Approx(0.0).epsilon(1e-10));
    CHECK(es.values[3] == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("psd_sqrt") {
    CHECK(max_abs_diff(psd_sqrt(ComplexMatrix::identity(3)), ComplexMatrix::identity(3)) <
          1e-12);

    ComplexMatrix d(2);
    d(0, 0) = 4.0;
    d(1, 1) = 9.0;
    ComplexMatrix expect(2);
    expect(0, 0) = 2.0;
    expect(1, 1) = 3.0;
    CHECK(max_abs_diff(psd_sqrt(d), expect) < 1e-12);

    // Projectors are their own square root.
    const ComplexMatrix p = pure_density(bell_state(BellState::psi_minus)).mat();
    CHECK(max_abs_diff(psd_sqrt(p), p) < 1e-10);

    ComplexMatrix neg(2);
    neg(0, 0) = -1.0;
    neg(1, 1) = 1.0;
    CHECK_THROWS_AS(psd_sqrt(neg), validation_error);
}

TEST_CASE("psd_sqrt squares back on random PSD input") {
    for (std::uint64_t s = 0; s < 6; ++s) {
        const ComplexMatrix h = random_psd(8, 400 + s);
        const ComplexMatrix r = psd_sqrt(h);
        CHECK(max_abs_diff(matmul(r, r), h) < 1e-9 * std::max(1.0, max_abs(h)));
    }
}
