#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "spinflip/catalog.hpp"
#include "spinflip/harness.hpp"

using namespace spinflip;

TEST_CASE("rng determinism") {
    Rng a(42), b(42);
    for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());

    const StateVector s1 = random_pure_state(3, 42);
    const StateVector s2 = random_pure_state(3, 42);
    for (std::size_t i = 0; i < s1.dim(); ++i) CHECK(s1[i] == s2[i]);

    CHECK(Rng::derive_seed(1, 0) != Rng::derive_seed(1, 1));
    CHECK(Rng::derive_seed(1, 0) != Rng::derive_seed(2, 0));
}

TEST_CASE("random_pure_state is normalized") {
    for (std::uint64_t s = 0; s < 100; ++s) {
        const StateVector psi = random_pure_state(2, s);
        double norm_sq = 0.0;
        for (std::size_t i = 0; i < psi.dim(); ++i) norm_sq += std::norm(psi[i]);
        CHECK(std::abs(std::sqrt(norm_sq) - 1.0) < 1e-12);
    }
}

TEST_CASE("random_density ranks") {
    CHECK(purity(random_density(3, 1, 7)) == doctest::Approx(1.0).epsilon(1e-10));
    for (std::uint64_t s = 0; s < 10; ++s)
        CHECK(purity(random_density(2, 4, 100 + s)) < 1.0 - 1e-6);
    for (std::uint64_t s = 0; s < 10; ++s) {
        const AnalysisReport r = analyze(random_density(3, 4, 200 + s));
        CHECK(r.residual_symmetry <= 1e-10);
    }
    CHECK_THROWS_AS(random_density(2, 5, 1), validation_error);
    CHECK_THROWS_AS(random_density(2, 0, 1), validation_error);
}

TEST_CASE("random_local_unitary factors") {
    const LocalOperator op = random_local_unitary(3, 11);
    for (const ComplexMatrix& u : op.factors) {
        CHECK(max_abs_diff(matmul(adjoint(u), u), ComplexMatrix::identity(2)) < 1e-12);
        const cplx det = u(0, 0) * u(1, 1) - u(0, 1) * u(1, 0);
        CHECK(std::abs(det - cplx(1.0)) < 1e-10);
    }

    const DensityMatrix mixed = fully_mixed(3);
    const DensityMatrix rotated = apply_local(mixed, op);
    CHECK(max_abs_diff(rotated.mat(), mixed.mat()) < 1e-12);
}

TEST_CASE("random_local_slocc factors") {
    const LocalOperator op = random_local_slocc(3, 13);
    bool any_non_unitary = false;
    for (const ComplexMatrix& a : op.factors) {
        const cplx det = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
        CHECK(std::abs(det - cplx(1.0)) < 1e-9);
        if (max_abs_diff(matmul(adjoint(a), a), ComplexMatrix::identity(2)) > 1e-6)
            any_non_unitary = true;
    }
    CHECK(any_non_unitary);
}

TEST_CASE("apply_local") {
    const DensityMatrix rho = random_density(2, 3, 17);
    LocalOperator identity{2, {ComplexMatrix::identity(2), ComplexMatrix::identity(2)}};
    const LocalActionResult res = apply_local_raw(rho, identity);
    CHECK(max_abs_diff(res.raw, rho.mat()) < 1e-15);
    CHECK(res.norm == doctest::Approx(1.0).epsilon(1e-12));

    const LocalOperator u = random_local_unitary(2, 19);
    const DensityMatrix rotated = apply_local(rho, u);
    CHECK(purity(rotated) == doctest::Approx(purity(rho)).epsilon(1e-10));
    CHECK(s_n_squared(rotated) == doctest::Approx(s_n_squared(rho)).epsilon(1e-10));

    CHECK_THROWS_AS(apply_local(rho, random_local_unitary(3, 1)), validation_error);
}

TEST_CASE("slocc action preserves the flip overlap of a Bell state") {
    const DensityMatrix bell = pure_density(bell_state(BellState::phi_plus));
    for (std::uint64_t s = 0; s < 10; ++s) {
        const LocalOperator op = random_local_slocc(2, 300 + s);
        const LocalActionResult res = apply_local_raw(bell, op);
        const ComplexMatrix flipped = spin_flip_matrix(res.raw);
        cplx t = 0.0;
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) t += res.raw(i, j) * flipped(j, i);
        CHECK(t.real() == doctest::Approx(1.0).epsilon(1e-8));
    }
}

TEST_CASE("verify_identities") {
    const VerifyReport rep = verify_identities(100, 1, 4, 7);
    CHECK(rep.pass(1e-8));
    CHECK(rep.purity_split <= 1e-10);
    CHECK(rep.symmetry_relation <= 1e-10);
    CHECK(rep.werner_complementarity <= 1e-10);

    // Pinned reference outputs.
    REQUIRE(rep.fully_mixed_s_sq.size() == 4);
    for (const auto& [n, v] : rep.fully_mixed_s_sq)
        CHECK(v == doctest::Approx(std::pow(2.0, -n)).epsilon(1e-12));
    CHECK(rep.bell_eof == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(rep.bell_eof_literal == doctest::Approx(0.0).epsilon(1e-7));

    // Roundoff floor: an absurdly tight tolerance must fail.
    CHECK_FALSE(rep.pass(1e-16));

    // Determinism under a fixed seed.
    const VerifyReport again = verify_identities(100, 1, 4, 7);
    CHECK(again.purity_split == rep.purity_split);
    CHECK(again.slocc_invariance_rel == rep.slocc_invariance_rel);
    CHECK(again.max_residual() == rep.max_residual());
}
