#include "spinflip/harness.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "spinflip/catalog.hpp"
#include "spinflip/measures.hpp"

namespace spinflip {

namespace {

std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace

std::uint64_t Rng::next_u64() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix64(state_);
}

double Rng::uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::gaussian() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    double u1 = uniform();
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(theta);
    has_spare_ = true;
    return r * std::cos(theta);
}

cplx Rng::complex_gaussian() {
    const double re = gaussian();
    const double im = gaussian();
    return cplx(re, im);
}

std::uint64_t Rng::derive_seed(std::uint64_t seed, std::uint64_t index) {
    return mix64(seed ^ mix64(index + 0x9E3779B97F4A7C15ULL));
}

StateVector random_pure_state(int n, std::uint64_t seed) {
    const std::size_t d = std::size_t{1} << n;
    if (d > max_dim()) throw validation_error("random_pure_state: qubit count exceeds cap");
    Rng rng(seed);
    std::vector<cplx> amp(d);
    double norm_sq = 0.0;
    for (auto& a : amp) {
        a = rng.complex_gaussian();
        norm_sq += std::norm(a);
    }
    const double inv = 1.0 / std::sqrt(norm_sq);
    for (auto& a : amp) a *= inv;
    return StateVector(n, std::move(amp));
}

DensityMatrix random_density(int n, int rank, std::uint64_t seed) {
    const std::size_t d = std::size_t{1} << n;
    if (d > max_dim()) throw validation_error("random_density: qubit count exceeds cap");
    if (rank < 1 || static_cast<std::size_t>(rank) > d)
        throw validation_error("random_density: rank outside [1, 2^n]");
    Rng rng(seed);
    // G is d x rank with complex normal entries; rho = G G^dagger / trace.
    std::vector<cplx> g(d * static_cast<std::size_t>(rank));
    for (auto& x : g) x = rng.complex_gaussian();
    ComplexMatrix m(d);
    double tr = 0.0;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            cplx sum = 0.0;
            for (std::size_t k = 0; k < static_cast<std::size_t>(rank); ++k)
                sum += g[i * rank + k] * std::conj(g[j * rank + k]);
            m(i, j) = sum;
            if (i == j) tr += sum.real();
        }
    m *= 1.0 / tr;
    return DensityMatrix(n, std::move(m));
}

LocalOperator random_local_unitary(int n, std::uint64_t seed) {
    if (n < 1) throw validation_error("random_local_unitary: n must be >= 1");
    Rng rng(seed);
    LocalOperator op{n, {}};
    op.factors.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        // First column is a normalized complex 2-vector; the second column
        // completes it to an SU(2) matrix with determinant one.
        cplx a = rng.complex_gaussian();
        cplx b = rng.complex_gaussian();
        const double inv = 1.0 / std::sqrt(std::norm(a) + std::norm(b));
        a *= inv;
        b *= inv;
        ComplexMatrix u(2);
        u(0, 0) = a;
        u(1, 0) = b;
        u(0, 1) = -std::conj(b);
        u(1, 1) = std::conj(a);
        op.factors.push_back(std::move(u));
    }
    return op;
}

LocalOperator random_local_slocc(int n, std::uint64_t seed) {
    if (n < 1) throw validation_error("random_local_slocc: n must be >= 1");
    Rng rng(seed);
    LocalOperator op{n, {}};
    op.factors.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        ComplexMatrix a(2);
        cplx det = 0.0;
        int redraws = 0;
        do {
            if (++redraws > 100)
                throw validation_error("random_local_slocc: could not draw a nonsingular factor");
            a(0, 0) = rng.complex_gaussian();
            a(0, 1) = rng.complex_gaussian();
            a(1, 0) = rng.complex_gaussian();
            a(1, 1) = rng.complex_gaussian();
            det = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
        } while (std::abs(det) < 1e-8);
        a *= 1.0 / std::sqrt(det);
        op.factors.push_back(std::move(a));
    }
    return op;
}

ComplexMatrix local_operator_matrix(const LocalOperator& op) {
    ComplexMatrix a = op.factors.front();
    for (std::size_t k = 1; k < op.factors.size(); ++k) a = kron(a, op.factors[k]);
    return a;
}

LocalActionResult apply_local_raw(const DensityMatrix& rho, const LocalOperator& op) {
    if (op.n_qubits != rho.n_qubits())
        throw validation_error("apply_local: qubit count mismatch");
    const ComplexMatrix a = local_operator_matrix(op);
    ComplexMatrix raw = matmul(matmul(a, rho.mat()), adjoint(a));
    const double norm = trace(raw).real();
    return {std::move(raw), norm};
}

DensityMatrix apply_local(const DensityMatrix& rho, const LocalOperator& op) {
    LocalActionResult res = apply_local_raw(rho, op);
    res.raw *= 1.0 / res.norm;
    return DensityMatrix(rho.n_qubits(), std::move(res.raw));
}

namespace {

// Tr(m * spin_flip_matrix(m)) for an arbitrary (not necessarily normalized)
// Hermitian matrix.
double flip_overlap(const ComplexMatrix& m) {
    const ComplexMatrix f = spin_flip_matrix(m);
    cplx t = 0.0;
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j) t += m(i, j) * f(j, i);
    return t.real();
}

}  // namespace

double VerifyReport::max_residual() const {
    return std::max({purity_split, symmetry_relation, unitary_purity, unitary_entanglement,
                     slocc_invariance_rel, flip_covariance, werner_complementarity});
}

bool VerifyReport::pass(double tol) const { return max_residual() <= tol; }

VerifyReport verify_identities(int trials, int n_min, int n_max, std::uint64_t seed) {
    if (trials < 1) throw validation_error("verify_identities: trials must be >= 1");
    if (n_min < 1 || n_max < n_min) throw validation_error("verify_identities: bad qubit range");

    VerifyReport rep;
    rep.trials = trials;
    rep.n_min = n_min;
    rep.n_max = n_max;
    rep.seed = seed;

    for (int t = 0; t < trials; ++t) {
        const std::uint64_t s = Rng::derive_seed(seed, static_cast<std::uint64_t>(t));
        Rng pick(s);
        const int n = n_min + static_cast<int>(pick.next_u64() %
                                               static_cast<std::uint64_t>(n_max - n_min + 1));
        const std::size_t d = std::size_t{1} << n;
        const int rank = 1 + static_cast<int>(pick.next_u64() % d);

        const DensityMatrix rho = random_density(n, rank, Rng::derive_seed(s, 1));
        const AnalysisReport a = analyze(rho);
        rep.purity_split = std::max(rep.purity_split, a.residual_purity_split);
        rep.symmetry_relation = std::max(rep.symmetry_relation, a.residual_symmetry);

        const LocalOperator u = random_local_unitary(n, Rng::derive_seed(s, 2));
        const DensityMatrix rotated = apply_local(rho, u);
        rep.unitary_purity =
            std::max(rep.unitary_purity, std::abs(purity(rotated) - a.purity));
        rep.unitary_entanglement =
            std::max(rep.unitary_entanglement, std::abs(s_n_squared(rotated) - a.s_n_sq));

        // Spin-flip covariance under determinant-one local unitaries.
        const ComplexMatrix lhs = spin_flip_matrix(rotated.mat());
        const ComplexMatrix um = local_operator_matrix(u);
        const ComplexMatrix rhs =
            matmul(matmul(um, spin_flip_matrix(rho.mat())), adjoint(um));
        rep.flip_covariance = std::max(rep.flip_covariance, max_abs_diff(lhs, rhs));

        // Minkowskian-length invariance under the unnormalized determinant-one
        // action; relative to keep ill-conditioned draws comparable.
        const LocalOperator slocc = random_local_slocc(n, Rng::derive_seed(s, 3));
        const LocalActionResult transformed = apply_local_raw(rho, slocc);
        const double before = flip_overlap(rho.mat());
        const double after = flip_overlap(transformed.raw);
        const double scale = std::max({1.0, std::abs(before), std::abs(after)});
        rep.slocc_invariance_rel =
            std::max(rep.slocc_invariance_rel, std::abs(after - before) / scale);
    }

    // Fixed Werner grid: spin-flip symmetric, so entanglement and mixedness
    // must sum to one exactly.
    for (int k = 0; k <= 10; ++k) {
        const double w = static_cast<double>(k) / 10.0;
        const DensityMatrix rho = werner(w);
        rep.werner_complementarity = std::max(
            rep.werner_complementarity, std::abs(s_n_squared(rho) + mixedness(rho) - 1.0));
    }

    for (int n = 1; n <= std::min(4, n_max); ++n)
        rep.fully_mixed_s_sq.emplace_back(n, s_n_squared(fully_mixed(n)));
    const DensityMatrix bell = pure_density(bell_state(BellState::phi_plus));
    rep.bell_eof = eof(bell);
    rep.bell_eof_literal = eof_literal(bell);

    return rep;
}

}  // namespace spinflip
