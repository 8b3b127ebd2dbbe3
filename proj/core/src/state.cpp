#include "spinflip/state.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace spinflip {

namespace {

std::size_t qubit_dim(int n_qubits) {
    if (n_qubits < 1) throw validation_error("n_qubits must be >= 1");
    const std::size_t d = std::size_t{1} << n_qubits;
    if (d > max_dim()) throw validation_error("qubit count exceeds dimension cap");
    return d;
}

int popcount(std::size_t x) { return std::popcount(x); }

}  // namespace

StateVector::StateVector(int n_qubits, std::vector<cplx> amplitudes)
    : n_qubits_(n_qubits), amp_(std::move(amplitudes)) {
    const std::size_t d = qubit_dim(n_qubits);
    if (amp_.size() != d) throw validation_error("amplitude count does not match qubit count");
    double norm_sq = 0.0;
    for (const cplx& a : amp_) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
            throw validation_error("non-finite amplitude");
        norm_sq += std::norm(a);
    }
    if (std::abs(std::sqrt(norm_sq) - 1.0) > 1e-10)
        throw validation_error("state vector is not normalized");
}

DensityMatrix::DensityMatrix(int n_qubits, ComplexMatrix mat)
    : n_qubits_(n_qubits), mat_(std::move(mat)) {
    const std::size_t d = qubit_dim(n_qubits);
    if (mat_.dim() != d) throw validation_error("matrix dimension does not match qubit count");
    if (hermiticity_defect(mat_) > tol_herm)
        throw validation_error("density matrix is not Hermitian within tolerance");
    if (std::abs(trace(mat_) - cplx(1.0)) > tol_herm)
        throw validation_error("density matrix trace differs from 1");
    const EigenSystem es = hermitian_eigen(mat_);
    if (es.values.front() < -tol_psd)
        throw validation_error("density matrix has a negative eigenvalue");
}

DensityMatrix pure_density(const StateVector& psi) {
    const std::size_t d = psi.dim();
    ComplexMatrix m(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) m(i, j) = psi[i] * std::conj(psi[j]);
    return DensityMatrix(psi.n_qubits(), std::move(m));
}

DensityMatrix mix(const std::vector<double>& weights, const std::vector<DensityMatrix>& states) {
    if (weights.empty() || weights.size() != states.size())
        throw validation_error("mix: weights and states must be non-empty and equal-length");
    double sum = 0.0;
    for (double w : weights) {
        if (w < 0.0) throw validation_error("mix: negative weight");
        sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-12) throw validation_error("mix: weights do not sum to 1");
    const int n = states.front().n_qubits();
    ComplexMatrix acc(states.front().dim());
    for (std::size_t k = 0; k < states.size(); ++k) {
        if (states[k].n_qubits() != n) throw validation_error("mix: qubit count mismatch");
        acc += weights[k] * states[k].mat();
    }
    return DensityMatrix(n, std::move(acc));
}

ComplexMatrix spin_flip_matrix(const ComplexMatrix& m) {
    const std::size_t d = m.dim();
    const std::size_t mask = d - 1;
    ComplexMatrix out(d);
    // Entrywise form of the sigma_2^{x n} conjugation: the tensor power of
    // sigma_2 maps basis index i to its bitwise complement with phase
    // (-1)^{popcount}, and the two phases combine to a real sign.
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            const double sign = ((popcount(i) + popcount(j)) % 2 == 0) ? 1.0 : -1.0;
            out(i, j) = sign * std::conj(m(~i & mask, ~j & mask));
        }
    return out;
}

DensityMatrix spin_flip(const DensityMatrix& rho) {
    return DensityMatrix(rho.n_qubits(), spin_flip_matrix(rho.mat()));
}

StateVector spin_flip_vector(const StateVector& psi) {
    const std::size_t d = psi.dim();
    const std::size_t mask = d - 1;
    const int n = psi.n_qubits();
    // Phase of the sigma_2 tensor power row i: i^n * (-1)^(n - popcount(i)).
    const cplx i_pow_n = [n] {
        switch (n % 4) {
            case 0: return cplx(1.0, 0.0);
            case 1: return cplx(0.0, 1.0);
            case 2: return cplx(-1.0, 0.0);
            default: return cplx(0.0, -1.0);
        }
    }();
    std::vector<cplx> out(d);
    for (std::size_t i = 0; i < d; ++i) {
        const double sign = ((n - popcount(i)) % 2 == 0) ? 1.0 : -1.0;
        out[i] = i_pow_n * sign * std::conj(psi[~i & mask]);
    }
    return StateVector(n, std::move(out));
}

double purity(const DensityMatrix& rho) {
    // Tr rho^2 equals the squared Frobenius norm for Hermitian rho.
    double sum = 0.0;
    const ComplexMatrix& m = rho.mat();
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j) sum += std::norm(m(i, j));
    return sum;
}

double mixedness(const DensityMatrix& rho) { return 1.0 - purity(rho); }

double s_n_squared(const DensityMatrix& rho) {
    const ComplexMatrix flipped = spin_flip_matrix(rho.mat());
    const ComplexMatrix& m = rho.mat();
    cplx t = 0.0;
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j) t += m(i, j) * flipped(j, i);
    if (std::abs(t.imag()) > 1e-8)
        throw validation_error("s_n_squared: trace has a large imaginary part");
    return std::max(0.0, t.real());
}

double hs_distance_sq(const DensityMatrix& a, const DensityMatrix& b) {
    if (a.n_qubits() != b.n_qubits())
        throw validation_error("hs_distance_sq: qubit count mismatch");
    double sum = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) sum += std::norm(a.mat()(i, j) - b.mat()(i, j));
    return 0.5 * sum;
}

double indistinguishability(const DensityMatrix& rho) {
    return 1.0 - hs_distance_sq(rho, spin_flip(rho));
}

double n_tangle_pure(const StateVector& psi) {
    const StateVector flipped = spin_flip_vector(psi);
    cplx inner = 0.0;
    for (std::size_t i = 0; i < psi.dim(); ++i) inner += std::conj(psi[i]) * flipped[i];
    return std::norm(inner);
}

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& drop) {
    const int n = rho.n_qubits();
    std::vector<bool> dropped(static_cast<std::size_t>(n) + 1, false);
    if (drop.empty()) throw validation_error("partial_trace: empty drop set");
    for (int q : drop) {
        if (q < 1 || q > n) throw validation_error("partial_trace: qubit index out of range");
        if (dropped[static_cast<std::size_t>(q)])
            throw validation_error("partial_trace: duplicate qubit index");
        dropped[static_cast<std::size_t>(q)] = true;
    }
    if (static_cast<int>(drop.size()) == n)
        throw validation_error("partial_trace: cannot drop all qubits");

    std::vector<int> kept;
    std::vector<int> traced;
    for (int q = 1; q <= n; ++q) (dropped[static_cast<std::size_t>(q)] ? traced : kept).push_back(q);
    const int m = static_cast<int>(kept.size());
    const std::size_t dim_out = std::size_t{1} << m;
    const std::size_t dim_traced = std::size_t{1} << traced.size();

    // Qubit k (1-based, big-endian) occupies bit n-k of the full index.
    auto shift = [n](int q) { return n - q; };

    ComplexMatrix out(dim_out);
    for (std::size_t r = 0; r < dim_out; ++r)
        for (std::size_t c = 0; c < dim_out; ++c) {
            cplx sum = 0.0;
            for (std::size_t t = 0; t < dim_traced; ++t) {
                std::size_t full_r = 0, full_c = 0;
                for (int j = 0; j < m; ++j) {
                    const std::size_t bit_r = (r >> (m - 1 - j)) & 1u;
                    const std::size_t bit_c = (c >> (m - 1 - j)) & 1u;
                    full_r |= bit_r << shift(kept[static_cast<std::size_t>(j)]);
                    full_c |= bit_c << shift(kept[static_cast<std::size_t>(j)]);
                }
                for (std::size_t j = 0; j < traced.size(); ++j) {
                    const std::size_t bit = (t >> (traced.size() - 1 - j)) & 1u;
                    full_r |= bit << shift(traced[j]);
                    full_c |= bit << shift(traced[j]);
                }
                sum += rho.mat()(full_r, full_c);
            }
            out(r, c) = sum;
        }
    return DensityMatrix(m, std::move(out));
}

AnalysisReport analyze(const DensityMatrix& rho) {
    AnalysisReport r{};
    r.purity = purity(rho);
    r.mixedness = 1.0 - r.purity;
    r.s_n_sq = s_n_squared(rho);
    r.d_hs_sq = hs_distance_sq(rho, spin_flip(rho));
    r.indistinguishability = 1.0 - r.d_hs_sq;
    r.residual_purity_split = std::abs(r.s_n_sq + r.d_hs_sq - r.purity);
    r.residual_symmetry = std::abs(r.s_n_sq + r.mixedness - r.indistinguishability);
    return r;
}

}  // namespace spinflip
