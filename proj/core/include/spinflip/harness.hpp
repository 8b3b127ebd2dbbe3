#pragma once

#include <cstdint>

#include "spinflip/state.hpp"

namespace spinflip {

// Deterministic 64-bit generator (splitmix64: state += 0x9E3779B97F4A7C15,
// finalized with the 0xBF58476D1CE4E5B9 / 0x94D049BB133111EB mix). Gaussian
// variates come from Box-Muller in a fixed call order, so identical seeds
// reproduce identical streams on every platform.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64();
    double uniform();   // [0, 1)
    double gaussian();  // standard normal
    cplx complex_gaussian();

    // Derive an independent child seed; used to keep parallel trials
    // order-independent.
    static std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

  private:
    std::uint64_t state_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

struct LocalOperator {
    int n_qubits;
    std::vector<ComplexMatrix> factors;  // n 2x2 matrices
};

StateVector random_pure_state(int n, std::uint64_t seed);
DensityMatrix random_density(int n, int rank, std::uint64_t seed);
LocalOperator random_local_unitary(int n, std::uint64_t seed);
// Determinant-one but generically non-unitary factors.
LocalOperator random_local_slocc(int n, std::uint64_t seed);

ComplexMatrix local_operator_matrix(const LocalOperator& op);

struct LocalActionResult {
    ComplexMatrix raw;  // A rho A^dagger, not renormalized
    double norm;        // its trace
};

LocalActionResult apply_local_raw(const DensityMatrix& rho, const LocalOperator& op);
DensityMatrix apply_local(const DensityMatrix& rho, const LocalOperator& op);

struct VerifyReport {
    int trials = 0;
    int n_min = 1;
    int n_max = 4;
    std::uint64_t seed = 0;

    // Max residuals over all trials.
    double purity_split = 0.0;       // |S^2 + D_HS^2 - purity|
    double symmetry_relation = 0.0;  // |S^2 + mixedness - indistinguishability|
    double unitary_purity = 0.0;
    double unitary_entanglement = 0.0;
    double slocc_invariance_rel = 0.0;  // relative, unnormalized transform
    double flip_covariance = 0.0;
    double werner_complementarity = 0.0;  // fixed Werner grid, S^2 + M - 1

    // Pinned reference outputs: S^2 of the fully mixed state is 2^-n, not
    // zero, and the two entanglement-of-formation variants split for a Bell
    // state (1 vs 0).
    std::vector<std::pair<int, double>> fully_mixed_s_sq;  // (n, value)
    double bell_eof = 0.0;
    double bell_eof_literal = 0.0;

    double max_residual() const;
    bool pass(double tol) const;
};

VerifyReport verify_identities(int trials, int n_min, int n_max, std::uint64_t seed);

}  // namespace spinflip
