#pragma once

#include <array>

#include "spinflip/state.hpp"

namespace spinflip {

struct ConcurrenceResult {
    double concurrence;                     // max(0, l1 - l2 - l3 - l4)
    std::array<double, 4> singular_values;  // descending, >= 0
};

// |<psi| sigma_2 x sigma_2 |psi*>| for two-qubit pure states.
double concurrence_pure(const StateVector& psi);

// Wootters singular values via the Hermitian route sqrt(sqrt(rho) rho~ sqrt(rho));
// same spectrum as the square roots of the eigenvalues of rho rho~.
ConcurrenceResult concurrence_mixed(const DensityMatrix& rho);

double tangle_2(const StateVector& psi);

// h(x) = -x log2 x - (1-x) log2 (1-x), with h(0) = h(1) = 0.
double binary_entropy(double x);

// Entanglement of formation, h((1 + sqrt(1 - C^2)) / 2).
double eof(const DensityMatrix& rho);

// h(C) applied directly to the concurrence; kept alongside eof for
// comparison (the two disagree already for a Bell state: 0 vs 1).
double eof_literal(const DensityMatrix& rho);

}  // namespace spinflip
