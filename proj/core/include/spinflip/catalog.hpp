#pragma once

#include "spinflip/state.hpp"

namespace spinflip {

enum class BellState { phi_plus, phi_minus, psi_plus, psi_minus };

StateVector bell_state(BellState which);

// w1 P[Phi+] + w2 P[Phi-] + w3 P[Psi+] + w4 P[Psi-]; weights in [0,1], sum 1.
DensityMatrix bell_diagonal(double w1, double w2, double w3, double w4);

// w P[Phi+] + (1-w)/4 I, w in [0,1].
DensityMatrix werner(double w);

// alpha|0...0> + sqrt(1-alpha^2)|1...1> on n >= 2 qubits, alpha in [0,1].
StateVector cat_state(int n, double alpha);

// alpha|100> + beta|010> + gamma|001>, complex amplitudes, unit norm.
StateVector w_state(cplx alpha, cplx beta, cplx gamma);

// Maximally entangled mixed states, gamma in (0,1]:
// (1/2)(2g+gamma) P[Phi+] + (1/2)(2g-gamma) P[Phi-] + (1-2g) P[|01>],
// with g = 1/3 below gamma = 2/3 and g = gamma/2 above.
DensityMatrix mems(double gamma);
double mems_g(double gamma);

// w P[|0...0>] + (1-w) P[|1...1>] on n qubits.
DensityMatrix mixed_cat(int n, double w);

StateVector basis_product(const std::vector<int>& bits);

DensityMatrix fully_mixed(int n);

}  // namespace spinflip
