#pragma once

#include "spinflip/state.hpp"

namespace spinflip {

// Generalized Stokes parameters of an n-qubit state: the 4^n real expectation
// values over Pauli strings, laid out lexicographically with the first qubit's
// index slowest (n = 1 gives the familiar S0..S3 vector).
class StokesTensor {
  public:
    StokesTensor(int n_qubits, std::vector<double> values);

    int n_qubits() const { return n_qubits_; }
    std::size_t size() const { return values_.size(); }
    const std::vector<double>& values() const { return values_; }
    double operator[](std::size_t flat) const { return values_[flat]; }

    // Base-4 digit string of a flat index, n digits.
    std::string index_string(std::size_t flat) const;

  private:
    int n_qubits_;
    std::vector<double> values_;
};

// Tensor evaluation is capped separately (4^n terms); default 5 qubits.
int stokes_qubit_cap();
void set_stokes_qubit_cap(int cap);

StokesTensor stokes_from_density(const DensityMatrix& rho);
DensityMatrix density_from_stokes(const StokesTensor& t);

// 2^-n * sum of squared parameters; equals the purity of the source state.
double euclidean_norm_sq(const StokesTensor& t);
// 2^-n * alternating sum with sign (-1)^(number of indices in {1,2,3});
// equals Tr(rho rho~) of the source state.
double minkowski_norm_sq(const StokesTensor& t);

}  // namespace spinflip
