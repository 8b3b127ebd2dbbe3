#pragma once

#include <vector>

#include "spinflip/linalg.hpp"

namespace spinflip {

// Pure n-qubit state, 2^n amplitudes. Qubit ordering is big-endian: qubit 1
// is the most significant bit of the basis index.
class StateVector {
  public:
    StateVector(int n_qubits, std::vector<cplx> amplitudes);

    int n_qubits() const { return n_qubits_; }
    std::size_t dim() const { return amp_.size(); }
    const std::vector<cplx>& amplitudes() const { return amp_; }
    cplx operator[](std::size_t i) const { return amp_[i]; }

  private:
    int n_qubits_;
    std::vector<cplx> amp_;
};

// Validated n-qubit density matrix: Hermitian, unit trace, PSD within
// tolerance. Construction fails loudly on violation; eigenvalues in
// [-tol_psd, 0) are accepted (clamped conceptually, the matrix is kept as is).
class DensityMatrix {
  public:
    DensityMatrix(int n_qubits, ComplexMatrix mat);

    int n_qubits() const { return n_qubits_; }
    std::size_t dim() const { return mat_.dim(); }
    const ComplexMatrix& mat() const { return mat_; }

  private:
    int n_qubits_;
    ComplexMatrix mat_;
};

struct AnalysisReport {
    double purity;
    double mixedness;
    double s_n_sq;
    double d_hs_sq;
    double indistinguishability;
    double residual_purity_split;  // |s_n_sq + d_hs_sq - purity|
    double residual_symmetry;      // |s_n_sq + mixedness - indistinguishability|
};

DensityMatrix pure_density(const StateVector& psi);
DensityMatrix mix(const std::vector<double>& weights, const std::vector<DensityMatrix>& states);

// sigma_2^{x n} conjugation with complex conjugation; works on any square
// matrix of qubit dimension (used unnormalized by the invariance harness).
ComplexMatrix spin_flip_matrix(const ComplexMatrix& m);
DensityMatrix spin_flip(const DensityMatrix& rho);
// Global phase is significant and preserved exactly as the sigma_2 action
// dictates; inner products against the flipped vector are phase-sensitive.
StateVector spin_flip_vector(const StateVector& psi);

double purity(const DensityMatrix& rho);
double mixedness(const DensityMatrix& rho);
double s_n_squared(const DensityMatrix& rho);
double hs_distance_sq(const DensityMatrix& a, const DensityMatrix& b);
double indistinguishability(const DensityMatrix& rho);
double n_tangle_pure(const StateVector& psi);

// Trace out the 1-based qubits in `drop`; remaining qubits keep their
// relative order.
DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& drop);

AnalysisReport analyze(const DensityMatrix& rho);

}  // namespace spinflip
