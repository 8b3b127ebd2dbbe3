#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace spinflip {

using cplx = std::complex<double>;

// Thrown when textual input (family specs, ranges) cannot be parsed.
class parse_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Thrown when a numerical object fails validation (normalization, Hermiticity,
// positivity, trace, domain constraints).
class validation_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Numerical tolerances used throughout. Double precision at dimensions up to
// 256 leaves ample headroom for these.
inline constexpr double tol_herm = 1e-9;
inline constexpr double tol_eig  = 1e-10;
inline constexpr double tol_psd  = 1e-9;

// Dimension cap for dense operations; default corresponds to 8 qubits.
std::size_t max_dim();
void set_max_dim(std::size_t cap);

// Dense square complex matrix, row-major.
class ComplexMatrix {
  public:
    explicit ComplexMatrix(std::size_t dim);

    static ComplexMatrix identity(std::size_t dim);

    std::size_t dim() const { return dim_; }

    cplx& operator()(std::size_t i, std::size_t j) { return a_[i * dim_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return a_[i * dim_ + j]; }

    ComplexMatrix& operator+=(const ComplexMatrix& other);
    ComplexMatrix& operator-=(const ComplexMatrix& other);
    ComplexMatrix& operator*=(cplx scale);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(ComplexMatrix a, cplx s) { return a *= s; }
    friend ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }

  private:
    std::size_t dim_;
    std::vector<cplx> a_;
};

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix adjoint(const ComplexMatrix& a);
cplx trace(const ComplexMatrix& a);

// Pauli matrices; pauli(0) is the 2x2 identity.
const ComplexMatrix& pauli(int mu);

double max_abs(const ComplexMatrix& a);
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
double hermiticity_defect(const ComplexMatrix& a);

struct EigenSystem {
    std::vector<double> values;  // ascending
    ComplexMatrix vectors;       // columns are eigenvectors, same order
};

// Cyclic Jacobi diagonalization of a Hermitian matrix.
EigenSystem hermitian_eigen(const ComplexMatrix& h);

// Hermitian square root of a positive semidefinite matrix. Eigenvalues in
// [-tol_psd, 0) clamp to zero; anything below -tol_psd is an error.
ComplexMatrix psd_sqrt(const ComplexMatrix& h);

}  // namespace spinflip
