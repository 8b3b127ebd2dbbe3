#include "spinflip/measures.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace spinflip {

namespace {

void require_two_qubits(int n, const char* what) {
    if (n != 2) throw validation_error(std::string(what) + ": two-qubit input required");
}

}  // namespace

double concurrence_pure(const StateVector& psi) {
    require_two_qubits(psi.n_qubits(), "concurrence_pure");
    const StateVector flipped = spin_flip_vector(psi);
    cplx inner = 0.0;
    for (std::size_t i = 0; i < 4; ++i) inner += std::conj(psi[i]) * flipped[i];
    return std::abs(inner);
}

ConcurrenceResult concurrence_mixed(const DensityMatrix& rho) {
    require_two_qubits(rho.n_qubits(), "concurrence_mixed");
    const ComplexMatrix root = psd_sqrt(rho.mat());
    const ComplexMatrix flipped = spin_flip_matrix(rho.mat());
    const ComplexMatrix product = matmul(matmul(root, flipped), root);
    EigenSystem es = hermitian_eigen(product);

    ConcurrenceResult out{};
    // Same noise floor as psd_sqrt: sqrt turns eps-level eigenvalue noise
    // into sqrt(eps)-level singular values.
    const double floor = 1e-13 * std::max(1.0, std::abs(es.values[3]));
    for (std::size_t k = 0; k < 4; ++k) {
        const double lam = es.values[3 - k];  // descending
        out.singular_values[k] = lam < floor ? 0.0 : std::sqrt(lam);
    }
    out.concurrence = std::max(0.0, out.singular_values[0] - out.singular_values[1] -
                                        out.singular_values[2] - out.singular_values[3]);
    return out;
}

double tangle_2(const StateVector& psi) {
    const double c = concurrence_pure(psi);
    return c * c;
}

double binary_entropy(double x) {
    if (x < 0.0 || x > 1.0) throw validation_error("binary_entropy: argument outside [0,1]");
    if (x == 0.0 || x == 1.0) return 0.0;
    return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

double eof(const DensityMatrix& rho) {
    const double c = concurrence_mixed(rho).concurrence;
    return binary_entropy(0.5 * (1.0 + std::sqrt(std::max(0.0, 1.0 - c * c))));
}

double eof_literal(const DensityMatrix& rho) {
    return binary_entropy(concurrence_mixed(rho).concurrence);
}

}  // namespace spinflip
