#include "spinflip/catalog.hpp"

#include <cmath>

namespace spinflip {

StateVector bell_state(BellState which) {
    const double r = 1.0 / std::sqrt(2.0);
    std::vector<cplx> amp(4);
    switch (which) {
        case BellState::phi_plus:
            amp[0] = r;
            amp[3] = r;
            break;
        case BellState::phi_minus:
            amp[0] = r;
            amp[3] = -r;
            break;
        case BellState::psi_plus:
            amp[1] = r;
            amp[2] = r;
            break;
        case BellState::psi_minus:
            amp[1] = r;
            amp[2] = -r;
            break;
    }
    return StateVector(2, std::move(amp));
}

DensityMatrix bell_diagonal(double w1, double w2, double w3, double w4) {
    for (double w : {w1, w2, w3, w4})
        if (w < 0.0 || w > 1.0) throw validation_error("bell_diagonal: weight outside [0,1]");
    return mix({w1, w2, w3, w4},
               {pure_density(bell_state(BellState::phi_plus)),
                pure_density(bell_state(BellState::phi_minus)),
                pure_density(bell_state(BellState::psi_plus)),
                pure_density(bell_state(BellState::psi_minus))});
}

DensityMatrix werner(double w) {
    if (w < 0.0 || w > 1.0) throw validation_error("werner: w outside [0,1]");
    ComplexMatrix m = pure_density(bell_state(BellState::phi_plus)).mat();
    m *= w;
    const double off = (1.0 - w) / 4.0;
    for (std::size_t i = 0; i < 4; ++i) m(i, i) += off;
    return DensityMatrix(2, std::move(m));
}

StateVector cat_state(int n, double alpha) {
    if (n < 2) throw validation_error("cat_state: n must be >= 2");
    if (alpha < 0.0 || alpha > 1.0) throw validation_error("cat_state: alpha outside [0,1]");
    const std::size_t d = std::size_t{1} << n;
    std::vector<cplx> amp(d);
    amp[0] = alpha;
    amp[d - 1] = std::sqrt(1.0 - alpha * alpha);
    return StateVector(n, std::move(amp));
}

StateVector w_state(cplx alpha, cplx beta, cplx gamma) {
    const double norm_sq = std::norm(alpha) + std::norm(beta) + std::norm(gamma);
    if (std::abs(norm_sq - 1.0) > 1e-12)
        throw validation_error("w_state: amplitudes are not normalized");
    std::vector<cplx> amp(8);
    amp[0b100] = alpha;
    amp[0b010] = beta;
    amp[0b001] = gamma;
    return StateVector(3, std::move(amp));
}

double mems_g(double gamma) {
    if (gamma <= 0.0 || gamma > 1.0) throw validation_error("mems: gamma outside (0,1]");
    return gamma < 2.0 / 3.0 ? 1.0 / 3.0 : gamma / 2.0;
}

DensityMatrix mems(double gamma) {
    const double g = mems_g(gamma);
    const double w1 = 0.5 * (2.0 * g + gamma);
    const double w2 = 0.5 * (2.0 * g - gamma);
    const double w3 = 1.0 - 2.0 * g;
    if (w1 < 0.0 || w2 < 0.0 || w3 < 0.0)
        throw validation_error("mems: negative mixture weight");
    return mix({w1, w2, w3},
               {pure_density(bell_state(BellState::phi_plus)),
                pure_density(bell_state(BellState::phi_minus)),
                pure_density(basis_product({0, 1}))});
}

DensityMatrix mixed_cat(int n, double w) {
    if (n < 1) throw validation_error("mixed_cat: n must be >= 1");
    if (w < 0.0 || w > 1.0) throw validation_error("mixed_cat: w outside [0,1]");
    const std::size_t d = std::size_t{1} << n;
    ComplexMatrix m(d);
    m(0, 0) = w;
    m(d - 1, d - 1) = 1.0 - w;
    return DensityMatrix(n, std::move(m));
}

StateVector basis_product(const std::vector<int>& bits) {
    if (bits.empty()) throw validation_error("basis_product: empty bit list");
    std::size_t idx = 0;
    for (int b : bits) {
        if (b != 0 && b != 1) throw validation_error("basis_product: bits must be 0 or 1");
        idx = (idx << 1) | static_cast<std::size_t>(b);
    }
    const int n = static_cast<int>(bits.size());
    std::vector<cplx> amp(std::size_t{1} << n);
    amp[idx] = 1.0;
    return StateVector(n, std::move(amp));
}

DensityMatrix fully_mixed(int n) {
    if (n < 1) throw validation_error("fully_mixed: n must be >= 1");
    const std::size_t d = std::size_t{1} << n;
    if (d > max_dim()) throw validation_error("fully_mixed: qubit count exceeds dimension cap");
    ComplexMatrix m(d);
    const double p = 1.0 / static_cast<double>(d);
    for (std::size_t i = 0; i < d; ++i) m(i, i) = p;
    return DensityMatrix(n, std::move(m));
}

}  // namespace spinflip
