#include "spinflip/stokes.hpp"

#include <cmath>
#include <string>

namespace spinflip {

namespace {

int g_stokes_cap = 5;

// Each Pauli has exactly one nonzero entry per row; (column bit, value) for
// row bit b of sigma_mu.
struct PauliRow {
    std::size_t col;
    cplx val;
};

PauliRow pauli_row(int mu, std::size_t b) {
    switch (mu) {
        case 0: return {b, cplx(1.0, 0.0)};
        case 1: return {1 - b, cplx(1.0, 0.0)};
        case 2: return {1 - b, b == 0 ? cplx(0.0, -1.0) : cplx(0.0, 1.0)};
        default: return {b, b == 0 ? cplx(1.0, 0.0) : cplx(-1.0, 0.0)};
    }
}

std::size_t pow4(int n) { return std::size_t{1} << (2 * n); }

void check_cap(int n) {
    if (n > g_stokes_cap) throw validation_error("stokes: qubit count exceeds tensor cap");
}

// Row r of the Pauli string for multi-index digits: returns the unique column
// with a nonzero entry and that entry's value.
PauliRow string_row(const std::vector<int>& digits, std::size_t r, int n) {
    std::size_t col = 0;
    cplx val = 1.0;
    for (int k = 0; k < n; ++k) {
        const std::size_t bit = (r >> (n - 1 - k)) & 1u;
        const PauliRow pr = pauli_row(digits[static_cast<std::size_t>(k)], bit);
        col |= pr.col << (n - 1 - k);
        val *= pr.val;
    }
    return {col, val};
}

std::vector<int> digits_of(std::size_t flat, int n) {
    std::vector<int> d(static_cast<std::size_t>(n));
    for (int k = n - 1; k >= 0; --k) {
        d[static_cast<std::size_t>(k)] = static_cast<int>(flat & 3u);
        flat >>= 2;
    }
    return d;
}

}  // namespace

int stokes_qubit_cap() { return g_stokes_cap; }
void set_stokes_qubit_cap(int cap) { g_stokes_cap = cap; }

StokesTensor::StokesTensor(int n_qubits, std::vector<double> values)
    : n_qubits_(n_qubits), values_(std::move(values)) {
    if (n_qubits < 1) throw validation_error("stokes: n_qubits must be >= 1");
    if (values_.size() != pow4(n_qubits))
        throw validation_error("stokes: value count is not 4^n");
}

std::string StokesTensor::index_string(std::size_t flat) const {
    std::string s(static_cast<std::size_t>(n_qubits_), '0');
    for (int k = n_qubits_ - 1; k >= 0; --k) {
        s[static_cast<std::size_t>(k)] = static_cast<char>('0' + (flat & 3u));
        flat >>= 2;
    }
    return s;
}

StokesTensor stokes_from_density(const DensityMatrix& rho) {
    const int n = rho.n_qubits();
    check_cap(n);
    const std::size_t count = pow4(n);
    const std::size_t d = rho.dim();
    std::vector<double> values(count);
    for (std::size_t flat = 0; flat < count; ++flat) {
        const std::vector<int> digits = digits_of(flat, n);
        cplx t = 0.0;
        for (std::size_t r = 0; r < d; ++r) {
            const PauliRow pr = string_row(digits, r, n);
            t += pr.val * rho.mat()(pr.col, r);
        }
        if (std::abs(t.imag()) > 1e-10)
            throw validation_error("stokes: parameter has a large imaginary part");
        values[flat] = t.real();
    }
    return StokesTensor(n, std::move(values));
}

DensityMatrix density_from_stokes(const StokesTensor& t) {
    const int n = t.n_qubits();
    check_cap(n);
    const std::size_t d = std::size_t{1} << n;
    const double scale = 1.0 / static_cast<double>(d);
    ComplexMatrix m(d);
    for (std::size_t flat = 0; flat < t.size(); ++flat) {
        const double s = t[flat];
        if (s == 0.0) continue;
        const std::vector<int> digits = digits_of(flat, n);
        for (std::size_t r = 0; r < d; ++r) {
            const PauliRow pr = string_row(digits, r, n);
            m(r, pr.col) += scale * s * pr.val;
        }
    }
    return DensityMatrix(n, std::move(m));
}

double euclidean_norm_sq(const StokesTensor& t) {
    double sum = 0.0;
    for (double v : t.values()) sum += v * v;
    return sum / static_cast<double>(std::size_t{1} << t.n_qubits());
}

double minkowski_norm_sq(const StokesTensor& t) {
    const int n = t.n_qubits();
    double sum = 0.0;
    for (std::size_t flat = 0; flat < t.size(); ++flat) {
        const std::vector<int> digits = digits_of(flat, n);
        int spatial = 0;
        for (int dgt : digits)
            if (dgt != 0) ++spatial;
        const double sign = (spatial % 2 == 0) ? 1.0 : -1.0;
        sum += sign * t[flat] * t[flat];
    }
    return sum / static_cast<double>(std::size_t{1} << n);
}

}  // namespace spinflip
