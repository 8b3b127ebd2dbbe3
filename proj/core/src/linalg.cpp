#include "spinflip/linalg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

namespace spinflip {

namespace {
std::size_t g_max_dim = 256;
}

std::size_t max_dim() { return g_max_dim; }
void set_max_dim(std::size_t cap) { g_max_dim = cap; }

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), a_(dim * dim) {
    if (dim < 1) throw validation_error("matrix dimension must be >= 1");
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
    if (dim_ != other.dim_) throw validation_error("dimension mismatch in matrix sum");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += other.a_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
    if (dim_ != other.dim_) throw validation_error("dimension mismatch in matrix difference");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= other.a_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx scale) {
    for (auto& x : a_) x *= scale;
    return *this;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    const std::size_t da = a.dim(), db = b.dim();
    if (da > g_max_dim / db) throw validation_error("kron result exceeds dimension cap");
    ComplexMatrix out(da * db);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < da; ++j) {
            const cplx aij = a(i, j);
            if (aij == 0.0) continue;
            for (std::size_t k = 0; k < db; ++k)
                for (std::size_t l = 0; l < db; ++l)
                    out(i * db + k, j * db + l) = aij * b(k, l);
        }
    return out;
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
    const std::size_t d = a.dim();
    if (d != b.dim()) throw validation_error("dimension mismatch in matmul");
    ComplexMatrix out(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = 0; k < d; ++k) {
            const cplx aik = a(i, k);
            if (aik == 0.0) continue;
            for (std::size_t j = 0; j < d; ++j) out(i, j) += aik * b(k, j);
        }
    return out;
}

ComplexMatrix adjoint(const ComplexMatrix& a) {
    const std::size_t d = a.dim();
    ComplexMatrix out(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) out(i, j) = std::conj(a(j, i));
    return out;
}

cplx trace(const ComplexMatrix& a) {
    cplx t = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) t += a(i, i);
    return t;
}

const ComplexMatrix& pauli(int mu) {
    static const std::array<ComplexMatrix, 4> sigma = [] {
        std::array<ComplexMatrix, 4> s{ComplexMatrix(2), ComplexMatrix(2), ComplexMatrix(2),
                                       ComplexMatrix(2)};
        s[0](0, 0) = 1.0;
        s[0](1, 1) = 1.0;
        s[1](0, 1) = 1.0;
        s[1](1, 0) = 1.0;
        s[2](0, 1) = cplx(0.0, -1.0);
        s[2](1, 0) = cplx(0.0, 1.0);
        s[3](0, 0) = 1.0;
        s[3](1, 1) = -1.0;
        return s;
    }();
    if (mu < 0 || mu > 3) throw validation_error("pauli index out of range");
    return sigma[static_cast<std::size_t>(mu)];
}

double max_abs(const ComplexMatrix& a) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) m = std::max(m, std::abs(a(i, j)));
    return m;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim()) throw validation_error("dimension mismatch in max_abs_diff");
    double m = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
    return m;
}

double hermiticity_defect(const ComplexMatrix& a) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = i; j < a.dim(); ++j)
            m = std::max(m, std::abs(a(i, j) - std::conj(a(j, i))));
    return m;
}

namespace {

double off_diagonal_norm(const ComplexMatrix& a) {
    double sum = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            if (i != j) sum += std::norm(a(i, j));
    return std::sqrt(sum);
}

// One two-sided rotation zeroing a(p,q). The pivot phase is absorbed first so
// the 2x2 subproblem reduces to the real symmetric Jacobi formulas.
void jacobi_rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
    const cplx apq = a(p, q);
    const double r = std::abs(apq);
    if (r == 0.0) return;
    const cplx phase = apq / r;  // a(p,q) = r * phase

    const double app = a(p, p).real();
    const double aqq = a(q, q).real();
    const double tau = (aqq - app) / (2.0 * r);
    double t;
    if (tau >= 0.0)
        t = 1.0 / (tau + std::sqrt(1.0 + tau * tau));
    else
        t = -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    // Unitary U with columns p: (c, -s*phase'), q: (s, c*phase') applied as
    // a <- U^dagger a U, where phase' = conj(phase) placed so the pivot cancels.
    const cplx up = phase;  // multiplies row/col q entries
    const std::size_t n = a.dim();
    for (std::size_t k = 0; k < n; ++k) {
        const cplx akp = a(k, p);
        const cplx akq = a(k, q);
        a(k, p) = c * akp - s * std::conj(up) * akq;
        a(k, q) = s * up * akp + c * akq;
    }
    for (std::size_t k = 0; k < n; ++k) {
        const cplx apk = a(p, k);
        const cplx aqk = a(q, k);
        a(p, k) = c * apk - s * up * aqk;
        a(q, k) = s * std::conj(up) * apk + c * aqk;
    }
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    a(p, p) = a(p, p).real();
    a(q, q) = a(q, q).real();

    for (std::size_t k = 0; k < n; ++k) {
        const cplx vkp = v(k, p);
        const cplx vkq = v(k, q);
        v(k, p) = c * vkp - s * std::conj(up) * vkq;
        v(k, q) = s * up * vkp + c * vkq;
    }
}

}  // namespace

EigenSystem hermitian_eigen(const ComplexMatrix& h) {
    if (hermiticity_defect(h) > tol_herm)
        throw validation_error("hermitian_eigen: input is not Hermitian within tolerance");

    const std::size_t n = h.dim();
    ComplexMatrix a = h;
    // Symmetrize roundoff-level asymmetry before sweeping.
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const cplx m = 0.5 * (a(i, j) + std::conj(a(j, i)));
            a(i, j) = m;
            a(j, i) = std::conj(m);
        }
        a(i, i) = a(i, i).real();
    }
    ComplexMatrix v = ComplexMatrix::identity(n);

    const int max_sweeps = 100;
    const double target = 1e-14 * std::max(1.0, max_abs(h)) * static_cast<double>(n);
    int sweep = 0;
    while (off_diagonal_norm(a) > target) {
        if (++sweep > max_sweeps)
            throw validation_error("hermitian_eigen: Jacobi sweeps did not converge");
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) jacobi_rotate(a, v, p, q);
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });

    EigenSystem out{std::vector<double>(n), ComplexMatrix(n)};
    for (std::size_t j = 0; j < n; ++j) {
        out.values[j] = a(order[j], order[j]).real();
        for (std::size_t i = 0; i < n; ++i) out.vectors(i, j) = v(i, order[j]);
    }
    return out;
}

ComplexMatrix psd_sqrt(const ComplexMatrix& h) {
    EigenSystem es = hermitian_eigen(h);
    const std::size_t n = h.dim();
    // Roundoff-scale eigenvalues snap to zero: the square root amplifies
    // eigenvalue noise eps to sqrt(eps), which would dominate the result.
    const double floor = 1e-13 * std::max(1.0, std::abs(es.values.back()));
    for (double& lam : es.values) {
        if (lam < -tol_psd) throw validation_error("psd_sqrt: matrix has a negative eigenvalue");
        lam = lam < floor ? 0.0 : std::sqrt(lam);
    }
    ComplexMatrix out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            cplx sum = 0.0;
            for (std::size_t k = 0; k < n; ++k)
                sum += es.vectors(i, k) * es.values[k] * std::conj(es.vectors(j, k));
            out(i, j) = sum;
        }
    return out;
}

}  // namespace spinflip
