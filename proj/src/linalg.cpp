#include "chiralspin/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "chiralspin/errors.hpp"

namespace chiralspin {

namespace {

constexpr double kJacobiRelTol = 1e-14;
constexpr int kJacobiMaxSweeps = 100;

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
    if (a.dim() != b.dim()) {
        throw DimensionError(std::string(op) + ": dimension mismatch (" + std::to_string(a.dim()) +
                             " vs " + std::to_string(b.dim()) + ")");
    }
}

double off_diagonal_norm(const ComplexMatrix& a) {
    double sum = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) {
            if (i != j) sum += std::norm(a(i, j));
        }
    }
    return std::sqrt(sum);
}

// Applies A <- V^+ A V and W <- W V, where V is the identity except for the
// 2x2 block on indices (p, q): [[vpp, vpq], [vqp, vqq]].
void apply_plane_rotation(ComplexMatrix& a, ComplexMatrix& w, std::size_t p, std::size_t q,
                          Complex vpp, Complex vpq, Complex vqp, Complex vqq) {
    const std::size_t n = a.dim();
    for (std::size_t k = 0; k < n; ++k) {
        const Complex akp = a(k, p);
        const Complex akq = a(k, q);
        a(k, p) = akp * vpp + akq * vqp;
        a(k, q) = akp * vpq + akq * vqq;
        const Complex wkp = w(k, p);
        const Complex wkq = w(k, q);
        w(k, p) = wkp * vpp + wkq * vqp;
        w(k, q) = wkp * vpq + wkq * vqq;
    }
    for (std::size_t k = 0; k < n; ++k) {
        const Complex apk = a(p, k);
        const Complex aqk = a(q, k);
        a(p, k) = std::conj(vpp) * apk + std::conj(vqp) * aqk;
        a(q, k) = std::conj(vpq) * apk + std::conj(vqq) * aqk;
    }
}

// Modified Gram-Schmidt over columns [first, last) of w.
void orthonormalize_columns(ComplexMatrix& w, std::size_t first, std::size_t last) {
    const std::size_t n = w.dim();
    for (std::size_t c = first; c < last; ++c) {
        for (std::size_t prev = first; prev < c; ++prev) {
            Complex overlap{};
            for (std::size_t k = 0; k < n; ++k) overlap += std::conj(w(k, prev)) * w(k, c);
            for (std::size_t k = 0; k < n; ++k) w(k, c) -= overlap * w(k, prev);
        }
        double norm = 0.0;
        for (std::size_t k = 0; k < n; ++k) norm += std::norm(w(k, c));
        norm = std::sqrt(norm);
        if (norm > 0.0) {
            for (std::size_t k = 0; k < n; ++k) w(k, c) /= norm;
        }
    }
}

EigenDecomposition jacobi(const ComplexMatrix& h) {
    require_hermitian(h, "hermitian_eigensolve");
    const std::size_t n = h.dim();
    const double scale = frobenius_norm(h);

    // Symmetrize so round-off in the input cannot bias the sweeps.
    ComplexMatrix a(n);
    for (std::size_t i = 0; i < n; ++i) {
        a(i, i) = h(i, i).real();
        for (std::size_t j = i + 1; j < n; ++j) {
            const Complex avg = 0.5 * (h(i, j) + std::conj(h(j, i)));
            a(i, j) = avg;
            a(j, i) = std::conj(avg);
        }
    }
    ComplexMatrix w = ComplexMatrix::identity(n);

    const double target = kJacobiRelTol * scale;
    int sweep = 0;
    while (off_diagonal_norm(a) > target) {
        if (sweep == kJacobiMaxSweeps) {
            throw ConvergenceError("hermitian_eigensolve: Jacobi did not converge after " +
                                       std::to_string(sweep) + " sweeps",
                                   sweep);
        }
        ++sweep;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex apq = a(p, q);
                const double r = std::abs(apq);
                if (r == 0.0) continue;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                // Phase e^{-i phi} on column q makes the pivot real; a real
                // Jacobi rotation then annihilates it.
                const Complex phase = std::conj(apq) / r;
                const double theta = (aqq - app) / (2.0 * r);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                apply_plane_rotation(a, w, p, q, c, s, -s * phase, c * phase);
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return a(i, i).real() < a(j, j).real();
    });

    EigenDecomposition out{std::vector<double>(n), ComplexMatrix(n)};
    for (std::size_t k = 0; k < n; ++k) {
        out.eigenvalues[k] = a(order[k], order[k]).real();
        for (std::size_t row = 0; row < n; ++row) out.eigenvectors(row, k) = w(row, order[k]);
    }

    const double cluster_tol = 1e-10 * std::max(1.0, scale);
    std::size_t start = 0;
    for (std::size_t k = 1; k <= n; ++k) {
        if (k == n || out.eigenvalues[k] - out.eigenvalues[k - 1] > cluster_tol) {
            if (k - start > 1) orthonormalize_columns(out.eigenvectors, start, k);
            start = k;
        }
    }
    return out;
}

} // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {
    if (dim == 0) throw DimensionError("ComplexMatrix: dimension must be at least 1");
}

ComplexMatrix ComplexMatrix::from_row_major(std::span<const Complex> entries) {
    const auto dim = static_cast<std::size_t>(std::llround(std::sqrt(double(entries.size()))));
    if (dim == 0 || dim * dim != entries.size()) {
        throw DimensionError("ComplexMatrix: " + std::to_string(entries.size()) +
                             " entries do not form a non-empty square matrix");
    }
    ComplexMatrix m(dim);
    std::copy(entries.begin(), entries.end(), m.entries_.begin());
    if (!m.all_finite()) throw PreconditionError("ComplexMatrix: non-finite entry");
    return m;
}

ComplexMatrix ComplexMatrix::from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
    std::vector<Complex> flat;
    for (const auto& row : rows) {
        if (row.size() != rows.size()) throw DimensionError("ComplexMatrix: rows must form a square");
        flat.insert(flat.end(), row.begin(), row.end());
    }
    return from_row_major(flat);
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
    ComplexMatrix m(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
    return m;
}

std::vector<Complex> ComplexMatrix::column(std::size_t col) const {
    std::vector<Complex> out(dim_);
    for (std::size_t row = 0; row < dim_; ++row) out[row] = (*this)(row, col);
    return out;
}

bool ComplexMatrix::all_finite() const noexcept {
    return std::all_of(entries_.begin(), entries_.end(), [](Complex z) {
        return std::isfinite(z.real()) && std::isfinite(z.imag());
    });
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
    require_same_dim(*this, rhs, "add");
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += rhs.entries_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
    require_same_dim(*this, rhs, "subtract");
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= rhs.entries_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scalar) {
    for (auto& z : entries_) z *= scalar;
    return *this;
}

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }
ComplexMatrix operator-(ComplexMatrix m) { return m *= -1.0; }
ComplexMatrix operator*(Complex scalar, ComplexMatrix m) { return m *= scalar; }
ComplexMatrix operator*(ComplexMatrix m, Complex scalar) { return m *= scalar; }

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
    require_same_dim(lhs, rhs, "multiply");
    const std::size_t n = lhs.dim();
    ComplexMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const Complex lik = lhs(i, k);
            if (lik == Complex{}) continue;
            for (std::size_t j = 0; j < n; ++j) out(i, j) += lik * rhs(k, j);
        }
    }
    return out;
}

std::vector<Complex> operator*(const ComplexMatrix& m, std::span<const Complex> v) {
    if (v.size() != m.dim()) throw DimensionError("matrix-vector: dimension mismatch");
    std::vector<Complex> out(m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i) {
        for (std::size_t j = 0; j < m.dim(); ++j) out[i] += m(i, j) * v[j];
    }
    return out;
}

ComplexMatrix adjoint(const ComplexMatrix& m) {
    ComplexMatrix out(m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i) {
        for (std::size_t j = 0; j < m.dim(); ++j) out(j, i) = std::conj(m(i, j));
    }
    return out;
}

Complex trace(const ComplexMatrix& m) {
    Complex sum{};
    for (std::size_t i = 0; i < m.dim(); ++i) sum += m(i, i);
    return sum;
}

double frobenius_norm(const ComplexMatrix& m) {
    double sum = 0.0;
    for (Complex z : m.data()) sum += std::norm(z);
    return std::sqrt(sum);
}

double vector_norm(std::span<const Complex> v) {
    double sum = 0.0;
    for (Complex z : v) sum += std::norm(z);
    return std::sqrt(sum);
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b, "commutator");
    return a * b - b * a;
}

ComplexMatrix anticommutator(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b, "anticommutator");
    return a * b + b * a;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    const std::size_t na = a.dim();
    const std::size_t nb = b.dim();
    ComplexMatrix out(na * nb);
    for (std::size_t i = 0; i < na; ++i) {
        for (std::size_t j = 0; j < na; ++j) {
            const Complex aij = a(i, j);
            if (aij == Complex{}) continue;
            for (std::size_t k = 0; k < nb; ++k) {
                for (std::size_t l = 0; l < nb; ++l) out(i * nb + k, j * nb + l) = aij * b(k, l);
            }
        }
    }
    return out;
}

MatrixReport norms_and_checks(const ComplexMatrix& m) {
    const ComplexMatrix m_adj = adjoint(m);
    return MatrixReport{
        .frobenius_norm = frobenius_norm(m),
        .hermiticity_defect = frobenius_norm(m - m_adj),
        .unitarity_defect = frobenius_norm(m_adj * m - ComplexMatrix::identity(m.dim())),
    };
}

double hermitian_tolerance(const ComplexMatrix& m) {
    return 1e-12 * std::max(1.0, frobenius_norm(m));
}

bool is_hermitian(const ComplexMatrix& m) {
    return m.all_finite() && frobenius_norm(m - adjoint(m)) <= hermitian_tolerance(m);
}

void require_hermitian(const ComplexMatrix& m, const char* context) {
    if (!m.all_finite()) throw PreconditionError(std::string(context) + ": non-finite matrix entry");
    const double defect = frobenius_norm(m - adjoint(m));
    if (defect > hermitian_tolerance(m)) {
        throw PreconditionError(std::string(context) + ": matrix is not Hermitian (defect " +
                                std::to_string(defect) + ")");
    }
}

EigenDecomposition hermitian_eigensolve(const ComplexMatrix& h) { return jacobi(h); }

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h) { return jacobi(h).eigenvalues; }

ComplexMatrix unitary_exp(const ComplexMatrix& generator, double t) {
    const EigenDecomposition eig = hermitian_eigensolve(generator);
    const std::size_t n = generator.dim();
    const ComplexMatrix& v = eig.eigenvectors;
    ComplexMatrix out(n);
    for (std::size_t k = 0; k < n; ++k) {
        const Complex phase = std::polar(1.0, -t * eig.eigenvalues[k]);
        for (std::size_t i = 0; i < n; ++i) {
            const Complex vik = v(i, k) * phase;
            for (std::size_t j = 0; j < n; ++j) out(i, j) += vik * std::conj(v(j, k));
        }
    }
    return out;
}

} // namespace chiralspin
