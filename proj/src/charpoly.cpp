#include "chiralspin/charpoly.hpp"

#include <algorithm>
#include <cmath>

#include "chiralspin/chiral.hpp"
#include "chiralspin/errors.hpp"
#include "chiralspin/polyroots.hpp"

namespace chiralspin {

double CharPoly::operator()(double lambda) const { return roots::evaluate(coeffs, lambda); }

double CharPoly::max_abs_coeff() const {
    double m = 0.0;
    for (double c : coeffs) m = std::max(m, std::abs(c));
    return m;
}

CharPoly characteristic_polynomial(const ComplexMatrix& h) {
    require_hermitian(h, "characteristic_polynomial");
    const std::size_t n = h.dim();
    const double scale = frobenius_norm(h);
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;

    CharPoly out;
    out.dim = n;
    out.coeffs.assign(n + 1, 0.0);
    out.coeffs[n] = sign;
    if (scale == 0.0) return out;

    // det(lambda I - A) = sum p_k lambda^k on A = H / scale:
    // M_1 = I, M_k = A M_{k-1} + p_{n-k+1} I, p_{n-k} = -tr(A M_k) / k.
    const ComplexMatrix a = Complex(1.0 / scale) * h;
    const ComplexMatrix id = ComplexMatrix::identity(n);
    std::vector<Complex> p(n + 1);
    p[n] = 1.0;
    ComplexMatrix m = id;
    for (std::size_t k = 1; k <= n; ++k) {
        if (k > 1) m = a * m + p[n - k + 1] * id;
        p[n - k] = -trace(a * m) / double(k);
    }

    // det(H - lambda I) = (-1)^n scale^n det(lambda/scale I - A).
    double max_abs = 0.0, max_im = 0.0;
    for (std::size_t k = 0; k <= n; ++k) {
        max_abs = std::max(max_abs, std::abs(p[k].real()));
        max_im = std::max(max_im, std::abs(p[k].imag()));
    }
    out.max_imag = max_abs > 0.0 ? max_im / max_abs : 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        out.coeffs[k] = sign * p[k].real() * std::pow(scale, double(n - k));
    }
    return out;
}

std::vector<double> ReducedPoly::expand() const {
    std::vector<double> out(zero_root_multiplicity + 2 * degree() + 1, 0.0);
    for (std::size_t i = 0; i < mu_coeffs.size(); ++i) out[zero_root_multiplicity + 2 * i] = mu_coeffs[i];
    return out;
}

ParityResult parity_reduce(const CharPoly& p, double tol) {
    const std::size_t q = p.coeffs.size() - 1;
    const double lead = std::abs(p.coeffs[q]);

    double root_scale = 0.0;
    for (std::size_t k = 0; k < q; ++k) {
        root_scale = std::max(root_scale, std::pow(std::abs(p.coeffs[k]) / lead, 1.0 / double(q - k)));
    }
    std::vector<double> normalized(q + 1, 0.0);
    if (root_scale > 0.0) {
        for (std::size_t k = 0; k <= q; ++k) {
            normalized[k] = p.coeffs[k] / std::pow(root_scale, double(q - k));
        }
    } else {
        normalized[q] = p.coeffs[q];
    }
    double max_abs = 0.0;
    for (double c : normalized) max_abs = std::max(max_abs, std::abs(c));
    const double threshold = tol * max_abs;
    auto is_zero = [&](std::size_t k) { return std::abs(normalized[k]) <= threshold; };

    ParityResult result;
    std::size_t m = 0;
    while (m < q && is_zero(m)) ++m;
    result.reduced.zero_root_multiplicity = m;

    result.parity_ok = (q - m) % 2 == 0;
    for (std::size_t k = m + 1; k <= q && result.parity_ok; k += 2) {
        if (!is_zero(k)) result.parity_ok = false;
    }
    if (result.parity_ok) {
        for (std::size_t k = m; k <= q; k += 2) result.reduced.mu_coeffs.push_back(p.coeffs[k]);
    }
    return result;
}

std::vector<double> solve_reduced(const ReducedPoly& r, double tol_zero) {
    if (r.mu_coeffs.empty()) throw PreconditionError("solve_reduced: empty mu-polynomial");
    const std::size_t degree = r.degree();
    if (degree > 4) {
        throw PreconditionError("solve_reduced: reduced degree " + std::to_string(degree) + " requires " +
                                std::string(to_string(method_for_degree(degree))) + " treatment");
    }
    std::vector<double> lambdas(r.zero_root_multiplicity, 0.0);
    if (degree > 0) {
        const std::vector<Complex> mu_complex = roots::closed_form(r.mu_coeffs);
        const std::vector<double> mu = roots::real_roots(r.mu_coeffs, mu_complex);
        double mu_scale = 0.0;
        for (double x : mu) mu_scale = std::max(mu_scale, std::abs(x));
        const double clamp = std::max(tol_zero * tol_zero, 1e-10 * mu_scale);
        for (double x : mu) {
            if (x < -clamp) {
                throw InconsistencyError("solve_reduced: negative root mu = " + std::to_string(x) +
                                         " of the reduced polynomial (no real eigenvalue)");
            }
            const double root = std::sqrt(std::max(x, 0.0));
            lambdas.push_back(root);
            lambdas.push_back(-root);
        }
    }
    std::sort(lambdas.begin(), lambdas.end());
    return lambdas;
}

std::string_view to_string(SolveMethod method) {
    switch (method) {
    case SolveMethod::Radicals: return "Radicals";
    case SolveMethod::NumericOnly: return "NumericOnly";
    case SolveMethod::HypergeometricRequired: return "HypergeometricRequired";
    }
    return "NumericOnly";
}

SolveMethod method_for_degree(std::size_t degree) {
    if (degree <= 4) return SolveMethod::Radicals;
    if (degree == 5) return SolveMethod::HypergeometricRequired;
    return SolveMethod::NumericOnly;
}

SolveMethod classify_solvability(std::size_t dim, bool chiral) {
    return method_for_degree(chiral ? dim / 2 : dim);
}

PolySolveReport full_solve(const ComplexMatrix& h, const std::optional<ComplexMatrix>& partner) {
    require_hermitian(h, "full_solve");
    PolySolveReport report;
    report.charpoly = characteristic_polynomial(h);
    const ParityResult parity = parity_reduce(report.charpoly);
    report.parity_ok = parity.parity_ok;

    if (partner) {
        const SymmetryKind kind = classify(*partner, h).kind;
        const bool anticommutes = kind == SymmetryKind::Anticommuting || kind == SymmetryKind::Both;
        if (anticommutes && !parity.parity_ok) {
            throw InconsistencyError("full_solve: partner anticommutes with H but P(lambda) is not even");
        }
    }

    report.numeric_eigenvalues = hermitian_eigenvalues(h);
    const double tol_zero = default_pairing_tolerance(h);

    if (parity.parity_ok) {
        report.reduced = parity.reduced;
        report.method = method_for_degree(parity.reduced.degree());
        if (report.method == SolveMethod::Radicals) {
            report.closed_form_eigenvalues = solve_reduced(parity.reduced, tol_zero);
        }
    } else {
        report.method = method_for_degree(h.dim());
        if (report.method == SolveMethod::Radicals) {
            const auto& c = report.charpoly.coeffs;
            report.closed_form_eigenvalues = roots::real_roots(c, roots::closed_form(c));
        }
    }

    if (report.closed_form_eigenvalues) {
        const auto& closed = *report.closed_form_eigenvalues;
        for (std::size_t k = 0; k < closed.size(); ++k) {
            report.max_root_deviation =
                std::max(report.max_root_deviation, std::abs(closed[k] - report.numeric_eigenvalues[k]));
        }
    }
    return report;
}

} // namespace chiralspin
