#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "chiralspin/linalg.hpp"

namespace chiralspin {

/// P(lambda) = det(H - lambda I) = sum_k coeffs[k] lambda^k, coeffs[q] = (-1)^q.
struct CharPoly {
    std::vector<double> coeffs;
    std::size_t dim = 0;
    double max_imag = 0.0; // largest discarded imaginary part, relative to max |coeff|

    double operator()(double lambda) const;
    double max_abs_coeff() const;
};

/// Faddeev-LeVerrier trace recursion on H / ||H||_F, rescaled afterwards.
CharPoly characteristic_polynomial(const ComplexMatrix& h);

/// P(lambda) = lambda^m * sum_i mu_coeffs[i] (lambda^2)^i
struct ReducedPoly {
    std::size_t zero_root_multiplicity = 0;
    std::vector<double> mu_coeffs;

    std::size_t degree() const { return mu_coeffs.empty() ? 0 : mu_coeffs.size() - 1; }
    /// Expands back to coefficients in lambda.
    std::vector<double> expand() const;
};

struct ParityResult {
    bool parity_ok = false;
    ReducedPoly reduced;
};

inline constexpr double kCoeffZeroTol = 1e-10;

/// Factors out the zero root and checks that what remains is even in lambda.
/// Coefficients are compared after normalizing lambda by the root-magnitude
/// scale max_k |c_k / c_q|^(1/(q-k)); entries below tol * max|c~_k| count as
/// zero. When parity fails, `reduced` still carries m but no mu_coeffs.
ParityResult parity_reduce(const CharPoly& p, double tol = kCoeffZeroTol);

/// Solves the mu-polynomial in closed form (degree <= 4) and returns the
/// ascending lambda list: +/- sqrt(mu) for each root plus m zeros. mu roots in
/// [-clamp, 0) become 0, where clamp = max(tol_zero^2, 1e-10 * max|mu|); a root
/// below that raises InconsistencyError. Degree > 4 raises PreconditionError.
std::vector<double> solve_reduced(const ReducedPoly& r, double tol_zero = 1e-9);

enum class SolveMethod { Radicals, NumericOnly, HypergeometricRequired };

std::string_view to_string(SolveMethod method);

/// Radicals up to degree 4, hypergeometric at exactly 5, numeric beyond.
SolveMethod method_for_degree(std::size_t degree);

/// Chiral: degree floor(dim/2); otherwise dim.
SolveMethod classify_solvability(std::size_t dim, bool chiral);

struct PolySolveReport {
    CharPoly charpoly;
    bool parity_ok = false;
    std::optional<ReducedPoly> reduced;
    SolveMethod method = SolveMethod::NumericOnly;
    std::optional<std::vector<double>> closed_form_eigenvalues;
    std::vector<double> numeric_eigenvalues;
    double max_root_deviation = 0.0;
};

/// Characteristic polynomial, parity reduction and (when the reduced degree
/// allows) closed-form roots, always alongside the numeric eigensolver.
/// If `partner` anticommutes with H the parity reduction must succeed;
/// otherwise InconsistencyError is raised.
PolySolveReport full_solve(const ComplexMatrix& h, const std::optional<ComplexMatrix>& partner = std::nullopt);

} // namespace chiralspin
