#pragma once

#include <span>
#include <vector>

#include "chiralspin/linalg.hpp"

namespace chiralspin::roots {

// Closed-form polynomial solvers. Coefficients are ascending
// (coeffs[k] multiplies x^k); the leading coefficient must be non-zero.
// All roots are returned, complex in general, with real roots first.

std::vector<Complex> solve_linear(double c0, double c1);
std::vector<Complex> solve_quadratic(double c0, double c1, double c2);
/// Trigonometric method when all three roots are real, Cardano otherwise.
std::vector<Complex> solve_cubic(double c0, double c1, double c2, double c3);
/// Depressed quartic factored into two quadratics through a resolvent cubic.
std::vector<Complex> solve_quartic(double c0, double c1, double c2, double c3, double c4);

/// Dispatches on degree (1..4). Throws PreconditionError above degree 4.
std::vector<Complex> closed_form(std::span<const double> coeffs);

/// Horner evaluation.
double evaluate(std::span<const double> coeffs, double x);

/// Converts closed-form roots of a real polynomial known to have only real
/// roots into a sorted real list. Imaginary parts up to `imag_tol` times the
/// largest root magnitude are discarded (near-multiple roots split into
/// complex pairs under round-off); larger ones raise InconsistencyError.
/// Each root is then refined by Newton steps that are kept only while they
/// reduce |p(x)|.
std::vector<double> real_roots(std::span<const double> coeffs, std::span<const Complex> roots,
                               double imag_tol = 1e-6);

} // namespace chiralspin::roots
