#include "chiralspin/polyroots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "chiralspin/errors.hpp"

namespace chiralspin::roots {

namespace {

void require_leading(double lead, const char* who) {
    if (lead == 0.0 || !std::isfinite(lead)) {
        throw PreconditionError(std::string(who) + ": leading coefficient must be finite and non-zero");
    }
}

// Roots of the monic quadratic x^2 + p x + q.
std::vector<Complex> monic_quadratic(double p, double q) {
    const double half = -0.5 * p;
    const double disc = half * half - q;
    if (disc >= 0.0) {
        // Avoid cancellation: take the larger-magnitude root first.
        const double big = half + std::copysign(std::sqrt(disc), half);
        const double small = big != 0.0 ? q / big : 0.0;
        return {Complex(big), Complex(small)};
    }
    const double im = std::sqrt(-disc);
    return {Complex(half, im), Complex(half, -im)};
}

// Roots of the depressed cubic t^3 + p t + q.
std::vector<Complex> depressed_cubic(double p, double q) {
    if (p == 0.0 && q == 0.0) return {0.0, 0.0, 0.0};
    const double disc = 0.25 * q * q + p * p * p / 27.0;
    if (disc <= 0.0 && p < 0.0) {
        // Three real roots (casus irreducibilis): trigonometric form.
        const double r = 2.0 * std::sqrt(-p / 3.0);
        const double arg = std::clamp(1.5 * q / p * std::sqrt(-3.0 / p), -1.0, 1.0);
        const double phi = std::acos(arg) / 3.0;
        constexpr double third_turn = 2.0 * std::numbers::pi / 3.0;
        return {Complex(r * std::cos(phi)), Complex(r * std::cos(phi - third_turn)),
                Complex(r * std::cos(phi - 2.0 * third_turn))};
    }
    // One real root: Cardano with the cancellation-free branch.
    const double sq = std::sqrt(std::max(disc, 0.0));
    const double u = std::cbrt(-0.5 * q - std::copysign(sq, q));
    const double v = u != 0.0 ? -p / (3.0 * u) : 0.0;
    const double re = -0.5 * (u + v);
    const double im = 0.5 * std::sqrt(3.0) * (u - v);
    return {Complex(u + v), Complex(re, im), Complex(re, -im)};
}

double newton_polish(std::span<const double> coeffs, double x) {
    double best = std::abs(evaluate(coeffs, x));
    for (int iter = 0; iter < 4 && best > 0.0; ++iter) {
        double p = 0.0, dp = 0.0;
        for (std::size_t k = coeffs.size(); k-- > 0;) {
            dp = dp * x + p;
            p = p * x + coeffs[k];
        }
        if (dp == 0.0) break;
        const double candidate = x - p / dp;
        const double value = std::abs(evaluate(coeffs, candidate));
        if (!(value < best)) break;
        x = candidate;
        best = value;
    }
    return x;
}

} // namespace

std::vector<Complex> solve_linear(double c0, double c1) {
    require_leading(c1, "solve_linear");
    return {Complex(-c0 / c1)};
}

std::vector<Complex> solve_quadratic(double c0, double c1, double c2) {
    require_leading(c2, "solve_quadratic");
    return monic_quadratic(c1 / c2, c0 / c2);
}

std::vector<Complex> solve_cubic(double c0, double c1, double c2, double c3) {
    require_leading(c3, "solve_cubic");
    const double a = c2 / c3, b = c1 / c3, c = c0 / c3;
    const double shift = a / 3.0;
    const double p = b - a * a / 3.0;
    const double q = 2.0 * a * a * a / 27.0 - a * b / 3.0 + c;
    std::vector<Complex> t = depressed_cubic(p, q);
    for (auto& z : t) z -= shift;
    return t;
}

std::vector<Complex> solve_quartic(double c0, double c1, double c2, double c3, double c4) {
    require_leading(c4, "solve_quartic");
    const double a = c3 / c4, b = c2 / c4, c = c1 / c4, d = c0 / c4;
    const double shift = a / 4.0;
    const double a2 = a * a;
    const double p = b - 3.0 * a2 / 8.0;
    const double q = c - a * b / 2.0 + a2 * a / 8.0;
    const double r = d - a * c / 4.0 + a2 * b / 16.0 - 3.0 * a2 * a2 / 256.0;

    std::vector<Complex> y;
    const double scale = std::max({std::abs(p), std::sqrt(std::abs(r)), 1e-300});
    if (std::abs(q) <= 1e-14 * scale * std::sqrt(scale)) {
        // Biquadratic: y^2 = z with z^2 + p z + r = 0.
        for (Complex z : monic_quadratic(p, r)) {
            const Complex s = std::sqrt(z);
            y.push_back(s);
            y.push_back(-s);
        }
    } else {
        // (y^2 + m)^2 = (2m - p) y^2 - q y + m^2 - r must be a perfect square:
        // m^3 - (p/2) m^2 - r m + (p r / 2 - q^2 / 8) = 0, with 2m > p.
        double m = -std::numeric_limits<double>::infinity();
        for (Complex z : solve_cubic(0.5 * p * r - 0.125 * q * q, -r, -0.5 * p, 1.0)) {
            if (std::abs(z.imag()) <= 1e-9 * std::max(1.0, std::abs(z))) m = std::max(m, z.real());
        }
        const double s = std::sqrt(std::max(2.0 * m - p, 0.0));
        if (s == 0.0) throw InconsistencyError("solve_quartic: degenerate resolvent");
        const double k = q / (2.0 * s);
        for (Complex z : monic_quadratic(-s, m + k)) y.push_back(z);
        for (Complex z : monic_quadratic(s, m - k)) y.push_back(z);
    }
    for (auto& z : y) z -= shift;
    std::stable_partition(y.begin(), y.end(), [](Complex z) { return z.imag() == 0.0; });
    return y;
}

std::vector<Complex> closed_form(std::span<const double> coeffs) {
    switch (coeffs.size()) {
    case 2: return solve_linear(coeffs[0], coeffs[1]);
    case 3: return solve_quadratic(coeffs[0], coeffs[1], coeffs[2]);
    case 4: return solve_cubic(coeffs[0], coeffs[1], coeffs[2], coeffs[3]);
    case 5: return solve_quartic(coeffs[0], coeffs[1], coeffs[2], coeffs[3], coeffs[4]);
    default:
        throw PreconditionError("closed_form: degree " + std::to_string(int(coeffs.size()) - 1) +
                                " is outside 1..4");
    }
}

double evaluate(std::span<const double> coeffs, double x) {
    double p = 0.0;
    for (std::size_t k = coeffs.size(); k-- > 0;) p = p * x + coeffs[k];
    return p;
}

std::vector<double> real_roots(std::span<const double> coeffs, std::span<const Complex> roots, double imag_tol) {
    double scale = 0.0;
    for (Complex z : roots) scale = std::max(scale, std::abs(z));
    std::vector<double> out;
    out.reserve(roots.size());
    for (Complex z : roots) {
        if (std::abs(z.imag()) > imag_tol * std::max(scale, std::numeric_limits<double>::min())) {
            throw InconsistencyError("closed-form root has a significant imaginary part (" +
                                     std::to_string(z.imag()) + ")");
        }
        out.push_back(newton_polish(coeffs, z.real()));
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace chiralspin::roots
