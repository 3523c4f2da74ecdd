#include "chiralspin/angmom.hpp"

#include <charconv>
#include <cmath>

#include "chiralspin/errors.hpp"

namespace chiralspin {

namespace {

int parse_non_negative(std::string_view text, std::string_view whole) {
    int value = -1;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (text.empty() || ec != std::errc{} || ptr != end || value < 0) {
        throw ParseError("invalid spin label '" + std::string(whole) + "'");
    }
    return value;
}

// sqrt(j(j+1) - m(m+1)) in twice-units: (1/2) sqrt((tj - tm)(tj + tm + 2)).
double raising_element(int twice_j, int twice_m) {
    return 0.5 * std::sqrt(double(twice_j - twice_m) * double(twice_j + twice_m + 2));
}

} // namespace

SpinLabel SpinLabel::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        const int j = parse_non_negative(text, text);
        if (j > 1000) throw ParseError("spin label '" + std::string(text) + "' too large");
        return SpinLabel(2 * j);
    }
    const int num = parse_non_negative(text.substr(0, slash), text);
    const int den = parse_non_negative(text.substr(slash + 1), text);
    if (den != 2 || num % 2 != 1 || num > 2001) {
        throw ParseError("invalid spin label '" + std::string(text) + "': expected an odd numerator over 2");
    }
    return SpinLabel(num);
}

std::string SpinLabel::to_string() const {
    if (is_integer()) return std::to_string(twice_j_ / 2);
    return std::to_string(twice_j_) + "/2";
}

const ComplexMatrix& SpinOperators::component(int axis) const {
    switch (axis) {
    case 0: return jx;
    case 1: return jy;
    case 2: return jz;
    default: throw DimensionError("SpinOperators: axis index must be 0, 1 or 2");
    }
}

ComplexMatrix SpinOperators::dot(double nx, double ny, double nz) const {
    return Complex(nx) * jx + Complex(ny) * jy + Complex(nz) * jz;
}

SpinOperators build_spin_operators(SpinLabel j) {
    const std::size_t n = j.dimension();
    const int tj = j.twice_j();
    ComplexMatrix jz(n), jplus(n);
    for (std::size_t k = 0; k < n; ++k) {
        const int tm = tj - 2 * static_cast<int>(k);
        jz(k, k) = 0.5 * tm;
        // J+ maps column k (m) to row k-1 (m+1).
        if (k > 0) jplus(k - 1, k) = raising_element(tj, tm);
    }
    ComplexMatrix jminus = adjoint(jplus);
    ComplexMatrix jx = 0.5 * (jplus + jminus);
    ComplexMatrix jy = Complex(0.0, -0.5) * (jplus - jminus);
    ComplexMatrix jsq = jx * jx + jy * jy + jz * jz;
    return SpinOperators{j, std::move(jx), std::move(jy), std::move(jz),
                         std::move(jplus), std::move(jminus), std::move(jsq)};
}

LadderReport ladder_action_check(SpinLabel j, double tol) {
    const SpinOperators ops = build_spin_operators(j);
    const std::size_t n = j.dimension();
    const int tj = j.twice_j();
    LadderReport report;
    for (std::size_t k = 0; k < n; ++k) {
        const int tm = tj - 2 * static_cast<int>(k);
        std::vector<Complex> basis(n);
        basis[k] = 1.0;
        std::vector<Complex> up_expected(n), down_expected(n);
        if (k > 0) up_expected[k - 1] = raising_element(tj, tm);
        if (k + 1 < n) down_expected[k + 1] = raising_element(tj, tm - 2);

        std::vector<Complex> up = ops.jplus * basis;
        std::vector<Complex> down = ops.jminus * basis;
        double up_res = 0.0, down_res = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
            up_res += std::norm(up[r] - up_expected[r]);
            down_res += std::norm(down[r] - down_expected[r]);
        }
        report.max_residual = std::max({report.max_residual, std::sqrt(up_res), std::sqrt(down_res)});
        if (k == 0) report.top_annihilated = vector_norm(up) <= tol;
        if (k + 1 == n) report.bottom_annihilated = vector_norm(down) <= tol;
    }
    report.ok = report.max_residual <= tol && report.top_annihilated && report.bottom_annihilated;
    return report;
}

std::size_t product_dimension(std::span<const std::size_t> dims) {
    std::size_t total = 1;
    for (std::size_t d : dims) total *= d;
    return total;
}

ComplexMatrix embed(const ComplexMatrix& op, std::size_t slot, std::span<const std::size_t> dims) {
    if (slot >= dims.size()) {
        throw DimensionError("embed: slot " + std::to_string(slot) + " out of range for " +
                             std::to_string(dims.size()) + " subsystems");
    }
    if (op.dim() != dims[slot]) {
        throw DimensionError("embed: operator dimension " + std::to_string(op.dim()) +
                             " does not match subsystem dimension " + std::to_string(dims[slot]));
    }
    ComplexMatrix out = ComplexMatrix::identity(1);
    for (std::size_t s = 0; s < dims.size(); ++s) {
        out = kron(out, s == slot ? op : ComplexMatrix::identity(dims[s]));
    }
    return out;
}

} // namespace chiralspin
