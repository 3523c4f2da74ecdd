#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "chiralspin/linalg.hpp"

namespace chiralspin {

/// Half-integer quantum number j, stored exactly as 2j.
class SpinLabel {
public:
    constexpr SpinLabel() = default;
    explicit constexpr SpinLabel(int twice_j) : twice_j_(twice_j) {}

    /// Accepts "0", "1", "3/2", "5/2", ... Throws ParseError otherwise.
    static SpinLabel parse(std::string_view text);

    constexpr int twice_j() const noexcept { return twice_j_; }
    constexpr std::size_t dimension() const noexcept { return static_cast<std::size_t>(twice_j_) + 1; }
    constexpr double value() const noexcept { return 0.5 * twice_j_; }
    /// j(j+1)
    constexpr double casimir() const noexcept { return 0.25 * twice_j_ * (twice_j_ + 2); }
    constexpr bool is_integer() const noexcept { return twice_j_ % 2 == 0; }

    std::string to_string() const;

    friend constexpr bool operator==(SpinLabel, SpinLabel) = default;

private:
    int twice_j_ = 0;
};

inline constexpr SpinLabel kSpinHalf{1};

/// Matrix representation of the angular momentum algebra for one spin.
/// Basis index k carries m = j - k (highest m first).
struct SpinOperators {
    SpinLabel j;
    ComplexMatrix jx, jy, jz, jplus, jminus, jsq;

    const ComplexMatrix& component(int axis) const;
    /// n.J = nx Jx + ny Jy + nz Jz
    ComplexMatrix dot(double nx, double ny, double nz) const;
};

SpinOperators build_spin_operators(SpinLabel j);

struct LadderReport {
    bool ok = true;
    double max_residual = 0.0; // worst column residual over J+ and J-
    bool top_annihilated = true;    // J+|j, j> = 0
    bool bottom_annihilated = true; // J-|j,-j> = 0
};

/// Checks J+/-|j,m> = sqrt(j(j+1) - m(m +/- 1)) |j,m +/- 1> column by column.
LadderReport ladder_action_check(SpinLabel j, double tol = 1e-12);

/// I (x) ... (x) op (x) ... (x) I with `op` at position `slot`.
ComplexMatrix embed(const ComplexMatrix& op, std::size_t slot, std::span<const std::size_t> dims);

std::size_t product_dimension(std::span<const std::size_t> dims);

} // namespace chiralspin
