#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "chiralspin/angmom.hpp"
#include "chiralspin/linalg.hpp"

namespace chiralspin {

using Vec3 = std::array<double, 3>;

/// Rotation axis of unit length. Inputs within 1e-6 of unit length are
/// renormalized; anything further off is rejected.
class UnitVector {
public:
    UnitVector(double nx, double ny, double nz);
    explicit UnitVector(const Vec3& v) : UnitVector(v[0], v[1], v[2]) {}

    static UnitVector x() { return {1.0, 0.0, 0.0}; }
    static UnitVector y() { return {0.0, 1.0, 0.0}; }
    static UnitVector z() { return {0.0, 0.0, 1.0}; }

    double nx() const noexcept { return v_[0]; }
    double ny() const noexcept { return v_[1]; }
    double nz() const noexcept { return v_[2]; }
    const Vec3& components() const noexcept { return v_; }

    /// "x", "y", "z" for the coordinate axes, otherwise "[nx,ny,nz]".
    std::string label() const;

    friend bool operator==(const UnitVector&, const UnitVector&) = default;

private:
    Vec3 v_;
};

struct RotationSpec {
    std::size_t slot = 0;
    UnitVector axis = UnitVector::z();
    double angle = 0.0; // radians

    friend bool operator==(const RotationSpec&, const RotationSpec&) = default;
};

/// Product of single-spin rotations, at most one per subsystem slot.
class CompositeRotation {
public:
    CompositeRotation() = default;
    explicit CompositeRotation(std::vector<RotationSpec> factors);

    const std::vector<RotationSpec>& factors() const noexcept { return factors_; }
    bool empty() const noexcept { return factors_.empty(); }

    /// e.g. "R_{1,y}(pi) R_{2,z}(pi)" with 1-based slot labels; "I" when empty.
    std::string describe() const;

    friend bool operator==(const CompositeRotation&, const CompositeRotation&) = default;

private:
    std::vector<RotationSpec> factors_;
};

/// Parses a radian value or one of "pi", "-pi", "pi/2", "pi/4", "2pi".
double parse_angle(std::string_view text);
/// Inverse of parse_angle for the named multiples of pi, numeric otherwise.
std::string format_angle(double angle);

/// exp(-i theta n.J) on the spin described by `ops`.
ComplexMatrix rotation_matrix(const RotationSpec& spec, const SpinOperators& ops);
ComplexMatrix rotation_matrix(const UnitVector& axis, double angle, const SpinOperators& ops);

/// Kronecker product of the per-slot rotations with identity on unused slots.
/// Subsystem s is a spin with 2j+1 = dims[s].
ComplexMatrix composite_matrix(const CompositeRotation& rot, std::span<const std::size_t> dims);

/// R M R^+ for unitary R.
ComplexMatrix conjugate(const ComplexMatrix& r, const ComplexMatrix& m);

Vec3 cross(const Vec3& a, const Vec3& b);
double dot(const Vec3& a, const Vec3& b);

/// || R_n(theta) (a.J) R_n(theta)^+ - [cos(theta) a.J + sin(theta) (n x a).J
///    + (1 - cos(theta)) (n.a) n.J] ||_F
double rotation_identity_residual(const UnitVector& n, const Vec3& a, double theta,
                                  const SpinOperators& ops);

} // namespace chiralspin
