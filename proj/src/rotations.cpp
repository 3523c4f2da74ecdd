#include "chiralspin/rotations.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>

#include "chiralspin/errors.hpp"

namespace chiralspin {

namespace {

constexpr double kAxisRenormTol = 1e-6;
constexpr double kUnitaryTol = 1e-9;

std::string format_number(double x) {
    std::ostringstream os;
    os.precision(17);
    os << x;
    return os.str();
}

} // namespace

UnitVector::UnitVector(double nx, double ny, double nz) : v_{nx, ny, nz} {
    const double len = std::sqrt(nx * nx + ny * ny + nz * nz);
    if (!std::isfinite(len) || std::abs(len - 1.0) > kAxisRenormTol) {
        throw PreconditionError("rotation axis [" + format_number(nx) + "," + format_number(ny) + "," +
                                format_number(nz) + "] is not of unit length");
    }
    for (double& c : v_) c /= len;
}

std::string UnitVector::label() const {
    if (v_ == Vec3{1, 0, 0}) return "x";
    if (v_ == Vec3{0, 1, 0}) return "y";
    if (v_ == Vec3{0, 0, 1}) return "z";
    return "[" + format_number(v_[0]) + "," + format_number(v_[1]) + "," + format_number(v_[2]) + "]";
}

CompositeRotation::CompositeRotation(std::vector<RotationSpec> factors) : factors_(std::move(factors)) {
    std::stable_sort(factors_.begin(), factors_.end(),
                     [](const RotationSpec& a, const RotationSpec& b) { return a.slot < b.slot; });
    for (std::size_t k = 0; k < factors_.size(); ++k) {
        if (!std::isfinite(factors_[k].angle)) throw PreconditionError("rotation angle must be finite");
        if (k > 0 && factors_[k].slot == factors_[k - 1].slot) {
            throw PreconditionError("composite rotation: duplicate slot " + std::to_string(factors_[k].slot));
        }
    }
}

std::string CompositeRotation::describe() const {
    if (factors_.empty()) return "I";
    std::string out;
    for (const auto& f : factors_) {
        if (!out.empty()) out += ' ';
        out += "R_{" + std::to_string(f.slot + 1) + "," + f.axis.label() + "}(" + format_angle(f.angle) + ")";
    }
    return out;
}

double parse_angle(std::string_view text) {
    std::string_view body = text;
    double sign = 1.0;
    if (!body.empty() && body.front() == '-') {
        sign = -1.0;
        body.remove_prefix(1);
    }
    constexpr double pi = std::numbers::pi;
    if (body == "pi") return sign * pi;
    if (body == "pi/2") return sign * pi / 2;
    if (body == "pi/4") return sign * pi / 4;
    if (body == "2pi" || body == "2*pi") return sign * 2 * pi;

    double value = 0.0;
    const char* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (text.empty() || ec != std::errc{} || ptr != end || !std::isfinite(value)) {
        throw ParseError("invalid angle '" + std::string(text) + "'");
    }
    return value;
}

std::string format_angle(double angle) {
    constexpr double pi = std::numbers::pi;
    const std::string sign = angle < 0 ? "-" : "";
    const double mag = std::abs(angle);
    if (mag == pi) return sign + "pi";
    if (mag == pi / 2) return sign + "pi/2";
    if (mag == pi / 4) return sign + "pi/4";
    if (mag == 2 * pi) return sign + "2pi";
    return format_number(angle);
}

ComplexMatrix rotation_matrix(const UnitVector& axis, double angle, const SpinOperators& ops) {
    if (!std::isfinite(angle)) throw PreconditionError("rotation angle must be finite");
    return unitary_exp(ops.dot(axis.nx(), axis.ny(), axis.nz()), angle);
}

ComplexMatrix rotation_matrix(const RotationSpec& spec, const SpinOperators& ops) {
    return rotation_matrix(spec.axis, spec.angle, ops);
}

ComplexMatrix composite_matrix(const CompositeRotation& rot, std::span<const std::size_t> dims) {
    for (const auto& f : rot.factors()) {
        if (f.slot >= dims.size()) {
            throw DimensionError("composite rotation: slot " + std::to_string(f.slot) + " out of range for " +
                                 std::to_string(dims.size()) + " subsystems");
        }
    }
    ComplexMatrix out = ComplexMatrix::identity(1);
    auto factor = rot.factors().begin();
    for (std::size_t s = 0; s < dims.size(); ++s) {
        if (dims[s] == 0) throw DimensionError("composite rotation: zero subsystem dimension");
        if (factor != rot.factors().end() && factor->slot == s) {
            const SpinOperators ops = build_spin_operators(SpinLabel(static_cast<int>(dims[s]) - 1));
            out = kron(out, rotation_matrix(*factor, ops));
            ++factor;
        } else {
            out = kron(out, ComplexMatrix::identity(dims[s]));
        }
    }
    return out;
}

ComplexMatrix conjugate(const ComplexMatrix& r, const ComplexMatrix& m) {
    if (r.dim() != m.dim()) throw DimensionError("conjugate: dimension mismatch");
    const ComplexMatrix r_adj = adjoint(r);
    const double defect = frobenius_norm(r_adj * r - ComplexMatrix::identity(r.dim()));
    if (defect > kUnitaryTol) {
        throw PreconditionError("conjugate: rotation is not unitary (defect " + format_number(defect) + ")");
    }
    return r * m * r_adj;
}

Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

double rotation_identity_residual(const UnitVector& n, const Vec3& a, double theta, const SpinOperators& ops) {
    const ComplexMatrix a_dot_j = ops.dot(a[0], a[1], a[2]);
    const ComplexMatrix lhs = conjugate(rotation_matrix(n, theta, ops), a_dot_j);

    const Vec3& nv = n.components();
    const Vec3 n_cross_a = cross(nv, a);
    const double c = std::cos(theta);
    const ComplexMatrix rhs = Complex(c) * a_dot_j +
                              Complex(std::sin(theta)) * ops.dot(n_cross_a[0], n_cross_a[1], n_cross_a[2]) +
                              Complex((1.0 - c) * dot(nv, a)) * ops.dot(nv[0], nv[1], nv[2]);
    return frobenius_norm(lhs - rhs);
}

} // namespace chiralspin
