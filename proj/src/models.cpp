#include "chiralspin/models.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <utility>

#include "chiralspin/errors.hpp"

namespace chiralspin {

namespace {

constexpr double kTriaxialRelTol = 1e-10;

template <class... Fs>
struct Overloaded : Fs... {
    using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

using ParamRef = std::pair<std::string_view, double*>;

// Named real fields of each model, in file order.
std::vector<ParamRef> param_refs(ModelSpec& spec) {
    return std::visit(
        Overloaded{
            [](CrossedFields& m) -> std::vector<ParamRef> { return {{"a", &m.a}, {"b", &m.b}}; },
            [](CrossedFieldsShifted& m) -> std::vector<ParamRef> {
                return {{"a", &m.a}, {"b", &m.b}, {"c", &m.c}};
            },
            [](GeneralField& m) -> std::vector<ParamRef> { return {{"a", &m.a}, {"b", &m.b}, {"c", &m.c}}; },
            [](TriaxialRotor& m) -> std::vector<ParamRef> {
                return {{"Ix", &m.ix}, {"Iy", &m.iy}, {"Iz", &m.iz}};
            },
            [](ToyCoupled& m) -> std::vector<ParamRef> { return {{"A", &m.a}, {"B", &m.b}}; },
            [](OHMolecule& m) -> std::vector<ParamRef> {
                return {{"delta", &m.delta}, {"B", &m.b}, {"E", &m.e}, {"theta", &m.theta}};
            },
        },
        spec);
}

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(6);
    os << x;
    return os.str();
}

CompositeRotation single(const UnitVector& axis, double angle, std::size_t slot = 0) {
    return CompositeRotation({RotationSpec{slot, axis, angle}});
}

constexpr double pi = std::numbers::pi;

BuiltModel build_model(const CrossedFields& m) {
    const SpinOperators s = build_spin_operators(m.j);
    BuiltModel out{m, {m.j.dimension()}, Complex(m.a) * s.jx + Complex(m.b) * s.jy};
    out.chiral_partner = single(UnitVector::z(), pi);
    out.explanation = "R_z(pi) reverses Jx and Jy";
    return out;
}

BuiltModel build_model(const CrossedFieldsShifted& m) {
    const SpinOperators s = build_spin_operators(m.j);
    BuiltModel out{m, {m.j.dimension()}, Complex(m.a) * s.jx + Complex(m.b) * s.jy + Complex(m.c) * s.jsq};
    out.shift = m.c * m.j.casimir();
    out.chiral_partner = single(UnitVector::z(), pi);
    out.explanation = "c J^2 = c j(j+1) is constant; R_z(pi) reverses the remainder";
    return out;
}

BuiltModel build_model(const GeneralField& m) {
    const SpinOperators s = build_spin_operators(m.j);
    BuiltModel out{m, {m.j.dimension()}, s.dot(m.a, m.b, m.c)};
    const double perp = std::hypot(m.a, m.b);
    const UnitVector axis = perp > 0.0 ? UnitVector(m.b / perp, -m.a / perp, 0.0) : UnitVector::x();
    out.chiral_partner = single(axis, pi);
    out.explanation = "R_n(pi) with n perpendicular to the field reverses a.J";
    return out;
}

BuiltModel build_model(const TriaxialRotor& m) {
    const SpinOperators s = build_spin_operators(m.j);
    const ComplexMatrix h = Complex(0.5 / m.ix) * (s.jx * s.jx) + Complex(0.5 / m.iy) * (s.jy * s.jy) +
                            Complex(0.5 / m.iz) * (s.jz * s.jz);
    BuiltModel out{m, {m.j.dimension()}, h};
    out.shift = m.j.casimir() / (2.0 * m.iz);

    const double rx = 1.0 / m.ix, ry = 1.0 / m.iy, rz = 1.0 / m.iz;
    out.condition_residual = std::abs(rx + ry - 2.0 * rz);
    out.chiral_condition_met = out.condition_residual <= kTriaxialRelTol * std::max({rx, ry, rz});
    if (out.chiral_condition_met) {
        out.chiral_partner = single(UnitVector::z(), pi / 2);
        out.explanation = "1/Ix + 1/Iy = 2/Iz holds; H - C2 = D (Jx^2 - Jy^2) with D = " +
                          fmt(0.5 * (rx - rz)) + ", reversed by R_z(pi/2)";
    } else {
        out.explanation = "chiral condition 1/Ix + 1/Iy = 2/Iz not met (|1/Ix + 1/Iy - 2/Iz| = " +
                          fmt(out.condition_residual) + ")";
    }
    return out;
}

BuiltModel build_model(const ToyCoupled& m) {
    const SpinOperators s1 = build_spin_operators(m.j1);
    const SpinOperators s2 = build_spin_operators(m.j2);
    BuiltModel out{m, {m.j1.dimension(), m.j2.dimension()},
                   Complex(m.a) * kron(s1.jy, s2.jy) + Complex(m.b) * kron(s1.jz, s2.jz)};
    out.chiral_partner = CompositeRotation({RotationSpec{0, UnitVector::y(), pi}, RotationSpec{1, UnitVector::z(), pi}});
    out.explanation = "R_{1,y}(pi) R_{2,z}(pi) reverses J1y J2y and J1z J2z";
    return out;
}

BuiltModel build_model(const OHMolecule& m) {
    const SpinOperators s1 = build_spin_operators(m.j1);
    const SpinOperators s2 = build_spin_operators(m.j2);
    const ComplexMatrix i1 = ComplexMatrix::identity(m.j1.dimension());
    const ComplexMatrix i2 = ComplexMatrix::identity(m.j2.dimension());
    const ComplexMatrix tilted = Complex(std::cos(m.theta)) * s2.jz - Complex(std::sin(m.theta)) * s2.jx;
    BuiltModel out{m, {m.j1.dimension(), m.j2.dimension()},
                   Complex(m.delta) * kron(s1.jz, i2) + Complex(m.b) * kron(i1, s2.jz) +
                       Complex(m.e) * kron(s1.jx, tilted)};
    out.chiral_partner = CompositeRotation({RotationSpec{0, UnitVector::x(), pi}, RotationSpec{1, UnitVector::y(), pi}});
    out.explanation = "R_{1,x}(pi) R_{2,y}(pi) reverses every term";
    return out;
}

} // namespace

std::string_view model_tag(const ModelSpec& spec) {
    return std::visit(Overloaded{
                          [](const CrossedFields&) { return std::string_view("crossed_fields"); },
                          [](const CrossedFieldsShifted&) { return std::string_view("crossed_fields_shifted"); },
                          [](const GeneralField&) { return std::string_view("general_field"); },
                          [](const TriaxialRotor&) { return std::string_view("triaxial_rotor"); },
                          [](const ToyCoupled&) { return std::string_view("toy_coupled"); },
                          [](const OHMolecule&) { return std::string_view("oh_molecule"); },
                      },
                      spec);
}

std::vector<std::string> parameter_names(const ModelSpec& spec) {
    ModelSpec copy = spec;
    std::vector<std::string> names;
    for (const auto& [name, ptr] : param_refs(copy)) names.emplace_back(name);
    return names;
}

double get_parameter(const ModelSpec& spec, std::string_view name) {
    ModelSpec copy = spec;
    for (const auto& [pname, ptr] : param_refs(copy)) {
        if (pname == name) return *ptr;
    }
    throw PreconditionError("model " + std::string(model_tag(spec)) + " has no parameter '" + std::string(name) + "'");
}

void set_parameter(ModelSpec& spec, std::string_view name, double value) {
    for (const auto& [pname, ptr] : param_refs(spec)) {
        if (pname == name) {
            const double previous = *ptr;
            *ptr = value;
            try {
                validate(spec);
            } catch (...) {
                *ptr = previous;
                throw;
            }
            return;
        }
    }
    throw PreconditionError("model " + std::string(model_tag(spec)) + " has no parameter '" + std::string(name) + "'");
}

std::vector<std::size_t> subsystem_dims(const ModelSpec& spec) {
    return std::visit(Overloaded{
                          [](const ToyCoupled& m) { return std::vector<std::size_t>{m.j1.dimension(), m.j2.dimension()}; },
                          [](const OHMolecule& m) { return std::vector<std::size_t>{m.j1.dimension(), m.j2.dimension()}; },
                          [](const auto& m) { return std::vector<std::size_t>{m.j.dimension()}; },
                      },
                      spec);
}

void validate(const ModelSpec& spec) {
    ModelSpec copy = spec;
    for (const auto& [name, ptr] : param_refs(copy)) {
        if (!std::isfinite(*ptr)) {
            throw PreconditionError("parameter '" + std::string(name) + "' must be finite");
        }
    }
    if (const auto* rotor = std::get_if<TriaxialRotor>(&spec)) {
        if (!(rotor->ix > 0.0 && rotor->iy > 0.0 && rotor->iz > 0.0)) {
            throw PreconditionError("moments of inertia must be strictly positive");
        }
    }
}

BuiltModel build(const ModelSpec& spec) {
    validate(spec);
    return std::visit([](const auto& m) { return build_model(m); }, spec);
}

ComplexMatrix shifted_hamiltonian(const BuiltModel& model) {
    if (model.shift == 0.0) return model.hamiltonian;
    ComplexMatrix h = model.hamiltonian - Complex(model.shift) * ComplexMatrix::identity(model.hamiltonian.dim());
    // Removing the constant can leave pure cancellation noise (spherical rotor, j <= 1/2 rotor).
    if (frobenius_norm(h) <= hermitian_tolerance(model.hamiltonian)) return ComplexMatrix(h.dim());
    return h;
}

std::optional<ComplexMatrix> partner_matrix(const BuiltModel& model) {
    if (!model.chiral_partner) return std::nullopt;
    return composite_matrix(*model.chiral_partner, model.dims);
}

std::vector<BuiltModel> parameter_sweep(const ModelSpec& spec, std::string_view param_name,
                                        std::span<const double> values) {
    ModelSpec current = spec;
    (void)get_parameter(current, param_name);
    std::vector<BuiltModel> out;
    out.reserve(values.size());
    for (double v : values) {
        set_parameter(current, param_name, v);
        out.push_back(build(current));
    }
    return out;
}

} // namespace chiralspin
