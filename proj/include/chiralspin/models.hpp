#pragma once

#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "chiralspin/angmom.hpp"
#include "chiralspin/linalg.hpp"
#include "chiralspin/rotations.hpp"

namespace chiralspin {

// H = a Jx + b Jy
struct CrossedFields {
    SpinLabel j;
    double a = 0.0;
    double b = 0.0;
};

// H = a Jx + b Jy + c J^2
struct CrossedFieldsShifted {
    SpinLabel j;
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
};

// H = a Jx + b Jy + c Jz
struct GeneralField {
    SpinLabel j;
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
};

// H = Jx^2/(2 Ix) + Jy^2/(2 Iy) + Jz^2/(2 Iz)
struct TriaxialRotor {
    SpinLabel j;
    double ix = 1.0;
    double iy = 1.0;
    double iz = 1.0;
};

// H = A J1y J2y + B J1z J2z
struct ToyCoupled {
    SpinLabel j1;
    SpinLabel j2;
    double a = 0.0;
    double b = 0.0;
};

// H = delta J1z + B J2z + E J1x (J2z cos(theta) - J2x sin(theta))
struct OHMolecule {
    SpinLabel j1{1};
    SpinLabel j2{3};
    double delta = 1.0;
    double b = 0.3;
    double e = 1.0;
    double theta = std::numbers::pi / 4;
};

using ModelSpec =
    std::variant<CrossedFields, CrossedFieldsShifted, GeneralField, TriaxialRotor, ToyCoupled, OHMolecule>;

/// File tag: crossed_fields, crossed_fields_shifted, general_field,
/// triaxial_rotor, toy_coupled, oh_molecule.
std::string_view model_tag(const ModelSpec& spec);
std::vector<std::string> parameter_names(const ModelSpec& spec);
double get_parameter(const ModelSpec& spec, std::string_view name);
/// Throws PreconditionError for a name the model does not have.
void set_parameter(ModelSpec& spec, std::string_view name, double value);
/// Subsystem dimensions (one entry for single-spin models).
std::vector<std::size_t> subsystem_dims(const ModelSpec& spec);
/// Finite parameters, strictly positive moments of inertia.
void validate(const ModelSpec& spec);

struct BuiltModel {
    ModelSpec spec;
    std::vector<std::size_t> dims;
    ComplexMatrix hamiltonian;
    double shift = 0.0; // constant removed to isolate the chiral part
    std::optional<CompositeRotation> chiral_partner{};
    bool chiral_condition_met = true;
    double condition_residual = 0.0; // triaxial: |1/Ix + 1/Iy - 2/Iz|
    std::string explanation{};
};

BuiltModel build(const ModelSpec& spec);

/// H - shift * I. A result at round-off level (norm below 1e-12 max(1, ||H||_F)) is returned as exactly zero.
ComplexMatrix shifted_hamiltonian(const BuiltModel& model);

/// Matrix of the documented partner, if the model has one.
std::optional<ComplexMatrix> partner_matrix(const BuiltModel& model);

std::vector<BuiltModel> parameter_sweep(const ModelSpec& spec, std::string_view param_name,
                                        std::span<const double> values);

} // namespace chiralspin
