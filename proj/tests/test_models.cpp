#include <numbers>

#include "doctest.h"

#include "chiralspin/angmom.hpp"
#include "chiralspin/chiral.hpp"
#include "chiralspin/errors.hpp"
#include "chiralspin/models.hpp"
#include "test_support.hpp"

using namespace chiralspin;
using testsupport::max_abs_diff;
using testsupport::uniform;

namespace {

constexpr double pi = std::numbers::pi;

double partner_residual(const BuiltModel& m) {
    const ComplexMatrix h = shifted_hamiltonian(m);
    const ComplexMatrix c = *partner_matrix(m);
    return frobenius_norm(anticommutator(c, h));
}

// Random draws for every family that carries a partner unconditionally.
std::vector<ModelSpec> random_specs(int tj, int tj2) {
    const SpinLabel j(tj), j2(tj2);
    // Inertias satisfying 1/Ix + 1/Iy = 2/Iz.
    const double rx = uniform(0.2, 3.0), ry = uniform(0.2, 3.0);
    return {
        CrossedFields{j, uniform(-5, 5), uniform(-5, 5)},
        CrossedFieldsShifted{j, uniform(-5, 5), uniform(-5, 5), uniform(-5, 5)},
        GeneralField{j, uniform(-5, 5), uniform(-5, 5), uniform(-5, 5)},
        TriaxialRotor{j, 1.0 / rx, 1.0 / ry, 2.0 / (rx + ry)},
        ToyCoupled{j, j2, uniform(-5, 5), uniform(-5, 5)},
        OHMolecule{j, j2, uniform(-3, 3), uniform(-3, 3), uniform(-3, 3), uniform(0, 2 * pi)},
    };
}

} // namespace

TEST_SUITE("models") {

TEST_CASE("general field matches the written-out matrices") {
    for (int trial = 0; trial < 10; ++trial) {
        const double a = uniform(-3, 3), b = uniform(-3, 3), c = uniform(-3, 3);
        const BuiltModel one = build(GeneralField{SpinLabel(2), a, b, c});
        CHECK(max_abs_diff(one.hamiltonian, testsupport::general_field_j1_literal(a, b, c)) < 1e-15 * 8);
        const BuiltModel fh = build(GeneralField{SpinLabel(5), a, b, c});
        CHECK(max_abs_diff(fh.hamiltonian, testsupport::general_field_j52_literal(a, b, c)) < 1e-14);
    }
}

TEST_CASE("crossed fields at j=1/2") {
    const double a = 0.7, b = -1.3;
    const BuiltModel m = build(CrossedFields{kSpinHalf, a, b});
    CHECK(max_abs_diff(m.hamiltonian, ComplexMatrix::from_rows({{0.0, 0.5 * Complex(a, -b)}, {0.5 * Complex(a, b), 0.0}})) <
          1e-16);
    CHECK(m.shift == 0.0);
    CHECK(m.chiral_partner->describe() == "R_{1,z}(pi)");
    CHECK(shifted_hamiltonian(m) == m.hamiltonian);
}

TEST_CASE("triaxial rotor with the chiral condition") {
    const BuiltModel m = build(TriaxialRotor{SpinLabel(4), 1.0, 1.0 / 3.0, 0.5});
    CHECK(m.chiral_condition_met);
    CHECK(m.shift == doctest::Approx(6.0).epsilon(1e-15));
    const SpinOperators s = build_spin_operators(SpinLabel(4));
    const ComplexMatrix expected = Complex(-0.5) * (s.jx * s.jx - s.jy * s.jy);
    CHECK(frobenius_norm(shifted_hamiltonian(m) - expected) < 1e-12);
    CHECK(partner_residual(m) < 1e-10 * std::max(1.0, frobenius_norm(m.hamiltonian)));
    CHECK(m.chiral_partner->describe() == "R_{1,z}(pi/2)");
}

TEST_CASE("triaxial rotor without the chiral condition") {
    const BuiltModel m = build(TriaxialRotor{SpinLabel(4), 1.0, 2.0, 3.0});
    CHECK_FALSE(m.chiral_condition_met);
    CHECK_FALSE(m.chiral_partner.has_value());
    CHECK(m.condition_residual == doctest::Approx(std::abs(1.0 + 0.5 - 2.0 / 3.0)));
    CHECK(m.explanation.find("not met") != std::string::npos);
    CHECK_THROWS_AS(build(TriaxialRotor{SpinLabel(2), 0.0, 1.0, 1.0}), PreconditionError);
    CHECK_THROWS_AS(build(TriaxialRotor{SpinLabel(2), 1.0, -1.0, 1.0}), PreconditionError);
}

TEST_CASE("shifted crossed fields reduce to crossed fields") {
    const BuiltModel shifted = build(CrossedFieldsShifted{SpinLabel(2), 1.0, 2.0, 3.0});
    const BuiltModel plain = build(CrossedFields{SpinLabel(2), 1.0, 2.0});
    CHECK(shifted.shift == doctest::Approx(6.0));
    CHECK(max_abs_diff(shifted_hamiltonian(shifted), plain.hamiltonian) < 1e-14);

    for (int tj = 1; tj <= 6; ++tj) {
        const double a = uniform(-2, 2), b = uniform(-2, 2), c = uniform(-2, 2);
        const BuiltModel s = build(CrossedFieldsShifted{SpinLabel(tj), a, b, c});
        std::vector<double> base = hermitian_eigenvalues(build(CrossedFields{SpinLabel(tj), a, b}).hamiltonian);
        std::vector<double> lifted = hermitian_eigenvalues(s.hamiltonian);
        for (double& x : lifted) x -= s.shift;
        CHECK(max_abs_diff(base, lifted) < 1e-10);
    }
}

TEST_CASE("documented partners anticommute for random draws") {
    for (int tj = 0; tj <= 10; ++tj) {
        for (int trial = 0; trial < 4; ++trial) {
            for (const ModelSpec& spec : random_specs(tj, 1 + (tj + trial) % 4)) {
                const BuiltModel m = build(spec);
                CAPTURE(model_tag(spec));
                CAPTURE(tj);
                CHECK(norms_and_checks(m.hamiltonian).hermiticity_defect < 1e-12);
                REQUIRE(m.chiral_partner.has_value());
                const double scale = std::max(1.0, frobenius_norm(m.hamiltonian));
                CHECK(partner_residual(m) < 1e-10 * scale);
                CHECK(std::abs(trace(shifted_hamiltonian(m))) < 1e-10 * scale);
            }
        }
    }
}

TEST_CASE("odd powers preserve the R_z(pi) anticommutation, even powers break it") {
    const SpinOperators s = build_spin_operators(SpinLabel(2));
    const ComplexMatrix base = build(GeneralField{SpinLabel(2), 1.0, 2.0, 0.0}).hamiltonian;
    const ComplexMatrix rz = rotation_matrix(UnitVector::z(), pi, s);
    CHECK(frobenius_norm(anticommutator(rz, base + s.jx * s.jx * s.jx)) < 1e-12);
    CHECK(frobenius_norm(anticommutator(rz, base + s.jx * s.jx)) > 0.1);
}

TEST_CASE("parameters") {
    ModelSpec spec = OHMolecule{};
    CHECK(parameter_names(spec) == std::vector<std::string>{"delta", "B", "E", "theta"});
    set_parameter(spec, "B", 1.5);
    CHECK(get_parameter(spec, "B") == 1.5);
    CHECK_THROWS_AS(set_parameter(spec, "A", 1.0), PreconditionError);
    CHECK(subsystem_dims(spec) == std::vector<std::size_t>{2, 4});

    ModelSpec toy = ToyCoupled{SpinLabel(2), kSpinHalf, 1.0, 2.0};
    CHECK(parameter_names(toy) == std::vector<std::string>{"A", "B"});
    CHECK(get_parameter(toy, "A") == 1.0);

    ModelSpec rotor = TriaxialRotor{SpinLabel(2), 1.0, 2.0, 3.0};
    CHECK(get_parameter(rotor, "Iy") == 2.0);
    CHECK_THROWS_AS(set_parameter(rotor, "Iz", -1.0), PreconditionError);
    CHECK_THROWS_AS(set_parameter(rotor, "a", std::numeric_limits<double>::infinity()), PreconditionError);
}

TEST_CASE("parameter sweep") {
    std::vector<double> values;
    for (int k = 0; k < 81; ++k) values.push_back(-2.0 + 4.0 * k / 80.0);
    const std::vector<BuiltModel> sweep = parameter_sweep(GeneralField{SpinLabel(5), 1.0, 2.0, 0.0}, "c", values);
    REQUIRE(sweep.size() == 81);
    for (std::size_t k = 0; k < sweep.size(); ++k) {
        CHECK(std::get<GeneralField>(sweep[k].spec).c == values[k]);
        CHECK(std::get<GeneralField>(sweep[k].spec).a == 1.0);
        CHECK(hermitian_eigenvalues(sweep[k].hamiltonian).size() == 6);
    }
    CHECK(parameter_sweep(GeneralField{SpinLabel(5), 1.0, 2.0, 0.0}, "c", {}).empty());
    CHECK_THROWS_AS(parameter_sweep(GeneralField{}, "Ix", values), PreconditionError);

    std::vector<double> bs;
    for (int k = 0; k <= 20; ++k) bs.push_back(0.1 * k);
    for (const BuiltModel& m : parameter_sweep(OHMolecule{}, "B", bs)) {
        const ComplexMatrix h = shifted_hamiltonian(m);
        const double tol = default_pairing_tolerance(h);
        CHECK(pairing_check(hermitian_eigenvalues(h), tol, tol).is_chiral_paired);
    }
}

} // TEST_SUITE
