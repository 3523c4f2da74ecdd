#include <algorithm>
#include <numbers>

#include "doctest.h"

#include "chiralspin/charpoly.hpp"
#include "chiralspin/chiral.hpp"
#include "chiralspin/errors.hpp"
#include "chiralspin/models.hpp"
#include "test_support.hpp"

using namespace chiralspin;
using testsupport::max_abs_diff;
using testsupport::uniform;

namespace {

constexpr double pi = std::numbers::pi;

double rel_diff(double x, double ref) { return std::abs(x - ref) / std::max(std::abs(ref), 1e-300); }

} // namespace

TEST_SUITE("charpoly") {

TEST_CASE("characteristic polynomial examples") {
    const double a = 1.0, b = 2.0, c = 2.0, q = a * a + b * b + c * c;
    const CharPoly p = characteristic_polynomial(build(GeneralField{SpinLabel(2), a, b, c}).hamiltonian);
    REQUIRE(p.coeffs.size() == 4);
    CHECK(std::abs(p.coeffs[0]) < 1e-12);
    CHECK(p.coeffs[1] == doctest::Approx(q).epsilon(1e-13));
    CHECK(std::abs(p.coeffs[2]) < 1e-12);
    CHECK(p.coeffs[3] == -1.0);

    CHECK(characteristic_polynomial(ComplexMatrix(2)).coeffs == std::vector<double>{0.0, 0.0, 1.0});

    const CharPoly jz = characteristic_polynomial(build_spin_operators(SpinLabel(2)).jz);
    CHECK(max_abs_diff(jz.coeffs, {0.0, 1.0, 0.0, -1.0}) < 1e-15);

    CHECK_THROWS_AS(characteristic_polynomial(ComplexMatrix::from_rows({{0.0, 1.0}, {0.0, 0.0}})), PreconditionError);
}

TEST_CASE("coefficient sanity against trace and LU determinant") {
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 1 + trial % 8;
        const ComplexMatrix h = testsupport::random_hermitian(n);
        const CharPoly p = characteristic_polynomial(h);
        CHECK(p.coeffs[n] == (n % 2 == 0 ? 1.0 : -1.0));
        const double sign = (n - 1) % 2 == 0 ? 1.0 : -1.0;
        const double tr = trace(h).real();
        CHECK(std::abs(p.coeffs[n - 1] - sign * tr) < 1e-9 * std::max(1.0, std::abs(tr)));
        const double det = testsupport::lu_determinant(h).real();
        CHECK(std::abs(p.coeffs[0] - det) < 1e-9 * std::max(1.0, std::abs(det)));
        CHECK(p.max_imag < 1e-10);

        const double cmax = p.max_abs_coeff();
        for (double lambda : hermitian_eigenvalues(h))
            CHECK(std::abs(p(lambda)) < 1e-8 * cmax * std::pow(std::max(1.0, std::abs(lambda)), double(n)));

        // Independent oracle: expansion from the Eigen-free numeric roots.
        CHECK(max_abs_diff(p.coeffs, testsupport::expand_from_roots(hermitian_eigenvalues(h))) < 1e-8 * cmax);
    }
}

TEST_CASE("parity reduction") {
    const double q = 9.0;
    const CharPoly p = characteristic_polynomial(build(GeneralField{SpinLabel(2), 1.0, 2.0, 2.0}).hamiltonian);
    const ParityResult r = parity_reduce(p);
    CHECK(r.parity_ok);
    CHECK(r.reduced.zero_root_multiplicity == 1);
    REQUIRE(r.reduced.mu_coeffs.size() == 2);
    CHECK(r.reduced.mu_coeffs[0] == doctest::Approx(q));
    CHECK(r.reduced.mu_coeffs[1] == -1.0);

    const double a = 0.3, b = -1.7, c = 0.9, q5 = a * a + b * b + c * c;
    const CharPoly p5 = characteristic_polynomial(build(GeneralField{SpinLabel(5), a, b, c}).hamiltonian);
    const ParityResult r5 = parity_reduce(p5);
    CHECK(r5.parity_ok);
    CHECK(r5.reduced.zero_root_multiplicity == 0);
    REQUIRE(r5.reduced.mu_coeffs.size() == 4);
    CHECK(rel_diff(r5.reduced.mu_coeffs[0], -225.0 * q5 * q5 * q5 / 64.0) < 1e-9);
    CHECK(rel_diff(r5.reduced.mu_coeffs[1], 259.0 * q5 * q5 / 16.0) < 1e-9);
    CHECK(rel_diff(r5.reduced.mu_coeffs[2], -35.0 * q5 / 4.0) < 1e-9);
    CHECK(r5.reduced.mu_coeffs[3] == 1.0);

    const std::vector<double> expanded = r5.reduced.expand();
    CHECK(max_abs_diff(expanded, p5.coeffs) < 1e-9 * p5.max_abs_coeff());

    const CharPoly synthetic{{1.0, 0.0, 1.0}, 2, 0.0};
    const ParityResult rs = parity_reduce(synthetic);
    CHECK(rs.parity_ok);
    CHECK(rs.reduced.zero_root_multiplicity == 0);
    CHECK(rs.reduced.mu_coeffs == std::vector<double>{1.0, 1.0});

    const SpinOperators one = build_spin_operators(SpinLabel(2));
    const ComplexMatrix broken = build(GeneralField{SpinLabel(2), 1.0, 2.0, 0.0}).hamiltonian + one.jx * one.jx;
    CHECK_FALSE(parity_reduce(characteristic_polynomial(broken)).parity_ok);
}

TEST_CASE("parity reduction is scale invariant") {
    for (double scale : {1e-6, 1.0, 1e6}) {
        const BuiltModel m = build(GeneralField{SpinLabel(5), scale, 2 * scale, 0.5 * scale});
        const ParityResult r = parity_reduce(characteristic_polynomial(m.hamiltonian));
        CHECK(r.parity_ok);
        CHECK(r.reduced.zero_root_multiplicity == 0);
    }
}

TEST_CASE("solve_reduced") {
    const ReducedPoly cubic{0, {-225.0 / 64, 259.0 / 16, -35.0 / 4, 1.0}};
    CHECK(max_abs_diff(solve_reduced(cubic), {-2.5, -1.5, -0.5, 0.5, 1.5, 2.5}) < 1e-13);

    const ReducedPoly linear{1, {9.0, -1.0}};
    CHECK(max_abs_diff(solve_reduced(linear), {-3.0, 0.0, 3.0}) < 1e-14);

    const ReducedPoly mu{0, {0.0, 1.0}};
    CHECK(solve_reduced(mu) == std::vector<double>{0.0, 0.0});

    const ReducedPoly negative{0, {1.0, 1.0}};
    CHECK_THROWS_AS(solve_reduced(negative), InconsistencyError);

    const ReducedPoly quintic{0, {1.0, 1.0, 1.0, 1.0, 1.0, 1.0}};
    CHECK_THROWS_AS(solve_reduced(quintic), PreconditionError);
}

TEST_CASE("solvability classification") {
    CHECK(classify_solvability(6, true) == SolveMethod::Radicals);
    CHECK(classify_solvability(3, true) == SolveMethod::Radicals);
    CHECK(classify_solvability(9, true) == SolveMethod::Radicals);
    CHECK(classify_solvability(10, true) == SolveMethod::HypergeometricRequired);
    CHECK(classify_solvability(11, true) == SolveMethod::HypergeometricRequired);
    CHECK(classify_solvability(12, true) == SolveMethod::NumericOnly);
    CHECK(classify_solvability(4, false) == SolveMethod::Radicals);
    CHECK(classify_solvability(5, false) == SolveMethod::HypergeometricRequired);
    CHECK(classify_solvability(6, false) == SolveMethod::NumericOnly);
}

TEST_CASE("full_solve") {
    const BuiltModel gf = build(GeneralField{SpinLabel(5), 1.0, 2.0, 0.0});
    const PolySolveReport r = full_solve(gf.hamiltonian, partner_matrix(gf));
    CHECK(r.parity_ok);
    CHECK(r.method == SolveMethod::Radicals);
    REQUIRE(r.closed_form_eigenvalues.has_value());
    const double s = std::sqrt(5.0) / 2;
    CHECK(max_abs_diff(*r.closed_form_eigenvalues, {-5 * s, -3 * s, -s, s, 3 * s, 5 * s}) < 1e-9);
    CHECK(r.max_root_deviation < 1e-9);

    const PolySolveReport zero = full_solve(ComplexMatrix(5));
    CHECK(*zero.closed_form_eigenvalues == std::vector<double>(5, 0.0));
    CHECK(zero.numeric_eigenvalues == std::vector<double>(5, 0.0));

    const BuiltModel oh = build(OHMolecule{});
    const PolySolveReport r4 = full_solve(oh.hamiltonian, partner_matrix(oh));
    CHECK(r4.method == SolveMethod::Radicals);
    CHECK(r4.closed_form_eigenvalues->size() == 8);
    CHECK(r4.max_root_deviation < 1e-8 * std::max(1.0, frobenius_norm(oh.hamiltonian)));

    const PolySolveReport generic = full_solve(testsupport::random_hermitian(3));
    CHECK(generic.method == SolveMethod::Radicals);
    CHECK(generic.max_root_deviation < 1e-8);

    const PolySolveReport big = full_solve(build(GeneralField{SpinLabel(12), 1.0, 0.5, 0.2}).hamiltonian);
    CHECK(big.method == SolveMethod::NumericOnly);
    CHECK_FALSE(big.closed_form_eigenvalues.has_value());
    CHECK(big.numeric_eigenvalues.size() == 13);

    const PolySolveReport ten = full_solve(build(GeneralField{SpinLabel(9), 1.0, 0.6, -0.4}).hamiltonian);
    CHECK(ten.method == SolveMethod::HypergeometricRequired);
    CHECK_FALSE(ten.closed_form_eigenvalues.has_value());
}

TEST_CASE("closed form matches numeric for chiral models up to dim 9") {
    for (int trial = 0; trial < 40; ++trial) {
        const int tj = 1 + trial % 8;
        const BuiltModel m = build(GeneralField{SpinLabel(tj), uniform(-3, 3), uniform(-3, 3), uniform(-3, 3)});
        const PolySolveReport r = full_solve(m.hamiltonian, partner_matrix(m));
        CAPTURE(tj);
        CHECK(r.parity_ok);
        REQUIRE(r.closed_form_eigenvalues.has_value());
        CHECK(r.max_root_deviation < 1e-8 * std::max(1.0, frobenius_norm(m.hamiltonian)));
    }
    for (int trial = 0; trial < 10; ++trial) {
        const BuiltModel m =
            build(OHMolecule{kSpinHalf, SpinLabel(3), uniform(-2, 2), uniform(0, 2), uniform(-2, 2), uniform(0, pi)});
        const PolySolveReport r = full_solve(m.hamiltonian, partner_matrix(m));
        CHECK(r.max_root_deviation < 1e-8 * std::max(1.0, frobenius_norm(m.hamiltonian)));
    }
}

} // TEST_SUITE
