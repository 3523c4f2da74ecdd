#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "chiralspin/angmom.hpp"
#include "chiralspin/charpoly.hpp"
#include "chiralspin/chiral.hpp"
#include "chiralspin/cli.hpp"
#include "chiralspin/errors.hpp"
#include "chiralspin/io.hpp"
#include "chiralspin/models.hpp"
#include "chiralspin/rotations.hpp"

namespace py = pybind11;
using namespace chiralspin;

namespace {

using CArray = py::array_t<std::complex<double>, py::array::c_style | py::array::forcecast>;

CArray to_numpy(const ComplexMatrix& m) {
    const auto n = static_cast<py::ssize_t>(m.dim());
    CArray out({n, n});
    std::copy(m.data().begin(), m.data().end(), out.mutable_data());
    return out;
}

ComplexMatrix from_numpy(const CArray& a) {
    if (a.ndim() != 2 || a.shape(0) != a.shape(1)) throw DimensionError("expected a square 2-D array");
    return ComplexMatrix::from_row_major({a.data(), static_cast<std::size_t>(a.size())});
}

py::dict verdict_dict(const SymmetryVerdict& v) {
    py::dict d;
    d["kind"] = std::string(to_string(v.kind));
    d["residual_commute"] = v.residual_commute;
    d["residual_anticommute"] = v.residual_anticommute;
    return d;
}

py::dict pairing_dict(const PairingReport& r) {
    py::list pairs;
    for (const auto& p : r.pairs) pairs.append(py::make_tuple(p.plus, p.minus, p.mismatch));
    py::dict d;
    d["pairs"] = pairs;
    d["zero_modes"] = r.zero_modes;
    d["is_chiral_paired"] = r.is_chiral_paired;
    d["max_mismatch"] = r.max_mismatch;
    return d;
}

py::dict model_dict(const BuiltModel& m) {
    py::dict d;
    d["model"] = std::string(model_tag(m.spec));
    d["dims"] = m.dims;
    d["hamiltonian"] = to_numpy(m.hamiltonian);
    d["shift"] = m.shift;
    d["chiral_condition_met"] = m.chiral_condition_met;
    d["condition_residual"] = m.condition_residual;
    d["explanation"] = m.explanation;
    if (m.chiral_partner) {
        d["partner"] = m.chiral_partner->describe();
        d["partner_matrix"] = to_numpy(*partner_matrix(m));
    } else {
        d["partner"] = py::none();
        d["partner_matrix"] = py::none();
    }
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Chiral symmetries of angular momentum Hamiltonians (C++ core)";

    py::register_exception<Error>(m, "ChiralSpinError", PyExc_ValueError);

    m.def(
        "spin_operators",
        [](const std::string& j) {
            const SpinOperators ops = build_spin_operators(SpinLabel::parse(j));
            py::dict d;
            d["jx"] = to_numpy(ops.jx);
            d["jy"] = to_numpy(ops.jy);
            d["jz"] = to_numpy(ops.jz);
            d["jplus"] = to_numpy(ops.jplus);
            d["jminus"] = to_numpy(ops.jminus);
            d["jsq"] = to_numpy(ops.jsq);
            return d;
        },
        py::arg("j"), "Jx, Jy, Jz, J+, J-, J^2 for spin label j (basis m = j ... -j).");

    m.def(
        "eigh",
        [](const CArray& h) {
            const EigenDecomposition eig = hermitian_eigensolve(from_numpy(h));
            return py::make_tuple(eig.eigenvalues, to_numpy(eig.eigenvectors));
        },
        py::arg("h"), "Jacobi diagonalization of a Hermitian matrix: (ascending eigenvalues, eigenvectors).");

    m.def(
        "rotation",
        [](const std::string& j, std::array<double, 3> axis, double angle) {
            return to_numpy(rotation_matrix(UnitVector(axis), angle, build_spin_operators(SpinLabel::parse(j))));
        },
        py::arg("j"), py::arg("axis"), py::arg("angle"), "exp(-i angle n.J) for spin j.");

    m.def(
        "build_model",
        [](const std::string& doc) { return model_dict(build(io::parse_model(io::parse_json_text(doc)))); },
        py::arg("doc"), "Build a model from its JSON document text.");

    m.def(
        "classify",
        [](const CArray& c, const CArray& h, double tol) { return verdict_dict(classify(from_numpy(c), from_numpy(h), tol)); },
        py::arg("c"), py::arg("h"), py::arg("tol") = kClassifyTol);

    m.def(
        "pairing_check",
        [](std::vector<double> eigenvalues, double tol_pair, double tol_zero) {
            return pairing_dict(pairing_check(eigenvalues, tol_pair, tol_zero));
        },
        py::arg("eigenvalues"), py::arg("tol_pair") = 1e-9, py::arg("tol_zero") = 1e-9);

    m.def(
        "search_partners",
        [](const CArray& h, std::vector<std::size_t> dims, double tol) {
            py::list out;
            for (const auto& match : search_partners(from_numpy(h), dims, CandidateFamily::defaults(), tol)) {
                py::dict d;
                d["rotation"] = match.rotation.describe();
                d["verdict"] = verdict_dict(match.verdict);
                out.append(d);
            }
            return out;
        },
        py::arg("h"), py::arg("dims"), py::arg("tol") = kClassifyTol);

    m.def(
        "characteristic_polynomial",
        [](const CArray& h) { return characteristic_polynomial(from_numpy(h)).coeffs; }, py::arg("h"),
        "Ascending coefficients of det(H - lambda I).");

    m.def(
        "full_solve",
        [](const CArray& h, std::optional<CArray> partner) {
            std::optional<ComplexMatrix> c;
            if (partner) c = from_numpy(*partner);
            const PolySolveReport r = full_solve(from_numpy(h), c);
            py::dict d;
            d["coeffs"] = r.charpoly.coeffs;
            d["parity_ok"] = r.parity_ok;
            if (r.reduced) {
                d["zero_root_multiplicity"] = r.reduced->zero_root_multiplicity;
                d["mu_coeffs"] = r.reduced->mu_coeffs;
            } else {
                d["zero_root_multiplicity"] = py::none();
                d["mu_coeffs"] = py::none();
            }
            d["method"] = std::string(to_string(r.method));
            d["closed_form_eigenvalues"] = r.closed_form_eigenvalues;
            d["numeric_eigenvalues"] = r.numeric_eigenvalues;
            d["max_root_deviation"] = r.max_root_deviation;
            return d;
        },
        py::arg("h"), py::arg("partner") = py::none());

    m.def(
        "run_cli",
        [](std::vector<std::string> args) {
            std::ostringstream out, err;
            const int code = cli::run(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Run the command-line interface in-process: (exit code, stdout, stderr).");
}
