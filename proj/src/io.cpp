#include "chiralspin/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "chiralspin/errors.hpp"

namespace chiralspin::io {

namespace {

void reject_unknown_keys(const Json& obj, const std::set<std::string>& allowed, const std::string& where) {
    if (!obj.is_object()) throw ParseError(where + ": expected a JSON object");
    for (const auto& [key, value] : obj.items()) {
        if (!allowed.contains(key)) throw ParseError(where + ": unknown key '" + key + "'");
    }
}

double parse_real(const Json& v, const std::string& what) {
    if (v.is_number()) {
        const double x = v.get<double>();
        if (!std::isfinite(x)) throw ParseError(what + ": value must be finite");
        return x;
    }
    if (v.is_string()) {
        try {
            return parse_angle(v.get<std::string>());
        } catch (const ParseError&) {
            throw ParseError(what + ": cannot parse '" + v.get<std::string>() + "' as a number");
        }
    }
    throw ParseError(what + ": expected a number");
}

SpinLabel parse_spin(const Json& v, const std::string& what) {
    if (v.is_string()) return SpinLabel::parse(v.get<std::string>());
    if (v.is_number()) {
        const double twice = 2.0 * v.get<double>();
        if (twice >= 0.0 && twice <= 2000.0 && twice == std::floor(twice)) return SpinLabel(int(twice));
    }
    throw ParseError(what + ": expected a spin label such as \"1/2\" or \"2\"");
}

template <class Model>
Model parse_single(const Json& doc) {
    if (!doc.contains("j")) throw ParseError("model file: missing 'j'");
    Model m{};
    m.j = parse_spin(doc["j"], "j");
    return m;
}

template <class Model>
Model parse_coupled(const Json& doc, bool labels_required) {
    Model m{};
    for (const char* key : {"j1", "j2"}) {
        if (!doc.contains(key) && labels_required) throw ParseError(std::string("model file: missing '") + key + "'");
    }
    if (doc.contains("j1")) m.j1 = parse_spin(doc["j1"], "j1");
    if (doc.contains("j2")) m.j2 = parse_spin(doc["j2"], "j2");
    return m;
}

} // namespace

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x == 0.0 ? 0.0 : x); // no "-0"
    return buf;
}

std::string format_short(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", x == 0.0 ? 0.0 : x);
    return buf;
}

ModelSpec parse_model(const Json& doc) {
    reject_unknown_keys(doc, {"model", "j", "j1", "j2", "params"}, "model file");
    if (!doc.contains("model") || !doc["model"].is_string()) throw ParseError("model file: missing string 'model'");
    const std::string tag = doc["model"].get<std::string>();

    ModelSpec spec;
    const bool coupled = tag == "toy_coupled" || tag == "oh_molecule";
    if (coupled && doc.contains("j")) throw ParseError("model file: '" + tag + "' takes 'j1' and 'j2', not 'j'");
    if (!coupled && (doc.contains("j1") || doc.contains("j2"))) {
        throw ParseError("model file: '" + tag + "' takes 'j', not 'j1'/'j2'");
    }

    if (tag == "crossed_fields") spec = parse_single<CrossedFields>(doc);
    else if (tag == "crossed_fields_shifted") spec = parse_single<CrossedFieldsShifted>(doc);
    else if (tag == "general_field") spec = parse_single<GeneralField>(doc);
    else if (tag == "triaxial_rotor") spec = parse_single<TriaxialRotor>(doc);
    else if (tag == "toy_coupled") spec = parse_coupled<ToyCoupled>(doc, true);
    else if (tag == "oh_molecule") spec = parse_coupled<OHMolecule>(doc, false);
    else throw ParseError("model file: unknown model '" + tag + "'");

    if (doc.contains("params")) {
        const Json& params = doc["params"];
        if (!params.is_object()) throw ParseError("model file: 'params' must be an object");
        for (const auto& [name, value] : params.items()) {
            const double x = parse_real(value, "parameter '" + name + "'");
            try {
                set_parameter(spec, name, x);
            } catch (const PreconditionError& e) {
                throw ParseError(std::string("model file: ") + e.what());
            }
        }
    }
    try {
        validate(spec);
    } catch (const PreconditionError& e) {
        throw ParseError(std::string("model file: ") + e.what());
    }
    return spec;
}

Json to_json(const ModelSpec& spec) {
    Json doc;
    doc["model"] = std::string(model_tag(spec));
    std::visit(
        [&](const auto& m) {
            if constexpr (requires { m.j1; }) {
                doc["j1"] = m.j1.to_string();
                doc["j2"] = m.j2.to_string();
            } else {
                doc["j"] = m.j.to_string();
            }
        },
        spec);
    Json params = Json::object();
    for (const auto& name : parameter_names(spec)) params[name] = get_parameter(spec, name);
    doc["params"] = params;
    return doc;
}

RotationSpec parse_rotation(const Json& doc) {
    reject_unknown_keys(doc, {"slot", "axis", "angle"}, "rotation");
    RotationSpec spec;
    if (doc.contains("slot")) {
        if (!doc["slot"].is_number_unsigned()) throw ParseError("rotation: 'slot' must be a non-negative integer");
        spec.slot = doc["slot"].get<std::size_t>();
    }
    if (!doc.contains("axis") || !doc["axis"].is_array() || doc["axis"].size() != 3) {
        throw ParseError("rotation: 'axis' must be a 3-element array");
    }
    Vec3 axis{};
    for (std::size_t k = 0; k < 3; ++k) axis[k] = parse_real(doc["axis"][k], "rotation axis");
    try {
        spec.axis = UnitVector(axis);
    } catch (const PreconditionError& e) {
        throw ParseError(std::string("rotation: ") + e.what());
    }
    if (!doc.contains("angle")) throw ParseError("rotation: missing 'angle'");
    spec.angle = parse_real(doc["angle"], "rotation angle");
    return spec;
}

CompositeRotation parse_composite(const Json& doc) {
    std::vector<RotationSpec> factors;
    if (doc.is_array()) {
        for (const auto& item : doc) factors.push_back(parse_rotation(item));
    } else {
        factors.push_back(parse_rotation(doc));
    }
    try {
        return CompositeRotation(std::move(factors));
    } catch (const PreconditionError& e) {
        throw ParseError(std::string("rotation: ") + e.what());
    }
}

Json to_json(const RotationSpec& spec) {
    const Vec3& n = spec.axis.components();
    return Json{{"slot", spec.slot}, {"axis", Json::array({n[0], n[1], n[2]})}, {"angle", format_angle(spec.angle)}};
}

Json to_json(const CompositeRotation& rot) {
    Json factors = Json::array();
    for (const auto& f : rot.factors()) factors.push_back(to_json(f));
    return Json{{"description", rot.describe()}, {"factors", factors}};
}

MatrixInput parse_matrix(const Json& doc) {
    reject_unknown_keys(doc, {"dims", "entries"}, "matrix file");
    if (!doc.contains("dims") || !doc["dims"].is_array() || doc["dims"].empty()) {
        throw ParseError("matrix file: 'dims' must be a non-empty array");
    }
    std::vector<std::size_t> dims;
    for (const auto& d : doc["dims"]) {
        if (!d.is_number_unsigned() || d.get<std::size_t>() == 0) {
            throw ParseError("matrix file: subsystem dimensions must be positive integers");
        }
        dims.push_back(d.get<std::size_t>());
    }
    if (!doc.contains("entries") || !doc["entries"].is_array()) throw ParseError("matrix file: missing 'entries'");
    std::vector<Complex> entries;
    for (const auto& e : doc["entries"]) {
        if (!e.is_array() || e.size() != 2) throw ParseError("matrix file: each entry must be [re, im]");
        entries.emplace_back(parse_real(e[0], "entry"), parse_real(e[1], "entry"));
    }
    const std::size_t n = product_dimension(dims);
    if (entries.size() != n * n) {
        throw ParseError("matrix file: expected " + std::to_string(n * n) + " entries for dims, got " +
                         std::to_string(entries.size()));
    }
    MatrixInput out{ComplexMatrix::from_row_major(entries), std::move(dims)};
    if (!is_hermitian(out.matrix)) throw ParseError("matrix file: matrix is not Hermitian");
    return out;
}

Json load_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path.string() + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_json_text(buf.str());
}

Json parse_json_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

Json to_json(const SymmetryVerdict& v) {
    return Json{{"kind", std::string(to_string(v.kind))},
                {"residual_commute", v.residual_commute},
                {"residual_anticommute", v.residual_anticommute}};
}

Json to_json(const PairingReport& r) {
    Json pairs = Json::array();
    for (const auto& p : r.pairs) pairs.push_back(Json{{"plus", p.plus}, {"minus", p.minus}, {"mismatch", p.mismatch}});
    return Json{{"pairs", pairs},
                {"zero_modes", r.zero_modes},
                {"is_chiral_paired", r.is_chiral_paired},
                {"max_mismatch", r.max_mismatch}};
}

Json to_json(const ChiralMapReport& r) {
    return Json{{"ok", r.ok},
                {"states_checked", r.states_checked},
                {"max_residual", r.max_residual},
                {"tolerance", r.tolerance}};
}

Json to_json(const CharPoly& p) {
    return Json{{"dim", p.dim}, {"coeffs", p.coeffs}, {"max_imag", p.max_imag}};
}

Json to_json(const ReducedPoly& r) {
    return Json{{"zero_root_multiplicity", r.zero_root_multiplicity}, {"mu_coeffs", r.mu_coeffs}};
}

Json to_json(const PolySolveReport& r) {
    Json doc{{"charpoly", to_json(r.charpoly)},
             {"parity_ok", r.parity_ok},
             {"reduced", r.reduced ? to_json(*r.reduced) : Json(nullptr)},
             {"method", std::string(to_string(r.method))},
             {"closed_form_eigenvalues", r.closed_form_eigenvalues ? Json(*r.closed_form_eigenvalues) : Json(nullptr)},
             {"numeric_eigenvalues", r.numeric_eigenvalues},
             {"max_root_deviation", r.max_root_deviation}};
    return doc;
}

Json to_json(const PartnerMatch& m) {
    Json doc = to_json(m.rotation);
    doc["verdict"] = to_json(m.verdict);
    return doc;
}

} // namespace chiralspin::io
