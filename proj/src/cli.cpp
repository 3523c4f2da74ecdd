#include "chiralspin/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "chiralspin/angmom.hpp"
#include "chiralspin/charpoly.hpp"
#include "chiralspin/chiral.hpp"
#include "chiralspin/errors.hpp"
#include "chiralspin/io.hpp"
#include "chiralspin/models.hpp"

namespace chiralspin::cli {

namespace {

using io::Json;

struct Globals {
    std::string format = "text";
    std::optional<double> tol;
    std::string out;

    bool json() const { return format == "json"; }
    double classify_tol() const { return tol.value_or(kClassifyTol); }
};

// Report sink: --out file when given, the caller's stream otherwise.
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw ParseError("cannot write '" + path + "'");
            stream_ = &file_;
        }
    }
    std::ostream& operator*() { return *stream_; }

private:
    std::ofstream file_;
    std::ostream* stream_;
};

std::string join_short(const std::vector<double>& xs) {
    std::string s;
    for (double x : xs) {
        if (!s.empty()) s += ", ";
        s += io::format_short(x);
    }
    return s;
}

const ComplexMatrix& pick_operator(const SpinOperators& ops, const std::string& which) {
    if (which == "jx") return ops.jx;
    if (which == "jy") return ops.jy;
    if (which == "jz") return ops.jz;
    if (which == "jplus") return ops.jplus;
    if (which == "jminus") return ops.jminus;
    return ops.jsq;
}

int cmd_ops(const Globals& g, const std::string& j_text, const std::string& which, std::ostream& out) {
    const SpinLabel j = SpinLabel::parse(j_text);
    const SpinOperators ops = build_spin_operators(j);
    const ComplexMatrix& m = pick_operator(ops, which);
    const std::size_t n = m.dim();
    Sink sink(g.out, out);
    if (g.json()) {
        Json re = Json::array(), im = Json::array();
        for (std::size_t r = 0; r < n; ++r) {
            Json rr = Json::array(), ri = Json::array();
            for (std::size_t c = 0; c < n; ++c) {
                rr.push_back(m(r, c).real());
                ri.push_back(m(r, c).imag());
            }
            re.push_back(rr);
            im.push_back(ri);
        }
        *sink << Json{{"j", j.to_string()}, {"which", which}, {"dim", n}, {"real", re}, {"imag", im}}.dump(2) << '\n';
        return kExitOk;
    }
    *sink << which << " for j = " << j.to_string() << " (dimension " << n << ", basis m = j ... -j)\n";
    for (const char* part : {"real", "imag"}) {
        *sink << part << " part:\n";
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = 0; c < n; ++c) {
                const double v = std::string(part) == "real" ? m(r, c).real() : m(r, c).imag();
                *sink << std::setw(12) << io::format_short(v == 0.0 ? 0.0 : v);
            }
            *sink << '\n';
        }
    }
    return kExitOk;
}

BuiltModel load_model(const std::string& path) { return build(io::parse_model(io::load_json(path))); }

CompositeRotation parse_rotation_arg(const std::string& arg) {
    const auto first = arg.find_first_not_of(" \t");
    if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) {
        return io::parse_composite(io::parse_json_text(arg));
    }
    return io::parse_composite(io::load_json(arg));
}

int cmd_verify(const Globals& g, const std::string& model_file, const std::string& rotation, std::ostream& out) {
    const BuiltModel model = load_model(model_file);
    Sink sink(g.out, out);

    CompositeRotation partner;
    if (rotation == "auto") {
        if (!model.chiral_partner) {
            if (g.json()) {
                *sink << Json{{"model", io::to_json(model.spec)},
                              {"chiral_condition_met", false},
                              {"condition_residual", model.condition_residual},
                              {"explanation", model.explanation}}
                             .dump(2)
                      << '\n';
            } else {
                *sink << "model: " << model_tag(model.spec) << "\n"
                      << "no documented chiral partner: " << model.explanation << "\n"
                      << "condition residual: " << io::format_double(model.condition_residual) << "\n";
            }
            return kExitNegative;
        }
        partner = *model.chiral_partner;
    } else {
        partner = parse_rotation_arg(rotation);
    }

    const ComplexMatrix c = composite_matrix(partner, model.dims);
    const ComplexMatrix h = shifted_hamiltonian(model);
    const SymmetryVerdict verdict = classify(c, h, g.classify_tol());
    const double tol = default_pairing_tolerance(h);
    const PairingReport pairing = pairing_check(hermitian_eigenvalues(h), tol, tol);
    const bool anticommutes = verdict.kind == SymmetryKind::Anticommuting || verdict.kind == SymmetryKind::Both;
    std::optional<ChiralMapReport> map;
    if (anticommutes) map = chiral_map_check(c, h, g.classify_tol());
    const bool verified = anticommutes && pairing.is_chiral_paired && (!map || map->ok);

    if (g.json()) {
        *sink << Json{{"model", io::to_json(model.spec)},
                      {"shift", model.shift},
                      {"rotation", io::to_json(partner)},
                      {"verdict", io::to_json(verdict)},
                      {"pairing", io::to_json(pairing)},
                      {"chiral_map", map ? io::to_json(*map) : Json(nullptr)},
                      {"verified", verified}}
                     .dump(2)
              << '\n';
    } else {
        *sink << "model: " << model_tag(model.spec) << " (dimension " << h.dim() << ")\n"
              << "shift: " << io::format_short(model.shift) << "\n"
              << "rotation: " << partner.describe() << "\n"
              << "verdict: " << to_string(verdict.kind) << "\n"
              << "residual_commute: " << io::format_short(verdict.residual_commute) << "\n"
              << "residual_anticommute: " << io::format_short(verdict.residual_anticommute) << "\n"
              << "paired: " << (pairing.is_chiral_paired ? "yes" : "no")
              << " (max mismatch " << io::format_short(pairing.max_mismatch) << ")\n"
              << "zero modes: " << pairing.zero_modes << "\n";
        if (map) {
            *sink << "chiral map: " << (map->ok ? "ok" : "FAILED") << " (" << map->states_checked
                  << " states, max residual " << io::format_short(map->max_residual) << ")\n";
        }
    }
    return verified ? kExitOk : kExitNegative;
}

int cmd_spectrum(const Globals& g, const std::string& model_file, const std::string& method, std::ostream& out,
                 std::ostream& err) {
    const BuiltModel model = load_model(model_file);
    const ComplexMatrix h = shifted_hamiltonian(model);
    PolySolveReport report = full_solve(h, partner_matrix(model));

    if (method == "radicals" && report.method != SolveMethod::Radicals) {
        err << "radicals unavailable: dimension " << h.dim()
            << (report.parity_ok ? " with even characteristic polynomial, reduced degree "
                                 : " without parity reduction, degree ")
            << (report.reduced ? report.reduced->degree() : h.dim()) << " requires " << to_string(report.method)
            << "\n";
        return kExitNegative;
    }
    if (method == "numeric") {
        report.closed_form_eigenvalues.reset();
        report.max_root_deviation = 0.0;
    }
    const bool agree = !report.closed_form_eigenvalues ||
                       report.max_root_deviation < 1e-8 * std::max(1.0, frobenius_norm(h));

    Sink sink(g.out, out);
    if (g.json()) {
        Json doc = io::to_json(report);
        doc["model"] = io::to_json(model.spec);
        doc["shift"] = model.shift;
        *sink << doc.dump(2) << '\n';
    } else {
        *sink << "model: " << model_tag(model.spec) << " (dimension " << h.dim() << ")\n"
              << "shift: " << io::format_short(model.shift) << " (energies of H = listed values + shift)\n"
              << "parity_ok: " << (report.parity_ok ? "true" : "false") << "\n"
              << "method: " << to_string(report.method) << "\n";
        if (report.closed_form_eigenvalues) {
            *sink << "closed form: " << join_short(*report.closed_form_eigenvalues) << "\n";
        }
        *sink << "numeric:     " << join_short(report.numeric_eigenvalues) << "\n";
        if (report.closed_form_eigenvalues) {
            *sink << "max deviation: " << io::format_short(report.max_root_deviation) << "\n";
        }
    }
    return agree ? kExitOk : kExitNegative;
}

int cmd_scan(const Globals& g, const std::string& model_file, const std::string& param, double from, double to,
             int steps, std::ostream& out, std::ostream& err) {
    if (steps < 1) throw ParseError("scan: --steps must be at least 1");
    const ModelSpec spec = io::parse_model(io::load_json(model_file));
    (void)get_parameter(spec, param);

    std::vector<double> grid(static_cast<std::size_t>(steps));
    for (int i = 0; i < steps; ++i) {
        grid[i] = (steps > 1 && i == steps - 1) ? to : from + (to - from) * double(i) / double(steps - 1);
    }
    if (steps == 1) grid[0] = from;

    std::ostringstream csv;
    const std::size_t n = product_dimension(subsystem_dims(spec));
    csv << param;
    for (std::size_t k = 1; k <= n; ++k) csv << ",lambda_" << k;
    csv << ",pairing_ok,max_pair_mismatch\n";

    std::size_t unpaired = 0;
    std::optional<double> first_failure;
    for (const BuiltModel& m : parameter_sweep(spec, param, grid)) {
        const ComplexMatrix h = shifted_hamiltonian(m);
        std::vector<double> eig = hermitian_eigenvalues(h);
        const double tol = default_pairing_tolerance(h);
        const PairingReport pairing = pairing_check(eig, tol, tol);
        const double value = get_parameter(m.spec, param);
        if (!pairing.is_chiral_paired) {
            ++unpaired;
            if (!first_failure) first_failure = value;
        }
        csv << io::format_double(value);
        for (double e : eig) csv << ',' << io::format_double(e + m.shift);
        csv << ',' << (pairing.is_chiral_paired ? "true" : "false") << ',' << io::format_double(pairing.max_mismatch)
            << '\n';
    }

    std::ostream* summary = &out;
    if (g.out.empty()) {
        out << csv.str();
        summary = &err;
    } else {
        std::ofstream file(g.out, std::ios::binary);
        if (!file) throw ParseError("cannot write '" + g.out + "'");
        file << csv.str();
        if (!file.flush()) throw ParseError("failed writing '" + g.out + "'");
    }
    if (g.json()) {
        *summary << Json{{"rows", steps},
                         {"columns", n},
                         {"all_paired", unpaired == 0},
                         {"unpaired_rows", unpaired},
                         {"first_failure", first_failure ? Json(*first_failure) : Json(nullptr)}}
                        .dump(2)
                 << '\n';
    } else if (unpaired == 0) {
        *summary << "scan: " << steps << " rows, all chiral paired\n";
    } else {
        *summary << "scan: " << steps << " rows, " << unpaired << " unpaired; first at " << param << " = "
                 << io::format_double(*first_failure) << "\n";
    }
    return kExitOk;
}

int cmd_search(const Globals& g, const std::string& file, std::ostream& out) {
    const Json doc = io::load_json(file);
    ComplexMatrix h(1);
    std::vector<std::size_t> dims;
    std::string source;
    if (doc.is_object() && doc.contains("model")) {
        const BuiltModel model = build(io::parse_model(doc));
        h = shifted_hamiltonian(model);
        dims = model.dims;
        source = std::string(model_tag(model.spec));
    } else {
        io::MatrixInput input = io::parse_matrix(doc);
        h = std::move(input.matrix);
        dims = std::move(input.dims);
        source = "matrix";
    }
    const std::vector<PartnerMatch> found = search_partners(h, dims, CandidateFamily::defaults(), g.classify_tol());

    Sink sink(g.out, out);
    if (g.json()) {
        Json list = Json::array();
        for (const auto& m : found) list.push_back(io::to_json(m));
        *sink << Json{{"source", source}, {"dims", dims}, {"candidates", list}}.dump(2) << '\n';
    } else {
        *sink << "source: " << source << " (dimension " << h.dim() << ")\n";
        if (found.empty()) *sink << "no anticommuting rotation in the default family\n";
        for (const auto& m : found) {
            *sink << m.rotation.describe() << "  residual " << io::format_short(m.verdict.residual_anticommute)
                  << "\n";
        }
    }
    return found.empty() ? kExitNegative : kExitOk;
}

int cmd_charpoly(const Globals& g, const std::string& model_file, std::ostream& out) {
    const BuiltModel model = load_model(model_file);
    const ComplexMatrix h = shifted_hamiltonian(model);
    const CharPoly p = characteristic_polynomial(h);
    const ParityResult parity = parity_reduce(p);

    Sink sink(g.out, out);
    if (g.json()) {
        *sink << Json{{"model", io::to_json(model.spec)},
                      {"shift", model.shift},
                      {"charpoly", io::to_json(p)},
                      {"parity_ok", parity.parity_ok},
                      {"reduced", parity.parity_ok ? io::to_json(parity.reduced) : Json(nullptr)}}
                     .dump(2)
              << '\n';
        return kExitOk;
    }
    *sink << "model: " << model_tag(model.spec) << " (dimension " << h.dim() << ")\n"
          << "P(lambda) = det(H - shift - lambda I), coefficients c_0 .. c_" << p.dim << ":\n";
    for (std::size_t k = 0; k < p.coeffs.size(); ++k) {
        *sink << "  c_" << k << " = " << io::format_double(p.coeffs[k]) << "\n";
    }
    *sink << "parity_ok: " << (parity.parity_ok ? "true" : "false") << "\n"
          << "zero_root_multiplicity: " << parity.reduced.zero_root_multiplicity << "\n";
    if (parity.parity_ok) {
        *sink << "reduced polynomial in mu = lambda^2 (ascending):";
        for (double c : parity.reduced.mu_coeffs) *sink << ' ' << io::format_double(c);
        *sink << "\n";
    }
    return kExitOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Chiral symmetries of angular momentum Hamiltonians", "chiralspin"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--format", g.format, "Report format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--tol", g.tol, "Classification tolerance (relative residual)");
    app.add_option("--out", g.out, "Output path (scan CSV, or report file)");

    std::string j_text, which = "jz";
    auto* ops = app.add_subcommand("ops", "Print an angular momentum matrix");
    ops->add_option("--j", j_text, "Spin label, e.g. 1/2, 1, 5/2")->required();
    ops->add_option("--which", which, "Operator")->check(CLI::IsMember({"jx", "jy", "jz", "jplus", "jminus", "jsq"}));

    std::string model_file, rotation = "auto";
    auto* verify = app.add_subcommand("verify", "Check a chiral partner against a model");
    verify->add_option("model", model_file, "Model file")->required();
    verify->add_option("--rotation", rotation, "\"auto\", a rotation JSON document, or a path to one");

    std::string method = "auto";
    auto* spectrum = app.add_subcommand("spectrum", "Closed-form and numeric spectrum");
    spectrum->add_option("model", model_file, "Model file")->required();
    spectrum->add_option("--method", method, "auto|numeric|radicals")
        ->check(CLI::IsMember({"auto", "numeric", "radicals"}));

    std::string param;
    double from = 0.0, to = 0.0;
    int steps = 1;
    auto* scan = app.add_subcommand("scan", "Sweep one parameter and write the spectrum as CSV");
    scan->add_option("model", model_file, "Model file")->required();
    scan->add_option("--param", param, "Parameter name")->required();
    scan->add_option("--from", from, "First grid value")->required();
    scan->add_option("--to", to, "Last grid value")->required();
    scan->add_option("--steps", steps, "Number of grid points (inclusive)")->required();

    std::string search_file;
    auto* search = app.add_subcommand("search", "Search the default rotation family for chiral partners");
    search->add_option("file", search_file, "Model or matrix file")->required();

    auto* charpoly = app.add_subcommand("charpoly", "Characteristic polynomial and parity reduction");
    charpoly->add_option("model", model_file, "Model file")->required();

    for (auto* sub : {ops, verify, spectrum, scan, search, charpoly}) sub->fallthrough();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (*ops) return cmd_ops(g, j_text, which, out);
        if (*verify) return cmd_verify(g, model_file, rotation, out);
        if (*spectrum) return cmd_spectrum(g, model_file, method, out, err);
        if (*scan) return cmd_scan(g, model_file, param, from, to, steps, out, err);
        if (*search) return cmd_search(g, search_file, out);
        if (*charpoly) return cmd_charpoly(g, model_file, out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DimensionError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitNegative;
    }
    return kExitUsage;
}

} // namespace chiralspin::cli
