#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"

#include "chiralspin/charpoly.hpp"
#include "chiralspin/chiral.hpp"
#include "chiralspin/models.hpp"
#include "chiralspin/rotations.hpp"

namespace chiralspin::io {

using Json = nlohmann::ordered_json;

// Model documents:
//   {"model": "general_field", "j": "5/2", "params": {"a": 1.0, "b": 2.0, "c": 0.0}}
// Coupled models use "j1"/"j2" instead of "j". Parameters not given keep
// their defaults; unknown keys anywhere are rejected with ParseError.
ModelSpec parse_model(const Json& doc);
Json to_json(const ModelSpec& spec);

// {"slot": 0, "axis": [0, 1, 0], "angle": "pi"}; a composite is an array of these.
RotationSpec parse_rotation(const Json& doc);
CompositeRotation parse_composite(const Json& doc);
Json to_json(const RotationSpec& spec);
Json to_json(const CompositeRotation& rot);

// {"dims": [2, 4], "entries": [[re, im], ...]} row-major; must be Hermitian.
struct MatrixInput {
    ComplexMatrix matrix;
    std::vector<std::size_t> dims;
};
MatrixInput parse_matrix(const Json& doc);

/// Reads and parses a JSON file; ParseError on I/O or syntax failure.
Json load_json(const std::filesystem::path& path);
Json parse_json_text(const std::string& text);

Json to_json(const SymmetryVerdict& v);
Json to_json(const PairingReport& r);
Json to_json(const ChiralMapReport& r);
Json to_json(const CharPoly& p);
Json to_json(const ReducedPoly& r);
Json to_json(const PolySolveReport& r);
Json to_json(const PartnerMatch& m);

/// 17 significant digits ("%.17g"); round-trips every double.
std::string format_double(double x);
/// Six significant digits for human-readable tables.
std::string format_short(double x);

} // namespace chiralspin::io
