#include <numbers>

#include "doctest.h"

#include "chiralspin/errors.hpp"
#include "chiralspin/io.hpp"

using namespace chiralspin;
using io::Json;

TEST_SUITE("io") {

TEST_CASE("model documents") {
    const ModelSpec gf = io::parse_model(Json::parse(R"({"model": "general_field", "j": "5/2", "params": {"a": 1.0, "b": 2.0, "c": 0.0}})"));
    const auto& g = std::get<GeneralField>(gf);
    CHECK(g.j.twice_j() == 5);
    CHECK(g.b == 2.0);

    const ModelSpec oh = io::parse_model(Json::parse(R"({"model": "oh_molecule", "params": {"B": 0.7, "theta": "pi/4"}})"));
    const auto& o = std::get<OHMolecule>(oh);
    CHECK(o.j1.twice_j() == 1);
    CHECK(o.j2.twice_j() == 3);
    CHECK(o.b == 0.7);
    CHECK(o.theta == std::numbers::pi / 4);
    CHECK(o.delta == 1.0);

    const ModelSpec toy = io::parse_model(Json::parse(R"({"model": "toy_coupled", "j1": "1/2", "j2": "1", "params": {"A": 1, "B": -1}})"));
    CHECK(std::get<ToyCoupled>(toy).j2.twice_j() == 2);

    const ModelSpec rotor = io::parse_model(Json::parse(R"({"model": "triaxial_rotor", "j": 2, "params": {"Ix": 1, "Iy": 0.5}})"));
    CHECK(std::get<TriaxialRotor>(rotor).iy == 0.5);
    CHECK(std::get<TriaxialRotor>(rotor).iz == 1.0);

    // Round trip.
    CHECK(io::to_json(io::parse_model(io::to_json(oh))) == io::to_json(oh));
}

TEST_CASE("malformed model documents") {
    const char* bad[] = {
        R"({"model": "general_field", "j": "5/2", "extra": 1})",
        R"({"model": "general_field", "j": "5/2", "params": {"d": 1}})",
        R"({"model": "nonexistent", "j": "1"})",
        R"({"model": "general_field"})",
        R"({"model": "general_field", "j": "1/3"})",
        R"({"model": "toy_coupled", "j1": "1/2"})",
        R"({"model": "oh_molecule", "j": "1/2"})",
        R"({"model": "triaxial_rotor", "j": "1", "params": {"Ix": 0}})",
        R"({"model": "general_field", "j": "1", "params": {"a": "abc"}})",
        R"([1, 2])",
    };
    for (const char* text : bad) {
        CAPTURE(text);
        CHECK_THROWS_AS(io::parse_model(Json::parse(text)), ParseError);
    }
    CHECK_THROWS_AS(io::parse_json_text("{not json"), ParseError);
    CHECK_THROWS_AS(io::load_json("/nonexistent/model.json"), ParseError);
}

TEST_CASE("rotation documents") {
    const RotationSpec r = io::parse_rotation(Json::parse(R"({"slot": 0, "axis": [0, 1, 0], "angle": "pi"})"));
    CHECK(r.slot == 0);
    CHECK(r.axis == UnitVector::y());
    CHECK(r.angle == std::numbers::pi);

    const CompositeRotation c = io::parse_composite(Json::parse(
        R"([{"slot": 0, "axis": [1, 0, 0], "angle": "pi"}, {"slot": 1, "axis": [0, 1, 0], "angle": 3.141592653589793}])"));
    CHECK(c.describe() == "R_{1,x}(pi) R_{2,y}(pi)");

    CHECK_THROWS_AS(io::parse_rotation(Json::parse(R"({"axis": [0, 0, 2], "angle": "pi"})")), ParseError);
    CHECK_THROWS_AS(io::parse_rotation(Json::parse(R"({"axis": [0, 0, 1]})")), ParseError);
    CHECK_THROWS_AS(io::parse_composite(Json::parse(
                        R"([{"slot": 0, "axis": [1, 0, 0], "angle": 1}, {"slot": 0, "axis": [0, 1, 0], "angle": 1}])")),
                    ParseError);
}

TEST_CASE("matrix documents") {
    const io::MatrixInput m = io::parse_matrix(Json::parse(R"({"dims": [2], "entries": [[1, 0], [0, -1], [0, 1], [2, 0]]})"));
    CHECK(m.matrix.dim() == 2);
    CHECK(m.matrix(0, 1) == Complex(0, -1));
    CHECK(m.dims == std::vector<std::size_t>{2});

    CHECK_THROWS_AS(io::parse_matrix(Json::parse(R"({"dims": [2], "entries": [[1, 0], [1, 0], [0, 0], [2, 0]]})")),
                    ParseError);
    CHECK_THROWS_AS(io::parse_matrix(Json::parse(R"({"dims": [3], "entries": [[1, 0], [0, 0], [0, 0], [1, 0]]})")),
                    ParseError);
    CHECK_THROWS_AS(io::parse_matrix(Json::parse(R"({"dims": [2], "entries": [[1, 0], [0, 0], [0, 0]]})")), ParseError);
}

TEST_CASE("number formatting") {
    CHECK(io::format_double(0.1) == "0.10000000000000001");
    CHECK(io::format_double(-2.0) == "-2");
    CHECK(io::format_double(-0.0) == "0");
    CHECK(std::stod(io::format_double(std::numbers::pi)) == std::numbers::pi);
    CHECK(io::format_short(std::numbers::pi) == "3.14159");
}

} // TEST_SUITE
