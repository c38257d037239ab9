#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "riesz/certificate.hpp"
#include "riesz/errors.hpp"

using namespace riesz;

namespace {

const char* kI1 = R"({
  "dimension": 4,
  "weights": ["1/1", "1/1", "1/1", "1/1"],
  "expectationPartition": [[0, 1], [2, 3]],
  "algebraAtoms": [[0], [1], [2], [3]],
  "charge": ["3/1", "-1/1", "2/1", "-2/1"],
  "options": {"oracle": true}
})";

std::string check_path(const std::string& bytes) {
    try {
        parse_instance(bytes);
        return "";
    } catch (const parse_error& e) {
        return e.path;
    }
}

} // namespace

TEST_CASE("minimal instance parses") {
    Instance inst = parse_instance(R"({
      "dimension": 2,
      "weights": ["1/1", "1/1"],
      "expectationPartition": [[0, 1]],
      "algebraAtoms": [[0, 1]]
    })");
    CHECK(inst.dimension == 2);
    CHECK(inst.expectation().apply(Element::unit(2)) == Element::unit(2));
    CHECK(inst.algebra().atom_count() == 1);
    CHECK(!inst.charge_values);
    CHECK(!inst.density);
    CHECK(!inst.functional);
    CHECK(inst.options.theta == Rat(2));
    CHECK(inst.options.depth == 8);
    CHECK(!inst.options.oracle);
    CHECK(inst.digest.substr(0, 8) == "fnv1a64:");
}

TEST_CASE("structured parse errors carry locations") {
    CHECK(check_path(R"({"dimension": 2})") == "/weights");
    CHECK(check_path("{nope") == "/");
    CHECK(check_path(R"({
      "dimension": 4,
      "weights": ["1", "1", "1", "1"],
      "expectationPartition": [[0, 1], [1, 2, 3]],
      "algebraAtoms": [[0], [1], [2], [3]]
    })") == "/expectationPartition");
    CHECK(check_path(R"({
      "dimension": 2,
      "weights": ["1", "0/1"],
      "expectationPartition": [[0, 1]],
      "algebraAtoms": [[0], [1]]
    })") == "/weights/1");
    CHECK(check_path(R"({
      "dimension": 2,
      "weights": ["1", "1"],
      "expectationPartition": [[0], [1]],
      "algebraAtoms": [[0, 1]]
    })") == "/algebraAtoms"); // does not refine
    CHECK(check_path(R"({
      "dimension": 2,
      "weights": ["1", "1"],
      "expectationPartition": [[0, 1]],
      "algebraAtoms": [[0], [1]],
      "charge": ["1"]
    })") == "/charge"); // wrong arity
    CHECK(check_path(R"({
      "dimension": 2,
      "weights": ["1", "1"],
      "expectationPartition": [[0, 1]],
      "algebraAtoms": [[0], [1]],
      "surprise": 1
    })") == "/");
    CHECK(check_path(R"({
      "dimension": 2,
      "weights": ["1", "1"],
      "expectationPartition": [[0, 1]],
      "algebraAtoms": [[0], [1]],
      "options": {"theta": "1/1"}
    })") == "/options/theta");
}

TEST_CASE("rationals round-trip through the textual form") {
    for (const char* s : {"3/2", "-7/3", "0/1", "12345678901234567890/7"}) {
        Rat r = parse_rat(s);
        CHECK(parse_rat(format_rat(r)) == r);
        CHECK(format_rat(r) == s);
    }
}

TEST_CASE("decompose certificate on the worked instance") {
    Instance inst = parse_instance(kI1);
    Certificate cert = run_decompose(inst);
    CHECK(cert.command == "decompose");
    CHECK(cert.all_passed());
    CHECK(cert.outputs["hahnComponent"] == "1010");
    CHECK(cert.outputs["supremumAtUnit"][0] == "3/1");
    CHECK(cert.outputs["supremumAtUnit"][2] == "2/1");

    // oracle path adds the membership and exhaustive rows
    bool saw_oracle = false;
    for (const Check& c : cert.checks) saw_oracle |= c.name == "oracle-membership";
    CHECK(saw_oracle);
}

TEST_CASE("decompose on an all-nonnegative charge returns the unit") {
    Instance inst = parse_instance(R"({
      "dimension": 2,
      "weights": ["1", "1"],
      "expectationPartition": [[0, 1]],
      "algebraAtoms": [[0], [1]],
      "charge": ["1", "0"]
    })");
    Certificate cert = run_decompose(inst);
    CHECK(cert.outputs["hahnComponent"] == "11");
    CHECK(cert.all_passed());
}

TEST_CASE("oracle bound rejects oversized enumerations") {
    std::string big = R"({"dimension": 14, "weights": [)";
    for (int i = 0; i < 14; ++i) big += std::string("\"1\"") + (i + 1 < 14 ? "," : "");
    big += R"(], "expectationPartition": [[)";
    for (int i = 0; i < 14; ++i) big += std::to_string(i) + (i + 1 < 14 ? "," : "");
    big += R"(]], "algebraAtoms": [)";
    for (int i = 0; i < 14; ++i)
        big += "[" + std::to_string(i) + "]" + (i + 1 < 14 ? "," : "");
    big += R"(], "charge": [)";
    for (int i = 0; i < 14; ++i) big += std::string("\"1\"") + (i + 1 < 14 ? "," : "");
    big += "]}";
    Instance inst = parse_instance(big);
    RunOptions opts;
    opts.oracle = true;
    CHECK_THROWS_AS(run_decompose(inst, opts), bound_error);
    CHECK_NOTHROW(run_decompose(inst)); // without enumeration it is fine
}

TEST_CASE("represent certificate") {
    Instance inst = parse_instance(R"({
      "dimension": 4,
      "weights": ["1", "1", "1", "1"],
      "expectationPartition": [[0, 1], [2, 3]],
      "algebraAtoms": [[0], [1], [2], [3]],
      "functional": {"type": "density", "y": ["1", "-2", "3", "4"]},
      "options": {"depth": 10}
    })");
    Certificate cert = run_represent(inst);
    CHECK(cert.all_passed());
    CHECK(cert.outputs["exactRepresenter"][1] == "-2/1");
    CHECK(cert.outputs["errorBound"] == "1/512"); // 2 * 2^-10
    CHECK(parse_rat(cert.outputs["maxError"].get<std::string>()) <= parse_rat("1/512"));
    CHECK(cert.outputs["positiveComponent"] == "1011");
}

TEST_CASE("represent on the zero functional") {
    Instance inst = parse_instance(R"({
      "dimension": 2,
      "weights": ["1", "1"],
      "expectationPartition": [[0, 1]],
      "algebraAtoms": [[0], [1]],
      "functional": {"type": "density", "y": ["0", "0"]}
    })");
    Certificate cert = run_represent(inst);
    CHECK(cert.all_passed());
    CHECK(cert.outputs["exactRepresenter"][0] == "0/1");
    CHECK(cert.outputs["maxError"] == "0/1");
    CHECK(cert.outputs["positiveComponent"] == "00");
}

TEST_CASE("represent surfaces validation failures as failed checks") {
    Instance inst = parse_instance(R"({
      "dimension": 4,
      "weights": ["1", "1", "1", "1"],
      "expectationPartition": [[0, 1], [2, 3]],
      "algebraAtoms": [[0], [1], [2], [3]],
      "functional": {"type": "matrix", "rows": [
        ["0", "0", "0", "0"],
        ["0", "0", "0", "0"],
        ["1", "0", "0", "0"],
        ["1", "0", "0", "0"]
      ]}
    })");
    Certificate cert = run_represent(inst);
    CHECK(!cert.all_passed());
    REQUIRE(cert.checks.size() == 1);
    CHECK(cert.checks[0].name == "functional-validation");
    CHECK(cert.checks[0].witness.find("HomogeneityViolation") != std::string::npos);
    CHECK(cert.checks[0].witness.find("column 0") != std::string::npos);
}

TEST_CASE("represent requires a functional payload") {
    Instance inst = parse_instance(R"({
      "dimension": 2,
      "weights": ["1", "1"],
      "expectationPartition": [[0, 1]],
      "algebraAtoms": [[0], [1]]
    })");
    CHECK_THROWS_AS(run_represent(inst), precondition_error);
    CHECK_THROWS_AS(run_invert(inst), precondition_error);
    CHECK_THROWS_AS(run_decompose(inst), precondition_error);
}

TEST_CASE("invert certificate") {
    Instance inst = parse_instance(R"({
      "dimension": 3,
      "weights": ["1", "1", "1"],
      "expectationPartition": [[0, 1, 2]],
      "algebraAtoms": [[0], [1], [2]],
      "density": ["2", "0", "-4"],
      "options": {"depth": 6}
    })");
    Certificate cert = run_invert(inst);
    CHECK(cert.all_passed());
    CHECK(cert.outputs["inverse"][0] == "1/2");
    CHECK(cert.outputs["inverse"][1] == "0/1");
    CHECK(cert.outputs["inverse"][2] == "-1/4");
    CHECK(cert.outputs["band"] == "101");
}

TEST_CASE("verify runs everything applicable") {
    Instance inst = parse_instance(R"({
      "dimension": 4,
      "weights": ["1", "2", "1", "3"],
      "expectationPartition": [[0, 1], [2, 3]],
      "algebraAtoms": [[0], [1], [2], [3]],
      "density": ["3", "-1", "2", "-2"],
      "functional": {"type": "density", "y": ["1", "-2", "3", "4"]},
      "options": {"oracle": true, "depth": 6}
    })");
    Certificate cert = run_verify(inst);
    CHECK(cert.all_passed());
    bool saw_dec = false, saw_inv = false, saw_rep = false, saw_core = false;
    for (const Check& c : cert.checks) {
        saw_dec |= c.name.rfind("decompose.", 0) == 0;
        saw_inv |= c.name.rfind("invert.", 0) == 0;
        saw_rep |= c.name.rfind("represent.", 0) == 0;
        saw_core |= c.name.rfind("core.", 0) == 0;
    }
    CHECK(saw_dec);
    CHECK(saw_inv);
    CHECK(saw_rep);
    CHECK(saw_core);
}

TEST_CASE("certificates are deterministic") {
    Instance inst = parse_instance(kI1);
    CHECK(run_decompose(inst).to_json().dump(2) == run_decompose(inst).to_json().dump(2));

    Certificate a = run_selftest(42, 25);
    Certificate b = run_selftest(42, 25);
    CHECK(a.all_passed());
    CHECK(a.to_json().dump(2) == b.to_json().dump(2));

    Certificate c = run_selftest(43, 25);
    CHECK(c.all_passed());

    CHECK_THROWS_AS(run_selftest(1, 0), precondition_error);
}
