#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "pillowcase/bar.hpp"
#include "pillowcase/io.hpp"

using namespace pillowcase;
using doctest::Contains;

namespace {

std::string dataPath(const std::string& rel) {
  return std::string(PILLOWCASE_DATA_DIR) + "/" + rel;
}

}  // namespace

TEST_CASE("modules round-trip through the text format") {
  for (const char* rel : {"modules/lnat.mod", "modules/r4.mod", "modules/belt.mod"}) {
    CAPTURE(rel);
    RightModule m = parseModule(readTextFile(dataPath(rel)));
    RightModule again = parseModule(serializeModule(m));
    CHECK(again.genNames == m.genNames);
    CHECK(again.genIdems == m.genIdems);
    CHECK(again.actions == m.actions);
  }
}

TEST_CASE("DD structures round-trip through the text format") {
  for (const char* rel : {"dd/bar56.dd", "dd/barr24.dd"}) {
    CAPTURE(rel);
    DDStructure d = parseDD(readTextFile(dataPath(rel)));
    DDStructure again = parseDD(serializeDD(d));
    CHECK(again.genNames == d.genNames);
    CHECK(again.genIdems == d.genIdems);
    CHECK(again.arrows == d.arrows);
  }
}

TEST_CASE("module parse errors carry line numbers") {
  CHECK_THROWS_WITH_AS(parseModule("gen a i0\ngen a i1\n"),
                       Contains("line 2"), std::runtime_error);
  CHECK_THROWS_WITH_AS(parseModule("gen a bogus\n"),
                       Contains("line 1"), std::runtime_error);
  CHECK_THROWS_WITH_AS(parseModule("gen a i0\nact a | xi9 -> a\n"),
                       Contains("line 2"), std::runtime_error);
  CHECK_THROWS_WITH_AS(parseModule("act a | xi1 -> b\n"),
                       Contains("unknown generator"), std::runtime_error);
  CHECK_THROWS_WITH_AS(parseModule("gen a i0\nact a xi1 -> a\n"),
                       Contains("line 2"), std::runtime_error);
}

TEST_CASE("DD parse errors carry line numbers") {
  CHECK_THROWS_WITH_AS(parseDD("gen x i0\n"), Contains("line 1"), std::runtime_error);
  CHECK_THROWS_WITH_AS(parseDD("gen x i0 j0\nx | xi1 -> x\n"),
                       Contains("line 2"), std::runtime_error);
  CHECK_THROWS_WITH_AS(parseDD("gen x i0 j0\ny | 1 ; 1 -> x\n"),
                       Contains("unknown generator"), std::runtime_error);
}

TEST_CASE("comments and blank lines are ignored") {
  RightModule m = parseModule(
      "# header\n\ngen a i0  # trailing\ngen b j0\nact a | rho0 -> b # note\n");
  CHECK(m.genCount() == 2);
  CHECK(m.actions.size() == 1);
}

TEST_CASE("readTextFile reports unopenable paths") {
  CHECK_THROWS_WITH_AS(readTextFile("no/such/file.mod"),
                       Contains("cannot open"), std::runtime_error);
}

TEST_CASE("loadInput sniffs curves, modules and manifests") {
  RightModule fromCurve = loadInput(dataPath("curves/lnat.curve"));
  CHECK(fromCurve.genCount() == 6);
  RightModule fromMod = loadInput(dataPath("modules/lnat.mod"));
  CHECK(fromMod.genCount() == 6);
  RightModule fromSum = loadInput(dataPath("sums/t37.sum"));
  CHECK(fromSum.genCount() == 12);
  CHECK(fromSum.actions.size() == 12);
  // manifest entries resolve relative to the manifest file
  CHECK(fromSum.findGenerator("a.0").has_value());
}

TEST_CASE("the verbatim twenty-generator module parses but fails validation") {
  RightModule m = parseModule(readTextFile(dataPath("modules/r4_verbatim.mod")));
  CHECK(m.genCount() == 20);
  CHECK(m.actions.size() == 34);
  auto report = validateAinfty(m, 8);
  CHECK(report.structural.size() == 4);
}

TEST_CASE("DD files resolve '1' against each generator's idempotents") {
  DDStructure d;
  d.addGenerator("x", Idem::I1, Idem::J2);
  d.addGenerator("y", Idem::I2, Idem::J2);
  d.toggleArrow({0, Basis::Xi1, 1, Basis::J2});
  std::string text = serializeDD(d);
  CHECK(text.find("x | xi1 ; 1 -> y") != std::string::npos);
  DDStructure back = parseDD(text);
  CHECK(back.arrows == d.arrows);
}
