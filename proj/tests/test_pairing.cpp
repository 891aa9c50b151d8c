#include <doctest.h>

#include <set>
#include <stdexcept>
#include <string>

#include "pillowcase/bar.hpp"
#include "pillowcase/curves.hpp"
#include "pillowcase/io.hpp"
#include "pillowcase/pairing.hpp"
#include "pillowcase/selfcheck.hpp"

using namespace pillowcase;

namespace {

std::string dataPath(const std::string& rel) {
  return std::string(PILLOWCASE_DATA_DIR) + "/" + rel;
}

RightModule load(const std::string& rel) { return loadInput(dataPath(rel)); }

int findGen(const PairingComplex& c, const std::string& name) {
  for (int k = 0; k < c.genCount(); ++k)
    if (c.genNames[k] == name) return k;
  return -1;
}

}  // namespace

TEST_CASE("pairing shapes: unknot 13/12, trefoil 15/10 against the figure eight") {
  RightModule lnat = load("modules/lnat.mod");

  PairingComplex unknot = buildPairing(load("curves/unknot.curve"), dualize(lnat));
  CHECK(unknot.genCount() == 13);
  CHECK(unknot.arrows.size() == 12);
  CHECK(unknot.homology() == 1);

  PairingComplex trefoil = buildPairing(load("modules/t23.mod"), dualize(lnat));
  CHECK(trefoil.genCount() == 15);
  CHECK(trefoil.arrows.size() == 10);
  CHECK(trefoil.homology() == 3);
}

TEST_CASE("the belt pairing contains the two hand-checked boundary arrows") {
  PairingComplex c = buildPairing(load("modules/belt.mod"), dualize(load("modules/lnat.mod")));

  // left-emitting chain of length two consumed by the belt action
  // s -> (xi3, eta3) -> x, moving the module side
  int from1 = findGen(c, "s|b(-rho2,-xi1)|t*");
  int to = findGen(c, "x|b(-eta3,-xi3,-rho2,-xi1)|t*");
  REQUIRE(from1 >= 0);
  REQUIRE(to >= 0);
  CHECK(c.arrows.count({from1, to}) == 1);

  // right-emitting chain consumed in reversed order by the dualized
  // figure-eight action t -> (xi1, rho2) -> s, moving the dual side
  int from2 = findGen(c, "x|b(-eta3,-xi3)|s*");
  REQUIRE(from2 >= 0);
  CHECK(c.arrows.count({from2, to}) == 1);
}

TEST_CASE("every corpus pairing has a boundary squaring to zero") {
  RightModule lnat = load("modules/lnat.mod");
  for (const char* rel : {"curves/unknot.curve", "modules/t23.mod", "sums/t34.sum",
                          "sums/t37.sum", "sums/t511.sum", "modules/r0.mod",
                          "modules/r1.mod", "modules/r4.mod", "modules/belt.mod"}) {
    CAPTURE(rel);
    PairingComplex c = buildPairing(load(rel), dualize(lnat));
    F2Matrix d = c.boundary();
    CHECK((d * d).isZero());
  }
}

TEST_CASE("recorded homology ranks against the figure eight") {
  RightModule lnat = load("modules/lnat.mod");
  CHECK(pairRank(load("curves/unknot.curve"), lnat) == 1);
  CHECK(pairRank(load("modules/t23.mod"), lnat) == 3);
  CHECK(pairRank(load("sums/t34.sum"), lnat) == 5);
  CHECK(pairRank(load("sums/t37.sum"), lnat) == 9);
  CHECK(pairRank(load("sums/t511.sum"), lnat) == 17);
  CHECK(pairRank(load("modules/r0.mod"), lnat) == 1);
  CHECK(pairRank(load("modules/r1.mod"), lnat) == 4);
  CHECK(pairRank(load("modules/r4.mod"), lnat) == 4);
}

TEST_CASE("rank is additive over direct sums") {
  RightModule lnat = load("modules/lnat.mod");
  int r0 = pairRank(load("modules/r0.mod"), lnat);
  int r1 = pairRank(load("modules/r1.mod"), lnat);
  CHECK(pairRank(load("sums/t37.sum"), lnat) == r0 + 2 * r1);
}

TEST_CASE("pairing against the unreduced bar gives the same ranks") {
  RightModule lnat = load("modules/lnat.mod");
  DDStructure full = buildBar();
  CHECK(pairRank(load("curves/unknot.curve"), full, lnat) == 1);
  CHECK(pairRank(load("modules/t23.mod"), full, lnat) == 3);
}

TEST_CASE("mixed-emission chains in the reduced model multiply to zero") {
  for (const CertifyCheck& c : checkMixedChains(builtinBarR(), 5)) {
    CAPTURE(c.what);
    CAPTURE(c.detail);
    CHECK(c.ok);
  }
}

TEST_CASE("intersection numbers subtract the periodic correction") {
  RightModule lnat = load("modules/lnat.mod");
  RightModule trefoil = load("modules/t23.mod");
  CHECK(intersectionNumber(trefoil, lnat, true) == 1);
  CHECK(intersectionNumber(trefoil, lnat, false) == 3);

  // rank 1 cannot come from a periodic pair
  RightModule unknot = load("curves/unknot.curve");
  CHECK(intersectionNumber(unknot, lnat, false) == 1);
  CHECK_THROWS_AS(intersectionNumber(unknot, lnat, true), std::runtime_error);
}

TEST_CASE("generators are exactly the idempotent-matched triples") {
  // modules concentrated on j0 and i0 meet through the two reduced bar
  // generators joining that pair: the full spine and the rho0 edge
  RightModule left;
  left.addGenerator("p", Idem::J0);
  RightModule right;
  right.addGenerator("q", Idem::I0);
  PairingComplex c = buildPairing(left, dualize(right));
  REQUIRE(c.genCount() == 2);
  std::set<std::string> names(c.genNames.begin(), c.genNames.end());
  CHECK(names.count("p|b(-eta3,-xi3,-rho2,-xi1,-eta1)|q*") == 1);
  CHECK(names.count("p|b(-rho0)|q*") == 1);
  CHECK(c.arrows.empty());
  CHECK(c.homology() == 2);

  // swapping the idempotents leaves nothing to match
  RightModule swappedL;
  swappedL.addGenerator("p", Idem::I0);
  RightModule swappedR;
  swappedR.addGenerator("q", Idem::J0);
  PairingComplex empty = buildPairing(swappedL, dualize(swappedR));
  CHECK(empty.genCount() == 0);
  CHECK(empty.homology() == 0);
}
