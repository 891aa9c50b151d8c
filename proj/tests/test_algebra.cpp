#include <doctest.h>

#include <map>
#include <set>
#include <stdexcept>

#include "pillowcase/algebra.hpp"

using namespace pillowcase;

namespace {

AlgebraElement elem(Basis b) { return AlgebraElement(b); }

// Multiply a path's edges through reverseEdge, left to right; nullopt is zero.
std::optional<Basis> reversedProduct(const DualPath& p) {
  if (p.constant()) return idemBasis(p.source());
  std::optional<Basis> acc = reverseEdge(p.edges().front());
  for (size_t k = 1; k < p.edges().size() && acc; ++k)
    acc = mulBasis(*acc, reverseEdge(p.edges()[k]));
  return acc;
}

}  // namespace

TEST_CASE("idempotents are local units") {
  for (int k = 0; k < kBasisCount; ++k) {
    auto b = static_cast<Basis>(k);
    CHECK(mulBasis(idemBasis(leftIdem(b)), b) == b);
    CHECK(mulBasis(b, idemBasis(rightIdem(b))) == b);
    // the other idempotents annihilate
    for (int v = 0; v < kIdemCount; ++v) {
      auto id = static_cast<Idem>(v);
      if (id != leftIdem(b)) CHECK(!mulBasis(idemBasis(id), b));
      if (id != rightIdem(b)) CHECK(!mulBasis(b, idemBasis(id)));
    }
  }
}

TEST_CASE("chord products concatenate consecutively or vanish") {
  CHECK(mulBasis(Basis::Xi1, Basis::Xi2) == Basis::Xi12);
  CHECK(mulBasis(Basis::Xi2, Basis::Xi3) == Basis::Xi23);
  CHECK(mulBasis(Basis::Xi1, Basis::Xi23) == Basis::Xi123);
  CHECK(mulBasis(Basis::Xi12, Basis::Xi3) == Basis::Xi123);
  CHECK(mulBasis(Basis::Eta1, Basis::Eta2) == Basis::Eta12);
  CHECK(mulBasis(Basis::Eta12, Basis::Eta3) == Basis::Eta123);

  // different letter families vanish even with matching endpoints
  CHECK(!mulBasis(Basis::Xi1, Basis::Rho2));
  CHECK(!mulBasis(Basis::Rho2, Basis::Xi3));
  CHECK(!mulBasis(Basis::Eta2, Basis::Xi3));
  CHECK(!mulBasis(Basis::Eta1, Basis::Xi1));
  // non-consecutive concatenation vanishes
  CHECK(!mulBasis(Basis::Xi2, Basis::Xi2));
  CHECK(!mulBasis(Basis::Xi3, Basis::Xi1));
  // rho chords compose with idempotents only
  CHECK(!mulBasis(Basis::Rho0, Basis::Eta3));
  for (int k = 0; k < kBasisCount; ++k) {
    auto b = static_cast<Basis>(k);
    if (isIdempotent(b)) continue;
    CHECK(!mulBasis(Basis::Rho0, b));
    CHECK(!mulBasis(b, Basis::Rho0));
    CHECK(!mulBasis(Basis::Rho2, b));
    CHECK(!mulBasis(b, Basis::Rho2));
  }
}

TEST_CASE("nonzero products have matching endpoints") {
  for (int a = 0; a < kBasisCount; ++a)
    for (int b = 0; b < kBasisCount; ++b) {
      auto x = static_cast<Basis>(a);
      auto y = static_cast<Basis>(b);
      auto p = mulBasis(x, y);
      if (!p) continue;
      CHECK(rightIdem(x) == leftIdem(y));
      CHECK(leftIdem(*p) == leftIdem(x));
      CHECK(rightIdem(*p) == rightIdem(y));
    }
}

TEST_CASE("the product is associative over every basis triple") {
  for (int a = 0; a < kBasisCount; ++a)
    for (int b = 0; b < kBasisCount; ++b)
      for (int c = 0; c < kBasisCount; ++c) {
        auto x = elem(static_cast<Basis>(a));
        auto y = elem(static_cast<Basis>(b));
        auto z = elem(static_cast<Basis>(c));
        CHECK(((x * y) * z == x * (y * z)));
      }
}

TEST_CASE("algebra elements add and print over F2") {
  AlgebraElement x = elem(Basis::Xi1) + elem(Basis::Eta2);
  CHECK(x.contains(Basis::Xi1));
  CHECK(toString(x) == "xi1+eta2");
  CHECK((x + x).isZero());
  CHECK(toString(AlgebraElement::zero()) == "0");
  CHECK(((elem(Basis::Xi1) * elem(Basis::Xi2)) == elem(Basis::Xi12)));
  CHECK((elem(Basis::Xi1) * elem(Basis::Xi3)).isZero());
}

TEST_CASE("names round-trip") {
  for (int k = 0; k < kBasisCount; ++k) {
    auto b = static_cast<Basis>(k);
    CHECK(basisFromName(name(b)) == b);
  }
  for (int v = 0; v < kIdemCount; ++v) {
    auto id = static_cast<Idem>(v);
    CHECK(idemFromName(name(id)) == id);
  }
  for (int k = 0; k < kDualEdgeCount; ++k) {
    auto e = static_cast<DualEdge>(k);
    CHECK(edgeFromName(name(e)) == e);
  }
  CHECK(edgeFromName("-xi32") == DualEdge::Xi32p);
  CHECK(edgeFromName("xi32'") == DualEdge::Xi32p);
  CHECK(!basisFromName("bogus"));
  CHECK(!edgeFromName("xi32"));
}

TEST_CASE("dual edges invert their chords") {
  for (int k = 0; k < kDualEdgeCount; ++k) {
    auto e = static_cast<DualEdge>(k);
    CHECK(leftIdem(reverseEdge(e)) == edgeTarget(e));
    CHECK(rightIdem(reverseEdge(e)) == edgeSource(e));
  }
  CHECK(reverseEdge(DualEdge::Xi32p) == Basis::Xi23);
  CHECK(reverseEdge(DualEdge::Xi21p) == Basis::Xi12);
  CHECK(reverseEdge(DualEdge::Xi321p) == Basis::Xi123);
  CHECK(reverseEdge(DualEdge::Eta21p) == Basis::Eta12);
  CHECK(reverseEdge(DualEdge::Rho0p) == Basis::Rho0);
}

TEST_CASE("path basis counts 56 with the expected census by source") {
  const auto& paths = allDualPaths();
  CHECK(paths.size() == 56);
  std::map<Idem, int> bySource;
  std::set<DualPath> distinct;
  for (const auto& p : paths) {
    ++bySource[p.source()];
    distinct.insert(p);
  }
  CHECK(distinct.size() == 56);
  CHECK(bySource[Idem::I0] == 1);
  CHECK(bySource[Idem::I1] == 2);
  CHECK(bySource[Idem::I2] == 3);
  CHECK(bySource[Idem::J2] == 9);
  CHECK(bySource[Idem::J1] == 18);
  CHECK(bySource[Idem::J0] == 23);
}

TEST_CASE("paths reject non-concatenating edge lists") {
  CHECK_THROWS_AS(DualPath(Idem::J1, {DualEdge::Xi3p, DualEdge::Xi3p}),
                  std::invalid_argument);
  CHECK_THROWS_AS(DualPath(Idem::J0, {DualEdge::Xi3p}), std::invalid_argument);
  DualPath ok(Idem::J1, {DualEdge::Xi3p, DualEdge::Xi2p, DualEdge::Xi1p});
  CHECK(ok.source() == Idem::J1);
  CHECK(ok.target() == Idem::I1);
  CHECK(ok.length() == 3);
}

TEST_CASE("mulDual concatenates when endpoints meet") {
  DualPath a(Idem::J1, {DualEdge::Xi3p});
  DualPath b(Idem::J2, {DualEdge::Xi2p});
  auto ab = mulDual(a, b);
  REQUIRE(ab.has_value());
  CHECK(ab->length() == 2);
  CHECK(!mulDual(b, a));
  CHECK(mulDual(DualPath(Idem::J1), a) == a);
  CHECK(mulDual(a, DualPath(Idem::J2)) == a);
}

TEST_CASE("the differential expands composite edges") {
  auto d = diffDual(DualPath(Idem::J2, {DualEdge::Xi21p}));
  REQUIRE(d.size() == 1);
  CHECK(d[0] == DualPath(Idem::J2, {DualEdge::Xi2p, DualEdge::Xi1p}));

  auto d321 = diffDual(DualPath(Idem::J1, {DualEdge::Xi321p}));
  REQUIRE(d321.size() == 2);
  std::set<DualPath> got(d321.begin(), d321.end());
  CHECK(got.count(DualPath(Idem::J1, {DualEdge::Xi32p, DualEdge::Xi1p})) == 1);
  CHECK(got.count(DualPath(Idem::J1, {DualEdge::Xi3p, DualEdge::Xi21p})) == 1);

  CHECK(diffDual(DualPath(Idem::I0)).empty());
  CHECK(diffDual(DualPath(Idem::J1, {DualEdge::Xi3p})).empty());
}

TEST_CASE("the differential squares to zero on every path") {
  for (const auto& p : allDualPaths()) {
    std::map<DualPath, int> terms;
    for (const auto& q : diffDual(p))
      for (const auto& r : diffDual(q)) terms[r] ^= 1;
    for (const auto& [r, parity] : terms) CHECK(parity == 0);
  }
}

TEST_CASE("the differential satisfies Leibniz on every composable pair") {
  const auto& paths = allDualPaths();
  for (const auto& a : paths)
    for (const auto& b : paths) {
      auto ab = mulDual(a, b);
      if (!ab) continue;
      std::map<DualPath, int> diff;
      for (const auto& t : diffDual(*ab)) diff[t] ^= 1;
      for (const auto& t : diffDual(a))
        if (auto tb = mulDual(t, b)) diff[*tb] ^= 1;
      for (const auto& t : diffDual(b))
        if (auto at = mulDual(a, t)) diff[*at] ^= 1;
      for (const auto& [t, parity] : diff) CHECK(parity == 0);
    }
}

TEST_CASE("edgewise reversal need not multiply back to a chord") {
  // reversal flips the composition order, so the reversed factors of a
  // genuine path usually multiply to zero in A
  DualPath spine(Idem::J1, {DualEdge::Xi3p, DualEdge::Xi2p, DualEdge::Xi1p});
  CHECK(!reversedProduct(spine));
  CHECK(reversedProduct(DualPath(Idem::J1, {DualEdge::Xi32p})) == Basis::Xi23);
  CHECK(reversedProduct(DualPath(Idem::I2)) == Basis::I2);
}
