#include "pillowcase/selfcheck.hpp"

#include <algorithm>
#include <map>

namespace pillowcase {

namespace {

// F2 sum of two cancelled term lists.
std::vector<DualPath> addTerms(std::vector<DualPath> a, const std::vector<DualPath>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  std::vector<DualPath> out;
  for (size_t i = 0; i < a.size();) {
    size_t j = i;
    while (j < a.size() && a[j] == a[i]) ++j;
    if ((j - i) % 2) out.push_back(a[i]);
    i = j;
  }
  return out;
}

}  // namespace

std::vector<CertifyCheck> checkAlgebra() {
  std::vector<CertifyCheck> checks;
  auto check = [&checks](std::string what, bool ok, std::string detail) {
    checks.push_back({std::move(what), ok, ok ? "" : std::move(detail)});
  };

  {
    std::string bad;
    for (int a = 0; a < kBasisCount && bad.empty(); ++a)
      for (int b = 0; b < kBasisCount && bad.empty(); ++b)
        for (int c = 0; c < kBasisCount && bad.empty(); ++c) {
          AlgebraElement x{static_cast<Basis>(a)}, y{static_cast<Basis>(b)},
              z{static_cast<Basis>(c)};
          if (!((x * y) * z == x * (y * z)))
            bad = std::string(name(static_cast<Basis>(a))) + " " +
                  std::string(name(static_cast<Basis>(b))) + " " +
                  std::string(name(static_cast<Basis>(c)));
        }
    check("basis product is associative over all 20^3 triples", bad.empty(),
          "first failing triple: " + bad);
  }

  {
    std::string bad;
    for (int k = 0; k < kDualEdgeCount; ++k) {
      auto e = static_cast<DualEdge>(k);
      if (leftIdem(reverseEdge(e)) != edgeTarget(e) || rightIdem(reverseEdge(e)) != edgeSource(e))
        bad = std::string(name(e));
    }
    check("every dual edge inverts the endpoints of its chord", bad.empty(), "edge " + bad);
  }

  {
    std::map<Idem, int> bySource;
    for (const DualPath& p : allDualPaths()) ++bySource[p.source()];
    // path counts out of each vertex of the reversed quiver
    const std::map<Idem, int> expected = {{Idem::I0, 1},  {Idem::I1, 2},  {Idem::I2, 3},
                                          {Idem::J2, 9},  {Idem::J1, 18}, {Idem::J0, 23}};
    check("path census: 56 paths, 1/2/3/9/18/23 by source vertex",
          allDualPaths().size() == 56 && bySource == expected,
          std::to_string(allDualPaths().size()) + " paths");
  }

  {
    std::string bad;
    for (const DualPath& p : allDualPaths()) {
      std::vector<DualPath> dd;
      for (const DualPath& q : diffDual(p)) dd = addTerms(std::move(dd), diffDual(q));
      if (!dd.empty()) {
        bad = barGenName(p);
        break;
      }
    }
    check("differential squares to zero on every path", bad.empty(), "d*d != 0 at " + bad);
  }

  {
    std::string bad;
    for (const DualPath& p : allDualPaths()) {
      for (const DualPath& q : allDualPaths()) {
        auto pq = mulDual(p, q);
        if (!pq) continue;
        std::vector<DualPath> lhs = diffDual(*pq);
        std::vector<DualPath> rhs;
        for (const DualPath& t : diffDual(p)) rhs = addTerms(std::move(rhs), {*mulDual(t, q)});
        for (const DualPath& t : diffDual(q)) rhs = addTerms(std::move(rhs), {*mulDual(p, t)});
        if (!(addTerms(std::move(lhs), rhs).empty())) {
          bad = barGenName(p) + " * " + barGenName(q);
          break;
        }
      }
      if (!bad.empty()) break;
    }
    check("Leibniz rule over every composable path pair", bad.empty(), "fails at " + bad);
  }

  return checks;
}

std::vector<CertifyCheck> checkMixedChains(const DDStructure& d, int maxLen) {
  std::vector<std::vector<const DDArrow*>> bySrc(d.genCount());
  for (const DDArrow& a : d.arrows) bySrc[a.src].push_back(&a);

  long chainsChecked = 0;
  std::string bad;
  // Walk chains depth-first, keeping the running interleaved product of
  // the emitted coefficients.  nullopt product = no emission yet; once
  // the product dies it stays dead.
  struct State {
    std::optional<Basis> product;
    bool dead = false;
    bool leftSeen = false;
    bool rightSeen = false;
  };
  auto extend = [&](auto&& self, int at, State state, int len, std::string& trail) -> void {
    if (len > 0 && state.leftSeen && state.rightSeen) {
      ++chainsChecked;
      if (!state.dead && bad.empty())
        bad = trail + " gives " + std::string(name(*state.product));
    }
    if (len == maxLen) return;
    for (const DDArrow* a : bySrc[at]) {
      State next = state;
      for (int side = 0; side < 2; ++side) {
        Basis emitted = side ? a->right : a->left;
        if (isIdempotent(emitted)) continue;
        (side ? next.rightSeen : next.leftSeen) = true;
        if (next.dead) continue;
        if (!next.product) {
          next.product = emitted;
        } else if (auto prod = mulBasis(*next.product, emitted)) {
          next.product = prod;
        } else {
          next.dead = true;
        }
      }
      size_t mark = trail.size();
      trail += " -> " + d.genNames[a->tgt];
      self(self, a->tgt, next, len + 1, trail);
      trail.resize(mark);
    }
  };
  for (int b = 0; b < d.genCount(); ++b) {
    std::string trail = d.genNames[b];
    extend(extend, b, State{}, 0, trail);
  }

  std::vector<CertifyCheck> checks;
  checks.push_back({"mixed-emission chains up to length " + std::to_string(maxLen) +
                        " all multiply to zero (" + std::to_string(chainsChecked) + " chains)",
                    bad.empty(), bad});
  return checks;
}

}  // namespace pillowcase
