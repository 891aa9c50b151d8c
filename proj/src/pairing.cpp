#include "pillowcase/pairing.hpp"

#include <map>
#include <stdexcept>

#include "pillowcase/bar.hpp"

namespace pillowcase {

bool PairingComplex::toggleArrow(int src, int tgt) {
  auto key = std::make_pair(src, tgt);
  auto it = arrows.find(key);
  if (it != arrows.end()) {
    arrows.erase(it);
    return false;
  }
  arrows.insert(key);
  return true;
}

F2Matrix PairingComplex::boundary() const {
  F2Matrix d(genCount(), genCount());
  for (const auto& [src, tgt] : arrows) d.toggle(tgt, src);
  return d;
}

int PairingComplex::homology() const { return homologyRank(boundary()); }

namespace {

// Emission chains out of one DD generator: the DD arrows that emit only
// on the given side, followed to every depth up to maxLen.
struct Chain {
  std::vector<Basis> emissions;  // in chain order
  int end = 0;                   // final DD generator
};

std::vector<std::vector<Chain>> emissionChains(const DDStructure& dd, bool leftSide, int maxLen) {
  std::vector<std::vector<const DDArrow*>> emitting(dd.genCount());
  for (const DDArrow& a : dd.arrows) {
    bool leftId = isIdempotent(a.left);
    bool rightId = isIdempotent(a.right);
    if (leftSide ? (!leftId && rightId) : (leftId && !rightId)) emitting[a.src].push_back(&a);
  }
  std::vector<std::vector<Chain>> out(dd.genCount());
  for (int b = 0; b < dd.genCount(); ++b) {
    auto extend = [&](auto&& self, int at, std::vector<Basis>& emissions) -> void {
      if (!emissions.empty()) out[b].push_back({emissions, at});
      if (static_cast<int>(emissions.size()) == maxLen) return;
      for (const DDArrow* a : emitting[at]) {
        emissions.push_back(leftSide ? a->left : a->right);
        self(self, a->tgt, emissions);
        emissions.pop_back();
      }
    };
    std::vector<Basis> emissions;
    extend(extend, b, emissions);
  }
  return out;
}

int longestAction(const ModuleBase& m) {
  size_t len = 0;
  for (const Action& a : m.actions) len = std::max(len, a.inputs.size());
  return static_cast<int>(len);
}

}  // namespace

PairingComplex buildPairing(const RightModule& m, const DDStructure& dd, const LeftModule& n) {
  PairingComplex out;

  // generator triples, m-major
  std::map<std::tuple<int, int, int>, int> index;
  for (int mi = 0; mi < m.genCount(); ++mi)
    for (int bi = 0; bi < dd.genCount(); ++bi) {
      if (dd.genIdems[bi].first != m.genIdems[mi]) continue;
      for (int ni = 0; ni < n.genCount(); ++ni) {
        if (dd.genIdems[bi].second != n.genIdems[ni]) continue;
        out.genNames.push_back(m.genNames[mi] + "|" + dd.genNames[bi] + "|" + n.genNames[ni]);
        index.emplace(std::tuple{mi, bi, ni}, out.genCount() - 1);
      }
    }

  // module differentials and identity-identity DD arrows move one slot
  for (const auto& [key, g] : index) {
    auto [mi, bi, ni] = key;
    for (const Action& a : m.actions)
      if (a.src == mi && a.inputs.empty()) out.toggleArrow(g, index.at({a.tgt, bi, ni}));
    for (const Action& a : n.actions)
      if (a.src == ni && a.inputs.empty()) out.toggleArrow(g, index.at({mi, bi, a.tgt}));
  }
  for (const DDArrow& a : dd.arrows)
    if (dd.identityArrow(a))
      for (const auto& [key, g] : index) {
        auto [mi, bi, ni] = key;
        if (bi == a.src) out.toggleArrow(g, index.at({mi, a.tgt, ni}));
      }

  // one-sided emission chains consumed by a module action
  auto leftChains = emissionChains(dd, true, longestAction(m));
  auto rightChains = emissionChains(dd, false, longestAction(n));
  for (const auto& [key, g] : index) {
    auto [mi, bi, ni] = key;
    for (const Chain& chain : leftChains[bi])
      for (const Action& a : m.actions)
        if (a.src == mi && a.inputs == chain.emissions)
          out.toggleArrow(g, index.at({a.tgt, chain.end, ni}));
    for (const Chain& chain : rightChains[bi]) {
      std::vector<Basis> reversed(chain.emissions.rbegin(), chain.emissions.rend());
      for (const Action& a : n.actions)
        if (a.src == ni && a.inputs == reversed)
          out.toggleArrow(g, index.at({mi, chain.end, a.tgt}));
    }
  }
  return out;
}

PairingComplex buildPairing(const RightModule& m, const LeftModule& n) {
  return buildPairing(m, builtinBarR(), n);
}

int pairRank(const RightModule& m1, const RightModule& m0) {
  return buildPairing(m1, dualize(m0)).homology();
}

int pairRank(const RightModule& m1, const DDStructure& dd, const RightModule& m0) {
  return buildPairing(m1, dd, dualize(m0)).homology();
}

int intersectionNumber(const RightModule& m1, const RightModule& m0, bool periodic) {
  int rank = pairRank(m1, m0);
  if (!periodic) return rank;
  if (rank < 2)
    throw std::runtime_error("intersection number would be negative; the pairing rank is " +
                             std::to_string(rank) + ", so the curves cannot be periodic");
  return rank - 2;
}

}  // namespace pillowcase
