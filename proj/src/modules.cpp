#include "pillowcase/modules.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

namespace pillowcase {

namespace {

std::string inputsToString(const std::vector<Basis>& inputs) {
  std::string out;
  for (Basis b : inputs) {
    if (!out.empty()) out += ' ';
    out += name(b);
  }
  return out;
}

// Composable sequences of non-idempotent basis elements, length 1..maxLen.
// The quiver is acyclic, so the enumeration ends on its own.
std::vector<std::vector<Basis>> composableSequences(int maxLen) {
  std::vector<std::vector<Basis>> out;
  std::vector<Basis> current;
  auto extend = [&](auto&& self) -> void {
    if (static_cast<int>(current.size()) >= maxLen) return;
    for (int k = kIdemCount; k < kBasisCount; ++k) {
      auto b = static_cast<Basis>(k);
      if (!current.empty() && rightIdem(current.back()) != leftIdem(b)) continue;
      current.push_back(b);
      out.push_back(current);
      self(self);
      current.pop_back();
    }
  };
  extend(extend);
  return out;
}

using GenVec = std::vector<char>;  // F2 vector indexed by generator

void toggleInto(GenVec& v, int g) { v[g] ^= 1; }

bool isZero(const GenVec& v) {
  return std::all_of(v.begin(), v.end(), [](char c) { return !c; });
}

}  // namespace

int ModuleBase::addGenerator(std::string name, Idem idem) {
  genNames.push_back(std::move(name));
  genIdems.push_back(idem);
  return genCount() - 1;
}

bool ModuleBase::toggleAction(Action a) {
  auto it = actions.find(a);
  if (it != actions.end()) {
    actions.erase(it);
    return false;
  }
  actions.insert(std::move(a));
  return true;
}

std::optional<int> ModuleBase::findGenerator(std::string_view name) const {
  for (int g = 0; g < genCount(); ++g)
    if (genNames[g] == name) return g;
  return std::nullopt;
}

LeftModule dualize(const RightModule& m) {
  LeftModule out;
  for (int g = 0; g < m.genCount(); ++g) {
    std::string n = m.genNames[g];
    if (!n.empty() && n.back() == '*')
      n.pop_back();
    else
      n += '*';
    out.addGenerator(std::move(n), m.genIdems[g]);
  }
  for (const Action& a : m.actions) out.toggleAction({a.tgt, a.inputs, a.src});
  return out;
}

RightModule dualize(const LeftModule& m) {
  RightModule out;
  for (int g = 0; g < m.genCount(); ++g) {
    std::string n = m.genNames[g];
    if (!n.empty() && n.back() == '*')
      n.pop_back();
    else
      n += '*';
    out.addGenerator(std::move(n), m.genIdems[g]);
  }
  for (const Action& a : m.actions) out.toggleAction({a.tgt, a.inputs, a.src});
  return out;
}

RightModule directSum(const std::vector<RightModule>& parts) {
  if (parts.size() == 1) return parts.front();
  RightModule out;
  for (size_t p = 0; p < parts.size(); ++p) {
    int base = out.genCount();
    for (int g = 0; g < parts[p].genCount(); ++g)
      out.addGenerator(parts[p].genNames[g] + "." + std::to_string(p), parts[p].genIdems[g]);
    for (const Action& a : parts[p].actions)
      out.toggleAction({a.src + base, a.inputs, a.tgt + base});
  }
  return out;
}

ValidationReport validateAinfty(const RightModule& m, int maxArity) {
  ValidationReport report;
  for (const Action& a : m.actions) {
    if (a.inputs.empty()) {
      if (m.genIdems[a.src] != m.genIdems[a.tgt])
        report.structural.push_back({actionToString(m, a), "m1 arrow between different idempotents"});
      continue;
    }
    Idem at = m.genIdems[a.src];
    bool ok = true;
    for (Basis b : a.inputs) {
      if (isIdempotent(b)) {
        ok = false;
        break;
      }
      if (leftIdem(b) != at) {
        ok = false;
        break;
      }
      at = rightIdem(b);
    }
    if (ok && at != m.genIdems[a.tgt]) ok = false;
    if (!ok)
      report.structural.push_back({actionToString(m, a), "idempotent-inconsistent action"});
  }

  // m(x; seq) as an F2 vector of generators; empty seq looks up m1 arrows
  auto apply = [&m](int x, const std::vector<Basis>& seq) {
    GenVec out(m.genCount(), 0);
    auto it = m.actions.lower_bound({x, seq, 0});
    for (; it != m.actions.end() && it->src == x && it->inputs == seq; ++it)
      toggleInto(out, it->tgt);
    return out;
  };
  auto applyVec = [&m, &apply](const GenVec& xs, const std::vector<Basis>& seq) {
    GenVec out(m.genCount(), 0);
    for (int g = 0; g < m.genCount(); ++g)
      if (xs[g]) {
        GenVec part = apply(g, seq);
        for (int h = 0; h < m.genCount(); ++h) out[h] ^= part[h];
      }
    return out;
  };

  const std::vector<Basis> empty;
  auto sequences = composableSequences(maxArity);
  for (int x = 0; x < m.genCount(); ++x) {
    // n = 0: the m1 arrows must square to zero
    GenVec sum = applyVec(apply(x, empty), empty);
    if (!isZero(sum))
      report.relation.push_back({m.genNames[x], "m1*m1 != 0"});
    for (const auto& seq : sequences) {
      int n = static_cast<int>(seq.size());
      GenVec acc(m.genCount(), 0);
      auto add = [&acc, &m](const GenVec& v) {
        for (int h = 0; h < m.genCount(); ++h) acc[h] ^= v[h];
      };
      add(applyVec(apply(x, seq), empty));  // m1 after the full action
      add(applyVec(apply(x, empty), seq));  // full action after m1
      for (int j = 1; j < n; ++j) {
        std::vector<Basis> head(seq.begin(), seq.begin() + j);
        std::vector<Basis> tail(seq.begin() + j, seq.end());
        add(applyVec(apply(x, head), tail));
      }
      for (int i = 0; i + 1 < n; ++i) {
        auto merged = mulBasis(seq[i], seq[i + 1]);
        if (!merged) continue;
        std::vector<Basis> word(seq.begin(), seq.begin() + i);
        word.push_back(*merged);
        word.insert(word.end(), seq.begin() + i + 2, seq.end());
        add(apply(x, word));
      }
      if (!isZero(acc))
        report.relation.push_back(
            {m.genNames[x] + " | " + inputsToString(seq), "relation sum nonzero"});
    }
  }
  return report;
}

namespace {

// Shared backtracking over generator bijections.  Candidates are grouped
// by an invariant key; the verifier sees the full map.
std::optional<std::vector<int>> matchGenerators(
    int count, const std::vector<std::string>& keysA, const std::vector<std::string>& keysB,
    const std::function<bool(const std::vector<int>&)>& accept) {
  std::map<std::string, std::vector<int>> classesB;
  for (int g = 0; g < count; ++g) classesB[keysB[g]].push_back(g);
  {
    std::map<std::string, int> countA;
    for (const auto& k : keysA) ++countA[k];
    if (classesB.size() != countA.size()) return std::nullopt;
    for (const auto& [k, v] : classesB) {
      auto it = countA.find(k);
      if (it == countA.end() || it->second != static_cast<int>(v.size())) return std::nullopt;
    }
  }
  std::vector<int> map(count, -1);
  std::vector<char> used(count, 0);
  auto assign = [&](auto&& self, int g) -> bool {
    if (g == count) return accept(map);
    for (int h : classesB[keysA[g]]) {
      if (used[h]) continue;
      used[h] = 1;
      map[g] = h;
      if (self(self, g + 1)) return true;
      used[h] = 0;
      map[g] = -1;
    }
    return false;
  };
  if (!assign(assign, 0)) return std::nullopt;
  return map;
}

std::string moduleGenKey(const ModuleBase& m, int g) {
  std::vector<std::string> out, in;
  for (const Action& a : m.actions) {
    std::string sig = inputsToString(a.inputs);
    if (a.src == g) out.push_back(sig);
    if (a.tgt == g) in.push_back(sig);
  }
  std::sort(out.begin(), out.end());
  std::sort(in.begin(), in.end());
  std::string key{name(m.genIdems[g])};
  key += ">";
  for (auto& s : out) key += s + ";";
  key += "<";
  for (auto& s : in) key += s + ";";
  return key;
}

std::string ddGenKey(const DDStructure& d, int g) {
  std::vector<std::string> out, in;
  for (const DDArrow& a : d.arrows) {
    std::string sig = std::string(name(a.left)) + "/" + std::string(name(a.right));
    if (a.src == g) out.push_back(sig);
    if (a.tgt == g) in.push_back(sig);
  }
  std::sort(out.begin(), out.end());
  std::sort(in.begin(), in.end());
  std::string key = std::string(name(d.genIdems[g].first)) + "," + std::string(name(d.genIdems[g].second));
  key += ">";
  for (auto& s : out) key += s + ";";
  key += "<";
  for (auto& s : in) key += s + ";";
  return key;
}

}  // namespace

std::optional<std::vector<int>> isoModules(const RightModule& a, const RightModule& b) {
  if (a.genCount() != b.genCount() || a.actions.size() != b.actions.size()) return std::nullopt;
  int count = a.genCount();
  std::vector<std::string> keysA(count), keysB(count);
  for (int g = 0; g < count; ++g) {
    keysA[g] = moduleGenKey(a, g);
    keysB[g] = moduleGenKey(b, g);
  }
  auto accept = [&](const std::vector<int>& map) {
    for (int g = 0; g < count; ++g)
      if (a.genIdems[g] != b.genIdems[map[g]]) return false;
    std::set<Action> mapped;
    for (const Action& act : a.actions) mapped.insert({map[act.src], act.inputs, map[act.tgt]});
    return mapped == b.actions;
  };
  return matchGenerators(count, keysA, keysB, accept);
}

int DDStructure::addGenerator(std::string name, Idem left, Idem right) {
  genNames.push_back(std::move(name));
  genIdems.emplace_back(left, right);
  return genCount() - 1;
}

bool DDStructure::toggleArrow(DDArrow a) {
  auto it = arrows.find(a);
  if (it != arrows.end()) {
    arrows.erase(it);
    return false;
  }
  arrows.insert(a);
  return true;
}

std::optional<int> DDStructure::findGenerator(std::string_view name) const {
  for (int g = 0; g < genCount(); ++g)
    if (genNames[g] == name) return g;
  return std::nullopt;
}

bool DDStructure::identityArrow(const DDArrow& a) const {
  return isIdempotent(a.left) && isIdempotent(a.right);
}

ValidationReport validateDD(const DDStructure& d) {
  ValidationReport report;
  for (const DDArrow& a : d.arrows) {
    bool ok = leftIdem(a.left) == d.genIdems[a.src].first &&
              rightIdem(a.left) == d.genIdems[a.tgt].first &&
              leftIdem(a.right) == d.genIdems[a.tgt].second &&
              rightIdem(a.right) == d.genIdems[a.src].second;
    if (!ok) report.structural.push_back({arrowToString(d, a), "coefficient idempotents inconsistent"});
  }

  // arrows grouped by source for chain composition
  std::vector<std::vector<const DDArrow*>> bySrc(d.genCount());
  for (const DDArrow& a : d.arrows) bySrc[a.src].push_back(&a);

  for (int b = 0; b < d.genCount(); ++b) {
    std::map<std::tuple<Basis, int, Basis>, int> counts;
    for (const DDArrow* first : bySrc[b]) {
      for (const DDArrow* second : bySrc[first->tgt]) {
        auto l = mulBasis(first->left, second->left);
        if (!l) continue;
        auto r = mulBasis(second->right, first->right);
        if (!r) continue;
        counts[{*l, second->tgt, *r}] ^= 1;
      }
    }
    for (const auto& [key, parity] : counts) {
      if (!parity) continue;
      const auto& [l, tgt, r] = key;
      report.relation.push_back(
          {d.genNames[b], "uncancelled square to " + d.genNames[tgt] + " via " +
                              std::string(name(l)) + " ; " + std::string(name(r))});
    }
  }
  return report;
}

DDStructure cancelDD(const DDStructure& d, int x, int y) {
  if (x == y) throw std::invalid_argument("cancelDD: arrow must join distinct generators");
  bool found = false;
  for (const DDArrow& a : d.arrows)
    if (a.src == x && a.tgt == y && d.identityArrow(a)) {
      found = true;
      break;
    }
  if (!found) throw std::invalid_argument("cancelDD: no identity-identity arrow between the generators");

  DDStructure out;
  std::vector<int> remap(d.genCount(), -1);
  for (int g = 0; g < d.genCount(); ++g) {
    if (g == x || g == y) continue;
    remap[g] = out.addGenerator(d.genNames[g], d.genIdems[g].first, d.genIdems[g].second);
  }
  for (const DDArrow& a : d.arrows) {
    if (a.src == x || a.src == y || a.tgt == x || a.tgt == y) continue;
    out.toggleArrow({remap[a.src], a.left, remap[a.tgt], a.right});
  }
  // reroute around the cancelled pair: a -> y then x -> z
  for (const DDArrow& in : d.arrows) {
    if (in.tgt != y || in.src == x || in.src == y) continue;
    for (const DDArrow& from : d.arrows) {
      if (from.src != x || from.tgt == x || from.tgt == y) continue;
      auto l = mulBasis(in.left, from.left);
      if (!l) continue;
      auto r = mulBasis(from.right, in.right);
      if (!r) continue;
      out.toggleArrow({remap[in.src], *l, remap[from.tgt], *r});
    }
  }
  return out;
}

namespace {

DDStructure reduceWith(const DDStructure& d, const std::function<size_t(size_t)>& pick) {
  DDStructure current = d;
  for (;;) {
    std::vector<std::pair<int, int>> candidates;
    for (const DDArrow& a : current.arrows)
      if (a.src != a.tgt && current.identityArrow(a)) candidates.emplace_back(a.src, a.tgt);
    if (candidates.empty()) return current;
    auto [x, y] = candidates[pick(candidates.size())];
    current = cancelDD(current, x, y);
  }
}

}  // namespace

DDStructure reduceDD(const DDStructure& d) {
  return reduceWith(d, [](size_t) { return 0; });
}

DDStructure reduceDD(const DDStructure& d, uint64_t seed) {
  std::mt19937_64 rng(seed);
  return reduceWith(d, [&rng](size_t n) { return std::uniform_int_distribution<size_t>(0, n - 1)(rng); });
}

std::optional<std::vector<int>> isoDD(const DDStructure& a, const DDStructure& b) {
  if (a.genCount() != b.genCount() || a.arrows.size() != b.arrows.size()) return std::nullopt;
  int count = a.genCount();
  std::vector<std::string> keysA(count), keysB(count);
  for (int g = 0; g < count; ++g) {
    keysA[g] = ddGenKey(a, g);
    keysB[g] = ddGenKey(b, g);
  }
  auto accept = [&](const std::vector<int>& map) {
    for (int g = 0; g < count; ++g)
      if (a.genIdems[g] != b.genIdems[map[g]]) return false;
    std::set<DDArrow> mapped;
    for (const DDArrow& arr : a.arrows) mapped.insert({map[arr.src], arr.left, map[arr.tgt], arr.right});
    return mapped == b.arrows;
  };
  return matchGenerators(count, keysA, keysB, accept);
}

std::string actionToString(const ModuleBase& m, const Action& a) {
  return m.genNames[a.src] + " | " + inputsToString(a.inputs) + " -> " + m.genNames[a.tgt];
}

std::string arrowToString(const DDStructure& d, const DDArrow& a) {
  std::string l = isIdempotent(a.left) ? "1" : std::string(name(a.left));
  std::string r = isIdempotent(a.right) ? "1" : std::string(name(a.right));
  return d.genNames[a.src] + " | " + l + " ; " + r + " -> " + d.genNames[a.tgt];
}

}  // namespace pillowcase
