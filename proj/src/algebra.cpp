#include "pillowcase/algebra.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace pillowcase {

namespace {

constexpr std::array<std::string_view, kIdemCount> kIdemNames = {
    "i0", "i1", "i2", "j0", "j1", "j2"};

struct BasisInfo {
  std::string_view name;
  Idem left;
  Idem right;
  // Decomposition into single chords; empty for idempotents.
  std::vector<Basis> chords;
};

const std::array<BasisInfo, kBasisCount>& basisTable() {
  using enum Basis;
  constexpr Idem i0 = Idem::I0, i1 = Idem::I1, i2 = Idem::I2;
  constexpr Idem j0 = Idem::J0, j1 = Idem::J1, j2 = Idem::J2;
  static const std::array<BasisInfo, kBasisCount> table = {{
      {"i0", i0, i0, {}},
      {"i1", i1, i1, {}},
      {"i2", i2, i2, {}},
      {"j0", j0, j0, {}},
      {"j1", j1, j1, {}},
      {"j2", j2, j2, {}},
      {"rho0", i0, j0, {Rho0}},
      {"rho2", i2, j2, {Rho2}},
      {"xi1", i1, i2, {Xi1}},
      {"xi2", i2, j2, {Xi2}},
      {"xi3", j2, j1, {Xi3}},
      {"xi12", i1, j2, {Xi1, Xi2}},
      {"xi23", i2, j1, {Xi2, Xi3}},
      {"xi123", i1, j1, {Xi1, Xi2, Xi3}},
      {"eta1", i0, i1, {Eta1}},
      {"eta2", i1, j1, {Eta2}},
      {"eta3", j1, j0, {Eta3}},
      {"eta12", i0, j1, {Eta1, Eta2}},
      {"eta23", i1, j0, {Eta2, Eta3}},
      {"eta123", i0, j0, {Eta1, Eta2, Eta3}},
  }};
  return table;
}

// chord word -> basis element, for concatenation products
const std::map<std::vector<Basis>, Basis>& chordWordIndex() {
  static const std::map<std::vector<Basis>, Basis> index = [] {
    std::map<std::vector<Basis>, Basis> m;
    for (int k = 0; k < kBasisCount; ++k) {
      auto b = static_cast<Basis>(k);
      if (!isIdempotent(b)) m.emplace(basisTable()[k].chords, b);
    }
    return m;
  }();
  return index;
}

struct DualEdgeInfo {
  std::string_view name;
  Idem source;
  Idem target;
  Basis reversed;
};

const std::array<DualEdgeInfo, kDualEdgeCount>& dualEdgeTable() {
  using enum Idem;
  static const std::array<DualEdgeInfo, kDualEdgeCount> table = {{
      {"rho0'", J0, I0, Basis::Rho0},
      {"rho2'", J2, I2, Basis::Rho2},
      {"xi1'", I2, I1, Basis::Xi1},
      {"xi2'", J2, I2, Basis::Xi2},
      {"xi3'", J1, J2, Basis::Xi3},
      {"xi21'", J2, I1, Basis::Xi12},
      {"xi32'", J1, I2, Basis::Xi23},
      {"xi321'", J1, I1, Basis::Xi123},
      {"eta1'", I1, I0, Basis::Eta1},
      {"eta2'", J1, I1, Basis::Eta2},
      {"eta3'", J0, J1, Basis::Eta3},
      {"eta21'", J1, I0, Basis::Eta12},
      {"eta32'", J0, I1, Basis::Eta23},
      {"eta321'", J0, I0, Basis::Eta123},
  }};
  return table;
}

// Two-edge factorizations of the composite edges of Gamma'.
const std::vector<std::pair<DualEdge, DualEdge>>& edgeExpansion(DualEdge e) {
  using enum DualEdge;
  static const std::vector<std::pair<DualEdge, DualEdge>> none;
  static const std::vector<std::pair<DualEdge, DualEdge>> xi21 = {{Xi2p, Xi1p}};
  static const std::vector<std::pair<DualEdge, DualEdge>> xi32 = {{Xi3p, Xi2p}};
  static const std::vector<std::pair<DualEdge, DualEdge>> xi321 = {{Xi32p, Xi1p}, {Xi3p, Xi21p}};
  static const std::vector<std::pair<DualEdge, DualEdge>> eta21 = {{Eta2p, Eta1p}};
  static const std::vector<std::pair<DualEdge, DualEdge>> eta32 = {{Eta3p, Eta2p}};
  static const std::vector<std::pair<DualEdge, DualEdge>> eta321 = {{Eta32p, Eta1p}, {Eta3p, Eta21p}};
  switch (e) {
    case Xi21p: return xi21;
    case Xi32p: return xi32;
    case Xi321p: return xi321;
    case Eta21p: return eta21;
    case Eta32p: return eta32;
    case Eta321p: return eta321;
    default: return none;
  }
}

}  // namespace

std::string_view name(Idem v) { return kIdemNames[static_cast<int>(v)]; }

std::optional<Idem> idemFromName(std::string_view s) {
  for (int k = 0; k < kIdemCount; ++k)
    if (kIdemNames[k] == s) return static_cast<Idem>(k);
  return std::nullopt;
}

bool isIdempotent(Basis b) { return static_cast<int>(b) < kIdemCount; }

Basis idemBasis(Idem v) { return static_cast<Basis>(static_cast<int>(v)); }

Idem leftIdem(Basis b) { return basisTable()[static_cast<int>(b)].left; }

Idem rightIdem(Basis b) { return basisTable()[static_cast<int>(b)].right; }

std::string_view name(Basis b) { return basisTable()[static_cast<int>(b)].name; }

std::optional<Basis> basisFromName(std::string_view s) {
  for (int k = 0; k < kBasisCount; ++k)
    if (basisTable()[k].name == s) return static_cast<Basis>(k);
  return std::nullopt;
}

std::optional<Basis> mulBasis(Basis a, Basis b) {
  if (isIdempotent(a)) {
    if (leftIdem(b) == leftIdem(a)) return b;
    return std::nullopt;
  }
  if (isIdempotent(b)) {
    if (rightIdem(a) == rightIdem(b)) return a;
    return std::nullopt;
  }
  const auto& wa = basisTable()[static_cast<int>(a)].chords;
  const auto& wb = basisTable()[static_cast<int>(b)].chords;
  std::vector<Basis> word;
  word.reserve(wa.size() + wb.size());
  word.insert(word.end(), wa.begin(), wa.end());
  word.insert(word.end(), wb.begin(), wb.end());
  auto it = chordWordIndex().find(word);
  if (it == chordWordIndex().end()) return std::nullopt;
  return it->second;
}

std::vector<Basis> AlgebraElement::support() const {
  std::vector<Basis> out;
  for (int k = 0; k < kBasisCount; ++k)
    if (bits_ >> k & 1u) out.push_back(static_cast<Basis>(k));
  return out;
}

AlgebraElement operator*(AlgebraElement a, AlgebraElement b) {
  AlgebraElement out;
  for (Basis x : a.support())
    for (Basis y : b.support())
      if (auto p = mulBasis(x, y)) out.toggle(*p);
  return out;
}

std::string toString(const AlgebraElement& x) {
  if (x.isZero()) return "0";
  std::string out;
  for (Basis b : x.support()) {
    if (!out.empty()) out += '+';
    out += name(b);
  }
  return out;
}

Idem edgeSource(DualEdge e) { return dualEdgeTable()[static_cast<int>(e)].source; }

Idem edgeTarget(DualEdge e) { return dualEdgeTable()[static_cast<int>(e)].target; }

Basis reverseEdge(DualEdge e) { return dualEdgeTable()[static_cast<int>(e)].reversed; }

std::string_view name(DualEdge e) { return dualEdgeTable()[static_cast<int>(e)].name; }

std::optional<DualEdge> edgeFromName(std::string_view s) {
  for (int k = 0; k < kDualEdgeCount; ++k)
    if (dualEdgeTable()[k].name == s) return static_cast<DualEdge>(k);
  // minus alias: "-xi32" names the edge xi32'
  if (s.size() > 1 && s.front() == '-') {
    std::string primed(s.substr(1));
    primed += '\'';
    for (int k = 0; k < kDualEdgeCount; ++k)
      if (dualEdgeTable()[k].name == primed) return static_cast<DualEdge>(k);
  }
  return std::nullopt;
}

DualPath::DualPath(Idem start, std::vector<DualEdge> edges)
    : start_(start), edges_(std::move(edges)) {
  Idem at = start_;
  for (DualEdge e : edges_) {
    if (edgeSource(e) != at) throw std::invalid_argument("DualPath: edges do not concatenate");
    at = edgeTarget(e);
  }
}

Idem DualPath::target() const {
  return edges_.empty() ? start_ : edgeTarget(edges_.back());
}

bool operator<(const DualPath& a, const DualPath& b) {
  if (a.start_ != b.start_) return a.start_ < b.start_;
  if (a.edges_.size() != b.edges_.size()) return a.edges_.size() < b.edges_.size();
  return a.edges_ < b.edges_;
}

std::optional<DualPath> mulDual(const DualPath& a, const DualPath& b) {
  if (a.target() != b.source()) return std::nullopt;
  std::vector<DualEdge> edges = a.edges();
  edges.insert(edges.end(), b.edges().begin(), b.edges().end());
  return DualPath(a.source(), std::move(edges));
}

std::vector<DualPath> diffDual(const DualPath& p) {
  std::vector<DualPath> terms;
  const auto& edges = p.edges();
  for (size_t i = 0; i < edges.size(); ++i) {
    for (const auto& [first, second] : edgeExpansion(edges[i])) {
      std::vector<DualEdge> out;
      out.reserve(edges.size() + 1);
      out.insert(out.end(), edges.begin(), edges.begin() + i);
      out.push_back(first);
      out.push_back(second);
      out.insert(out.end(), edges.begin() + i + 1, edges.end());
      terms.emplace_back(p.source(), std::move(out));
    }
  }
  // cancel F2 pairs
  std::sort(terms.begin(), terms.end());
  std::vector<DualPath> out;
  for (size_t i = 0; i < terms.size();) {
    size_t j = i;
    while (j < terms.size() && terms[j] == terms[i]) ++j;
    if ((j - i) % 2) out.push_back(terms[i]);
    i = j;
  }
  return out;
}

const std::vector<DualPath>& allDualPaths() {
  static const std::vector<DualPath> paths = [] {
    std::vector<DualPath> out;
    // depth-first extension keeps the enumeration deterministic
    auto extend = [&out](auto&& self, const DualPath& p) -> void {
      out.push_back(p);
      for (int k = 0; k < kDualEdgeCount; ++k) {
        auto e = static_cast<DualEdge>(k);
        if (edgeSource(e) != p.target()) continue;
        std::vector<DualEdge> edges = p.edges();
        edges.push_back(e);
        self(self, DualPath(p.source(), std::move(edges)));
      }
    };
    for (int v = 0; v < kIdemCount; ++v) extend(extend, DualPath(static_cast<Idem>(v)));
    std::sort(out.begin(), out.end());
    return out;
  }();
  return paths;
}

}  // namespace pillowcase
