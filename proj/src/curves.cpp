#include "pillowcase/curves.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace pillowcase {

namespace {

constexpr std::array<std::string_view, 4> kDomainNames = {"B1", "B2", "B3", "B4"};

// Directed chain of a domain: arcs interleaved with the chords joining
// them.  chords[k] leads from arcs[k] to arcs[k+1].
struct Chain {
  std::vector<Idem> arcs;
  std::vector<Basis> chords;
};

const Chain& chain(Domain d) {
  using enum Basis;
  constexpr Idem i0 = Idem::I0, i1 = Idem::I1, i2 = Idem::I2;
  constexpr Idem j0 = Idem::J0, j1 = Idem::J1, j2 = Idem::J2;
  static const std::array<Chain, 4> chains = {{
      {{i0, i1, i2, j2, j1, j0}, {Eta1, Xi1, Rho2, Xi3, Eta3}},
      {{i0, j0}, {Rho0}},
      {{i1, j1}, {Eta2}},
      {{i2, j2}, {Xi2}},
  }};
  return chains[static_cast<int>(d)];
}

// The non-B1 domain bordering an arc.
Domain otherDomain(Idem arc) {
  switch (arc) {
    case Idem::I0:
    case Idem::J0: return Domain::B2;
    case Idem::I1:
    case Idem::J1: return Domain::B3;
    default: return Domain::B4;
  }
}

int chainPosition(Domain d, Idem arc) {
  const auto& arcs = chain(d).arcs;
  auto it = std::find(arcs.begin(), arcs.end(), arc);
  if (it == arcs.end()) return -1;
  return static_cast<int>(it - arcs.begin());
}

[[noreturn]] void fail(const std::string& msg) { throw std::runtime_error("curve: " + msg); }

}  // namespace

std::string_view name(Domain d) { return kDomainNames[static_cast<int>(d)]; }

CurveWord parseWord(const std::string& text) {
  // strip comments, collect whitespace-separated tokens
  std::vector<std::string> tokens;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::string tok;
    while (words >> tok) tokens.push_back(tok);
  }
  if (tokens.empty()) fail("empty input");

  CurveWord w;
  if (tokens[0] == "cyclic:")
    w.cyclic = true;
  else if (tokens[0] == "linear:")
    w.cyclic = false;
  else
    fail("expected leading 'cyclic:' or 'linear:', got '" + tokens[0] + "'");

  bool expectDomain = true;
  for (size_t k = 1; k < tokens.size(); ++k) {
    const std::string& tok = tokens[k];
    if (expectDomain) {
      auto it = std::find(kDomainNames.begin(), kDomainNames.end(), tok);
      if (it == kDomainNames.end()) fail("expected a domain token, got '" + tok + "'");
      w.domains.push_back(static_cast<Domain>(it - kDomainNames.begin()));
    } else {
      auto arc = idemFromName(tok);
      if (!arc) fail("expected an arc token, got '" + tok + "'");
      w.arcs.push_back(*arc);
    }
    expectDomain = !expectDomain;
  }

  if (w.cyclic) {
    if (w.domains.empty() || w.domains.size() != w.arcs.size())
      fail("a cyclic word alternates domains and arcs, ending on an arc");
  } else {
    if (w.domains.size() != w.arcs.size() + 1)
      fail("a linear word starts and ends with a domain");
  }

  // every arc must separate the domains on its two sides
  size_t visits = w.arcs.size();
  for (size_t k = 0; k < visits; ++k) {
    Domain before = w.domains[k];
    Domain after = w.cyclic ? w.domains[(k + 1) % w.domains.size()] : w.domains[k + 1];
    Idem arc = w.arcs[k];
    Domain partner = otherDomain(arc);
    bool ok = (before == Domain::B1 && after == partner) || (before == partner && after == Domain::B1);
    if (!ok)
      fail("arc " + std::string(name(arc)) + " does not separate " + std::string(name(before)) +
           " and " + std::string(name(after)));
  }
  return w;
}

std::string serializeWord(const CurveWord& w) {
  std::string out = w.cyclic ? "cyclic:" : "linear:";
  for (size_t k = 0; k < w.domains.size(); ++k) {
    out += ' ';
    out += name(w.domains[k]);
    if (k < w.arcs.size()) {
      out += ' ';
      out += name(w.arcs[k]);
    }
  }
  return out;
}

namespace {

// Index of a backtracking pattern: a visit whose flanking arcs coincide.
// For cyclic words the flanks wrap around.
int findBacktrack(const CurveWord& w) {
  size_t n = w.domains.size();
  if (w.arcs.size() < 2) return -1;
  if (w.cyclic) {
    for (size_t k = 0; k < n; ++k)
      if (w.arcs[(k + n - 1) % n] == w.arcs[k]) return static_cast<int>(k);
    return -1;
  }
  for (size_t k = 1; k + 1 < n; ++k)  // interior visits only
    if (w.arcs[k - 1] == w.arcs[k]) return static_cast<int>(k);
  return -1;
}

CurveWord rotateWord(const CurveWord& w, size_t r) {
  size_t n = w.domains.size();
  CurveWord out;
  out.cyclic = true;
  for (size_t i = 0; i < n; ++i) {
    out.domains.push_back(w.domains[(i + r) % n]);
    out.arcs.push_back(w.arcs[(i + r) % n]);
  }
  return out;
}

}  // namespace

bool isNormalized(const CurveWord& w) { return findBacktrack(w) == -1; }

CurveWord normalize(CurveWord w) {
  for (;;) {
    int k = findBacktrack(w);
    if (k < 0) break;
    size_t n = w.domains.size();
    if (w.cyclic) {
      // rotate the pattern to visit 1, then cut "a0 D1 a1" and merge the
      // equal visits D0 and D2 around it
      w = rotateWord(w, (k + n - 1) % n);
      CurveWord next;
      next.cyclic = true;
      next.domains.push_back(w.domains[0]);
      for (size_t i = 3; i < n; ++i) next.domains.push_back(w.domains[i]);
      for (size_t i = 2; i < n; ++i) next.arcs.push_back(w.arcs[i]);
      w = std::move(next);
      if (w.arcs.empty()) fail("cyclic word normalizes to nothing (null-homotopic curve)");
    } else {
      // cut "a D a" and merge the equal visits flanking it
      w.domains.erase(w.domains.begin() + k, w.domains.begin() + k + 2);
      w.arcs.erase(w.arcs.begin() + k - 1, w.arcs.begin() + k + 1);
    }
  }
  return w;
}

RightModule compileCurve(const CurveWord& w) {
  if (!isNormalized(w)) fail("compileCurve requires a normalized word");
  RightModule m;
  for (size_t k = 0; k < w.arcs.size(); ++k)
    m.addGenerator("g" + std::to_string(k), w.arcs[k]);

  // one basic action per visit with two flanking arcs
  struct Basic {
    int src;
    std::vector<Basis> inputs;
    int tgt;
  };
  std::vector<Basic> basics;
  size_t n = w.domains.size();
  for (size_t k = 0; k < n; ++k) {
    int left, right;  // generator indices of the flanking arc crossings
    if (w.cyclic) {
      left = static_cast<int>((k + n - 1) % n);
      right = static_cast<int>(k);
    } else {
      if (k == 0 || k == n - 1) continue;  // end visits border only one arc
      left = static_cast<int>(k - 1);
      right = static_cast<int>(k);
    }
    Domain d = w.domains[k];
    int pa = chainPosition(d, w.arcs[left]);
    int pb = chainPosition(d, w.arcs[right]);
    if (pa < 0 || pb < 0) fail("arc missing from domain chain");
    int src = left, tgt = right;
    if (pa > pb) {
      std::swap(pa, pb);
      std::swap(src, tgt);
    }
    const auto& chords = chain(d).chords;
    std::vector<Basis> inputs(chords.begin() + pa, chords.begin() + pb);
    basics.push_back({src, std::move(inputs), tgt});
  }

  for (const Basic& b : basics) m.toggleAction({b.src, b.inputs, b.tgt});

  // composite closure: chase chains of basic actions, merging the two
  // inputs at each junction; a zero junction product kills every chain
  // through it
  std::vector<std::vector<const Basic*>> bySrc(m.genCount());
  for (const Basic& b : basics) bySrc[b.src].push_back(&b);
  auto extend = [&](auto&& self, int tail, std::vector<Basis> inputs, int start) -> void {
    for (const Basic* next : bySrc[tail]) {
      auto junction = mulBasis(inputs.back(), next->inputs.front());
      if (!junction) continue;
      std::vector<Basis> merged(inputs.begin(), inputs.end() - 1);
      merged.push_back(*junction);
      merged.insert(merged.end(), next->inputs.begin() + 1, next->inputs.end());
      m.toggleAction({start, merged, next->tgt});
      self(self, next->tgt, std::move(merged), start);
    }
  };
  for (const Basic& b : basics) extend(extend, b.tgt, b.inputs, b.src);
  return m;
}

}  // namespace pillowcase
