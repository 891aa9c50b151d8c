#include "pillowcase/bar.hpp"

#include <map>
#include <sstream>

#include "pillowcase/io.hpp"

namespace pillowcase {

namespace {

// Reduced model of the dual bar structure.  The table is kept verbatim
// so builtinBarR() works without running the cancellation; certifyBar
// re-derives it from buildBar() to keep the two in sync.
constexpr std::string_view kReducedTable = R"(
gen b(i2) i2 i2
gen b(i0) i0 i0
gen b(j1) j1 j1
gen b(j2) j2 j2
gen b(j0) j0 j0
gen b(i1) i1 i1
gen b(-rho0) j0 i0
gen b(-eta2) j1 i1
gen b(-xi2) j2 i2
gen b(-eta3) j0 j1
gen b(-xi3) j1 j2
gen b(-rho2) j2 i2
gen b(-xi1) i2 i1
gen b(-eta1) i1 i0
gen b(-rho2,-xi1) j2 i1
gen b(-xi3,-rho2) j1 i2
gen b(-eta3,-xi3) j0 j2
gen b(-xi1,-eta1) i2 i0
gen b(-eta3,-xi3,-rho2) j0 i2
gen b(-xi3,-rho2,-xi1) j1 i1
gen b(-rho2,-xi1,-eta1) j2 i0
gen b(-xi3,-rho2,-xi1,-eta1) j1 i0
gen b(-eta3,-xi3,-rho2,-xi1) j0 i1
gen b(-eta3,-xi3,-rho2,-xi1,-eta1) j0 i0
b(-eta3,-xi3,-rho2,-xi1) | 1 ; eta1 -> b(-eta3,-xi3,-rho2,-xi1,-eta1)
b(-rho2,-xi1,-eta1) | xi3 ; 1 -> b(-xi3,-rho2,-xi1,-eta1)
b(-eta3) | 1 ; xi3 -> b(-eta3,-xi3)
b(i2) | xi2 ; 1 -> b(-xi2)
b(i2) | 1 ; xi1 -> b(-xi1)
b(i2) | rho2 ; 1 -> b(-rho2)
b(j1) | eta3 ; 1 -> b(-eta3)
b(j1) | 1 ; xi3 -> b(-xi3)
b(j1) | 1 ; eta2 -> b(-eta2)
b(j2) | 1 ; xi2 -> b(-xi2)
b(j2) | xi3 ; 1 -> b(-xi3)
b(j2) | 1 ; rho2 -> b(-rho2)
b(j0) | 1 ; rho0 -> b(-rho0)
b(j0) | 1 ; eta3 -> b(-eta3)
b(-xi3,-rho2,-xi1,-eta1) | eta3 ; 1 -> b(-eta3,-xi3,-rho2,-xi1,-eta1)
b(i1) | xi1 ; 1 -> b(-xi1)
b(i1) | 1 ; eta1 -> b(-eta1)
b(i1) | eta2 ; 1 -> b(-eta2)
b(-rho2,-xi1) | 1 ; eta1 -> b(-rho2,-xi1,-eta1)
b(-rho2,-xi1) | xi3 ; 1 -> b(-xi3,-rho2,-xi1)
b(i0) | rho0 ; 1 -> b(-rho0)
b(i0) | eta1 ; 1 -> b(-eta1)
b(-xi1) | rho2 ; 1 -> b(-rho2,-xi1)
b(-xi1) | 1 ; eta1 -> b(-xi1,-eta1)
b(-eta1) | xi1 ; 1 -> b(-xi1,-eta1)
b(-xi3) | 1 ; rho2 -> b(-xi3,-rho2)
b(-xi3) | eta3 ; 1 -> b(-eta3,-xi3)
b(-rho2) | 1 ; xi1 -> b(-rho2,-xi1)
b(-rho2) | xi3 ; 1 -> b(-xi3,-rho2)
b(-eta3,-xi3,-rho2) | 1 ; xi1 -> b(-eta3,-xi3,-rho2,-xi1)
b(-xi3,-rho2,-xi1) | eta3 ; 1 -> b(-eta3,-xi3,-rho2,-xi1)
b(-xi3,-rho2,-xi1) | 1 ; eta1 -> b(-xi3,-rho2,-xi1,-eta1)
b(-xi3,-rho2) | eta3 ; 1 -> b(-eta3,-xi3,-rho2)
b(-xi3,-rho2) | 1 ; xi1 -> b(-xi3,-rho2,-xi1)
b(-eta3,-xi3) | 1 ; rho2 -> b(-eta3,-xi3,-rho2)
b(-xi1,-eta1) | rho2 ; 1 -> b(-rho2,-xi1,-eta1)
)";

std::string stripPrime(std::string_view edgeName) {
  edgeName.remove_suffix(1);  // every edge name ends in '
  return std::string(edgeName);
}

// Rename every generator of d to barGenName(parseBarGen(name)); reports
// the first unparseable name instead.
std::optional<std::string> canonicalizeNames(DDStructure& d) {
  for (std::string& n : d.genNames) {
    auto p = parseBarGen(n);
    if (!p) return "generator name '" + n + "' is not a basis path";
    n = barGenName(*p);
  }
  return std::nullopt;
}

// Exact comparison after name canonicalization: same generators with
// the same idempotent pairs, same arrows.  Returns a description of the
// first mismatch, or nullopt on equality.
std::optional<std::string> diffDD(const DDStructure& built, DDStructure table) {
  if (auto err = canonicalizeNames(table)) return err;
  if (built.genCount() != table.genCount())
    return "generator counts differ: " + std::to_string(built.genCount()) + " vs " +
           std::to_string(table.genCount());
  std::vector<int> toBuilt(table.genCount());
  for (int g = 0; g < table.genCount(); ++g) {
    auto h = built.findGenerator(table.genNames[g]);
    if (!h) return "generator " + table.genNames[g] + " missing from the built structure";
    if (built.genIdems[*h] != table.genIdems[g])
      return "idempotents of " + table.genNames[g] + " differ";
    toBuilt[g] = *h;
  }
  std::set<DDArrow> mapped;
  for (const DDArrow& a : table.arrows)
    mapped.insert({toBuilt[a.src], a.left, toBuilt[a.tgt], a.right});
  if (mapped != built.arrows) {
    for (const DDArrow& a : built.arrows)
      if (!mapped.count(a)) return "extra arrow " + arrowToString(built, a);
    for (const DDArrow& a : mapped)
      if (!built.arrows.count(a)) return "missing arrow " + arrowToString(built, a);
  }
  return std::nullopt;
}

std::string firstIssue(const ValidationReport& report) {
  const auto& list = report.structural.empty() ? report.relation : report.structural;
  if (list.empty()) return {};
  return list.front().where + ": " + list.front().detail;
}

}  // namespace

std::string barGenName(const DualPath& p) {
  std::string out = "b(";
  if (p.constant()) {
    out += name(p.source());
  } else {
    for (size_t k = 0; k < p.edges().size(); ++k) {
      if (k) out += ',';
      out += '-';
      out += stripPrime(name(p.edges()[k]));
    }
  }
  return out + ")";
}

std::optional<DualPath> parseBarGen(std::string_view s) {
  if (s.size() < 4 || !s.starts_with("b(") || !s.ends_with(")")) return std::nullopt;
  std::string_view inner = s.substr(2, s.size() - 3);
  // constant paths: bare arc name, with or without the quiver-reversal prime
  std::string_view vertex = inner;
  if (vertex.ends_with('\'')) vertex.remove_suffix(1);
  if (auto v = idemFromName(vertex)) return DualPath(*v);
  std::vector<DualEdge> edges;
  while (!inner.empty()) {
    auto comma = inner.find(',');
    std::string_view tok = inner.substr(0, comma);
    inner.remove_prefix(comma == std::string_view::npos ? inner.size() : comma + 1);
    auto e = edgeFromName(tok);
    if (!e) return std::nullopt;
    if (!edges.empty() && edgeTarget(edges.back()) != edgeSource(*e)) return std::nullopt;
    edges.push_back(*e);
  }
  if (edges.empty()) return std::nullopt;
  Idem start = edgeSource(edges.front());
  return DualPath(start, std::move(edges));
}

DDStructure buildBar() {
  DDStructure d;
  std::map<DualPath, int> index;
  for (const DualPath& p : allDualPaths())
    index.emplace(p, d.addGenerator(barGenName(p), p.source(), p.target()));
  for (const auto& [p, g] : index) {
    Basis leftId = idemBasis(p.source());
    Basis rightId = idemBasis(p.target());
    for (int k = 0; k < kDualEdgeCount; ++k) {
      auto e = static_cast<DualEdge>(k);
      if (edgeTarget(e) == p.source()) {
        std::vector<DualEdge> edges{e};
        edges.insert(edges.end(), p.edges().begin(), p.edges().end());
        DualPath ep(edgeSource(e), std::move(edges));
        d.toggleArrow({g, reverseEdge(e), index.at(ep), rightId});
      }
      if (edgeSource(e) == p.target()) {
        std::vector<DualEdge> edges = p.edges();
        edges.push_back(e);
        DualPath pe(p.source(), std::move(edges));
        d.toggleArrow({g, leftId, index.at(pe), reverseEdge(e)});
      }
    }
    for (const DualPath& q : diffDual(p)) d.toggleArrow({g, leftId, index.at(q), rightId});
  }
  return d;
}

DDStructure builtinBarR() {
  static const DDStructure model = parseDD(std::string(kReducedTable));
  return model;
}

CertifyReport certifyBar(const DDStructure& fullTable, const DDStructure& reducedTable) {
  CertifyReport report;
  auto check = [&report](std::string what, std::optional<std::string> problem) {
    report.checks.push_back({std::move(what), !problem, problem.value_or("")});
  };
  auto maybe = [](bool ok, std::string detail) -> std::optional<std::string> {
    if (ok) return std::nullopt;
    return detail;
  };

  DDStructure full = buildBar();
  DDStructure reduced = builtinBarR();

  check("full structure has 56 generators and 126 arrows",
        maybe(full.genCount() == 56 && full.arrows.size() == 126,
              std::to_string(full.genCount()) + " generators, " +
                  std::to_string(full.arrows.size()) + " arrows"));
  auto fullReport = validateDD(full);
  check("full structure satisfies the DD relation", maybe(fullReport.ok(), firstIssue(fullReport)));
  check("full structure matches the recorded table", diffDD(full, fullTable));

  check("reduced model has 24 generators and 36 arrows",
        maybe(reduced.genCount() == 24 && reduced.arrows.size() == 36,
              std::to_string(reduced.genCount()) + " generators, " +
                  std::to_string(reduced.arrows.size()) + " arrows"));
  auto reducedReport = validateDD(reduced);
  check("reduced model satisfies the DD relation",
        maybe(reducedReport.ok(), firstIssue(reducedReport)));
  check("builtin reduced model matches the recorded table", diffDD(reduced, reducedTable));

  {
    std::string problem;
    for (const DDArrow& a : reduced.arrows) {
      bool leftId = isIdempotent(a.left);
      bool rightId = isIdempotent(a.right);
      if (leftId == rightId) {
        problem = "arrow " + arrowToString(reduced, a) + " is not one-sided";
        break;
      }
    }
    check("reduced model is arrow-reduced and one-sided",
          problem.empty() ? std::nullopt : std::optional(problem));
  }

  check("cancellation in canonical order reaches the reduced model",
        maybe(isoDD(reduceDD(full), reduced).has_value(), "no generator bijection found"));
  for (uint64_t seed : {1, 2, 3})
    check("cancellation in shuffled order (seed " + std::to_string(seed) +
              ") reaches the reduced model",
          maybe(isoDD(reduceDD(full, seed), reduced).has_value(), "no generator bijection found"));

  return report;
}

}  // namespace pillowcase
