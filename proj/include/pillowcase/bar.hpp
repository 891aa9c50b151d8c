#pragma once

// The dual bar DD structure over (A', A) and its reduced model.
//
// Generators of the full structure are the 56 basis paths of A', a path
// p contributing a generator b(p) with idempotent pair (source, target).
// The arrow out of b(p) collects three kinds of term:
//
//   prepend an edge e ending at source(p):   reverseEdge(e) ; 1  -> b(ep)
//   append an edge e starting at target(p):  1 ; reverseEdge(e) -> b(pe)
//   expand one composite edge of p:          1 ; 1             -> b(p')
//
// The expansion terms are exactly the identity-identity arrows, so
// cancelling them all yields an arrow-reduced model with 24 generators:
// the six constant paths, the eight single non-composite edges, and the
// ten sub-chains of length >= 2 of the spine eta3' xi3' rho2' xi1'
// eta1'.  Its 36 arrows are all one-sided.  That model ships as a
// builtin table so the rest of the code does not depend on running the
// reduction.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pillowcase/algebra.hpp"
#include "pillowcase/modules.hpp"

namespace pillowcase {

// Canonical generator name: "b(i2)" for a constant path, otherwise the
// edge list in minus notation, e.g. "b(-eta3,-xi3)".
std::string barGenName(const DualPath& p);

// Inverse of barGenName; edge tokens may use either minus or prime
// notation ("b(-eta3,-xi3)" and "b(eta3',xi3')" name the same path).
std::optional<DualPath> parseBarGen(std::string_view s);

// The full dual bar structure: 56 generators, 126 arrows.
DDStructure buildBar();

// The builtin reduced model: 24 generators, 36 arrows, no
// identity-identity arrows left to cancel.
DDStructure builtinBarR();

struct CertifyCheck {
  std::string what;
  bool ok = false;
  std::string detail;  // empty when the check passes
};

struct CertifyReport {
  std::vector<CertifyCheck> checks;
  bool ok() const {
    for (const auto& c : checks)
      if (!c.ok) return false;
    return true;
  }
};

// Cross-checks the bar construction against independently recorded
// tables: buildBar() must satisfy the DD relation and match the full
// table exactly; builtinBarR() must match the reduced table; reduction
// of the full structure must reach the builtin model whatever the
// cancellation order; and the reduced model must be genuinely reduced
// (no identity-identity arrows, every arrow one-sided).  Fixture
// generator names are canonicalized through parseBarGen first, so
// either edge notation works.
CertifyReport certifyBar(const DDStructure& fullTable, const DDStructure& reducedTable);

}  // namespace pillowcase
