#pragma once

// Triple pairing of a right module, a DD structure and a left module
// into a finite F2 chain complex.
//
// Generators are the idempotent-matched triples m (x) b (x) n with
//   idem(m) = leftIdem(b)  and  rightIdem(b) = idem(n).
// The boundary toggles one arrow per matched term:
//
//   - for every chain b -> b1 -> ... -> bk of DD arrows that emit only
//     on the left (coefficients g1..gk, identity on the right) and
//     every module action m -> (g1..gk) -> m', the arrow
//     m(x)b(x)n -> m'(x)bk(x)n;
//   - symmetrically for right-emitting chains, with the left module
//     consuming the emissions in reversed order (gk..g1), moving n;
//   - module differentials (empty chains) move m or n alone;
//   - identity-identity DD arrows move b alone.
//
// Chains emitting on both sides contribute nothing: the interleaved
// coefficient product already vanishes in A (checked exhaustively by
// the test suite), which is also why the result does not depend on how
// the triple product is bracketed.  Chain length is bounded by the
// longest module action, so the enumeration is exhaustive.

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pillowcase/f2.hpp"
#include "pillowcase/modules.hpp"

namespace pillowcase {

struct PairingComplex {
  std::vector<std::string> genNames;           // "<m>|<b>|<n>"
  std::set<std::pair<int, int>> arrows;        // src -> tgt, coefficients in F2

  int genCount() const { return static_cast<int>(genNames.size()); }
  bool toggleArrow(int src, int tgt);

  F2Matrix boundary() const;  // column g = the boundary of generator g
  int homology() const;       // throws if the boundary does not square to zero
};

PairingComplex buildPairing(const RightModule& m, const DDStructure& dd, const LeftModule& n);

// Pairing against the builtin reduced bar structure.
PairingComplex buildPairing(const RightModule& m, const LeftModule& n);

// Homology rank of buildPairing(m1, dualize(m0)).
int pairRank(const RightModule& m1, const RightModule& m0);
int pairRank(const RightModule& m1, const DDStructure& dd, const RightModule& m0);

// The rank, minus two when the caller knows the two underlying curves
// are periodically homotopic; a negative result means the flag was
// wrong and throws.
int intersectionNumber(const RightModule& m1, const RightModule& m0, bool periodic);

}  // namespace pillowcase
