#pragma once

// Immersed-curve words in the pillowcase chart and their compilation
// into right modules.
//
// The chart has four domains.  Each one is a directed chain of arcs
// joined by chords of A, with a basepoint segment closing it up:
//   B1: i0 -eta1-> i1 -xi1-> i2 -rho2-> j2 -xi3-> j1 -eta3-> j0
//   B2: i0 -rho0-> j0
//   B3: i1 -eta2-> j1
//   B4: i2 -xi2-> j2
// Every arc borders B1 on one side and exactly one of B2, B3, B4 on the
// other.  A curve is recorded blind as an alternating word of domain
// visits and arc crossings, either cyclic (closed curve) or linear
// (tangle arc, starting and ending in a domain).
//
// Compilation places one generator per arc crossing and one basic
// action per domain visit flanked by two arcs: the connector between
// the arcs inside the domain that avoids the basepoint, read along the
// chain direction.  Composites of consecutive basic actions whose
// junction products are nonzero in A complete the action table.

#include <string>
#include <vector>

#include "pillowcase/algebra.hpp"
#include "pillowcase/modules.hpp"

namespace pillowcase {

enum class Domain : uint8_t { B1, B2, B3, B4 };

std::string_view name(Domain d);

struct CurveWord {
  bool cyclic = true;
  // token order D0 a0 D1 a1 ...; cyclic words have equal counts, linear
  // words one more domain than arcs.
  std::vector<Domain> domains;
  std::vector<Idem> arcs;
};

// Parses "cyclic:"/"linear:" plus the token word; '#' starts a comment.
// Checks alternation and that every arc actually separates its two
// neighbouring domains.  Throws std::runtime_error on malformed input.
CurveWord parseWord(const std::string& text);

std::string serializeWord(const CurveWord& w);

bool isNormalized(const CurveWord& w);

// Removes "a B a" backtracking patterns (a visit entered and left
// through the same arc) until none remain.  A cyclic word that reduces
// to nothing is null-homotopic and rejected.
CurveWord normalize(CurveWord w);

// Requires a normalized word; generators are named g0, g1, ... in word
// order.
RightModule compileCurve(const CurveWord& w);

}  // namespace pillowcase
