#pragma once

// A-infinity modules over the pillowcase algebra and type DD structures
// over (A', A), everything F2-linear.
//
// A right module is a generator list (name + idempotent) and a set of
// higher actions m(x; a1,...,ak) = y recorded as (src, inputs, tgt).
// An empty input list encodes an m1 arrow.  Actions are stored as a set
// with toggle semantics, i.e. coefficients live in F2.  Since A is
// associative with zero differential, the A-infinity relation on an
// input sequence (a1,...,an) reduces to
//
//   m1-terms + sum_j m(m(x; a1..aj); a(j+1)..an)
//            + sum_i m(x; a1, ..., ai*ai+1, ..., an)  =  0.
//
// A type DD structure is a generator list with an idempotent pair each
// and a set of arrows src -> (left ; right) -> tgt whose coefficients
// are single basis elements of A; an idempotent coefficient plays the
// role of the identity.  Arrow coefficients must satisfy
//   leftIdem(src)  == leftIdem(left)    rightIdem(left)  == leftIdem(tgt)
//   rightIdem(tgt) == leftIdem(right)   rightIdem(right) == rightIdem(src).

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pillowcase/algebra.hpp"

namespace pillowcase {

struct Action {
  int src = 0;
  std::vector<Basis> inputs;  // non-idempotent basis elements; empty = m1 arrow
  int tgt = 0;
  auto operator<=>(const Action&) const = default;
};

struct ModuleBase {
  std::vector<std::string> genNames;
  std::vector<Idem> genIdems;
  std::set<Action> actions;

  int genCount() const { return static_cast<int>(genNames.size()); }
  int addGenerator(std::string name, Idem idem);
  // F2 toggle; returns true when the action is now present.
  bool toggleAction(Action a);
  std::optional<int> findGenerator(std::string_view name) const;
};

// Right module: m(x; a1,...,ak), inputs consumed left to right.
struct RightModule : ModuleBase {};

// Left module: m(a1,...,ak; y), produced by dualizing a right module.
struct LeftModule : ModuleBase {};

// Reverse every action: x -> (a1..ak) -> y becomes (a1..ak): y* -> x*.
// Generators keep their idempotents; applying the construction twice
// gives back the original module.
LeftModule dualize(const RightModule& m);
RightModule dualize(const LeftModule& m);

RightModule directSum(const std::vector<RightModule>& parts);

struct ValidationIssue {
  std::string where;   // generator or action in text form
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationIssue> structural;  // idempotent-inconsistent actions
  std::vector<ValidationIssue> relation;    // failing A-infinity instances
  bool ok() const { return structural.empty() && relation.empty(); }
};

// Checks every idempotent-composable input sequence of length <= maxArity
// against the relation above, plus idempotent consistency of the action
// table itself.  maxArity should be at least the longest action plus one;
// sequences longer than the longest composable chord chain contribute
// nothing, so large values cost nothing.
ValidationReport validateAinfty(const RightModule& m, int maxArity);

// Generator bijection matching idempotents and the action set exactly;
// nullopt when none exists.
std::optional<std::vector<int>> isoModules(const RightModule& a, const RightModule& b);

struct DDArrow {
  int src = 0;
  Basis left = Basis::I0;
  int tgt = 0;
  Basis right = Basis::I0;
  auto operator<=>(const DDArrow&) const = default;
};

struct DDStructure {
  std::vector<std::string> genNames;
  std::vector<std::pair<Idem, Idem>> genIdems;
  std::set<DDArrow> arrows;

  int genCount() const { return static_cast<int>(genNames.size()); }
  int addGenerator(std::string name, Idem left, Idem right);
  bool toggleArrow(DDArrow a);
  std::optional<int> findGenerator(std::string_view name) const;
  bool identityArrow(const DDArrow& a) const;
};

// Structural check (coefficient idempotents) plus the DD relation: for
// every ordered pair of composable arrows b -> (l1; r1) -> b' and
// b' -> (l2; r2) -> b'', the triples (l1*l2, b'', r2*r1) must cancel in
// pairs over F2.
ValidationReport validateDD(const DDStructure& d);

// Cancel the identity-identity arrow x -> y: both generators disappear
// and every pair a -> (l1; r1) -> y, x -> (l2; r2) -> z with a, z
// outside {x, y} contributes a rerouted arrow a -> (l1*l2; r2*r1) -> z.
// Throws unless the named arrow is present with identity coefficients.
DDStructure cancelDD(const DDStructure& d, int x, int y);

// Repeated cancellation until no identity-identity arrow remains.  The
// default picks the first cancellable arrow in canonical order; the
// seeded overload picks uniformly at random, for order-independence
// checks.
DDStructure reduceDD(const DDStructure& d);
DDStructure reduceDD(const DDStructure& d, uint64_t seed);

// Generator bijection matching idempotent pairs and the arrow set.
std::optional<std::vector<int>> isoDD(const DDStructure& a, const DDStructure& b);

std::string actionToString(const ModuleBase& m, const Action& a);
std::string arrowToString(const DDStructure& d, const DDArrow& a);

}  // namespace pillowcase
