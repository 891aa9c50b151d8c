#pragma once

// The pillowcase arc algebra A and its Koszul-dual path algebra A'.
//
// A is the F2 path algebra of a quiver Gamma on six vertices
//   i0, i1, i2, j0, j1, j2
// with single chords
//   rho0: i0->j0   rho2: i2->j2
//   xi1:  i1->i2   xi2:  i2->j2   xi3: j2->j1
//   eta1: i0->i1   eta2: i1->j1   eta3: j1->j0
// and composites formed by concatenating consecutive chords of the same
// letter family (xi12, xi23, xi123, eta12, eta23, eta123).  Products of
// chords from different families vanish, as do non-consecutive
// concatenations; rho0 and rho2 compose only with idempotents.  The
// differential on A is zero.
//
// A' is the path algebra of the reversed quiver Gamma'.  Its fourteen
// edges invert the chords of A (xi32' reverses xi23 and so on); every
// directed path in Gamma', including the six constant paths, is a basis
// element, 56 in total.  A' carries a differential which expands each
// composite edge into its two-edge factorizations and extends by the
// Leibniz rule.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pillowcase {

enum class Idem : uint8_t { I0, I1, I2, J0, J1, J2 };
inline constexpr int kIdemCount = 6;

std::string_view name(Idem v);
std::optional<Idem> idemFromName(std::string_view s);

// Basis of A: six idempotents followed by the fourteen chords.
enum class Basis : uint8_t {
  I0, I1, I2, J0, J1, J2,
  Rho0, Rho2,
  Xi1, Xi2, Xi3, Xi12, Xi23, Xi123,
  Eta1, Eta2, Eta3, Eta12, Eta23, Eta123,
};
inline constexpr int kBasisCount = 20;

bool isIdempotent(Basis b);
Basis idemBasis(Idem v);        // the idempotent at vertex v
Idem leftIdem(Basis b);         // start vertex (equals b itself for idempotents)
Idem rightIdem(Basis b);        // end vertex
std::string_view name(Basis b);
std::optional<Basis> basisFromName(std::string_view s);

// Product of two basis elements; nullopt encodes zero.  Idempotents act
// as local units, chord words multiply by concatenation when the result
// is again a basis chord.
std::optional<Basis> mulBasis(Basis a, Basis b);

// F2-linear combination of basis elements, stored as a 20-bit mask.
class AlgebraElement {
 public:
  AlgebraElement() = default;
  explicit AlgebraElement(Basis b) { toggle(b); }

  static AlgebraElement zero() { return {}; }

  bool isZero() const { return bits_ == 0; }
  bool contains(Basis b) const { return bits_ >> static_cast<int>(b) & 1u; }
  void toggle(Basis b) { bits_ ^= 1u << static_cast<int>(b); }
  std::vector<Basis> support() const;

  friend AlgebraElement operator+(AlgebraElement a, AlgebraElement b) {
    a.bits_ ^= b.bits_;
    return a;
  }
  friend AlgebraElement operator*(AlgebraElement a, AlgebraElement b);
  friend bool operator==(AlgebraElement a, AlgebraElement b) { return a.bits_ == b.bits_; }

 private:
  uint32_t bits_ = 0;
};

std::string toString(const AlgebraElement& x);  // "0", "xi12", "xi1+eta2", ...

// Edges of the reversed quiver Gamma'.
enum class DualEdge : uint8_t {
  Rho0p, Rho2p,
  Xi1p, Xi2p, Xi3p, Xi21p, Xi32p, Xi321p,
  Eta1p, Eta2p, Eta3p, Eta21p, Eta32p, Eta321p,
};
inline constexpr int kDualEdgeCount = 14;

Idem edgeSource(DualEdge e);
Idem edgeTarget(DualEdge e);
Basis reverseEdge(DualEdge e);  // the chord of A that e inverts
std::string_view name(DualEdge e);                    // "xi32'"
std::optional<DualEdge> edgeFromName(std::string_view s);  // accepts "xi32'" and "-xi32"

// A directed path in Gamma'; the empty edge list is the constant path at
// its start vertex.  Paths are the basis of A'.
class DualPath {
 public:
  explicit DualPath(Idem at) : start_(at) {}
  DualPath(Idem start, std::vector<DualEdge> edges);

  Idem source() const { return start_; }
  Idem target() const;
  bool constant() const { return edges_.empty(); }
  int length() const { return static_cast<int>(edges_.size()); }
  const std::vector<DualEdge>& edges() const { return edges_; }

  friend bool operator==(const DualPath& a, const DualPath& b) {
    return a.start_ == b.start_ && a.edges_ == b.edges_;
  }
  friend bool operator<(const DualPath& a, const DualPath& b);

 private:
  Idem start_;
  std::vector<DualEdge> edges_;
};

// Concatenation ab (a then b); nullopt when the endpoints do not match.
std::optional<DualPath> mulDual(const DualPath& a, const DualPath& b);

// Differential of a basis path: expand one edge at a time by
//   d(xi21') = xi2'xi1'      d(xi32') = xi3'xi2'
//   d(xi321') = xi32'xi1' + xi3'xi21'
// (eta alike), extended by Leibniz.  Terms cancel in pairs over F2; the
// result is the surviving set in canonical order.
std::vector<DualPath> diffDual(const DualPath& p);

// All 56 directed paths of Gamma' in canonical order.
const std::vector<DualPath>& allDualPaths();

}  // namespace pillowcase
