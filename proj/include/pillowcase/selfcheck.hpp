#pragma once

// Exhaustive structural checks shared by the command-line selftest and
// the test suite.  Everything here is small enough to brute-force.

#include <vector>

#include "pillowcase/bar.hpp"
#include "pillowcase/modules.hpp"

namespace pillowcase {

// Algebra-level checks: associativity of the basis product over all
// 20^3 triples, endpoint consistency of the dual edges, the 56-path
// census, d^2 = 0 on every basis path of A', and the Leibniz rule over
// every composable path pair.
std::vector<CertifyCheck> checkAlgebra();

// Chains of one-sided arrows in d that emit on both sides must have an
// interleaved coefficient product of zero; this is what lets the
// pairing skip mixed chains and makes the triple product independent
// of bracketing.  Checked over every chain up to maxLen arrows.
std::vector<CertifyCheck> checkMixedChains(const DDStructure& d, int maxLen);

}  // namespace pillowcase
