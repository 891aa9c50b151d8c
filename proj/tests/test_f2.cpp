#include <doctest.h>

#include <random>
#include <stdexcept>

#include "pillowcase/f2.hpp"

using namespace pillowcase;

namespace {

// Independent rank oracle: rank = cols - dim ker, with the kernel counted
// by brute force over all 2^cols vectors.  Keeps cols small.
int rankByKernel(const F2Matrix& m) {
  int kernel = 0;
  for (uint32_t x = 0; x < (1u << m.cols()); ++x) {
    bool inKernel = true;
    for (int r = 0; r < m.rows() && inKernel; ++r) {
      bool bit = false;
      for (int c = 0; c < m.cols(); ++c)
        if ((x >> c) & 1) bit ^= m.get(r, c);
      inKernel = !bit;
    }
    if (inKernel) ++kernel;
  }
  // the kernel count is a power of two; recover its exponent
  int dimKer = 0;
  while ((1 << dimKer) != kernel) ++dimKer;
  return m.cols() - dimKer;
}

F2Matrix randomMatrix(std::mt19937_64& rng, int rows, int cols) {
  F2Matrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      if (rng() & 1) m.set(r, c, true);
  return m;
}

}  // namespace

TEST_CASE("rank matches the brute-force kernel count") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    int rows = 1 + static_cast<int>(rng() % 9);
    int cols = 1 + static_cast<int>(rng() % 10);
    F2Matrix m = randomMatrix(rng, rows, cols);
    CAPTURE(rows);
    CAPTURE(cols);
    CHECK(m.rank() == rankByKernel(m));
  }
}

TEST_CASE("rank handles degenerate shapes") {
  CHECK(F2Matrix(0, 0).rank() == 0);
  CHECK(F2Matrix(5, 3).rank() == 0);  // all zero
  F2Matrix id(4, 4);
  for (int k = 0; k < 4; ++k) id.set(k, k, true);
  CHECK(id.rank() == 4);
  CHECK((id * id) == id);
}

TEST_CASE("rank is invariant under wide rows crossing word boundaries") {
  // 70 columns forces two 64-bit words per row
  F2Matrix m(3, 70);
  m.set(0, 0, true);
  m.set(0, 69, true);
  m.set(1, 69, true);
  m.set(2, 0, true);  // row0 = row1 + row2
  CHECK(m.rank() == 2);
}

TEST_CASE("matrix product is the F2 product") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    int a = 1 + static_cast<int>(rng() % 6);
    int b = 1 + static_cast<int>(rng() % 6);
    int c = 1 + static_cast<int>(rng() % 6);
    F2Matrix x = randomMatrix(rng, a, b);
    F2Matrix y = randomMatrix(rng, b, c);
    F2Matrix p = x * y;
    for (int r = 0; r < a; ++r)
      for (int s = 0; s < c; ++s) {
        bool expect = false;
        for (int k = 0; k < b; ++k) expect ^= x.get(r, k) && y.get(k, s);
        CHECK(p.get(r, s) == expect);
      }
  }
}

TEST_CASE("homologyRank subtracts twice the rank") {
  // d on a 4-dim space with d(e0)=e1, d(e2)=e3: homology is 0
  F2Matrix d(4, 4);
  d.set(1, 0, true);
  d.set(3, 2, true);
  CHECK(homologyRank(d) == 0);

  // one surviving class
  F2Matrix e(3, 3);
  e.set(1, 0, true);
  CHECK(homologyRank(e) == 1);

  CHECK(homologyRank(F2Matrix(6, 6)) == 6);
}

TEST_CASE("homologyRank rejects malformed differentials") {
  CHECK_THROWS_AS(homologyRank(F2Matrix(2, 3)), std::invalid_argument);

  F2Matrix notSquareZero(2, 2);
  notSquareZero.set(0, 1, true);
  notSquareZero.set(1, 0, true);  // d*d = identity
  CHECK_THROWS_AS(homologyRank(notSquareZero), std::invalid_argument);
}
