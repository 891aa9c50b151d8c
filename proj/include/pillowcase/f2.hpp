#pragma once

// Dense bit-packed matrices over F2.  Sizes stay in the hundreds, so a
// flat word array with Gaussian elimination is all that is needed.

#include <cstdint>
#include <vector>

namespace pillowcase {

class F2Matrix {
 public:
  F2Matrix() = default;
  F2Matrix(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  bool get(int r, int c) const;
  void set(int r, int c, bool value);
  void toggle(int r, int c);

  F2Matrix operator*(const F2Matrix& other) const;
  bool operator==(const F2Matrix& other) const = default;

  bool isZero() const;

  // Rank by row reduction on a scratch copy.
  int rank() const;

 private:
  int wordsPerRow() const { return (cols_ + 63) / 64; }
  uint64_t* row(int r) { return words_.data() + static_cast<size_t>(r) * wordsPerRow(); }
  const uint64_t* row(int r) const { return words_.data() + static_cast<size_t>(r) * wordsPerRow(); }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<uint64_t> words_;
};

// Dimension of ker(d)/im(d) for a square differential with d*d = 0,
// i.e. dim - 2*rank(d).  Throws std::invalid_argument when d is not
// square or d*d != 0; a nonzero square signals a malformed complex
// upstream and must not be papered over.
int homologyRank(const F2Matrix& d);

}  // namespace pillowcase
