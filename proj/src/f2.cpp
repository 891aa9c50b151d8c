#include "pillowcase/f2.hpp"

#include <stdexcept>

namespace pillowcase {

F2Matrix::F2Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("F2Matrix: negative dimension");
  words_.assign(static_cast<size_t>(rows) * wordsPerRow(), 0);
}

bool F2Matrix::get(int r, int c) const {
  return row(r)[c >> 6] >> (c & 63) & 1u;
}

void F2Matrix::set(int r, int c, bool value) {
  uint64_t mask = uint64_t{1} << (c & 63);
  if (value)
    row(r)[c >> 6] |= mask;
  else
    row(r)[c >> 6] &= ~mask;
}

void F2Matrix::toggle(int r, int c) { row(r)[c >> 6] ^= uint64_t{1} << (c & 63); }

F2Matrix F2Matrix::operator*(const F2Matrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("F2Matrix: size mismatch in product");
  F2Matrix out(rows_, other.cols_);
  int words = out.wordsPerRow();
  for (int r = 0; r < rows_; ++r) {
    uint64_t* dst = out.row(r);
    for (int c = 0; c < cols_; ++c) {
      if (!get(r, c)) continue;
      const uint64_t* src = other.row(c);
      for (int w = 0; w < words; ++w) dst[w] ^= src[w];
    }
  }
  return out;
}

bool F2Matrix::isZero() const {
  for (uint64_t w : words_)
    if (w) return false;
  return true;
}

int F2Matrix::rank() const {
  F2Matrix scratch = *this;
  int words = wordsPerRow();
  int rank = 0;
  for (int c = 0; c < cols_ && rank < rows_; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows_; ++r) {
      if (scratch.get(r, c)) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int w = 0; w < words; ++w) std::swap(scratch.row(pivot)[w], scratch.row(rank)[w]);
    for (int r = 0; r < rows_; ++r) {
      if (r != rank && scratch.get(r, c)) {
        const uint64_t* src = scratch.row(rank);
        uint64_t* dst = scratch.row(r);
        for (int w = 0; w < words; ++w) dst[w] ^= src[w];
      }
    }
    ++rank;
  }
  return rank;
}

int homologyRank(const F2Matrix& d) {
  if (d.rows() != d.cols()) throw std::invalid_argument("homologyRank: differential must be square");
  if (!(d * d).isZero()) throw std::invalid_argument("homologyRank: d*d != 0, malformed complex");
  return d.rows() - 2 * d.rank();
}

}  // namespace pillowcase
