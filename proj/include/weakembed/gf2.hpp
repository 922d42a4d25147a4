#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace we {

using BitVec = std::vector<std::uint8_t>;  // one 0/1 entry per coordinate

// Dense matrix over GF(2), row-major, 64 columns per word.  Bits past `cols`
// in the last word of a row are always zero.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(int rows, int cols);
  static BitMatrix identity(int n);
  static BitMatrix from_rows(const std::vector<BitVec>& rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int words() const { return words_; }
  bool get(int r, int c) const;
  void set(int r, int c, bool bit);
  void flip(int r, int c);
  std::uint64_t* row(int r) { return bits_.data() + static_cast<size_t>(r) * words_; }
  const std::uint64_t* row(int r) const { return bits_.data() + static_cast<size_t>(r) * words_; }
  void xor_row(int dst, int src);
  void swap_rows(int a, int b);
  BitMatrix transpose() const;
  BitVec multiply(const BitVec& x) const;
  bool trailing_bits_clear() const;

 private:
  int rows_ = 0, cols_ = 0, words_ = 0;
  std::vector<std::uint64_t> bits_;
};

struct AffineSolution {
  bool feasible = false;
  BitVec x;                  // a solution when feasible
  std::vector<int> witness;  // rows whose sum reads 0 = 1 when infeasible
};

// Solves A x = b by elimination with first-nonzero pivoting in column order.
// Free variables are set to zero, so the answer is reproducible.
AffineSolution solve_affine_certified(const BitMatrix& a, const BitVec& b);
std::optional<BitVec> solve_affine(const BitMatrix& a, const BitVec& b);
int rank(const BitMatrix& a);

}  // namespace we
