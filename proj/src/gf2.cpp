#include "weakembed/gf2.hpp"

#include <bit>
#include <utility>

#include "weakembed/errors.hpp"

namespace we {

BitMatrix::BitMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64),
      bits_(static_cast<size_t>(rows) * ((cols + 63) / 64), 0) {}

BitMatrix BitMatrix::identity(int n) {
  BitMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

BitMatrix BitMatrix::from_rows(const std::vector<BitVec>& rows, int cols) {
  BitMatrix m(static_cast<int>(rows.size()), cols);
  for (int r = 0; r < m.rows(); ++r) {
    if (static_cast<int>(rows[r].size()) != cols)
      throw Error(Errc::DimensionMismatch, "row length differs from column count");
    for (int c = 0; c < cols; ++c)
      if (rows[r][c]) m.set(r, c, true);
  }
  return m;
}

bool BitMatrix::get(int r, int c) const { return (row(r)[c >> 6] >> (c & 63)) & 1u; }

void BitMatrix::set(int r, int c, bool bit) {
  std::uint64_t mask = std::uint64_t{1} << (c & 63);
  if (bit) row(r)[c >> 6] |= mask;
  else row(r)[c >> 6] &= ~mask;
}

void BitMatrix::flip(int r, int c) { row(r)[c >> 6] ^= std::uint64_t{1} << (c & 63); }

void BitMatrix::xor_row(int dst, int src) {
  std::uint64_t* d = row(dst);
  const std::uint64_t* s = row(src);
  for (int w = 0; w < words_; ++w) d[w] ^= s[w];
}

void BitMatrix::swap_rows(int a, int b) {
  if (a == b) return;
  std::uint64_t *x = row(a), *y = row(b);
  for (int w = 0; w < words_; ++w) std::swap(x[w], y[w]);
}

BitMatrix BitMatrix::transpose() const {
  BitMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c)
      if (get(r, c)) t.set(c, r, true);
  return t;
}

BitVec BitMatrix::multiply(const BitVec& x) const {
  if (static_cast<int>(x.size()) != cols_)
    throw Error(Errc::DimensionMismatch, "vector length differs from column count");
  std::vector<std::uint64_t> packed(words_, 0);
  for (int c = 0; c < cols_; ++c)
    if (x[c]) packed[c >> 6] |= std::uint64_t{1} << (c & 63);
  BitVec out(rows_, 0);
  for (int r = 0; r < rows_; ++r) {
    std::uint64_t acc = 0;
    const std::uint64_t* p = row(r);
    for (int w = 0; w < words_; ++w) acc ^= p[w] & packed[w];
    out[r] = std::popcount(acc) & 1;
  }
  return out;
}

bool BitMatrix::trailing_bits_clear() const {
  if (cols_ % 64 == 0) return true;
  std::uint64_t mask = ~((std::uint64_t{1} << (cols_ % 64)) - 1);
  for (int r = 0; r < rows_; ++r)
    if (row(r)[words_ - 1] & mask) return false;
  return true;
}

AffineSolution solve_affine_certified(const BitMatrix& a, const BitVec& b) {
  const int m = a.rows(), n = a.cols();
  if (static_cast<int>(b.size()) != m)
    throw Error(Errc::DimensionMismatch, "right-hand side length differs from row count");
  // augmented [A | b] with a row-history block to recover certificates
  BitMatrix aug(m, n + 1 + m);
  for (int r = 0; r < m; ++r) {
    for (int w = 0; w < a.words(); ++w) aug.row(r)[w] = a.row(r)[w];
    if (b[r]) aug.set(r, n, true);
    aug.set(r, n + 1 + r, true);
  }
  std::vector<int> pivot_col;
  int rank_so_far = 0;
  for (int c = 0; c < n && rank_so_far < m; ++c) {
    int p = -1;
    for (int r = rank_so_far; r < m; ++r)
      if (aug.get(r, c)) {
        p = r;
        break;
      }
    if (p < 0) continue;
    aug.swap_rows(p, rank_so_far);
    for (int r = 0; r < m; ++r)
      if (r != rank_so_far && aug.get(r, c)) aug.xor_row(r, rank_so_far);
    pivot_col.push_back(c);
    ++rank_so_far;
  }
  AffineSolution sol;
  for (int r = rank_so_far; r < m; ++r)
    if (aug.get(r, n)) {
      for (int k = 0; k < m; ++k)
        if (aug.get(r, n + 1 + k)) sol.witness.push_back(k);
      return sol;
    }
  sol.feasible = true;
  sol.x.assign(n, 0);
  for (int r = 0; r < rank_so_far; ++r) sol.x[pivot_col[r]] = aug.get(r, n);
  return sol;
}

std::optional<BitVec> solve_affine(const BitMatrix& a, const BitVec& b) {
  auto s = solve_affine_certified(a, b);
  if (!s.feasible) return std::nullopt;
  return s.x;
}

int rank(const BitMatrix& a) {
  BitMatrix m = a;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int p = -1;
    for (int i = r; i < m.rows(); ++i)
      if (m.get(i, c)) {
        p = i;
        break;
      }
    if (p < 0) continue;
    m.swap_rows(p, r);
    for (int i = r + 1; i < m.rows(); ++i)
      if (m.get(i, c)) m.xor_row(i, r);
    ++r;
  }
  return r;
}

}  // namespace we
