#include "ngit/convexity.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace ngit {

namespace {

using Matrix = std::vector<std::vector<Rational>>;

std::size_t check_dimension(const std::vector<Point>& pts) {
  if (pts.empty()) throw std::invalid_argument("convexity: empty point set");
  std::size_t r = pts[0].size();
  if (r == 0) throw std::invalid_argument("convexity: zero-dimensional points");
  for (const Point& p : pts)
    if (p.size() != r) throw std::invalid_argument("convexity: mixed point dimensions");
  return r;
}

// Reduces m in place to row echelon form; returns the pivot column of each
// pivot row, in order.
std::vector<std::size_t> row_echelon(Matrix& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  std::size_t cols = m[0].size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col].is_zero()) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    Rational inv = m[row][col].inverse();
    for (std::size_t c = col; c < cols; ++c) m[row][c] *= inv;
    for (std::size_t rr = 0; rr < m.size(); ++rr) {
      if (rr == row || m[rr][col].is_zero()) continue;
      Rational f = m[rr][col];
      for (std::size_t c = col; c < cols; ++c) m[rr][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

// Solves M x = rhs when the columns of M are linearly independent. Returns
// the unique solution, or nothing when the system is inconsistent or the
// columns are dependent.
std::optional<std::vector<Rational>> solve_unique(const Matrix& m, const std::vector<Rational>& rhs) {
  std::size_t rows = m.size();
  std::size_t cols = rows == 0 ? 0 : m[0].size();
  Matrix aug(rows, std::vector<Rational>(cols + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) aug[i][j] = m[i][j];
    aug[i][cols] = rhs[i];
  }
  std::vector<std::size_t> pivots = row_echelon(aug);
  for (std::size_t p : pivots)
    if (p == cols) return std::nullopt;  // row (0 ... 0 | 1): inconsistent
  if (pivots.size() != cols) return std::nullopt;
  std::vector<Rational> x(cols);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug[i][cols];
  return x;
}

std::size_t span_rank(const std::vector<Point>& pts) {
  Matrix m;
  for (const Point& p : pts) m.push_back(p);
  return row_echelon(m).size();
}

// One nonzero vector orthogonal to every row of m, or nothing when the rows
// span the full space.
std::optional<std::vector<Rational>> orthogonal_vector(Matrix m, std::size_t dim) {
  std::vector<std::size_t> pivots = row_echelon(m);
  if (pivots.size() == dim) return std::nullopt;
  std::vector<char> is_pivot(dim, 0);
  for (std::size_t p : pivots) is_pivot[p] = 1;
  std::size_t free_col = 0;
  while (is_pivot[free_col]) ++free_col;
  std::vector<Rational> v(dim);
  v[free_col] = Rational(1);
  for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][free_col];
  return v;
}

bool nonnegative_on_all(const std::vector<Rational>& phi, const std::vector<Point>& pts) {
  for (const Point& p : pts) {
    Rational dot;
    for (std::size_t i = 0; i < phi.size(); ++i) dot += phi[i] * p[i];
    if (dot.sign() < 0) return false;
  }
  return true;
}

// Enumerates size-k index subsets of {0, ..., n-1}.
template <typename Visit>
bool for_each_subset(std::size_t n, std::size_t k, Visit visit) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return false;
  while (true) {
    if (visit(idx)) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

bool zero_in_convex_hull(const std::vector<Point>& pts) {
  std::size_t r = check_dimension(pts);
  std::size_t cap = std::min(pts.size(), r + 1);
  for (std::size_t k = 1; k <= cap; ++k) {
    bool found = for_each_subset(pts.size(), k, [&](const std::vector<std::size_t>& idx) {
      // Columns (p_i, 1); solving against (0, ..., 0, 1) enforces a convex
      // combination summing to one.
      Matrix m(r + 1, std::vector<Rational>(k));
      for (std::size_t j = 0; j < k; ++j) {
        for (std::size_t i = 0; i < r; ++i) m[i][j] = pts[idx[j]][i];
        m[r][j] = Rational(1);
      }
      std::vector<Rational> rhs(r + 1);
      rhs[r] = Rational(1);
      std::optional<std::vector<Rational>> lambda = solve_unique(m, rhs);
      if (!lambda) return false;
      for (const Rational& l : *lambda)
        if (l.sign() < 0) return false;
      return true;
    });
    if (found) return true;
  }
  return false;
}

bool zero_in_interior(const std::vector<Point>& pts) {
  std::size_t r = check_dimension(pts);
  {
    Matrix m;
    for (const Point& p : pts) m.push_back(p);
    if (orthogonal_vector(std::move(m), r))
      return false;  // points span a proper subspace; the normal is a witness
  }
  bool separated = for_each_subset(pts.size(), r - 1, [&](const std::vector<std::size_t>& idx) {
    Matrix m;
    for (std::size_t j : idx) m.push_back(pts[j]);
    std::size_t rank = span_rank(m);
    if (rank != r - 1) return false;
    std::optional<std::vector<Rational>> phi = orthogonal_vector(std::move(m), r);
    if (!phi) return false;
    if (nonnegative_on_all(*phi, pts)) return true;
    for (Rational& c : *phi) c = -c;
    return nonnegative_on_all(*phi, pts);
  });
  return !separated;
}

}  // namespace ngit
