#include "semabs/ratlin.hpp"

#include <utility>
#include <vector>

namespace semabs {

namespace {

// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(RatMat& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[r], m[p]);
    const Rat inv = Rat(1) / m[r][c];
    for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rat f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

int rat_rank(RatMat m) { return static_cast<int>(rref(m).size()); }

std::optional<RatVec> rat_solve(RatMat a, RatVec b) {
  const std::size_t rows = a.size();
  if (rows != b.size()) throw PreconditionError("rat_solve: size mismatch");
  const std::size_t cols = rows ? a[0].size() : 0;
  for (std::size_t i = 0; i < rows; ++i) a[i].push_back(b[i]);
  std::vector<std::size_t> pivots = rref(a);
  // A pivot in the appended column means 0 = 1 somewhere: inconsistent.
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  RatVec x(cols, Rat(0));
  for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = a[k][cols];
  return x;
}

std::optional<RatMat> rat_inverse(RatMat a) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw PreconditionError("rat_inverse: matrix not square");
    for (std::size_t j = 0; j < n; ++j) a[i].push_back(i == j ? Rat(1) : Rat(0));
  }
  if (n == 0) return RatMat{};
  // The augmented block keeps full row rank; A is invertible exactly when
  // every pivot stays inside the original columns.
  std::vector<std::size_t> pivots = rref(a);
  if (pivots.back() >= n) return std::nullopt;
  RatMat inv(n, RatVec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  return inv;
}

RatMat rat_nullspace(RatMat a) {
  if (a.empty()) return {};
  const std::size_t cols = a[0].size();
  std::vector<std::size_t> pivots = rref(a);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  RatMat basis;
  for (std::size_t c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    RatVec v(cols, Rat(0));
    v[c] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -a[k][c];
    basis.push_back(std::move(v));
  }
  return basis;
}

RatVec mat_vec(const RatMat& a, const RatVec& x) {
  RatVec y(a.size(), Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != x.size()) throw PreconditionError("mat_vec: size mismatch");
    for (std::size_t j = 0; j < x.size(); ++j) y[i] += a[i][j] * x[j];
  }
  return y;
}

RatMat mat_mul(const RatMat& a, const RatMat& b) {
  const std::size_t n = a.size();
  const std::size_t k = b.size();
  const std::size_t m = k ? b[0].size() : 0;
  RatMat c(n, RatVec(m, Rat(0)));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != k) throw PreconditionError("mat_mul: size mismatch");
    for (std::size_t t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][t] * b[t][j];
    }
  }
  return c;
}

}  // namespace semabs
