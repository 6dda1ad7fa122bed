#include "semabs/latgeo.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <utility>

#include "semabs/ratlin.hpp"

namespace semabs {

namespace {

// Floor division and the matching remainder (entries above HNF pivots are
// reduced into [0, pivot), so rounding must go toward minus infinity).
Int floor_div(const Int& a, const Int& b) {
  Int q = a / b, r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

void row_axpy(IntVec& target, const Int& c, const IntVec& source) {
  for (std::size_t j = 0; j < target.size(); ++j) target[j] += c * source[j];
}

// Integer row elimination over the column range [0, limit): brings the rows
// with a nonzero entry in those columns into echelon position and leaves
// every fully reduced row (zero throughout the range) at the bottom.
// Returns the number of echelon rows.
std::size_t echelonize(IntMat& m, std::size_t limit) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < limit && r < m.size(); ++c) {
    // Euclid on the column entries below r until one nonzero entry remains.
    while (true) {
      std::size_t best = m.size();
      for (std::size_t i = r; i < m.size(); ++i) {
        if (m[i][c] == 0) continue;
        if (best == m.size() || abs(m[i][c]) < abs(m[best][c])) best = i;
      }
      if (best == m.size()) break;  // column already clear
      std::swap(m[r], m[best]);
      bool cleared = true;
      for (std::size_t i = r + 1; i < m.size(); ++i) {
        if (m[i][c] == 0) continue;
        row_axpy(m[i], -floor_div(m[i][c], m[r][c]), m[r]);
        if (m[i][c] != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (m[r][c] == 0) continue;
    if (m[r][c] < 0)
      for (Int& x : m[r]) x = -x;
    ++r;
  }
  return r;
}

Rat to_rat(const Int& x) { return Rat(x); }

double to_double(const Rat& x) { return x.convert_to<double>(); }
double to_double(const Int& x) { return x.convert_to<double>(); }

// Scale a rational vector to a primitive integer vector with the same
// direction (positive multiple).
IntVec primitive_integer(const RatVec& v) {
  Int lcm_den = 1;
  for (const Rat& x : v) {
    Int d = denominator(x);
    lcm_den = lcm_den / gcd(lcm_den, d) * d;
  }
  IntVec w(v.size());
  Int g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    w[i] = numerator(v[i]) * (lcm_den / denominator(v[i]));
    g = gcd(g, w[i]);
  }
  if (g > 1)
    for (Int& x : w) x /= g;
  return w;
}

// Positive-rational power with integer (possibly negative) exponent.
Rat pow_rat_signed(const Rat& base, int exp) {
  if (exp >= 0) return pow_rat(base, static_cast<unsigned>(exp));
  return Rat(1) / pow_rat(base, static_cast<unsigned>(-exp));
}

// Product of mu over the positive part of kappa and over the negative part.
template <typename Value, typename Weight>
std::pair<Value, Value> side_products(const IntVec& kappa, const std::vector<Weight>& mu) {
  Value left(1), right(1);
  for (std::size_t s = 0; s < kappa.size(); ++s) {
    long long k = kappa[s].template convert_to<long long>();
    for (long long i = 0; i < k; ++i) left *= Value(mu[s]);
    for (long long i = 0; i < -k; ++i) right *= Value(mu[s]);
  }
  return {left, right};
}

std::vector<double> softmax(const std::vector<double>& v) {
  double shift = *std::max_element(v.begin(), v.end());
  std::vector<double> out(v.size());
  double total = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] = std::exp(v[i] - shift);
    total += out[i];
  }
  for (double& x : out) x /= total;
  return out;
}

// Small dense solver in doubles (partial pivoting); sizes are the chart
// dimension, so no more than a handful.
std::vector<double> solve_dense(std::vector<std::vector<double>> a, std::vector<double> b) {
  const std::size_t n = a.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    for (std::size_t i = c + 1; i < n; ++i)
      if (std::fabs(a[i][c]) > std::fabs(a[p][c])) p = i;
    if (a[p][c] == 0.0) throw NumericalError("singular system in dense solve", 0.0, 0);
    std::swap(a[c], a[p]);
    std::swap(b[c], b[p]);
    for (std::size_t i = c + 1; i < n; ++i) {
      double f = a[i][c] / a[c][c];
      if (f == 0.0) continue;
      for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
      b[i] -= f * b[c];
    }
  }
  std::vector<double> x(n, 0.0);
  for (std::size_t i = n; i-- > 0;) {
    double s = b[i];
    for (std::size_t j = i + 1; j < n; ++j) s -= a[i][j] * x[j];
    x[i] = s / a[i][i];
  }
  return x;
}

}  // namespace

// ---------------------------------------------------------------------------
// Integer lattices
// ---------------------------------------------------------------------------

IntMat hermite_normal_form(IntMat rows) {
  if (rows.empty()) return rows;
  const std::size_t cols = rows[0].size();
  for (const IntVec& r : rows)
    if (r.size() != cols) throw PreconditionError("ragged matrix in hermite_normal_form");
  std::size_t rank = echelonize(rows, cols);
  rows.resize(rank);
  // Reduce the entries above each pivot into [0, pivot).
  for (std::size_t i = 0; i < rank; ++i) {
    std::size_t c = 0;
    while (rows[i][c] == 0) ++c;
    for (std::size_t k = 0; k < i; ++k)
      row_axpy(rows[k], -floor_div(rows[k][c], rows[i][c]), rows[i]);
  }
  return rows;
}

IntegerLattice lattice_from_rows(IntMat rows) {
  return IntegerLattice{hermite_normal_form(std::move(rows))};
}

IntMat integer_kernel(const IntMat& rows, std::size_t n) {
  const std::size_t m = rows.size();
  for (const IntVec& r : rows)
    if (r.size() != n) throw PreconditionError("ragged matrix in integer_kernel");
  // Work on [M^T | I]: integer row operations keep each row of the shape
  // (M c, c); rows whose first block vanishes carry kernel vectors c, and
  // because the transform is invertible over the integers they span the
  // full (saturated) kernel lattice.
  IntMat combined(n, IntVec(m + n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) combined[i][j] = rows[j][i];
    combined[i][m + i] = 1;
  }
  std::size_t rank = echelonize(combined, m);
  IntMat kernel;
  for (std::size_t i = rank; i < n; ++i)
    kernel.emplace_back(combined[i].begin() + m, combined[i].end());
  return hermite_normal_form(std::move(kernel));
}

IntegerLattice difference_lattice(const Presentation& p) {
  Presentation q = normalize(p);
  IntMat rows;
  for (const RelationPair& rel : q.relations) rows.push_back(relation_difference(rel));
  return lattice_from_rows(std::move(rows));
}

IntegerLattice central_sublattice(const IntegerLattice& L) {
  if (L.basis.empty()) return L;
  const std::size_t r = L.basis.size();
  IntVec sums(r, 0);
  for (std::size_t i = 0; i < r; ++i)
    for (const Int& x : L.basis[i]) sums[i] += x;
  // Coefficient vectors c with c . sums = 0 give exactly the sum-zero part.
  IntMat coeffs = integer_kernel(IntMat{sums}, r);
  IntMat rows;
  for (const IntVec& c : coeffs) {
    IntVec row(L.basis[0].size(), 0);
    for (std::size_t i = 0; i < r; ++i) row_axpy(row, c[i], L.basis[i]);
    rows.push_back(std::move(row));
  }
  return lattice_from_rows(std::move(rows));
}

int absolute_dimension(const IntegerLattice& Lc, std::size_t s_size) {
  return static_cast<int>(s_size) - 1 - Lc.rank();
}

int group_of_fractions_rank(const IntegerLattice& L, std::size_t s_size) {
  return static_cast<int>(s_size) - L.rank();
}

// ---------------------------------------------------------------------------
// Points of the simplex
// ---------------------------------------------------------------------------

double DistributionPoint::value(std::size_t i) const {
  return is_exact() ? to_double(exact[i]) : approx[i];
}

const Rat& DistributionPoint::rational(std::size_t i) const {
  if (!is_exact()) throw PreconditionError("exact weights requested from a float point");
  return exact[i];
}

std::vector<double> DistributionPoint::to_doubles() const {
  if (!is_exact()) return approx;
  std::vector<double> out(exact.size());
  for (std::size_t i = 0; i < exact.size(); ++i) out[i] = to_double(exact[i]);
  return out;
}

DistributionPoint make_exact_distribution(RatVec w) {
  Rat total = 0;
  for (const Rat& x : w) {
    if (x < 0) throw PreconditionError("negative weight in distribution");
    total += x;
  }
  if (total != 1) throw PreconditionError("weights must sum to 1 exactly");
  DistributionPoint p;
  p.exact = std::move(w);
  return p;
}

DistributionPoint make_float_distribution(std::vector<double> w) {
  double total = 0;
  for (double x : w) {
    if (x < 0) throw PreconditionError("negative weight in distribution");
    total += x;
  }
  if (std::fabs(total - 1.0) > 1e-12)
    throw PreconditionError("weights must sum to 1 within 1e-12");
  DistributionPoint p;
  p.approx = std::move(w);
  return p;
}

DistributionPoint uniform_on(const std::vector<std::size_t>& support, std::size_t n) {
  if (support.empty()) throw PreconditionError("empty support");
  RatVec w(n, Rat(0));
  Rat share(1, static_cast<long>(support.size()));
  for (std::size_t s : support) {
    if (s >= n) throw PreconditionError("support index out of range");
    w[s] = share;
  }
  return make_exact_distribution(std::move(w));
}

// ---------------------------------------------------------------------------
// Interior chart
// ---------------------------------------------------------------------------

ChartBasis chart(const IntegerLattice& Lc, std::size_t s_size) {
  IntMat rows = Lc.basis;
  rows.emplace_back(s_size, Int(1));  // also quotient out the all-ones direction
  return ChartBasis{integer_kernel(rows, s_size)};
}

DistributionPoint exp_map(const ChartBasis& c, const std::vector<double>& w) {
  if (w.size() != c.complement_basis.size())
    throw PreconditionError("chart coordinate count mismatch");
  const std::size_t n = c.complement_basis.empty() ? 0 : c.complement_basis[0].size();
  if (n == 0) throw PreconditionError("chart of dimension 0 has no coordinates to map");
  std::vector<double> v(n, 0.0);
  for (std::size_t j = 0; j < w.size(); ++j)
    for (std::size_t s = 0; s < n; ++s) v[s] += to_double(c.complement_basis[j][s]) * w[j];
  return make_float_distribution(softmax(v));
}

std::vector<double> log_map(const ChartBasis& c, const DistributionPoint& mu) {
  const std::size_t d = c.complement_basis.size();
  const std::size_t n = mu.size();
  for (std::size_t s = 0; s < n; ++s)
    if (mu.value(s) <= 0.0)
      throw PreconditionError("log_map needs strictly positive weights");
  std::vector<double> logs(n);
  double mean = 0;
  for (std::size_t s = 0; s < n; ++s) {
    logs[s] = std::log(mu.value(s));
    mean += logs[s];
  }
  mean /= static_cast<double>(n);
  for (double& x : logs) x -= mean;
  // Solve (A A^T) w = A logs with the exact integer Gram matrix.
  RatMat gram(d, RatVec(d, Rat(0)));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Int dot = 0;
      for (std::size_t s = 0; s < n; ++s)
        dot += c.complement_basis[i][s] * c.complement_basis[j][s];
      gram[i][j] = to_rat(dot);
    }
  auto inv = rat_inverse(gram);
  if (!inv) throw PreconditionError("chart basis rows are linearly dependent");
  std::vector<double> rhs(d, 0.0);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t s = 0; s < n; ++s) rhs[i] += to_double(c.complement_basis[i][s]) * logs[s];
  std::vector<double> w(d, 0.0);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) w[i] += to_double((*inv)[i][j]) * rhs[j];
  return w;
}

// ---------------------------------------------------------------------------
// Projected polytope
// ---------------------------------------------------------------------------

namespace {

// All size-k index subsets of {0, ..., n-1}, in lexicographic order.
void for_each_subset(std::size_t n, std::size_t k,
                     const std::function<void(const std::vector<std::size_t>&)>& fn) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    fn(idx);
    std::size_t i = k;
    while (i-- > 0) {
      if (idx[i] + (k - i) < n) {
        ++idx[i];
        for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        break;
      }
      if (i == 0) return;
    }
  }
}

}  // namespace

ProjectedPolytope project_simplex(const IntegerLattice& Lc, std::size_t s_size) {
  ProjectedPolytope poly;
  poly.projection = chart(Lc, s_size).complement_basis;
  const std::size_t d = poly.projection.size();
  const std::size_t n = s_size;
  poly.vertex_images.assign(n, RatVec(d, Rat(0)));
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t j = 0; j < d; ++j) poly.vertex_images[s][j] = to_rat(poly.projection[j][s]);

  if (d == 0) {
    // The whole simplex collapses to one point; every generator attains it.
    for (std::size_t s = 0; s < n; ++s) poly.hull_vertices.push_back(s);
    return poly;
  }

  // Facets: every facet's hyperplane passes through d of the projected
  // points, so test the hyperplane of each affinely independent d-subset.
  std::set<std::pair<IntVec, Rat>> facet_set;
  for_each_subset(n, d, [&](const std::vector<std::size_t>& idx) {
    IntVec normal;
    if (d == 1) {
      normal = IntVec{1};
    } else {
      RatMat diffs(d - 1, RatVec(d));
      for (std::size_t i = 1; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
          diffs[i - 1][j] = poly.vertex_images[idx[i]][j] - poly.vertex_images[idx[0]][j];
      RatMat ns = rat_nullspace(diffs);
      if (ns.size() != 1) return;  // degenerate subset: no unique hyperplane
      normal = primitive_integer(ns[0]);
    }
    Rat offset = 0;
    for (std::size_t j = 0; j < d; ++j) offset += to_rat(normal[j]) * poly.vertex_images[idx[0]][j];
    bool all_below = true, all_above = true;
    for (std::size_t s = 0; s < n; ++s) {
      Rat dot = 0;
      for (std::size_t j = 0; j < d; ++j) dot += to_rat(normal[j]) * poly.vertex_images[s][j];
      if (dot > offset) all_below = false;
      if (dot < offset) all_above = false;
    }
    if (all_below) facet_set.insert({normal, offset});
    if (all_above) {
      for (Int& x : normal) x = -x;
      facet_set.insert({normal, -offset});
    }
  });
  for (const auto& [normal, offset] : facet_set) poly.facets.push_back({normal, offset});

  // Hull vertices: intersect each d-subset of facet hyperplanes; feasible
  // intersection points are the polytope's vertices.
  std::set<RatVec> vertex_points;
  for_each_subset(poly.facets.size(), d, [&](const std::vector<std::size_t>& idx) {
    RatMat a(d, RatVec(d));
    RatVec b(d);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) a[i][j] = to_rat(poly.facets[idx[i]].normal[j]);
      b[i] = poly.facets[idx[i]].offset;
    }
    if (rat_rank(a) != static_cast<int>(d)) return;
    auto x = rat_solve(std::move(a), std::move(b));
    if (!x) return;
    for (const FacetInequality& f : poly.facets) {
      Rat dot = 0;
      for (std::size_t j = 0; j < d; ++j) dot += to_rat(f.normal[j]) * (*x)[j];
      if (dot > f.offset) return;
    }
    vertex_points.insert(*x);
  });
  for (std::size_t s = 0; s < n; ++s)
    if (vertex_points.count(poly.vertex_images[s])) poly.hull_vertices.push_back(s);
  return poly;
}

RatVec project_point(const ProjectedPolytope& poly, const RatVec& mu) {
  const std::size_t d = poly.projection.size();
  RatVec y(d, Rat(0));
  for (std::size_t j = 0; j < d; ++j) {
    if (poly.projection[j].size() != mu.size())
      throw PreconditionError("projection size mismatch");
    for (std::size_t s = 0; s < mu.size(); ++s) y[j] += to_rat(poly.projection[j][s]) * mu[s];
  }
  return y;
}

std::vector<double> project_point(const ProjectedPolytope& poly,
                                  const std::vector<double>& mu) {
  const std::size_t d = poly.projection.size();
  std::vector<double> y(d, 0.0);
  for (std::size_t j = 0; j < d; ++j) {
    if (poly.projection[j].size() != mu.size())
      throw PreconditionError("projection size mismatch");
    for (std::size_t s = 0; s < mu.size(); ++s) y[j] += to_double(poly.projection[j][s]) * mu[s];
  }
  return y;
}

bool polytope_interior_contains(const ProjectedPolytope& poly, const RatVec& x) {
  if (x.size() != static_cast<std::size_t>(poly.dimension()))
    throw PreconditionError("point dimension mismatch");
  for (const FacetInequality& f : poly.facets) {
    Rat dot = 0;
    for (std::size_t j = 0; j < x.size(); ++j) dot += to_rat(f.normal[j]) * x[j];
    if (dot >= f.offset) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Solvers
// ---------------------------------------------------------------------------

DistributionPoint segment_root(const IntVec& kappa, const DistributionPoint& a,
                               const DistributionPoint& b) {
  const std::size_t n = kappa.size();
  if (a.size() != n || b.size() != n)
    throw PreconditionError("segment endpoints must match the weight vector size");
  std::vector<double> pa = a.to_doubles(), pb = b.to_doubles();
  auto at = [&](double t) {
    std::vector<double> mu(n);
    for (std::size_t s = 0; s < n; ++s) mu[s] = (1 - t) * pa[s] + t * pb[s];
    return mu;
  };
  auto gap = [&](double t) {
    auto [left, right] = side_products<double>(kappa, at(t));
    return left - right;
  };
  double g0 = gap(0.0), g1 = gap(1.0);
  if (g0 == 0.0 && g1 == 0.0)
    throw PreconditionError("identity degenerate at both segment endpoints");
  if (g0 < 0.0) {  // orient so the left side dominates at t = 0
    std::swap(pa, pb);
    std::swap(g0, g1);
  }
  if (g0 < 0.0 || g1 > 0.0)
    throw PreconditionError("the two sides do not separate at the segment endpoints");
  if (g0 == 0.0) return make_float_distribution(at(0.0));
  if (g1 == 0.0) return make_float_distribution(at(1.0));
  double lo = 0.0, hi = 1.0, mid = 0.5, residual = g0;
  for (int it = 0; it < 200 && std::fabs(residual) > 1e-12; ++it) {
    mid = (lo + hi) / 2;
    residual = gap(mid);
    (residual > 0 ? lo : hi) = mid;
  }
  if (std::fabs(residual) > 1e-12)
    throw NumericalError("segment bisection did not reach the residual target",
                         std::fabs(residual), 200);
  return make_float_distribution(at(mid));
}

DistributionPoint birch_lift(const ProjectedPolytope& poly, const IntegerLattice& Lc,
                             const RatVec& target, double tol,
                             std::size_t max_iterations) {
  const std::size_t d = poly.projection.size();
  const std::size_t n = poly.vertex_images.size();
  if (target.size() != d) throw PreconditionError("target dimension mismatch");
  if (d == 0) {
    std::vector<std::size_t> all(n);
    for (std::size_t s = 0; s < n; ++s) all[s] = s;
    return uniform_on(all, n);
  }
  if (!polytope_interior_contains(poly, target))
    throw PreconditionError("lift target must lie strictly inside the polytope");

  std::vector<double> y(d);
  for (std::size_t j = 0; j < d; ++j) y[j] = to_double(target[j]);
  std::vector<std::vector<double>> a(d, std::vector<double>(n));
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t s = 0; s < n; ++s) a[j][s] = to_double(poly.projection[j][s]);

  // Maximize entropy on the fiber: minimize h(w) = log sum_s e^{(A^T w)_s} - w.y
  // by damped Newton. h is smooth and convex with gradient A mu - y.
  std::vector<double> w(d, 0.0);
  auto mu_of = [&](const std::vector<double>& wv) {
    std::vector<double> v(n, 0.0);
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t s = 0; s < n; ++s) v[s] += a[j][s] * wv[j];
    return softmax(v);
  };
  auto objective = [&](const std::vector<double>& wv) {
    std::vector<double> v(n, 0.0);
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t s = 0; s < n; ++s) v[s] += a[j][s] * wv[j];
    double shift = *std::max_element(v.begin(), v.end());
    double total = 0;
    for (double x : v) total += std::exp(x - shift);
    double h = shift + std::log(total);
    for (std::size_t j = 0; j < d; ++j) h -= wv[j] * y[j];
    return h;
  };

  double residual = 0;
  std::size_t it = 0;
  for (; it < max_iterations; ++it) {
    std::vector<double> mu = mu_of(w);
    std::vector<double> m(d, 0.0);
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t s = 0; s < n; ++s) m[j] += a[j][s] * mu[s];
    std::vector<double> g(d);
    residual = 0;
    for (std::size_t j = 0; j < d; ++j) {
      g[j] = m[j] - y[j];
      residual = std::max(residual, std::fabs(g[j]));
    }
    if (residual <= tol) break;
    // Hessian = covariance of the projected features under mu.
    std::vector<std::vector<double>> hess(d, std::vector<double>(d, 0.0));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t s = 0; s < n; ++s) hess[i][j] += a[i][s] * a[j][s] * mu[s];
        hess[i][j] -= m[i] * m[j];
      }
    std::vector<double> step = solve_dense(std::move(hess), g);
    double slope = 0;
    for (std::size_t j = 0; j < d; ++j) slope += g[j] * step[j];  // descent: -step.g
    double h0 = objective(w), alpha = 1.0;
    // Near the optimum the true decrease per step is ~slope^2, far below the
    // rounding granularity of h; without the slack the backtracking would
    // reject every step and stall just above tol.
    const double floor_slack = 1e-14 * (1.0 + std::fabs(h0));
    std::vector<double> trial(d);
    for (int bt = 0; bt < 60; ++bt) {
      for (std::size_t j = 0; j < d; ++j) trial[j] = w[j] - alpha * step[j];
      if (objective(trial) <= h0 - 1e-4 * alpha * slope + floor_slack) break;
      alpha /= 2;
    }
    w = trial;
  }
  if (residual > tol)
    throw NumericalError("maximum-entropy lift did not converge", residual, it);

  DistributionPoint out = make_float_distribution(mu_of(w));
  // The lift lives on the solution set by construction; double-check.
  if (!lambda_membership(Lc.basis, out))
    throw NumericalError("lifted point violates a monomial identity", residual, it);
  return out;
}

bool lambda_membership(const IntMat& k_vectors, const DistributionPoint& mu) {
  for (const IntVec& kappa : k_vectors) {
    if (kappa.size() != mu.size()) throw PreconditionError("weight vector size mismatch");
    if (mu.is_exact()) {
      auto [left, right] = side_products<Rat>(kappa, mu.exact);
      if (left != right) return false;
    } else {
      auto [left, right] = side_products<double>(kappa, mu.approx);
      double scale = std::max({1.0, std::fabs(left), std::fabs(right)});
      if (std::fabs(left - right) > 1e-12 * scale) return false;
    }
  }
  return true;
}

DistributionPoint rational_point_on_Lambda(const IntegerLattice& Lc, std::size_t s_size,
                                           const RatVec& t) {
  ChartBasis c = chart(Lc, s_size);
  const std::size_t d = c.complement_basis.size();
  if (t.size() != d) throw PreconditionError("parameter count must equal chart dimension");
  for (const Rat& x : t)
    if (x <= 0) throw PreconditionError("parameters must be positive");
  RatVec w(s_size, Rat(1));
  for (std::size_t s = 0; s < s_size; ++s)
    for (std::size_t j = 0; j < d; ++j)
      w[s] *= pow_rat_signed(t[j], c.complement_basis[j][s].convert_to<int>());
  Rat total = 0;
  for (const Rat& x : w) total += x;
  for (Rat& x : w) x /= total;
  return make_exact_distribution(std::move(w));
}

}  // namespace semabs
