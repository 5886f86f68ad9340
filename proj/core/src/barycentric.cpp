#include "routh/barycentric.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>

namespace routh::geometry {
namespace {

Rational sum_of(std::span<const Rational> values) {
  Rational s(0);
  for (const auto& v : values) s += v;
  return s;
}

// Meets the line p + s (q - p) with the line r + t (w - r). Both lines are
// expected to be coplanar; returns the point and s.
std::pair<BarycentricPoint, Rational> intersect_lines(const BarycentricPoint& p, const BarycentricPoint& q,
                                                      const BarycentricPoint& r, const BarycentricPoint& w) {
  const int n = p.size();
  std::vector<Rational> a(n), b(n), c(n);
  for (int k = 0; k < n; ++k) {
    a[k] = q[k] - p[k];
    b[k] = r[k] - w[k];
    c[k] = r[k] - p[k];
  }
  // s a_k + t b_k = c_k for every k; pick two independent rows.
  for (int r1 = 0; r1 < n; ++r1) {
    for (int r2 = r1 + 1; r2 < n; ++r2) {
      const Rational det = a[r1] * b[r2] - a[r2] * b[r1];
      if (det.is_zero()) continue;
      const Rational s = (c[r1] * b[r2] - c[r2] * b[r1]) / det;
      const Rational t = (a[r1] * c[r2] - a[r2] * c[r1]) / det;
      for (int k = 0; k < n; ++k) {
        if (s * a[k] + t * b[k] != c[k]) {
          throw InvariantViolation("chain lines are not coplanar");
        }
      }
      return {BarycentricPoint::along(p, q, s), s};
    }
  }
  throw InvariantViolation("chain lines are parallel");
}

}  // namespace

BarycentricPoint::BarycentricPoint(std::vector<Rational> coords) : coords_(std::move(coords)) {
  if (!sum_of(coords_).is_one()) {
    throw std::invalid_argument("barycentric coordinates must sum to 1");
  }
}

BarycentricPoint BarycentricPoint::vertex(int n, long i) {
  std::vector<Rational> c(static_cast<std::size_t>(n), Rational(0));
  long r = (i - 1) % n;
  if (r < 0) r += n;
  c[static_cast<std::size_t>(r)] = Rational(1);
  return BarycentricPoint(std::move(c));
}

BarycentricPoint BarycentricPoint::along(const BarycentricPoint& a, const BarycentricPoint& b, const Rational& s) {
  std::vector<Rational> c;
  c.reserve(a.coords_.size());
  for (std::size_t k = 0; k < a.coords_.size(); ++k) c.push_back(a.coords_[k] + s * (b.coords_[k] - a.coords_[k]));
  return BarycentricPoint(std::move(c));
}

HyperplaneFunctional::HyperplaneFunctional(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  bool any = false;
  for (const auto& c : coeffs_) any = any || !c.is_zero();
  if (!any) throw std::invalid_argument("hyperplane functional with all-zero coefficients");
}

Rational HyperplaneFunctional::operator()(const BarycentricPoint& p) const {
  if (p.size() != size()) throw std::invalid_argument("dimension mismatch");
  Rational v(0);
  for (int k = 0; k < size(); ++k) {
    if (!coeffs_[k].is_zero()) v += coeffs_[k] * p[k];
  }
  return v;
}

HyperplaneFunctional HyperplaneFunctional::canonical() const {
  Rational lead;
  for (const auto& c : coeffs_) {
    if (!c.is_zero()) {
      lead = c;
      break;
    }
  }
  std::vector<Rational> scaled;
  scaled.reserve(coeffs_.size());
  for (const auto& c : coeffs_) scaled.push_back(c / lead);
  return HyperplaneFunctional(std::move(scaled));
}

BarycentricPoint edge_point(const CycleRatios& x, long i) {
  const int n = x.size();
  std::vector<Rational> c(static_cast<std::size_t>(n), Rational(0));
  const Rational& xi = x(i);
  c[x.slot(i)] = Rational(1) / (Rational(1) + xi);
  c[x.slot(i + 1)] = xi / (Rational(1) + xi);
  return BarycentricPoint(std::move(c));
}

HyperplaneFunctional sigma(const CycleRatios& x, long i) {
  const int n = x.size();
  std::vector<Rational> c(static_cast<std::size_t>(n), Rational(0));
  c[x.slot(i)] = x(i);
  c[x.slot(i + 1)] = Rational(-1);
  HyperplaneFunctional f(std::move(c));

  for (long j = 1; j <= n; ++j) {
    if (x.slot(j) == x.slot(i) || x.slot(j) == x.slot(i + 1)) continue;
    if (!f(BarycentricPoint::vertex(n, j)).is_zero()) {
      throw InvariantViolation("sigma does not pass through A_" + std::to_string(j));
    }
  }
  if (!f(edge_point(x, i)).is_zero()) throw InvariantViolation("sigma misses its edge point");
  if (f(BarycentricPoint::vertex(n, i)).sign() <= 0) throw InvariantViolation("sigma has the wrong orientation");
  return f;
}

VertexChain::VertexChain(const CycleRatios& x) : n_(x.size()) {
  const auto n = static_cast<std::size_t>(n_);
  points_.resize(n);
  steps_.resize(n);
  for (long i = 1; i <= n_; ++i) {
    points_[0].push_back(BarycentricPoint::vertex(n_, i));
    points_[1].push_back(edge_point(x, i));
    steps_[1].push_back(x(i) / (Rational(1) + x(i)));
  }
  for (int j = 2; j < n_; ++j) {
    for (long i = 1; i <= n_; ++i) {
      auto [point, s] = intersect_lines(at(i, j - 1), BarycentricPoint::vertex(n_, i + j), at(i + 1, j - 1),
                                        BarycentricPoint::vertex(n_, i));
      points_[j].push_back(std::move(point));
      steps_[j].push_back(std::move(s));
    }
  }
}

std::size_t VertexChain::slot(long i) const {
  long r = (i - 1) % n_;
  if (r < 0) r += n_;
  return static_cast<std::size_t>(r);
}

const BarycentricPoint& VertexChain::at(long i, int j) const {
  if (j < 0 || j >= n_) throw std::out_of_range("vertex chain level " + std::to_string(j));
  return points_[static_cast<std::size_t>(j)][slot(i)];
}

const Rational& VertexChain::step_ratio(long i, int j) const {
  if (j < 1 || j >= n_) throw std::out_of_range("vertex chain step " + std::to_string(j));
  return steps_[static_cast<std::size_t>(j)][slot(i)];
}

BarycentricPoint vertex_chain(const CycleRatios& x, long i, int j) { return VertexChain(x).at(i, j); }

Rational line_parameter(const BarycentricPoint& a, const BarycentricPoint& m, const BarycentricPoint& b) {
  std::optional<Rational> lambda;
  for (int k = 0; k < a.size(); ++k) {
    const Rational d = b[k] - a[k];
    if (d.is_zero()) continue;
    lambda = (m[k] - a[k]) / d;
    break;
  }
  if (!lambda) throw InvariantViolation("line_parameter: a and b coincide");
  if (BarycentricPoint::along(a, b, *lambda) != m) throw InvariantViolation("line_parameter: point is off the line");
  return *lambda;
}

BarycentricPoint solve_vertex(std::span<const HyperplaneFunctional> functionals) {
  if (functionals.empty()) throw std::invalid_argument("solve_vertex: no hyperplanes");
  const int n = functionals.front().size();
  if (static_cast<int>(functionals.size()) != n - 1) {
    throw std::invalid_argument("solve_vertex needs n - 1 hyperplanes");
  }
  // Rows: each functional = 0, then sum b = 1. Column n is the right-hand side.
  std::vector<std::vector<Rational>> m;
  m.reserve(static_cast<std::size_t>(n));
  for (const auto& f : functionals) {
    if (f.size() != n) throw std::invalid_argument("solve_vertex: mixed dimensions");
    std::vector<Rational> row(f.coeffs().begin(), f.coeffs().end());
    row.emplace_back(0);
    m.push_back(std::move(row));
  }
  m.emplace_back(static_cast<std::size_t>(n + 1), Rational(1));

  for (int col = 0; col < n; ++col) {
    int pivot = col;
    while (pivot < n && m[pivot][col].is_zero()) ++pivot;
    if (pivot == n) throw DegenerateConfiguration("hyperplane system is singular");
    std::swap(m[col], m[pivot]);
    const Rational inv = m[col][col].reciprocal();
    for (int k = col; k <= n; ++k) m[col][k] *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      const Rational factor = m[r][col];
      for (int k = col; k <= n; ++k) m[r][k] -= factor * m[col][k];
    }
  }
  std::vector<Rational> coords;
  coords.reserve(static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r) coords.push_back(m[r][n]);
  return BarycentricPoint(std::move(coords));
}

std::vector<int> central_vertex_hyperplanes(int n, long i) {
  long skip = (i - 2) % n;
  if (skip < 0) skip += n;
  std::vector<int> out;
  for (int m = 1; m <= n; ++m) {
    if (m - 1 != skip) out.push_back(m);
  }
  return out;
}

BarycentricPoint central_vertex_by_solve(const CycleRatios& x, long i) {
  std::vector<HyperplaneFunctional> planes;
  for (int m : central_vertex_hyperplanes(x.size(), i)) planes.push_back(sigma(x, m));
  return solve_vertex(planes);
}

Rational determinant(std::vector<std::vector<Rational>> rows) {
  const auto n = rows.size();
  Rational det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && rows[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != col) {
      std::swap(rows[pivot], rows[col]);
      det = -det;
    }
    det *= rows[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (rows[r][col].is_zero()) continue;
      const Rational factor = rows[r][col] / rows[col][col];
      for (std::size_t k = col; k < n; ++k) rows[r][k] -= factor * rows[col][k];
    }
  }
  return det;
}

Rational volume_ratio(const SimplexVertices& simplex) {
  const auto n = simplex.size();
  std::vector<std::vector<Rational>> rows;
  rows.reserve(n);
  for (const auto& p : simplex) {
    if (static_cast<std::size_t>(p.size()) != n) {
      throw std::invalid_argument("volume_ratio needs n points with n coordinates");
    }
    rows.emplace_back(p.coords().begin(), p.coords().end());
  }
  return determinant(std::move(rows)).abs();
}

Rational oracle_central_volume(const CycleRatios& x) {
  if (x.regime() != ProductRegime::gt1) {
    throw std::domain_error("oracle_central_volume needs prod x > 1");
  }
  const int n = x.size();
  const VertexChain chain(x);
  SimplexVertices vertices;
  for (long i = 1; i <= n; ++i) {
    const BarycentricPoint& by_chain = chain.at(i, n - 1);
    if (central_vertex_by_solve(x, i) != by_chain) {
      throw InvariantViolation("chain and solve disagree on central vertex " + std::to_string(i));
    }
    vertices.push_back(by_chain);
  }
  return volume_ratio(vertices);
}

Rational oracle_bounded_volume(const CycleRatios& x) {
  SimplexVertices vertices;
  for (long i = 1; i <= x.size(); ++i) vertices.push_back(central_vertex_by_solve(x, i));
  return volume_ratio(vertices);
}

SimplexVertices subset_vertices(const VertexChain& chain, const IndexSet& subset) {
  const int n = chain.cycle_length();
  if (subset.cycle_length() != n) throw std::invalid_argument("subset is over a cycle of different length");
  const BlockDecomposition blocks = cyclic_blocks(subset);

  // Each block {k..k+l} trades the vertices A_{k+1}..A_{k+l+1} for the
  // chain points A^1_k..A^{l+1}_k; every other original vertex survives.
  SimplexVertices vertices;
  for (long m = 1; m <= n; ++m) {
    if (!subset.contains(m - 1)) vertices.push_back(chain.at(m, 0));
  }
  for (const Block& b : blocks) {
    for (int j = 1; j <= b.length; ++j) vertices.push_back(chain.at(b.start, j));
  }
  return vertices;
}

Rational oracle_subset_volume(const CycleRatios& x, const IndexSet& subset) {
  return volume_ratio(subset_vertices(VertexChain(x), subset));
}

SimplexVertices enumerate_polytope_vertices(const CycleRatios& x, const IndexSet& subset) {
  const int n = x.size();
  if (subset.cycle_length() != n) throw std::invalid_argument("subset is over a cycle of different length");

  std::vector<HyperplaneFunctional> constraints;
  for (int k = 0; k < n; ++k) {
    std::vector<Rational> c(static_cast<std::size_t>(n), Rational(0));
    c[static_cast<std::size_t>(k)] = Rational(1);
    constraints.emplace_back(std::move(c));
  }
  for (int i : subset.indices()) constraints.push_back(sigma(x, i));

  const auto m = static_cast<int>(constraints.size());
  SimplexVertices found;
  std::vector<HyperplaneFunctional> active;
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << m); ++pick) {
    if (std::popcount(pick) != n - 1) continue;
    active.clear();
    for (int c = 0; c < m; ++c) {
      if ((pick >> c) & 1U) active.push_back(constraints[static_cast<std::size_t>(c)]);
    }
    std::optional<BarycentricPoint> p;
    try {
      p = solve_vertex(active);
    } catch (const DegenerateConfiguration&) {
      continue;
    }
    bool feasible = true;
    for (const auto& f : constraints) feasible = feasible && f(*p).sign() >= 0;
    if (!feasible) continue;
    if (std::find(found.begin(), found.end(), *p) == found.end()) found.push_back(std::move(*p));
  }
  return found;
}

Rational oracle_first_kind_volume(const CycleRatios& x) {
  SimplexVertices vertices;
  for (long i = 1; i <= x.size(); ++i) vertices.push_back(edge_point(x, i));
  return volume_ratio(vertices);
}

}  // namespace routh::geometry
