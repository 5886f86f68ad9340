#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "routh/blocks.hpp"
#include "routh/cycle_ratios.hpp"
#include "routh/rational.hpp"

// Exact coordinate geometry in the reference simplex A_1...A_n.
//
// Points are barycentric coordinate vectors (b_1, ..., b_n) with sum 1, so the
// reference simplex has volume 1 and the volume of any other simplex is the
// absolute determinant of its coordinate rows. Nothing here uses the volume
// formulas; it is an independent check on them.

namespace routh::geometry {

/// A linear system with no unique solution, or an intersection that does not exist.
class DegenerateConfiguration : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A construction produced a point that violates a property it is known to have.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class BarycentricPoint {
 public:
  /// Throws std::invalid_argument unless the coordinates sum to exactly 1.
  explicit BarycentricPoint(std::vector<Rational> coords);

  /// The reference vertex A_i (1-based, cyclic).
  static BarycentricPoint vertex(int n, long i);

  /// a + s (b - a).
  static BarycentricPoint along(const BarycentricPoint& a, const BarycentricPoint& b, const Rational& s);

  int size() const { return static_cast<int>(coords_.size()); }
  const Rational& operator[](int slot) const { return coords_[static_cast<std::size_t>(slot)]; }
  std::span<const Rational> coords() const { return coords_; }

  friend bool operator==(const BarycentricPoint&, const BarycentricPoint&) = default;

 private:
  std::vector<Rational> coords_;
};

/// Linear functional f(b) = sum c_k b_k whose zero set is a hyperplane.
class HyperplaneFunctional {
 public:
  /// Throws std::invalid_argument when every coefficient is zero.
  explicit HyperplaneFunctional(std::vector<Rational> coeffs);

  Rational operator()(const BarycentricPoint& p) const;
  std::span<const Rational> coeffs() const { return coeffs_; }
  int size() const { return static_cast<int>(coeffs_.size()); }

  /// Same hyperplane scaled so the first nonzero coefficient is +1.
  HyperplaneFunctional canonical() const;

  friend bool operator==(const HyperplaneFunctional&, const HyperplaneFunctional&) = default;

 private:
  std::vector<Rational> coeffs_;
};

using SimplexVertices = std::vector<BarycentricPoint>;

/// A^1_i, the point dividing edge A_i A_{i+1} in ratio x_i.
BarycentricPoint edge_point(const CycleRatios& x, long i);

/// The cutting hyperplane through every A_j with j not in {i, i+1} and
/// through A^1_i, oriented positive at A_i: f(b) = x_i b_i - b_{i+1}.
/// The form is re-checked against the defining points on every call.
HyperplaneFunctional sigma(const CycleRatios& x, long i);

/// The points A^j_i for every i in 1..n and j in 0..n-1.
///
/// A^0_i is the vertex A_i, A^1_i the edge point, and for j >= 2 A^j_i is
/// where the line A^{j-1}_i A_{i+j} meets the line A^{j-1}_{i+1} A_i.
class VertexChain {
 public:
  explicit VertexChain(const CycleRatios& x);

  int cycle_length() const { return n_; }
  const BarycentricPoint& at(long i, int j) const;

  /// The parameter s with A^j_i = A^{j-1}_i + s (A_{i+j} - A^{j-1}_i),
  /// i.e. |A^j_i A^{j-1}_i| / |A_{i+j} A^{j-1}_i|, for 1 <= j <= n-1.
  const Rational& step_ratio(long i, int j) const;

 private:
  std::size_t slot(long i) const;

  int n_;
  std::vector<std::vector<BarycentricPoint>> points_;  // [j][i - 1]
  std::vector<std::vector<Rational>> steps_;           // [j][i - 1]
};

BarycentricPoint vertex_chain(const CycleRatios& x, long i, int j);

/// Position of m on the line through a and b: the lambda with
/// m = a + lambda (b - a). Throws InvariantViolation if m is off that line.
Rational line_parameter(const BarycentricPoint& a, const BarycentricPoint& m, const BarycentricPoint& b);

/// Unique point on n-1 hyperplanes of an n-simplex (plus sum b = 1).
/// Throws DegenerateConfiguration when the system is singular.
BarycentricPoint solve_vertex(std::span<const HyperplaneFunctional> functionals);

/// Indices of the hyperplanes through the central vertex A^{n-1}_i: every
/// sigma_m except sigma_{i-1}.
std::vector<int> central_vertex_hyperplanes(int n, long i);

/// A^{n-1}_i obtained by solving its hyperplane system.
BarycentricPoint central_vertex_by_solve(const CycleRatios& x, long i);

/// |det| of the coordinate matrix; 0 for a degenerate simplex.
Rational volume_ratio(const SimplexVertices& simplex);

/// Determinant of a square matrix over the rationals.
Rational determinant(std::vector<std::vector<Rational>> rows);

/// Volume bounded by all n cutting hyperplanes, for prod x > 1. Each central
/// vertex is built by the chain construction and by a linear solve; the two
/// must agree exactly or InvariantViolation is thrown.
Rational oracle_central_volume(const CycleRatios& x);

/// Volume of the simplex whose vertices are the n central-vertex solves.
/// Valid in every regime; used where prod x <= 1.
Rational oracle_bounded_volume(const CycleRatios& x);

/// The vertices of the intersection of T_i over i in the subset.
SimplexVertices subset_vertices(const VertexChain& chain, const IndexSet& subset);

Rational oracle_subset_volume(const CycleRatios& x, const IndexSet& subset);

/// Every vertex of {b >= 0, sum b = 1, sigma_i(b) >= 0 for i in the subset},
/// found by solving each choice of n-1 active constraints and keeping the
/// feasible solutions. Exponential in n; meant for n <= 6 cross-checks.
/// The subset may be empty or full here.
SimplexVertices enumerate_polytope_vertices(const CycleRatios& x, const IndexSet& subset);

/// Volume of the simplex A^1_1 ... A^1_n.
Rational oracle_first_kind_volume(const CycleRatios& x);

}  // namespace routh::geometry
