#pragma once

#include <string>
#include <vector>

#include "routh/blocks.hpp"
#include "routh/cycle_ratios.hpp"
#include "routh/rational.hpp"

namespace routh {

enum class Method { closed_form, inclusion_exclusion, oracle, first_kind };

std::string to_string(Method method);

/// A computed volume (relative to the reference simplex) and how it was obtained.
struct VolumeReport {
  Rational value;
  Method method = Method::closed_form;
  int n = 0;
  CycleRatios x;
  ProductRegime product_regime = ProductRegime::gt1;
};

// Prefix products along the cycle.

/// x_k * x_{k+1} * ... * x_{k+count-1}; 1 when count == 0.
Rational cycle_prefix_product(const CycleRatios& x, long k, int count);

/// 1 + x_k + x_k x_{k+1} + ... + x_k...x_{k+terms-1}.
Rational cycle_prefix_sum(const CycleRatios& x, long k, int terms);

// Segment ratios inside the cutting triangles. Each throws std::out_of_range
// when j is outside its admissible range.

/// v_{i,j} = x_i + x_i x_{i+1} + ... + x_i...x_{i+j-1}, for 2 <= j <= n-1.
Rational ratio_v(const CycleRatios& x, long i, int j);

/// u_{i,j} = x_{i+1}...x_{i+j} / (1 + x_{i+1} + ... + x_{i+1}...x_{i+j-1}), for 2 <= j <= n-1.
Rational ratio_u(const CycleRatios& x, long i, int j);

/// t_{i,j} = x_i...x_{i+j-1} / (1 + x_i + ... + x_i...x_{i+j-1}), for 1 <= j <= n-1.
Rational ratio_t(const CycleRatios& x, long i, int j);

/// V(B): volume of the intersection of the corner cuts T_i over one block.
Rational block_value(const CycleRatios& x, const Block& block);

/// Every block value V(start, length) for 1 <= length <= n-1, built once so
/// that subset enumeration only does lookups.
class BlockValueTable {
 public:
  explicit BlockValueTable(const CycleRatios& x);

  int cycle_length() const { return n_; }
  const Rational& operator()(int start, int length) const;

 private:
  int n_;
  std::vector<Rational> values_;  // row (start - 1), column (length - 1)
};

/// Volume of the intersection of T_i for i in the subset: the product of
/// its block values. Throws for the empty or full subset.
Rational subset_volume(const CycleRatios& x, const IndexSet& subset);

struct InclusionExclusionOptions {
  /// Worker threads for the subset sweep; 0 picks the hardware concurrency.
  unsigned workers = 1;
};

/// S(x) = 1 + sum over proper nonempty I of (-1)^|I| * prod_{B in blocks(I)} V(B).
///
/// Subsets are swept as n-bit masks over a precomputed BlockValueTable.
/// S(x) = (1 - prod x)^(n-1) / prod_k D_k for every positive x.
/// Requires 4 <= n <= 63.
Rational inclusion_exclusion_sum(const CycleRatios& x, const InclusionExclusionOptions& options = {});

/// The central volume by inclusion-exclusion, (-1)^(n+1) * S(x).
///
/// Inclusion-exclusion over all subsets, the full set included, measures the
/// common part of the complements S \ T_i, which has no volume; moving the
/// full-set term across gives the sign. Meaningful for prod x >= 1.
Rational inclusion_exclusion_volume(const CycleRatios& x, const InclusionExclusionOptions& options = {});

/// (prod x - 1)^(n-1) / prod_k D_k with D_k = 1 + sum_{b=k}^{k+n-2} prod_{a=k}^{b} x_a,
/// evaluated for any positive x (signed when prod x < 1 and n is even).
Rational closed_form_expression(const CycleRatios& x);

/// The central volume for prod x >= 1. Throws std::domain_error below one.
Rational closed_form_volume(const CycleRatios& x);

/// The central volume in every regime. prod x < 1 is reduced to the
/// prod x > 1 case by reversing the cycle orientation.
VolumeReport central_volume(const CycleRatios& x);

/// Volume of the simplex spanned by the edge points:
/// |1 - (-1)^n prod x| / prod (1 + x_i).
Rational first_kind_volume(const CycleRatios& x);

enum class SimplexKind { central, first_kind };

/// Closed forms for x_1 = ... = x_n = k:
///   central     |k - 1|^n / |k^n - 1|  (0 when k == 1)
///   first_kind  |k^n + (-1)^(n+1)| / (k + 1)^n
Rational equal_ratio_volume(int n, const Rational& k, SimplexKind kind);

}  // namespace routh
