#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "routh/rational.hpp"

namespace routh {

/// Where the product of all ratios sits relative to 1.
enum class ProductRegime { gt1, eq1, lt1 };

std::string to_string(ProductRegime regime);

/// Edge-division ratios x_1..x_n of a simplex cycle A_1 -> A_2 -> ... -> A_n -> A_1.
///
/// x_i is |A_i P_i| / |P_i A_{i+1}| for the chosen point P_i on edge A_i A_{i+1}.
/// Indices are 1-based and cyclic: x(n + 1) is x(1), x(0) is x(n).
class CycleRatios {
 public:
  /// Throws std::invalid_argument if fewer than three ratios are given or any
  /// ratio is not strictly positive.
  explicit CycleRatios(std::vector<Rational> ratios);

  static CycleRatios uniform(int n, const Rational& k);

  int size() const { return static_cast<int>(ratios_.size()); }
  const Rational& operator()(long index) const { return ratios_[slot(index)]; }
  std::span<const Rational> values() const { return ratios_; }

  /// Maps any integer index onto 0..n-1 storage.
  std::size_t slot(long index) const;

  Rational product() const;
  ProductRegime regime() const;

  /// Ratios seen after reversing the cycle orientation while keeping A_1 fixed:
  /// x'_i = 1 / x_{n+1-i}. Applying it twice is the identity.
  CycleRatios reversed_reciprocal() const;

  /// Relabels A_i as A_{i-shift}: x'_i = x_{i+shift}.
  CycleRatios rotated(long shift) const;

  friend bool operator==(const CycleRatios&, const CycleRatios&) = default;

 private:
  std::vector<Rational> ratios_;
};

}  // namespace routh
