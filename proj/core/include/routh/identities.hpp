#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "routh/cycle_ratios.hpp"
#include "routh/rational.hpp"

namespace routh {

enum class IdentityId { ie_n4, e2_general, first_kind_n4, first_kind_n5 };

std::string to_string(IdentityId id);

/// Accepts the canonical names plus "e2" for e2_general.
std::optional<IdentityId> parse_identity_id(std::string_view name);

struct IdentityCheckResult {
  IdentityId identity_id = IdentityId::ie_n4;
  int n = 0;
  CycleRatios x;
  Rational lhs;
  Rational rhs;
  bool holds = false;
  /// Number of summands evaluated on the left-hand side.
  int lhs_terms = 0;
};

/// The 4-cycle inclusion-exclusion identity, evaluated term by term as
/// printed (1 + 4 + 6 + 4 terms) against (x1x2x3x4 - 1)^3 / prod D_k.
IdentityCheckResult check_ie_n4(const CycleRatios& x);

inline constexpr int kDefaultMaxIdentityN = 10;

/// The general identity: the subset sum built from cyclic blocks equals the
/// closed form with denominator sums ending at prod_{a=k}^{k+n-2} x_a.
/// Throws std::invalid_argument unless 4 <= n <= max_n.
IdentityCheckResult check_e2(const CycleRatios& x, int max_n = kDefaultMaxIdentityN);

/// The signed 4-cycle edge-point identity (7 terms on the left).
IdentityCheckResult check_first_kind_n4(const CycleRatios& x);

/// The 5-cycle edge-point identity (16 terms on the left).
IdentityCheckResult check_first_kind_n5(const CycleRatios& x);

/// Deterministic positive ratios p/q with 1 <= p, q <= bound.
///
/// The seed is expanded through std::seed_seq into the state of
/// std::minstd_rand (multiplier 48271, modulus 2^31 - 1); both are fully
/// specified by the C++ standard, so a seed reproduces the same ratios on
/// every platform. Each draw is 1 + (raw % bound), numerator before
/// denominator, x_1 first.
CycleRatios sample_ratios(int n, std::uint64_t seed, int bound);

}  // namespace routh
