#include "routh/identities.hpp"

#include <random>
#include <stdexcept>
#include <vector>

#include "routh/blocks.hpp"
#include "routh/volume.hpp"

namespace routh {
namespace {

void require_n(const CycleRatios& x, int n, const char* what) {
  if (x.size() != n) {
    throw std::invalid_argument(std::string(what) + " needs n = " + std::to_string(n) + ", got " +
                                std::to_string(x.size()));
  }
}

IdentityCheckResult make_result(IdentityId id, const CycleRatios& x, Rational lhs, Rational rhs, int terms) {
  const bool holds = lhs == rhs;
  return IdentityCheckResult{id, x.size(), x, std::move(lhs), std::move(rhs), holds, terms};
}

// Sums terms and counts them.
struct TermSum {
  Rational total;
  int count = 0;

  void add(const Rational& term) {
    total += term;
    ++count;
  }
};

}  // namespace

std::string to_string(IdentityId id) {
  switch (id) {
    case IdentityId::ie_n4: return "ie_n4";
    case IdentityId::e2_general: return "e2_general";
    case IdentityId::first_kind_n4: return "first_kind_n4";
    case IdentityId::first_kind_n5: return "first_kind_n5";
  }
  return "unknown";
}

std::optional<IdentityId> parse_identity_id(std::string_view name) {
  if (name == "ie_n4") return IdentityId::ie_n4;
  if (name == "e2" || name == "e2_general") return IdentityId::e2_general;
  if (name == "first_kind_n4") return IdentityId::first_kind_n4;
  if (name == "first_kind_n5") return IdentityId::first_kind_n5;
  return std::nullopt;
}

IdentityCheckResult check_ie_n4(const CycleRatios& x) {
  require_n(x, 4, "check_ie_n4");
  const Rational one(1);
  const Rational &x1 = x(1), &x2 = x(2), &x3 = x(3), &x4 = x(4);

  TermSum lhs;
  lhs.add(one);
  lhs.add(-(x1 / (one + x1)));
  lhs.add(-(x2 / (one + x2)));
  lhs.add(-(x3 / (one + x3)));
  lhs.add(-(x4 / (one + x4)));
  lhs.add(x1 * x1 * x2 / ((one + x1) * (one + x1 + x1 * x2)));
  lhs.add(x2 * x2 * x3 / ((one + x2) * (one + x2 + x2 * x3)));
  lhs.add(x3 * x3 * x4 / ((one + x3) * (one + x3 + x3 * x4)));
  lhs.add(x4 * x4 * x1 / ((one + x4) * (one + x4 + x4 * x1)));
  lhs.add(x1 * x3 / ((one + x1) * (one + x3)));
  lhs.add(x2 * x4 / ((one + x2) * (one + x4)));
  lhs.add(-(pow(x1, 3) * x2 * x2 * x3 /
            ((one + x1) * (one + x1 + x1 * x2) * (one + x1 + x1 * x2 + x1 * x2 * x3))));
  lhs.add(-(pow(x2, 3) * x3 * x3 * x4 /
            ((one + x2) * (one + x2 + x2 * x3) * (one + x2 + x2 * x3 + x2 * x3 * x4))));
  lhs.add(-(pow(x3, 3) * x4 * x4 * x1 /
            ((one + x3) * (one + x3 + x3 * x4) * (one + x3 + x3 * x4 + x3 * x4 * x1))));
  lhs.add(-(pow(x4, 3) * x1 * x1 * x2 /
            ((one + x4) * (one + x4 + x4 * x1) * (one + x4 + x4 * x1 + x4 * x1 * x2))));

  const Rational rhs = pow(x1 * x2 * x3 * x4 - one, 3) /
                       ((one + x1 + x1 * x2 + x1 * x2 * x3) * (one + x2 + x2 * x3 + x2 * x3 * x4) *
                        (one + x3 + x3 * x4 + x3 * x4 * x1) * (one + x4 + x4 * x1 + x4 * x1 * x2));
  return make_result(IdentityId::ie_n4, x, lhs.total, rhs, lhs.count);
}

IdentityCheckResult check_e2(const CycleRatios& x, int max_n) {
  const int n = x.size();
  if (n < 4 || n > max_n) {
    throw std::invalid_argument("check_e2 needs 4 <= n <= " + std::to_string(max_n) + ", got " + std::to_string(n));
  }
  TermSum lhs;
  lhs.add(Rational(1));
  const std::uint64_t all = full_mask(n);
  for (std::uint64_t mask = 1; mask < all; ++mask) {
    const IndexSet subset(n, mask);
    Rational term(1);
    for (const Block& b : cyclic_blocks(subset)) term *= block_value(x, b);
    lhs.add(subset.size() % 2 == 0 ? term : -term);
  }
  return make_result(IdentityId::e2_general, x, lhs.total, closed_form_expression(x), lhs.count);
}

IdentityCheckResult check_first_kind_n4(const CycleRatios& x) {
  require_n(x, 4, "check_first_kind_n4");
  const Rational one(1);
  const Rational &x1 = x(1), &x2 = x(2), &x3 = x(3), &x4 = x(4);
  const Rational p1 = one + x1, p2 = one + x2, p3 = one + x3, p4 = one + x4;

  TermSum lhs;
  lhs.add(one);
  lhs.add(-(x1 / (p1 * p2 * p3)));
  lhs.add(-(x2 / (p2 * p3 * p4)));
  lhs.add(-(x3 / (p3 * p4 * p1)));
  lhs.add(-(x4 / (p4 * p1 * p2)));
  lhs.add(-(x1 * x3 / (p1 * p3)));
  lhs.add(-(x2 * x4 / (p2 * p4)));

  const Rational rhs = (one - x1 * x2 * x3 * x4) / (p1 * p2 * p3 * p4);
  return make_result(IdentityId::first_kind_n4, x, lhs.total, rhs, lhs.count);
}

IdentityCheckResult check_first_kind_n5(const CycleRatios& x) {
  require_n(x, 5, "check_first_kind_n5");
  const Rational one(1);
  const Rational &x1 = x(1), &x2 = x(2), &x3 = x(3), &x4 = x(4), &x5 = x(5);
  const Rational p1 = one + x1, p2 = one + x2, p3 = one + x3, p4 = one + x4, p5 = one + x5;

  TermSum lhs;
  lhs.add(one);
  lhs.add(-(x1 / (p1 * p3 * p4 * p5)));
  lhs.add(-(x2 / (p1 * p2 * p4 * p5)));
  lhs.add(-(x3 / (p1 * p2 * p3 * p5)));
  lhs.add(-(x4 / (p1 * p2 * p3 * p4)));
  lhs.add(-(x5 / (p2 * p3 * p4 * p5)));
  lhs.add(-(x1 * x3 / (p1 * p3)));
  lhs.add(-(x1 * x4 / (p1 * p4)));
  lhs.add(-(x2 * x4 / (p2 * p4)));
  lhs.add(-(x2 * x5 / (p2 * p5)));
  lhs.add(-(x3 * x5 / (p3 * p5)));
  lhs.add(x1 * x2 * x4 / (p1 * p2 * p4));
  lhs.add(x1 * x3 * x4 / (p1 * p3 * p4));
  lhs.add(x1 * x3 * x5 / (p1 * p3 * p5));
  lhs.add(x2 * x3 * x5 / (p2 * p3 * p5));
  lhs.add(x2 * x4 * x5 / (p2 * p4 * p5));

  const Rational rhs = (one + x1 * x2 * x3 * x4 * x5) / (p1 * p2 * p3 * p4 * p5);
  return make_result(IdentityId::first_kind_n5, x, lhs.total, rhs, lhs.count);
}

CycleRatios sample_ratios(int n, std::uint64_t seed, int bound) {
  if (n < 3) throw std::invalid_argument("sample_ratios needs n >= 3");
  if (bound < 2) throw std::invalid_argument("sample_ratios needs bound >= 2");
  std::seed_seq seq{static_cast<std::uint32_t>(seed & 0xffffffffU), static_cast<std::uint32_t>(seed >> 32)};
  std::uint32_t state = 0;
  seq.generate(&state, &state + 1);
  std::minstd_rand rng(state);

  const auto b = static_cast<std::uint64_t>(bound);
  std::vector<Rational> ratios;
  ratios.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const auto p = static_cast<std::int64_t>(1 + rng() % b);
    const auto q = static_cast<std::int64_t>(1 + rng() % b);
    ratios.emplace_back(p, q);
  }
  return CycleRatios(std::move(ratios));
}

}  // namespace routh
