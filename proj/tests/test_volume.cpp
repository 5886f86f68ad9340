#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "routh/volume.hpp"

using namespace routh;
using routh::ref::brute_block_value;
using routh::ref::brute_prefix_sum;
using routh::ref::brute_product;
using routh::ref::to_vector;

namespace {

Rational R(const char* text) { return Rational::parse(text); }

CycleRatios ones(int n) { return CycleRatios::uniform(n, Rational(1)); }

}  // namespace

// ---------------------------------------------------------------------------
// Triangle ratios

TEST(RatioV, Examples) {
  EXPECT_EQ(ratio_v(ones(5), 2, 3), Rational(3));
  const CycleRatios x({Rational(2), Rational(3), Rational(5), Rational(7)});
  EXPECT_EQ(ratio_v(x, 1, 2), Rational(8));
  EXPECT_THROW(ratio_v(x, 1, 1), std::out_of_range);
  EXPECT_THROW(ratio_v(x, 1, 4), std::out_of_range);
}

TEST(RatioU, Examples) {
  const CycleRatios x({Rational(7), Rational(2), Rational(3), Rational(5)});
  EXPECT_EQ(ratio_u(x, 1, 2), Rational(2));
  for (int j = 2; j <= 5; ++j) EXPECT_EQ(ratio_u(ones(6), 4, j), Rational(1, j));
  EXPECT_THROW(ratio_u(x, 1, 1), std::out_of_range);
  EXPECT_THROW(ratio_u(x, 1, 4), std::out_of_range);
}

TEST(RatioT, Examples) {
  for (int j = 1; j <= 5; ++j) EXPECT_EQ(ratio_t(ones(6), 2, j), Rational(1, j + 1));
  EXPECT_EQ(ratio_t(ones(4), 1, 2), Rational(1, 3));
  const CycleRatios x({Rational(2), Rational(3), Rational(5)});
  EXPECT_EQ(ratio_t(x, 1, 1), Rational(2, 3));
  EXPECT_THROW(ratio_t(x, 1, 0), std::out_of_range);
  EXPECT_THROW(ratio_t(x, 1, 3), std::out_of_range);
}

TEST(RatioProperty, AgreeWithPrefixProductOracle) {
  std::mt19937_64 rng(11);
  for (int n = 3; n <= 8; ++n) {
    for (int trial = 0; trial < 5; ++trial) {
      const CycleRatios x = ref::random_ratios(rng, n);
      const auto xv = to_vector(x);
      for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n - 1; ++j) {
          EXPECT_EQ(ratio_t(x, i, j), brute_product(xv, i, j) / brute_prefix_sum(xv, i, j));
          // t = P / (1 + v) where v sums the same prefix products.
          if (j >= 2) EXPECT_EQ(ratio_t(x, i, j), brute_product(xv, i, j) / (Rational(1) + ratio_v(x, i, j)));
          if (j < 2) continue;
          Rational v(0);
          for (int b = 1; b <= j; ++b) v = v + brute_product(xv, i, b);
          EXPECT_EQ(ratio_v(x, i, j), v);
          EXPECT_EQ(ratio_u(x, i, j), brute_product(xv, i + 1, j) / brute_prefix_sum(xv, i + 1, j - 1));
        }
      }
    }
  }
}

TEST(RatioProperty, TriangleRecurrences) {
  // In a triangle with |AM|/|MB| = v and |BK|/|KC| = u, the cevians meet with
  // |AP|/|PK| = v(1+u), |MP|/|PC| = vu/(1+v) and |MP|/|MC| = vu/(1+v+vu).
  // The first gives v_{i,j} from step j-1, the third gives t_{i,j} from step
  // j-1 of the same chain, the second gives u_{i,j} from step j-1 of chain i+1.
  std::mt19937_64 rng(12);
  for (int n = 4; n <= 8; ++n) {
    const CycleRatios x = ref::random_ratios(rng, n);
    auto v = [&](long i, int j) { return j == 1 ? x(i) : ratio_v(x, i, j); };
    auto u = [&](long i, int j) { return j == 1 ? x(i + 1) : ratio_u(x, i, j); };
    for (int i = 1; i <= n; ++i) {
      for (int j = 2; j <= n - 1; ++j) {
        const Rational vp = v(i, j - 1);
        const Rational up = u(i, j - 1);
        EXPECT_EQ(v(i, j), vp * (Rational(1) + up));
        EXPECT_EQ(ratio_t(x, i, j), vp * up / (Rational(1) + vp + vp * up));
        const Rational vn = v(i + 1, j - 1);
        const Rational un = u(i + 1, j - 1);
        EXPECT_EQ(ratio_u(x, i, j), vn * un / (Rational(1) + vn));
      }
    }
  }
}

// ---------------------------------------------------------------------------
// Block values and subset volumes

TEST(BlockValue, Examples) {
  const CycleRatios x({Rational(2), Rational(5), Rational(7), Rational(3)});
  EXPECT_EQ(block_value(x, Block{1, 1}), Rational(2, 3));
  EXPECT_EQ(block_value(ones(4), Block{1, 2}), Rational(1, 6));
  EXPECT_EQ(block_value(ones(6), Block{2, 4}), Rational(1, 120));
  EXPECT_THROW(block_value(x, Block{1, 4}), std::invalid_argument);
}

TEST(BlockValue, DisplayedFourElementBlock) {
  std::mt19937_64 rng(5);
  const CycleRatios x = ref::random_ratios(rng, 6);
  const Rational one(1);
  const Rational &x2 = x(2), &x3 = x(3), &x4 = x(4), &x5 = x(5);
  const Rational expected = x2 / (one + x2) * (x2 * x3 / (one + x2 + x2 * x3)) *
                            (x2 * x3 * x4 / (one + x2 + x2 * x3 + x2 * x3 * x4)) *
                            (x2 * x3 * x4 * x5 / (one + x2 + x2 * x3 + x2 * x3 * x4 + x2 * x3 * x4 * x5));
  EXPECT_EQ(block_value(x, Block{2, 4}), expected);
}

TEST(BlockValue, TableAndProductOfT) {
  std::mt19937_64 rng(6);
  for (int n = 3; n <= 9; ++n) {
    const CycleRatios x = ref::random_ratios(rng, n);
    const BlockValueTable table(x);
    for (int k = 1; k <= n; ++k) {
      for (int len = 1; len <= n - 1; ++len) {
        const Rational v = block_value(x, Block{k, len});
        EXPECT_EQ(table(k, len), v);
        EXPECT_EQ(v, brute_block_value(to_vector(x), k, len));
        Rational product_of_t(1);
        for (int j = 1; j <= len; ++j) product_of_t *= ratio_t(x, k, j);
        EXPECT_EQ(v, product_of_t);
      }
    }
  }
}

TEST(SubsetVolume, Examples) {
  std::mt19937_64 rng(8);
  const CycleRatios x = ref::random_ratios(rng, 4);
  const Rational one(1);
  EXPECT_EQ(subset_volume(x, IndexSet::of(4, {1, 3})), x(1) / (one + x(1)) * (x(3) / (one + x(3))));
  EXPECT_EQ(subset_volume(ones(4), IndexSet::of(4, {1, 2, 3})), Rational(1, 24));
  // The tetrahedral intersection volumes written out for n = 4.
  const Rational &x1 = x(1), &x2 = x(2), &x3 = x(3), &x4 = x(4);
  EXPECT_EQ(subset_volume(x, IndexSet::of(4, {4, 1})), x4 * x4 * x1 / ((one + x4) * (one + x4 + x4 * x1)));
  EXPECT_EQ(subset_volume(x, IndexSet::of(4, {1, 2, 3})),
            pow(x1, 3) * x2 * x2 * x3 / ((one + x1) * (one + x1 + x1 * x2) * (one + x1 + x1 * x2 + x1 * x2 * x3)));

  const CycleRatios y = ref::random_ratios(rng, 6);
  EXPECT_EQ(subset_volume(y, IndexSet::of(6, {1, 2, 4, 6})), block_value(y, Block{6, 3}) * block_value(y, Block{4, 1}));
  EXPECT_THROW(subset_volume(y, IndexSet(6, 0)), std::invalid_argument);
  EXPECT_THROW(subset_volume(y, IndexSet(6, 0b111111)), std::invalid_argument);
}

// ---------------------------------------------------------------------------
// Inclusion-exclusion and the closed form

TEST(InclusionExclusion, Examples) {
  EXPECT_EQ(inclusion_exclusion_volume(CycleRatios::uniform(4, Rational(2))), Rational(1, 15));
  EXPECT_EQ(inclusion_exclusion_volume(ones(4)), Rational(0));
  EXPECT_EQ(inclusion_exclusion_volume(CycleRatios::uniform(5, Rational(2))), Rational(1, 31));
  EXPECT_THROW(inclusion_exclusion_volume(ones(3)), std::invalid_argument);
}

TEST(InclusionExclusion, RawSumCarriesSignForEvenN) {
  // The signed subset sum at x = 2: -1/15 for n = 4, +1/31 for n = 5.
  EXPECT_EQ(inclusion_exclusion_sum(CycleRatios::uniform(4, Rational(2))), Rational(-1, 15));
  EXPECT_EQ(inclusion_exclusion_sum(CycleRatios::uniform(5, Rational(2))), Rational(1, 31));
}

TEST(InclusionExclusionProperty, MemoizedSweepMatchesNaive) {
  std::mt19937_64 rng(21);
  for (int n = 4; n <= 7; ++n) {
    for (int trial = 0; trial < 4; ++trial) {
      const CycleRatios x = ref::random_ratios(rng, n);
      EXPECT_EQ(inclusion_exclusion_sum(x), ref::naive_inclusion_exclusion_sum(to_vector(x))) << "n=" << n;
    }
  }
}

TEST(InclusionExclusionProperty, WorkerSplitDoesNotChangeResult) {
  std::mt19937_64 rng(22);
  const CycleRatios x = ref::random_ratios(rng, 11);
  const Rational serial = inclusion_exclusion_sum(x, {1});
  EXPECT_EQ(inclusion_exclusion_sum(x, {3}), serial);
  EXPECT_EQ(inclusion_exclusion_sum(x, {8}), serial);
  EXPECT_EQ(inclusion_exclusion_sum(x, {0}), serial);
}

TEST(InclusionExclusionProperty, EqualsClosedFormAboveOne) {
  std::mt19937_64 rng(23);
  for (int n = 4; n <= 8; ++n) {
    for (int trial = 0; trial < 6; ++trial) {
      const CycleRatios x = ref::random_ratios_above_one(rng, n);
      EXPECT_EQ(inclusion_exclusion_volume(x), closed_form_volume(x)) << "n=" << n;
    }
  }
}

TEST(InclusionExclusionProperty, SumIsSignedClosedFormEverywhere) {
  std::mt19937_64 rng(24);
  for (int n = 4; n <= 8; ++n) {
    for (int trial = 0; trial < 6; ++trial) {
      const CycleRatios x = ref::random_ratios(rng, n);
      Rational expected = closed_form_expression(x);
      if (n % 2 == 0) expected = -expected;
      EXPECT_EQ(inclusion_exclusion_sum(x), expected) << "n=" << n;
    }
  }
}

TEST(ClosedForm, Examples) {
  EXPECT_EQ(closed_form_volume(CycleRatios::uniform(3, Rational(2))), Rational(1, 7));
  EXPECT_EQ(closed_form_volume(CycleRatios({Rational(1), Rational(2), Rational(3)})), Rational(25, 252));
  EXPECT_EQ(closed_form_volume(CycleRatios::uniform(4, Rational(2))), Rational(1, 15));
  EXPECT_EQ(closed_form_volume(ones(5)), Rational(0));
  EXPECT_THROW(closed_form_volume(CycleRatios::uniform(4, Rational(1, 2))), std::domain_error);
}

TEST(ClosedForm, TriangleMatchesClassicalFormula) {
  std::mt19937_64 rng(31);
  const Rational one(1);
  for (int trial = 0; trial < 50; ++trial) {
    const CycleRatios x = ref::random_ratios_above_one(rng, 3);
    const Rational &a = x(1), &b = x(2), &c = x(3);
    const Rational routh = pow(one - a * b * c, 2) / ((one + a + a * b) * (one + b + b * c) * (one + c + c * a));
    EXPECT_EQ(closed_form_volume(x), routh);
  }
}

TEST(ClosedForm, TetrahedronMatchesWrittenFormula) {
  std::mt19937_64 rng(32);
  const Rational one(1);
  for (int trial = 0; trial < 30; ++trial) {
    const CycleRatios x = ref::random_ratios_above_one(rng, 4);
    const Rational &x1 = x(1), &x2 = x(2), &x3 = x(3), &x4 = x(4);
    const Rational expected = pow(x1 * x2 * x3 * x4 - one, 3) /
                              ((one + x1 + x1 * x2 + x1 * x2 * x3) * (one + x2 + x2 * x3 + x2 * x3 * x4) *
                               (one + x3 + x3 * x4 + x3 * x4 * x1) * (one + x4 + x4 * x1 + x4 * x1 * x2));
    EXPECT_EQ(closed_form_volume(x), expected);
  }
}

TEST(ClosedForm, DenominatorFactorsAreNTermSums) {
  // The five factors of the displayed n = 5 closed form, written out.
  std::mt19937_64 rng(33);
  const CycleRatios x = ref::random_ratios(rng, 5);
  const Rational one(1);
  const Rational &x1 = x(1), &x2 = x(2), &x3 = x(3), &x4 = x(4), &x5 = x(5);
  EXPECT_EQ(cycle_prefix_sum(x, 1, 4), one + x1 + x1 * x2 + x1 * x2 * x3 + x1 * x2 * x3 * x4);
  EXPECT_EQ(cycle_prefix_sum(x, 2, 4), one + x2 + x2 * x3 + x2 * x3 * x4 + x2 * x3 * x4 * x5);
  EXPECT_EQ(cycle_prefix_sum(x, 3, 4), one + x3 + x3 * x4 + x3 * x4 * x5 + x3 * x4 * x5 * x1);
  EXPECT_EQ(cycle_prefix_sum(x, 4, 4), one + x4 + x4 * x5 + x4 * x5 * x1 + x4 * x5 * x1 * x2);
  EXPECT_EQ(cycle_prefix_sum(x, 5, 4), one + x5 + x5 * x1 + x5 * x1 * x2 + x5 * x1 * x2 * x3);
  Rational den(1);
  for (int k = 1; k <= 5; ++k) den *= cycle_prefix_sum(x, k, 4);
  EXPECT_EQ(closed_form_expression(x), pow(x1 * x2 * x3 * x4 * x5 - one, 4) / den);
}

// ---------------------------------------------------------------------------
// Central volume across regimes

TEST(CentralVolume, Examples) {
  const VolumeReport ceva = central_volume(ones(3));
  EXPECT_EQ(ceva.value, Rational(0));
  EXPECT_EQ(ceva.product_regime, ProductRegime::eq1);

  const VolumeReport half = central_volume(CycleRatios::uniform(4, Rational(1, 2)));
  EXPECT_EQ(half.value, Rational(1, 15));
  EXPECT_EQ(half.product_regime, ProductRegime::lt1);
  EXPECT_EQ(half.method, Method::closed_form);
  EXPECT_EQ(half.n, 4);

  // (k-1)^n / (k^n - 1) at k = 3, n = 6: 64/728.
  EXPECT_EQ(central_volume(CycleRatios::uniform(6, Rational(3))).value, Rational(8, 91));
}

TEST(CentralVolumeProperty, RotationAndReversalInvariance) {
  std::mt19937_64 rng(41);
  for (int n = 3; n <= 8; ++n) {
    for (int trial = 0; trial < 8; ++trial) {
      const CycleRatios x = ref::random_ratios(rng, n);
      const VolumeReport base = central_volume(x);
      EXPECT_GE(base.value.sign(), 0);
      EXPECT_EQ(base.product_regime, x.regime());
      for (int shift = 1; shift < n; ++shift) EXPECT_EQ(central_volume(x.rotated(shift)).value, base.value);
      EXPECT_EQ(central_volume(x.reversed_reciprocal()).value, base.value);
      // Below one the value is also |closed form expression|.
      EXPECT_EQ(base.value, closed_form_expression(x).abs());
    }
  }
}

TEST(CentralVolumeProperty, UnitProductCollapses) {
  std::mt19937_64 rng(42);
  for (int n = 3; n <= 8; ++n) {
    const CycleRatios x = ref::rescaled_to_unit_product(ref::random_ratios(rng, n));
    EXPECT_EQ(x.regime(), ProductRegime::eq1);
    EXPECT_EQ(central_volume(x).value, Rational(0));
    if (n >= 4) EXPECT_EQ(inclusion_exclusion_volume(x), Rational(0));
  }
}

// ---------------------------------------------------------------------------
// First-kind simplex

TEST(FirstKind, Examples) {
  EXPECT_EQ(first_kind_volume(CycleRatios::uniform(3, Rational(2))), Rational(1, 3));
  EXPECT_EQ(first_kind_volume(CycleRatios::uniform(4, Rational(2))), Rational(5, 27));
  EXPECT_EQ(first_kind_volume(ones(4)), Rational(0));
  EXPECT_EQ(first_kind_volume(ones(3)), Rational(1, 4));
  EXPECT_EQ(first_kind_volume(CycleRatios({Rational(1), Rational(2), Rational(3)})), Rational(7, 24));
}

TEST(FirstKindProperty, ZeroExactlyForEvenUnitProduct) {
  std::mt19937_64 rng(51);
  for (int n = 3; n <= 8; ++n) {
    for (int trial = 0; trial < 5; ++trial) {
      const CycleRatios x = ref::random_ratios(rng, n);
      const CycleRatios unit = ref::rescaled_to_unit_product(x);
      EXPECT_EQ(first_kind_volume(unit).is_zero(), n % 2 == 0);
      if (x.regime() != ProductRegime::eq1 || n % 2 == 1) EXPECT_FALSE(first_kind_volume(x).is_zero());
    }
  }
}

TEST(FirstKindProperty, TriangleMatchesClassicalFormula) {
  std::mt19937_64 rng(52);
  const Rational one(1);
  for (int trial = 0; trial < 30; ++trial) {
    const CycleRatios x = ref::random_ratios(rng, 3);
    EXPECT_EQ(first_kind_volume(x), (one + x.product()) / ((one + x(1)) * (one + x(2)) * (one + x(3))));
  }
}

// ---------------------------------------------------------------------------
// Equal ratios

TEST(EqualRatio, Examples) {
  EXPECT_EQ(equal_ratio_volume(3, Rational(2), SimplexKind::central), Rational(1, 7));
  EXPECT_EQ(equal_ratio_volume(4, Rational(2), SimplexKind::first_kind), Rational(5, 27));
  EXPECT_EQ(equal_ratio_volume(3, Rational(2), SimplexKind::first_kind), Rational(1, 3));
  EXPECT_EQ(equal_ratio_volume(5, Rational(2), SimplexKind::central), Rational(1, 31));
  EXPECT_EQ(equal_ratio_volume(5, Rational(2), SimplexKind::central),
            inclusion_exclusion_volume(CycleRatios::uniform(5, Rational(2))));
  EXPECT_EQ(equal_ratio_volume(6, Rational(1), SimplexKind::central), Rational(0));
  EXPECT_EQ(equal_ratio_volume(3, Rational(3), SimplexKind::central), Rational(4, 13));
  EXPECT_THROW(equal_ratio_volume(2, Rational(2), SimplexKind::central), std::invalid_argument);
  EXPECT_THROW(equal_ratio_volume(4, Rational(0), SimplexKind::central), std::invalid_argument);
}

TEST(EqualRatioProperty, MatchesGeneralFormulas) {
  for (int n = 3; n <= 9; ++n) {
    for (const char* k : {"2", "3", "5/2", "1/2", "1/3", "7/5", "1"}) {
      const CycleRatios x = CycleRatios::uniform(n, R(k));
      EXPECT_EQ(equal_ratio_volume(n, R(k), SimplexKind::central), central_volume(x).value) << n << " " << k;
      EXPECT_EQ(equal_ratio_volume(n, R(k), SimplexKind::first_kind), first_kind_volume(x)) << n << " " << k;
    }
  }
}

TEST(EqualRatioProperty, PrintedLawHoldsOnlyAtTwo) {
  // |k-1|/(k^n-1) coincides with the general closed form when |k-1| = 1.
  for (int n = 3; n <= 8; ++n) {
    const Rational k(2);
    const Rational printed = (k - Rational(1)).abs() / (pow(k, static_cast<unsigned>(n)) - Rational(1));
    EXPECT_EQ(printed, central_volume(CycleRatios::uniform(n, k)).value);
    const Rational k3(3);
    const Rational printed3 = Rational(2) / (pow(k3, static_cast<unsigned>(n)) - Rational(1));
    EXPECT_NE(printed3, central_volume(CycleRatios::uniform(n, k3)).value);
  }
}
