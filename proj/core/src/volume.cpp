#include "routh/volume.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>

namespace routh {
namespace {

void require_index_range(const char* name, int j, int lo, int hi) {
  if (j < lo || j > hi) {
    throw std::out_of_range(std::string(name) + ": j = " + std::to_string(j) + " outside " +
                            std::to_string(lo) + ".." + std::to_string(hi));
  }
}

// Adds terms in a balanced binary tree. Sequential accumulation would add
// every small term to an ever-growing running total; pairing keeps operands
// of similar size.
class PairwiseSum {
 public:
  void add(mpq_class term) {
    for (auto& slot : levels_) {
      if (!slot) {
        slot = std::move(term);
        return;
      }
      term += *slot;
      slot.reset();
    }
    levels_.emplace_back(std::move(term));
  }

  mpq_class total() const {
    mpq_class sum(0);
    for (const auto& slot : levels_) {
      if (slot) sum += *slot;
    }
    return sum;
  }

 private:
  std::vector<std::optional<mpq_class>> levels_;
};

// Signed sum of the subset products for masks in [first, last).
mpq_class sweep_subsets(const BlockValueTable& table, std::uint64_t first, std::uint64_t last) {
  const int n = table.cycle_length();
  const std::uint64_t all = full_mask(n);
  PairwiseSum sum;
  mpq_class term;
  for (std::uint64_t mask = first; mask < last; ++mask) {
    // Rotate so the lowest missing index lands on the top bit; runs then
    // never wrap and can be peeled off with bit scans.
    const int gap = std::countr_zero(~mask & all);
    const int shift = gap + 1;
    std::uint64_t rot = shift == n ? mask : ((mask >> shift) | (mask << (n - shift))) & all;

    bool first_block = true;
    while (rot != 0) {
      const int s = std::countr_zero(rot);
      const int len = std::countr_one(rot >> s);
      const int start = (s + shift) % n + 1;
      if (first_block) {
        term = table(start, len).raw();
        first_block = false;
      } else {
        term *= table(start, len).raw();
      }
      rot &= ~(((std::uint64_t{1} << len) - 1) << s);
    }
    if (std::popcount(mask) % 2 != 0) term = -term;
    sum.add(term);
  }
  return sum.total();
}

}  // namespace

std::string to_string(Method method) {
  switch (method) {
    case Method::closed_form: return "closed_form";
    case Method::inclusion_exclusion: return "inclusion_exclusion";
    case Method::oracle: return "oracle";
    case Method::first_kind: return "first_kind";
  }
  return "unknown";
}

Rational cycle_prefix_product(const CycleRatios& x, long k, int count) {
  Rational p(1);
  for (int a = 0; a < count; ++a) p *= x(k + a);
  return p;
}

Rational cycle_prefix_sum(const CycleRatios& x, long k, int terms) {
  Rational sum(1);
  Rational p(1);
  for (int b = 0; b < terms; ++b) {
    p *= x(k + b);
    sum += p;
  }
  return sum;
}

Rational ratio_v(const CycleRatios& x, long i, int j) {
  require_index_range("ratio_v", j, 2, x.size() - 1);
  return cycle_prefix_sum(x, i, j) - Rational(1);
}

Rational ratio_u(const CycleRatios& x, long i, int j) {
  require_index_range("ratio_u", j, 2, x.size() - 1);
  return cycle_prefix_product(x, i + 1, j) / cycle_prefix_sum(x, i + 1, j - 1);
}

Rational ratio_t(const CycleRatios& x, long i, int j) {
  require_index_range("ratio_t", j, 1, x.size() - 1);
  return cycle_prefix_product(x, i, j) / cycle_prefix_sum(x, i, j);
}

Rational block_value(const CycleRatios& x, const Block& block) {
  if (block.length < 1 || block.length > x.size() - 1) {
    throw std::invalid_argument("block length " + std::to_string(block.length) +
                                " outside 1.." + std::to_string(x.size() - 1));
  }
  Rational value(1);
  Rational prefix(1);
  Rational denominator(1);
  for (int j = 0; j < block.length; ++j) {
    prefix *= x(block.start + j);
    denominator += prefix;
    value *= prefix / denominator;
  }
  return value;
}

BlockValueTable::BlockValueTable(const CycleRatios& x) : n_(x.size()) {
  const auto width = static_cast<std::size_t>(n_ - 1);
  values_.resize(static_cast<std::size_t>(n_) * width);
  for (int start = 1; start <= n_; ++start) {
    Rational value(1);
    Rational prefix(1);
    Rational denominator(1);
    for (int len = 1; len <= n_ - 1; ++len) {
      prefix *= x(start + len - 1);
      denominator += prefix;
      value *= prefix / denominator;
      values_[static_cast<std::size_t>(start - 1) * width + static_cast<std::size_t>(len - 1)] = value;
    }
  }
}

const Rational& BlockValueTable::operator()(int start, int length) const {
  return values_[static_cast<std::size_t>(start - 1) * static_cast<std::size_t>(n_ - 1) +
                 static_cast<std::size_t>(length - 1)];
}

Rational subset_volume(const CycleRatios& x, const IndexSet& subset) {
  if (subset.cycle_length() != x.size()) {
    throw std::invalid_argument("subset is over a cycle of different length");
  }
  Rational volume(1);
  for (const Block& block : cyclic_blocks(subset)) volume *= block_value(x, block);
  return volume;
}

Rational inclusion_exclusion_sum(const CycleRatios& x, const InclusionExclusionOptions& options) {
  const int n = x.size();
  if (n < 4) throw std::invalid_argument("inclusion-exclusion requires n >= 4");
  if (n >= kMaxCycleLength) throw std::invalid_argument("inclusion-exclusion requires n < 64");

  const BlockValueTable table(x);
  const std::uint64_t all = full_mask(n);

  unsigned workers = options.workers == 0 ? std::max(1U, std::thread::hardware_concurrency())
                                          : options.workers;
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, all - 1));

  // Masks 1 .. all-1 split into contiguous chunks; partial sums are combined
  // in chunk order, and exact addition makes the result order-independent anyway.
  std::vector<mpq_class> partial(workers);
  const std::uint64_t count = all - 1;
  auto chunk_begin = [&](unsigned w) { return 1 + count * w / workers; };
  if (workers == 1) {
    partial[0] = sweep_subsets(table, 1, all);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      threads.emplace_back([&, w] { partial[w] = sweep_subsets(table, chunk_begin(w), chunk_begin(w + 1)); });
    }
    for (auto& t : threads) t.join();
  }

  mpq_class total(1);
  for (const auto& p : partial) total += p;
  return Rational(std::move(total));
}

Rational inclusion_exclusion_volume(const CycleRatios& x, const InclusionExclusionOptions& options) {
  Rational sum = inclusion_exclusion_sum(x, options);
  return x.size() % 2 == 0 ? -sum : sum;
}

Rational closed_form_expression(const CycleRatios& x) {
  const int n = x.size();
  Rational denominator(1);
  for (int k = 1; k <= n; ++k) denominator *= cycle_prefix_sum(x, k, n - 1);
  return pow(x.product() - Rational(1), static_cast<unsigned>(n - 1)) / denominator;
}

Rational closed_form_volume(const CycleRatios& x) {
  if (x.regime() == ProductRegime::lt1) {
    throw std::domain_error("closed_form_volume needs prod x >= 1; use central_volume");
  }
  return closed_form_expression(x);
}

VolumeReport central_volume(const CycleRatios& x) {
  VolumeReport report{Rational(0), Method::closed_form, x.size(), x, x.regime()};
  switch (report.product_regime) {
    case ProductRegime::eq1:
      break;
    case ProductRegime::gt1:
      report.value = closed_form_volume(x);
      break;
    case ProductRegime::lt1:
      report.value = closed_form_volume(x.reversed_reciprocal());
      break;
  }
  return report;
}

Rational first_kind_volume(const CycleRatios& x) {
  const Rational p = x.product();
  Rational numerator = x.size() % 2 == 0 ? Rational(1) - p : Rational(1) + p;
  Rational denominator(1);
  for (const auto& xi : x.values()) denominator *= Rational(1) + xi;
  return numerator.abs() / denominator;
}

Rational equal_ratio_volume(int n, const Rational& k, SimplexKind kind) {
  if (n < 3) throw std::invalid_argument("equal_ratio_volume requires n >= 3");
  if (k.sign() <= 0) throw std::invalid_argument("equal_ratio_volume requires k > 0");
  const auto e = static_cast<unsigned>(n);
  if (kind == SimplexKind::central) {
    if (k.is_one()) return Rational(0);
    return pow((k - Rational(1)).abs(), e) / (pow(k, e) - Rational(1)).abs();
  }
  const Rational sign = n % 2 == 0 ? Rational(-1) : Rational(1);
  return (pow(k, e) + sign).abs() / pow(k + Rational(1), e);
}

}  // namespace routh
