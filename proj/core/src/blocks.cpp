#include "routh/blocks.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace routh {

std::uint64_t full_mask(int n) {
  if (n < 1 || n > kMaxCycleLength) {
    throw std::invalid_argument("cycle length must be in 1.." + std::to_string(kMaxCycleLength));
  }
  return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

IndexSet::IndexSet(int n, std::uint64_t mask) : n_(n), mask_(mask) {
  if ((mask & ~full_mask(n)) != 0) {
    throw std::invalid_argument("index set mask has bits beyond n = " + std::to_string(n));
  }
}

IndexSet IndexSet::of(int n, std::span<const int> indices) {
  std::uint64_t mask = 0;
  for (int i : indices) {
    if (i < 1 || i > n) {
      throw std::invalid_argument("index " + std::to_string(i) + " outside 1.." + std::to_string(n));
    }
    mask |= std::uint64_t{1} << (i - 1);
  }
  return IndexSet(n, mask);
}

IndexSet IndexSet::of(int n, std::initializer_list<int> indices) {
  return of(n, std::span<const int>(indices.begin(), indices.size()));
}

bool IndexSet::contains(long index) const {
  long r = (index - 1) % n_;
  if (r < 0) r += n_;
  return ((mask_ >> r) & 1U) != 0;
}

int IndexSet::size() const { return std::popcount(mask_); }

bool IndexSet::full() const { return mask_ == full_mask(n_); }

std::vector<int> IndexSet::indices() const {
  std::vector<int> out;
  for (int i = 1; i <= n_; ++i) {
    if (contains(i)) out.push_back(i);
  }
  return out;
}

std::vector<int> Block::indices(int n) const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(length));
  for (int k = 0; k < length; ++k) out.push_back((start - 1 + k) % n + 1);
  return out;
}

BlockDecomposition cyclic_blocks(const IndexSet& subset) {
  if (subset.empty()) throw std::invalid_argument("cyclic_blocks: subset is empty");
  if (subset.full()) throw std::invalid_argument("cyclic_blocks: subset is the whole cycle");

  const int n = subset.cycle_length();
  // Start scanning just after a gap so no run is split by the scan origin.
  int gap = 1;
  while (subset.contains(gap)) ++gap;

  BlockDecomposition blocks;
  for (int step = 1; step <= n; ++step) {
    const int i = (gap - 1 + step) % n + 1;
    if (!subset.contains(i)) continue;
    if (!subset.contains(i - 1)) {
      blocks.push_back(Block{i, 1});
    } else {
      ++blocks.back().length;
    }
  }
  std::sort(blocks.begin(), blocks.end(),
            [](const Block& a, const Block& b) { return a.start < b.start; });
  return blocks;
}

}  // namespace routh
