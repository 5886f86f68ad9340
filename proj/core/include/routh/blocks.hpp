#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace routh {

/// Largest cycle length a 64-bit index set can describe.
inline constexpr int kMaxCycleLength = 64;

/// A subset of the cycle indices {1..n}, stored as an n-bit mask where bit
/// (i - 1) stands for index i.
class IndexSet {
 public:
  IndexSet(int n, std::uint64_t mask);
  static IndexSet of(int n, std::span<const int> indices);
  static IndexSet of(int n, std::initializer_list<int> indices);

  int cycle_length() const { return n_; }
  std::uint64_t mask() const { return mask_; }
  bool contains(long index) const;
  int size() const;
  bool empty() const { return mask_ == 0; }
  bool full() const;
  std::vector<int> indices() const;

  friend bool operator==(const IndexSet&, const IndexSet&) = default;

 private:
  int n_;
  std::uint64_t mask_;
};

std::uint64_t full_mask(int n);

/// A maximal run {start, start+1, ..., start+length-1} of a subset, taken
/// cyclically, so start 6 and length 3 on a 6-cycle is {6, 1, 2}.
struct Block {
  int start = 1;
  int length = 1;

  /// Member indices in cyclic order, each reduced into 1..n.
  std::vector<int> indices(int n) const;

  friend bool operator==(const Block&, const Block&) = default;
};

/// The blocks of a proper subset, pairwise non-adjacent, sorted by start.
/// A block that wraps through n to 1 is keyed by its cyclic start.
using BlockDecomposition = std::vector<Block>;

/// Splits a proper nonempty subset into its maximal cyclic runs.
/// Throws std::invalid_argument for the empty set or the full set.
BlockDecomposition cyclic_blocks(const IndexSet& subset);

}  // namespace routh
