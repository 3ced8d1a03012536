#pragma once

// Index sets and set-partition enumeration.
//
// Variable indices are positive integers 1..IndexSet::kMaxIndex stored as a
// 64-bit mask. Enumeration order is fixed: part count first, then
// lexicographic on the ascending member lists of the parts.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "partzeta/integer.hpp"

namespace partzeta {

class IndexSet {
 public:
  static constexpr unsigned kMaxIndex = 63;

  constexpr IndexSet() = default;
  IndexSet(std::initializer_list<unsigned> members);
  explicit IndexSet(const std::vector<unsigned>& members);

  /// {1, ..., n}
  static IndexSet range(unsigned n);
  static constexpr IndexSet from_mask(std::uint64_t mask) {
    IndexSet s;
    s.mask_ = mask & ~std::uint64_t{1};
    return s;
  }

  std::uint64_t mask() const noexcept { return mask_; }
  bool empty() const noexcept { return mask_ == 0; }
  unsigned size() const noexcept;
  bool contains(unsigned index) const noexcept;
  /// Smallest member; undefined on the empty set.
  unsigned min() const noexcept;
  /// Largest member; undefined on the empty set.
  unsigned max() const noexcept;
  std::vector<unsigned> members() const;

  /// Position of `index` among the ascending members (0-based).
  unsigned rank_of(unsigned index) const noexcept;

  bool intersects(IndexSet other) const noexcept { return (mask_ & other.mask_) != 0; }
  bool is_subset_of(IndexSet other) const noexcept { return (mask_ & ~other.mask_) == 0; }
  bool is_contiguous_from_one() const noexcept;

  IndexSet operator|(IndexSet other) const noexcept { return from_mask(mask_ | other.mask_); }
  IndexSet operator&(IndexSet other) const noexcept { return from_mask(mask_ & other.mask_); }
  IndexSet operator-(IndexSet other) const noexcept { return from_mask(mask_ & ~other.mask_); }
  IndexSet& operator|=(IndexSet other) noexcept {
    mask_ |= other.mask_;
    return *this;
  }

  bool operator==(const IndexSet&) const = default;
  /// Lexicographic on the ascending member lists; a proper prefix sorts first.
  std::strong_ordering operator<=>(const IndexSet& other) const noexcept;

  /// "{1,3,4}"
  std::string to_string() const;

 private:
  std::uint64_t mask_ = 0;
};

struct OrderedPartition {
  std::vector<IndexSet> parts;

  IndexSet ground() const;
  /// Parts non-empty, pairwise disjoint, and covering `ground`.
  bool is_partition_of(IndexSet ground) const;

  bool operator==(const OrderedPartition&) const = default;
  /// Part count, then lexicographic on parts.
  std::strong_ordering operator<=>(const OrderedPartition& other) const;
};

struct UnorderedPartition {
  /// Sorted by smallest element.
  std::vector<IndexSet> parts;

  static UnorderedPartition from_parts(std::vector<IndexSet> parts);
  IndexSet ground() const;
  bool is_partition_of(IndexSet ground) const;

  bool operator==(const UnorderedPartition&) const = default;
  std::strong_ordering operator<=>(const UnorderedPartition& other) const;
};

std::vector<OrderedPartition> ordered_set_partitions(IndexSet ground);
std::vector<UnorderedPartition> unordered_set_partitions(IndexSet ground);
/// All n! orderings of the members of `ground`, lexicographic.
std::vector<std::vector<unsigned>> permutations(IndexSet ground);

/// Number of ordered set partitions of an n-set, by F(n) = sum_k C(n,k) F(n-k).
Integer fubini_count(unsigned n);
Integer binomial(unsigned n, unsigned k);
Integer factorial(unsigned n);

}  // namespace partzeta
