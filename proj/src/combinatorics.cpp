#include "partzeta/combinatorics.hpp"

#include <algorithm>
#include <bit>

#include "partzeta/error.hpp"

namespace partzeta {

namespace {

std::uint64_t bit(unsigned index) { return std::uint64_t{1} << index; }

void check_index(unsigned index) {
  if (index == 0 || index > IndexSet::kMaxIndex) {
    throw Error("variable index " + std::to_string(index) + " out of range 1.." +
                std::to_string(IndexSet::kMaxIndex));
  }
}

void require_non_empty(IndexSet ground) {
  if (ground.empty()) throw Error("empty ground set");
}

template <typename Parts>
bool parts_form_partition(const Parts& parts, IndexSet ground) {
  IndexSet seen;
  for (IndexSet p : parts) {
    if (p.empty() || p.intersects(seen)) return false;
    seen |= p;
  }
  return !parts.empty() && seen == ground;
}

std::strong_ordering compare_parts(const std::vector<IndexSet>& a, const std::vector<IndexSet>& b) {
  if (a.size() != b.size()) return a.size() <=> b.size();
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

// Every non-empty subset of `rest` may be the first part; recurse on the remainder.
void ordered_rec(IndexSet rest, std::vector<IndexSet>& prefix, std::vector<OrderedPartition>& out) {
  if (rest.empty()) {
    out.push_back(OrderedPartition{prefix});
    return;
  }
  const std::uint64_t full = rest.mask();
  for (std::uint64_t sub = full; sub != 0; sub = (sub - 1) & full) {
    prefix.push_back(IndexSet::from_mask(sub));
    ordered_rec(IndexSet::from_mask(full & ~sub), prefix, out);
    prefix.pop_back();
  }
}

// Restricted-growth assignment of members to blocks.
void unordered_rec(const std::vector<unsigned>& members, std::size_t pos,
                   std::vector<IndexSet>& blocks, std::vector<UnorderedPartition>& out) {
  if (pos == members.size()) {
    out.push_back(UnorderedPartition::from_parts(blocks));
    return;
  }
  const IndexSet single{members[pos]};
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const IndexSet saved = blocks[b];
    blocks[b] |= single;
    unordered_rec(members, pos + 1, blocks, out);
    blocks[b] = saved;
  }
  blocks.push_back(single);
  unordered_rec(members, pos + 1, blocks, out);
  blocks.pop_back();
}

}  // namespace

IndexSet::IndexSet(std::initializer_list<unsigned> members) {
  for (unsigned m : members) {
    check_index(m);
    mask_ |= bit(m);
  }
}

IndexSet::IndexSet(const std::vector<unsigned>& members) {
  for (unsigned m : members) {
    check_index(m);
    mask_ |= bit(m);
  }
}

IndexSet IndexSet::range(unsigned n) {
  if (n > kMaxIndex) throw Error("universe size " + std::to_string(n) + " exceeds 63");
  IndexSet s;
  for (unsigned i = 1; i <= n; ++i) s.mask_ |= bit(i);
  return s;
}

unsigned IndexSet::size() const noexcept { return static_cast<unsigned>(std::popcount(mask_)); }

bool IndexSet::contains(unsigned index) const noexcept {
  return index >= 1 && index <= kMaxIndex && (mask_ & bit(index)) != 0;
}

unsigned IndexSet::min() const noexcept { return static_cast<unsigned>(std::countr_zero(mask_)); }

unsigned IndexSet::max() const noexcept { return 63u - static_cast<unsigned>(std::countl_zero(mask_)); }

std::vector<unsigned> IndexSet::members() const {
  std::vector<unsigned> out;
  out.reserve(size());
  for (std::uint64_t m = mask_; m != 0; m &= m - 1) {
    out.push_back(static_cast<unsigned>(std::countr_zero(m)));
  }
  return out;
}

unsigned IndexSet::rank_of(unsigned index) const noexcept {
  return static_cast<unsigned>(std::popcount(mask_ & (bit(index) - 1)));
}

bool IndexSet::is_contiguous_from_one() const noexcept { return *this == range(size()); }

std::strong_ordering IndexSet::operator<=>(const IndexSet& other) const noexcept {
  const std::uint64_t diff = mask_ ^ other.mask_;
  if (diff == 0) return std::strong_ordering::equal;
  const unsigned p = static_cast<unsigned>(std::countr_zero(diff));
  const std::uint64_t above = ~((bit(p) << 1) - 1);
  // Members below p agree. The side holding p is smaller unless the other
  // side has nothing further, in which case that side is a proper prefix.
  if (mask_ & bit(p)) {
    return (other.mask_ & above) ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return (mask_ & above) ? std::strong_ordering::greater : std::strong_ordering::less;
}

std::string IndexSet::to_string() const {
  std::string s = "{";
  bool first = true;
  for (unsigned m : members()) {
    if (!first) s += ',';
    s += std::to_string(m);
    first = false;
  }
  return s + "}";
}

IndexSet OrderedPartition::ground() const {
  IndexSet g;
  for (IndexSet p : parts) g |= p;
  return g;
}

bool OrderedPartition::is_partition_of(IndexSet ground) const { return parts_form_partition(parts, ground); }

std::strong_ordering OrderedPartition::operator<=>(const OrderedPartition& other) const {
  return compare_parts(parts, other.parts);
}

UnorderedPartition UnorderedPartition::from_parts(std::vector<IndexSet> parts) {
  std::sort(parts.begin(), parts.end(), [](IndexSet a, IndexSet b) { return a.min() < b.min(); });
  return UnorderedPartition{std::move(parts)};
}

IndexSet UnorderedPartition::ground() const {
  IndexSet g;
  for (IndexSet p : parts) g |= p;
  return g;
}

bool UnorderedPartition::is_partition_of(IndexSet ground) const { return parts_form_partition(parts, ground); }

std::strong_ordering UnorderedPartition::operator<=>(const UnorderedPartition& other) const {
  return compare_parts(parts, other.parts);
}

std::vector<OrderedPartition> ordered_set_partitions(IndexSet ground) {
  require_non_empty(ground);
  std::vector<OrderedPartition> out;
  std::vector<IndexSet> prefix;
  ordered_rec(ground, prefix, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<UnorderedPartition> unordered_set_partitions(IndexSet ground) {
  require_non_empty(ground);
  std::vector<UnorderedPartition> out;
  std::vector<IndexSet> blocks;
  unordered_rec(ground.members(), 0, blocks, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<unsigned>> permutations(IndexSet ground) {
  require_non_empty(ground);
  std::vector<unsigned> current = ground.members();
  std::vector<std::vector<unsigned>> out;
  do {
    out.push_back(current);
  } while (std::next_permutation(current.begin(), current.end()));
  return out;
}

Integer binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  Integer r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

Integer factorial(unsigned n) {
  Integer r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

Integer fubini_count(unsigned n) {
  if (n == 0) throw Error("fubini_count requires n >= 1");
  std::vector<Integer> f(n + 1);
  f[0] = 1;
  for (unsigned m = 1; m <= n; ++m) {
    for (unsigned k = 1; k <= m; ++k) f[m] += binomial(m, k) * f[m - k];
  }
  return f[n];
}

}  // namespace partzeta
