#pragma once

// Position sets over {1..32} packed into a 32-bit mask; position p lives in
// bit p-1. Every set-valued quantity in the library (cube vertices, edge
// ones-sets, hyperedges, anchors) uses this encoding.

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace cuberep {

using PositionSet = std::uint32_t;

inline constexpr int kMaxPositions = 32;

constexpr PositionSet position_bit(int position) {
  return PositionSet{1} << (position - 1);
}

constexpr bool contains_position(PositionSet set, int position) {
  return (set & position_bit(position)) != 0;
}

constexpr int set_size(PositionSet set) { return std::popcount(set); }

/// All positions {1..n}.
constexpr PositionSet full_set(int n) {
  return n >= 32 ? ~PositionSet{0} : (PositionSet{1} << n) - 1;
}

std::vector<int> positions_of(PositionSet set);
PositionSet set_of(const std::vector<int>& positions);

template <typename F>
void for_each_position(PositionSet set, F&& f) {
  while (set != 0) {
    f(std::countr_zero(set) + 1);
    set &= set - 1;
  }
}

/// Lexicographic comparison of the sorted position lists of `a` and `b`.
/// The empty set sorts first; {1,2} < {1,3} < {2}.
std::strong_ordering compare_sets(PositionSet a, PositionSet b);

inline bool set_less(PositionSet a, PositionSet b) {
  return compare_sets(a, b) < 0;
}

/// Next mask with the same popcount (Gosper's hack). Undefined for 0.
constexpr PositionSet next_same_size(PositionSet x) {
  const PositionSet c = x & (~x + 1);
  const PositionSet r = x + c;
  return (((r ^ x) >> 2) / c) | r;
}

/// Calls f(subset) for every `size`-subset of `set`, in increasing numeric
/// order of the packed mask.
template <typename F>
void for_each_subset_of_size(PositionSet set, int size, F&& f) {
  const int total = set_size(set);
  if (size < 0 || size > total) return;
  if (size == 0) {
    f(PositionSet{0});
    return;
  }
  std::vector<int> pos = positions_of(set);
  // Enumerate index masks over |set| bits, then scatter.
  PositionSet idx = full_set(size);
  const PositionSet limit = total >= 32 ? 0 : PositionSet{1} << total;
  while (true) {
    PositionSet out = 0;
    for_each_position(idx, [&](int i) { out |= position_bit(pos[i - 1]); });
    f(out);
    if (total == size) break;
    const PositionSet next = next_same_size(idx);
    if (limit != 0 && next >= limit) break;
    if (next <= idx) break;
    idx = next;
  }
}

/// "{1,3,4}".
std::string render_set(PositionSet set);

}  // namespace cuberep
