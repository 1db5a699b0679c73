#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

// Subsets of ground sets and lattice element sets are uint64_t bit masks.
// Everything in this library is capped at 64 elements.

namespace cycflat {

using Mask = std::uint64_t;

inline constexpr int kMaxElements = 64;

inline constexpr Mask bit(int i) { return Mask{1} << i; }

inline constexpr bool has_bit(Mask m, int i) { return (m >> i) & Mask{1}; }

inline constexpr Mask full_mask(int n) {
  return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

inline int popcount(Mask m) { return std::popcount(m); }

inline constexpr bool subset_of(Mask a, Mask b) { return (a & ~b) == 0; }

inline constexpr bool proper_subset_of(Mask a, Mask b) {
  return a != b && subset_of(a, b);
}

template <typename F>
void for_each_bit(Mask m, F&& f) {
  while (m) {
    f(std::countr_zero(m));
    m &= m - 1;
  }
}

inline std::vector<int> bits_of(Mask m) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(popcount(m)));
  for_each_bit(m, [&](int i) { out.push_back(i); });
  return out;
}

inline Mask mask_of(const std::vector<int>& bits) {
  Mask m = 0;
  for (int b : bits) m |= bit(b);
  return m;
}

// "{0,2,5}" with elements in increasing order; "{}" for the empty set.
inline std::string set_to_string(Mask m) {
  std::string s = "{";
  bool first = true;
  for_each_bit(m, [&](int i) {
    if (!first) s += ',';
    s += std::to_string(i);
    first = false;
  });
  s += '}';
  return s;
}

}  // namespace cycflat
