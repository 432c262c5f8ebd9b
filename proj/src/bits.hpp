#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace gmis {

// Fixed-width dynamic bitset used by the exact oracles.
struct Bits {
  std::vector<uint64_t> w;

  Bits() = default;
  explicit Bits(int n) : w((n + 63) / 64, 0) {}

  bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
  void set(int i) { w[i >> 6] |= uint64_t{1} << (i & 63); }
  void reset(int i) { w[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
  int count() const {
    int c = 0;
    for (auto x : w) c += std::popcount(x);
    return c;
  }
  bool any() const {
    for (auto x : w)
      if (x) return true;
    return false;
  }
  int count_and(const Bits& o) const {
    int c = 0;
    for (size_t i = 0; i < w.size(); ++i) c += std::popcount(w[i] & o.w[i]);
    return c;
  }
  // this ∩ mask ⊆ o
  bool subset_within(const Bits& o, const Bits& mask) const {
    for (size_t i = 0; i < w.size(); ++i)
      if (w[i] & mask.w[i] & ~o.w[i]) return false;
    return true;
  }
  void and_not(const Bits& o) {
    for (size_t i = 0; i < w.size(); ++i) w[i] &= ~o.w[i];
  }
  void or_with(const Bits& o) {
    for (size_t i = 0; i < w.size(); ++i) w[i] |= o.w[i];
  }
  void and_with(const Bits& o) {
    for (size_t i = 0; i < w.size(); ++i) w[i] &= o.w[i];
  }
  template <class F>
  void for_each(F f) const {
    for (size_t i = 0; i < w.size(); ++i)
      for (uint64_t x = w[i]; x; x &= x - 1) f(static_cast<int>(i * 64 + std::countr_zero(x)));
  }
  int first() const {
    for (size_t i = 0; i < w.size(); ++i)
      if (w[i]) return static_cast<int>(i * 64 + std::countr_zero(w[i]));
    return -1;
  }
  bool operator==(const Bits& o) const { return w == o.w; }
};

}  // namespace gmis
