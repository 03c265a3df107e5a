#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace topolab {

// Largest supported ground set. A PointSet fits in one machine word.
inline constexpr int kMaxPoints = 16;

// A subset of the ground set {0, ..., n-1}. Bit x is set iff x is a member.
// The ground-set size is not stored; it belongs to the owning space.
class PointSet {
 public:
  constexpr PointSet() = default;
  constexpr explicit PointSet(std::uint32_t bits) : bits_(bits) {}

  static constexpr PointSet full(int n) {
    return PointSet(n >= 32 ? ~std::uint32_t{0} : ((std::uint32_t{1} << n) - 1u));
  }
  static constexpr PointSet singleton(int x) { return PointSet(std::uint32_t{1} << x); }
  static constexpr PointSet of(std::initializer_list<int> xs) {
    std::uint32_t b = 0;
    for (int x : xs) b |= std::uint32_t{1} << x;
    return PointSet(b);
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int x) const { return (bits_ >> x) & 1u; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool subset_of(PointSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool meets(PointSet o) const { return (bits_ & o.bits_) != 0; }
  constexpr PointSet complement(int n) const { return PointSet(~bits_ & full(n).bits_); }

  constexpr PointSet operator|(PointSet o) const { return PointSet(bits_ | o.bits_); }
  constexpr PointSet operator&(PointSet o) const { return PointSet(bits_ & o.bits_); }
  constexpr PointSet operator-(PointSet o) const { return PointSet(bits_ & ~o.bits_); }
  constexpr PointSet operator^(PointSet o) const { return PointSet(bits_ ^ o.bits_); }
  constexpr PointSet& operator|=(PointSet o) { bits_ |= o.bits_; return *this; }
  constexpr PointSet& operator&=(PointSet o) { bits_ &= o.bits_; return *this; }

  constexpr bool operator==(const PointSet&) const = default;
  constexpr auto operator<=>(const PointSet&) const = default;

  // Calls f(x) for each member in increasing order.
  template <class F>
  constexpr void for_each(F&& f) const {
    for (std::uint32_t b = bits_; b != 0; b &= b - 1) f(std::countr_zero(b));
  }

  std::vector<int> points() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for_each([&](int x) { out.push_back(x); });
    return out;
  }

 private:
  std::uint32_t bits_ = 0;
};

// Calls f(subset) for every subset of {0..n-1}, in increasing bit order.
template <class F>
constexpr void for_each_subset(int n, F&& f) {
  const std::uint32_t end = std::uint32_t{1} << n;
  for (std::uint32_t b = 0; b < end; ++b) f(PointSet(b));
}

// Calls f(subset) for every subset of `s` (including empty and s itself).
template <class F>
constexpr void for_each_subset_of(PointSet s, F&& f) {
  std::uint32_t sub = s.bits();
  while (true) {
    f(PointSet(sub));
    if (sub == 0) break;
    sub = (sub - 1) & s.bits();
  }
}

}  // namespace topolab
