#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <vector>

namespace unilat {

/// Index of an element in its lattice's declaration order.
using Elem = std::uint16_t;

/// Hard ceiling imposed by the 64-bit set representation.
inline constexpr std::size_t kMaxElements = 64;

/// Subset of a lattice's carrier, one bit per element. Iteration visits
/// members in declaration order.
class ElemSet {
 public:
  constexpr ElemSet() = default;
  constexpr explicit ElemSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr ElemSet all(std::size_t n) {
    return ElemSet(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
  }
  static constexpr ElemSet single(Elem x) { return ElemSet(std::uint64_t{1} << x); }

  constexpr bool contains(Elem x) const { return (bits_ >> x) & 1u; }
  constexpr void insert(Elem x) { bits_ |= std::uint64_t{1} << x; }
  constexpr void erase(Elem x) { bits_ &= ~(std::uint64_t{1} << x); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool subset_of(ElemSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(ElemSet other) const { return (bits_ & other.bits_) != 0; }
  constexpr Elem first() const { return static_cast<Elem>(std::countr_zero(bits_)); }

  friend constexpr ElemSet operator|(ElemSet a, ElemSet b) { return ElemSet(a.bits_ | b.bits_); }
  friend constexpr ElemSet operator&(ElemSet a, ElemSet b) { return ElemSet(a.bits_ & b.bits_); }
  /// Set difference.
  friend constexpr ElemSet operator-(ElemSet a, ElemSet b) { return ElemSet(a.bits_ & ~b.bits_); }
  constexpr ElemSet& operator|=(ElemSet o) { bits_ |= o.bits_; return *this; }
  constexpr ElemSet& operator&=(ElemSet o) { bits_ &= o.bits_; return *this; }
  constexpr ElemSet& operator-=(ElemSet o) { bits_ &= ~o.bits_; return *this; }
  friend constexpr bool operator==(ElemSet, ElemSet) = default;

  class iterator {
   public:
    using value_type = Elem;
    using difference_type = std::ptrdiff_t;
    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr Elem operator*() const { return static_cast<Elem>(std::countr_zero(rest_)); }
    constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
    constexpr iterator operator++(int) { auto t = *this; ++*this; return t; }
    friend constexpr bool operator==(iterator, iterator) = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<Elem> to_vector() const { return {begin(), end()}; }

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace unilat
