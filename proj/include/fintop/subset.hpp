#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace fintop {

/// Largest supported point count. Every subset fits one 16-bit word.
inline constexpr int kMaxPoints = 16;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: stray bits, out-of-range points, non-topologies.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A requested enumeration or search exceeds its configured size budget.
class BudgetError : public Error {
 public:
  using Error::Error;
};

using Mask = std::uint16_t;

inline constexpr Mask full_mask(int n) {
  return n >= kMaxPoints ? Mask{0xFFFF} : static_cast<Mask>((1u << n) - 1u);
}

/// A subset of the point set {0, ..., n-1}, stored as a bit vector.
class Subset {
 public:
  constexpr Subset() = default;

  Subset(int n, std::uint32_t bits) : bits_(static_cast<Mask>(bits)), n_(static_cast<std::uint8_t>(n)) {
    if (n < 0 || n > kMaxPoints) throw InputError("point count out of range: " + std::to_string(n));
    if ((bits & ~std::uint32_t{full_mask(n)}) != 0)
      throw InputError("subset has bits outside 0.." + std::to_string(n - 1));
  }

  static Subset empty(int n) { return Subset(n, 0); }
  static Subset full(int n) { return Subset(n, full_mask(n)); }
  static Subset singleton(int n, int x) {
    if (x < 0 || x >= n) throw InputError("point out of range: " + std::to_string(x));
    return Subset(n, 1u << x);
  }
  static Subset of(int n, std::initializer_list<int> points) {
    std::uint32_t bits = 0;
    for (int x : points) {
      if (x < 0 || x >= n) throw InputError("point out of range: " + std::to_string(x));
      bits |= 1u << x;
    }
    return Subset(n, bits);
  }

  constexpr Mask bits() const { return bits_; }
  constexpr int universe() const { return n_; }
  constexpr int count() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool is_full() const { return bits_ == full_mask(n_); }
  constexpr bool contains(int x) const { return x >= 0 && x < n_ && ((bits_ >> x) & 1u) != 0; }
  constexpr bool subset_of(Subset other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool meets(Subset other) const { return (bits_ & other.bits_) != 0; }

  Subset complement() const { return raw(n_, static_cast<Mask>(~bits_ & full_mask(n_))); }

  std::vector<int> points() const {
    std::vector<int> out;
    for (Mask b = bits_; b != 0; b &= static_cast<Mask>(b - 1)) out.push_back(std::countr_zero(b));
    return out;
  }

  friend Subset operator|(Subset a, Subset b) { return raw(a.n_, static_cast<Mask>(a.bits_ | b.bits_)); }
  friend Subset operator&(Subset a, Subset b) { return raw(a.n_, static_cast<Mask>(a.bits_ & b.bits_)); }
  friend Subset operator-(Subset a, Subset b) { return raw(a.n_, static_cast<Mask>(a.bits_ & ~b.bits_)); }
  Subset& operator|=(Subset o) { bits_ |= o.bits_; return *this; }
  Subset& operator&=(Subset o) { bits_ &= o.bits_; return *this; }

  friend constexpr bool operator==(Subset, Subset) = default;
  /// Canonical order: by numeric value of the bit vector.
  friend constexpr std::strong_ordering operator<=>(Subset a, Subset b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.bits_ <=> b.bits_;
  }

  /// Unchecked construction for hot paths that already mask their bits.
  static constexpr Subset raw(int n, Mask bits) {
    Subset s;
    s.bits_ = bits;
    s.n_ = static_cast<std::uint8_t>(n);
    return s;
  }

 private:
  Mask bits_ = 0;
  std::uint8_t n_ = 0;
};

/// Letters for the first 16 points: 0 -> a, 1 -> b, ...
inline char point_letter(int x) { return static_cast<char>('a' + x); }

/// "{a,b}" style rendering; the full set renders as "X" when `name_full` is set.
std::string to_letters(Subset s, bool name_full = false);

}  // namespace fintop
