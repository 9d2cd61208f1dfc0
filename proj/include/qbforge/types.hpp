#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace qbforge {

// Carrier elements are small integer indices; subsets are bitmasks over them.
using Mask = std::uint32_t;

// Largest carrier the bitmask representation is dimensioned for.
inline constexpr int kMaxCarrier = 16;

// Default guard for operations that enumerate the full family of upper sets.
inline constexpr std::size_t kDefaultUpperSetCap = 4096;

constexpr Mask bit(int x) { return Mask{1} << x; }
constexpr bool has_bit(Mask m, int x) { return (m >> x) & 1u; }
constexpr int popcount(Mask m) { return std::popcount(m); }

/// An upward closed subset of a carrier, stored as a bitmask.
/// Which poset it is upward closed in is supplied by context.
struct UpperSet {
  Mask bits = 0;

  constexpr bool contains(int x) const { return has_bit(bits, x); }
  constexpr bool empty() const { return bits == 0; }
  constexpr int size() const { return popcount(bits); }
  constexpr bool subset_of(UpperSet o) const { return (bits & ~o.bits) == 0; }

  friend constexpr bool operator==(UpperSet, UpperSet) = default;

  friend constexpr UpperSet operator&(UpperSet a, UpperSet b) {
    return UpperSet{a.bits & b.bits};
  }
  friend constexpr UpperSet operator|(UpperSet a, UpperSet b) {
    return UpperSet{a.bits | b.bits};
  }
};

/// Orders upper sets by cardinality first, then by bitmask value.  All
/// enumerations and reports list sets in this order.
struct UpperSetLess {
  constexpr bool operator()(UpperSet a, UpperSet b) const {
    const int pa = popcount(a.bits), pb = popcount(b.bits);
    return pa != pb ? pa < pb : a.bits < b.bits;
  }
};

/// Domain error with a stable machine-readable code ("cap_exceeded",
/// "not_transitive", ...) alongside the human message.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

}  // namespace qbforge
