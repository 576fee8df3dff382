#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "omegalab/bit_string.hpp"
#include "omegalab/natural.hpp"

namespace omegalab {

// Exact non-negative rational numerator / 2^exponent, kept in canonical form:
// the numerator is odd, or it is zero and the exponent is zero.
class Dyadic {
public:
  Dyadic() = default;
  Dyadic(BigInt numerator, std::uint64_t exponent);

  static Dyadic power_of_half(std::uint64_t k) { return Dyadic(BigInt(1), k); }
  // The value 0.b1 b2 ... bN in binary.
  static Dyadic from_binary_fraction(const BitString& bits);

  const BigInt& numerator() const noexcept { return numerator_; }
  std::uint64_t exponent() const noexcept { return exponent_; }
  bool is_zero() const noexcept { return numerator_ == 0; }
  bool less_than_one() const;

  Dyadic& operator+=(const Dyadic& other);
  friend Dyadic operator+(Dyadic a, const Dyadic& b) { return a += b; }

  // First n bits after the binary point, truncated. Requires value < 1.
  BitString fraction_bits(std::size_t n) const;

  std::string to_string() const;  // "numerator/2^exponent"

  friend bool operator==(const Dyadic&, const Dyadic&) = default;
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

private:
  void canonicalize();

  BigInt numerator_ = 0;
  std::uint64_t exponent_ = 0;
};

}  // namespace omegalab
