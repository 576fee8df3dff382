#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace omegalab {

using BigInt = boost::multiprecision::cpp_int;

// Unbounded natural number. Values below 2^64 live inline; anything larger is
// held in a shared immutable big integer, so DUP of a huge value is a pointer
// copy.
class Natural {
public:
  constexpr Natural() noexcept = default;
  constexpr Natural(std::uint64_t v) noexcept : small_(v) {}  // NOLINT(implicit)
  explicit Natural(const BigInt& v);

  static Natural from_decimal(std::string_view text);

  bool is_small() const noexcept { return big_ == nullptr; }
  bool is_zero() const noexcept { return big_ == nullptr && small_ == 0; }

  // Only meaningful when is_small().
  std::uint64_t small() const noexcept { return small_; }
  // Value clamped to uint64 max.
  std::uint64_t saturated() const noexcept {
    return big_ ? UINT64_MAX : small_;
  }

  BigInt to_big() const;
  std::string to_string() const;
  // Number of significant bits; 0 for zero.
  std::size_t bit_length() const;
  // Bit at position i counted from the least significant end.
  bool bit(std::size_t i) const;

  void increment();
  // Monus: saturates at zero.
  void decrement();

  friend bool operator==(const Natural& a, const Natural& b);
  friend std::strong_ordering operator<=>(const Natural& a, const Natural& b);

private:
  std::uint64_t small_ = 0;
  std::shared_ptr<const BigInt> big_;
};

}  // namespace omegalab
