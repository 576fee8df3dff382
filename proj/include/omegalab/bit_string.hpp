#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "omegalab/natural.hpp"

namespace omegalab {

// Finite sequence of bits, most significant (first read) bit first.
// Ordering is length-lex: shorter strings first, then lexicographic.
class BitString {
public:
  BitString() = default;
  explicit BitString(std::vector<std::uint8_t> bits);

  // Accepts only '0' and '1' characters; throws std::invalid_argument otherwise.
  static BitString parse(std::string_view text);
  // The low `length` bits of `value`, most significant first.
  static BitString from_uint(std::uint64_t value, std::size_t length);

  std::size_t size() const noexcept { return bits_.size(); }
  bool empty() const noexcept { return bits_.empty(); }
  bool operator[](std::size_t i) const { return bits_[i] != 0; }
  std::span<const std::uint8_t> view() const noexcept { return bits_; }

  void push_back(bool bit) { bits_.push_back(bit ? 1 : 0); }
  void append(const BitString& other);
  BitString prefix(std::size_t n) const;

  bool is_prefix_of(const BitString& other) const noexcept;
  std::string to_string() const;

  friend bool operator==(const BitString&, const BitString&) = default;
  friend std::strong_ordering operator<=>(const BitString& a, const BitString& b);

private:
  std::vector<std::uint8_t> bits_;
};

struct BitStringHash {
  std::size_t operator()(const BitString& s) const noexcept;
};

// Length-lex enumeration of all nonempty bit strings, 1-based:
// 1 -> "0", 2 -> "1", 3 -> "00", ..., i -> binary(i + 1) without its leading 1.
BitString index_to_bits(std::uint64_t index);
std::uint64_t bits_to_index(const BitString& bits);
// Number of nonempty strings of length <= max_len, i.e. the largest index of that length.
std::uint64_t last_index_of_length(std::size_t max_len);

// Binary expansion of v with the leading 1 removed. Requires v >= 1.
BitString drop_leading_one(const Natural& v);
// Inverse of drop_leading_one: the natural whose binary expansion is "1" + bits.
Natural with_leading_one(const BitString& bits);

}  // namespace omegalab

template <>
struct std::hash<omegalab::BitString> : omegalab::BitStringHash {};
