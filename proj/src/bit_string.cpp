#include "omegalab/bit_string.hpp"

#include <algorithm>
#include <stdexcept>

namespace omegalab {

BitString::BitString(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (auto& b : bits_) {
    if (b > 1) throw std::invalid_argument("BitString: element is not 0 or 1");
  }
}

BitString BitString::parse(std::string_view text) {
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("not a 0/1 string: '" + std::string(text) + "'");
    }
    bits.push_back(c == '1' ? 1 : 0);
  }
  BitString out;
  out.bits_ = std::move(bits);
  return out;
}

BitString BitString::from_uint(std::uint64_t value, std::size_t length) {
  BitString out;
  out.bits_.resize(length);
  for (std::size_t i = 0; i < length; ++i) {
    const std::size_t shift = length - 1 - i;
    out.bits_[i] = shift < 64 ? static_cast<std::uint8_t>((value >> shift) & 1U) : 0;
  }
  return out;
}

void BitString::append(const BitString& other) {
  bits_.insert(bits_.end(), other.bits_.begin(), other.bits_.end());
}

BitString BitString::prefix(std::size_t n) const {
  BitString out;
  out.bits_.assign(bits_.begin(), bits_.begin() + static_cast<std::ptrdiff_t>(std::min(n, size())));
  return out;
}

bool BitString::is_prefix_of(const BitString& other) const noexcept {
  return size() <= other.size() && std::equal(bits_.begin(), bits_.end(), other.bits_.begin());
}

std::string BitString::to_string() const {
  std::string out(bits_.size(), '0');
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i]) out[i] = '1';
  }
  return out;
}

std::strong_ordering operator<=>(const BitString& a, const BitString& b) {
  if (a.size() != b.size()) return a.size() <=> b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.bits_[i] != b.bits_[i]) return a.bits_[i] <=> b.bits_[i];
  }
  return std::strong_ordering::equal;
}

std::size_t BitStringHash::operator()(const BitString& s) const noexcept {
  // FNV-1a over the bits plus the length.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (auto b : s.view()) {
    h ^= b;
    h *= 0x100000001b3ULL;
  }
  h ^= s.size();
  h *= 0x100000001b3ULL;
  return static_cast<std::size_t>(h);
}

BitString index_to_bits(std::uint64_t index) {
  if (index == 0) throw std::invalid_argument("program index must be >= 1");
  if (index == UINT64_MAX) return drop_leading_one(Natural(BigInt(index) + 1));
  return drop_leading_one(Natural(index + 1));
}

std::uint64_t bits_to_index(const BitString& bits) {
  if (bits.empty()) throw std::invalid_argument("the empty string has no program index");
  if (bits.size() >= 64) throw std::out_of_range("program index does not fit in 64 bits");
  std::uint64_t v = 1;
  for (std::size_t i = 0; i < bits.size(); ++i) v = (v << 1) | (bits[i] ? 1U : 0U);
  return v - 1;
}

std::uint64_t last_index_of_length(std::size_t max_len) {
  if (max_len >= 63) throw std::out_of_range("length too large for 64-bit indices");
  return (std::uint64_t{1} << (max_len + 1)) - 2;
}

BitString drop_leading_one(const Natural& v) {
  if (v.is_zero()) throw std::invalid_argument("drop_leading_one: zero has no leading 1");
  const std::size_t n = v.bit_length();
  std::vector<std::uint8_t> bits(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) bits[i] = v.bit(n - 2 - i) ? 1 : 0;
  return BitString(std::move(bits));
}

Natural with_leading_one(const BitString& bits) {
  if (bits.size() < 63) {
    std::uint64_t v = 1;
    for (std::size_t i = 0; i < bits.size(); ++i) v = (v << 1) | (bits[i] ? 1U : 0U);
    return Natural(v);
  }
  BigInt v = 1;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    v <<= 1;
    if (bits[i]) v += 1;
  }
  return Natural(v);
}

}  // namespace omegalab
