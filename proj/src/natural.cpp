#include "omegalab/natural.hpp"

#include <stdexcept>

namespace omegalab {

namespace {

const BigInt& uint64_limit() {
  static const BigInt limit = BigInt(1) << 64;
  return limit;
}

}  // namespace

Natural::Natural(const BigInt& v) {
  if (v < 0) throw std::invalid_argument("Natural: negative value");
  if (v < uint64_limit()) {
    small_ = static_cast<std::uint64_t>(v);
  } else {
    big_ = std::make_shared<const BigInt>(v);
  }
}

Natural Natural::from_decimal(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("Natural: empty number");
  for (char c : text) {
    if (c < '0' || c > '9') {
      throw std::invalid_argument("Natural: not a decimal natural: " + std::string(text));
    }
  }
  return Natural(BigInt(std::string(text)));
}

BigInt Natural::to_big() const { return big_ ? *big_ : BigInt(small_); }

std::string Natural::to_string() const {
  return big_ ? big_->str() : std::to_string(small_);
}

std::size_t Natural::bit_length() const {
  if (big_) return boost::multiprecision::msb(*big_) + 1;
  if (small_ == 0) return 0;
  return 64 - static_cast<std::size_t>(__builtin_clzll(small_));
}

bool Natural::bit(std::size_t i) const {
  if (big_) return boost::multiprecision::bit_test(*big_, static_cast<unsigned>(i));
  return i < 64 && ((small_ >> i) & 1U) != 0;
}

void Natural::increment() {
  if (!big_) {
    if (small_ != UINT64_MAX) {
      ++small_;
      return;
    }
    big_ = std::make_shared<const BigInt>(uint64_limit());
    small_ = 0;
    return;
  }
  big_ = std::make_shared<const BigInt>(*big_ + 1);
}

void Natural::decrement() {
  if (!big_) {
    if (small_ != 0) --small_;
    return;
  }
  *this = Natural(*big_ - 1);
}

bool operator==(const Natural& a, const Natural& b) {
  if (a.big_ == nullptr && b.big_ == nullptr) return a.small_ == b.small_;
  if (a.big_ == nullptr || b.big_ == nullptr) return false;
  return *a.big_ == *b.big_;
}

std::strong_ordering operator<=>(const Natural& a, const Natural& b) {
  if (a.big_ == nullptr && b.big_ == nullptr) return a.small_ <=> b.small_;
  if (a.big_ == nullptr) return std::strong_ordering::less;
  if (b.big_ == nullptr) return std::strong_ordering::greater;
  if (*a.big_ < *b.big_) return std::strong_ordering::less;
  if (*b.big_ < *a.big_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace omegalab
