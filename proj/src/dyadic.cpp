#include "omegalab/dyadic.hpp"

#include <stdexcept>

namespace omegalab {

Dyadic::Dyadic(BigInt numerator, std::uint64_t exponent)
    : numerator_(std::move(numerator)), exponent_(exponent) {
  if (numerator_ < 0) throw std::invalid_argument("Dyadic: negative numerator");
  canonicalize();
}

Dyadic Dyadic::from_binary_fraction(const BitString& bits) {
  BigInt n = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    n <<= 1;
    if (bits[i]) n += 1;
  }
  return Dyadic(std::move(n), bits.size());
}

void Dyadic::canonicalize() {
  if (numerator_ == 0) {
    exponent_ = 0;
    return;
  }
  const auto trailing = static_cast<std::uint64_t>(boost::multiprecision::lsb(numerator_));
  const std::uint64_t shift = std::min(trailing, exponent_);
  numerator_ >>= static_cast<unsigned>(shift);
  exponent_ -= shift;
}

bool Dyadic::less_than_one() const {
  return numerator_ < (BigInt(1) << static_cast<unsigned>(exponent_));
}

Dyadic& Dyadic::operator+=(const Dyadic& other) {
  if (other.exponent_ > exponent_) {
    numerator_ <<= static_cast<unsigned>(other.exponent_ - exponent_);
    exponent_ = other.exponent_;
    numerator_ += other.numerator_;
  } else {
    numerator_ += other.numerator_ << static_cast<unsigned>(exponent_ - other.exponent_);
  }
  canonicalize();
  return *this;
}

BitString Dyadic::fraction_bits(std::size_t n) const {
  if (!less_than_one()) throw std::invalid_argument("fraction_bits: value must be < 1");
  // floor(value * 2^n) written with n digits.
  BigInt scaled = numerator_;
  if (n >= exponent_) {
    scaled <<= static_cast<unsigned>(n - exponent_);
  } else {
    scaled >>= static_cast<unsigned>(exponent_ - n);
  }
  BitString out;
  for (std::size_t i = n; i-- > 0;) out.push_back(boost::multiprecision::bit_test(scaled, static_cast<unsigned>(i)));
  return out;
}

std::string Dyadic::to_string() const { return numerator_.str() + "/2^" + std::to_string(exponent_); }

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  BigInt lhs = a.numerator_;
  BigInt rhs = b.numerator_;
  if (a.exponent_ < b.exponent_) {
    lhs <<= static_cast<unsigned>(b.exponent_ - a.exponent_);
  } else {
    rhs <<= static_cast<unsigned>(a.exponent_ - b.exponent_);
  }
  if (lhs < rhs) return std::strong_ordering::less;
  if (rhs < lhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace omegalab
