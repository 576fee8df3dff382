#include "omegalab/gamma.hpp"

#include <stdexcept>

#include "omegalab/program.hpp"

namespace omegalab {

BitString gamma_encode(const Natural& n) {
  if (n.is_zero()) throw std::invalid_argument("gamma_encode: n must be >= 1");
  const std::size_t width = n.bit_length();
  BitString out;
  for (std::size_t i = 0; i + 1 < width; ++i) out.push_back(false);
  for (std::size_t i = width; i-- > 0;) out.push_back(n.bit(i));
  return out;
}

std::size_t gamma_length(const Natural& n) {
  if (n.is_zero()) throw std::invalid_argument("gamma_length: n must be >= 1");
  return 2 * n.bit_length() - 1;
}

GammaDecoded gamma_decode(const BitString& s) {
  BitReader reader(s.view());
  auto value = reader.read_gamma();
  if (!value) throw DecodeError(DecodeFailure::HeaderTruncated, "input exhausted mid-codeword");
  return {*value, reader.position()};
}

std::optional<unsigned> BitReader::read_bits(unsigned count) {
  if (remaining() < count) return std::nullopt;
  unsigned v = 0;
  for (unsigned i = 0; i < count; ++i) v = (v << 1) | bits_[pos_++];
  return v;
}

std::optional<Natural> BitReader::read_gamma() {
  std::size_t zeros = 0;
  while (true) {
    auto b = read_bit();
    if (!b) return std::nullopt;
    if (*b) break;
    ++zeros;
  }
  if (remaining() < zeros) return std::nullopt;
  if (zeros < 64) {
    std::uint64_t v = 1;
    for (std::size_t i = 0; i < zeros; ++i) v = (v << 1) | bits_[pos_++];
    return Natural(v);
  }
  BigInt v = 1;
  for (std::size_t i = 0; i < zeros; ++i) {
    v <<= 1;
    if (bits_[pos_++]) v += 1;
  }
  return Natural(v);
}

}  // namespace omegalab
