#pragma once

#include <cstddef>
#include <optional>
#include <span>

#include "omegalab/bit_string.hpp"
#include "omegalab/natural.hpp"

namespace omegalab {

// Elias gamma: floor(log2 n) zeros, then n in binary. Throws for n = 0.
BitString gamma_encode(const Natural& n);
// 2 floor(log2 n) + 1.
std::size_t gamma_length(const Natural& n);

struct GammaDecoded {
  Natural value;
  std::size_t bits_consumed = 0;
};

// Reads one codeword from the front of s. Throws DecodeError when s runs out
// mid-codeword.
GammaDecoded gamma_decode(const BitString& s);

// Sequential reader over a bit span. Every read returns nullopt when the span
// runs out; the position is then unspecified.
class BitReader {
public:
  explicit BitReader(std::span<const std::uint8_t> bits) : bits_(bits) {}

  std::size_t position() const noexcept { return pos_; }
  std::size_t remaining() const noexcept { return bits_.size() - pos_; }

  std::optional<bool> read_bit() {
    if (pos_ >= bits_.size()) return std::nullopt;
    return bits_[pos_++] != 0;
  }
  std::optional<unsigned> read_bits(unsigned count);
  std::optional<Natural> read_gamma();

private:
  std::span<const std::uint8_t> bits_;
  std::size_t pos_ = 0;
};

}  // namespace omegalab
