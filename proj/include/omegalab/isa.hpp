#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace omegalab {

enum class Opcode : std::uint8_t {
  Push = 0,     // operand: literal k, encoded gamma(k + 1)
  Inc = 1,
  Dec = 2,      // monus
  Dup = 3,
  Roll = 4,     // pop n, move the n-th item below the top to the top
  Jnz = 5,      // operand: direction bit (0 forward, 1 back), gamma(m)
  OutHalt = 6,
  Eval = 7,
};

inline constexpr unsigned kOpcodeBits = 3;

enum class MachineVariant : std::uint8_t {
  Full,
  Total,  // no backward JNZ, no EVAL: every run ends within instruction_count steps
};

std::string_view opcode_name(Opcode op);
std::string_view variant_name(MachineVariant v);        // "FULL" / "TOTAL"
MachineVariant parse_variant(std::string_view text);   // case-insensitive full|total

// Canonical ASCII description of the instruction set; docs/isa.md carries the
// same text. Its FNV-1a hash stamps every ledger.
std::string_view isa_description();
std::uint64_t fnv1a64(std::string_view bytes);
std::uint64_t isa_checksum();
// 16 lowercase hex digits.
std::string isa_checksum_hex();
std::string to_hex64(std::uint64_t v);

}  // namespace omegalab
