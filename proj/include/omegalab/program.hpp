#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "omegalab/bit_string.hpp"
#include "omegalab/isa.hpp"
#include "omegalab/natural.hpp"

namespace omegalab {

struct Instruction {
  Opcode op = Opcode::Inc;
  Natural literal;            // PUSH only
  bool backward = false;      // JNZ only
  std::uint64_t magnitude = 0;  // JNZ only, >= 1; saturated at 2^64 - 1

  static Instruction push(Natural k) { return {Opcode::Push, std::move(k), false, 0}; }
  static Instruction simple(Opcode op) { return {op, {}, false, 0}; }
  static Instruction jnz_forward(std::uint64_t m) { return {Opcode::Jnz, {}, false, m}; }
  static Instruction jnz_back(std::uint64_t m) { return {Opcode::Jnz, {}, true, m}; }

  bool has_operand() const noexcept { return op == Opcode::Push || op == Opcode::Jnz; }
  std::string to_string() const;

  friend bool operator==(const Instruction&, const Instruction&) = default;
};

// A decoded self-delimiting program. raw = gamma(code_len) . code and every
// bit of raw is consumed by decoding.
struct Program {
  BitString raw;
  std::size_t header_len = 0;
  std::size_t code_len = 0;
  std::vector<Instruction> instructions;

  std::size_t size() const noexcept { return raw.size(); }
  std::string listing() const;
};

enum class DecodeFailure : std::uint8_t {
  HeaderTruncated,
  CodeTruncated,          // fewer than n code bits follow the header
  LeftoverBits,           // bits remain after the code block
  InstructionTruncated,   // code block ends mid-instruction
  ForbiddenInTotal,       // backward JNZ or EVAL under TOTAL
};

std::string_view decode_failure_name(DecodeFailure f);

class DecodeError : public std::runtime_error {
public:
  DecodeError(DecodeFailure failure, const std::string& what)
      : std::runtime_error(what), failure_(failure) {}
  DecodeFailure failure() const noexcept { return failure_; }

private:
  DecodeFailure failure_;
};

struct DecodeResult {
  std::optional<Program> program;
  DecodeFailure failure = DecodeFailure::HeaderTruncated;  // meaningful iff !program
};

DecodeResult try_decode_program(const BitString& raw, MachineVariant variant);
// Throws DecodeError.
Program decode_program(const BitString& raw, MachineVariant variant);

// Bits of the code block for `instructions` (no header).
BitString encode_code(const std::vector<Instruction>& instructions);
// Full self-delimiting program. Throws std::invalid_argument on JNZ magnitude 0
// or an empty instruction list.
Program make_program(std::vector<Instruction> instructions);

// True when the program satisfies the TOTAL restriction.
bool is_total(const Program& p);

}  // namespace omegalab
