#include "omegalab/program.hpp"

#include <sstream>

#include "omegalab/gamma.hpp"

namespace omegalab {

std::string Instruction::to_string() const {
  std::string out(opcode_name(op));
  if (op == Opcode::Push) out += " " + literal.to_string();
  if (op == Opcode::Jnz) out += (backward ? " -" : " +") + std::to_string(magnitude);
  return out;
}

std::string Program::listing() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < instructions.size(); ++i) {
    if (i) os << "; ";
    os << instructions[i].to_string();
  }
  return os.str();
}

std::string_view decode_failure_name(DecodeFailure f) {
  switch (f) {
    case DecodeFailure::HeaderTruncated: return "header truncated";
    case DecodeFailure::CodeTruncated: return "code shorter than header length";
    case DecodeFailure::LeftoverBits: return "leftover bits after code block";
    case DecodeFailure::InstructionTruncated: return "code block ends mid-instruction";
    case DecodeFailure::ForbiddenInTotal: return "instruction forbidden in TOTAL variant";
  }
  return "unknown";
}

namespace {

DecodeResult failed(DecodeFailure f) { return {std::nullopt, f}; }

}  // namespace

DecodeResult try_decode_program(const BitString& raw, MachineVariant variant) {
  BitReader header(raw.view());
  auto n = header.read_gamma();
  if (!n) return failed(DecodeFailure::HeaderTruncated);
  const std::size_t header_len = header.position();
  const std::size_t available = header.remaining();
  if (!n->is_small() || n->small() > available) return failed(DecodeFailure::CodeTruncated);
  const std::size_t code_len = n->small();
  if (code_len < available) return failed(DecodeFailure::LeftoverBits);

  Program p;
  BitReader code(raw.view().subspan(header_len));
  while (code.remaining() > 0) {
    auto op_bits = code.read_bits(kOpcodeBits);
    if (!op_bits) return failed(DecodeFailure::InstructionTruncated);
    const auto op = static_cast<Opcode>(*op_bits);
    Instruction ins = Instruction::simple(op);
    if (op == Opcode::Push) {
      auto k1 = code.read_gamma();
      if (!k1) return failed(DecodeFailure::InstructionTruncated);
      k1->decrement();
      ins.literal = std::move(*k1);
    } else if (op == Opcode::Jnz) {
      auto dir = code.read_bit();
      if (!dir) return failed(DecodeFailure::InstructionTruncated);
      auto m = code.read_gamma();
      if (!m) return failed(DecodeFailure::InstructionTruncated);
      ins.backward = *dir;
      ins.magnitude = m->saturated();
      if (variant == MachineVariant::Total && ins.backward) {
        return failed(DecodeFailure::ForbiddenInTotal);
      }
    } else if (op == Opcode::Eval && variant == MachineVariant::Total) {
      return failed(DecodeFailure::ForbiddenInTotal);
    }
    p.instructions.push_back(std::move(ins));
  }
  p.raw = raw;
  p.header_len = header_len;
  p.code_len = code_len;
  return {std::move(p), {}};
}

Program decode_program(const BitString& raw, MachineVariant variant) {
  auto result = try_decode_program(raw, variant);
  if (!result.program) {
    throw DecodeError(result.failure, "cannot decode '" + raw.to_string() + "': " +
                                          std::string(decode_failure_name(result.failure)));
  }
  return std::move(*result.program);
}

BitString encode_code(const std::vector<Instruction>& instructions) {
  BitString code;
  for (const auto& ins : instructions) {
    const auto op = static_cast<unsigned>(ins.op);
    for (int b = static_cast<int>(kOpcodeBits) - 1; b >= 0; --b) code.push_back(((op >> b) & 1U) != 0);
    if (ins.op == Opcode::Push) {
      Natural k1 = ins.literal;
      k1.increment();
      code.append(gamma_encode(k1));
    } else if (ins.op == Opcode::Jnz) {
      if (ins.magnitude == 0) throw std::invalid_argument("JNZ magnitude must be >= 1");
      code.push_back(ins.backward);
      code.append(gamma_encode(Natural(ins.magnitude)));
    }
  }
  return code;
}

Program make_program(std::vector<Instruction> instructions) {
  if (instructions.empty()) throw std::invalid_argument("a program needs at least one instruction");
  Program p;
  const BitString code = encode_code(instructions);
  p.raw = gamma_encode(Natural(code.size()));
  p.header_len = p.raw.size();
  p.code_len = code.size();
  p.raw.append(code);
  p.instructions = std::move(instructions);
  return p;
}

bool is_total(const Program& p) {
  for (const auto& ins : p.instructions) {
    if (ins.op == Opcode::Eval) return false;
    if (ins.op == Opcode::Jnz && ins.backward) return false;
  }
  return true;
}

}  // namespace omegalab
