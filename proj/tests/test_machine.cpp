#include <gtest/gtest.h>

#include <random>
#include <set>

#include "omegalab/assembler.hpp"
#include "omegalab/gamma.hpp"
#include "omegalab/machine.hpp"
#include "omegalab/program.hpp"
#include "reference_decoder.hpp"

namespace omegalab {
namespace {

using testing::ref_decode;
using testing::ref_gamma_encode;

const BitString kPushZeroHalt = BitString::parse("001110001110");
// [PUSH 1, DUP, JNZ -1]
const BitString kLoop = BitString::parse("000111000001001110111");

TEST(Gamma, SmallCodewords) {
  EXPECT_EQ(gamma_encode(1).to_string(), "1");
  EXPECT_EQ(gamma_encode(4).to_string(), "00100");
  EXPECT_EQ(gamma_encode(7).to_string(), "00111");
  EXPECT_THROW(gamma_encode(0), std::invalid_argument);
}

TEST(Gamma, DecodeReportsConsumedBits) {
  auto one = gamma_decode(BitString::parse("1"));
  EXPECT_EQ(one.value, Natural(1));
  EXPECT_EQ(one.bits_consumed, 1u);
  auto four = gamma_decode(BitString::parse("00100"));
  EXPECT_EQ(four.value, Natural(4));
  EXPECT_EQ(four.bits_consumed, 5u);
  auto tail = gamma_decode(BitString::parse("0010011"));
  EXPECT_EQ(tail.value, Natural(4));
  EXPECT_EQ(tail.bits_consumed, 5u);
  EXPECT_THROW(gamma_decode(BitString::parse("001")), DecodeError);
  EXPECT_THROW(gamma_decode(BitString::parse("000")), DecodeError);
  EXPECT_THROW(gamma_decode(BitString()), DecodeError);
}

TEST(Gamma, RoundTripAndPrefixFreeUpTo64) {
  std::vector<std::string> codes;
  for (std::uint64_t n = 1; n <= 64; ++n) {
    auto code = gamma_encode(n);
    EXPECT_EQ(code.to_string(), ref_gamma_encode(n));
    EXPECT_EQ(code.size(), gamma_length(n));
    auto back = gamma_decode(code);
    EXPECT_EQ(back.value, Natural(n));
    EXPECT_EQ(back.bits_consumed, code.size());
    codes.push_back(code.to_string());
  }
  for (std::size_t i = 0; i < codes.size(); ++i) {
    for (std::size_t j = 0; j < codes.size(); ++j) {
      if (i != j) EXPECT_NE(codes[j].rfind(codes[i], 0), 0u) << codes[i] << " prefixes " << codes[j];
    }
  }
}

TEST(Gamma, HugeValuesRoundTrip) {
  Natural big(BigInt(1) << 100);
  big.increment();
  auto code = gamma_encode(big);
  EXPECT_EQ(code.size(), 201u);
  EXPECT_EQ(gamma_decode(code).value, big);
}

TEST(Decode, PushZeroOutHalt) {
  Program p = decode_program(kPushZeroHalt, MachineVariant::Full);
  EXPECT_EQ(p.code_len, 7u);
  EXPECT_EQ(p.header_len, 5u);
  ASSERT_EQ(p.instructions.size(), 2u);
  EXPECT_EQ(p.instructions[0], Instruction::push(0));
  EXPECT_EQ(p.instructions[1], Instruction::simple(Opcode::OutHalt));
  EXPECT_EQ(make_program(p.instructions).raw, kPushZeroHalt);
}

TEST(Decode, Failures) {
  auto fail_of = [](const char* bits, MachineVariant v = MachineVariant::Full) {
    auto r = try_decode_program(BitString::parse(bits), v);
    EXPECT_FALSE(r.program.has_value()) << bits;
    return r.failure;
  };
  EXPECT_EQ(fail_of("10"), DecodeFailure::InstructionTruncated);
  EXPECT_EQ(fail_of("0011100011100"), DecodeFailure::LeftoverBits);
  EXPECT_EQ(fail_of("00111000111"), DecodeFailure::CodeTruncated);
  EXPECT_EQ(fail_of("000"), DecodeFailure::HeaderTruncated);
  EXPECT_EQ(fail_of(""), DecodeFailure::HeaderTruncated);
  // [EVAL] is fine under FULL, rejected under TOTAL.
  EXPECT_TRUE(try_decode_program(BitString::parse("011111"), MachineVariant::Full).program);
  EXPECT_EQ(fail_of("011111", MachineVariant::Total), DecodeFailure::ForbiddenInTotal);
  EXPECT_EQ(fail_of(kLoop.to_string().c_str(), MachineVariant::Total), DecodeFailure::ForbiddenInTotal);
  EXPECT_THROW(decode_program(BitString::parse("10"), MachineVariant::Full), DecodeError);
}

TEST(Decode, LoopProgramIs21Bits) {
  Program p = make_program({Instruction::push(1), Instruction::simple(Opcode::Dup), Instruction::jnz_back(1)});
  EXPECT_EQ(p.raw, kLoop);
  EXPECT_EQ(p.size(), 21u);
}

TEST(Decode, AgreesWithReferenceDecoderOnRandomStrings) {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 20000; ++iter) {
    const std::size_t len = 1 + rng() % 40;
    std::string s;
    for (std::size_t i = 0; i < len; ++i) s.push_back(rng() & 1 ? '1' : '0');
    for (auto v : {MachineVariant::Full, MachineVariant::Total}) {
      auto ours = try_decode_program(BitString::parse(s), v);
      auto ref = ref_decode(s, v == MachineVariant::Total);
      ASSERT_EQ(ours.program.has_value(), ref.has_value()) << s;
      if (!ref) continue;
      ASSERT_EQ(ours.program->instructions.size(), ref->size());
      for (std::size_t i = 0; i < ref->size(); ++i) {
        const auto& a = ours.program->instructions[i];
        const auto& b = (*ref)[i];
        EXPECT_EQ(static_cast<int>(a.op), b.opcode);
        if (b.opcode == 0) EXPECT_EQ(a.literal, Natural(b.operand));
        if (b.opcode == 5) {
          EXPECT_EQ(a.magnitude, b.operand);
          EXPECT_EQ(a.backward, b.backward);
        }
      }
    }
  }
}

// Exhaustive over all strings of length <= 16 (the acceptance suite goes to 20).
TEST(Decode, TotalAndPrefixFreeUpTo16Bits) {
  std::vector<BitString> valid;
  for (std::size_t len = 1; len <= 16; ++len) {
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << len); ++v) {
      auto bits = BitString::from_uint(v, len);
      auto r = try_decode_program(bits, MachineVariant::Full);
      auto ref = ref_decode(bits.to_string(), false);
      ASSERT_EQ(r.program.has_value(), ref.has_value()) << bits.to_string();
      if (r.program) {
        ASSERT_EQ(r.program->size(), len);
        ASSERT_EQ(r.program->header_len + r.program->code_len, len);
        valid.push_back(bits);
      }
    }
  }
  std::set<std::string> sorted;
  for (auto& b : valid) sorted.insert(b.to_string());
  std::string prev;
  for (const auto& s : sorted) {
    if (!prev.empty()) ASSERT_NE(s.rfind(prev, 0), 0u) << prev << " prefixes " << s;
    prev = s;
  }
}

TEST(Run, PushZeroOutHalt) {
  Program p = decode_program(kPushZeroHalt, MachineVariant::Full);
  auto r = run(p, 100);
  EXPECT_EQ(r.status, RunStatus::Halted);
  EXPECT_EQ(r.output, Natural(0));
  EXPECT_EQ(r.steps_used, 2u);
  auto t = run_total(p);
  EXPECT_EQ(t, r);
}

TEST(Run, LoopExhaustsBudget) {
  Program p = decode_program(kLoop, MachineVariant::Full);
  auto r = run(p, 1000);
  EXPECT_EQ(r.status, RunStatus::OutOfBudget);
  EXPECT_EQ(r.steps_used, 1000u);
  EXPECT_FALSE(r.output);
  EXPECT_THROW(run_total(p), std::invalid_argument);
}

TEST(Run, ErrorKinds) {
  auto err = [](std::vector<Instruction> code) {
    auto r = run(make_program(std::move(code)), 10);
    EXPECT_EQ(r.status, RunStatus::Error);
    return r.error.value_or(ErrorKind::DecodeError);
  };
  EXPECT_EQ(err({Instruction::simple(Opcode::OutHalt)}), ErrorKind::StackUnderflow);
  EXPECT_EQ(err({Instruction::simple(Opcode::Inc)}), ErrorKind::StackUnderflow);
  EXPECT_EQ(err({Instruction::push(1), Instruction::jnz_forward(2)}), ErrorKind::JumpOutOfRange);
  EXPECT_EQ(err({Instruction::push(1), Instruction::jnz_back(2)}), ErrorKind::JumpOutOfRange);
  EXPECT_EQ(err({Instruction::push(3)}), ErrorKind::RunOffEnd);
  EXPECT_EQ(err({Instruction::push(0), Instruction::jnz_forward(5)}), ErrorKind::RunOffEnd);
  EXPECT_EQ(err({Instruction::push(1), Instruction::push(5), Instruction::simple(Opcode::Eval)}),
            ErrorKind::EvalOperandInvalid);
  EXPECT_EQ(err({Instruction::push(5), Instruction::simple(Opcode::Eval)}), ErrorKind::StackUnderflow);
  EXPECT_EQ(err({Instruction::push(0), Instruction::push(1), Instruction::simple(Opcode::Roll)}),
            ErrorKind::StackUnderflow);
}

TEST(Run, TotalExamples) {
  auto jump = run_total(make_program({Instruction::push(1), Instruction::jnz_forward(2)}));
  EXPECT_EQ(jump.error, ErrorKind::JumpOutOfRange);
  EXPECT_EQ(jump.steps_used, 2u);
  auto inc = run_total(make_program({Instruction::simple(Opcode::Inc)}));
  EXPECT_EQ(inc.error, ErrorKind::StackUnderflow);
}

TEST(Run, DecIsMonus) {
  auto r = run(make_program({Instruction::push(0), Instruction::simple(Opcode::Dec),
                             Instruction::simple(Opcode::OutHalt)}),
               10);
  EXPECT_EQ(r.output, Natural(0));
}

TEST(Run, RollRotatesDeepItem) {
  // [7 8 9] ROLL 2 -> [8 9 7]; output top.
  Assembler a;
  a.push(7);
  a.push(8);
  a.push(9);
  a.roll_from(2);
  a.outhalt();
  EXPECT_EQ(run(a.assemble(), 100).output, Natural(7));
  Assembler b;
  b.push(7);
  b.push(8);
  b.push(9);
  b.pick(2);   // [7 8 9 7]
  b.drop();
  b.drop();    // [7 8]
  b.outhalt();
  EXPECT_EQ(run(b.assemble(), 100).output, Natural(8));
}

TEST(Run, IncrementPastUint64) {
  auto r = run(make_program({Instruction::push(Natural(UINT64_MAX)), Instruction::simple(Opcode::Inc),
                             Instruction::simple(Opcode::OutHalt)}),
               10);
  EXPECT_EQ(r.output->to_string(), "18446744073709551616");
}

Program eval_of(const Program& inner, std::uint64_t budget) {
  Assembler a;
  a.push(with_leading_one(inner.raw));
  a.push(budget);
  a.eval();
  Assembler::Label ok = a.new_label();
  a.jnz(ok);       // flag
  a.push(999);     // inner did not halt: output 999
  a.outhalt();
  a.bind(ok);
  a.outhalt();     // inner output
  return a.assemble();
}

TEST(Eval, RunsSubProgramAndPushesResult) {
  Program five = make_program({Instruction::push(5), Instruction::simple(Opcode::OutHalt)});
  auto r = run(eval_of(five, 100), 1000);
  ASSERT_EQ(r.status, RunStatus::Halted);
  EXPECT_EQ(r.output, Natural(5));
  EXPECT_EQ(r.eval_steps, 2u);
  EXPECT_EQ(r.steps_used, 3u + 2u + 2u);
}

TEST(Eval, FailuresPushZeroZero) {
  Program loop = decode_program(kLoop, MachineVariant::Full);
  auto r = run(eval_of(loop, 50), 1000);
  ASSERT_EQ(r.status, RunStatus::Halted);
  EXPECT_EQ(r.output, Natural(999));
  EXPECT_EQ(r.eval_steps, 50u);
  EXPECT_GE(r.steps_used, r.eval_steps + 3);

  Program bad = make_program({Instruction::simple(Opcode::OutHalt)});
  EXPECT_EQ(run(eval_of(bad, 50), 1000).output, Natural(999));

  // v = 2 decodes "0", which is not a program.
  Assembler a;
  a.push(2);
  a.push(10);
  a.eval();
  a.outhalt();   // flag
  EXPECT_EQ(run(a.assemble(), 100).output, Natural(0));
}

TEST(Eval, InnerBudgetBilledToOuter) {
  Program loop = decode_program(kLoop, MachineVariant::Full);
  // Outer budget smaller than the inner budget: the whole run stops at the cap.
  auto r = run(eval_of(loop, 1000), 100);
  EXPECT_EQ(r.status, RunStatus::OutOfBudget);
  EXPECT_EQ(r.steps_used, 100u);
  EXPECT_EQ(r.eval_steps, 97u);
}

TEST(Eval, NestedBudgetIsClippedByParent) {
  Program loop = decode_program(kLoop, MachineVariant::Full);
  Program middle = eval_of(loop, 1000000);   // child wants 10^6 steps
  auto r = run(eval_of(middle, 40), 100000);  // but middle only has 40
  ASSERT_EQ(r.status, RunStatus::Halted);
  EXPECT_EQ(r.output, Natural(999));
  EXPECT_EQ(r.eval_steps, 40u);
}

TEST(Execution, ResumingEqualsFreshRun) {
  Program loop = decode_program(kLoop, MachineVariant::Full);
  Program five = make_program({Instruction::push(5), Instruction::simple(Opcode::OutHalt)});
  std::vector<Program> corpus = {eval_of(loop, 30), eval_of(five, 3), eval_of(eval_of(loop, 10), 20), loop};
  for (const auto& p : corpus) {
    auto shared = std::make_shared<const Program>(p);
    for (std::uint64_t step : {1u, 3u, 7u}) {
      Execution exec(shared);
      for (std::uint64_t cap = step; cap <= 80; cap += step) {
        auto resumed = exec.advance(cap);
        auto fresh = run(p, cap);
        ASSERT_EQ(resumed, fresh) << p.listing() << " cap " << cap;
      }
    }
  }
}

TEST(Run, DeterministicAndBudgetMonotone) {
  std::mt19937_64 rng(11);
  int halted = 0;
  for (int iter = 0; iter < 30000; ++iter) {
    const std::size_t len = 9 + rng() % 14;
    auto bits = BitString::from_uint(rng(), len);
    auto r = try_decode_program(bits, MachineVariant::Full);
    if (!r.program) continue;
    auto a = run(*r.program, 200);
    EXPECT_EQ(a, run(*r.program, 200));
    if (a.halted()) {
      ++halted;
      auto b = run(*r.program, 5000);
      EXPECT_EQ(a, b);
    }
    if (a.status == RunStatus::OutOfBudget) EXPECT_EQ(a.steps_used, 200u);
    EXPECT_LE(a.steps_used, 200u);
  }
  EXPECT_GT(halted, 0);
}

TEST(Run, TotalProgramsFinishWithinInstructionCount) {
  for (std::size_t len = 1; len <= 18; ++len) {
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << len); ++v) {
      auto r = try_decode_program(BitString::from_uint(v, len), MachineVariant::Total);
      if (!r.program) continue;
      auto out = run_total(*r.program);
      ASSERT_LE(out.steps_used, r.program->instructions.size());
      ASSERT_NE(out.status, RunStatus::OutOfBudget);
    }
  }
}

}  // namespace
}  // namespace omegalab
