#include "omegalab/machine.hpp"

#include <algorithm>
#include <stdexcept>

namespace omegalab {

std::string_view run_status_name(RunStatus s) {
  switch (s) {
    case RunStatus::Halted: return "halted";
    case RunStatus::Error: return "error";
    case RunStatus::OutOfBudget: return "out_of_budget";
  }
  return "unknown";
}

std::string_view error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::DecodeError: return "decode_error";
    case ErrorKind::StackUnderflow: return "stack_underflow";
    case ErrorKind::JumpOutOfRange: return "jump_out_of_range";
    case ErrorKind::RunOffEnd: return "run_off_end";
    case ErrorKind::EvalOperandInvalid: return "eval_operand_invalid";
  }
  return "unknown";
}

Execution::Execution(std::shared_ptr<const Program> program) {
  frames_.push_back(Frame{std::move(program), 0, {}, UINT64_MAX});
}

bool Execution::fail(ErrorKind kind) {
  if (frames_.size() == 1) {
    final_ = RunOutcome{RunStatus::Error, std::nullopt, steps_, kind, eval_steps_};
    return true;
  }
  finish_inner(Natural(0), false);
  return false;
}

void Execution::finish_inner(Natural output, bool halted) {
  frames_.pop_back();
  auto& parent = frames_.back().stack;
  parent.push_back(std::move(output));
  parent.emplace_back(halted ? 1 : 0);
}

RunOutcome Execution::advance(std::uint64_t cap) {
  if (final_) return *final_;

  while (true) {
    Frame& f = frames_.back();
    const bool root = frames_.size() == 1;
    const auto& code = f.program->instructions;

    // Transitions that cost no step.
    if (f.ip >= code.size()) {
      if (fail(ErrorKind::RunOffEnd)) return *final_;
      continue;
    }
    if (!root && steps_ >= f.deadline) {
      finish_inner(Natural(0), false);
      continue;
    }
    if (steps_ >= cap) {
      return RunOutcome{RunStatus::OutOfBudget, std::nullopt, steps_, std::nullopt, eval_steps_};
    }

    const Instruction& ins = code[f.ip];
    ++steps_;
    if (!root) ++eval_steps_;
    auto& stack = f.stack;

    switch (ins.op) {
      case Opcode::Push:
        stack.push_back(ins.literal);
        ++f.ip;
        break;
      case Opcode::Inc:
      case Opcode::Dec:
        if (stack.empty()) {
          if (fail(ErrorKind::StackUnderflow)) return *final_;
          break;
        }
        if (ins.op == Opcode::Inc) {
          stack.back().increment();
        } else {
          stack.back().decrement();
        }
        ++f.ip;
        break;
      case Opcode::Dup:
        if (stack.empty()) {
          if (fail(ErrorKind::StackUnderflow)) return *final_;
          break;
        }
        stack.push_back(stack.back());
        ++f.ip;
        break;
      case Opcode::Roll: {
        if (stack.empty()) {
          if (fail(ErrorKind::StackUnderflow)) return *final_;
          break;
        }
        const Natural n = std::move(stack.back());
        stack.pop_back();
        if (!n.is_small() || n.small() >= stack.size()) {
          if (fail(ErrorKind::StackUnderflow)) return *final_;
          break;
        }
        const auto pos = stack.end() - 1 - static_cast<std::ptrdiff_t>(n.small());
        std::rotate(pos, pos + 1, stack.end());
        ++f.ip;
        break;
      }
      case Opcode::Jnz: {
        if (stack.empty()) {
          if (fail(ErrorKind::StackUnderflow)) return *final_;
          break;
        }
        const bool taken = !stack.back().is_zero();
        stack.pop_back();
        if (!taken) {
          ++f.ip;
          break;
        }
        const std::uint64_t m = ins.magnitude;
        const bool in_range = ins.backward ? m <= f.ip : m < code.size() - f.ip;
        if (!in_range) {
          if (fail(ErrorKind::JumpOutOfRange)) return *final_;
          break;
        }
        f.ip = ins.backward ? f.ip - m : f.ip + m;
        break;
      }
      case Opcode::OutHalt: {
        if (stack.empty()) {
          if (fail(ErrorKind::StackUnderflow)) return *final_;
          break;
        }
        Natural out = std::move(stack.back());
        stack.pop_back();
        if (root) {
          final_ = RunOutcome{RunStatus::Halted, std::move(out), steps_, std::nullopt, eval_steps_};
          return *final_;
        }
        finish_inner(std::move(out), true);
        break;
      }
      case Opcode::Eval: {
        if (stack.size() < 2) {
          if (fail(ErrorKind::StackUnderflow)) return *final_;
          break;
        }
        const Natural budget = std::move(stack.back());
        stack.pop_back();
        const Natural value = std::move(stack.back());
        stack.pop_back();
        if (value < Natural(2)) {
          if (fail(ErrorKind::EvalOperandInvalid)) return *final_;
          break;
        }
        ++f.ip;
        auto decoded = try_decode_program(drop_leading_one(value), MachineVariant::Full);
        if (!decoded.program) {
          stack.emplace_back(0);
          stack.emplace_back(0);
          break;
        }
        const std::uint64_t b = budget.saturated();
        std::uint64_t deadline = b > UINT64_MAX - steps_ ? UINT64_MAX : steps_ + b;
        if (!root) deadline = std::min(deadline, f.deadline);
        auto child = std::make_shared<const Program>(std::move(*decoded.program));
        frames_.push_back(Frame{std::move(child), 0, {}, deadline});  // invalidates f
        break;
      }
    }
  }
}

RunOutcome run(const Program& p, std::uint64_t budget) {
  if (budget == 0) throw std::invalid_argument("run: budget must be >= 1");
  // Non-owning: p outlives the execution.
  Execution exec(std::shared_ptr<const Program>(std::shared_ptr<const Program>(), &p));
  return exec.advance(budget);
}

RunOutcome run_total(const Program& p) {
  if (!is_total(p)) throw std::invalid_argument("run_total: program is not in the TOTAL variant");
  Execution exec(std::shared_ptr<const Program>(std::shared_ptr<const Program>(), &p));
  auto outcome = exec.advance(UINT64_MAX);
  if (!outcome.final()) throw std::logic_error("run_total: TOTAL program did not terminate");
  return outcome;
}

}  // namespace omegalab
