#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string_view>
#include <vector>

#include "omegalab/natural.hpp"
#include "omegalab/program.hpp"

namespace omegalab {

enum class RunStatus : std::uint8_t { Halted, Error, OutOfBudget };

enum class ErrorKind : std::uint8_t {
  DecodeError,
  StackUnderflow,
  JumpOutOfRange,
  RunOffEnd,
  EvalOperandInvalid,
};

std::string_view run_status_name(RunStatus s);   // "halted" / "error" / "out_of_budget"
std::string_view error_kind_name(ErrorKind k);

struct RunOutcome {
  RunStatus status = RunStatus::OutOfBudget;
  std::optional<Natural> output;       // iff Halted
  std::uint64_t steps_used = 0;
  std::optional<ErrorKind> error;      // iff Error
  std::uint64_t eval_steps = 0;        // steps spent inside EVAL sub-programs

  bool halted() const noexcept { return status == RunStatus::Halted; }
  bool final() const noexcept { return status != RunStatus::OutOfBudget; }

  friend bool operator==(const RunOutcome&, const RunOutcome&) = default;
};

// A suspended machine. advance() may be called repeatedly with growing caps;
// the sequence of states is independent of where it is paused, so
// advance(a) then advance(b) ends exactly where a fresh advance(b) would.
class Execution {
public:
  explicit Execution(std::shared_ptr<const Program> program);

  // Runs until the program halts or errors, or until steps_used reaches cap.
  RunOutcome advance(std::uint64_t cap);

  std::uint64_t steps_used() const noexcept { return steps_; }
  bool finished() const noexcept { return final_.has_value(); }

private:
  struct Frame {
    std::shared_ptr<const Program> program;
    std::size_t ip = 0;
    std::vector<Natural> stack;
    std::uint64_t deadline = UINT64_MAX;  // absolute step count; unused for the root
  };

  // Ends the innermost frame without output. Returns true if that was the root.
  bool fail(ErrorKind kind);
  void finish_inner(Natural output, bool halted);

  std::vector<Frame> frames_;
  std::uint64_t steps_ = 0;
  std::uint64_t eval_steps_ = 0;
  std::optional<RunOutcome> final_;
};

// Deterministic run with a step budget (budget >= 1).
RunOutcome run(const Program& p, std::uint64_t budget);
// Unbudgeted run of a TOTAL program; never OutOfBudget. Throws
// std::invalid_argument if p uses backward JNZ or EVAL.
RunOutcome run_total(const Program& p);

}  // namespace omegalab
