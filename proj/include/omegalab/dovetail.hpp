#pragma once

#include <cstdint>
#include <memory>
#include <unordered_map>

#include "omegalab/ledger.hpp"
#include "omegalab/machine.hpp"

namespace omegalab {

struct DovetailOptions {
  unsigned workers = 1;
  // Drop suspended machine states and re-run Running programs from scratch
  // each time. Trades time for memory; results are identical.
  bool recompute = false;
};

// Triangular dovetailer over all bit strings up to ledger.max_len.
// After R total rounds, every string with index <= R has run
// min(R, steps-to-final) steps. Strings that fail to decode are recorded as
// errors at first touch.
class Dovetailer {
public:
  explicit Dovetailer(HaltingLedger ledger, DovetailOptions options = {});

  void run_rounds(std::uint64_t rounds);

  const HaltingLedger& ledger() const noexcept { return ledger_; }
  HaltingLedger take_ledger() && { return std::move(ledger_); }

private:
  HaltingLedger ledger_;
  DovetailOptions options_;
  std::unordered_map<BitString, std::unique_ptr<Execution>> suspended_;
};

// Throws UsageError if the ledger was produced under another ISA.
HaltingLedger dovetail(HaltingLedger ledger, std::uint64_t rounds, DovetailOptions options = {});

// Number of strings a dovetail to `total_rounds` will have touched.
std::uint64_t strings_touched(std::size_t max_len, std::uint64_t total_rounds);

}  // namespace omegalab
