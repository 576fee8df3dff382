#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "omegalab/bit_string.hpp"
#include "omegalab/dyadic.hpp"
#include "omegalab/ledger.hpp"
#include "omegalab/program.hpp"
#include "omegalab/scan.hpp"

namespace omegalab {

struct TuringPrefix {
  std::uint64_t N = 0;
  std::uint64_t budget = 0;
  // Bit i-1 is 1 iff the string of index i halts within budget. A 0 means
  // "not seen to halt", never "does not halt".
  BitString bits;
};

// Runs strings 1..N directly.
TuringPrefix turing_prefix(std::uint64_t N, std::uint64_t budget, MachineVariant variant = MachineVariant::Full);
// Reads halts with steps <= budget from the ledger; strings it has not
// touched count as 0.
TuringPrefix turing_prefix(std::uint64_t N, std::uint64_t budget, const HaltingLedger& ledger);

enum class Verdict : std::uint8_t { Halts, NeverHalts, Inconclusive };
std::string_view verdict_name(Verdict v);  // "halts" / "never_halts" / "inconclusive"

enum class CountStatus : std::uint8_t {
  Resolved,      // exactly m halted; the rest were labelled by elimination
  Inconclusive,  // meta budget ran out first
  Inconsistent,  // every program finished with fewer than m halts: m was wrong
};
std::string_view count_status_name(CountStatus s);

struct CountTrickResult {
  std::vector<Verdict> verdicts;  // input order
  std::uint64_t m = 0;
  CountStatus status = CountStatus::Inconclusive;
  std::uint64_t steps_used = 0;
  std::uint64_t rounds = 0;
  double bits_of_information = 0;  // log2(K + 1)
};

// Runs the programs round-robin, one step each per round, until m of them
// have halted. Programs that error are labelled NeverHalts when they error.
// Throws UsageError when m > K.
CountTrickResult solve_with_count(const std::vector<Program>& programs, std::uint64_t m,
                                  std::uint64_t meta_budget);

class UnreachableTarget : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OmegaOracleResult {
  std::size_t L = 0;
  Dyadic target;
  Dyadic bound_reached;
  std::uint64_t rounds = 0;
  std::vector<Program> programs;  // valid TOTAL programs of length <= N, length-lex
  std::vector<Verdict> verdicts;
  std::uint64_t deduced = 0;  // NeverHalts labels not backed by an observed error
};

// Dovetails TOTAL programs of length <= L until the halting sum reaches the
// value of `prefix`, then labels every program of length <= |prefix| that has
// not halted as NeverHalts. Throws UsageError if |prefix| > L and
// UnreachableTarget if the whole enumeration finishes below the target.
OmegaOracleResult omega_prefix_oracle(const BitString& prefix, std::size_t L, unsigned workers = 1,
                                      std::uint64_t enumeration_limit = kDefaultEnumerationLimit);

}  // namespace omegalab
