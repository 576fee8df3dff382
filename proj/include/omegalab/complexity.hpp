#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "omegalab/errors.hpp"
#include "omegalab/ledger.hpp"
#include "omegalab/natural.hpp"
#include "omegalab/program.hpp"
#include "omegalab/scan.hpp"

namespace omegalab {

// [PUSH x, OUTHALT].
Program literal_program(const Natural& x);

struct Witness {
  BitString bits;
  std::uint64_t steps = 0;
};

// Every known halting run, grouped by output. Within a group runs are kept in
// length-lex order of their bits, so the first one is the witness.
class ComplexityTable {
public:
  static ComplexityTable from_ledger(const HaltingLedger& ledger);
  // Runs every FULL program of length <= length_cap for `budget` steps.
  static ComplexityTable from_scan(std::size_t length_cap, std::uint64_t budget, unsigned workers = 1,
                                   std::uint64_t enumeration_limit = kDefaultEnumerationLimit);

  const Witness* best(const Natural& x) const;
  // Shortest run naming x that took at most `budget` steps.
  const Witness* best_within(const Natural& x, std::uint64_t budget) const;
  // #{x : k_upper(x) < m}.
  std::uint64_t count_below(std::size_t m) const;
  const std::map<Natural, std::vector<Witness>>& entries() const noexcept { return runs_; }

  std::uint64_t budget = 0;
  std::size_t length_cap = 0;

private:
  std::map<Natural, std::vector<Witness>> runs_;
};

struct ComplexityRecord {
  Natural x;
  std::optional<std::size_t> k_upper;  // nullopt: none found
  BitString witness;                   // literal program when none found
  std::uint64_t budget = 0;
  std::size_t length_cap = 0;
};

ComplexityRecord k_upper(const Natural& x, const ComplexityTable& table);
// Budget is the ledger's rounds, length cap its max_len.
ComplexityRecord k_upper(const Natural& x, const HaltingLedger& ledger);

enum class Classification : std::uint8_t { Interesting, UninterestingAtBudget };
std::string_view classification_name(Classification c);

Classification classify(const ComplexityRecord& record);

struct CensusTable {
  std::size_t n = 0;
  std::uint64_t budget = 0;
  std::size_t length_cap = 0;
  struct Row {
    ComplexityRecord record;
    Classification classification;
  };
  std::vector<Row> rows;  // x ascending over [2^(n-1), 2^n)
  // below[k-1] = #{x in range : k_upper(x) < n - k}, k = 1..4.
  std::array<std::uint64_t, 4> below{};
};

CensusTable census(std::size_t n, const ComplexityTable& table);
CensusTable census(std::size_t n, std::size_t length_cap, std::uint64_t budget, unsigned workers = 1,
                   std::uint64_t enumeration_limit = kDefaultEnumerationLimit);

std::string census_csv(const CensusTable& table);

// 2^m - 2, the number of nonempty strings shorter than m.
std::uint64_t counting_bound(std::size_t m);

struct FlipReport {
  Natural x;
  std::uint64_t b1 = 0;
  std::uint64_t b2 = 0;
  Classification at_b1 = Classification::UninterestingAtBudget;
  Classification at_b2 = Classification::UninterestingAtBudget;
  std::optional<std::size_t> k_at_b1;
  std::optional<std::size_t> k_at_b2;
  bool flipped() const noexcept { return at_b1 != at_b2; }
};

// Classification of x when only runs of at most b1 (resp. b2) steps count.
// Requires b1 <= b2 <= table.budget.
FlipReport classification_flip(const Natural& x, std::uint64_t b1, std::uint64_t b2,
                               const ComplexityTable& table);

// Among all x that are Interesting within the table's budget, the one whose
// cheapest beating program is slowest; b1 = its steps - 1, b2 = its steps.
// nullopt when nothing is Interesting at this scale.
std::optional<FlipReport> find_flip(const ComplexityTable& table);

}  // namespace omegalab
