#include "omegalab/complexity.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace omegalab {

Program literal_program(const Natural& x) {
  return make_program({Instruction::push(x), Instruction::simple(Opcode::OutHalt)});
}

ComplexityTable ComplexityTable::from_ledger(const HaltingLedger& ledger) {
  ComplexityTable t;
  t.budget = ledger.rounds_completed;
  t.length_cap = ledger.max_len;
  // Records iterate in length-lex order, so groups come out sorted.
  for (const auto& [bits, rec] : ledger.records) {
    if (rec.status == RecordStatus::Halted) t.runs_[*rec.output].push_back({bits, rec.steps});
  }
  return t;
}

ComplexityTable ComplexityTable::from_scan(std::size_t length_cap, std::uint64_t budget, unsigned workers,
                                           std::uint64_t enumeration_limit) {
  ScanOptions opt;
  opt.budget = budget;
  opt.workers = workers;
  opt.enumeration_limit = enumeration_limit;
  ComplexityTable t;
  t.budget = budget;
  t.length_cap = length_cap;
  for (const auto& e : scan_programs(length_cap, opt)) {
    if (e.outcome.halted()) t.runs_[*e.outcome.output].push_back({e.program.raw, e.outcome.steps_used});
  }
  return t;
}

const Witness* ComplexityTable::best(const Natural& x) const {
  auto it = runs_.find(x);
  return it == runs_.end() ? nullptr : &it->second.front();
}

const Witness* ComplexityTable::best_within(const Natural& x, std::uint64_t limit) const {
  auto it = runs_.find(x);
  if (it == runs_.end()) return nullptr;
  for (const auto& w : it->second) {
    if (w.steps <= limit) return &w;
  }
  return nullptr;
}

std::uint64_t ComplexityTable::count_below(std::size_t m) const {
  return static_cast<std::uint64_t>(std::count_if(runs_.begin(), runs_.end(), [m](const auto& kv) {
    return kv.second.front().bits.size() < m;
  }));
}

namespace {

ComplexityRecord make_record(const Natural& x, const Witness* w, std::uint64_t budget, std::size_t cap) {
  ComplexityRecord r;
  r.x = x;
  r.budget = budget;
  r.length_cap = cap;
  if (w) {
    r.k_upper = w->bits.size();
    r.witness = w->bits;
  } else {
    r.witness = literal_program(x).raw;
  }
  return r;
}

Classification classify_length(const Natural& x, std::optional<std::size_t> k) {
  if (k && *k < literal_program(x).size()) return Classification::Interesting;
  return Classification::UninterestingAtBudget;
}

}  // namespace

ComplexityRecord k_upper(const Natural& x, const ComplexityTable& table) {
  return make_record(x, table.best(x), table.budget, table.length_cap);
}

ComplexityRecord k_upper(const Natural& x, const HaltingLedger& ledger) {
  const LedgerRecord* found = nullptr;
  for (const auto& [bits, rec] : ledger.records) {
    if (rec.status == RecordStatus::Halted && *rec.output == x) {
      found = &rec;
      break;  // length-lex order: the first hit is the witness
    }
  }
  Witness w;
  if (found) w = {found->bits, found->steps};
  return make_record(x, found ? &w : nullptr, ledger.rounds_completed, ledger.max_len);
}

std::string_view classification_name(Classification c) {
  return c == Classification::Interesting ? "Interesting" : "UninterestingAtBudget";
}

Classification classify(const ComplexityRecord& record) { return classify_length(record.x, record.k_upper); }

CensusTable census(std::size_t n, const ComplexityTable& table) {
  if (n < 2 || n > 40) throw UsageError("census: n must be in 2..40");
  CensusTable out;
  out.n = n;
  out.budget = table.budget;
  out.length_cap = table.length_cap;
  const std::uint64_t lo = std::uint64_t{1} << (n - 1);
  for (std::uint64_t x = lo; x < 2 * lo; ++x) {
    auto rec = k_upper(Natural(x), table);
    for (std::size_t k = 1; k <= 4; ++k) {
      if (rec.k_upper && k < n && *rec.k_upper < n - k) ++out.below[k - 1];
    }
    const auto c = classify(rec);
    out.rows.push_back({std::move(rec), c});
  }
  return out;
}

CensusTable census(std::size_t n, std::size_t length_cap, std::uint64_t budget, unsigned workers,
                   std::uint64_t enumeration_limit) {
  if (n < 2 || n > 40) throw UsageError("census: n must be in 2..40");
  return census(n, ComplexityTable::from_scan(length_cap, budget, workers, enumeration_limit));
}

std::string census_csv(const CensusTable& table) {
  std::ostringstream out;
  out << "x,k_upper,witness_bits,classification\n";
  for (const auto& row : table.rows) {
    out << row.record.x.to_string() << ',';
    if (row.record.k_upper) {
      out << *row.record.k_upper << ',' << row.record.witness.to_string();
    } else {
      out << "none,";
    }
    out << ',' << classification_name(row.classification) << '\n';
  }
  return out.str();
}

std::uint64_t counting_bound(std::size_t m) {
  if (m >= 64) throw std::invalid_argument("counting_bound: m too large");
  return m == 0 ? 0 : (std::uint64_t{1} << m) - 2;
}

FlipReport classification_flip(const Natural& x, std::uint64_t b1, std::uint64_t b2, const ComplexityTable& table) {
  if (b1 > b2 || b2 > table.budget) {
    throw UsageError("classification_flip: need b1 <= b2 <= the table's budget");
  }
  FlipReport r;
  r.x = x;
  r.b1 = b1;
  r.b2 = b2;
  if (const auto* w = table.best_within(x, b1)) r.k_at_b1 = w->bits.size();
  if (const auto* w = table.best_within(x, b2)) r.k_at_b2 = w->bits.size();
  r.at_b1 = classify_length(x, r.k_at_b1);
  r.at_b2 = classify_length(x, r.k_at_b2);
  return r;
}

std::optional<FlipReport> find_flip(const ComplexityTable& table) {
  std::optional<std::pair<std::uint64_t, Natural>> slowest;  // (steps, x)
  for (const auto& [x, runs] : table.entries()) {
    const std::size_t lit = literal_program(x).size();
    std::optional<std::uint64_t> cheapest;
    for (const auto& w : runs) {
      if (w.bits.size() < lit && (!cheapest || w.steps < *cheapest)) cheapest = w.steps;
    }
    if (cheapest && (!slowest || *cheapest > slowest->first)) slowest.emplace(*cheapest, x);
  }
  if (!slowest) return std::nullopt;
  return classification_flip(slowest->second, slowest->first - 1, slowest->first, table);
}

}  // namespace omegalab
