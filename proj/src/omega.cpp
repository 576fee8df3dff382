#include "omegalab/omega.hpp"

#include <algorithm>

#include "omegalab/errors.hpp"

namespace omegalab {

std::string_view bound_kind_name(BoundKind k) {
  return k == BoundKind::Lower ? "LOWER" : "EXACT_TRUNCATED";
}

Dyadic contribution_of_length(std::size_t bits) { return Dyadic::power_of_half(bits); }

Dyadic contribution(const Program& p) { return contribution_of_length(p.size()); }

OmegaBound omega_lower(const HaltingLedger& ledger) {
  OmegaBound bound;
  bound.kind = BoundKind::Lower;
  bound.source = {ledger.variant, ledger.isa_checksum, ledger.max_len, ledger.rounds_completed,
                  ledger.header_line()};
  for (const auto& [bits, rec] : ledger.records) {
    if (rec.status == RecordStatus::Halted) bound.value += contribution_of_length(bits.size());
  }
  return bound;
}

OmegaBits omega_bits(const OmegaBound& bound, std::size_t n) {
  return {bound.value.fraction_bits(n), bound.kind != BoundKind::ExactTruncated};
}

Dyadic kraft_check(std::vector<BitString> valid) {
  // In plain lexicographic order a string can only prefix its successors, and
  // if it prefixes any of them it prefixes the next one.
  std::vector<std::string> lex;
  lex.reserve(valid.size());
  for (const auto& b : valid) lex.push_back(b.to_string());
  std::sort(lex.begin(), lex.end());
  for (std::size_t i = 0; i + 1 < lex.size(); ++i) {
    if (lex[i + 1].compare(0, lex[i].size(), lex[i]) == 0) {
      throw InvariantViolation("prefix-freeness violated: " + lex[i] + " is a prefix of " + lex[i + 1]);
    }
  }
  Dyadic sum;
  for (const auto& b : valid) sum += contribution_of_length(b.size());
  if (sum > Dyadic(BigInt(1), 0)) throw InvariantViolation("Kraft sum exceeds 1: " + sum.to_string());
  return sum;
}

Dyadic kraft_check(const HaltingLedger& ledger) {
  std::vector<BitString> valid;
  for (const auto& [bits, rec] : ledger.records) {
    if (try_decode_program(bits, ledger.variant).program) valid.push_back(bits);
  }
  return kraft_check(std::move(valid));
}

OmegaBound omega_exact_total(std::size_t max_len, unsigned workers, std::uint64_t enumeration_limit) {
  ScanOptions options;
  options.variant = MachineVariant::Total;
  options.workers = workers;
  options.enumeration_limit = enumeration_limit;
  OmegaBound bound;
  bound.kind = BoundKind::ExactTruncated;
  bound.source = {MachineVariant::Total, isa_checksum(), max_len, 0,
                  "exact variant=TOTAL isa=" + isa_checksum_hex() + " maxlen=" + std::to_string(max_len)};
  for (const auto& entry : scan_programs(max_len, options)) {
    if (entry.outcome.halted()) bound.value += contribution(entry.program);
  }
  return bound;
}

}  // namespace omegalab
