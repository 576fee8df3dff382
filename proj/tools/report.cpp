#include "report.hpp"

namespace omegalab::report {

json to_json(const Natural& n) {
  if (n.is_small()) return n.small();
  return n.to_string();
}

json to_json(const Dyadic& d) {
  return {{"numerator", d.numerator().str()}, {"exponent", d.exponent()}, {"text", d.to_string()}};
}

json to_json(const RunOutcome& r) {
  json j = {{"status", run_status_name(r.status)}, {"steps", r.steps_used}, {"eval_steps", r.eval_steps}};
  j["output"] = r.output ? to_json(*r.output) : json(nullptr);
  if (r.error) j["error"] = error_kind_name(*r.error);
  return j;
}

json to_json(const OmegaBound& b, const OmegaBits& bits) {
  return {{"value", to_json(b.value)},
          {"kind", bound_kind_name(b.kind)},
          {"bits", bits.bits.to_string()},
          {"caveat", bits.caveat},
          {"source", {{"header", b.source.header}, {"max_len", b.source.max_len}, {"rounds", b.source.rounds}}}};
}

json to_json(const ComplexityRecord& r) {
  return {{"x", to_json(r.x)},
          {"k_upper", r.k_upper ? json(*r.k_upper) : json(nullptr)},
          {"found", r.k_upper.has_value()},
          {"witness_bits", r.witness.to_string()},
          {"literal_size", literal_program(r.x).size()},
          {"classification", classification_name(classify(r))},
          {"budget", r.budget},
          {"length_cap", r.length_cap}};
}

json to_json(const CensusTable& t) {
  json rows = json::array();
  for (const auto& row : t.rows) {
    rows.push_back({{"x", to_json(row.record.x)},
                    {"k_upper", row.record.k_upper ? json(*row.record.k_upper) : json(nullptr)},
                    {"witness_bits", row.record.k_upper ? row.record.witness.to_string() : ""},
                    {"classification", classification_name(row.classification)}});
  }
  json below = json::object();
  for (std::size_t k = 1; k <= 4; ++k) below[std::to_string(k)] = t.below[k - 1];
  return {{"n", t.n}, {"budget", t.budget}, {"length_cap", t.length_cap}, {"rows", rows},
          {"count_k_upper_below_n_minus_k", below}};
}

json to_json(const FlipReport& f) {
  auto k = [](const std::optional<std::size_t>& v) { return v ? json(*v) : json(nullptr); };
  return {{"x", to_json(f.x)},
          {"b1", f.b1},
          {"b2", f.b2},
          {"classification_b1", classification_name(f.at_b1)},
          {"classification_b2", classification_name(f.at_b2)},
          {"k_upper_b1", k(f.k_at_b1)},
          {"k_upper_b2", k(f.k_at_b2)},
          {"flipped", f.flipped()}};
}

json to_json(const BerryReport& r) {
  return {{"L", r.query.L},
          {"B", r.query.B},
          {"value", to_json(r.value)},
          {"generated_bits", r.generated.raw.to_string()},
          {"generated_size", r.generated.size()},
          {"size_bound", r.size_bound},
          {"c0", berry_template_c0()},
          {"generated_status", run_status_name(r.run.status)},
          {"generated_output", r.run.output ? to_json(*r.run.output) : json(nullptr)},
          {"generated_steps", r.run.steps_used},
          {"inconclusive", r.inconclusive()},
          {"consistent", r.consistent()},
          {"generated_size_at_least_L", r.generated.size() >= r.query.L},
          {"generated_steps_exceed_B", r.run.steps_used > r.query.B}};
}

json to_json(const TuringPrefix& t) {
  std::size_t ones = 0;
  for (std::size_t i = 0; i < t.bits.size(); ++i) ones += t.bits[i];
  return {{"N", t.N}, {"budget", t.budget}, {"bits", t.bits.to_string()}, {"ones", ones},
          {"under_approximation", true}};
}

json to_json(const CountTrickResult& r, const std::vector<Program>& programs) {
  json verdicts = json::array();
  for (std::size_t i = 0; i < programs.size(); ++i) {
    verdicts.push_back({{"bits", programs[i].raw.to_string()}, {"verdict", verdict_name(r.verdicts[i])}});
  }
  return {{"K", programs.size()},
          {"m", r.m},
          {"status", count_status_name(r.status)},
          {"verdicts", verdicts},
          {"steps", r.steps_used},
          {"rounds", r.rounds},
          {"bits_of_information", r.bits_of_information},
          {"raw_bits", programs.size()}};
}

json to_json(const OmegaOracleResult& r, const BitString& prefix) {
  json verdicts = json::array();
  for (std::size_t i = 0; i < r.programs.size(); ++i) {
    verdicts.push_back({{"bits", r.programs[i].raw.to_string()}, {"verdict", verdict_name(r.verdicts[i])}});
  }
  return {{"L", r.L},
          {"N", prefix.size()},
          {"prefix", prefix.to_string()},
          {"target", to_json(r.target)},
          {"bound_reached", to_json(r.bound_reached)},
          {"rounds", r.rounds},
          {"programs_decided", r.programs.size()},
          {"never_halts_by_deduction", r.deduced},
          {"verdicts", verdicts}};
}

json ledger_summary(const HaltingLedger& ledger) {
  std::uint64_t counts[3] = {0, 0, 0};
  for (const auto& [bits, rec] : ledger.records) ++counts[static_cast<int>(rec.status)];
  const auto lower = omega_lower(ledger);
  return {{"header", ledger.header_line()},
          {"max_len", ledger.max_len},
          {"rounds", ledger.rounds_completed},
          {"records", ledger.records.size()},
          {"halted", counts[static_cast<int>(RecordStatus::Halted)]},
          {"errors", counts[static_cast<int>(RecordStatus::Error)]},
          {"running", counts[static_cast<int>(RecordStatus::Running)]},
          {"omega_lower", to_json(lower.value)},
          {"kraft_sum", to_json(kraft_check(ledger))}};
}

}  // namespace omegalab::report
