#include "omegalab/oracles.hpp"

#include <cmath>

#include "omegalab/dovetail.hpp"
#include "omegalab/errors.hpp"
#include "omegalab/machine.hpp"
#include "omegalab/omega.hpp"

namespace omegalab {

TuringPrefix turing_prefix(std::uint64_t N, std::uint64_t budget, MachineVariant variant) {
  if (N < 1 || budget < 1) throw UsageError("turing: N and budget must be >= 1");
  TuringPrefix t{N, budget, {}};
  for (std::uint64_t i = 1; i <= N; ++i) {
    auto decoded = try_decode_program(index_to_bits(i), variant);
    t.bits.push_back(decoded.program && run(*decoded.program, budget).halted());
  }
  return t;
}

TuringPrefix turing_prefix(std::uint64_t N, std::uint64_t budget, const HaltingLedger& ledger) {
  if (N < 1) throw UsageError("turing: N must be >= 1");
  TuringPrefix t{N, budget, {}};
  for (std::uint64_t i = 1; i <= N; ++i) {
    const auto* rec = ledger.find(index_to_bits(i));
    t.bits.push_back(rec && rec->status == RecordStatus::Halted && rec->steps <= budget);
  }
  return t;
}

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Halts: return "halts";
    case Verdict::NeverHalts: return "never_halts";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "unknown";
}

std::string_view count_status_name(CountStatus s) {
  switch (s) {
    case CountStatus::Resolved: return "resolved";
    case CountStatus::Inconclusive: return "inconclusive";
    case CountStatus::Inconsistent: return "inconsistent";
  }
  return "unknown";
}

CountTrickResult solve_with_count(const std::vector<Program>& programs, std::uint64_t m,
                                  std::uint64_t meta_budget) {
  const std::size_t K = programs.size();
  if (m > K) throw UsageError("count-trick: m exceeds the number of programs");
  CountTrickResult r;
  r.m = m;
  r.bits_of_information = std::log2(static_cast<double>(K) + 1);
  r.verdicts.assign(K, Verdict::Inconclusive);

  std::vector<Execution> runs;
  runs.reserve(K);
  for (const auto& p : programs) {
    runs.emplace_back(std::shared_ptr<const Program>(std::shared_ptr<const Program>(), &p));
  }
  std::uint64_t halted = 0;
  std::size_t open = K;
  auto finish = [&](CountStatus status, Verdict rest) {
    for (auto& v : r.verdicts) {
      if (v == Verdict::Inconclusive) v = rest;
    }
    r.status = status;
    return r;
  };

  while (halted < m) {
    if (open == 0) return finish(CountStatus::Inconsistent, Verdict::Inconclusive);
    ++r.rounds;
    for (std::size_t i = 0; i < K && halted < m; ++i) {
      if (r.verdicts[i] != Verdict::Inconclusive) continue;
      if (r.steps_used >= meta_budget) return finish(CountStatus::Inconclusive, Verdict::Inconclusive);
      const auto before = runs[i].steps_used();
      const auto out = runs[i].advance(r.rounds);
      r.steps_used += out.steps_used - before;
      if (!out.final()) continue;
      --open;
      if (out.halted()) {
        r.verdicts[i] = Verdict::Halts;
        ++halted;
      } else {
        r.verdicts[i] = Verdict::NeverHalts;
      }
    }
  }
  return finish(CountStatus::Resolved, Verdict::NeverHalts);
}

OmegaOracleResult omega_prefix_oracle(const BitString& prefix, std::size_t L, unsigned workers,
                                      std::uint64_t enumeration_limit) {
  const std::size_t N = prefix.size();
  if (N > L) throw UsageError("omega-oracle: prefix longer than L");
  check_enumeration_limit(L, enumeration_limit);

  OmegaOracleResult r;
  r.L = L;
  r.target = Dyadic::from_binary_fraction(prefix);
  DovetailOptions opt;
  opt.workers = workers;
  Dovetailer d(make_ledger(MachineVariant::Total, L), opt);
  const std::uint64_t last = last_index_of_length(L);

  // Rounds grow geometrically; stopping later than necessary is still sound.
  std::uint64_t step = 1;
  while (true) {
    r.bound_reached = omega_lower(d.ledger()).value;
    if (r.bound_reached >= r.target) break;
    // A TOTAL program finishes within its instruction count, which is below
    // its length, so round `last + L` has settled everything.
    if (d.ledger().rounds_completed >= last + L) {
      throw UnreachableTarget("omega-oracle: the halting sum over TOTAL programs of length <= " +
                              std::to_string(L) + " is " + r.bound_reached.to_string() +
                              ", below the prefix value " + r.target.to_string());
    }
    d.run_rounds(step);
    step = std::min(step * 2, last + L);
  }
  r.rounds = d.ledger().rounds_completed;

  for (auto& p : valid_programs(N, MachineVariant::Total, enumeration_limit)) {
    const auto* rec = d.ledger().find(p.raw);
    Verdict v = Verdict::NeverHalts;
    if (rec && rec->status == RecordStatus::Halted) {
      v = Verdict::Halts;
    } else if (!rec || rec->status == RecordStatus::Running) {
      ++r.deduced;
    }
    r.verdicts.push_back(v);
    r.programs.push_back(std::move(p));
  }
  return r;
}

}  // namespace omegalab
