#include "cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "omegalab/dovetail.hpp"
#include "omegalab/errors.hpp"
#include "report.hpp"

namespace omegalab {

namespace {

using report::json;

struct Flags {
  std::string bits;
  std::vector<std::string> bits_list;
  std::optional<std::uint64_t> budget;
  std::uint64_t rounds = 0;
  std::optional<std::size_t> max_len;
  std::string ledger;
  unsigned workers = 1;
  std::size_t n = 0;
  std::uint64_t L = 0;
  std::uint64_t B = 0;
  std::uint64_t meta_budget = 100'000'000;
  std::string m = "auto";
  std::optional<std::size_t> N;
  std::string variant = "full";
  std::string format;
  std::uint64_t enumeration_limit = kDefaultEnumerationLimit;
  std::string x;
  std::string action;
  std::vector<std::string> files;
  std::size_t omega_bits = 16;
};

struct Context {
  std::ostream& out;
  std::ostream& err;
  std::string command;
  MachineVariant variant = MachineVariant::Full;

  void diagnostic(const std::string& extra = {}) const {
    err << "omegalab " << command << ": isa=" << isa_checksum_hex() << " variant=" << variant_name(variant);
    if (!extra.empty()) err << ' ' << extra;
    err << '\n';
  }
  void emit(json j) const {
    j["isa"] = isa_checksum_hex();
    j["variant"] = variant_name(variant);
    out << j.dump(2) << '\n';
  }
};

BitString parse_bits(const std::string& text) {
  try {
    return BitString::parse(text);
  } catch (const std::invalid_argument&) {
    throw UsageError("--bits expects a string of 0 and 1, got '" + text + "'");
  }
}

Program parse_program(const std::string& text, MachineVariant variant) {
  auto decoded = try_decode_program(parse_bits(text), variant);
  if (!decoded.program) {
    throw UsageError("'" + text + "' is not a valid " + std::string(variant_name(variant)) +
                     " program: " + std::string(decode_failure_name(decoded.failure)));
  }
  return std::move(*decoded.program);
}

std::size_t need(const std::optional<std::size_t>& v, const char* flag) {
  if (!v) throw UsageError(std::string(flag) + " is required");
  return *v;
}

void cmd_run(const Flags& f, const Context& c) {
  const Program p = parse_program(f.bits, c.variant);
  RunOutcome r;
  if (!f.budget && c.variant == MachineVariant::Total) {
    r = run_total(p);
  } else {
    const std::uint64_t b = f.budget.value_or(10000);
    if (b == 0) throw UsageError("--budget must be >= 1");
    r = run(p, b);
  }
  c.diagnostic();
  auto j = report::to_json(r);
  j["size"] = p.size();
  c.emit(j);
}

void cmd_enumerate(const Flags& f, const Context& c, bool variant_given) {
  HaltingLedger ledger;
  const bool resume = !f.ledger.empty() && std::filesystem::exists(f.ledger);
  if (resume) {
    ledger = ledger_load(std::filesystem::path(f.ledger));
    if (f.max_len && *f.max_len != ledger.max_len) throw UsageError("--max-len differs from the ledger's maxlen");
    if (variant_given && c.variant != ledger.variant) throw UsageError("--variant differs from the ledger's variant");
  } else {
    const std::size_t max_len = need(f.max_len, "--max-len");
    check_enumeration_limit(max_len, f.enumeration_limit);
    ledger = make_ledger(c.variant, max_len);
  }
  if (strings_touched(ledger.max_len, ledger.rounds_completed + f.rounds) > f.enumeration_limit) {
    throw ResourceRefusal("enumerate: would touch more strings than the enumeration limit");
  }
  DovetailOptions opt;
  opt.workers = f.workers;
  ledger = dovetail(std::move(ledger), f.rounds, opt);
  Context shown = c;
  shown.variant = ledger.variant;
  shown.diagnostic(resume ? "resumed=" + f.ledger : std::string{});
  if (f.ledger.empty()) {
    ledger_save(ledger, c.out);
    return;
  }
  ledger_save(ledger, std::filesystem::path(f.ledger));
  auto j = report::ledger_summary(ledger);
  j["ledger"] = f.ledger;
  shown.emit(j);
}

void cmd_omega(const Flags& f, const Context& c) {
  OmegaBound bound;
  MachineVariant variant = c.variant;
  if (!f.ledger.empty()) {
    auto ledger = ledger_load(std::filesystem::path(f.ledger));
    variant = ledger.variant;
    bound = omega_lower(ledger);
  } else if (c.variant == MachineVariant::Total) {
    bound = omega_exact_total(need(f.max_len, "--max-len"), f.workers, f.enumeration_limit);
  } else {
    const std::size_t max_len = need(f.max_len, "--max-len");
    check_enumeration_limit(max_len, f.enumeration_limit);
    DovetailOptions opt;
    opt.workers = f.workers;
    bound = omega_lower(dovetail(make_ledger(variant, max_len), f.rounds, opt));
  }
  Context shown = c;
  shown.variant = variant;
  shown.diagnostic();
  shown.emit(report::to_json(bound, omega_bits(bound, f.omega_bits)));
}

void cmd_census(const Flags& f, const Context& c) {
  const std::size_t cap = need(f.max_len, "--max-len");
  const auto table = ComplexityTable::from_scan(cap, f.budget.value_or(1000), f.workers, f.enumeration_limit);
  const auto t = census(f.n, table);
  const auto flip = find_flip(table);
  std::string counts;
  for (std::size_t k = 1; k <= 4; ++k) counts += " below_n_minus_" + std::to_string(k) + "=" + std::to_string(t.below[k - 1]);
  c.diagnostic("n=" + std::to_string(t.n) + counts + (flip ? "" : " flip=none_at_this_scale"));
  if (f.format == "csv") {
    c.out << census_csv(t);
    return;
  }
  auto j = report::to_json(t);
  j["flip"] = flip ? report::to_json(*flip) : json("none at this scale");
  c.emit(j);
}

void cmd_k(const Flags& f, const Context& c) {
  Natural x;
  try {
    x = Natural::from_decimal(f.x);
  } catch (const std::invalid_argument&) {
    throw UsageError("k expects a natural number, got '" + f.x + "'");
  }
  ComplexityRecord rec;
  Context shown = c;
  if (!f.ledger.empty()) {
    auto ledger = ledger_load(std::filesystem::path(f.ledger));
    shown.variant = ledger.variant;
    rec = k_upper(x, ledger);
  } else {
    rec = k_upper(x, ComplexityTable::from_scan(need(f.max_len, "--max-len"), f.budget.value_or(1000), f.workers,
                                                f.enumeration_limit));
  }
  shown.diagnostic();
  shown.emit(report::to_json(rec));
}

void cmd_berry(const Flags& f, const Context& c) {
  auto r = berry_report({f.L, f.B}, f.meta_budget, f.workers, f.enumeration_limit);
  c.diagnostic(r.inconclusive() ? "generated program exhausted the meta budget" : "");
  c.emit(report::to_json(r));
}

void cmd_turing(const Flags& f, const Context& c) {
  const std::size_t N = need(f.N, "--N");
  const std::uint64_t budget = f.budget.value_or(1000);
  TuringPrefix t;
  MachineVariant variant = c.variant;
  if (!f.ledger.empty()) {
    auto ledger = ledger_load(std::filesystem::path(f.ledger));
    variant = ledger.variant;
    t = turing_prefix(N, budget, ledger);
  } else {
    if (N > f.enumeration_limit) throw ResourceRefusal("turing: N exceeds the enumeration limit");
    t = turing_prefix(N, budget, c.variant);
  }
  Context shown = c;
  shown.variant = variant;
  shown.diagnostic();
  shown.emit(report::to_json(t));
}

void cmd_count_trick(const Flags& f, const Context& c) {
  if (f.bits_list.empty()) throw UsageError("count-trick needs at least one --bits program");
  std::vector<Program> programs;
  for (const auto& b : f.bits_list) programs.push_back(parse_program(b, c.variant));
  std::uint64_t m = 0;
  bool assumed = false;
  if (f.m == "auto") {
    // Ground truth for TOTAL; for FULL a high-budget run whose zeros are only assumed.
    for (const auto& p : programs) {
      m += c.variant == MachineVariant::Total ? run_total(p).halted() : run(p, f.budget.value_or(1'000'000)).halted();
    }
    assumed = c.variant == MachineVariant::Full;
  } else {
    try {
      std::size_t used = 0;
      m = std::stoull(f.m, &used);
      if (used != f.m.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw UsageError("--m expects an integer or 'auto'");
    }
  }
  auto r = solve_with_count(programs, m, f.meta_budget);
  c.diagnostic("status=" + std::string(count_status_name(r.status)));
  auto j = report::to_json(r, programs);
  j["m_source"] = f.m == "auto" ? (assumed ? "auto_high_budget_assumed" : "auto_ground_truth") : "given";
  c.emit(j);
}

void cmd_omega_oracle(const Flags& f, const Context& c) {
  if (f.L == 0) throw UsageError("--L is required");
  BitString prefix;
  if (!f.bits.empty()) {
    prefix = parse_bits(f.bits);
    if (f.N && *f.N != prefix.size()) throw UsageError("--N does not match the length of --bits");
  } else {
    const std::size_t N = need(f.N, "--N");
    if (N > f.L) throw UsageError("--N must not exceed --L");
    prefix = omega_exact_total(f.L, f.workers, f.enumeration_limit).value.fraction_bits(N);
  }
  Context shown = c;
  shown.variant = MachineVariant::Total;
  OmegaOracleResult r;
  try {
    r = omega_prefix_oracle(prefix, f.L, f.workers, f.enumeration_limit);
  } catch (const UnreachableTarget& e) {
    throw UsageError(e.what());
  }
  shown.diagnostic(f.bits.empty() ? "prefix=exact" : "prefix=given");
  auto j = report::to_json(r, prefix);
  j["prefix_source"] = f.bits.empty() ? "exact" : "given";
  shown.emit(j);
}

void cmd_ledger(const Flags& f, const Context& c) {
  if (f.action == "inspect") {
    if (f.files.size() != 1) throw UsageError("ledger inspect takes one file");
    auto ledger = ledger_load(std::filesystem::path(f.files[0]));
    Context shown = c;
    shown.variant = ledger.variant;
    shown.diagnostic();
    shown.emit(report::ledger_summary(ledger));
    return;
  }
  if (f.action != "merge") throw UsageError("ledger action must be inspect or merge");
  if (f.files.size() < 2) throw UsageError("ledger merge takes two or more files");
  auto merged = ledger_load(std::filesystem::path(f.files[0]));
  for (std::size_t i = 1; i < f.files.size(); ++i) merged = merge(merged, ledger_load(std::filesystem::path(f.files[i])));
  Context shown = c;
  shown.variant = merged.variant;
  shown.diagnostic();
  if (f.ledger.empty()) {
    ledger_save(merged, c.out);
    return;
  }
  ledger_save(merged, std::filesystem::path(f.ledger));
  auto j = report::ledger_summary(merged);
  j["ledger"] = f.ledger;
  shown.emit(j);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"omegalab: toy prefix-free machine, halting-probability bounds and naming experiments"};
  app.require_subcommand(1);
  Flags f;

  auto add_workers = [&](CLI::App* s) {
    s->add_option("--workers", f.workers, "Worker threads")->check(CLI::Range(1u, 256u));
  };
  auto add_limit = [&](CLI::App* s) {
    s->add_option("--enumeration-limit", f.enumeration_limit, "Refuse work touching more strings than this");
  };
  auto add_variant = [&](CLI::App* s) {
    return s->add_option("--variant", f.variant, "full or total")->check(CLI::IsMember({"full", "total"}, CLI::ignore_case));
  };

  auto* run_cmd = app.add_subcommand("run", "Run one program");
  run_cmd->add_option("--bits", f.bits, "Program bits")->required();
  run_cmd->add_option("--budget", f.budget, "Step budget (default 10000; TOTAL runs to completion without it)");
  add_variant(run_cmd);

  auto* enumerate_cmd = app.add_subcommand("enumerate", "Dovetail all strings up to --max-len");
  enumerate_cmd->add_option("--max-len", f.max_len, "Longest string enumerated");
  enumerate_cmd->add_option("--rounds", f.rounds, "Rounds to add");
  enumerate_cmd->add_option("--ledger", f.ledger, "Ledger file, resumed if it exists");
  auto* enumerate_variant = add_variant(enumerate_cmd);
  add_workers(enumerate_cmd);
  add_limit(enumerate_cmd);

  auto* omega_cmd = app.add_subcommand("omega", "Halting probability bound");
  omega_cmd->add_option("--ledger", f.ledger, "Ledger to sum");
  omega_cmd->add_option("--bits", f.omega_bits, "Number of binary digits to print");
  omega_cmd->add_option("--max-len", f.max_len, "Length cap when no ledger is given");
  omega_cmd->add_option("--rounds", f.rounds, "Dovetail rounds when no ledger is given (FULL)");
  add_variant(omega_cmd);
  add_workers(omega_cmd);
  add_limit(omega_cmd);

  auto* census_cmd = app.add_subcommand("census", "Budgeted complexity of every n-bit integer");
  census_cmd->add_option("--n", f.n, "Integer width")->required();
  census_cmd->add_option("--max-len", f.max_len, "Program length cap")->required();
  census_cmd->add_option("--budget", f.budget, "Step budget (default 1000)");
  census_cmd->add_option("--format", f.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  add_workers(census_cmd);
  add_limit(census_cmd);

  auto* k_cmd = app.add_subcommand("k", "Upper bound on program size for one integer");
  k_cmd->add_option("x", f.x, "The integer")->required();
  k_cmd->add_option("--ledger", f.ledger, "Ledger to search");
  k_cmd->add_option("--max-len", f.max_len, "Length cap when no ledger is given");
  k_cmd->add_option("--budget", f.budget, "Step budget when no ledger is given (default 1000)");
  add_workers(k_cmd);
  add_limit(k_cmd);

  auto* berry_cmd = app.add_subcommand("berry", "Budgeted Berry number and its generated program");
  berry_cmd->add_option("--L", f.L, "Length threshold (exclusive)")->required();
  berry_cmd->add_option("--B", f.B, "Step budget per scanned program")->required();
  berry_cmd->add_option("--meta-budget", f.meta_budget, "Step budget for the generated program");
  add_workers(berry_cmd);
  add_limit(berry_cmd);

  auto* turing_cmd = app.add_subcommand("turing", "First N halting bits in length-lex order");
  turing_cmd->add_option("--N", f.N, "Number of bits")->required();
  turing_cmd->add_option("--budget", f.budget, "Step budget (default 1000)");
  turing_cmd->add_option("--ledger", f.ledger, "Read halts from this ledger instead of running");
  add_variant(turing_cmd);
  add_limit(turing_cmd);

  auto* count_cmd = app.add_subcommand("count-trick", "Decide K programs from their halting count");
  count_cmd->add_option("--bits", f.bits_list, "Program bits (repeat for each program)")->required();
  count_cmd->add_option("--m", f.m, "Halting count, or auto");
  count_cmd->add_option("--meta-budget", f.meta_budget, "Total step budget");
  count_cmd->add_option("--budget", f.budget, "Per-program budget for --m auto on FULL (default 1000000)");
  add_variant(count_cmd);

  auto* oracle_cmd = app.add_subcommand("omega-oracle", "Decide TOTAL programs from a halting-probability prefix");
  oracle_cmd->add_option("--L", f.L, "Length cap of the truncated sum")->required();
  oracle_cmd->add_option("--N", f.N, "Prefix length");
  oracle_cmd->add_option("--bits", f.bits, "Prefix bits (default: the exact prefix)");
  add_workers(oracle_cmd);
  add_limit(oracle_cmd);

  auto* ledger_cmd = app.add_subcommand("ledger", "Inspect or merge ledger files");
  ledger_cmd->add_option("action", f.action, "inspect or merge")->required();
  ledger_cmd->add_option("files", f.files, "Ledger files")->required();
  ledger_cmd->add_option("--ledger", f.ledger, "Write the merged ledger here instead of standard output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  auto* sub = app.get_subcommands().front();
  Context c{out, err, sub->get_name()};
  try {
    c.variant = parse_variant(f.variant);
    if (f.format.empty()) f.format = sub == census_cmd ? "csv" : "json";
    if (sub == run_cmd) cmd_run(f, c);
    else if (sub == enumerate_cmd) cmd_enumerate(f, c, enumerate_variant->count() > 0);
    else if (sub == omega_cmd) cmd_omega(f, c);
    else if (sub == census_cmd) cmd_census(f, c);
    else if (sub == k_cmd) cmd_k(f, c);
    else if (sub == berry_cmd) cmd_berry(f, c);
    else if (sub == turing_cmd) cmd_turing(f, c);
    else if (sub == count_cmd) cmd_count_trick(f, c);
    else if (sub == oracle_cmd) cmd_omega_oracle(f, c);
    else cmd_ledger(f, c);
  } catch (const UsageError& e) {
    err << "omegalab: usage error: " << e.what() << '\n';
    return 1;
  } catch (const LedgerError& e) {
    err << "omegalab: " << e.what() << '\n';
    return 1;
  } catch (const ResourceRefusal& e) {
    err << "omegalab: refused: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "omegalab: internal error: " << e.what() << '\n';
    return 3;
  }
  return 0;
}

}  // namespace omegalab
