#include "omegalab/ledger.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <tuple>
#include <vector>

#include "omegalab/errors.hpp"
#include "omegalab/program.hpp"

namespace omegalab {

namespace {

constexpr std::string_view kMagic = "omegalab-ledger";
constexpr std::string_view kVersion = "v1";

std::vector<std::string_view> split_spaces(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (start <= line.size()) {
    const std::size_t end = line.find(' ', start);
    out.push_back(line.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

std::optional<std::uint64_t> parse_u64(std::string_view text) {
  if (text.empty() || (text.size() > 1 && text[0] == '0')) return std::nullopt;
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) return std::nullopt;
  return v;
}

std::string_view expect_field(std::string_view token, std::string_view key, std::size_t line) {
  if (token.substr(0, key.size()) != key || token.size() <= key.size() || token[key.size()] != '=') {
    throw LedgerError(line, "expected field '" + std::string(key) + "=...'");
  }
  return token.substr(key.size() + 1);
}

int status_rank(RecordStatus s) {
  switch (s) {
    case RecordStatus::Running: return 0;
    case RecordStatus::Error: return 1;
    case RecordStatus::Halted: return 2;
  }
  return 0;
}

}  // namespace

char record_status_code(RecordStatus s) {
  switch (s) {
    case RecordStatus::Halted: return 'H';
    case RecordStatus::Error: return 'E';
    case RecordStatus::Running: return 'R';
  }
  return '?';
}

const LedgerRecord* HaltingLedger::find(const BitString& bits) const {
  auto it = records.find(bits);
  return it == records.end() ? nullptr : &it->second;
}

std::string HaltingLedger::header_line() const {
  std::ostringstream os;
  os << kMagic << ' ' << kVersion << " variant=" << variant_name(variant)
     << " isa=" << to_hex64(isa_checksum) << " maxlen=" << max_len << " rounds=" << rounds_completed;
  return os.str();
}

HaltingLedger make_ledger(MachineVariant variant, std::size_t max_len) {
  HaltingLedger ledger;
  ledger.variant = variant;
  ledger.max_len = max_len;
  return ledger;
}

void ledger_save(const HaltingLedger& ledger, std::ostream& out) {
  out << ledger.header_line() << '\n';
  for (const auto& [bits, rec] : ledger.records) {
    out << bits.size() << ' ' << bits.to_string() << ' ' << record_status_code(rec.status) << ' '
        << rec.steps << ' ' << (rec.output ? rec.output->to_string() : "-") << '\n';
  }
}

void ledger_save(const HaltingLedger& ledger, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw UsageError("cannot write ledger file " + path.string());
  ledger_save(ledger, out);
  if (!out.flush()) throw UsageError("error writing ledger file " + path.string());
}

std::string ledger_to_string(const HaltingLedger& ledger) {
  std::ostringstream os;
  ledger_save(ledger, os);
  return os.str();
}

HaltingLedger ledger_load(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw LedgerError(1, "missing header");
  const auto head = split_spaces(line);
  if (head.size() != 6 || head[0] != kMagic) throw LedgerError(1, "not an omegalab ledger header");
  if (head[1] != kVersion) throw LedgerError(1, "unsupported ledger version '" + std::string(head[1]) + "'");

  HaltingLedger ledger;
  try {
    ledger.variant = parse_variant(expect_field(head[2], "variant", 1));
  } catch (const UsageError& e) {
    throw LedgerError(1, e.what());
  }
  const auto isa = expect_field(head[3], "isa", 1);
  if (isa != isa_checksum_hex()) {
    throw LedgerError(1, "ISA checksum mismatch: file has " + std::string(isa) + ", this build is " +
                             isa_checksum_hex());
  }
  const auto max_len = parse_u64(expect_field(head[4], "maxlen", 1));
  const auto rounds = parse_u64(expect_field(head[5], "rounds", 1));
  if (!max_len || !rounds) throw LedgerError(1, "malformed maxlen or rounds");
  ledger.max_len = *max_len;
  ledger.rounds_completed = *rounds;

  std::size_t line_no = 1;
  const BitString* previous = nullptr;
  while (std::getline(in, line)) {
    ++line_no;
    const auto f = split_spaces(line);
    if (f.size() != 5) throw LedgerError(line_no, "expected 5 space-separated fields");
    LedgerRecord rec;
    const auto len = parse_u64(f[0]);
    try {
      rec.bits = BitString::parse(f[1]);
    } catch (const std::invalid_argument&) {
      throw LedgerError(line_no, "bits field is not a 0/1 string");
    }
    if (!len || *len != rec.bits.size() || rec.bits.empty()) throw LedgerError(line_no, "bit length mismatch");
    if (rec.bits.size() > ledger.max_len) throw LedgerError(line_no, "record longer than maxlen");
    if (f[2] == "H") {
      rec.status = RecordStatus::Halted;
    } else if (f[2] == "E") {
      rec.status = RecordStatus::Error;
    } else if (f[2] == "R") {
      rec.status = RecordStatus::Running;
    } else {
      throw LedgerError(line_no, "status must be H, E or R");
    }
    const auto steps = parse_u64(f[3]);
    if (!steps) throw LedgerError(line_no, "malformed step count");
    rec.steps = *steps;
    if (f[4] == "-") {
      if (rec.status == RecordStatus::Halted) throw LedgerError(line_no, "halted record without output");
    } else {
      if (rec.status != RecordStatus::Halted) throw LedgerError(line_no, "only halted records carry output");
      try {
        rec.output = Natural::from_decimal(f[4]);
      } catch (const std::invalid_argument&) {
        throw LedgerError(line_no, "malformed output");
      }
      if (f[4].size() > 1 && f[4][0] == '0') throw LedgerError(line_no, "malformed output");
    }
    if (rec.status == RecordStatus::Halted &&
        !try_decode_program(rec.bits, ledger.variant).program) {
      throw LedgerError(line_no, "halted record is not a valid program");
    }
    if (previous && !(*previous < rec.bits)) throw LedgerError(line_no, "records not in length-lex order");
    auto [it, inserted] = ledger.records.emplace(rec.bits, std::move(rec));
    previous = &it->first;
  }
  return ledger;
}

HaltingLedger ledger_load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open ledger file " + path.string());
  return ledger_load(in);
}

LedgerRecord merge_record(const LedgerRecord& a, const LedgerRecord& b) {
  auto key = [](const LedgerRecord& r) {
    return std::make_tuple(r.final(), r.steps, status_rank(r.status), r.output.value_or(Natural(0)));
  };
  return key(a) < key(b) ? b : a;
}

HaltingLedger merge(const HaltingLedger& a, const HaltingLedger& b) {
  if (a.variant != b.variant) throw UsageError("cannot merge ledgers of different variants");
  if (a.isa_checksum != b.isa_checksum) throw UsageError("cannot merge ledgers with different ISA checksums");
  HaltingLedger out = a;
  out.max_len = std::max(a.max_len, b.max_len);
  out.rounds_completed = std::max(a.rounds_completed, b.rounds_completed);
  for (const auto& [bits, rec] : b.records) {
    auto [it, inserted] = out.records.emplace(bits, rec);
    if (!inserted) it->second = merge_record(it->second, rec);
  }
  return out;
}

}  // namespace omegalab
