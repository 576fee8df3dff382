#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>

#include "omegalab/bit_string.hpp"
#include "omegalab/isa.hpp"
#include "omegalab/natural.hpp"

namespace omegalab {

enum class RecordStatus : std::uint8_t { Halted, Error, Running };

char record_status_code(RecordStatus s);  // 'H' / 'E' / 'R'

struct LedgerRecord {
  BitString bits;
  RecordStatus status = RecordStatus::Running;
  std::uint64_t steps = 0;
  std::optional<Natural> output;  // iff Halted

  bool final() const noexcept { return status != RecordStatus::Running; }
  friend bool operator==(const LedgerRecord&, const LedgerRecord&) = default;
};

// Best-known status of every enumerated string. Records are keyed and
// iterated in length-lex order.
struct HaltingLedger {
  MachineVariant variant = MachineVariant::Full;
  std::uint64_t isa_checksum = omegalab::isa_checksum();
  std::size_t max_len = 0;
  std::uint64_t rounds_completed = 0;
  std::map<BitString, LedgerRecord> records;

  const LedgerRecord* find(const BitString& bits) const;
  std::string header_line() const;

  friend bool operator==(const HaltingLedger&, const HaltingLedger&) = default;
};

HaltingLedger make_ledger(MachineVariant variant, std::size_t max_len);

// Line-based text format; see docs/ledger-format.md.
void ledger_save(const HaltingLedger& ledger, std::ostream& out);
void ledger_save(const HaltingLedger& ledger, const std::filesystem::path& path);
std::string ledger_to_string(const HaltingLedger& ledger);
// Throws LedgerError (with line number) on version or checksum mismatch and
// on malformed lines.
HaltingLedger ledger_load(std::istream& in);
HaltingLedger ledger_load(const std::filesystem::path& path);

// Pointwise merge: a final status beats Running, otherwise more steps win.
// Associative, commutative and idempotent. Throws UsageError when variant or
// ISA checksum differ.
HaltingLedger merge(const HaltingLedger& a, const HaltingLedger& b);
LedgerRecord merge_record(const LedgerRecord& a, const LedgerRecord& b);

}  // namespace omegalab
