#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "omegalab/bit_string.hpp"
#include "omegalab/machine.hpp"

namespace omegalab {

inline constexpr std::uint64_t kDefaultEnumerationLimit = std::uint64_t{1} << 24;

struct ScanEntry {
  Program program;
  RunOutcome outcome;
};

struct ScanOptions {
  MachineVariant variant = MachineVariant::Full;
  // Step budget per program; nullopt runs TOTAL programs to completion.
  std::optional<std::uint64_t> budget;
  unsigned workers = 1;
  std::uint64_t enumeration_limit = kDefaultEnumerationLimit;
};

// Decodes every bit string of length 1..max_len and runs each valid program.
// Returns the valid programs in length-lex order. Throws ResourceRefusal when
// 2^(max_len+1) exceeds the enumeration limit.
std::vector<ScanEntry> scan_programs(std::size_t max_len, const ScanOptions& options);

// All valid programs of length 1..max_len, length-lex order, without running them.
std::vector<Program> valid_programs(std::size_t max_len, MachineVariant variant,
                                    std::uint64_t enumeration_limit = kDefaultEnumerationLimit);

void check_enumeration_limit(std::size_t max_len, std::uint64_t limit);

}  // namespace omegalab
