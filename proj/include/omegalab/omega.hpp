#pragma once

#include <cstdint>
#include <string>

#include "omegalab/dyadic.hpp"
#include "omegalab/ledger.hpp"
#include "omegalab/program.hpp"
#include "omegalab/scan.hpp"

namespace omegalab {

enum class BoundKind : std::uint8_t {
  Lower,           // sum over programs seen to halt so far
  ExactTruncated,  // exact sum over all TOTAL programs up to a length cap
};

std::string_view bound_kind_name(BoundKind k);  // "LOWER" / "EXACT_TRUNCATED"

struct OmegaSource {
  MachineVariant variant = MachineVariant::Full;
  std::uint64_t isa_checksum = 0;
  std::size_t max_len = 0;
  std::uint64_t rounds = 0;
  std::string header;  // ledger header line, or a description of the exact enumeration
};

struct OmegaBound {
  Dyadic value;
  OmegaSource source;
  BoundKind kind = BoundKind::Lower;
};

// 2^-|p|.
Dyadic contribution(const Program& p);
Dyadic contribution_of_length(std::size_t bits);

OmegaBound omega_lower(const HaltingLedger& ledger);

struct OmegaBits {
  BitString bits;
  // True unless the bits are exact bits of a length-capped TOTAL sum. Bits of
  // a lower bound say nothing certain about the digits of the limit.
  bool caveat = true;
};

OmegaBits omega_bits(const OmegaBound& bound, std::size_t n);

// Sum of 2^-|p| over every record that decodes to a valid program, halted or
// not. Throws InvariantViolation if the sum exceeds 1 or two valid programs are
// prefixes of one another; either means the codec is broken.
Dyadic kraft_check(const HaltingLedger& ledger);
// Same check over an explicit set of valid program strings.
Dyadic kraft_check(std::vector<BitString> valid);

// Exact sum over TOTAL programs of length <= max_len that halt.
OmegaBound omega_exact_total(std::size_t max_len, unsigned workers = 1,
                             std::uint64_t enumeration_limit = kDefaultEnumerationLimit);

}  // namespace omegalab
