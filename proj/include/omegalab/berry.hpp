#pragma once

#include <cstdint>
#include <optional>

#include "omegalab/machine.hpp"
#include "omegalab/natural.hpp"
#include "omegalab/program.hpp"
#include "omegalab/scan.hpp"

namespace omegalab {

struct BerryQuery {
  std::uint64_t L = 1;  // length threshold, exclusive
  std::uint64_t B = 1;  // step budget for each scanned program
};

// Least natural that no program shorter than L bits outputs within B steps.
// Throws ResourceRefusal when the strings below L exceed the enumeration limit.
Natural berry_number(const BerryQuery& q, unsigned workers = 1,
                     std::uint64_t enumeration_limit = kDefaultEnumerationLimit);

// A fixed template parameterized only by L and B. It walks every string
// shorter than L, EVALs each with budget B, and outputs the first natural none
// of them produced. See docs/berry.md for the stack layout.
Program emit_berry_program(const BerryQuery& q);

// Template bits that do not depend on the query, header included.
std::size_t berry_template_c0();
// c0 + |gamma(L)| + |gamma(B)|.
std::size_t berry_size_bound(const BerryQuery& q);

struct BerryReport {
  BerryQuery query;
  Natural value;
  Program generated;
  std::size_t size_bound = 0;
  RunOutcome run;  // generated program under the meta budget
  bool inconclusive() const noexcept { return !run.halted(); }
  // Output matches the host value and the size stays within the bound.
  bool consistent() const;
};

BerryReport berry_report(const BerryQuery& q, std::uint64_t meta_budget, unsigned workers = 1,
                         std::uint64_t enumeration_limit = kDefaultEnumerationLimit);

}  // namespace omegalab
