#pragma once

// JSON views of library results. Keys are sorted (nlohmann::json uses an
// ordered map), so output is byte-stable.

#include <json.hpp>

#include "omegalab/berry.hpp"
#include "omegalab/complexity.hpp"
#include "omegalab/dyadic.hpp"
#include "omegalab/ledger.hpp"
#include "omegalab/machine.hpp"
#include "omegalab/omega.hpp"
#include "omegalab/oracles.hpp"

namespace omegalab::report {

using nlohmann::json;

// Naturals below 2^64 become JSON numbers, larger ones decimal strings.
json to_json(const Natural& n);
// {"exponent": e, "numerator": "<decimal>", "text": "n/2^e"}
json to_json(const Dyadic& d);
json to_json(const RunOutcome& r);
json to_json(const OmegaBound& b, const OmegaBits& bits);
json to_json(const ComplexityRecord& r);
json to_json(const CensusTable& t);
json to_json(const FlipReport& f);
json to_json(const BerryReport& r);
json to_json(const TuringPrefix& t);
json to_json(const CountTrickResult& r, const std::vector<Program>& programs);
json to_json(const OmegaOracleResult& r, const BitString& prefix);
json ledger_summary(const HaltingLedger& ledger);

}  // namespace omegalab::report
