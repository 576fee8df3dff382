#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "omegalab/complexity.hpp"
#include "omegalab/dovetail.hpp"
#include "omegalab/errors.hpp"
#include "omegalab/machine.hpp"
#include "reference_decoder.hpp"

namespace omegalab {
namespace {

// |gamma(n)| = 2 floor(log2 n) + 1, computed on the BigInt directly.
std::size_t gamma_bits(const BigInt& n) { return 2 * (msb(n)) + 1; }

std::size_t literal_size_formula(const BigInt& x) {
  const std::size_t code = 3 + gamma_bits(x + 1) + 3;
  return gamma_bits(BigInt(code)) + code;
}

TEST(Literal, Examples) {
  EXPECT_EQ(literal_program(Natural(0)).raw.to_string(), "001110001110");
  const auto five = literal_program(Natural(5));
  EXPECT_EQ(five.size(), 18u);
  EXPECT_EQ(*run(five, 10).output, Natural(5));
  const auto big = literal_program(Natural(123796402));
  EXPECT_EQ(big.size(), 70u);
  EXPECT_EQ(big.size(), literal_size_formula(BigInt(123796402)));
  EXPECT_EQ(*run_total(big).output, Natural(123796402));
}

TEST(Literal, SizeFormulaAndRun) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    BigInt x = BigInt(rng()) << static_cast<unsigned>(rng() % 200);
    x >>= static_cast<unsigned>(rng() % 260);
    const auto p = literal_program(Natural(x));
    EXPECT_EQ(p.size(), literal_size_formula(x));
    EXPECT_EQ(run_total(p).output->to_big(), x);
    if (x < (BigInt(1) << 61)) EXPECT_TRUE(testing::ref_decode(p.raw.to_string(), true).has_value());
  }
}

TEST(KUpper, ZeroFromDovetail) {
  auto ledger = dovetail(make_ledger(MachineVariant::Full, 12), 10000);
  auto rec = k_upper(Natural(0), ledger);
  ASSERT_TRUE(rec.k_upper);
  EXPECT_EQ(*rec.k_upper, 12u);
  EXPECT_EQ(rec.witness.to_string(), "001110001110");
  EXPECT_EQ(rec.budget, 10000u);
  EXPECT_EQ(rec.length_cap, 12u);
  // Oracle: exhaustive search below 12 bits finds no halting program at all.
  std::size_t decoded = 0;
  for (int len = 1; len < 12; ++len) {
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << len); ++v) {
      auto bits = BitString::from_uint(v, static_cast<std::size_t>(len));
      if (!testing::ref_decode(bits.to_string(), false)) continue;
      ++decoded;
      EXPECT_FALSE(run(decode_program(bits, MachineVariant::Full), 10000).halted()) << bits.to_string();
    }
  }
  EXPECT_GT(decoded, 0u);
}

TEST(KUpper, FallbackToLiteral) {
  auto ledger = dovetail(make_ledger(MachineVariant::Full, 4), 100);
  auto rec = k_upper(Natural(7), ledger);
  EXPECT_FALSE(rec.k_upper);
  EXPECT_EQ(rec.witness, literal_program(Natural(7)).raw);
  EXPECT_EQ(classify(rec), Classification::UninterestingAtBudget);
}

TEST(KUpper, TableFromLedgerMatchesTableFromScan) {
  // 9000 rounds cover every index up to length 12 with budget 9000.
  auto from_ledger = ComplexityTable::from_ledger(dovetail(make_ledger(MachineVariant::Full, 12), 9000));
  auto from_scan = ComplexityTable::from_scan(12, 9000);
  ASSERT_EQ(from_ledger.entries().size(), from_scan.entries().size());
  for (const auto& [x, runs] : from_scan.entries()) {
    const auto& other = from_ledger.entries().at(x);
    ASSERT_EQ(runs.size(), other.size());
    for (std::size_t i = 0; i < runs.size(); ++i) {
      EXPECT_EQ(runs[i].bits, other[i].bits);
      EXPECT_EQ(runs[i].steps, other[i].steps);
    }
  }
}

TEST(KUpper, WitnessesReRun) {
  auto table = ComplexityTable::from_scan(16, 1000);
  ASSERT_FALSE(table.entries().empty());
  for (const auto& [x, runs] : table.entries()) {
    for (const auto& w : runs) {
      auto out = run(decode_program(w.bits, MachineVariant::Full), table.budget);
      ASSERT_TRUE(out.halted());
      EXPECT_EQ(*out.output, x);
      EXPECT_EQ(out.steps_used, w.steps);
    }
    auto rec = k_upper(x, table);
    EXPECT_EQ(*rec.k_upper, rec.witness.size());
    // Literal bound: once the literal is in range it caps k_upper.
    if (literal_program(x).size() <= table.length_cap) EXPECT_LE(*rec.k_upper, literal_program(x).size());
  }
}

TEST(KUpper, AntiMonotoneInBudgetAndCap) {
  const std::vector<std::pair<std::size_t, std::uint64_t>> grid = {{12, 10}, {14, 100}, {16, 1000}, {16, 5000}};
  std::vector<ComplexityTable> tables;
  for (auto [cap, budget] : grid) tables.push_back(ComplexityTable::from_scan(cap, budget));
  for (std::size_t i = 0; i + 1 < tables.size(); ++i) {
    for (const auto& [x, runs] : tables[i].entries()) {
      const auto* bigger = tables[i + 1].best(x);
      ASSERT_NE(bigger, nullptr);
      EXPECT_LE(bigger->bits.size(), runs.front().bits.size());
    }
  }
}

TEST(Census, GoldenN4) {
  auto table = census(4, 16, 1000);
  ASSERT_EQ(table.rows.size(), 8u);
  std::ifstream golden(std::string(OMEGALAB_GOLDEN_DIR) + "/census_n4_cap16_b1000.csv");
  ASSERT_TRUE(golden);
  std::stringstream expected;
  expected << golden.rdbuf();
  EXPECT_EQ(census_csv(table), expected.str());
}

TEST(Census, ClassificationRuleAndCounts) {
  auto table = ComplexityTable::from_scan(16, 1000);
  for (std::size_t n = 2; n <= 12; ++n) {
    auto c = census(n, table);
    ASSERT_EQ(c.rows.size(), std::size_t{1} << (n - 1));
    for (std::size_t i = 0; i < c.rows.size(); ++i) {
      const auto& row = c.rows[i];
      EXPECT_EQ(row.record.x, Natural((std::uint64_t{1} << (n - 1)) + i));
      const bool beats = row.record.k_upper && *row.record.k_upper < literal_program(row.record.x).size();
      EXPECT_EQ(row.classification == Classification::Interesting, beats);
    }
    for (std::size_t k = 1; k <= 4 && k < n; ++k) {
      // (2^(n-k) - 2) / 2^(n-1) < 2^(1-k)
      EXPECT_LE(c.below[k - 1], counting_bound(n - k));
      EXPECT_LT(c.below[k - 1] * (std::uint64_t{1} << (k - 1)), c.rows.size());
    }
  }
  EXPECT_THROW(census(1, table), UsageError);
}

TEST(Census, CountingBound) {
  auto table = ComplexityTable::from_scan(16, 1000);
  for (std::size_t m = 0; m <= 16; ++m) EXPECT_LE(table.count_below(m), counting_bound(m)) << m;
  EXPECT_EQ(table.count_below(12), 0u);
  EXPECT_EQ(table.count_below(13), 1u);
  EXPECT_EQ(counting_bound(1), 0u);
  EXPECT_EQ(counting_bound(5), 30u);
}

TEST(Census, Refusal) { EXPECT_THROW(census(4, 20, 10, 1, 1 << 20), ResourceRefusal); }

TEST(Flip, EqualBudgetsNeverFlip) {
  auto table = ComplexityTable::from_scan(14, 500);
  for (const auto& [x, runs] : table.entries()) {
    for (std::uint64_t b : {1, 2, 10, 500}) EXPECT_FALSE(classification_flip(x, b, b, table).flipped());
  }
  EXPECT_THROW(classification_flip(Natural(0), 5, 4, table), UsageError);
  EXPECT_THROW(classification_flip(Natural(0), 5, 501, table), UsageError);
}

TEST(Flip, NoneAtCap16) {
  EXPECT_FALSE(find_flip(ComplexityTable::from_scan(16, 1000)).has_value());
}

TEST(Flip, SlowShortProgramFlips) {
  // Hand-built ledger: a 12-bit program said to name 1000 after 40 steps,
  // beating the 26-bit literal only when the budget reaches 40.
  auto ledger = make_ledger(MachineVariant::Full, 30);
  ledger.rounds_completed = 100;
  const auto bits = BitString::parse("001110001110");
  ledger.records[bits] = LedgerRecord{bits, RecordStatus::Halted, 40, Natural(1000)};
  auto table = ComplexityTable::from_ledger(ledger);
  auto f = classification_flip(Natural(1000), 39, 40, table);
  EXPECT_TRUE(f.flipped());
  EXPECT_EQ(f.at_b1, Classification::UninterestingAtBudget);
  EXPECT_EQ(f.at_b2, Classification::Interesting);
  EXPECT_EQ(*f.k_at_b2, 12u);
  EXPECT_FALSE(classification_flip(Natural(1000), 40, 100, table).flipped());
  auto found = find_flip(table);
  ASSERT_TRUE(found);
  EXPECT_EQ(found->x, Natural(1000));
  EXPECT_EQ(found->b1, 39u);
  EXPECT_EQ(found->b2, 40u);
}

}  // namespace
}  // namespace omegalab
