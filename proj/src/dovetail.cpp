#include "omegalab/dovetail.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>
#include <vector>

#include "omegalab/errors.hpp"

namespace omegalab {

namespace {

struct WorkItem {
  std::uint64_t index = 0;
  BitString bits;
  std::unique_ptr<Execution> exec;  // null: start from scratch
  LedgerRecord result;
};

LedgerRecord record_from(const BitString& bits, const RunOutcome& outcome) {
  LedgerRecord rec;
  rec.bits = bits;
  rec.steps = outcome.steps_used;
  switch (outcome.status) {
    case RunStatus::Halted:
      rec.status = RecordStatus::Halted;
      rec.output = outcome.output;
      break;
    case RunStatus::Error: rec.status = RecordStatus::Error; break;
    case RunStatus::OutOfBudget: rec.status = RecordStatus::Running; break;
  }
  return rec;
}

void process(WorkItem& item, MachineVariant variant, std::uint64_t target) {
  if (!item.exec) {
    auto decoded = try_decode_program(item.bits, variant);
    if (!decoded.program) {
      item.result = LedgerRecord{item.bits, RecordStatus::Error, 0, std::nullopt};
      return;
    }
    item.exec = std::make_unique<Execution>(std::make_shared<const Program>(std::move(*decoded.program)));
  }
  item.result = record_from(item.bits, item.exec->advance(target));
}

}  // namespace

std::uint64_t strings_touched(std::size_t max_len, std::uint64_t total_rounds) {
  return std::min(total_rounds, last_index_of_length(max_len));
}

Dovetailer::Dovetailer(HaltingLedger ledger, DovetailOptions options)
    : ledger_(std::move(ledger)), options_(options) {
  if (ledger_.isa_checksum != isa_checksum()) {
    throw UsageError("ledger ISA checksum " + to_hex64(ledger_.isa_checksum) + " does not match " +
                     isa_checksum_hex());
  }
  if (options_.workers == 0) options_.workers = 1;
}

void Dovetailer::run_rounds(std::uint64_t rounds) {
  if (rounds == 0) throw std::invalid_argument("dovetail: rounds must be >= 1");
  const std::uint64_t target = ledger_.rounds_completed + rounds;
  const std::uint64_t last = strings_touched(ledger_.max_len, target);

  // Programs never interact, so each one can be advanced straight to its
  // cumulative budget; the result equals the round-by-round schedule.
  std::vector<WorkItem> work;
  for (std::uint64_t i = 1; i <= last; ++i) {
    BitString bits = index_to_bits(i);
    const LedgerRecord* rec = ledger_.find(bits);
    if (rec && rec->final()) continue;
    WorkItem item;
    item.index = i;
    if (rec && !options_.recompute) {
      auto it = suspended_.find(bits);
      if (it != suspended_.end() && it->second->steps_used() == rec->steps) {
        item.exec = std::move(it->second);
      }
      if (it != suspended_.end()) suspended_.erase(it);
    }
    item.bits = std::move(bits);
    work.push_back(std::move(item));
  }

  const std::size_t workers = std::min<std::size_t>(options_.workers, std::max<std::size_t>(work.size(), 1));
  const std::size_t chunk = (work.size() + workers - 1) / workers;
  const MachineVariant variant = ledger_.variant;
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t begin = w * chunk;
      const std::size_t end = std::min(work.size(), begin + chunk);
      if (begin >= end) break;
      pool.emplace_back([&work, begin, end, variant, target] {
        for (std::size_t k = begin; k < end; ++k) process(work[k], variant, target);
      });
    }
  }

  for (auto& item : work) {
    const bool running = item.result.status == RecordStatus::Running;
    ledger_.records.insert_or_assign(item.bits, std::move(item.result));
    if (running && item.exec && !options_.recompute) suspended_.emplace(item.bits, std::move(item.exec));
  }
  ledger_.rounds_completed = target;
}

HaltingLedger dovetail(HaltingLedger ledger, std::uint64_t rounds, DovetailOptions options) {
  Dovetailer d(std::move(ledger), options);
  d.run_rounds(rounds);
  return std::move(d).take_ledger();
}

}  // namespace omegalab
