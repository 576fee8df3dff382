#include "omegalab/scan.hpp"

#include <algorithm>
#include <thread>

#include "omegalab/errors.hpp"

namespace omegalab {

void check_enumeration_limit(std::size_t max_len, std::uint64_t limit) {
  if (max_len >= 62 || (std::uint64_t{1} << (max_len + 1)) > limit) {
    throw ResourceRefusal("enumerating all strings up to " + std::to_string(max_len) +
                          " bits exceeds the enumeration limit of " + std::to_string(limit));
  }
}

std::vector<ScanEntry> scan_programs(std::size_t max_len, const ScanOptions& options) {
  check_enumeration_limit(max_len, options.enumeration_limit);
  const std::uint64_t last = last_index_of_length(max_len);
  const std::uint64_t w = std::max(1U, options.workers);
  const std::uint64_t chunk = (last + w - 1) / w;
  std::vector<std::vector<ScanEntry>> parts(w);
  {
    std::vector<std::jthread> pool;
    for (std::uint64_t k = 0; k < w; ++k) {
      const std::uint64_t begin = 1 + k * chunk;
      const std::uint64_t end = std::min(last + 1, begin + chunk);
      if (begin >= end) break;
      pool.emplace_back([&parts, &options, k, begin, end] {
        for (std::uint64_t i = begin; i < end; ++i) {
          auto decoded = try_decode_program(index_to_bits(i), options.variant);
          if (!decoded.program) continue;
          RunOutcome outcome = options.budget ? run(*decoded.program, *options.budget)
                                              : run_total(*decoded.program);
          parts[k].push_back(ScanEntry{std::move(*decoded.program), std::move(outcome)});
        }
      });
    }
  }
  std::vector<ScanEntry> out;
  for (auto& part : parts) {
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

std::vector<Program> valid_programs(std::size_t max_len, MachineVariant variant, std::uint64_t enumeration_limit) {
  check_enumeration_limit(max_len, enumeration_limit);
  std::vector<Program> out;
  const std::uint64_t last = last_index_of_length(max_len);
  for (std::uint64_t i = 1; i <= last; ++i) {
    auto decoded = try_decode_program(index_to_bits(i), variant);
    if (decoded.program) out.push_back(std::move(*decoded.program));
  }
  return out;
}

}  // namespace omegalab
