#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <optional>

#include "dnacodec/alphabet.hpp"

namespace dnacodec {

enum class Execution { serial, parallel };

namespace search {

// Smallest i in [0, count) with pred(i), scanning in order.
template <class Pred>
std::optional<std::uint64_t> first_match_serial(std::uint64_t count, Pred&& pred) {
  for (std::uint64_t i = 0; i < count; ++i)
    if (pred(i)) return i;
  return std::nullopt;
}

// Same result as first_match_serial. Blocks are handed out in order and a
// block is skipped once a smaller match is known.
template <class Pred>
std::optional<std::uint64_t> first_match_parallel(std::uint64_t count, Pred&& pred) {
  constexpr std::uint64_t kBlock = 256;
  const std::int64_t blocks = static_cast<std::int64_t>((count + kBlock - 1) / kBlock);
  std::atomic<std::uint64_t> best{UINT64_MAX};
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t b = 0; b < blocks; ++b) {
    const std::uint64_t lo = static_cast<std::uint64_t>(b) * kBlock;
    if (lo >= best.load(std::memory_order_relaxed)) continue;
    const std::uint64_t hi = std::min(count, lo + kBlock);
    for (std::uint64_t i = lo; i < hi; ++i) {
      if (pred(i)) {
        std::uint64_t cur = best.load(std::memory_order_relaxed);
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
        break;
      }
    }
  }
  if (best.load() == UINT64_MAX) return std::nullopt;
  return best.load();
}

template <class Pred>
std::optional<std::uint64_t> first_match(std::uint64_t count, Pred&& pred, Execution ex) {
  if (ex == Execution::parallel) return first_match_parallel(count, pred);
  return first_match_serial(count, pred);
}

// Shortlex-first word w with min_len <= |w| <= max_len and pred(w).
template <class Pred>
std::optional<Word> first_word(const Alphabet& a, std::size_t min_len, std::size_t max_len, Pred&& pred,
                               Execution ex) {
  for (std::size_t n = min_len; n <= max_len; ++n) {
    auto hit = first_match(
        count_words(a.size(), n), [&](std::uint64_t i) { return pred(word_at(a, n, i)); }, ex);
    if (hit) return word_at(a, n, *hit);
  }
  return std::nullopt;
}

}  // namespace search
}  // namespace dnacodec
