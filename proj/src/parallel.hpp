#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <limits>
#include <optional>
#include <thread>
#include <vector>

namespace ordtop::detail {

// Least i < n with pred(i), evaluated on `threads` workers. Indices are dealt
// out in strides and a worker skips any index above the best hit so far, so
// every index below the final answer is examined and the result matches a
// sequential scan. An exception thrown for an index below the answer is
// rethrown; later ones are dropped, again as a sequential scan would.
template <class Pred>
std::optional<std::size_t> first_match(std::size_t n, unsigned threads, Pred pred) {
  constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  if (threads == 1) {
    for (std::size_t i = 0; i < n; ++i)
      if (pred(i))
        return i;
    return std::nullopt;
  }
  std::atomic<std::size_t> best{none};
  std::vector<std::size_t> fail_at(threads, none);
  std::vector<std::exception_ptr> fail(threads);
  auto worker = [&](unsigned t) {
    for (std::size_t i = t; i < n; i += threads) {
      if (i > best.load() || i > fail_at[t])
        return;
      try {
        if (pred(i)) {
          std::size_t cur = best.load();
          while (i < cur && !best.compare_exchange_weak(cur, i)) {
          }
          return;
        }
      } catch (...) {
        fail_at[t] = i;
        fail[t] = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t)
    pool.emplace_back(worker, t);
  worker(0);
  for (auto &th : pool)
    th.join();
  const auto first_fail = std::min_element(fail_at.begin(), fail_at.end());
  if (*first_fail < best.load())
    std::rethrow_exception(fail[first_fail - fail_at.begin()]);
  if (best.load() == none)
    return std::nullopt;
  return best.load();
}

} // namespace ordtop::detail
