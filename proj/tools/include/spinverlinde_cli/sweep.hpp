#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace spinverlinde::cli {

/// Bad command-line input; maps to exit status 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parses "a", "a..b", "a..b:step" or a comma list of those. A range without
/// an explicit step advances by default_step and both ends must be reachable.
std::vector<int> parse_range(const std::string& text, int default_step = 1);

/// Evaluates fn over items on up to jobs threads. Results come back in input
/// order; the first exception (by index) is rethrown after all workers stop.
template <class T, class Fn>
auto parallel_map(const std::vector<T>& items, int jobs, Fn fn) -> std::vector<decltype(fn(items.front()))> {
  using R = decltype(fn(items.front()));
  std::vector<R> results(items.size());
  std::vector<std::exception_ptr> errors(items.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < items.size(); i = next++) {
      try {
        results[i] = fn(items[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t n_threads = std::clamp<std::size_t>(static_cast<std::size_t>(std::max(jobs, 1)), 1, std::max<std::size_t>(items.size(), 1));
  std::vector<std::thread> threads;
  for (std::size_t t = 1; t < n_threads; ++t) threads.emplace_back(worker);
  worker();
  for (auto& th : threads) th.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return results;
}

}  // namespace spinverlinde::cli
