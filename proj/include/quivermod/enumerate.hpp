// Exhaustive enumeration over finite fields: search budgets and a
// block-partitioned parallel runner whose output order does not depend on
// the number of threads.
#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "quivermod/field.hpp"

namespace quivermod {

inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 24;

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, BigInt size, std::uint64_t budget)
      : std::runtime_error(what + ": search space " + size.str() + " exceeds budget " + std::to_string(budget) +
                           " (raise it with --budget)"),
        size_(std::move(size)),
        budget_(budget) {}

  const BigInt& size() const { return size_; }
  std::uint64_t budget() const { return budget_; }

 private:
  BigInt size_;
  std::uint64_t budget_;
};

struct EnumerationOptions {
  std::uint64_t budget = kDefaultBudget;
  unsigned threads = 1;
};

inline BigInt big_pow(std::uint64_t base, std::uint64_t exp) {
  BigInt r = 1;
  for (std::uint64_t k = 0; k < exp; ++k) r *= base;
  return r;
}

/// Runs visit(index, out) for every index in [0, total), in blocks spread
/// over `threads` workers, and concatenates the per-block outputs in block
/// order. The first exception thrown by a worker is rethrown.
template <class T, class Visit>
std::vector<T> run_blocks(std::uint64_t total, unsigned threads, Visit visit) {
  constexpr std::uint64_t kBlock = 1024;
  const std::uint64_t blocks = (total + kBlock - 1) / kBlock;
  std::vector<std::vector<T>> results(static_cast<std::size_t>(blocks));
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;

  auto worker = [&] {
    try {
      for (std::uint64_t blk = next++; blk < blocks; blk = next++) {
        auto& out = results[static_cast<std::size_t>(blk)];
        const auto end = std::min(total, (blk + 1) * kBlock);
        for (std::uint64_t idx = blk * kBlock; idx < end; ++idx) visit(idx, out);
      }
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
      next = blocks;
    }
  };

  const unsigned n = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::uint64_t>(blocks, 1))));
  if (n == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);

  std::vector<T> merged;
  for (auto& r : results) std::move(r.begin(), r.end(), std::back_inserter(merged));
  return merged;
}

}  // namespace quivermod
