#pragma once

// Tree-search enumerators over the derivative tower: all real-rooted
// integer polynomials with a fixed leading prefix, and the Seidel-feasible
// (even degree) / delta-partial feasible (odd degree) refinements.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "seidelpoly/poly.hpp"

namespace seidelpoly {

struct EnumOptions {
  /// Worker threads for the per-level branch map; 0 means hardware threads.
  unsigned threads = 0;
};

struct EnumStats {
  /// Frontier size entering each tower level, in level order.
  std::vector<std::uint64_t> nodes_per_level;
  /// Branches that died: empty integer window or no admissible start offset.
  std::uint64_t pruned_branches = 0;
  /// Candidates removed by the final filter.
  std::uint64_t filtered = 0;
};

struct EnumReport {
  /// Key/value echo of the inputs.
  std::vector<std::pair<std::string, std::string>> input;
  /// Sorted (degree, then coefficients), no duplicates.
  std::vector<IntPoly> results;
  double elapsed_ms = 0;
  EnumStats stats;
};

/// T(n, t, v) with v the first t coefficients of p_hat.
EnumReport all_real_rooted(const IntPoly& p_hat, int t, const EnumOptions& options = {});

/// Feasible polynomials of even degree n divisible by monic q.
EnumReport feasible_even(int n, const IntPoly& q, const EnumOptions& options = {});

/// delta-partial feasible polynomials of odd degree n divisible by monic q.
EnumReport feasible_partial(int n, const IntPoly& q, int delta, const EnumOptions& options = {});

/// (x - lambda)^power.
IntPoly linear_power(long lambda, int power);

/// The delta-partial feasible polynomials of odd degree n divisible by
/// (x - lambda)^(n - d).
EnumReport g_set(int n, int delta, int d, long lambda, const EnumOptions& options = {});

struct DeltaSweep {
  /// (delta, result count) for each delta in the sweep, ascending.
  std::vector<std::pair<int, std::size_t>> counts;
  /// Least swept delta whose set equals the set at delta = n.
  int stabilization = 0;
  /// True when every set contains the next one.
  bool nested = true;
};

/// g_set for delta from max(4, d, delta_lo) to n.
DeltaSweep delta_sweep(int n, int d, long lambda, int delta_lo = 4, const EnumOptions& options = {});

/// The integer window [ceil h_k, floor h_(k+1)] of shifts C for which P + C
/// is real-rooted, P = antiderivative(p), deg p >= 2. Empty when no shift works.
std::optional<std::pair<Integer, Integer>> shift_window(const RatPoly& p);

/// Smallest multiple of m (m > 0) that is >= x.
Integer ceil_multiple(const Integer& x, const Integer& m);

unsigned resolve_threads(unsigned requested);

/// Applies f to every item on `threads` workers and concatenates the
/// per-item output vectors in input order, so results are independent of
/// scheduling. The first exception thrown by any worker is rethrown.
template <class T, class F>
auto parallel_flat_map(const std::vector<T>& items, F f, unsigned threads) -> decltype(f(items.front())) {
  using Out = decltype(f(items.front()));
  std::vector<Out> slots(items.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto worker = [&] {
    while (!failed.load()) {
      std::size_t k = next.fetch_add(1);
      if (k >= items.size()) return;
      try {
        slots[k] = f(items[k]);
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
        return;
      }
    }
  };
  unsigned workers = std::min<std::size_t>(resolve_threads(threads), items.size());
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);
  Out merged;
  for (auto& s : slots) merged.insert(merged.end(), std::make_move_iterator(s.begin()), std::make_move_iterator(s.end()));
  return merged;
}

}  // namespace seidelpoly
