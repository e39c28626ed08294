#pragma once

// Canonical subspace enumeration over F_p. Subspaces of a fixed subspace S
// are walked as reduced echelon matrices in S's coordinates; mapping through
// S's echelon basis keeps canonical form and row-major lexicographic order,
// so "first in coordinates" is "first in the ambient space" as well.

#include "liealg/subspace.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace liealg {

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::uint64_t needed, std::uint64_t budget)
      : std::runtime_error("enumeration budget exceeded: needs " + std::to_string(needed) + " candidates, budget " +
                           std::to_string(budget)),
        needed_(needed),
        budget_(budget) {}

  std::uint64_t needed() const { return needed_; }
  std::uint64_t budget() const { return budget_; }

 private:
  std::uint64_t needed_;
  std::uint64_t budget_;
};

struct SearchOptions {
  std::uint64_t budget = 100'000'000;
  unsigned threads = 1;
};

/// Running total of candidates charged against the budget. The charge for a
/// dimension is the full Gaussian binomial, independent of pruning, so the
/// total does not depend on scheduling.
struct SearchStats {
  std::uint64_t candidates = 0;

  void charge(std::uint64_t amount, std::uint64_t budget) {
    std::uint64_t total = candidates > std::numeric_limits<std::uint64_t>::max() - amount
                              ? std::numeric_limits<std::uint64_t>::max()
                              : candidates + amount;
    if (total > budget) throw BudgetExceeded(total, budget);
    candidates = total;
  }
};

namespace detail {

inline std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  return a > std::numeric_limits<std::uint64_t>::max() - b ? std::numeric_limits<std::uint64_t>::max() : a + b;
}

inline std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

}  // namespace detail

/// Number of d-dimensional subspaces of F_q^m, saturating at 2^64 - 1.
inline std::uint64_t gaussian_binomial(std::size_t m, std::size_t d, std::uint64_t q) {
  if (d > m) return 0;
  // row[k] = [i, k]_q, built with [i, k] = [i-1, k-1] + q^k [i-1, k]
  std::vector<std::uint64_t> row(d + 1, 0);
  row[0] = 1;
  for (std::size_t i = 1; i <= m; ++i) {
    for (std::size_t k = std::min(i, d); k >= 1; --k) {
      std::uint64_t qk = 1;
      for (std::size_t t = 0; t < k; ++t) qk = detail::sat_mul(qk, q);
      row[k] = detail::sat_add(row[k - 1], detail::sat_mul(qk, row[k]));
    }
  }
  return row[d];
}

/// Number of lines in F_q^m.
inline std::uint64_t projective_count(std::size_t m, std::uint64_t q) { return gaussian_binomial(m, 1, q); }

namespace detail {

/// All d-subsets of {0..m-1}, ordered so that their all-zero echelon
/// matrices ascend lexicographically (later leading pivots first).
inline std::vector<std::vector<std::size_t>> pivot_patterns(std::size_t m, std::size_t d) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == d) {
      out.push_back(cur);
      return;
    }
    for (std::size_t c = start; c + (d - cur.size()) <= m; ++c) {
      cur.push_back(c);
      self(self, c + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

/// Walks every echelon matrix of one pivot pattern in lexicographic order,
/// keeping the ambient image rows current. fn(coords, ambient) returns false
/// to stop.
template <class Fn>
void walk_pattern(const Subspace<PrimeField>& S, const std::vector<std::size_t>& pattern, Fn&& fn) {
  const auto& f = S.field();
  std::size_t m = S.dim(), d = pattern.size(), n = S.ambient();
  std::uint32_t p = f.order();
  std::vector<bool> is_pivot(m, false);
  for (auto c : pattern) is_pivot[c] = true;

  std::vector<std::vector<std::uint32_t>> coords(d, std::vector<std::uint32_t>(m, 0));
  std::vector<std::pair<std::size_t, std::size_t>> free;  // row-major
  for (std::size_t r = 0; r < d; ++r) {
    coords[r][pattern[r]] = 1;
    for (std::size_t c = pattern[r] + 1; c < m; ++c)
      if (!is_pivot[c]) free.emplace_back(r, c);
  }
  Rows<PrimeField> ambient(d);
  for (std::size_t r = 0; r < d; ++r) ambient[r] = S.basis()[pattern[r]];
  (void)n;

  while (true) {
    if (!fn(coords, ambient)) return;
    // odometer, last free position fastest
    std::size_t pos = free.size();
    while (pos > 0) {
      auto [r, c] = free[pos - 1];
      const auto& s = S.basis()[c];
      if (coords[r][c] + 1 < p) {
        ++coords[r][c];
        axpy(f, f.one(), s, ambient[r]);
        break;
      }
      // wrap p-1 -> 0
      coords[r][c] = 0;
      axpy(f, f.one(), s, ambient[r]);
      --pos;
    }
    if (pos == 0) return;
  }
}

inline bool coords_less(const std::vector<std::vector<std::uint32_t>>& a,
                        const std::vector<std::vector<std::uint32_t>>& b) {
  return a < b;
}

inline std::vector<std::vector<std::uint32_t>> pattern_min(std::size_t m, const std::vector<std::size_t>& pattern) {
  std::vector<std::vector<std::uint32_t>> c(pattern.size(), std::vector<std::uint32_t>(m, 0));
  for (std::size_t r = 0; r < pattern.size(); ++r) c[r][pattern[r]] = 1;
  return c;
}

}  // namespace detail

/// Lexicographically least d-dimensional subspace of S satisfying pred, by
/// full enumeration. pred sees the ambient basis rows (echelon form) and
/// must be safe to call concurrently.
template <class Pred>
std::optional<Subspace<PrimeField>> exhaustive_first(const Subspace<PrimeField>& S, std::size_t d, Pred&& pred,
                                                     const SearchOptions& opts, SearchStats& stats) {
  const auto& f = S.field();
  std::size_t m = S.dim();
  if (d > m) return std::nullopt;
  stats.charge(gaussian_binomial(m, d, f.order()), opts.budget);

  using Coords = std::vector<std::vector<std::uint32_t>>;
  auto patterns = detail::pivot_patterns(m, d);

  std::mutex mu;
  std::optional<Coords> best;
  Rows<PrimeField> best_rows;
  std::atomic<std::size_t> next{0};
  std::atomic<bool> done{false};

  auto worker = [&] {
    while (!done.load()) {
      std::size_t idx = next.fetch_add(1);
      if (idx >= patterns.size()) return;
      const auto& pattern = patterns[idx];
      std::optional<Coords> bound;
      {
        std::lock_guard lock(mu);
        bound = best;
      }
      // patterns are sorted by their least matrix, so none further can win
      if (bound && detail::coords_less(*bound, detail::pattern_min(m, pattern))) {
        done.store(true);
        return;
      }
      std::size_t steps = 0;
      detail::walk_pattern(S, pattern, [&](const Coords& c, const Rows<PrimeField>& rows) {
        if (bound && (++steps & 255) == 0) {
          std::lock_guard lock(mu);
          bound = best;
        }
        if (bound && detail::coords_less(*bound, c)) return false;
        if (!pred(rows)) return true;
        std::lock_guard lock(mu);
        if (!best || detail::coords_less(c, *best)) {
          best = c;
          best_rows = rows;
        }
        return false;
      });
    }
  };

  unsigned nthreads = std::max(1u, opts.threads);
  if (nthreads == 1 || patterns.size() == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (!best) return std::nullopt;
  return Subspace<PrimeField>::span(f, S.ambient(), best_rows);
}

/// Calls fn(rows) for every d-dimensional subspace of S until fn returns
/// false. Pivot patterns are visited in a fixed order and each pattern's
/// matrices lexicographically, so the sequence is deterministic but not
/// globally sorted.
template <class Fn>
void for_each_subspace(const Subspace<PrimeField>& S, std::size_t d, Fn&& fn, const SearchOptions& opts,
                       SearchStats& stats) {
  std::size_t m = S.dim();
  if (d > m) return;
  stats.charge(gaussian_binomial(m, d, S.field().order()), opts.budget);
  bool stop = false;
  for (const auto& pattern : detail::pivot_patterns(m, d)) {
    detail::walk_pattern(S, pattern, [&](const auto&, const Rows<PrimeField>& rows) {
      if (!fn(rows)) stop = true;
      return !stop;
    });
    if (stop) return;
  }
}

/// Calls fn(v) for one nonzero vector of every line of S (leading
/// coordinate 1), in lexicographic order of coordinates.
template <class Fn>
void for_each_line(const Subspace<PrimeField>& S, Fn&& fn, const SearchOptions& opts, SearchStats& stats) {
  for_each_subspace(
      S, 1, [&](const Rows<PrimeField>& rows) { return fn(rows.front()); }, opts, stats);
}

}  // namespace liealg
