#pragma once

// α(L) and β(L): exact values over F_p by canonical enumeration or by
// branch and bound, constructive lower bounds over any field, split
// complements, and the assembled bounds report.

#include "liealg/lattice.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace liealg {

enum class Invariant { alpha, beta };
enum class Method { exhaustive, branch_bound, greedy_lower, theorem };
enum class Strategy { exhaustive, branch_bound };

inline std::string to_string(Invariant w) { return w == Invariant::alpha ? "alpha" : "beta"; }

inline std::string to_string(Method m) {
  switch (m) {
    case Method::exhaustive: return "exhaustive";
    case Method::branch_bound: return "branch_bound";
    case Method::greedy_lower: return "greedy_lower";
    case Method::theorem: return "theorem";
  }
  return "?";
}

template <Field F>
struct InvariantCertificate {
  Invariant which = Invariant::alpha;
  std::size_t value = 0;
  Subspace<F> witness;
  Method method = Method::exhaustive;
  bool exact = false;
};

// ---------------------------------------------------------------------------
// Branch and bound

namespace detail {

/// Depth-first walk over echelon matrices in the coordinates of S, rows in
/// lexicographic order, each new row commuting with all previous ones. The
/// first completed matrix accepted by `leaf` is the lexicographically least.
template <class Leaf>
class AbelianSearch {
 public:
  AbelianSearch(const LieAlgebra<PrimeField>& L, const Subspace<PrimeField>& S, std::size_t d, Leaf leaf,
                std::uint64_t budget)
      : L_(L), S_(S), f_(L.field()), m_(S.dim()), d_(d), leaf_(std::move(leaf)), budget_(budget) {}

  std::optional<Subspace<PrimeField>> run() {
    std::vector<bool> forbidden(m_, false);
    Rows<PrimeField> eqs;
    if (dfs(0, -1, forbidden, eqs)) return span_of(L_, rows_);
    return std::nullopt;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  bool dfs(std::size_t t, long prev_pivot, const std::vector<bool>& forbidden, const Rows<PrimeField>& eqs) {
    if (t == d_) return leaf_(rows_);
    // W: coordinate vectors commuting with the rows so far, zero up to prev_pivot
    Rows<PrimeField> all = eqs;
    for (long c = 0; c <= prev_pivot; ++c) all.push_back(unit_vec(f_, m_, static_cast<std::size_t>(c)));
    Rows<PrimeField> W = nullspace(f_, std::move(all), m_);
    auto wpiv = rref(f_, W, m_);
    std::vector<std::size_t> allowed;
    for (std::size_t i = 0; i < wpiv.size(); ++i)
      if (!forbidden[wpiv[i]]) allowed.push_back(i);
    std::size_t need = d_ - t;
    if (allowed.size() < need) return false;

    // a larger leading column gives a lexicographically smaller row
    for (std::size_t a = allowed.size(); a-- > 0;) {
      std::size_t lead = allowed[a];
      if (allowed.size() - 1 - a < need - 1) continue;
      std::size_t q = wpiv[lead];
      std::vector<std::size_t> later;
      for (std::size_t i = lead + 1; i < W.size(); ++i) later.push_back(i);
      std::vector<std::uint32_t> coef(later.size(), 0);
      while (true) {
        if (++nodes_ > budget_) throw BudgetExceeded(nodes_, budget_);
        Vec<PrimeField> v = W[lead];
        for (std::size_t j = 0; j < later.size(); ++j) axpy(f_, coef[j], W[later[j]], v);
        std::vector<bool> next_forbidden = forbidden;
        for (std::size_t c = q + 1; c < m_; ++c)
          if (v[c] != 0) next_forbidden[c] = true;
        Vec<PrimeField> amb = S_.combine(v);
        Rows<PrimeField> next_eqs = eqs;
        // x -> [x, amb] in coordinates: column j is [s_j, amb]
        Rows<PrimeField> cols;
        for (const auto& s : S_.basis()) cols.push_back(L_.bracket(s, amb));
        for (std::size_t k = 0; k < L_.dim(); ++k) {
          Vec<PrimeField> eq(m_);
          bool nz = false;
          for (std::size_t j = 0; j < m_; ++j) {
            eq[j] = cols[j][k];
            nz = nz || eq[j] != 0;
          }
          if (nz) next_eqs.push_back(std::move(eq));
        }
        rows_.push_back(std::move(amb));
        if (dfs(t + 1, static_cast<long>(q), next_forbidden, next_eqs)) return true;
        rows_.pop_back();
        // odometer, last coefficient fastest
        std::size_t pos = coef.size();
        while (pos > 0) {
          if (coef[pos - 1] + 1 < f_.order()) {
            ++coef[pos - 1];
            break;
          }
          coef[pos - 1] = 0;
          --pos;
        }
        if (pos == 0) break;
      }
    }
    return false;
  }

  const LieAlgebra<PrimeField>& L_;
  const Subspace<PrimeField>& S_;
  const PrimeField& f_;
  std::size_t m_;
  std::size_t d_;
  Leaf leaf_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  Rows<PrimeField> rows_;
};

inline bool rows_abelian(const LieAlgebra<PrimeField>& L, const Rows<PrimeField>& rows) {
  for (std::size_t a = 0; a < rows.size(); ++a)
    for (std::size_t b = a + 1; b < rows.size(); ++b)
      if (!is_zero_vec(L.field(), L.bracket(rows[a], rows[b]))) return false;
  return true;
}

inline bool rows_ideal(const LieAlgebra<PrimeField>& L, const Rows<PrimeField>& rows) {
  Subspace<PrimeField> S = Subspace<PrimeField>::span(L.field(), L.dim(), rows);
  return is_ideal(L, S);
}

/// Largest d (from `start` down) for which a d-dimensional abelian subspace
/// of S satisfying `extra` exists; returns the lexicographically least one.
template <class Extra>
InvariantCertificate<PrimeField> search_abelian(const LieAlgebra<PrimeField>& L, const Subspace<PrimeField>& S,
                                                std::size_t start, Invariant which, Extra extra, Strategy strategy,
                                                const SearchOptions& opts, SearchStats& stats) {
  for (std::size_t d = start + 1; d-- > 0;) {
    std::optional<Subspace<PrimeField>> hit;
    if (strategy == Strategy::exhaustive) {
      hit = exhaustive_first(
          S, d, [&](const Rows<PrimeField>& rows) { return rows_abelian(L, rows) && extra(rows); }, opts, stats);
    } else {
      std::uint64_t remaining = opts.budget > stats.candidates ? opts.budget - stats.candidates : 0;
      AbelianSearch search(L, S, d, [&](const Rows<PrimeField>& rows) { return extra(rows); }, remaining);
      try {
        hit = search.run();
      } catch (const BudgetExceeded&) {
        throw BudgetExceeded(stats.candidates + search.nodes(), opts.budget);
      }
      stats.candidates += search.nodes();
    }
    if (hit) {
      Method m = strategy == Strategy::exhaustive ? Method::exhaustive : Method::branch_bound;
      return {which, d, std::move(*hit), m, true};
    }
  }
  // d = 0 always succeeds; unreachable
  return {which, 0, zero_subspace(L), Method::exhaustive, true};
}

}  // namespace detail

/// Exact α over F_p with the lexicographically least witness among abelian
/// subalgebras of maximal dimension.
template <Field F>
InvariantCertificate<F> alpha_exact(const LieAlgebra<F>& L, Strategy strategy = Strategy::exhaustive,
                                    const SearchOptions& opts = {}, SearchStats* stats_out = nullptr) {
  if constexpr (!F::is_finite) {
    (void)L, (void)strategy, (void)opts, (void)stats_out;
    throw UnsupportedError("exact alpha is unsupported over Q; use bounds");
  } else {
    SearchStats local;
    SearchStats& stats = stats_out ? *stats_out : local;
    Subspace<F> all = whole(L);
    std::size_t start = is_abelian(L, all) ? L.dim() : (L.dim() == 0 ? 0 : L.dim() - 1);
    return detail::search_abelian(
        L, all, start, Invariant::alpha, [](const Rows<F>&) { return true; }, strategy, opts, stats);
  }
}

/// Exact β over F_p; the search runs inside the nilradical.
template <Field F>
InvariantCertificate<F> beta_exact(const LieAlgebra<F>& L, Strategy strategy = Strategy::exhaustive,
                                   const SearchOptions& opts = {}, SearchStats* stats_out = nullptr,
                                   const std::optional<Subspace<F>>& nilrad = std::nullopt) {
  if constexpr (!F::is_finite) {
    (void)L, (void)strategy, (void)opts, (void)stats_out, (void)nilrad;
    throw UnsupportedError("exact beta is unsupported over Q; use bounds");
  } else {
    SearchStats local;
    SearchStats& stats = stats_out ? *stats_out : local;
    Subspace<F> N = nilrad ? *nilrad : nilradical(L, opts);
    std::size_t start = is_abelian(L, N) ? N.dim() : (N.dim() == 0 ? 0 : N.dim() - 1);
    return detail::search_abelian(
        L, N, start, Invariant::beta, [&](const Rows<F>& rows) { return detail::rows_ideal(L, rows); }, strategy,
        opts, stats);
  }
}

// ---------------------------------------------------------------------------
// Greedy lower bound

/// Maximal-by-inclusion abelian subalgebra grown from Z(L): each step adds
/// the candidate from C_L(A) \ A whose adjunction leaves the largest
/// centralizer (basis vectors, then pairwise sums, then a basis of C_L(A)).
template <Field F>
Subspace<F> greedy_abelian_witness(const LieAlgebra<F>& L) {
  std::size_t n = L.dim();
  Subspace<F> A = center(L);
  while (true) {
    Subspace<F> C = centralizer(L, A);
    if (C.dim() == A.dim()) return A;
    Rows<F> candidates;
    for (std::size_t i = 0; i < n; ++i) candidates.push_back(L.basis_vector(i));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) candidates.push_back(added(L.field(), L.basis_vector(i), L.basis_vector(j)));
    for (const auto& c : C.basis()) candidates.push_back(c);
    std::optional<Vec<F>> pick;
    std::size_t best = 0;
    for (const auto& v : candidates) {
      if (!C.contains(v) || A.contains(v)) continue;
      std::size_t score = centralizer(L, A.with(v)).dim();
      if (!pick || score > best) {
        pick = v;
        best = score;
      }
    }
    A = A.with(*pick);
  }
}

// ---------------------------------------------------------------------------
// Split complements

template <Field F>
struct SplitResult {
  std::optional<Subspace<F>> complement;
  /// True when "not found" is a proof of non-existence.
  bool complete = false;
};

/// Searches for an abelian subalgebra B with L = I ∔ B, for an ideal I ⊇ L²
/// (any complement subalgebra is then abelian). B is parametrized as
/// {e_q + f(e_q)} over the free columns q of I with f(e_q) ∈ I; the
/// condition is linear modulo I², and exact when I is abelian. Otherwise
/// the affine solution set mod I² is scanned (fully over small F_p).
template <Field F>
SplitResult<F> find_split_complement(const LieAlgebra<F>& L, const Subspace<F>& I, std::uint64_t scan_limit = 100000) {
  const auto& f = L.field();
  std::size_t n = L.dim();
  auto Q = I.free_columns();
  std::size_t k = I.dim(), m = Q.size();
  Subspace<F> I2 = bracket_span(L, I, I);
  std::size_t unknowns = m * k;
  auto var = [k](std::size_t q, std::size_t s) { return q * k + s; };

  Rows<F> eqs;
  Vec<F> rhs;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) {
      Vec<F> constant = I2.reduce(L.basis_bracket(Q[a], Q[b]));
      Rows<F> cols(unknowns, zero_vec(f, n));
      for (std::size_t s = 0; s < k; ++s) {
        // x_{b,s} [e_qa, i_s] + x_{a,s} [i_s, e_qb]
        cols[var(b, s)] = I2.reduce(L.bracket(L.basis_vector(Q[a]), I.basis()[s]));
        cols[var(a, s)] = I2.reduce(L.bracket(I.basis()[s], L.basis_vector(Q[b])));
      }
      for (std::size_t r = 0; r < n; ++r) {
        Vec<F> eq(unknowns);
        for (std::size_t u = 0; u < unknowns; ++u) eq[u] = cols[u][r];
        eqs.push_back(std::move(eq));
        rhs.push_back(f.neg(constant[r]));
      }
    }

  auto build = [&](const Vec<F>& x) {
    Rows<F> rows;
    for (std::size_t a = 0; a < m; ++a) {
      Vec<F> v = L.basis_vector(Q[a]);
      for (std::size_t s = 0; s < k; ++s) axpy(f, x[var(a, s)], I.basis()[s], v);
      rows.push_back(std::move(v));
    }
    return span_of(L, std::move(rows));
  };

  SplitResult<F> out;
  auto sol = solve_affine(f, eqs, rhs, unknowns);
  if (!sol) {
    out.complete = true;  // already impossible modulo I²
    return out;
  }
  const auto& [x0, kernel] = *sol;
  if (I2.is_zero()) {
    out.complement = build(x0);
    out.complete = true;
    return out;
  }
  // scan x0 + sum c_j kernel_j
  auto try_x = [&](const Vec<F>& x) {
    Subspace<F> B = build(x);
    if (is_abelian(L, B)) {
      out.complement = B;
      return true;
    }
    return false;
  };
  if constexpr (F::is_finite) {
    std::uint64_t total = 1;
    bool full = true;
    for (std::size_t j = 0; j < kernel.size(); ++j) {
      total = detail::sat_mul(total, f.order());
      if (total > scan_limit) full = false;
    }
    std::vector<std::uint32_t> c(kernel.size(), 0);
    std::uint64_t tried = 0;
    while (tried < scan_limit) {
      Vec<F> x = x0;
      for (std::size_t j = 0; j < c.size(); ++j) axpy(f, c[j], kernel[j], x);
      if (try_x(x)) return out;
      ++tried;
      std::size_t pos = c.size();
      while (pos > 0) {
        if (c[pos - 1] + 1 < f.order()) {
          ++c[pos - 1];
          break;
        }
        c[pos - 1] = 0;
        --pos;
      }
      if (pos == 0) break;
    }
    out.complete = full;
  } else {
    // small integer combinations only
    const long long small[] = {0, 1, -1, 2, -2};
    std::vector<std::size_t> c(kernel.size(), 0);
    std::uint64_t tried = 0;
    while (tried < scan_limit) {
      Vec<F> x = x0;
      for (std::size_t j = 0; j < c.size(); ++j) axpy(f, f.from_int(small[c[j]]), kernel[j], x);
      if (try_x(x)) return out;
      ++tried;
      std::size_t pos = c.size();
      while (pos > 0) {
        if (c[pos - 1] + 1 < 5) {
          ++c[pos - 1];
          break;
        }
        c[pos - 1] = 0;
        --pos;
      }
      if (pos == 0) break;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Bounds

/// ⌊(√(8n+9) − 3)/2⌋, i.e. the largest k with k(k+3) ≤ 2n.
inline std::size_t supersolvable_beta_floor(std::size_t n) {
  std::size_t k = 0;
  while ((k + 1) * (k + 4) <= 2 * n) ++k;
  return k;
}

/// Largest integer not above k²/4.
inline std::size_t schur_bound(std::size_t k) { return k * k / 4; }

struct BoundRow {
  std::string bound;   ///< alpha_lo, alpha_hi, beta_lo, beta_hi, or a check name
  long long value = 0;
  std::string source;  ///< Prop2.1, Thm2.4, Cor2.7, Cor2.8, Cor2.9-probe, trivial, witness
  std::string note;
  bool advisory = false;
};

template <Field F>
struct BoundsReport {
  std::size_t alpha_lo = 0, alpha_hi = 0, beta_lo = 0, beta_hi = 0;
  std::vector<BoundRow> provenance;
  Subspace<F> alpha_witness;
  Subspace<F> beta_witness;
  std::optional<Subspace<F>> nilradical;
  bool theorem_exact = false;
  /// "found", "not-found", or empty when the split test did not apply.
  std::string split;
};

template <Field F>
BoundsReport<F> bounds(const LieAlgebra<F>& L, const SearchOptions& opts = {}) {
  std::size_t n = L.dim();
  BoundsReport<F> r{0, 0, 0, 0, {}, zero_subspace(L), zero_subspace(L), std::nullopt, false, {}};
  auto s = series(L);

  auto raise_lo = [&](std::size_t& lo, const char* name, std::size_t v, std::string src, std::string note) {
    r.provenance.push_back({name, static_cast<long long>(v), std::move(src), std::move(note), false});
    lo = std::max(lo, v);
  };
  auto lower_hi = [&](std::size_t& hi, const char* name, std::size_t v, std::string src, std::string note) {
    r.provenance.push_back({name, static_cast<long long>(v), std::move(src), std::move(note), false});
    hi = std::min(hi, v);
  };

  r.alpha_hi = n;
  r.beta_hi = n;
  lower_hi(r.alpha_hi, "alpha_hi", s.abelian || n == 0 ? n : n - 1, "trivial",
           s.abelian ? "abelian algebra" : "non-abelian algebra");

  Subspace<F> greedy = greedy_abelian_witness(L);
  r.alpha_witness = greedy;
  raise_lo(r.alpha_lo, "alpha_lo", greedy.dim(), "witness", "greedy maximal abelian subalgebra");

  Subspace<F> Z = center(L);
  r.beta_witness = Z;
  raise_lo(r.beta_lo, "beta_lo", Z.dim(), "witness", "centre");

  if (s.solvable) {
    try {
      Subspace<F> N = nilradical(L, opts);
      r.nilradical = N;
      lower_hi(r.beta_hi, "beta_hi", N.dim(), "trivial", "abelian ideals lie in the nilradical");
      Subspace<F> ZN = centralizer_in(L, N, N);
      if (ZN.dim() > r.beta_witness.dim()) {
        r.beta_witness = ZN;
        raise_lo(r.beta_lo, "beta_lo", ZN.dim(), "witness", "centre of the nilradical");
      }
      if (s.completely_solvable && is_abelian(L, N)) {
        r.theorem_exact = true;
        r.beta_witness = N;
        raise_lo(r.beta_lo, "beta_lo", N.dim(), "Thm2.4", "completely solvable, abelian nilradical");
        raise_lo(r.alpha_lo, "alpha_lo", N.dim(), "Thm2.4", "completely solvable, abelian nilradical");
        lower_hi(r.alpha_hi, "alpha_hi", N.dim(), "Thm2.4", "completely solvable, abelian nilradical");
      }
    } catch (const UnsupportedError&) {
    } catch (const BudgetExceeded&) {
    }
  }

  if (s.metabelian && !s.abelian) {
    Subspace<F> L2 = s.derived[1];
    std::size_t k = L2.dim();
    Subspace<F> C = centralizer(L, L2);
    r.provenance.push_back({"codim_centralizer", static_cast<long long>(n - C.dim()), "Prop2.1",
                            "dim L/C_L(L^2) <= " + std::to_string(schur_bound(k) + 1), false});
    auto split = find_split_complement(L, L2);
    r.split = split.complement ? "found" : "not-found";
    if (split.complement && n >= schur_bound(k) + 1) {
      std::size_t v = n - schur_bound(k) - 1;
      if (is_abelian(L, C) && C.dim() > r.beta_witness.dim()) r.beta_witness = C;
      raise_lo(r.beta_lo, "beta_lo", v, "Prop2.1", "splits over L^2, k = " + std::to_string(k));
    }
  }

  if (s.supersolvable) {
    std::size_t c28 = supersolvable_beta_floor(n);
    raise_lo(r.beta_lo, "beta_lo", c28, "Cor2.8", "supersolvable, n = " + std::to_string(n));
    if (s.derived_length && *s.derived_length >= 2) {
      raise_lo(r.beta_lo, "beta_lo", *s.derived_length - 1, "Cor2.7",
               "derived length " + std::to_string(*s.derived_length) + " <= k + 1");
    }
  }

  if constexpr (!F::is_finite) {
    if (s.solvable && !s.abelian) {
      r.provenance.push_back({"alpha_range_lo", static_cast<long long>(supersolvable_beta_floor(n)), "Cor2.9-probe",
                              "hypothesis needs an algebraically closed field; advisory only", true});
    }
  }

  if (r.beta_lo > r.alpha_lo) raise_lo(r.alpha_lo, "alpha_lo", r.beta_lo, "trivial", "an abelian ideal is an abelian subalgebra");
  r.beta_hi = std::min(r.beta_hi, r.alpha_hi);
  if (r.alpha_witness.dim() < r.beta_witness.dim()) r.alpha_witness = r.beta_witness;
  return r;
}

}  // namespace liealg
