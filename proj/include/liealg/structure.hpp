#pragma once

// Classical structural computations on a LieAlgebra: closures,
// centralizers, series, quotients, cores, invariant lines, flags of ideals,
// the nilradical (along a flag or via the trace form), and derivations.

#include "liealg/algebra.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace liealg {

/// A chain V_0 = 0 < V_1 < ... < V_m with dim V_i = i.
template <Field F>
struct Flag {
  std::vector<Subspace<F>> chain;

  std::size_t length() const { return chain.empty() ? 0 : chain.size() - 1; }
};

// ---------------------------------------------------------------------------
// Elementary predicates and spans

/// span{[u, w] : u in U, w in W}
template <Field F>
Subspace<F> bracket_span(const LieAlgebra<F>& L, const Subspace<F>& U, const Subspace<F>& W) {
  Rows<F> out;
  for (const auto& u : U.basis())
    for (const auto& w : W.basis()) out.push_back(L.bracket(u, w));
  return Subspace<F>::span(L.field(), L.dim(), std::move(out));
}

template <Field F>
Subspace<F> whole(const LieAlgebra<F>& L) {
  return Subspace<F>::whole(L.field(), L.dim());
}

template <Field F>
Subspace<F> zero_subspace(const LieAlgebra<F>& L) {
  return Subspace<F>::zero(L.field(), L.dim());
}

template <Field F>
Subspace<F> span_of(const LieAlgebra<F>& L, Rows<F> vectors) {
  return Subspace<F>::span(L.field(), L.dim(), std::move(vectors));
}

template <Field F>
bool is_abelian(const LieAlgebra<F>& L, const Subspace<F>& S) {
  const auto& rows = S.basis();
  for (std::size_t a = 0; a < rows.size(); ++a)
    for (std::size_t b = a + 1; b < rows.size(); ++b)
      if (!is_zero_vec(L.field(), L.bracket(rows[a], rows[b]))) return false;
  return true;
}

template <Field F>
bool is_subalgebra(const LieAlgebra<F>& L, const Subspace<F>& S) {
  const auto& rows = S.basis();
  for (std::size_t a = 0; a < rows.size(); ++a)
    for (std::size_t b = a + 1; b < rows.size(); ++b)
      if (!S.contains(L.bracket(rows[a], rows[b]))) return false;
  return true;
}

/// [S, L] ⊆ S
template <Field F>
bool is_ideal(const LieAlgebra<F>& L, const Subspace<F>& S) {
  for (const auto& s : S.basis())
    for (std::size_t j = 0; j < L.dim(); ++j)
      if (!S.contains(L.bracket(s, L.basis_vector(j)))) return false;
  return true;
}

/// Smallest subalgebra containing the given vectors: span, then bracket,
/// until the span stabilizes.
template <Field F>
Subspace<F> subalgebra_closure(const LieAlgebra<F>& L, const Rows<F>& generators) {
  Subspace<F> S = span_of(L, generators);
  while (true) {
    Rows<F> all = S.basis();
    const auto& rows = S.basis();
    for (std::size_t a = 0; a < rows.size(); ++a)
      for (std::size_t b = a + 1; b < rows.size(); ++b) all.push_back(L.bracket(rows[a], rows[b]));
    Subspace<F> next = span_of(L, std::move(all));
    if (next.dim() == S.dim()) return S;
    S = std::move(next);
  }
}

/// Smallest ideal containing S.
template <Field F>
Subspace<F> ideal_closure(const LieAlgebra<F>& L, const Subspace<F>& S) {
  Subspace<F> I = S;
  while (true) {
    Rows<F> all = I.basis();
    for (const auto& v : I.basis())
      for (std::size_t j = 0; j < L.dim(); ++j) all.push_back(L.bracket(v, L.basis_vector(j)));
    Subspace<F> next = span_of(L, std::move(all));
    if (next.dim() == I.dim()) return I;
    I = std::move(next);
  }
}

/// C_L(S) = {x : [x, s] = 0 for all s in S}.
template <Field F>
Subspace<F> centralizer(const LieAlgebra<F>& L, const Subspace<F>& S) {
  std::size_t n = L.dim();
  Rows<F> equations;
  for (const auto& s : S.basis()) {
    // row k of the map x -> [x, s]: coefficient of x_i is [e_i, s]_k
    Rows<F> cols;
    for (std::size_t i = 0; i < n; ++i) cols.push_back(L.bracket(L.basis_vector(i), s));
    for (std::size_t k = 0; k < n; ++k) {
      Vec<F> eq(n);
      for (std::size_t i = 0; i < n; ++i) eq[i] = cols[i][k];
      if (!is_zero_vec(L.field(), eq)) equations.push_back(std::move(eq));
    }
  }
  return span_of(L, nullspace(L.field(), std::move(equations), n));
}

/// I_L(S) = {x : [x, S] ⊆ S}.
template <Field F>
Subspace<F> idealizer(const LieAlgebra<F>& L, const Subspace<F>& S) {
  std::size_t n = L.dim();
  Rows<F> equations;
  for (const auto& s : S.basis()) {
    Rows<F> cols;
    for (std::size_t i = 0; i < n; ++i) cols.push_back(S.reduce(L.bracket(L.basis_vector(i), s)));
    for (std::size_t k = 0; k < n; ++k) {
      Vec<F> eq(n);
      for (std::size_t i = 0; i < n; ++i) eq[i] = cols[i][k];
      if (!is_zero_vec(L.field(), eq)) equations.push_back(std::move(eq));
    }
  }
  return span_of(L, nullspace(L.field(), std::move(equations), n));
}

template <Field F>
Subspace<F> center(const LieAlgebra<F>& L) {
  return centralizer(L, whole(L));
}

/// Centralizer of T inside S: C_L(T) ∩ S.
template <Field F>
Subspace<F> centralizer_in(const LieAlgebra<F>& L, const Subspace<F>& S, const Subspace<F>& T) {
  return centralizer(L, T).intersect(S);
}

/// Structure constants of a subalgebra S in the echelon basis of S.
template <Field F>
LieAlgebra<F> restrict_to(const LieAlgebra<F>& L, const Subspace<F>& S) {
  if (!is_subalgebra(L, S)) throw std::invalid_argument("restrict_to: not a subalgebra");
  const auto& rows = S.basis();
  return LieAlgebra<F>::from_products(L.field(), S.dim(), [&](std::size_t a, std::size_t b) {
    return S.coordinates(L.bracket(rows[a], rows[b]));
  });
}

// ---------------------------------------------------------------------------
// Series

/// Lower central series of the subalgebra S taken on its own:
/// S = T_1 ⊇ T_2 = [T_1, S] ⊇ ... until it stabilizes.
template <Field F>
std::vector<Subspace<F>> lower_central_series_of(const LieAlgebra<F>& L, const Subspace<F>& S) {
  std::vector<Subspace<F>> out{S};
  while (true) {
    Subspace<F> next = bracket_span(L, out.back(), S);
    if (next == out.back()) return out;
    out.push_back(std::move(next));
  }
}

template <Field F>
std::vector<Subspace<F>> derived_series_of(const LieAlgebra<F>& L, const Subspace<F>& S) {
  std::vector<Subspace<F>> out{S};
  while (true) {
    Subspace<F> next = bracket_span(L, out.back(), out.back());
    if (next == out.back()) return out;
    out.push_back(std::move(next));
  }
}

template <Field F>
bool is_nilpotent_subalgebra(const LieAlgebra<F>& L, const Subspace<F>& S) {
  return lower_central_series_of(L, S).back().is_zero();
}

template <Field F>
Subspace<F> derived_algebra(const LieAlgebra<F>& L) {
  return bracket_span(L, whole(L), whole(L));
}

template <Field F>
std::optional<Flag<F>> supersolvable_flag(const LieAlgebra<F>& L);

template <Field F>
struct SeriesReport {
  std::vector<Subspace<F>> derived;        ///< L^(0) ⊇ L^(1) ⊇ ... (stable term last)
  std::vector<Subspace<F>> lower_central;  ///< L = γ_1 ⊇ γ_2 ⊇ ... (stable term last)
  bool solvable = false;
  bool nilpotent = false;
  bool supersolvable = false;
  bool metabelian = false;
  bool completely_solvable = false;
  bool abelian = false;
  /// Number of steps for the derived series to reach 0; empty if never.
  std::optional<std::size_t> derived_length;
  std::optional<Flag<F>> flag;
};

template <Field F>
SeriesReport<F> series(const LieAlgebra<F>& L) {
  SeriesReport<F> r;
  Subspace<F> all = whole(L);
  r.derived = derived_series_of(L, all);
  r.lower_central = lower_central_series_of(L, all);
  r.solvable = r.derived.back().is_zero();
  r.nilpotent = r.lower_central.back().is_zero();
  if (r.solvable) r.derived_length = r.derived.size() - 1;
  Subspace<F> L2 = r.derived.size() > 1 ? r.derived[1] : r.derived[0];
  r.abelian = L2.is_zero();
  Subspace<F> L3 = bracket_span(L, L2, L2);
  r.metabelian = L3.is_zero();
  r.completely_solvable = is_nilpotent_subalgebra(L, L2);
  r.flag = supersolvable_flag(L);
  r.supersolvable = r.flag.has_value();
  return r;
}

// ---------------------------------------------------------------------------
// Quotients and cores

template <Field F>
struct Quotient {
  LieAlgebra<F> algebra;
  Subspace<F> ideal;
  /// Ambient coordinates used as coset representatives (free columns).
  std::vector<std::size_t> representatives;

  Vec<F> project(const Vec<F>& x) const {
    Vec<F> r = ideal.reduce(x);
    Vec<F> out;
    out.reserve(representatives.size());
    for (auto c : representatives) out.push_back(r[c]);
    return out;
  }

  Vec<F> lift(const Vec<F>& y) const {
    Vec<F> x = zero_vec(ideal.field(), ideal.ambient());
    for (std::size_t a = 0; a < representatives.size(); ++a) x[representatives[a]] = y[a];
    return x;
  }
};

template <Field F>
Quotient<F> quotient(const LieAlgebra<F>& L, const Subspace<F>& I) {
  if (!is_ideal(L, I)) throw std::invalid_argument("quotient: not an ideal");
  auto reps = I.free_columns();
  auto product = [&](std::size_t a, std::size_t b) {
    Vec<F> r = I.reduce(L.basis_bracket(reps[a], reps[b]));
    Vec<F> out;
    for (auto c : reps) out.push_back(r[c]);
    return out;
  };
  auto alg = LieAlgebra<F>::from_products(L.field(), reps.size(), product, L.name().empty() ? "" : L.name() + "/I");
  return Quotient<F>{std::move(alg), I, std::move(reps)};
}

/// Largest ideal of L inside the subspace A: A_{t+1} = {x ∈ A_t : [x, L] ⊆ A_t}.
template <Field F>
Subspace<F> core_of(const LieAlgebra<F>& L, const Subspace<F>& A) {
  const auto& f = L.field();
  Subspace<F> cur = A;
  while (true) {
    const auto& basis = cur.basis();
    std::size_t d = basis.size();
    Rows<F> equations;
    for (std::size_t j = 0; j < L.dim(); ++j) {
      Rows<F> images;
      for (const auto& b : basis) images.push_back(cur.reduce(L.bracket(b, L.basis_vector(j))));
      for (std::size_t k = 0; k < L.dim(); ++k) {
        Vec<F> eq(d);
        for (std::size_t s = 0; s < d; ++s) eq[s] = images[s][k];
        if (!is_zero_vec(f, eq)) equations.push_back(std::move(eq));
      }
    }
    Rows<F> coeffs = nullspace(f, std::move(equations), d);
    Rows<F> vecs;
    for (const auto& c : coeffs) vecs.push_back(cur.combine(c));
    Subspace<F> next = span_of(L, std::move(vecs));
    if (next.dim() == cur.dim()) return cur;
    cur = std::move(next);
  }
}

// ---------------------------------------------------------------------------
// Common eigenvectors, one-dimensional ideals, supersolvable flags

namespace detail {

template <Field F>
std::vector<typename F::value_type> eigenvalue_candidates(const F& f, const Mat<F>& a) {
  std::vector<typename F::value_type> out;
  if constexpr (F::is_finite) {
    (void)a;
    for (std::uint32_t v = 0; v < f.order(); ++v) out.push_back(v);
  } else {
    out = rational_roots(characteristic_polynomial(f, a));
  }
  return out;
}

}  // namespace detail

/// Finds v in U \ W with [L, v] ⊆ Fv + W, for ideals W ⊆ U. Such a v
/// spans a one-dimensional ideal of L/W inside U/W. Over Q only rational
/// eigenvalues are considered, so irrational ones correctly give none.
template <Field F>
std::optional<Vec<F>> invariant_line(const LieAlgebra<F>& L, const Subspace<F>& U, const Subspace<F>& W) {
  const auto& f = L.field();
  Rows<F> reduced;
  for (const auto& u : U.basis()) reduced.push_back(W.reduce(u));
  Subspace<F> Q = span_of(L, std::move(reduced));
  std::size_t m = Q.dim();
  if (m == 0) return std::nullopt;

  // action matrices of ad e_i on U/W in the basis of Q
  std::vector<Mat<F>> actions;
  for (std::size_t i = 0; i < L.dim(); ++i) {
    Mat<F> a(m, zero_vec(f, m));
    bool nonzero = false;
    for (std::size_t col = 0; col < m; ++col) {
      Vec<F> image = W.reduce(L.bracket(L.basis_vector(i), Q.basis()[col]));
      Vec<F> c = Q.coordinates(image);
      for (std::size_t row = 0; row < m; ++row) {
        a[row][col] = c[row];
        nonzero = nonzero || !f.is_zero(c[row]);
      }
    }
    if (nonzero) actions.push_back(std::move(a));
  }

  // candidate common eigenspaces, refined one generator at a time
  std::vector<Rows<F>> candidates;
  {
    Rows<F> full;
    for (std::size_t i = 0; i < m; ++i) full.push_back(unit_vec(f, m, i));
    candidates.push_back(std::move(full));
  }
  for (const auto& a : actions) {
    std::vector<Rows<F>> next;
    for (const auto& V : candidates) {
      for (const auto& lambda : detail::eigenvalue_candidates(f, a)) {
        // solve (a - lambda) (sum c_t V_t) = 0
        Rows<F> images;
        for (const auto& v : V) {
          Vec<F> av = mat_vec(f, a, v);
          axpy(f, f.neg(lambda), v, av);
          images.push_back(std::move(av));
        }
        Rows<F> eqs;
        for (std::size_t row = 0; row < m; ++row) {
          Vec<F> eq(V.size());
          for (std::size_t t = 0; t < V.size(); ++t) eq[t] = images[t][row];
          eqs.push_back(std::move(eq));
        }
        Rows<F> coeffs = nullspace(f, std::move(eqs), V.size());
        if (coeffs.empty()) continue;
        Rows<F> eigen;
        for (const auto& c : coeffs) {
          Vec<F> v = zero_vec(f, m);
          for (std::size_t t = 0; t < V.size(); ++t) axpy(f, c[t], V[t], v);
          eigen.push_back(std::move(v));
        }
        rref(f, eigen, m);
        next.push_back(std::move(eigen));
      }
    }
    candidates = std::move(next);
    if (candidates.empty()) return std::nullopt;
  }
  return Q.combine(candidates.front().front());
}

/// v != 0 with [v, L] ⊆ Fv, if one exists over the field of definition.
template <Field F>
std::optional<Vec<F>> one_dim_ideal(const LieAlgebra<F>& L) {
  return invariant_line(L, whole(L), zero_subspace(L));
}

/// Full flag of ideals found by repeatedly lifting a one-dimensional ideal
/// of the current quotient; none iff L is not supersolvable.
template <Field F>
std::optional<Flag<F>> supersolvable_flag(const LieAlgebra<F>& L) {
  Flag<F> flag;
  Subspace<F> cur = zero_subspace(L);
  Subspace<F> all = whole(L);
  flag.chain.push_back(cur);
  while (cur.dim() < L.dim()) {
    auto v = invariant_line(L, all, cur);
    if (!v) return std::nullopt;
    cur = cur.with(*v);
    flag.chain.push_back(cur);
  }
  return flag;
}

/// Same construction, restricted to ideals inside U and starting above W
/// (W ⊆ U ideals); returns the chain from W up to the largest reach.
template <Field F>
std::vector<Subspace<F>> refine_chain(const LieAlgebra<F>& L, const Subspace<F>& W, const Subspace<F>& U) {
  std::vector<Subspace<F>> chain{W};
  while (chain.back().dim() < U.dim()) {
    auto v = invariant_line(L, U, chain.back());
    if (!v) break;
    chain.push_back(chain.back().with(*v));
  }
  return chain;
}

template <Field F>
bool is_ideal_flag(const LieAlgebra<F>& L, const Flag<F>& flag) {
  for (std::size_t i = 0; i < flag.chain.size(); ++i) {
    if (flag.chain[i].dim() != i) return false;
    if (i > 0 && !flag.chain[i].contains(flag.chain[i - 1])) return false;
    if (!is_ideal(L, flag.chain[i])) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Nilradical

/// Diagonal functionals of the adjoint action triangularized along a flag
/// of ideals: row i holds lambda_i(e_j) where [e_j, v_i] ≡ lambda_i(e_j) v_i
/// modulo V_{i-1}.
template <Field F>
Rows<F> diagonal_functionals(const LieAlgebra<F>& L, const Flag<F>& flag) {
  const auto& f = L.field();
  Rows<F> lambdas;
  for (std::size_t i = 1; i < flag.chain.size(); ++i) {
    const auto& prev = flag.chain[i - 1];
    Vec<F> r;
    for (const auto& b : flag.chain[i].basis()) {
      r = prev.reduce(b);
      if (!is_zero_vec(f, r)) break;
    }
    std::size_t lead = 0;
    while (f.is_zero(r[lead])) ++lead;
    Vec<F> lambda(L.dim());
    for (std::size_t j = 0; j < L.dim(); ++j) {
      Vec<F> w = prev.reduce(L.bracket(L.basis_vector(j), r));
      lambda[j] = f.div(w[lead], r[lead]);
    }
    lambdas.push_back(std::move(lambda));
  }
  return lambdas;
}

/// Nilradical of a supersolvable algebra: the common kernel of the diagonal
/// functionals along a flag of ideals.
template <Field F>
Subspace<F> nilradical_from_flag(const LieAlgebra<F>& L, const Flag<F>& flag) {
  return span_of(L, nullspace(L.field(), diagonal_functionals(L, flag), L.dim()));
}

/// Nilradical of a solvable algebra in characteristic 0: the kernel of the
/// trace pairing x -> tr(M ad x) over the associative envelope M of ad L
/// (with identity). After simultaneous triangularization over the closure
/// these functionals span the diagonal weights.
inline Subspace<RationalField> nilradical_trace_form(const LieAlgebra<RationalField>& L) {
  const auto& f = L.field();
  std::size_t n = L.dim();
  if (!derived_series_of(L, whole(L)).back().is_zero())
    throw UnsupportedError("nilradical over Q requires a solvable algebra");
  auto flatten = [&](const Mat<RationalField>& m) {
    Vec<RationalField> v;
    v.reserve(n * n);
    for (const auto& row : m) v.insert(v.end(), row.begin(), row.end());
    return v;
  };
  auto unflatten = [&](const Vec<RationalField>& v) {
    Mat<RationalField> m(n, zero_vec(f, n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m[i][j] = v[i * n + j];
    return m;
  };
  std::vector<Mat<RationalField>> ads;
  for (std::size_t j = 0; j < n; ++j) ads.push_back(L.ad(L.basis_vector(j)));

  Rows<RationalField> envelope{flatten(identity_mat(f, n))};
  for (const auto& a : ads) envelope.push_back(flatten(a));
  rref(f, envelope, n * n);
  while (true) {
    Rows<RationalField> grown = envelope;
    for (const auto& e : envelope)
      for (const auto& a : ads) grown.push_back(flatten(mat_mul(f, a, unflatten(e))));
    rref(f, grown, n * n);
    if (grown.size() == envelope.size()) break;
    envelope = std::move(grown);
  }
  Rows<RationalField> equations;
  for (const auto& e : envelope) {
    Mat<RationalField> m = unflatten(e);
    Vec<RationalField> row(n);
    for (std::size_t j = 0; j < n; ++j) row[j] = trace(f, mat_mul(f, m, ads[j]));
    equations.push_back(std::move(row));
  }
  return span_of(L, nullspace(f, std::move(equations), n));
}

// ---------------------------------------------------------------------------
// Derivations

/// Basis of Der(L), or of the derivations preserving every member of the
/// flag when one is given. Matrices act on columns: D e_j = sum_k D[k][j] e_k.
template <Field F>
std::vector<Mat<F>> derivations(const LieAlgebra<F>& L, const std::optional<Flag<F>>& flag = std::nullopt) {
  const auto& f = L.field();
  std::size_t n = L.dim();
  std::size_t unknowns = n * n;
  auto var = [n](std::size_t k, std::size_t j) { return k * n + j; };
  Rows<F> equations;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t m = 0; m < n; ++m) {
        Vec<F> eq = zero_vec(f, unknowns);
        for (std::size_t k = 0; k < n; ++k) {
          eq[var(m, k)] = f.add(eq[var(m, k)], L.constant(i, j, k));
          eq[var(k, i)] = f.sub(eq[var(k, i)], L.constant(k, j, m));
          eq[var(k, j)] = f.sub(eq[var(k, j)], L.constant(i, k, m));
        }
        if (!is_zero_vec(f, eq)) equations.push_back(std::move(eq));
      }
  if (flag) {
    for (std::size_t t = 0; t < flag->chain.size(); ++t) {
      const auto& V = flag->chain[t];
      if (V.ambient() != n) throw std::invalid_argument("derivations: flag member has wrong ambient dimension");
      if (t > 0 && !V.contains(flag->chain[t - 1]))
        throw std::invalid_argument("derivations: flag members are not nested");
      auto free = V.free_columns();
      for (const auto& v : V.basis())
        for (auto c : free) {
          // component c of reduce_V(D v) must vanish
          Vec<F> eq = zero_vec(f, unknowns);
          for (std::size_t j = 0; j < n; ++j) {
            if (f.is_zero(v[j])) continue;
            eq[var(c, j)] = f.add(eq[var(c, j)], v[j]);
            for (std::size_t s = 0; s < V.dim(); ++s) {
              const auto& row = V.basis()[s];
              if (f.is_zero(row[c])) continue;
              eq[var(V.pivots()[s], j)] = f.sub(eq[var(V.pivots()[s], j)], f.mul(v[j], row[c]));
            }
          }
          if (!is_zero_vec(f, eq)) equations.push_back(std::move(eq));
        }
    }
  }
  std::vector<Mat<F>> out;
  for (const auto& sol : nullspace(f, std::move(equations), unknowns)) {
    Mat<F> d(n, zero_vec(f, n));
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) d[k][j] = sol[var(k, j)];
    out.push_back(std::move(d));
  }
  return out;
}

}  // namespace liealg
