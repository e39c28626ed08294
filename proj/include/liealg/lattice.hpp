#pragma once

// Ideal and subalgebra lattice computations: nilradical (any supported
// route), Frattini ideal, abelian socle, and enumeration-based
// certificates over F_p.

#include "liealg/enumerate.hpp"
#include "liealg/structure.hpp"

#include <algorithm>
#include <vector>

namespace liealg {

/// Distinct ideals generated by single vectors, in order of first
/// appearance along the lexicographic walk over lines of S.
inline std::vector<Subspace<PrimeField>> principal_ideals(const LieAlgebra<PrimeField>& L,
                                                          const Subspace<PrimeField>& S, const SearchOptions& opts,
                                                          SearchStats& stats) {
  std::vector<Subspace<PrimeField>> out;
  for_each_line(
      S,
      [&](const Vec<PrimeField>& v) {
        Subspace<PrimeField> I = ideal_closure(L, span_of(L, {v}));
        if (std::find(out.begin(), out.end(), I) == out.end()) out.push_back(std::move(I));
        return true;
      },
      opts, stats);
  return out;
}

/// Minimal ideals of L: the inclusion-minimal principal ideals.
inline std::vector<Subspace<PrimeField>> minimal_ideals(const LieAlgebra<PrimeField>& L, const SearchOptions& opts,
                                                        SearchStats& stats) {
  auto all = principal_ideals(L, whole(L), opts, stats);
  std::vector<Subspace<PrimeField>> out;
  for (const auto& I : all) {
    bool minimal = true;
    for (const auto& J : all)
      if (J.dim() < I.dim() && I.contains(J)) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(I);
  }
  return out;
}

/// Largest nilpotent ideal over F_p as the sum of the nilpotent principal
/// ideals (a sum of nilpotent ideals is nilpotent).
inline Subspace<PrimeField> nilradical_by_enumeration(const LieAlgebra<PrimeField>& L, const SearchOptions& opts,
                                                      SearchStats& stats) {
  Subspace<PrimeField> N = zero_subspace(L);
  for (const auto& I : principal_ideals(L, whole(L), opts, stats))
    if (is_nilpotent_subalgebra(L, I)) N = N + I;
  return N;
}

/// Nilradical: along a flag when L is supersolvable; otherwise by the trace
/// form over Q (solvable L) or by enumeration over F_p.
template <Field F>
Subspace<F> nilradical(const LieAlgebra<F>& L, const SearchOptions& opts = {}) {
  if (auto flag = supersolvable_flag(L)) return nilradical_from_flag(L, *flag);
  if constexpr (F::is_finite) {
    SearchStats stats;
    return nilradical_by_enumeration(L, opts, stats);
  } else {
    (void)opts;
    return nilradical_trace_form(L);
  }
}

/// Maximal subalgebras over F_p, walked by descending dimension: a
/// subalgebra lying in no maximal subalgebra found so far is itself maximal.
inline std::vector<Subspace<PrimeField>> maximal_subalgebras(const LieAlgebra<PrimeField>& L,
                                                             const SearchOptions& opts, SearchStats& stats) {
  std::vector<Subspace<PrimeField>> found;
  Subspace<PrimeField> all = whole(L);
  for (std::size_t d = L.dim(); d-- > 0;) {
    std::vector<Subspace<PrimeField>> level;
    for_each_subspace(
        all, d,
        [&](const Rows<PrimeField>& rows) {
          auto S = span_of(L, rows);
          if (!is_subalgebra(L, S)) return true;
          for (const auto& M : found)
            if (M.contains(S)) return true;
          level.push_back(std::move(S));
          return true;
        },
        opts, stats);
    found.insert(found.end(), level.begin(), level.end());
  }
  return found;
}

/// φ(L): over F_p the core of the intersection of all maximal subalgebras
/// (L² directly when L is nilpotent); over Q only for nilpotent L.
template <Field F>
Subspace<F> frattini_ideal(const LieAlgebra<F>& L, const SearchOptions& opts = {}) {
  if (is_nilpotent_subalgebra(L, whole(L))) return derived_algebra(L);
  if constexpr (F::is_finite) {
    SearchStats stats;
    Subspace<F> meet = whole(L);
    for (const auto& M : maximal_subalgebras(L, opts, stats)) meet = meet.intersect(M);
    return core_of(L, meet);
  } else {
    (void)opts;
    throw UnsupportedError("Frattini ideal over Q is only computed for nilpotent algebras");
  }
}

/// Sum of the minimal abelian ideals (F_p only).
template <Field F>
Subspace<F> abelian_socle(const LieAlgebra<F>& L, const SearchOptions& opts = {}) {
  if constexpr (F::is_finite) {
    SearchStats stats;
    Subspace<F> sum = zero_subspace(L);
    for (const auto& I : minimal_ideals(L, opts, stats))
      if (is_abelian(L, I)) sum = sum + I;
    return sum;
  } else {
    (void)L;
    (void)opts;
    throw UnsupportedError("abelian socle is only computed over prime fields");
  }
}

/// Whether some v outside the abelian ideal A generates, together with A,
/// a larger abelian ideal. Over F_p this decides maximality of A among
/// abelian ideals: any larger abelian ideal contains such a closure.
inline std::optional<Subspace<PrimeField>> larger_abelian_ideal(const LieAlgebra<PrimeField>& L,
                                                                const Subspace<PrimeField>& A,
                                                                const SearchOptions& opts, SearchStats& stats) {
  std::optional<Subspace<PrimeField>> hit;
  // lines of a complement suffice: A + v depends only on v mod A
  Rows<PrimeField> reps;
  for (auto c : A.free_columns()) reps.push_back(L.basis_vector(c));
  Subspace<PrimeField> complement = span_of(L, reps);
  for_each_line(
      complement,
      [&](const Vec<PrimeField>& v) {
        Subspace<PrimeField> B = ideal_closure(L, A.with(v));
        if (is_abelian(L, B)) {
          hit = std::move(B);
          return false;
        }
        return true;
      },
      opts, stats);
  return hit;
}

}  // namespace liealg
