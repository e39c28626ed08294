#pragma once

// Brute-force reference computations over small prime fields. Nothing here
// uses the library's linear algebra: vectors are plain integer arrays and
// subspaces are sets of all their elements, so agreement with the library
// is a genuine cross-check.

#include "liealg/structure.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

namespace oracle {

using V = std::vector<std::uint32_t>;
using Elements = std::set<V>;  // every vector of a subspace

struct Table {
  std::uint32_t p = 2;
  std::size_t n = 0;
  std::vector<std::uint32_t> c;  // c[(i*n+j)*n+k]

  explicit Table(const liealg::LieAlgebra<liealg::PrimeField>& L) : p(L.field().order()), n(L.dim()), c(n * n * n) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) c[(i * n + j) * n + k] = L.constant(i, j, k);
  }

  V bracket(const V& x, const V& y) const {
    V out(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (!x[i]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (!y[j]) continue;
        std::uint64_t s = std::uint64_t(x[i]) * y[j] % p;
        for (std::size_t k = 0; k < n; ++k) out[k] = static_cast<std::uint32_t>((out[k] + s * c[(i * n + j) * n + k]) % p);
      }
    }
    return out;
  }
};

inline bool is_zero(const V& v) {
  return std::all_of(v.begin(), v.end(), [](auto x) { return x == 0; });
}

inline std::vector<V> all_vectors(std::uint32_t p, std::size_t n) {
  std::vector<V> out;
  V v(n, 0);
  while (true) {
    out.push_back(v);
    std::size_t i = 0;
    while (i < n && ++v[i] == p) v[i++] = 0;
    if (i == n) break;
  }
  return out;
}

inline V combo(std::uint32_t p, const V& a, std::uint32_t s, const V& b) {
  V out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = static_cast<std::uint32_t>((a[i] + std::uint64_t(s) * b[i]) % p);
  return out;
}

/// All elements of span(S ∪ {v}).
inline Elements extend(std::uint32_t p, const Elements& S, const V& v) {
  Elements out;
  for (const auto& s : S)
    for (std::uint32_t a = 0; a < p; ++a) out.insert(combo(p, s, a, v));
  return out;
}

inline Elements zero_space(std::size_t n) { return Elements{V(n, 0)}; }

/// Every subspace of F_p^n of dimension d, each as its element set. Walks
/// pivot columns and free echelon entries, then expands each basis.
inline std::vector<Elements> subspaces(std::uint32_t p, std::size_t n, std::size_t d) {
  std::vector<Elements> out;
  auto coeffs = all_vectors(p, d);
  std::vector<std::size_t> piv(d);
  std::function<void(std::size_t, std::size_t)> choose = [&](std::size_t r, std::size_t from) {
    if (r == d) {
      std::vector<std::pair<std::size_t, std::size_t>> free;
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t c = piv[i] + 1; c < n; ++c)
          if (std::find(piv.begin(), piv.end(), c) == piv.end()) free.emplace_back(i, c);
      for (const auto& f : all_vectors(p, free.size())) {
        std::vector<V> rows(d, V(n, 0));
        for (std::size_t i = 0; i < d; ++i) rows[i][piv[i]] = 1;
        for (std::size_t k = 0; k < free.size(); ++k) rows[free[k].first][free[k].second] = f[k];
        Elements S;
        for (const auto& a : coeffs) {
          V x(n, 0);
          for (std::size_t i = 0; i < d; ++i) x = combo(p, x, a[i], rows[i]);
          S.insert(x);
        }
        out.push_back(std::move(S));
      }
      return;
    }
    for (std::size_t c = from; c + (d - r) <= n; ++c) {
      piv[r] = c;
      choose(r + 1, c + 1);
    }
  };
  choose(0, 0);
  return out;
}

inline bool abelian(const Table& t, const Elements& S) {
  for (const auto& x : S)
    for (const auto& y : S)
      if (!is_zero(t.bracket(x, y))) return false;
  return true;
}

inline bool ideal(const Table& t, const Elements& S) {
  auto all = all_vectors(t.p, t.n);
  for (const auto& x : all)
    for (const auto& s : S)
      if (!S.count(t.bracket(x, s))) return false;
  return true;
}

inline bool subalgebra(const Table& t, const Elements& S) {
  for (const auto& x : S)
    for (const auto& y : S)
      if (!S.count(t.bracket(x, y))) return false;
  return true;
}

/// Largest d with an abelian subspace (optionally an ideal) of dimension d.
inline std::size_t max_abelian(const Table& t, bool ideals_only) {
  for (std::size_t d = t.n + 1; d-- > 0;)
    for (const auto& S : subspaces(t.p, t.n, d))
      if (abelian(t, S) && (!ideals_only || ideal(t, S))) return d;
  return 0;
}

inline Elements centre(const Table& t) {
  Elements out;
  auto all = all_vectors(t.p, t.n);
  for (const auto& z : all) {
    bool central = true;
    for (const auto& x : all)
      if (!is_zero(t.bracket(z, x))) {
        central = false;
        break;
      }
    if (central) out.insert(z);
  }
  return out;
}

/// Elements of [S, S].
inline Elements bracket_space(const Table& t, const Elements& S, const Elements& T) {
  Elements out = zero_space(t.n);
  for (const auto& x : S)
    for (const auto& y : T) {
      V b = t.bracket(x, y);
      if (!out.count(b)) out = extend(t.p, out, b);
    }
  return out;
}

inline bool nilpotent(const Table& t, const Elements& S) {
  Elements cur = S;
  for (std::size_t step = 0; step <= t.n + 1; ++step) {
    if (cur.size() == 1) return true;
    Elements next = bracket_space(t, S, cur);
    if (next.size() == cur.size()) return false;
    cur = std::move(next);
  }
  return cur.size() == 1;
}

inline Elements sum(std::uint32_t p, Elements a, const Elements& b) {
  for (const auto& v : b)
    if (!a.count(v)) a = extend(p, a, v);
  return a;
}

/// Sum of all nilpotent ideals.
inline Elements nilradical(const Table& t) {
  Elements N = zero_space(t.n);
  for (std::size_t d = 1; d <= t.n; ++d)
    for (const auto& S : subspaces(t.p, t.n, d))
      if (ideal(t, S) && nilpotent(t, S)) N = sum(t.p, N, S);
  return N;
}

/// Element set of a library subspace.
inline Elements elements(const liealg::Subspace<liealg::PrimeField>& S) {
  Elements out = zero_space(S.ambient());
  for (const auto& r : S.basis()) out = extend(S.field().order(), out, V(r.begin(), r.end()));
  return out;
}

}  // namespace oracle
