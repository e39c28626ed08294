#pragma once

// Built-in algebras: the worked examples, classical matrix families, the
// table of α for simple algebras, and seeded random generators.

#include "liealg/structure.hpp"

#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace liealg {

class CatalogError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Params = std::map<std::string, long long>;

struct CatalogEntry {
  std::string name;
  std::vector<std::pair<std::string, long long>> params;  ///< with defaults
  std::string fields;                                     ///< accepted fields
  std::string note;
};

inline const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries{
      {"example-3.1", {}, "Q, Fp (p >= 5)", "4-dim solvable, L^2 Heisenberg, 2-dim chief factor over Q"},
      {"example-3.2", {}, "Q, Fp (p >= 5)", "4-dim solvable with nilradical of codimension one"},
      {"example-4.1", {}, "Fp:2", "9-dim nilpotent, alpha = 6, beta = 5 in characteristic two"},
      {"abelian", {{"n", 4}}, "any", "zero bracket"},
      {"heisenberg", {{"m", 1}}, "any", "basis x1..xm, y1..ym, z with [xi, yi] = z"},
      {"triangular", {{"k", 3}}, "any", "lower triangular k x k matrices, basis E_ij (i >= j) row by row"},
      {"strictly_triangular", {{"k", 4}}, "any", "strictly lower triangular k x k matrices"},
      {"sl2", {}, "any", "basis h, e, f with [h,e] = 2e, [h,f] = -2f, [e,f] = h"},
      {"diagonal-extension", {{"k", 3}}, "any", "t acting on an abelian k-dim ideal by diag(1, ..., k)"},
  };
  return entries;
}

namespace detail {

template <Field F>
struct TableBuilder {
  const F& f;
  std::size_t n;
  std::map<std::pair<std::size_t, std::size_t>, Vec<F>> products;

  /// Adds c e_k to [e_i, e_j] (1-based, any order).
  void add(std::size_t i, std::size_t j, long long c, std::size_t k) {
    --i, --j, --k;
    if (i > j) {
      std::swap(i, j);
      c = -c;
    }
    auto& v = products.try_emplace({i, j}, zero_vec(f, n)).first->second;
    v[k] = f.add(v[k], f.from_int(c));
  }

  LieAlgebra<F> build(std::string name) const {
    std::vector<BracketEntry<F>> entries;
    for (const auto& [key, v] : products) {
      BracketEntry<F> e{key.first, key.second, {}};
      for (std::size_t k = 0; k < n; ++k)
        if (!f.is_zero(v[k])) e.terms.emplace_back(k, v[k]);
      entries.push_back(std::move(e));
    }
    return LieAlgebra<F>(f, n, std::move(entries), std::move(name));
  }
};

inline long long param(const Params& params, const std::string& key, long long fallback) {
  auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

/// Matrix units E_ij of a triangular family, in row-major order.
inline std::vector<std::pair<std::size_t, std::size_t>> triangular_units(std::size_t k, bool strict) {
  std::vector<std::pair<std::size_t, std::size_t>> units;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < (strict ? i : i + 1); ++j) units.emplace_back(i, j);
  return units;
}

template <Field F>
LieAlgebra<F> matrix_algebra(const F& f, std::size_t k, bool strict, std::string name) {
  auto units = triangular_units(k, strict);
  std::size_t n = units.size();
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> index;
  for (std::size_t t = 0; t < n; ++t) index[units[t]] = t;
  return LieAlgebra<F>::from_products(
      f, n,
      [&](std::size_t a, std::size_t b) {
        // [E_ij, E_kl] = δ_jk E_il − δ_li E_kj
        auto [i, j] = units[a];
        auto [k2, l] = units[b];
        Vec<F> v = zero_vec(f, n);
        if (j == k2) v[index.at({i, l})] = f.add(v[index.at({i, l})], f.one());
        if (l == i) v[index.at({k2, j})] = f.sub(v[index.at({k2, j})], f.one());
        return v;
      },
      std::move(name));
}

}  // namespace detail

/// Builds a named catalog algebra over the given field. Unknown names,
/// unknown or out-of-range parameters, and incompatible fields throw.
template <Field F>
LieAlgebra<F> catalog_get(const std::string& name, const F& f, const Params& params = {}) {
  const CatalogEntry* entry = nullptr;
  for (const auto& e : catalog_entries())
    if (e.name == name) entry = &e;
  if (!entry) throw CatalogError("unknown catalog entry: " + name);
  for (const auto& [key, value] : params) {
    bool known = false;
    for (const auto& [pk, pd] : entry->params) known = known || pk == key;
    if (!known) throw CatalogError(name + ": unknown parameter '" + key + "'");
    (void)value;
  }
  auto p = f.characteristic();
  detail::TableBuilder<F> t{f, 0, {}};

  if (name == "example-3.1" || name == "example-3.2") {
    if (p != 0 && p < 5) throw CatalogError(name + " requires Q or Fp with p >= 5");
    t.n = 4;
    if (name == "example-3.1") {
      t.add(1, 2, 1, 3);
      t.add(1, 3, -1, 2);
      t.add(2, 3, 1, 4);
    } else {
      t.add(1, 2, 1, 2);
      t.add(1, 2, -1, 3);
      t.add(1, 4, 2, 4);
      t.add(1, 3, 1, 2);
      t.add(1, 3, 1, 3);
      t.add(2, 3, 1, 4);
    }
    return t.build(name);
  }
  if (name == "example-4.1") {
    if (p != 2) throw CatalogError("example-4.1 requires characteristic two (Fp:2)");
    t.n = 9;
    t.add(1, 2, 1, 6);
    t.add(1, 3, 1, 2);
    t.add(1, 4, 1, 3);
    t.add(1, 5, 1, 4);
    t.add(1, 8, 1, 7);
    t.add(1, 9, 1, 8);
    t.add(2, 3, 1, 7);
    t.add(2, 4, 1, 8);
    t.add(2, 5, 1, 9);
    t.add(3, 4, 1, 9);
    return t.build(name);
  }
  auto positive = [&](const std::string& key, long long fallback, long long lo, long long hi) {
    long long v = detail::param(params, key, fallback);
    if (v < lo || v > hi)
      throw CatalogError(name + ": parameter " + key + " = " + std::to_string(v) + " out of range [" +
                         std::to_string(lo) + ", " + std::to_string(hi) + "]");
    return static_cast<std::size_t>(v);
  };
  if (name == "abelian") {
    t.n = positive("n", 4, 0, 64);
    return t.build("abelian(" + std::to_string(t.n) + ")");
  }
  if (name == "heisenberg") {
    std::size_t m = positive("m", 1, 1, 16);
    t.n = 2 * m + 1;
    for (std::size_t i = 1; i <= m; ++i) t.add(i, m + i, 1, t.n);
    return t.build("heisenberg(" + std::to_string(m) + ")");
  }
  if (name == "triangular" || name == "strictly_triangular") {
    std::size_t k = positive("k", name == "triangular" ? 3 : 4, 1, 12);
    return detail::matrix_algebra(f, k, name == "strictly_triangular", name + "(" + std::to_string(k) + ")");
  }
  if (name == "sl2") {
    t.n = 3;
    t.add(1, 2, 2, 2);
    t.add(1, 3, -2, 3);
    t.add(2, 3, 1, 1);
    return t.build("sl2");
  }
  if (name == "diagonal-extension") {
    std::size_t k = positive("k", 3, 1, 32);
    t.n = k + 1;
    for (std::size_t i = 1; i <= k; ++i) t.add(1, i + 1, static_cast<long long>(i), i + 1);
    return t.build("diagonal-extension(" + std::to_string(k) + ")");
  }
  throw CatalogError("unknown catalog entry: " + name);
}

// ---------------------------------------------------------------------------
// Table of α for the simple algebras

struct Table1Row {
  std::string family;
  std::uint64_t dim;
  std::uint64_t alpha;
};

/// (dim, α) for the simple algebra of the given type and rank.
inline Table1Row table1_alpha(const std::string& family, std::uint64_t n) {
  auto out_of_range = [&] { return CatalogError("no table entry for " + family + "_" + std::to_string(n)); };
  if (family == "A") {
    if (n < 1) throw out_of_range();
    return {"A", n * (n + 2), (n + 1) * (n + 1) / 4};
  }
  if (family == "B") {
    if (n == 3) return {"B", 21, 5};
    if (n < 4) throw out_of_range();
    return {"B", n * (2 * n + 1), n * (n - 1) / 2 + 1};
  }
  if (family == "C") {
    if (n < 2) throw out_of_range();
    return {"C", n * (2 * n + 1), n * (n + 1) / 2};
  }
  if (family == "D") {
    if (n < 4) throw out_of_range();
    return {"D", n * (2 * n - 1), n * (n - 1) / 2};
  }
  if (family == "G" && n == 2) return {"G", 14, 3};
  if (family == "F" && n == 4) return {"F", 52, 9};
  if (family == "E" && n == 6) return {"E", 78, 16};
  if (family == "E" && n == 7) return {"E", 133, 27};
  if (family == "E" && n == 8) return {"E", 248, 36};
  throw out_of_range();
}

// ---------------------------------------------------------------------------
// Seeded generators. Randomness comes from raw std::mt19937_64 output
// reduced with %, so streams agree across standard libraries.

namespace detail {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t below(std::uint64_t bound) { return rng_() % bound; }

  /// Zero with probability 1/2, otherwise uniform in F_p.
  std::uint32_t sparse(const PrimeField& f) {
    if (below(2) == 0) return 0;
    return static_cast<std::uint32_t>(below(f.order()));
  }

  std::uint32_t uniform(const PrimeField& f) { return static_cast<std::uint32_t>(below(f.order())); }

 private:
  std::mt19937_64 rng_;
};

inline std::string generator_name(const std::string& kind, const Params& params) {
  std::string s = "random-" + kind + "(";
  bool first = true;
  for (const auto& [k, v] : params) {
    if (!first) s += ",";
    s += k + "=" + std::to_string(v);
    first = false;
  }
  return s + ")";
}

}  // namespace detail

class GeneratorError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Nilpotent algebra of dimension n over F_p: the Lie algebra generated by
/// two or three sparse random strictly lower triangular (n+1) x (n+1)
/// matrices, cut down to dimension n by quotienting random central lines.
inline LieAlgebra<PrimeField> random_nilpotent(std::size_t n, std::uint32_t p, std::uint64_t seed) {
  if (n < 1) throw GeneratorError("random_nilpotent: n must be at least 1");
  PrimeField f(p);
  detail::Sampler rng(seed);
  std::string name = detail::generator_name("nilpotent", {{"n", static_cast<long long>(n)}, {"p", p},
                                                          {"seed", static_cast<long long>(seed)}});
  std::size_t size = n + 1;
  auto full = catalog_get("strictly_triangular", f, {{"k", static_cast<long long>(size)}});
  constexpr int retries = 64;
  for (int attempt = 0; attempt < retries; ++attempt) {
    std::size_t gens = 2 + rng.below(2);
    Rows<PrimeField> g;
    for (std::size_t t = 0; t < gens; ++t) {
      Vec<PrimeField> v(full.dim());
      for (auto& x : v) x = rng.sparse(f);
      g.push_back(std::move(v));
    }
    Subspace<PrimeField> M = subalgebra_closure(full, g);
    if (M.dim() < n) continue;
    LieAlgebra<PrimeField> cur = restrict_to(full, M);
    while (cur.dim() > n) {
      Subspace<PrimeField> Z = center(cur);
      Vec<PrimeField> z = zero_vec(f, cur.dim());
      while (is_zero_vec(f, z)) {
        Vec<PrimeField> c(Z.dim());
        for (auto& x : c) x = rng.uniform(f);
        z = Z.combine(c);
      }
      cur = quotient(cur, span_of(cur, {z})).algebra;
    }
    return cur.renamed(name);
  }
  throw GeneratorError("random_nilpotent: retry budget exhausted (seed " + std::to_string(seed) + ")");
}

/// Supersolvable algebra of dimension n over F_p with its flag of ideals,
/// built by n - 1 one-dimensional split extensions. Each step samples a
/// flag-preserving derivation D of the current algebra K and adjoins t
/// (the new last basis vector) with [t, x] = D x.
inline std::pair<LieAlgebra<PrimeField>, Flag<PrimeField>> random_supersolvable(std::size_t n, std::uint32_t p,
                                                                                  std::uint64_t seed) {
  if (n < 1) throw GeneratorError("random_supersolvable: n must be at least 1");
  PrimeField f(p);
  detail::Sampler rng(seed);
  std::string name = detail::generator_name("supersolvable", {{"n", static_cast<long long>(n)}, {"p", p},
                                                              {"seed", static_cast<long long>(seed)}});
  LieAlgebra<PrimeField> K(f, 1, {});
  Flag<PrimeField> flag{{zero_subspace(K), whole(K)}};
  for (std::size_t m = 1; m < n; ++m) {
    auto basis = derivations(K, std::optional<Flag<PrimeField>>(flag));
    Mat<PrimeField> D(m, zero_vec(f, m));
    for (const auto& b : basis) {
      auto c = rng.sparse(f);
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) D[i][j] = f.add(D[i][j], f.mul(c, b[i][j]));
    }
    auto entries = K.entries();
    for (std::size_t j = 0; j < m; ++j) {
      // [e_j, t] = -D e_j
      BracketEntry<PrimeField> e{j, m, {}};
      for (std::size_t k = 0; k < m; ++k)
        if (D[k][j] != 0) e.terms.emplace_back(k, f.neg(D[k][j]));
      if (!e.terms.empty()) entries.push_back(std::move(e));
    }
    LieAlgebra<PrimeField> next(f, m + 1, std::move(entries));
    Flag<PrimeField> grown;
    for (const auto& V : flag.chain) {
      Rows<PrimeField> rows;
      for (auto r : V.basis()) {
        r.push_back(0);
        rows.push_back(std::move(r));
      }
      grown.chain.push_back(span_of(next, std::move(rows)));
    }
    grown.chain.push_back(whole(next));
    K = std::move(next);
    flag = std::move(grown);
  }
  return {K.renamed(name), std::move(flag)};
}

/// Split metabelian algebra V ⋊ B: V = span(e_1..e_k) abelian, B abelian of
/// dimension n - k acting through polynomials in one random k x k matrix.
inline LieAlgebra<PrimeField> random_metabelian_split(std::size_t n, std::size_t k, std::uint32_t p,
                                                      std::uint64_t seed) {
  if (k < 1 || k >= n) throw GeneratorError("random_metabelian_split: need 1 <= k < n");
  PrimeField f(p);
  detail::Sampler rng(seed);
  std::string name = detail::generator_name(
      "metabelian-split",
      {{"n", static_cast<long long>(n)}, {"k", static_cast<long long>(k)}, {"p", p}, {"seed", static_cast<long long>(seed)}});
  Mat<PrimeField> X(k, zero_vec(f, k));
  for (auto& row : X)
    for (auto& x : row) x = rng.uniform(f);
  std::vector<Mat<PrimeField>> powers{identity_mat(f, k)};
  for (std::size_t d = 1; d < k; ++d) powers.push_back(mat_mul(f, X, powers.back()));

  std::vector<BracketEntry<PrimeField>> entries;
  for (std::size_t b = k; b < n; ++b) {
    Mat<PrimeField> P(k, zero_vec(f, k));
    for (const auto& pw : powers) {
      auto c = rng.sparse(f);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) P[i][j] = f.add(P[i][j], f.mul(c, pw[i][j]));
    }
    for (std::size_t i = 0; i < k; ++i) {
      // [e_i, b] = -P e_i
      BracketEntry<PrimeField> e{i, b, {}};
      for (std::size_t r = 0; r < k; ++r)
        if (P[r][i] != 0) e.terms.emplace_back(r, f.neg(P[r][i]));
      if (!e.terms.empty()) entries.push_back(std::move(e));
    }
  }
  return LieAlgebra<PrimeField>(f, n, std::move(entries), name);
}

}  // namespace liealg
