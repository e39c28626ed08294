#pragma once

#include "liealg/subspace.hpp"

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace liealg {

/// Malformed structure-constant table (index out of range, i >= j,
/// duplicates). Distinct from a Jacobi failure.
class FormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// One stored product [e_i, e_j] = sum_k c_k e_k, with 0-based i < j.
template <Field F>
struct BracketEntry {
  std::size_t i = 0;
  std::size_t j = 0;
  std::vector<std::pair<std::size_t, typename F::value_type>> terms;
};

struct ValidationReport {
  std::vector<std::string> format_errors;
  /// 0-based basis triples (i < j < k) whose Jacobi sum is nonzero.
  std::vector<std::array<std::size_t, 3>> jacobi_failures;

  bool ok() const { return format_errors.empty() && jacobi_failures.empty(); }
};

template <Field F>
std::vector<std::string> table_format_errors(std::size_t dim, const std::vector<BracketEntry<F>>& entries) {
  std::vector<std::string> errors;
  std::map<std::pair<std::size_t, std::size_t>, int> seen;
  for (const auto& e : entries) {
    std::string where = "[e" + std::to_string(e.i + 1) + ",e" + std::to_string(e.j + 1) + "]";
    if (e.i >= dim || e.j >= dim) {
      errors.push_back(where + ": index out of range");
      continue;
    }
    if (e.i >= e.j) errors.push_back(where + ": requires i < j");
    if (++seen[{e.i, e.j}] == 2) errors.push_back(where + ": duplicate entry");
    std::vector<std::size_t> ks;
    for (const auto& [k, c] : e.terms) {
      if (k >= dim) errors.push_back(where + ": output index e" + std::to_string(k + 1) + " out of range");
      ks.push_back(k);
    }
    std::sort(ks.begin(), ks.end());
    if (std::adjacent_find(ks.begin(), ks.end()) != ks.end())
      errors.push_back(where + ": repeated output index");
  }
  return errors;
}

/// A finite-dimensional Lie algebra given by antisymmetric structure
/// constants on the basis e_0, ..., e_{n-1}. Only products with i < j are
/// stored; [e_j, e_i] is the negation. Immutable.
template <Field F>
class LieAlgebra {
 public:
  using value_type = typename F::value_type;
  using field_type = F;

  /// Throws FormatError for a malformed table. Jacobi is not enforced here;
  /// see validate_structure.
  LieAlgebra(F field, std::size_t dim, std::vector<BracketEntry<F>> entries, std::string name = {})
      : field_(std::move(field)), dim_(dim), name_(std::move(name)) {
    auto errors = table_format_errors(dim, entries);
    if (!errors.empty()) throw FormatError(errors.front());
    dense_.assign(dim_ * dim_ * dim_, field_.zero());
    for (auto& e : entries) {
      BracketEntry<F> clean{e.i, e.j, {}};
      for (auto& [k, c] : e.terms) {
        if (field_.is_zero(c)) continue;
        clean.terms.emplace_back(k, c);
        at(e.i, e.j, k) = c;
        at(e.j, e.i, k) = field_.neg(c);
      }
      std::sort(clean.terms.begin(), clean.terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      if (!clean.terms.empty()) entries_.push_back(std::move(clean));
    }
    std::sort(entries_.begin(), entries_.end(),
              [](const auto& a, const auto& b) { return std::pair(a.i, a.j) < std::pair(b.i, b.j); });
  }

  /// Builds the table from a full bracket function on basis indices.
  template <class Fn>
  static LieAlgebra from_products(const F& field, std::size_t dim, Fn&& product, std::string name = {}) {
    std::vector<BracketEntry<F>> entries;
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = i + 1; j < dim; ++j) {
        Vec<F> v = product(i, j);
        BracketEntry<F> e{i, j, {}};
        for (std::size_t k = 0; k < dim; ++k)
          if (!field.is_zero(v[k])) e.terms.emplace_back(k, v[k]);
        if (!e.terms.empty()) entries.push_back(std::move(e));
      }
    return LieAlgebra(field, dim, std::move(entries), std::move(name));
  }

  const F& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const std::string& name() const { return name_; }
  const std::vector<BracketEntry<F>>& entries() const { return entries_; }

  LieAlgebra renamed(std::string name) const {
    LieAlgebra copy = *this;
    copy.name_ = std::move(name);
    return copy;
  }

  /// c_{ij}^k
  const value_type& constant(std::size_t i, std::size_t j, std::size_t k) const {
    return dense_[(i * dim_ + j) * dim_ + k];
  }

  Vec<F> basis_bracket(std::size_t i, std::size_t j) const {
    auto first = dense_.begin() + static_cast<std::ptrdiff_t>((i * dim_ + j) * dim_);
    return Vec<F>(first, first + static_cast<std::ptrdiff_t>(dim_));
  }

  /// Bilinear extension of the table.
  Vec<F> bracket(const Vec<F>& x, const Vec<F>& y) const {
    if (x.size() != dim_ || y.size() != dim_) throw std::invalid_argument("bracket: vector length mismatch");
    Vec<F> out = zero_vec(field_, dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (field_.is_zero(x[i])) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (i == j || field_.is_zero(y[j])) continue;
        auto coef = field_.mul(x[i], y[j]);
        const value_type* c = &dense_[(i * dim_ + j) * dim_];
        for (std::size_t k = 0; k < dim_; ++k)
          if (!field_.is_zero(c[k])) out[k] = field_.add(out[k], field_.mul(coef, c[k]));
      }
    }
    return out;
  }

  /// Matrix of y -> [x, y]; entry [k][j] is the e_k-coordinate of [x, e_j].
  Mat<F> ad(const Vec<F>& x) const {
    Mat<F> m(dim_, zero_vec(field_, dim_));
    for (std::size_t j = 0; j < dim_; ++j) {
      Vec<F> col = bracket(x, unit_vec(field_, dim_, j));
      for (std::size_t k = 0; k < dim_; ++k) m[k][j] = col[k];
    }
    return m;
  }

  Vec<F> basis_vector(std::size_t i) const { return unit_vec(field_, dim_, i); }

  bool same_table(const LieAlgebra& other) const {
    return field_ == other.field_ && dim_ == other.dim_ && dense_ == other.dense_;
  }

 private:
  value_type& at(std::size_t i, std::size_t j, std::size_t k) { return dense_[(i * dim_ + j) * dim_ + k]; }

  F field_;
  std::size_t dim_;
  std::string name_;
  std::vector<BracketEntry<F>> entries_;
  std::vector<value_type> dense_;
};

/// Lists every basis triple violating Jacobi.
template <Field F>
ValidationReport validate_structure(const LieAlgebra<F>& L) {
  ValidationReport report;
  const auto& f = L.field();
  std::size_t n = L.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        auto ei = L.basis_vector(i), ej = L.basis_vector(j), ek = L.basis_vector(k);
        Vec<F> sum = L.bracket(ei, L.basis_bracket(j, k));
        sum = added(f, sum, L.bracket(ej, L.basis_bracket(k, i)));
        sum = added(f, sum, L.bracket(ek, L.basis_bracket(i, j)));
        if (!is_zero_vec(f, sum)) report.jacobi_failures.push_back({i, j, k});
      }
  return report;
}

/// Format check plus, when well formed, the Jacobi check.
template <Field F>
ValidationReport validate_table(const F& field, std::size_t dim, const std::vector<BracketEntry<F>>& entries) {
  ValidationReport report;
  report.format_errors = table_format_errors(dim, entries);
  if (!report.format_errors.empty()) return report;
  return validate_structure(LieAlgebra<F>(field, dim, entries));
}

template <Field F>
LieAlgebra<F> direct_sum(const LieAlgebra<F>& a, const LieAlgebra<F>& b, std::string name = {}) {
  std::size_t n = a.dim() + b.dim();
  std::size_t off = a.dim();
  auto entries = a.entries();
  for (const auto& e : b.entries()) {
    BracketEntry<F> shifted{e.i + off, e.j + off, {}};
    for (const auto& [k, c] : e.terms) shifted.terms.emplace_back(k + off, c);
    entries.push_back(std::move(shifted));
  }
  if (name.empty()) name = a.name() + "+" + b.name();
  return LieAlgebra<F>(a.field(), n, std::move(entries), std::move(name));
}

}  // namespace liealg
