#pragma once

#include "liealg/linalg.hpp"

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace liealg {

/// A subspace of F^n held in its canonical reduced row echelon form.
/// Two subspaces are equal iff their canonical matrices are identical.
template <Field F>
class Subspace {
 public:
  using value_type = typename F::value_type;

  Subspace(F field, std::size_t ambient) : field_(std::move(field)), ambient_(ambient) {}

  static Subspace span(const F& field, std::size_t ambient, Rows<F> vectors) {
    for (const auto& v : vectors)
      if (v.size() != ambient) throw std::invalid_argument("vector length does not match ambient dimension");
    Subspace s(field, ambient);
    s.pivots_ = rref(field, vectors, ambient);
    s.rows_ = std::move(vectors);
    return s;
  }

  static Subspace whole(const F& field, std::size_t ambient) {
    Rows<F> rows;
    for (std::size_t i = 0; i < ambient; ++i) rows.push_back(unit_vec(field, ambient, i));
    return span(field, ambient, std::move(rows));
  }

  static Subspace zero(const F& field, std::size_t ambient) { return Subspace(field, ambient); }

  /// Adopts rows already in reduced row echelon form (not re-checked).
  static Subspace from_echelon(const F& field, std::size_t ambient, Rows<F> rows, std::vector<std::size_t> pivots) {
    Subspace s(field, ambient);
    s.rows_ = std::move(rows);
    s.pivots_ = std::move(pivots);
    return s;
  }

  const F& field() const { return field_; }
  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }
  bool is_zero() const { return rows_.empty(); }
  bool is_whole() const { return rows_.size() == ambient_; }
  const Rows<F>& basis() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Residue of v after eliminating the pivot coordinates; zero iff v is in
  /// the subspace. Linear in v.
  Vec<F> reduce(Vec<F> v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      auto c = v[pivots_[i]];
      if (!field_.is_zero(c)) axpy(field_, field_.neg(c), rows_[i], v);
    }
    return v;
  }

  bool contains(const Vec<F>& v) const { return is_zero_vec(field_, reduce(v)); }

  bool contains(const Subspace& other) const {
    for (const auto& v : other.rows_)
      if (!contains(v)) return false;
    return true;
  }

  /// Coordinates of a member v in the echelon basis: its pivot entries.
  Vec<F> coordinates(const Vec<F>& v) const {
    Vec<F> c;
    c.reserve(pivots_.size());
    for (auto p : pivots_) c.push_back(v[p]);
    return c;
  }

  /// Sum of coeffs[i] * basis[i].
  Vec<F> combine(const Vec<F>& coeffs) const {
    Vec<F> v = zero_vec(field_, ambient_);
    for (std::size_t i = 0; i < rows_.size(); ++i) axpy(field_, coeffs[i], rows_[i], v);
    return v;
  }

  Subspace operator+(const Subspace& other) const {
    Rows<F> all = rows_;
    all.insert(all.end(), other.rows_.begin(), other.rows_.end());
    return span(field_, ambient_, std::move(all));
  }

  Subspace with(const Vec<F>& v) const {
    Rows<F> all = rows_;
    all.push_back(v);
    return span(field_, ambient_, std::move(all));
  }

  /// Zassenhaus intersection.
  Subspace intersect(const Subspace& other) const {
    std::size_t n = ambient_;
    Rows<F> big;
    for (const auto& v : rows_) {
      Vec<F> row = v;
      row.insert(row.end(), v.begin(), v.end());
      big.push_back(std::move(row));
    }
    for (const auto& v : other.rows_) {
      Vec<F> row = v;
      row.resize(2 * n, field_.zero());
      big.push_back(std::move(row));
    }
    auto piv = rref(field_, big, 2 * n);
    Rows<F> out;
    for (std::size_t i = 0; i < big.size(); ++i)
      if (piv[i] >= n) out.emplace_back(big[i].begin() + static_cast<std::ptrdiff_t>(n), big[i].end());
    return span(field_, n, std::move(out));
  }

  /// Columns that are not pivots; the matching unit vectors span a
  /// complement and serve as coset representatives.
  std::vector<std::size_t> free_columns() const {
    std::vector<std::size_t> out;
    std::size_t j = 0;
    for (std::size_t c = 0; c < ambient_; ++c) {
      if (j < pivots_.size() && pivots_[j] == c) {
        ++j;
        continue;
      }
      out.push_back(c);
    }
    return out;
  }

  bool operator==(const Subspace& other) const {
    return ambient_ == other.ambient_ && rows_ == other.rows_;
  }

  /// Row-major lexicographic order over canonical matrices (dimension first).
  friend bool lex_less(const Subspace& a, const Subspace& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    for (std::size_t i = 0; i < a.rows_.size(); ++i)
      for (std::size_t j = 0; j < a.ambient_; ++j)
        if (a.rows_[i][j] != b.rows_[i][j]) return a.field_.less(a.rows_[i][j], b.rows_[i][j]);
    return false;
  }

 private:
  F field_;
  std::size_t ambient_;
  Rows<F> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace liealg
