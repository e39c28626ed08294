#pragma once

// Dense exact linear algebra over a Field: vectors, reduced row echelon
// form, null spaces, characteristic polynomials.

#include "liealg/field.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace liealg {

template <Field F>
using Vec = std::vector<typename F::value_type>;

template <Field F>
using Rows = std::vector<Vec<F>>;

template <Field F>
Vec<F> zero_vec(const F& f, std::size_t n) {
  return Vec<F>(n, f.zero());
}

template <Field F>
Vec<F> unit_vec(const F& f, std::size_t n, std::size_t i) {
  Vec<F> v(n, f.zero());
  v[i] = f.one();
  return v;
}

template <Field F>
bool is_zero_vec(const F& f, const Vec<F>& v) {
  return std::all_of(v.begin(), v.end(), [&](const auto& x) { return f.is_zero(x); });
}

/// y += a * x
template <Field F>
void axpy(const F& f, const typename F::value_type& a, const Vec<F>& x, Vec<F>& y) {
  if (f.is_zero(a)) return;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (!f.is_zero(x[i])) y[i] = f.add(y[i], f.mul(a, x[i]));
}

template <Field F>
Vec<F> scaled(const F& f, const typename F::value_type& a, Vec<F> v) {
  for (auto& x : v) x = f.mul(a, x);
  return v;
}

template <Field F>
Vec<F> added(const F& f, Vec<F> a, const Vec<F>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = f.add(a[i], b[i]);
  return a;
}

template <Field F>
Vec<F> subtracted(const F& f, Vec<F> a, const Vec<F>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = f.sub(a[i], b[i]);
  return a;
}

/// Brings `rows` to reduced row echelon form in place, dropping zero rows.
/// Returns the (strictly increasing) pivot columns.
template <Field F>
std::vector<std::size_t> rref(const F& f, Rows<F>& rows, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t sel = r;
    while (sel < rows.size() && f.is_zero(rows[sel][c])) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    if (!f.is_one(rows[r][c])) {
      auto inv = f.inv(rows[r][c]);
      for (std::size_t j = c; j < ncols; ++j) rows[r][j] = f.mul(inv, rows[r][j]);
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || f.is_zero(rows[i][c])) continue;
      auto factor = f.neg(rows[i][c]);
      for (std::size_t j = c; j < ncols; ++j)
        if (!f.is_zero(rows[r][j])) rows[i][j] = f.add(rows[i][j], f.mul(factor, rows[r][j]));
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

template <Field F>
std::size_t rank_of(const F& f, Rows<F> rows, std::size_t ncols) {
  return rref(f, rows, ncols).size();
}

/// Basis of {x : E x = 0} where the rows of E are the equations, in the
/// canonical order (one vector per free column, ascending).
template <Field F>
Rows<F> nullspace(const F& f, Rows<F> equations, std::size_t ncols) {
  auto pivots = rref(f, equations, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (auto c : pivots) is_pivot[c] = true;
  Rows<F> basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    Vec<F> x = zero_vec(f, ncols);
    x[free] = f.one();
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = f.neg(equations[i][free]);
    basis.push_back(std::move(x));
  }
  return basis;
}

/// Solutions of E x = b as (particular, kernel basis), or none when the
/// system is inconsistent. Rows of E are the equations.
template <Field F>
std::optional<std::pair<Vec<F>, Rows<F>>> solve_affine(const F& f, const Rows<F>& equations, const Vec<F>& rhs,
                                                       std::size_t ncols) {
  Rows<F> aug;
  aug.reserve(equations.size());
  for (std::size_t i = 0; i < equations.size(); ++i) {
    Vec<F> row = equations[i];
    row.push_back(rhs[i]);
    aug.push_back(std::move(row));
  }
  auto pivots = rref(f, aug, ncols + 1);
  if (!pivots.empty() && pivots.back() == ncols) return std::nullopt;
  Vec<F> x = zero_vec(f, ncols);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug[i][ncols];
  Rows<F> homogeneous;
  for (auto& row : aug) {
    row.pop_back();
    homogeneous.push_back(std::move(row));
  }
  return std::pair{std::move(x), nullspace(f, std::move(homogeneous), ncols)};
}

/// Coefficients c with sum c_i basis_i = v for linearly independent basis
/// rows, or none when v is outside their span.
template <Field F>
std::optional<Vec<F>> coordinates_in(const F& f, const Rows<F>& basis, const Vec<F>& v) {
  std::size_t n = v.size(), k = basis.size();
  Rows<F> eqs(n, zero_vec(f, k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t r = 0; r < n; ++r) eqs[r][i] = basis[i][r];
  auto sol = solve_affine(f, eqs, v, k);
  if (!sol) return std::nullopt;
  return sol->first;
}

/// Square matrix as rows; m[i][j] is row i, column j.
template <Field F>
using Mat = Rows<F>;

template <Field F>
Mat<F> identity_mat(const F& f, std::size_t n) {
  Mat<F> m(n, zero_vec(f, n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = f.one();
  return m;
}

template <Field F>
Mat<F> mat_mul(const F& f, const Mat<F>& a, const Mat<F>& b) {
  std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  Mat<F> c(n, zero_vec(f, m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < k; ++t) {
      if (f.is_zero(a[i][t])) continue;
      for (std::size_t j = 0; j < m; ++j)
        if (!f.is_zero(b[t][j])) c[i][j] = f.add(c[i][j], f.mul(a[i][t], b[t][j]));
    }
  return c;
}

template <Field F>
Vec<F> mat_vec(const F& f, const Mat<F>& a, const Vec<F>& x) {
  Vec<F> y = zero_vec(f, a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j)
      if (!f.is_zero(a[i][j]) && !f.is_zero(x[j])) y[i] = f.add(y[i], f.mul(a[i][j], x[j]));
  return y;
}

template <Field F>
typename F::value_type trace(const F& f, const Mat<F>& a) {
  auto t = f.zero();
  for (std::size_t i = 0; i < a.size(); ++i) t = f.add(t, a[i][i]);
  return t;
}

/// Characteristic polynomial det(tI - A) by Faddeev-LeVerrier, lowest degree
/// first. Divides by k, so characteristic 0 only; over F_p eigenvalues are
/// found by direct search instead.
inline std::vector<Rational> characteristic_polynomial(const RationalField& f, const Mat<RationalField>& a) {
  std::size_t n = a.size();
  std::vector<Rational> coeff(n + 1, Rational(0));
  coeff[n] = 1;
  Mat<RationalField> m = identity_mat(f, n);  // M_1 = I
  for (std::size_t k = 1; k <= n; ++k) {
    Mat<RationalField> am = mat_mul(f, a, m);
    Rational c = -trace(f, am) / Rational(static_cast<long long>(k));
    coeff[n - k] = c;
    for (std::size_t i = 0; i < n; ++i) am[i][i] += c;
    m = std::move(am);
  }
  return coeff;
}

namespace detail {

inline std::vector<BigInt> divisors_of(BigInt v) {
  if (v < 0) v = -v;
  std::vector<BigInt> primes;
  std::vector<int> exps;
  for (BigInt d = 2; d * d <= v; ++d) {
    if (v % d != 0) continue;
    int e = 0;
    while (v % d == 0) {
      v /= d;
      ++e;
    }
    primes.push_back(d);
    exps.push_back(e);
  }
  if (v > 1) {
    primes.push_back(v);
    exps.push_back(1);
  }
  std::vector<BigInt> divs{1};
  for (std::size_t i = 0; i < primes.size(); ++i) {
    std::size_t base = divs.size();
    BigInt pw = 1;
    for (int e = 1; e <= exps[i]; ++e) {
      pw *= primes[i];
      for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pw);
    }
  }
  return divs;
}

inline Rational eval_poly(const std::vector<Rational>& coeff, const Rational& x) {
  Rational acc = 0;
  for (std::size_t i = coeff.size(); i-- > 0;) acc = acc * x + coeff[i];
  return acc;
}

}  // namespace detail

/// Distinct rational roots of a polynomial with rational coefficients
/// (lowest degree first), ascending.
inline std::vector<Rational> rational_roots(std::vector<Rational> coeff) {
  while (!coeff.empty() && coeff.back() == 0) coeff.pop_back();
  std::vector<Rational> roots;
  if (coeff.size() <= 1) return roots;
  std::size_t low = 0;
  while (coeff[low] == 0) ++low;
  if (low > 0) roots.push_back(Rational(0));
  coeff.erase(coeff.begin(), coeff.begin() + static_cast<std::ptrdiff_t>(low));
  if (coeff.size() > 1) {
    BigInt lcm = 1;
    for (const auto& c : coeff) {
      BigInt d = boost::multiprecision::denominator(c);
      lcm = lcm / boost::multiprecision::gcd(lcm, d) * d;
    }
    BigInt a0 = boost::multiprecision::numerator(coeff.front() * Rational(lcm));
    BigInt an = boost::multiprecision::numerator(coeff.back() * Rational(lcm));
    for (const auto& num : detail::divisors_of(a0))
      for (const auto& den : detail::divisors_of(an))
        for (int sign : {1, -1}) {
          Rational x(BigInt(sign) * num, den);
          if (detail::eval_poly(coeff, x) == 0 && std::find(roots.begin(), roots.end(), x) == roots.end())
            roots.push_back(x);
        }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace liealg
