#pragma once

// Exact scalar domains: the rationals (arbitrary precision, always reduced)
// and prime fields F_p (canonical residues in [0, p)).

#include <boost/multiprecision/cpp_int.hpp>

#include <charconv>
#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace liealg {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Raised when a scalar literal does not denote an element of the field.
class ScalarError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an operation is not available over the algebra's field.
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

inline bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char ch : s)
    if (ch < '0' || ch > '9') return false;
  return true;
}

inline BigInt parse_bigint(std::string_view s) {
  if (!is_integer_literal(s)) throw ScalarError("not an integer: '" + std::string(s) + "'");
  bool neg = s.front() == '-';
  if (s.front() == '-' || s.front() == '+') s.remove_prefix(1);
  BigInt v{std::string(s)};
  return neg ? BigInt(-v) : v;
}

}  // namespace detail

/// The field of rational numbers.
class RationalField {
 public:
  using value_type = Rational;

  static constexpr bool is_finite = false;

  value_type zero() const { return value_type(0); }
  value_type one() const { return value_type(1); }
  value_type from_int(long long v) const { return value_type(v); }

  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type inv(const value_type& a) const {
    if (a == 0) throw std::domain_error("division by zero");
    return value_type(1) / a;
  }
  value_type div(const value_type& a, const value_type& b) const { return a * inv(b); }
  bool is_zero(const value_type& a) const { return a == 0; }
  bool is_one(const value_type& a) const { return a == 1; }

  std::uint64_t characteristic() const { return 0; }

  /// "a" or "a/b" in lowest terms with positive denominator.
  std::string to_string(const value_type& a) const {
    auto num = boost::multiprecision::numerator(a);
    auto den = boost::multiprecision::denominator(a);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
  }

  value_type parse(std::string_view text) const {
    auto s = detail::trim(text);
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return value_type(detail::parse_bigint(s));
    BigInt num = detail::parse_bigint(detail::trim(s.substr(0, slash)));
    auto den_text = detail::trim(s.substr(slash + 1));
    if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+'))
      throw ScalarError("sign in denominator: '" + std::string(text) + "'");
    BigInt den = detail::parse_bigint(den_text);
    if (den == 0) throw ScalarError("zero denominator: '" + std::string(text) + "'");
    return value_type(num, den);
  }

  /// Total order used for deterministic enumeration (not needed for Q search).
  bool less(const value_type& a, const value_type& b) const { return a < b; }

  bool operator==(const RationalField&) const = default;
};

/// The prime field F_p, p < 2^31.
class PrimeField {
 public:
  using value_type = std::uint32_t;

  static constexpr bool is_finite = true;

  explicit PrimeField(std::uint32_t p) : p_(p) {
    if (p >= (1u << 31) || !detail::is_prime(p))
      throw ScalarError("not a supported prime: " + std::to_string(p));
  }

  std::uint32_t order() const { return p_; }
  std::uint64_t characteristic() const { return p_; }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    return static_cast<value_type>(r < 0 ? r + p_ : r);
  }

  value_type add(value_type a, value_type b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + p_ - b; }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>(static_cast<std::uint64_t>(a) * b % p_);
  }
  value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
  value_type inv(value_type a) const {
    if (a == 0) throw std::domain_error("division by zero");
    // Fermat: a^(p-2)
    std::uint64_t result = 1, base = a, e = p_ - 2;
    while (e) {
      if (e & 1) result = result * base % p_;
      base = base * base % p_;
      e >>= 1;
    }
    return static_cast<value_type>(result);
  }
  value_type div(value_type a, value_type b) const { return mul(a, inv(b)); }
  bool is_zero(value_type a) const { return a == 0; }
  bool is_one(value_type a) const { return a == 1; }

  std::string to_string(value_type a) const { return std::to_string(a); }

  /// Accepts any integer literal (reduced mod p) or "a/b" with b invertible.
  value_type parse(std::string_view text) const {
    auto s = detail::trim(text);
    auto slash = s.find('/');
    auto reduce = [this](std::string_view t) {
      BigInt v = detail::parse_bigint(detail::trim(t));
      BigInt r = v % p_;
      if (r < 0) r += p_;
      return static_cast<value_type>(r.convert_to<std::uint64_t>());
    };
    if (slash == std::string_view::npos) return reduce(s);
    value_type num = reduce(s.substr(0, slash));
    value_type den = reduce(s.substr(slash + 1));
    if (den == 0) throw ScalarError("denominator vanishes mod p: '" + std::string(text) + "'");
    return div(num, den);
  }

  bool less(value_type a, value_type b) const { return a < b; }

  bool operator==(const PrimeField&) const = default;

 private:
  std::uint32_t p_;
};

template <class F>
concept Field = requires(const F& f, const typename F::value_type& a) {
  { f.zero() } -> std::convertible_to<typename F::value_type>;
  { f.add(a, a) } -> std::convertible_to<typename F::value_type>;
  { f.mul(a, a) } -> std::convertible_to<typename F::value_type>;
  { f.inv(a) } -> std::convertible_to<typename F::value_type>;
  { f.is_zero(a) } -> std::convertible_to<bool>;
  { f.to_string(a) } -> std::convertible_to<std::string>;
  { F::is_finite } -> std::convertible_to<bool>;
};

/// Runtime description of a scalar domain, as carried in algebra documents.
struct FieldSpec {
  enum class Kind { Rationals, PrimeField };
  Kind kind = Kind::Rationals;
  std::uint32_t p = 0;

  static FieldSpec rationals() { return {}; }
  static FieldSpec prime(std::uint32_t p) {
    PrimeField check(p);  // validates primality
    (void)check;
    return {Kind::PrimeField, p};
  }

  bool is_prime_field() const { return kind == Kind::PrimeField; }
  std::uint64_t characteristic() const { return is_prime_field() ? p : 0; }

  /// "Q" or "Fp:P", the spelling used on the command line.
  std::string label() const { return is_prime_field() ? "Fp:" + std::to_string(p) : "Q"; }

  static FieldSpec parse(std::string_view s) {
    s = detail::trim(s);
    if (s == "Q") return rationals();
    if (s.substr(0, 3) == "Fp:" || s.substr(0, 3) == "fp:") {
      std::uint32_t p = 0;
      auto rest = s.substr(3);
      auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), p);
      if (ec != std::errc() || ptr != rest.data() + rest.size())
        throw ScalarError("bad field: '" + std::string(s) + "'");
      return prime(p);
    }
    throw ScalarError("bad field: '" + std::string(s) + "' (expected Q or Fp:P)");
  }

  bool operator==(const FieldSpec&) const = default;
};

inline FieldSpec spec_of(const RationalField&) { return FieldSpec::rationals(); }
inline FieldSpec spec_of(const PrimeField& f) { return FieldSpec::prime(f.order()); }

}  // namespace liealg
