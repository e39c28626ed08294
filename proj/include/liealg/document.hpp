#pragma once

// Algebra documents (JSON), witness expressions like "e1+2e4,e5", and
// content digests.

#include "liealg/algebra.hpp"

#include <json.hpp>

#include <cctype>
#include <cstdint>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>

namespace liealg {

class DocumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using AnyAlgebra = std::variant<LieAlgebra<RationalField>, LieAlgebra<PrimeField>>;

inline FieldSpec field_of(const AnyAlgebra& a) {
  return std::visit([](const auto& L) { return spec_of(L.field()); }, a);
}

/// FNV-1a, 64 bit.
inline std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

inline std::string hex64(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i, v >>= 4) s[static_cast<std::size_t>(i)] = digits[v & 15];
  return s;
}

/// Canonical text: fixed key order, one bracket per line, products sorted,
/// zero terms dropped, scalars in canonical form.
template <Field F>
std::string serialize_document(const LieAlgebra<F>& L) {
  const auto& f = L.field();
  std::ostringstream out;
  out << "{\n";
  out << "  \"name\": " << nlohmann::json(L.name()).dump() << ",\n";
  out << "  \"dim\": " << L.dim() << ",\n";
  if constexpr (F::is_finite)
    out << "  \"field\": {\"kind\": \"Fp\", \"p\": " << f.order() << "},\n";
  else
    out << "  \"field\": {\"kind\": \"Q\"},\n";
  out << "  \"brackets\": [";
  bool first = true;
  for (const auto& e : L.entries()) {
    out << (first ? "\n" : ",\n");
    first = false;
    out << "    {\"i\": " << e.i + 1 << ", \"j\": " << e.j + 1 << ", \"v\": [";
    for (std::size_t t = 0; t < e.terms.size(); ++t) {
      if (t) out << ", ";
      out << "[" << e.terms[t].first + 1 << ", \"" << f.to_string(e.terms[t].second) << "\"]";
    }
    out << "]}";
  }
  out << (first ? "]\n" : "\n  ]\n");
  out << "}\n";
  return out.str();
}

inline std::string serialize_document(const AnyAlgebra& a) {
  return std::visit([](const auto& L) { return serialize_document(L); }, a);
}

namespace detail {

template <Field F>
LieAlgebra<F> algebra_from_json(const F& f, const nlohmann::json& doc, std::size_t dim, std::string name) {
  const auto& brackets = doc.at("brackets");
  if (!brackets.is_array()) throw DocumentError("'brackets' must be an array");
  std::vector<BracketEntry<F>> entries;
  std::set<std::pair<long long, long long>> seen;
  for (const auto& b : brackets) {
    if (!b.is_object()) throw DocumentError("bracket entries must be objects");
    for (const char* key : {"i", "j", "v"})
      if (!b.contains(key)) throw DocumentError(std::string("bracket entry lacks '") + key + "'");
    if (!b["i"].is_number_integer() || !b["j"].is_number_integer())
      throw DocumentError("bracket indices must be integers");
    long long i = b["i"].get<long long>(), j = b["j"].get<long long>();
    std::string where = "[e" + std::to_string(i) + ",e" + std::to_string(j) + "]";
    if (i < 1 || j < 1 || i > static_cast<long long>(dim) || j > static_cast<long long>(dim))
      throw FormatError(where + ": index out of range");
    if (i >= j) throw FormatError(where + ": requires i < j");
    if (!seen.insert({i, j}).second) throw FormatError(where + ": duplicate entry");
    BracketEntry<F> e{static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1), {}};
    if (!b["v"].is_array()) throw DocumentError(where + ": 'v' must be an array");
    for (const auto& term : b["v"]) {
      if (!term.is_array() || term.size() != 2 || !term[0].is_number_integer())
        throw DocumentError(where + ": terms are [k, scalar] pairs");
      long long k = term[0].get<long long>();
      if (k < 1 || k > static_cast<long long>(dim))
        throw FormatError(where + ": output index e" + std::to_string(k) + " out of range");
      std::string text;
      if (term[1].is_string())
        text = term[1].get<std::string>();
      else if (term[1].is_number_integer())
        text = term[1].dump();
      else
        throw DocumentError(where + ": scalar must be a string or an integer");
      e.terms.emplace_back(static_cast<std::size_t>(k - 1), f.parse(text));
    }
    entries.push_back(std::move(e));
  }
  return LieAlgebra<F>(f, dim, std::move(entries), std::move(name));
}

}  // namespace detail

/// Parses an algebra document. Throws DocumentError for malformed JSON or
/// schema, FormatError for a bad table, ScalarError for a bad scalar.
inline AnyAlgebra parse_document(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DocumentError(std::string("not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw DocumentError("document must be a JSON object");
  for (const char* key : {"dim", "field", "brackets"})
    if (!doc.contains(key)) throw DocumentError(std::string("missing '") + key + "'");
  if (!doc["dim"].is_number_integer() || doc["dim"].get<long long>() < 0)
    throw DocumentError("'dim' must be a non-negative integer");
  auto dim = static_cast<std::size_t>(doc["dim"].get<long long>());
  std::string name = doc.contains("name") && doc["name"].is_string() ? doc["name"].get<std::string>() : "";
  const auto& field = doc["field"];
  if (!field.is_object() || !field.contains("kind") || !field["kind"].is_string())
    throw DocumentError("'field' must be {\"kind\": \"Q\"} or {\"kind\": \"Fp\", \"p\": P}");
  auto kind = field["kind"].get<std::string>();
  if (kind == "Q") return detail::algebra_from_json(RationalField{}, doc, dim, name);
  if (kind == "Fp") {
    if (!field.contains("p") || !field["p"].is_number_integer()) throw DocumentError("Fp field needs an integer 'p'");
    long long p = field["p"].get<long long>();
    if (p < 2 || p >= (1ll << 31)) throw ScalarError("not a supported prime: " + std::to_string(p));
    return detail::algebra_from_json(PrimeField(static_cast<std::uint32_t>(p)), doc, dim, name);
  }
  throw DocumentError("unknown field kind '" + kind + "'");
}

/// Digest of the canonical serialization.
template <Field F>
std::string algebra_digest(const LieAlgebra<F>& L) {
  return hex64(fnv1a64(serialize_document(L)));
}

// ---------------------------------------------------------------------------
// Witness expressions

/// "e1+2e4", "-e2", "1/2e3-e5"; "0" for the zero vector.
template <Field F>
std::string render_vector(const F& f, const Vec<F>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (f.is_zero(v[i])) continue;
    std::string c = f.to_string(v[i]);
    std::string term = "e" + std::to_string(i + 1);
    if (c == "1")
      c.clear();
    else if (c == "-1")
      c = "-";
    bool negative = !c.empty() && c.front() == '-';
    if (!out.empty() && !negative) out += "+";
    out += c + term;
  }
  return out.empty() ? "0" : out;
}

template <Field F>
std::vector<std::string> render_subspace(const Subspace<F>& S) {
  std::vector<std::string> out;
  for (const auto& r : S.basis()) out.push_back(render_vector(S.field(), r));
  return out;
}

template <Field F>
std::string render_subspace_inline(const Subspace<F>& S) {
  std::string s = "span(";
  auto parts = render_subspace(S);
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? ", " : "") + parts[i];
  return s + ")";
}

/// Parses a comma-separated list of basis expressions over the field.
template <Field F>
Rows<F> parse_witness(const F& f, std::size_t n, std::string_view spec) {
  Rows<F> rows;
  auto fail = [&](const std::string& why) { return DocumentError("bad witness '" + std::string(spec) + "': " + why); };
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < spec.size() && std::isspace(static_cast<unsigned char>(spec[pos]))) ++pos;
  };
  while (true) {
    Vec<F> v = zero_vec(f, n);
    bool any = false;
    skip_ws();
    while (pos < spec.size() && spec[pos] != ',') {
      bool negative = false;
      if (spec[pos] == '+' || spec[pos] == '-') {
        negative = spec[pos] == '-';
        ++pos;
        skip_ws();
      } else if (any) {
        throw fail("expected + or - between terms");
      }
      std::size_t start = pos;
      while (pos < spec.size() && (std::isdigit(static_cast<unsigned char>(spec[pos])) || spec[pos] == '/')) ++pos;
      auto coef_text = spec.substr(start, pos - start);
      auto coef = coef_text.empty() ? f.one() : f.parse(coef_text);
      if (pos < spec.size() && spec[pos] == '*') ++pos;
      if (pos >= spec.size() || spec[pos] != 'e') throw fail("expected a basis symbol eK");
      ++pos;
      std::size_t istart = pos;
      while (pos < spec.size() && std::isdigit(static_cast<unsigned char>(spec[pos]))) ++pos;
      if (istart == pos) throw fail("missing basis index");
      std::size_t idx = std::stoul(std::string(spec.substr(istart, pos - istart)));
      if (idx < 1 || idx > n) throw fail("index e" + std::to_string(idx) + " out of range");
      if (negative) coef = f.neg(coef);
      v[idx - 1] = f.add(v[idx - 1], coef);
      any = true;
      skip_ws();
    }
    if (!any) throw fail("empty term");
    rows.push_back(std::move(v));
    if (pos >= spec.size()) break;
    ++pos;  // ','
  }
  return rows;
}

}  // namespace liealg
