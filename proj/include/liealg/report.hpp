#pragma once

// Machine-readable reports for the command-line tool. The text form is a
// rendering of the same JSON, so both always carry the same numbers.

#include "liealg/verify.hpp"

#include <json.hpp>

#include <sstream>
#include <string>

namespace liealg {

inline Json field_json(const FieldSpec& s) {
  Json j;
  j["kind"] = s.is_prime_field() ? "Fp" : "Q";
  if (s.is_prime_field()) j["p"] = s.p;
  return j;
}

template <Field F>
Json algebra_header(const LieAlgebra<F>& L) {
  Json j;
  j["name"] = L.name();
  j["dim"] = L.dim();
  j["field"] = spec_of(L.field()).label();
  j["digest"] = algebra_digest(L);
  return j;
}

template <Field F>
Json validation_json(const LieAlgebra<F>& L) {
  Json j = algebra_header(L);
  auto v = validate_structure(L);
  j["ok"] = v.ok();
  Json fails = Json::array();
  for (const auto& t : v.jacobi_failures)
    fails.push_back("(e" + std::to_string(t[0] + 1) + ", e" + std::to_string(t[1] + 1) + ", e" +
                    std::to_string(t[2] + 1) + ")");
  j["jacobi_failures"] = fails;
  return j;
}

template <Field F>
Json dims_json(const std::vector<Subspace<F>>& chain) {
  Json j = Json::array();
  for (const auto& S : chain) j.push_back(S.dim());
  return j;
}

template <Field F>
Json info_json(const LieAlgebra<F>& L, const SearchOptions& opts) {
  Json j = algebra_header(L);
  auto s = series(L);
  j["abelian"] = s.abelian;
  j["nilpotent"] = s.nilpotent;
  j["solvable"] = s.solvable;
  j["supersolvable"] = s.supersolvable;
  j["completely_solvable"] = s.completely_solvable;
  j["metabelian"] = s.metabelian;
  j["derived_length"] = s.derived_length ? Json(*s.derived_length) : Json(nullptr);
  j["derived_series_dims"] = dims_json(s.derived);
  j["lower_central_series_dims"] = dims_json(s.lower_central);
  j["derived_algebra"] = subspace_json(derived_algebra(L));
  j["center"] = subspace_json(center(L));
  if (s.flag) {
    Json flag = Json::array();
    for (const auto& V : s.flag->chain) flag.push_back(subspace_json(V));
    j["flag"] = flag;
  } else {
    j["flag"] = nullptr;
  }
  auto attempt = [&](const char* key, auto&& compute) {
    try {
      j[key] = subspace_json(compute());
    } catch (const UnsupportedError& e) {
      j[key] = std::string("unsupported: ") + e.what();
    } catch (const BudgetExceeded& e) {
      j[key] = std::string("budget exceeded: ") + e.what();
    }
  };
  if (s.solvable)
    attempt("nilradical", [&] { return nilradical(L, opts); });
  else
    j["nilradical"] = "unsupported: algebra is not solvable";
  attempt("frattini", [&] { return frattini_ideal(L, opts); });
  return j;
}

template <Field F>
Json certificate_json(const InvariantCertificate<F>& c) {
  Json j;
  j["value"] = c.value;
  j["witness"] = subspace_json(c.witness);
  j["method"] = to_string(c.method);
  j["exact"] = c.exact;
  return j;
}

template <Field F>
Json bounds_json(const BoundsReport<F>& b) {
  Json j;
  j["alpha_lo"] = b.alpha_lo;
  j["alpha_hi"] = b.alpha_hi;
  j["beta_lo"] = b.beta_lo;
  j["beta_hi"] = b.beta_hi;
  j["alpha_witness"] = subspace_json(b.alpha_witness);
  j["beta_witness"] = subspace_json(b.beta_witness);
  j["nilradical"] = b.nilradical ? subspace_json(*b.nilradical) : Json(nullptr);
  j["theorem_exact"] = b.theorem_exact;
  if (!b.split.empty()) j["split"] = b.split;
  Json rows = Json::array();
  for (const auto& r : b.provenance) {
    Json row;
    row["bound"] = r.bound;
    row["value"] = r.value;
    row["source"] = r.source;
    if (!r.note.empty()) row["note"] = r.note;
    if (r.advisory) row["advisory"] = true;
    rows.push_back(row);
  }
  j["provenance"] = rows;
  return j;
}

template <Field F>
Json classify_json(const LieAlgebra<F>& L, const Subspace<F>& A, const TrichotomyReport<F>& r) {
  Json j = algebra_header(L);
  j["witness"] = subspace_json(A);
  j["case"] = to_string(r.which);
  if (r.which == Case::i || r.which == Case::ii || r.which == Case::iii) {
    j["beta_lo"] = r.beta_lo;
    j["beta_hi"] = r.beta_hi;
  }
  j["alpha"] = r.alpha ? Json(*r.alpha) : Json(nullptr);
  j["beta"] = r.beta ? Json(*r.beta) : Json(nullptr);
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json row{{"name", c.name}, {"ok", c.ok}};
    if (!c.detail.empty()) row["detail"] = c.detail;
    checks.push_back(row);
  }
  j["checks"] = checks;
  auto opt = [&](const char* key, const std::optional<Subspace<F>>& S) {
    if (S) j[key] = subspace_json(*S);
  };
  opt("ideal", r.ideal);
  opt("derived_algebra", r.derived);
  opt("centre", r.centre);
  opt("complement", r.complement);
  opt("nilradical", r.nilradical);
  opt("nilradical_centre", r.nilradical_centre);
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

inline Json result_json(const PropertyResult& r) {
  Json j;
  j["property"] = r.property;
  j["algebra"] = r.algebra;
  j["status"] = to_string(r.status);
  j["reason"] = r.reason;
  j["details"] = r.details;
  return j;
}

inline Json counts_json(const SuiteCounts& c) {
  return Json{{"pass", c.pass},
              {"fail", c.fail},
              {"inapplicable", c.inapplicable},
              {"probe-pass", c.probe_pass},
              {"probe-fail", c.probe_fail}};
}

inline Json suite_json(const SuiteReport& rep) {
  Json j;
  j["seed"] = rep.seed;
  Json counts;
  for (const auto& id : rep.ids) counts[id] = counts_json(rep.counts.at(id));
  j["counts"] = counts;
  Json results = Json::array();
  for (const auto& r : rep.results) results.push_back(result_json(r));
  j["results"] = results;
  return j;
}

inline Json search_json(const SearchReport& rep) {
  Json j;
  j["property"] = rep.property;
  j["generator"] = {{"kind", rep.generator.kind},
                    {"p", rep.generator.p},
                    {"dim_lo", rep.generator.dim_lo},
                    {"dim_hi", rep.generator.dim_hi}};
  j["seed"] = rep.seed;
  j["sampled"] = rep.sampled;
  j["applicable"] = rep.applicable;
  j["held"] = rep.held;
  if (rep.counterexample) {
    j["counterexample"] = rep.counterexample->name();
    j["result"] = result_json(*rep.result);
  } else {
    j["counterexample"] = nullptr;
  }
  return j;
}

// ---------------------------------------------------------------------------
// Text rendering

namespace detail {

inline std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "none";
  return v.dump();
}

inline bool all_scalars(const Json& a) {
  for (const auto& x : a)
    if (x.is_structured()) return false;
  return true;
}

inline void render(std::ostringstream& out, const Json& j, int indent) {
  std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  for (auto it = j.begin(); it != j.end(); ++it) {
    const Json& v = it.value();
    if (v.is_object()) {
      out << pad << it.key() << ":\n";
      render(out, v, indent + 1);
    } else if (v.is_array() && all_scalars(v)) {
      out << pad << it.key() << " = [";
      for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << scalar_text(v[i]);
      out << "]\n";
    } else if (v.is_array()) {
      out << pad << it.key() << ":\n";
      for (const auto& x : v) {
        if (x.is_object()) {
          out << pad << "  -\n";
          render(out, x, indent + 2);
        } else {
          out << pad << "  - " << x.dump() << "\n";
        }
      }
    } else {
      out << pad << it.key() << " = " << scalar_text(v) << "\n";
    }
  }
}

}  // namespace detail

inline std::string render_text(const Json& j) {
  std::ostringstream out;
  if (j.is_object())
    detail::render(out, j, 0);
  else
    out << j.dump(2) << "\n";
  return out.str();
}

}  // namespace liealg
