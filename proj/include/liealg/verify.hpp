#pragma once

// Executable checks of the structural results on α and β, and probes for
// the open questions. Every check decides applicability from the
// statement's hypotheses first, then computes the conclusion from the
// primitives in the other headers.

#include "liealg/catalog.hpp"
#include "liealg/classify.hpp"
#include "liealg/document.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

namespace liealg {

using Json = nlohmann::ordered_json;

enum class Status { pass, fail, inapplicable, probe_pass, probe_fail };

inline std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::inapplicable: return "inapplicable";
    case Status::probe_pass: return "probe-pass";
    case Status::probe_fail: return "probe-fail";
  }
  return "?";
}

struct PropertyInfo {
  std::string id;
  std::string statement;
  std::string hypotheses;
  bool probe = false;
};

inline const std::vector<PropertyInfo>& property_catalog() {
  static const std::vector<PropertyInfo> props{
      {"P2.1", "dim L/C_L(L^2) <= [k^2/4]+1; split over L^2 => beta >= n-[k^2/4]-1", "metabelian", false},
      {"L2.3", "C_L(N) is contained in N", "solvable", false},
      {"T2.4", "alpha = beta = dim N", "completely solvable, abelian nilradical, Fp", false},
      {"L2.5", "C_L(A) = A for a maximal abelian ideal A", "supersolvable, Fp", false},
      {"C2.7", "n <= k(k+3)/2 and derived length <= k+1, k = dim of a maximal abelian ideal", "supersolvable, Fp", false},
      {"C2.8", "beta >= [(sqrt(8n+9)-3)/2]", "supersolvable, Fp", false},
      {"P3.1", "K abelian, or dim K^2 = 1 and Z(K) has codimension <= 1 in A", "instances found by scan", false},
      {"C3.2", "alpha = beta", "supersolvable, maximal abelian A of codim 1 in an ideal, Fp", false},
      {"P3.4", "abelian maximal subalgebra <=> codim-1 abelian ideal or (L^(2) = phi(L) = Z(L), chief, split)",
       "solvable, Fp", false},
      {"T3.5", "alpha = n-2 => one of the three cases, with the predicted beta", "solvable, alpha = n-2", false},
      {"C3.6", "beta = n-2", "supersolvable, alpha = n-2, Fp", false},
      {"T4.1", "beta = n-3", "nilpotent, characteristic != 2, alpha = n-3, Fp", false},
      {"E4.1", "alpha = 6, beta = 5 with the listed witnesses", "the nine-dimensional example over F2", false},
      {"OQ1", "beta = n-3", "supersolvable, characteristic != 2, alpha = n-3, Fp", true},
      {"OQ2i", "dim Z(N) >= n-2k+1", "supersolvable, alpha = n-k, N an ideal maximal subalgebra over A, Fp", true},
      {"OQ2ii", "dim N^2 <= k-1", "supersolvable, alpha = n-k, N an ideal maximal subalgebra over A, Fp", true},
  };
  return props;
}

inline const PropertyInfo* find_property(const std::string& id) {
  for (const auto& p : property_catalog())
    if (p.id == id) return &p;
  return nullptr;
}

inline std::vector<std::string> all_property_ids() {
  std::vector<std::string> out;
  for (const auto& p : property_catalog()) out.push_back(p.id);
  return out;
}

struct PropertyResult {
  std::string property;
  std::string algebra;
  Status status = Status::inapplicable;
  std::string reason;
  Json details = Json::object();
};

struct VerifyOptions {
  Strategy strategy = Strategy::branch_bound;
  SearchOptions search;
  std::uint64_t seed = 0;
  std::size_t samples = 50;  ///< random vectors added to the P3.1 scan
  std::uint64_t frattini_budget = 10'000'000;
};

template <Field F>
Json subspace_json(const Subspace<F>& S) {
  return Json(render_subspace(S));
}

/// Lazily computed facts about one algebra, shared by its property checks.
template <Field F>
class Analysis {
 public:
  Analysis(LieAlgebra<F> L, VerifyOptions opts) : L_(std::move(L)), opts_(std::move(opts)) {}

  const LieAlgebra<F>& algebra() const { return L_; }
  const VerifyOptions& options() const { return opts_; }
  std::size_t n() const { return L_.dim(); }

  const SeriesReport<F>& series() {
    if (!series_) series_ = liealg::series(L_);
    return *series_;
  }
  const Subspace<F>& center() {
    if (!center_) center_ = liealg::center(L_);
    return *center_;
  }
  const Subspace<F>& nilradical() {
    if (!nilradical_) nilradical_ = liealg::nilradical(L_, opts_.search);
    return *nilradical_;
  }
  const Subspace<F>& greedy() {
    if (!greedy_) greedy_ = greedy_abelian_witness(L_);
    return *greedy_;
  }
  const InvariantCertificate<F>& alpha() {
    if (!alpha_) alpha_ = alpha_exact(L_, opts_.strategy, opts_.search);
    return *alpha_;
  }
  const InvariantCertificate<F>& beta() {
    if (!beta_) {
      std::optional<Subspace<F>> N;
      if (series().solvable) N = nilradical();
      beta_ = beta_exact(L_, opts_.strategy, opts_.search, nullptr, N);
    }
    return *beta_;
  }
  /// A maximal abelian ideal grown from Z(L) one principal closure at a time.
  const Subspace<F>& grown_ideal() {
    if constexpr (F::is_finite) {
      if (!grown_) {
        Subspace<F> A = center();
        SearchStats stats;
        while (auto B = larger_abelian_ideal(L_, A, opts_.search, stats)) A = *B;
        grown_ = A;
      }
      return *grown_;
    } else {
      throw UnsupportedError("maximal abelian ideals are only certified over prime fields");
    }
  }

 private:
  LieAlgebra<F> L_;
  VerifyOptions opts_;
  std::optional<SeriesReport<F>> series_;
  std::optional<Subspace<F>> center_, nilradical_, greedy_, grown_;
  std::optional<InvariantCertificate<F>> alpha_, beta_;
};

namespace detail {

struct Outcome {
  Status status = Status::inapplicable;
  std::string reason;
  Json details = Json::object();
};

inline Outcome inapplicable(std::string why, Json details = Json::object()) {
  return {Status::inapplicable, std::move(why), std::move(details)};
}

inline Outcome verdict(bool ok, std::string why, Json details) {
  return {ok ? Status::pass : Status::fail, std::move(why), std::move(details)};
}

inline Outcome probe(bool ok, std::string why, Json details) {
  return {ok ? Status::probe_pass : Status::probe_fail, std::move(why), std::move(details)};
}

inline std::string over_q(const char* what) { return std::string(what) + " is not computable over Q"; }

/// Complement of W inside U, spanned by the reductions of U's basis mod W.
template <Field F>
Subspace<F> complement_in(const Subspace<F>& U, const Subspace<F>& W) {
  Rows<F> reps;
  for (const auto& u : U.basis()) reps.push_back(W.reduce(u));
  return Subspace<F>::span(U.field(), U.ambient(), std::move(reps));
}

/// U/W is a chief factor: no ideal strictly between W and U (F_p).
inline bool is_chief_factor(const LieAlgebra<PrimeField>& L, const Subspace<PrimeField>& U,
                            const Subspace<PrimeField>& W, const SearchOptions& opts) {
  if (U.dim() <= W.dim()) return false;
  SearchStats stats;
  bool chief = true;
  for_each_line(
      complement_in(U, W),
      [&](const Vec<PrimeField>& v) {
        if (ideal_closure(L, W.with(v)) != U) chief = false;
        return chief;
      },
      opts, stats);
  return chief;
}

/// M is a maximal subalgebra: every v outside M generates L together with M.
inline bool is_maximal_subalgebra(const LieAlgebra<PrimeField>& L, const Subspace<PrimeField>& M,
                                  const SearchOptions& opts) {
  if (M.dim() >= L.dim() || !is_subalgebra(L, M)) return false;
  SearchStats stats;
  bool maximal = true;
  Rows<PrimeField> reps;
  for (auto c : M.free_columns()) reps.push_back(L.basis_vector(c));
  for_each_line(
      span_of(L, reps),
      [&](const Vec<PrimeField>& v) {
        Rows<PrimeField> gens = M.basis();
        gens.push_back(v);
        if (!subalgebra_closure(L, gens).is_whole()) maximal = false;
        return maximal;
      },
      opts, stats);
  return maximal;
}

/// Ideals of codimension one containing U, i.e. hyperplanes over U + L².
inline std::vector<Subspace<PrimeField>> hyperplane_ideals_over(const LieAlgebra<PrimeField>& L,
                                                                const Subspace<PrimeField>& U,
                                                                const SearchOptions& opts) {
  const auto& f = L.field();
  Subspace<PrimeField> base = U + derived_algebra(L);
  std::vector<Subspace<PrimeField>> out;
  if (base.is_whole()) return out;
  // functionals vanishing on base
  Subspace<PrimeField> annihilator = span_of(L, nullspace(f, base.basis(), L.dim()));
  SearchStats stats;
  for_each_line(
      annihilator,
      [&](const Vec<PrimeField>& phi) {
        out.push_back(span_of(L, nullspace(f, Rows<PrimeField>{phi}, L.dim())));
        return true;
      },
      opts, stats);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return lex_less(a, b); });
  return out;
}

/// Both parametrized families of maximal abelian subalgebras of the
/// nine-dimensional characteristic-two example: one vector from span(e3, e4)
/// plus e5, ..., e9.
inline bool in_example41_families(const Subspace<PrimeField>& W) {
  if (W.ambient() != 9 || W.dim() != 6) return false;
  const auto& f = W.field();
  for (std::size_t i = 4; i < 9; ++i)
    if (!W.contains(unit_vec(f, 9, i))) return false;
  Rows<PrimeField> top;
  for (std::size_t i = 2; i < 9; ++i) top.push_back(unit_vec(f, 9, i));
  return Subspace<PrimeField>::span(f, 9, top).contains(W);
}

// --- individual checks ------------------------------------------------------

template <Field F>
Outcome check_P21(Analysis<F>& an) {
  const auto& L = an.algebra();
  const auto& s = an.series();
  if (!s.metabelian) return inapplicable("not metabelian");
  std::size_t n = an.n();
  Subspace<F> L2 = s.derived.size() > 1 ? s.derived[1] : zero_subspace(L);
  std::size_t k = L2.dim();
  Subspace<F> C = centralizer(L, L2);
  std::size_t bound = schur_bound(k) + 1;
  Json d;
  d["k"] = k;
  d["codim_centralizer"] = n - C.dim();
  d["codim_bound"] = bound;
  bool ok = n - C.dim() <= bound;
  auto split = find_split_complement(L, L2);
  d["split"] = split.complement ? "found" : "not-found";
  if (split.complement) {
    std::size_t lo = n >= bound ? n - bound : 0;
    bool witness = is_abelian(L, C) && is_ideal(L, C) && C.dim() >= lo;
    d["beta_bound"] = lo;
    d["centralizer_is_abelian_ideal"] = witness;
    d["complement"] = subspace_json(*split.complement);
    ok = ok && witness;
    if constexpr (F::is_finite) {
      d["beta"] = an.beta().value;
      ok = ok && an.beta().value >= lo;
    }
  }
  return verdict(ok, ok ? "bounds hold" : "bound violated", d);
}

template <Field F>
Outcome check_L23(Analysis<F>& an) {
  const auto& L = an.algebra();
  if (!an.series().solvable) return inapplicable("not solvable");
  const auto& N = an.nilradical();
  Subspace<F> C = centralizer(L, N);
  Json d;
  d["nilradical"] = subspace_json(N);
  d["centralizer"] = subspace_json(C);
  bool sane = is_ideal(L, N) && is_nilpotent_subalgebra(L, N);
  d["nilradical_is_nilpotent_ideal"] = sane;
  bool ok = sane && N.contains(C);
  return verdict(ok, ok ? "C_L(N) lies in N" : "C_L(N) not contained in N", d);
}

template <Field F>
Outcome check_T24(Analysis<F>& an) {
  const auto& L = an.algebra();
  const auto& s = an.series();
  if (!s.completely_solvable) return inapplicable("not completely solvable");
  const auto& N = an.nilradical();
  if (!is_abelian(L, N)) return inapplicable("nilradical is not abelian");
  if constexpr (!F::is_finite) {
    return inapplicable(over_q("exact alpha/beta"));
  } else {
    Json d;
    d["dim_nilradical"] = N.dim();
    d["alpha"] = an.alpha().value;
    d["beta"] = an.beta().value;
    bool ok = an.alpha().value == N.dim() && an.beta().value == N.dim();
    return verdict(ok, ok ? "alpha = beta = dim N" : "alpha/beta differ from dim N", d);
  }
}

template <Field F>
Outcome check_L25(Analysis<F>& an) {
  if (!an.series().supersolvable) return inapplicable("not supersolvable");
  if constexpr (!F::is_finite) {
    return inapplicable(over_q("certified maximality"));
  } else {
    const auto& L = an.algebra();
    Json d = Json::array();
    bool ok = true;
    for (const auto* A : {&an.beta().witness, &an.grown_ideal()}) {
      auto chk = maximal_abelian_ideal_check(L, *A, an.options().search);
      Json row;
      row["ideal"] = subspace_json(*A);
      row["maximal"] = chk.maximal.value_or(false);
      row["centralizer"] = subspace_json(chk.centralizer_space);
      row["centralizer_equal"] = chk.centralizer_equal;
      if (chk.maximal.value_or(false)) ok = ok && chk.centralizer_equal;
      d.push_back(row);
    }
    return verdict(ok, ok ? "C_L(A) = A" : "C_L(A) != A for a maximal abelian ideal", Json{{"ideals", d}});
  }
}

template <Field F>
Outcome check_C27(Analysis<F>& an) {
  if (!an.series().supersolvable) return inapplicable("not supersolvable");
  if constexpr (!F::is_finite) {
    return inapplicable(over_q("certified maximality"));
  } else {
    const auto& L = an.algebra();
    Json d = Json::array();
    bool ok = true;
    for (const auto* A : {&an.beta().witness, &an.grown_ideal()}) {
      auto t = triangular_embedding_check(L, *A, an.options().search);
      Json row;
      row["ideal"] = subspace_json(*A);
      row["k"] = t.k;
      row["n"] = t.n;
      row["dim_bound"] = t.k * (t.k + 3) / 2;
      row["derived_length"] = t.derived_length;
      row["lower_triangular"] = t.lower_triangular;
      ok = ok && t.lower_triangular && t.dim_bound && t.length_bound;
      d.push_back(row);
    }
    return verdict(ok, ok ? "dimension and derived length bounds hold" : "bound violated", Json{{"ideals", d}});
  }
}

template <Field F>
Outcome check_C28(Analysis<F>& an) {
  if (!an.series().supersolvable) return inapplicable("not supersolvable");
  if constexpr (!F::is_finite) {
    return inapplicable(over_q("exact beta"));
  } else {
    std::size_t floor = supersolvable_beta_floor(an.n());
    Json d;
    d["beta"] = an.beta().value;
    d["floor"] = floor;
    bool ok = an.beta().value >= floor;
    return verdict(ok, ok ? "beta above the floor" : "beta below the floor", d);
  }
}

template <Field F>
Outcome check_P31(Analysis<F>& an) {
  const auto& L = an.algebra();
  const auto& f = L.field();
  std::size_t n = an.n();
  std::vector<Subspace<F>> As;
  auto add_A = [&](const Subspace<F>& A) {
    if (A.is_zero() || A.is_whole() || !is_abelian(L, A)) return;
    if (std::find(As.begin(), As.end(), A) == As.end()) As.push_back(A);
  };
  add_A(an.center());
  add_A(an.greedy());
  if constexpr (F::is_finite) {
    add_A(an.alpha().witness);
    add_A(an.beta().witness);
  }
  for (std::size_t i = 0; i < n; ++i) add_A(span_of(L, {L.basis_vector(i)}));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) add_A(span_of(L, {L.basis_vector(i), L.basis_vector(j)}));

  Rows<F> extra;
  std::mt19937_64 rng(an.options().seed);
  for (std::size_t t = 0; t < an.options().samples; ++t) {
    Vec<F> v(n);
    for (auto& x : v) {
      if constexpr (F::is_finite)
        x = static_cast<std::uint32_t>(rng() % f.order());
      else
        x = f.from_int(static_cast<long long>(rng() % 5) - 2);
    }
    extra.push_back(std::move(v));
  }

  std::size_t instances = 0;
  for (const auto& A : As) {
    Subspace<F> NA = idealizer(L, A);
    Rows<F> e1s;
    for (std::size_t i = 0; i < n; ++i) e1s.push_back(L.basis_vector(i));
    e1s.insert(e1s.end(), extra.begin(), extra.end());
    for (const auto& e1 : e1s) {
      if (A.contains(e1)) continue;
      Subspace<F> K = A.with(e1);
      if (!is_subalgebra(L, K)) continue;
      Subspace<F> NK = idealizer(L, K);
      if (NA.contains(NK)) continue;  // no x with [x,K] ⊆ K and [x,A] ⊄ A
      ++instances;
      Subspace<F> K2 = bracket_span(L, K, K);
      Subspace<F> ZA = centralizer_in(L, K, K).intersect(A);
      bool ok = K2.is_zero() || (K2.dim() == 1 && ZA.dim() + 1 >= A.dim());
      if (!ok) {
        Json d;
        d["A"] = subspace_json(A);
        d["K"] = subspace_json(K);
        d["idealizer_K"] = subspace_json(NK);
        d["dim_K2"] = K2.dim();
        d["dim_ZK_cap_A"] = ZA.dim();
        return verdict(false, "conclusion fails for a hypothesis instance", d);
      }
    }
  }
  Json d;
  d["instances"] = instances;
  d["subalgebras_scanned"] = As.size();
  if (instances == 0) return inapplicable("no instance of the hypothesis found", d);
  return verdict(true, "conclusion holds on every instance found", d);
}

template <Field F>
Outcome check_C32(Analysis<F>& an) {
  if (!an.series().supersolvable) return inapplicable("not supersolvable");
  if constexpr (!F::is_finite) {
    return inapplicable(over_q("exact alpha"));
  } else {
    const auto& L = an.algebra();
    const auto& A = an.alpha().witness;
    if (A.is_whole()) return inapplicable("L is abelian");
    std::optional<Subspace<F>> K;
    SearchStats stats;
    for_each_line(
        complement_in(whole(L), A),
        [&](const Vec<F>& v) {
          Subspace<F> cand = A.with(v);
          if (is_ideal(L, cand)) K = cand;
          return !K;
        },
        an.options().search, stats);
    if (!K) return inapplicable("no ideal contains the alpha witness with codimension one");
    Json d;
    d["A"] = subspace_json(A);
    d["K"] = subspace_json(*K);
    d["alpha"] = an.alpha().value;
    d["beta"] = an.beta().value;
    bool ok = an.alpha().value == an.beta().value;
    return verdict(ok, ok ? "alpha = beta" : "alpha != beta", d);
  }
}

template <Field F>
Outcome check_P34(Analysis<F>& an) {
  if (!an.series().solvable) return inapplicable("not solvable");
  if constexpr (!F::is_finite) {
    return inapplicable(over_q("maximal subalgebra certification"));
  } else {
    const auto& L = an.algebra();
    const auto& s = an.series();
    const auto& opts = an.options().search;
    std::size_t n = an.n();
    if (n == 0) return inapplicable("zero algebra");
    Json d;
    bool rhs_i = an.beta().value + 1 >= n;
    d["codim1_abelian_ideal"] = rhs_i;

    Subspace<F> L2 = s.derived.size() > 1 ? s.derived[1] : zero_subspace(L);
    Subspace<F> L22 = s.derived.size() > 2 ? s.derived[2] : zero_subspace(L);
    const auto& Z = an.center();
    bool c_centre = L22 == Z;
    bool c_chief = c_centre && is_chief_factor(L, L2, L22, opts);
    auto split = find_split_complement(L, L2);
    bool c_split = split.complement.has_value();
    d["derived2_equals_centre"] = c_centre;
    d["chief_factor"] = c_chief;
    d["split"] = c_split ? "found" : (split.complete ? "none" : "not-found");
    bool rhs_ii = c_centre && c_chief && c_split;
    bool rhs_ii_known = !(c_centre && c_chief && !c_split && !split.complete);
    if (rhs_ii) {
      SearchOptions fopts = opts;
      fopts.budget = std::min(opts.budget, an.options().frattini_budget);
      try {
        Subspace<F> phi = frattini_ideal(L, fopts);
        d["frattini"] = subspace_json(phi);
        rhs_ii = phi == Z;
      } catch (const BudgetExceeded&) {
        rhs_ii = false;
        rhs_ii_known = false;
        d["frattini"] = "budget exceeded";
      }
    }
    d["case_ii"] = rhs_ii;

    std::vector<Subspace<F>> cands{an.alpha().witness, an.greedy()};
    if (rhs_i) cands.push_back(an.beta().witness);
    if (s.abelian) {
      Rows<F> rows;
      for (std::size_t i = 0; i + 1 < n; ++i) rows.push_back(L.basis_vector(i));
      cands.push_back(span_of(L, rows));
    }
    std::optional<Subspace<F>> constructed;
    if (split.complement) {
      constructed = *split.complement + Z;
      cands.push_back(*constructed);
    }
    std::optional<Subspace<F>> M;
    for (const auto& c : cands)
      if (is_abelian(L, c) && is_maximal_subalgebra(L, c, opts)) {
        M = c;
        break;
      }
    d["abelian_maximal_subalgebra"] = M ? subspace_json(*M) : Json(nullptr);

    if (M && !rhs_i && !rhs_ii) {
      if (!rhs_ii_known) return inapplicable("right-hand side undecided (split or Frattini search incomplete)", d);
      // diagnostic only: the weaker L^(2) = phi(L) ⊆ Z(L) also admits central summands
      try {
        SearchOptions fopts = opts;
        fopts.budget = std::min(opts.budget, an.options().frattini_budget);
        Subspace<F> phi = frattini_ideal(L, fopts);
        d["frattini"] = subspace_json(phi);
        d["relaxed_case_ii"] = phi == L22 && Z.contains(L22) && is_chief_factor(L, L2, L22, opts) && c_split;
      } catch (const BudgetExceeded&) {
      }
      return verdict(false, "abelian maximal subalgebra without either right-hand case", d);
    }
    if (rhs_ii && !(constructed && is_abelian(L, *constructed) && is_maximal_subalgebra(L, *constructed, opts)))
      return verdict(false, "case (ii) holds but B + Z(L) is not an abelian maximal subalgebra", d);
    if (rhs_i && !M) return verdict(false, "codimension-one abelian ideal not recognised as maximal", d);
    return verdict(true, M ? "both sides hold" : "neither side holds among the candidates", d);
  }
}

template <Field F>
Outcome check_T35(Analysis<F>& an, const std::optional<Subspace<F>>& witness) {
  if (!an.series().solvable) return inapplicable("not solvable");
  std::size_t n = an.n();
  if (n < 2) return inapplicable("dimension below two");
  std::optional<Subspace<F>> A = witness;
  if constexpr (F::is_finite) {
    if (an.alpha().value != n - 2) return inapplicable("alpha != n-2");
    if (!A) A = an.alpha().witness;
  } else {
    if (!A) return inapplicable("over Q a witness of dimension n-2 must be supplied");
  }
  auto r = classify_codim2(an.algebra(), *A, an.options().strategy, an.options().search);
  Json d;
  d["witness"] = subspace_json(*A);
  d["case"] = to_string(r.which);
  d["beta_prediction"] = {r.beta_lo, r.beta_hi};
  if (r.beta) d["beta"] = *r.beta;
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
  d["checks"] = checks;
  if (!r.note.empty()) d["note"] = r.note;
  if (r.which == Case::undetermined) return inapplicable("no case verified over Q", d);
  bool ok = r.which != Case::violation;
  return verdict(ok, ok ? "case " + to_string(r.which) : "no consistent case", d);
}

template <Field F>
Outcome check_C36(Analysis<F>& an) {
  if (!an.series().supersolvable) return inapplicable("not supersolvable");
  if constexpr (!F::is_finite) {
    return inapplicable(over_q("exact alpha"));
  } else {
    std::size_t n = an.n();
    if (n < 2 || an.alpha().value != n - 2) return inapplicable("alpha != n-2");
    Json d{{"alpha", an.alpha().value}, {"beta", an.beta().value}};
    bool ok = an.beta().value == n - 2;
    return verdict(ok, ok ? "beta = n-2" : "beta != n-2", d);
  }
}

template <Field F>
Outcome check_T41(Analysis<F>& an) {
  if (an.algebra().field().characteristic() == 2) return inapplicable("characteristic two");
  if (!an.series().nilpotent) return inapplicable("not nilpotent");
  if constexpr (!F::is_finite) {
    return inapplicable(over_q("exact alpha"));
  } else {
    std::size_t n = an.n();
    if (n < 3 || an.alpha().value != n - 3) return inapplicable("alpha != n-3");
    Json d{{"alpha", an.alpha().value}, {"beta", an.beta().value}};
    bool ok = an.beta().value == n - 3;
    return verdict(ok, ok ? "beta = n-3" : "beta != n-3", d);
  }
}

template <Field F>
Outcome check_E41(Analysis<F>& an) {
  if constexpr (!F::is_finite) {
    return inapplicable("not the characteristic-two example");
  } else {
    const auto& L = an.algebra();
    if (L.field().order() != 2 || !L.same_table(catalog_get("example-4.1", L.field())))
      return inapplicable("not the characteristic-two example");
    const auto& a = an.alpha();
    const auto& b = an.beta();
    Subspace<F> expected = span_of(L, parse_witness(L.field(), 9, "e2,e6,e7,e8,e9"));
    Json d;
    d["alpha"] = a.value;
    d["alpha_witness"] = subspace_json(a.witness);
    d["alpha_witness_in_families"] = in_example41_families(a.witness);
    d["beta"] = b.value;
    d["beta_witness"] = subspace_json(b.witness);
    bool ok = a.value == 6 && in_example41_families(a.witness) && b.value == 5 && b.witness == expected;
    return verdict(ok, ok ? "alpha = 6, beta = 5" : "values or witnesses differ", d);
  }
}

template <Field F>
Outcome check_OQ1(Analysis<F>& an) {
  if (an.algebra().field().characteristic() == 2) return inapplicable("characteristic two");
  if (!an.series().supersolvable) return inapplicable("not supersolvable");
  if constexpr (!F::is_finite) {
    return inapplicable(over_q("exact alpha"));
  } else {
    std::size_t n = an.n();
    if (n < 3 || an.alpha().value != n - 3) return inapplicable("alpha != n-3");
    Json d{{"alpha", an.alpha().value}, {"beta", an.beta().value}, {"nilpotent", an.series().nilpotent}};
    return probe(an.beta().value == n - 3, "beta vs n-3", d);
  }
}

template <Field F>
Outcome check_OQ2(Analysis<F>& an, bool centre_part) {
  if (!an.series().supersolvable) return inapplicable("not supersolvable");
  if constexpr (!F::is_finite) {
    return inapplicable(over_q("exact alpha"));
  } else {
    const auto& L = an.algebra();
    long long n = static_cast<long long>(an.n());
    const auto& A = an.alpha().witness;
    long long k = n - static_cast<long long>(an.alpha().value);
    if (k < 1) return inapplicable("L is abelian");
    auto Ns = hyperplane_ideals_over(L, A, an.options().search);
    if (Ns.empty()) return inapplicable("no ideal maximal subalgebra contains the alpha witness");
    Json d;
    d["k"] = k;
    d["A"] = subspace_json(A);
    Json rows = Json::array();
    bool ok = true;
    for (const auto& N : Ns) {
      Json row;
      row["N"] = subspace_json(N);
      if (centre_part) {
        long long z = static_cast<long long>(centralizer_in(L, N, N).dim());
        row["dim_ZN"] = z;
        row["bound"] = n - 2 * k + 1;
        ok = ok && z >= n - 2 * k + 1;
      } else {
        long long q = static_cast<long long>(bracket_span(L, N, N).dim());
        row["dim_N2"] = q;
        row["bound"] = k - 1;
        ok = ok && q <= k - 1;
      }
      rows.push_back(row);
    }
    d["ideals"] = rows;
    return probe(ok, centre_part ? "dim Z(N) vs n-2k+1" : "dim N^2 vs k-1", d);
  }
}

template <Field F>
Outcome dispatch(Analysis<F>& an, const std::string& id, const std::optional<Subspace<F>>& witness) {
  if (id == "P2.1") return check_P21(an);
  if (id == "L2.3") return check_L23(an);
  if (id == "T2.4") return check_T24(an);
  if (id == "L2.5") return check_L25(an);
  if (id == "C2.7") return check_C27(an);
  if (id == "C2.8") return check_C28(an);
  if (id == "P3.1") return check_P31(an);
  if (id == "C3.2") return check_C32(an);
  if (id == "P3.4") return check_P34(an);
  if (id == "T3.5") return check_T35(an, witness);
  if (id == "C3.6") return check_C36(an);
  if (id == "T4.1") return check_T41(an);
  if (id == "E4.1") return check_E41(an);
  if (id == "OQ1") return check_OQ1(an);
  if (id == "OQ2i") return check_OQ2(an, true);
  if (id == "OQ2ii") return check_OQ2(an, false);
  throw std::invalid_argument("unknown property id: " + id);
}

}  // namespace detail

/// Runs one property. Unsupported primitives and exhausted budgets make the
/// result inapplicable; failures embed the algebra document for replay.
template <Field F>
PropertyResult run_property(Analysis<F>& an, const std::string& id,
                            const std::optional<Subspace<F>>& witness = std::nullopt) {
  if (!find_property(id)) throw std::invalid_argument("unknown property id: " + id);
  PropertyResult r{id, an.algebra().name(), Status::inapplicable, {}, Json::object()};
  detail::Outcome o;
  try {
    o = detail::dispatch(an, id, witness);
  } catch (const BudgetExceeded& e) {
    o = detail::inapplicable(e.what());
  } catch (const UnsupportedError& e) {
    o = detail::inapplicable(e.what());
  }
  r.status = o.status;
  r.reason = std::move(o.reason);
  r.details = std::move(o.details);
  if (r.status == Status::fail || r.status == Status::probe_fail)
    r.details["document"] = Json::parse(serialize_document(an.algebra()));
  return r;
}

template <Field F>
PropertyResult run_property(const LieAlgebra<F>& L, const std::string& id, const VerifyOptions& opts = {},
                            const std::optional<Subspace<F>>& witness = std::nullopt) {
  Analysis<F> an(L, opts);
  return run_property(an, id, witness);
}

struct SuiteCounts {
  std::size_t pass = 0, fail = 0, inapplicable = 0, probe_pass = 0, probe_fail = 0;

  void add(Status s) {
    switch (s) {
      case Status::pass: ++pass; break;
      case Status::fail: ++fail; break;
      case Status::inapplicable: ++inapplicable; break;
      case Status::probe_pass: ++probe_pass; break;
      case Status::probe_fail: ++probe_fail; break;
    }
  }
};

struct SuiteReport {
  std::uint64_t seed = 0;
  std::vector<std::string> ids;
  std::map<std::string, SuiteCounts> counts;
  std::vector<PropertyResult> results;  ///< algebra-major, ids in the given order

  /// Any fail on a proven statement (everything except the probes).
  bool proven_failure() const {
    for (const auto& r : results)
      if (r.status == Status::fail) return true;
    return false;
  }
};

/// Runs every (algebra, property) pair; algebras are distributed over
/// `threads` workers and the results merged in input order.
template <Field F>
SuiteReport run_suite(const std::vector<LieAlgebra<F>>& algebras, const std::vector<std::string>& ids,
                      const VerifyOptions& opts = {}, unsigned threads = 1) {
  for (const auto& id : ids)
    if (!find_property(id)) throw std::invalid_argument("unknown property id: " + id);
  std::vector<std::vector<PropertyResult>> per(algebras.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < algebras.size(); i = next++) {
      Analysis<F> an(algebras[i], opts);
      for (const auto& id : ids) per[i].push_back(run_property(an, id));
    }
  };
  threads = std::max(1u, threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  SuiteReport rep;
  rep.seed = opts.seed;
  rep.ids = ids;
  for (const auto& id : ids) rep.counts[id];
  for (auto& rs : per)
    for (auto& r : rs) {
      rep.counts[r.property].add(r.status);
      rep.results.push_back(std::move(r));
    }
  return rep;
}

// ---------------------------------------------------------------------------
// Counterexample search

struct GeneratorSpec {
  std::string kind = "supersolvable";  ///< nilpotent, supersolvable, metabelian-split
  std::uint32_t p = 3;
  std::size_t dim_lo = 5, dim_hi = 7;
  std::size_t k = 2;  ///< metabelian-split only: dim of the abelian ideal
};

/// Sample i uses dimension dim_lo + i mod (range) and seed + i.
inline LieAlgebra<PrimeField> generate(const GeneratorSpec& g, std::size_t i, std::uint64_t seed) {
  std::size_t n = g.dim_lo + i % (g.dim_hi - g.dim_lo + 1);
  std::uint64_t s = seed + i;
  if (g.kind == "nilpotent") return random_nilpotent(n, g.p, s);
  if (g.kind == "supersolvable") return random_supersolvable(n, g.p, s).first;
  if (g.kind == "metabelian-split") return random_metabelian_split(n, std::min(g.k, n - 1), g.p, s);
  throw GeneratorError("unknown generator kind: " + g.kind);
}

inline GeneratorSpec default_generator(const std::string& id) {
  if (id == "OQ1") return {"supersolvable", 3, 5, 7, 2};
  if (id == "T4.1") return {"nilpotent", 3, 4, 7, 2};
  return {"supersolvable", 3, 4, 7, 2};
}

struct SearchReport {
  std::string property;
  GeneratorSpec generator;
  std::uint64_t seed = 0;
  std::size_t sampled = 0;
  std::size_t applicable = 0;
  std::size_t held = 0;
  std::optional<LieAlgebra<PrimeField>> counterexample;
  std::optional<PropertyResult> result;
};

/// Samples up to `budget` algebras and returns the first on which the
/// property fails (fail or probe-fail).
inline SearchReport counterexample_search(const GeneratorSpec& gen, const std::string& id, std::size_t budget,
                                          std::uint64_t seed, VerifyOptions opts = {}) {
  if (!find_property(id)) throw std::invalid_argument("unknown property id: " + id);
  SearchReport rep;
  rep.property = id;
  rep.generator = gen;
  rep.seed = seed;
  opts.seed = seed;
  for (std::size_t i = 0; i < budget; ++i) {
    auto L = generate(gen, i, seed);
    ++rep.sampled;
    Analysis<PrimeField> an(L, opts);
    auto r = run_property(an, id);
    if (r.status == Status::inapplicable) continue;
    ++rep.applicable;
    if (r.status == Status::pass || r.status == Status::probe_pass) {
      ++rep.held;
      continue;
    }
    rep.counterexample = std::move(L);
    rep.result = std::move(r);
    break;
  }
  return rep;
}

}  // namespace liealg
