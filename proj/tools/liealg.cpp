// Command-line front end: validate, inspect and verify algebra documents.
//
// Exit codes: 0 ok, 1 parse/validation error or bad usage, 2 unsupported
// field or operation, 3 a proven property failed, 4 budget exceeded.

#include "liealg/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace {

using namespace liealg;

enum Exit { ok = 0, invalid = 1, unsupported = 2, violation = 3, budget = 4 };

struct Output {
  bool json = false;

  void emit(const Json& j) const {
    if (json)
      std::cout << j.dump(2) << "\n";
    else
      std::cout << render_text(j);
  }
};

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DocumentError("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

AnyAlgebra load(const std::string& path) { return parse_document(read_input(path)); }

Strategy parse_strategy(const std::string& s) {
  if (s == "exhaustive") return Strategy::exhaustive;
  if (s == "bnb" || s == "branch_bound") return Strategy::branch_bound;
  throw std::invalid_argument("unknown strategy '" + s + "' (exhaustive or bnb)");
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

// --- invariants -------------------------------------------------------------

struct InvariantsArgs {
  std::string file;
  bool exact = false, bounds = false;
  std::string strategy = "exhaustive";
  std::uint64_t budget = 100'000'000;
  unsigned threads = 1;
};

template <Field F>
int run_invariants(const LieAlgebra<F>& L, const InvariantsArgs& a, const Output& out) {
  SearchOptions opts{a.budget, a.threads};
  bool exact = a.exact || (!a.bounds && F::is_finite);
  if (!exact) {
    Json j = algebra_header(L);
    j.update(bounds_json(bounds(L, opts)));
    out.emit(j);
    return ok;
  }
  if constexpr (!F::is_finite) {
    throw UnsupportedError("exact alpha and beta need a prime field; use --bounds over Q");
  } else {
    Strategy strategy = parse_strategy(a.strategy);
    SearchStats stats;
    try {
      auto alpha = alpha_exact(L, strategy, opts, &stats);
      std::optional<Subspace<F>> N;
      if (series(L).solvable) N = nilradical(L, opts);
      auto beta = beta_exact(L, strategy, opts, &stats, N);
      Json j = algebra_header(L);
      j["alpha"] = alpha.value;
      j["alpha_witness"] = subspace_json(alpha.witness);
      j["beta"] = beta.value;
      j["beta_witness"] = subspace_json(beta.witness);
      j["method"] = to_string(alpha.method);
      j["candidates"] = stats.candidates;
      out.emit(j);
      return ok;
    } catch (const BudgetExceeded& e) {
      Json j = algebra_header(L);
      j["error"] = e.what();
      j["partial"] = bounds_json(bounds(L, opts));
      out.emit(j);
      return budget;
    }
  }
}

// --- classify ---------------------------------------------------------------

template <Field F>
int run_classify(const LieAlgebra<F>& L, const std::string& spec, const std::string& strategy,
                 std::uint64_t budget_, const Output& out) {
  auto A = Subspace<F>::span(L.field(), L.dim(), parse_witness(L.field(), L.dim(), spec));
  auto r = classify_codim2(L, A, parse_strategy(strategy), SearchOptions{budget_, 1});
  out.emit(classify_json(L, A, r));
  return r.which == Case::violation ? violation : ok;
}

// --- verify -----------------------------------------------------------------

struct VerifyArgs {
  std::string file;
  std::string props;
  std::string suite;
  std::string witness;
  std::string strategy = "bnb";
  std::uint64_t budget = 100'000'000;
  std::uint64_t seed = 0;
  std::size_t samples = 50;
  unsigned threads = 1;
};

template <Field F>
int run_verify(const LieAlgebra<F>& L, const VerifyArgs& a, const Output& out) {
  std::vector<std::string> ids;
  if (!a.suite.empty()) {
    if (a.suite != "all") throw std::invalid_argument("unknown suite '" + a.suite + "' (only 'all')");
    ids = all_property_ids();
  } else {
    ids = split_list(a.props);
  }
  if (ids.empty()) throw std::invalid_argument("verify needs --props LIST or --suite all");
  for (const auto& id : ids)
    if (!find_property(id)) throw std::invalid_argument("unknown property id: " + id);

  VerifyOptions opts;
  opts.strategy = parse_strategy(a.strategy);
  opts.search = SearchOptions{a.budget, a.threads};
  opts.seed = a.seed;
  opts.samples = a.samples;
  std::optional<Subspace<F>> witness;
  if (!a.witness.empty()) witness = Subspace<F>::span(L.field(), L.dim(), parse_witness(L.field(), L.dim(), a.witness));

  Analysis<F> an(L, opts);
  SuiteReport rep;
  rep.seed = a.seed;
  rep.ids = ids;
  for (const auto& id : ids) {
    auto r = run_property(an, id, witness);
    rep.counts[id].add(r.status);
    rep.results.push_back(std::move(r));
  }
  Json j = algebra_header(L);
  j.update(suite_json(rep));
  out.emit(j);
  return rep.proven_failure() ? violation : ok;
}

// --- catalog / random -------------------------------------------------------

Params parse_params(const std::vector<std::string>& items) {
  Params p;
  for (const auto& group : items)
    for (const auto& kv : split_list(group)) {
      auto eq = kv.find('=');
      if (eq == std::string::npos) throw std::invalid_argument("parameter '" + kv + "' is not key=value");
      try {
        p[kv.substr(0, eq)] = std::stoll(kv.substr(eq + 1));
      } catch (const std::logic_error&) {
        throw std::invalid_argument("parameter '" + kv + "' needs an integer value");
      }
    }
  return p;
}

AnyAlgebra catalog_emit(const std::string& name, const std::string& field, const Params& params) {
  std::string label = field;
  if (label.empty()) label = name == "example-4.1" ? "Fp:2" : "Q";
  auto spec = FieldSpec::parse(label);
  if (spec.is_prime_field()) return catalog_get(name, PrimeField(spec.p), params);
  return catalog_get(name, RationalField{}, params);
}

Json catalog_list_json() {
  Json list = Json::array();
  for (const auto& e : catalog_entries()) {
    Json params = Json::object();
    for (const auto& [k, v] : e.params) params[k] = v;
    list.push_back({{"name", e.name}, {"params", params}, {"fields", e.fields}, {"note", e.note}});
  }
  return list;
}

LieAlgebra<PrimeField> random_algebra(const std::string& type, std::size_t n, std::uint32_t p, std::size_t k,
                                      std::uint64_t seed) {
  if (type == "nilpotent") return random_nilpotent(n, p, seed);
  if (type == "supersolvable") return random_supersolvable(n, p, seed).first;
  if (type == "metabelian-split") return random_metabelian_split(n, k, p, seed);
  throw std::invalid_argument("unknown generator type '" + type + "'");
}

template <class Fn>
int guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return budget;
  } catch (const UnsupportedError& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return unsupported;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return invalid;
  } catch (const GeneratorError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return invalid;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"liealg: structure and abelian-subalgebra invariants of finite-dimensional Lie algebras"};
  app.require_subcommand(1);
  Output out;

  auto* validate = app.add_subcommand("validate", "Parse a document and check antisymmetry and Jacobi");
  std::string validate_file;
  validate->add_option("FILE", validate_file, "algebra document, or - for stdin")->required();
  validate->add_flag("--json", out.json, "machine-readable report");

  auto* info = app.add_subcommand("info", "Series, flags, centre, nilradical and Frattini ideal");
  std::string info_file;
  std::uint64_t info_budget = 100'000'000;
  info->add_option("FILE", info_file)->required();
  info->add_option("--budget", info_budget, "enumeration budget");
  info->add_flag("--json", out.json);

  auto* inv = app.add_subcommand("invariants", "alpha and beta, exactly or as certified bounds");
  InvariantsArgs ia;
  inv->add_option("FILE", ia.file)->required();
  auto* exact_flag = inv->add_flag("--exact", ia.exact, "exact values by enumeration (prime fields)");
  inv->add_flag("--bounds", ia.bounds, "certified bounds with provenance")->excludes(exact_flag);
  inv->add_option("--strategy", ia.strategy, "exhaustive or bnb")->check(CLI::IsMember({"exhaustive", "bnb"}));
  inv->add_option("--budget", ia.budget, "candidate subspaces before giving up");
  inv->add_option("--threads", ia.threads, "enumeration workers")->check(CLI::Range(1u, 256u));
  inv->add_flag("--json", out.json);

  auto* cls = app.add_subcommand("classify", "Which case applies to an abelian subalgebra of codimension 2");
  std::string cls_file, cls_witness, cls_strategy = "bnb";
  std::uint64_t cls_budget = 100'000'000;
  cls->add_option("FILE", cls_file)->required();
  cls->add_option("--witness", cls_witness, "basis of A, e.g. e1,e4")->required();
  cls->add_option("--strategy", cls_strategy)->check(CLI::IsMember({"exhaustive", "bnb"}));
  cls->add_option("--budget", cls_budget);
  cls->add_flag("--json", out.json);

  auto* ver = app.add_subcommand("verify", "Check properties on one algebra");
  VerifyArgs va;
  ver->add_option("FILE", va.file)->required();
  auto* props_opt = ver->add_option("--props", va.props, "comma-separated property ids");
  ver->add_option("--suite", va.suite, "all")->excludes(props_opt);
  ver->add_option("--witness", va.witness, "witness subspace for T3.5");
  ver->add_option("--strategy", va.strategy)->check(CLI::IsMember({"exhaustive", "bnb"}));
  ver->add_option("--budget", va.budget);
  ver->add_option("--seed", va.seed, "seed for sampled checks");
  ver->add_option("--samples", va.samples, "random vectors in the P3.1 scan");
  ver->add_option("--threads", va.threads)->check(CLI::Range(1u, 256u));
  ver->add_flag("--json", out.json);

  auto* cat = app.add_subcommand("catalog", "List or emit named algebras");
  bool cat_list = false;
  std::string cat_emit, cat_field;
  std::vector<std::string> cat_params;
  auto* list_flag = cat->add_flag("--list", cat_list);
  cat->add_option("--emit", cat_emit, "entry name")->excludes(list_flag);
  cat->add_option("--field", cat_field, "Q or Fp:P");
  cat->add_option("--params", cat_params, "key=value ...");
  cat->add_flag("--json", out.json);

  auto* rnd = app.add_subcommand("random", "Seeded random algebra");
  std::string rnd_type;
  std::size_t rnd_dim = 0, rnd_k = 0;
  std::uint32_t rnd_p = 0;
  std::uint64_t rnd_seed = 0;
  bool rnd_emit = false;
  rnd->add_option("--type", rnd_type)->required()->check(CLI::IsMember({"nilpotent", "supersolvable", "metabelian-split"}));
  rnd->add_option("--dim", rnd_dim)->required();
  rnd->add_option("--p", rnd_p)->required();
  rnd->add_option("--seed", rnd_seed)->required();
  rnd->add_option("--k", rnd_k, "metabelian-split: dimension of the abelian ideal (default n/2)");
  rnd->add_flag("--emit", rnd_emit, "print the document instead of a summary");
  rnd->add_flag("--json", out.json);

  auto* fz = app.add_subcommand("fuzz", "Search random algebras for a counterexample");
  std::string fz_question;
  std::size_t fz_budget = 0;
  std::uint64_t fz_seed = 0;
  GeneratorSpec fz_gen;
  std::string fz_type;
  std::uint32_t fz_p = 0;
  std::size_t fz_lo = 0, fz_hi = 0;
  fz->add_option("--question", fz_question, "OQ1, OQ2i, OQ2ii or a property id")->required();
  fz->add_option("--budget", fz_budget, "number of algebras to sample")->required();
  fz->add_option("--seed", fz_seed)->required();
  fz->add_option("--type", fz_type, "generator type (default depends on the question)")
      ->check(CLI::IsMember({"nilpotent", "supersolvable", "metabelian-split"}));
  fz->add_option("--p", fz_p);
  fz->add_option("--dim-lo", fz_lo);
  fz->add_option("--dim-hi", fz_hi);
  fz->add_flag("--json", out.json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    if (code == 0) return ok;
    std::cerr << app.help();
    return invalid;
  }

  if (*validate) {
    return guarded([&] {
      return std::visit(
          [&](const auto& L) {
            Json j = validation_json(L);
            out.emit(j);
            return j["ok"].get<bool>() ? ok : invalid;
          },
          load(validate_file));
    });
  }
  if (*info) {
    return guarded([&] {
      return std::visit(
          [&](const auto& L) {
            out.emit(info_json(L, SearchOptions{info_budget, 1}));
            return ok;
          },
          load(info_file));
    });
  }
  if (*inv) {
    return guarded([&] { return std::visit([&](const auto& L) { return run_invariants(L, ia, out); }, load(ia.file)); });
  }
  if (*cls) {
    return guarded([&] {
      return std::visit([&](const auto& L) { return run_classify(L, cls_witness, cls_strategy, cls_budget, out); },
                        load(cls_file));
    });
  }
  if (*ver) {
    return guarded([&] { return std::visit([&](const auto& L) { return run_verify(L, va, out); }, load(va.file)); });
  }
  if (*cat) {
    return guarded([&] {
      if (cat_list) {
        Json list = catalog_list_json();
        if (out.json) {
          std::cout << list.dump(2) << "\n";
        } else {
          for (const auto& e : list) {
            std::string params;
            for (auto it = e["params"].begin(); it != e["params"].end(); ++it)
              params += (params.empty() ? "" : ",") + it.key() + "=" + it.value().dump();
            std::cout << e["name"].get<std::string>() << (params.empty() ? "" : " (" + params + ")") << "  ["
                      << e["fields"].get<std::string>() << "]  " << e["note"].get<std::string>() << "\n";
          }
        }
        return static_cast<int>(ok);
      }
      if (cat_emit.empty()) throw std::invalid_argument("catalog needs --list or --emit NAME");
      std::cout << serialize_document(catalog_emit(cat_emit, cat_field, parse_params(cat_params)));
      return static_cast<int>(ok);
    });
  }
  if (*rnd) {
    return guarded([&] {
      std::size_t k = rnd_k ? rnd_k : std::max<std::size_t>(1, rnd_dim / 2);
      auto L = random_algebra(rnd_type, rnd_dim, rnd_p, k, rnd_seed);
      if (rnd_emit) {
        std::cout << serialize_document(L);
      } else {
        Json j = algebra_header(L);
        j["seed"] = rnd_seed;
        out.emit(j);
      }
      return static_cast<int>(ok);
    });
  }
  if (*fz) {
    return guarded([&] {
      if (!find_property(fz_question)) throw std::invalid_argument("unknown question '" + fz_question + "'");
      GeneratorSpec gen = default_generator(fz_question);
      if (!fz_type.empty()) gen.kind = fz_type;
      if (fz_p) gen.p = fz_p;
      if (fz_lo) gen.dim_lo = fz_lo;
      if (fz_hi) gen.dim_hi = fz_hi;
      if (gen.dim_hi < gen.dim_lo) throw std::invalid_argument("--dim-hi is below --dim-lo");
      auto rep = counterexample_search(gen, fz_question, fz_budget, fz_seed);
      Json j = search_json(rep);
      if (rep.counterexample) j["document"] = Json::parse(serialize_document(*rep.counterexample));
      out.emit(j);
      bool proven = !find_property(fz_question)->probe;
      return rep.counterexample && proven && rep.result->status == Status::fail ? violation : ok;
    });
  }
  return invalid;
}
