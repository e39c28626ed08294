// Acceptance run: one PASS/FAIL line per criterion, detail lines indented.
// usage: acceptance CLI GOLDENS_DIR
//
// Exit status is 0 when every criterion was evaluated and each FAIL is one of
// the known-unattainable ones listed in kKnownFailures; a FAIL line is never
// rewritten. Any other FAIL, or an exception, exits 1.

#include "liealg/report.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <thread>

using namespace liealg;
namespace fs = std::filesystem;

namespace {

// pinned limits; exact values carry zero tolerance
constexpr double kExample41Seconds = 120.0;
constexpr double kSmallExampleSeconds = 5.0;
constexpr double kSuiteSeconds = 15 * 60.0;
constexpr std::size_t kPerClass = 200;
constexpr std::size_t kOracleAlgebras = 50;

// 2: beta = 2 over F5 for both 4-dim examples (x^2+1 splits mod 5).
// 3: P3.4 as stated fails on algebras with a central direct summand.
const std::set<int> kKnownFailures{2, 3};

using Clock = std::chrono::steady_clock;
using Alg = LieAlgebra<PrimeField>;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Verdict {
  bool ok = true;
  std::string summary;
  std::vector<std::string> details;

  void check(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      details.push_back("failed: " + what);
    }
  }
  void note(const std::string& s) { details.push_back(s); }
};

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

Subspace<PrimeField> sp(const Alg& L, const std::string& spec) {
  return Subspace<PrimeField>::span(L.field(), L.dim(), parse_witness(L.field(), L.dim(), spec));
}

unsigned workers() { return std::max(1u, std::thread::hardware_concurrency()); }

// --- 1 ---------------------------------------------------------------------

Verdict example41() {
  Verdict v;
  auto L = catalog_get("example-4.1", PrimeField(2));
  auto t0 = Clock::now();
  SearchStats sa, sb;
  auto a = alpha_exact(L, Strategy::exhaustive, {}, &sa);
  auto b = beta_exact(L, Strategy::exhaustive, {}, &sb);
  double secs = since(t0);
  bool in_family = false;
  for (const char* head : {"e4", "e3+e4"})
    in_family |= a.witness == sp(L, std::string(head) + ",e5,e6,e7,e8,e9");
  v.check(a.value == 6, "alpha = 6");
  v.check(in_family, "alpha witness in the family span(λe3+e4, e5..e9)");
  v.check(b.value == 5, "beta = 5");
  v.check(b.witness == sp(L, "e2,e6,e7,e8,e9"), "beta witness = span(e2,e6,e7,e8,e9)");
  v.check(secs < kExample41Seconds, "exhaustive under " + fmt_seconds(kExample41Seconds));
  v.summary = "alpha=" + std::to_string(a.value) + " [" + render_subspace_inline(a.witness) + "] beta=" +
              std::to_string(b.value) + " [" + render_subspace_inline(b.witness) + "] candidates=" +
              std::to_string(sa.candidates + sb.candidates) + " " + fmt_seconds(secs);
  return v;
}

// --- 2 ---------------------------------------------------------------------

Verdict small_examples() {
  Verdict v;
  std::size_t exact_ok = 0, exact_total = 0;
  for (const char* name : {"example-3.1", "example-3.2"}) {
    for (std::uint32_t p : {5u, 7u}) {
      auto t0 = Clock::now();
      auto L = catalog_get(name, PrimeField(p));
      auto a = alpha_exact(L, Strategy::exhaustive).value;
      auto b = beta_exact(L, Strategy::exhaustive).value;
      double secs = since(t0);
      bool ok = a == 2 && b == 1 && secs < kSmallExampleSeconds;
      ++exact_total;
      exact_ok += ok;
      v.check(ok, std::string(name) + " over F" + std::to_string(p) + ": alpha=" + std::to_string(a) +
                      " beta=" + std::to_string(b) + " (want 2, 1) " + fmt_seconds(secs));
    }
    auto t0 = Clock::now();
    auto Lq = catalog_get(name, RationalField{});
    auto bq = bounds(Lq);
    bool bracket = bq.alpha_lo <= 2 && 2 <= bq.alpha_hi && bq.beta_lo <= 1 && 1 <= bq.beta_hi;
    v.check(bracket, std::string(name) + " over Q: bounds bracket alpha=2, beta=1");
    std::string w = std::string(name) == "example-3.1" ? "e1,e4" : "e3,e4";
    auto A = Subspace<RationalField>::span(Lq.field(), 4, parse_witness(Lq.field(), 4, w));
    auto r = classify_codim2(Lq, A);
    Case want = std::string(name) == "example-3.1" ? Case::ii : Case::iii;
    v.check(r.which == want, std::string(name) + " over Q: classify case " + to_string(want) + ", got " +
                                 to_string(r.which));
    v.check(since(t0) < kSmallExampleSeconds, std::string(name) + " over Q under " + fmt_seconds(kSmallExampleSeconds));
    v.note(std::string(name) + " over Q: alpha in [" + std::to_string(bq.alpha_lo) + "," + std::to_string(bq.alpha_hi) +
           "] beta in [" + std::to_string(bq.beta_lo) + "," + std::to_string(bq.beta_hi) + "] case " +
           to_string(r.which));
  }
  v.summary = std::to_string(exact_ok) + "/" + std::to_string(exact_total) + " prime-field cases exact; rational bounds and cases as listed";
  return v;
}

// --- 3 and 6 ---------------------------------------------------------------

struct Corpus {
  std::string label;
  std::vector<Alg> algebras;
};

std::vector<Corpus> random_corpus() {
  Corpus nil{"nilpotent F3/F5 dims 4-7", {}}, sup{"supersolvable F3/F5 dims 4-7", {}},
      met{"metabelian-split F3 dims 4-6", {}};
  for (std::uint64_t s = 0; s < kPerClass; ++s) {
    std::uint32_t p = s % 2 ? 5 : 3;
    std::size_t n = 4 + s % 4;
    nil.algebras.push_back(random_nilpotent(n, p, s));
    sup.algebras.push_back(random_supersolvable(n, p, s).first);
    std::size_t m = 4 + s % 3;
    met.algebras.push_back(random_metabelian_split(m, 1 + (s / 3) % (m - 1), 3, s));
  }
  return {nil, sup, met};
}

const std::vector<std::string> kTheorems{"P2.1", "L2.3", "T2.4", "L2.5", "C2.7", "C2.8",
                                         "C3.2", "P3.4", "T3.5", "C3.6", "T4.1"};

Verdict theorem_suite(const std::vector<Corpus>& corpus) {
  Verdict v;
  auto t0 = Clock::now();
  std::map<std::string, SuiteCounts> total;
  std::size_t fails = 0, runs = 0, relaxed = 0;
  for (const auto& c : corpus) {
    auto rep = run_suite(c.algebras, kTheorems, {}, workers());
    std::size_t class_fails = 0;
    for (const auto& r : rep.results) {
      ++runs;
      if (r.status != Status::fail) continue;
      ++class_fails;
      if (r.details.value("relaxed_case_ii", false)) ++relaxed;
      if (class_fails <= 3) v.note("fail " + r.property + " on " + r.algebra + ": " + r.reason);
    }
    for (const auto& [id, n] : rep.counts) {
      total[id].pass += n.pass;
      total[id].fail += n.fail;
      total[id].inapplicable += n.inapplicable;
    }
    fails += class_fails;
    v.note(c.label + ": " + std::to_string(c.algebras.size()) + " algebras, " + std::to_string(class_fails) + " fails");
  }
  std::string tally;
  for (const auto& id : kTheorems) {
    const auto& n = total[id];
    tally += " " + id + "=" + std::to_string(n.pass) + "/" + std::to_string(n.fail) + "/" + std::to_string(n.inapplicable);
  }
  v.note("pass/fail/inapplicable:" + tally);
  if (fails) v.note(std::to_string(relaxed) + "/" + std::to_string(fails) + " fails satisfy L^(2) = phi(L) inside Z(L), chief, split");
  double secs = since(t0);
  v.check(fails == 0, "zero failures on proven properties (" + std::to_string(fails) + ")");
  v.check(secs < kSuiteSeconds, "suite under " + fmt_seconds(kSuiteSeconds));
  v.summary = std::to_string(runs) + " checks, " + std::to_string(fails) + " fails, " + fmt_seconds(secs);
  return v;
}

Verdict bound_soundness(const std::vector<Corpus>& corpus) {
  Verdict v;
  std::size_t checked = 0, cor28 = 0, bad = 0;
  for (const auto& c : corpus)
    for (const auto& L : c.algebras) {
      auto b = bounds(L);
      auto a = alpha_exact(L, Strategy::branch_bound).value;
      auto be = beta_exact(L, Strategy::branch_bound).value;
      ++checked;
      bool ok = b.alpha_lo <= a && a <= b.alpha_hi && b.beta_lo <= be && be <= b.beta_hi;
      for (const auto& row : b.provenance)
        if (row.source == "Cor2.8") {
          ++cor28;
          ok &= be >= supersolvable_beta_floor(L.dim()) && static_cast<std::size_t>(row.value) == supersolvable_beta_floor(L.dim());
        }
      if (!ok && ++bad <= 3) v.note("unsound on " + L.name());
    }
  v.check(bad == 0, "bounds bracket exact values");
  v.summary = std::to_string(checked) + " algebras, " + std::to_string(cor28) + " with the supersolvable floor row, " +
              std::to_string(bad) + " unsound";
  return v;
}

// --- 4 ---------------------------------------------------------------------

Verdict characteristic_two() {
  Verdict v;
  std::vector<Alg> inputs{catalog_get("example-4.1", PrimeField(2))};
  for (const auto& e : catalog_entries()) {
    try {
      inputs.push_back(catalog_get(e.name, PrimeField(2)));
    } catch (const CatalogError&) {
    }
  }
  for (std::uint64_t s = 0; s < 100; ++s) {
    inputs.push_back(random_nilpotent(3 + s % 6, 2, s));
    inputs.push_back(random_supersolvable(3 + s % 5, 2, s).first);
  }
  std::size_t applicable = 0;
  for (const auto& L : inputs)
    if (run_property(L, "T4.1").status != Status::inapplicable) {
      ++applicable;
      v.note("T4.1 applied on " + L.name());
    }
  auto e = run_property(inputs.front(), "E4.1");
  v.check(applicable == 0, "T4.1 inapplicable on every F2 input");
  v.check(e.status == Status::pass, "E4.1 passes");
  v.summary = "T4.1 inapplicable on " + std::to_string(inputs.size() - applicable) + "/" + std::to_string(inputs.size()) +
              " F2 inputs; E4.1 " + to_string(e.status);
  return v;
}

// --- 5 ---------------------------------------------------------------------

Verdict oracle_equivalence() {
  Verdict v;
  std::size_t compared = 0, differ = 0;
  for (std::uint64_t s = 0; compared < kOracleAlgebras * 2; ++s) {
    std::uint32_t p = s % 2 ? 3 : 2;
    for (const auto& L : {random_nilpotent(3 + s % 4, p, s), random_supersolvable(3 + s % 4, p, s).first}) {
      auto ae = alpha_exact(L, Strategy::exhaustive), ab = alpha_exact(L, Strategy::branch_bound);
      auto be = beta_exact(L, Strategy::exhaustive), bb = beta_exact(L, Strategy::branch_bound);
      ++compared;
      if (ae.value != ab.value || !(ae.witness == ab.witness) || be.value != bb.value || !(be.witness == bb.witness)) {
        ++differ;
        v.note("differ on " + L.name());
      }
    }
  }
  v.check(compared >= kOracleAlgebras, "at least " + std::to_string(kOracleAlgebras) + " algebras");
  v.check(differ == 0, "identical alpha, beta and witnesses");
  v.summary = std::to_string(compared) + " algebras of dim <= 6 over F2/F3, " + std::to_string(differ) + " differ";
  return v;
}

// --- 7 ---------------------------------------------------------------------

Verdict table_one() {
  Verdict v;
  struct Row {
    const char* family;
    std::uint64_t rank, dim, alpha;
  };
  // one sample per line of the table, formula rows at their first rank
  const Row rows[] = {{"A", 1, 3, 1},  {"B", 3, 21, 5},  {"B", 4, 36, 7},  {"C", 2, 10, 3},  {"D", 4, 28, 6},
                      {"G", 2, 14, 3}, {"F", 4, 52, 9},  {"E", 6, 78, 16}, {"E", 7, 133, 27}, {"E", 8, 248, 36}};
  std::size_t ok = 0;
  for (const auto& r : rows) {
    auto t = table1_alpha(r.family, r.rank);
    bool good = t.dim == r.dim && t.alpha == r.alpha;
    ok += good;
    v.check(good, std::string(r.family) + std::to_string(r.rank));
  }
  auto sl2 = alpha_exact(catalog_get("sl2", PrimeField(5))).value;
  v.check(sl2 == table1_alpha("A", 1).alpha, "sl2 over F5 alpha = A1 entry");
  v.summary = std::to_string(ok) + "/10 rows; sl2 over F5 alpha=" + std::to_string(sl2);
  return v;
}

// --- 8 ---------------------------------------------------------------------

std::pair<int, std::string> run_cli(const fs::path& dir, const std::string& cli, const std::string& args) {
  std::string cmd = "cd '" + dir.string() + "' && '" + cli + "' " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("cannot run " + cmd);
  std::string out;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + p.string());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string trim(std::string s) {
  auto b = s.find_first_not_of(" \t"), e = s.find_last_not_of(" \t\r");
  return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

Verdict determinism(const std::string& cli, const fs::path& dir) {
  Verdict v;
  std::ifstream cases(dir / "cases.txt");
  if (!cases) throw std::runtime_error("missing cases.txt in " + dir.string());
  std::size_t n = 0, threaded = 0;
  for (std::string line; std::getline(cases, line);) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream in(line);
    std::string name, thr, args;
    std::getline(in, name, '|');
    std::getline(in, thr, '|');
    std::getline(in, args);
    name = trim(name);
    args = trim(args) + " --json";
    auto expected = slurp(dir / "expected" / (name + ".json"));
    ++n;
    if (trim(thr) == "yes") {
      ++threaded;
      auto one = run_cli(dir, cli, args + " --threads 1");
      auto four = run_cli(dir, cli, args + " --threads 4");
      v.check(one == four, name + ": --threads 4 equals --threads 1");
      v.check(one.second == expected, name + ": matches expected output");
    } else {
      v.check(run_cli(dir, cli, args).second == expected, name + ": matches expected output");
    }
  }
  auto digests = Json::parse(slurp(dir / "generator_digests.json"));
  std::size_t dg = 0;
  for (const auto& g : digests) {
    std::string type = g["type"];
    std::size_t dim = g["dim"];
    std::uint32_t p = g["p"];
    std::uint64_t seed = g["seed"];
    Alg L = type == "nilpotent"       ? random_nilpotent(dim, p, seed)
            : type == "supersolvable" ? random_supersolvable(dim, p, seed).first
                                      : random_metabelian_split(dim, g["k"].get<std::size_t>(), p, seed);
    bool same = algebra_digest(L) == g["digest"].get<std::string>();
    dg += same;
    v.check(same, "digest of " + L.name());
  }
  for (const auto& doc : {"example-3.1.json", "example-3.2.json", "example-4.1.json"}) {
    auto text = slurp(dir / doc);
    v.check(serialize_document(parse_document(text)) == text, std::string(doc) + ": canonical round trip");
  }
  v.summary = std::to_string(n) + " golden outputs (" + std::to_string(threaded) + " at 1 and 4 threads), " +
              std::to_string(dg) + "/" + std::to_string(digests.size()) + " generator digests";
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: acceptance CLI GOLDENS_DIR\n";
    return 2;
  }
  std::string cli = fs::absolute(argv[1]).string();
  fs::path goldens = fs::absolute(argv[2]);

  std::vector<Corpus> corpus;
  std::vector<std::pair<int, std::function<Verdict()>>> criteria{
      {1, example41},
      {2, small_examples},
      {3, [&] {
         corpus = random_corpus();
         return theorem_suite(corpus);
       }},
      {4, characteristic_two},
      {5, oracle_equivalence},
      {6, [&] { return bound_soundness(corpus); }},
      {7, table_one},
      {8, [&] { return determinism(cli, goldens); }},
  };

  bool unexpected = false;
  for (auto& [id, run] : criteria) {
    Verdict v;
    try {
      v = run();
    } catch (const std::exception& e) {
      v.ok = false;
      v.summary = std::string("error: ") + e.what();
    }
    std::cout << "criterion " << id << ": " << (v.ok ? "PASS" : "FAIL") << "  " << v.summary << "\n";
    for (const auto& d : v.details) std::cout << "    " << d << "\n";
    std::cout.flush();
    if (!v.ok && !kKnownFailures.count(id)) unexpected = true;
  }
  std::cout << "known unattainable: 2 (beta = 2 over F5), 3 (P3.4 with a central summand)\n";
  return unexpected ? 1 : 0;
}
