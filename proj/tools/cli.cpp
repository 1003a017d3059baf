#include "cli.hpp"

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "braidsc/conjugacy.hpp"
#include "braidsc/families.hpp"
#include "braidsc/ouroboros.hpp"
#include "curve_oracles.hpp"
#include "support.hpp"

namespace braidsc::cli {

namespace {

struct Input {
  int n = 0;
  std::vector<std::string> words;
  std::string family;
  int len = -1;
  std::vector<int> k;
  std::vector<int> abc;
};

struct Budgets {
  long max_conjugations = 10'000'000;
  long max_nodes = 2'000'000;
  double max_seconds = 0;
  bool verify = false;
  bool reduced = false;
  bool quiet = false;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

long default_conjugation_budget() {
  if (const char* env = std::getenv("BRAIDSC_MAX_CONJUGATIONS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
    }
  }
  return 10'000'000;
}

void add_family_options(CLI::App* sub, Input& in) {
  sub->add_option("--n", in.n, "Strand count");
  sub->add_option("--len", in.len, "Garside length L");
  sub->add_option("--k", in.k, "Repeat vector k_1..k_{n-2} for gamma-k")->delimiter(',');
  sub->add_option("--abc", in.abc, "Parameters a b c")->expected(3)->delimiter(',');
}

void add_input(CLI::App* sub, Input& in) {
  add_family_options(sub, in);
  sub->add_option("--family", in.family,
                  "Use a family member instead of a word: beta|gamma|gamma-k|gamma5|delta5|delta-abc|beta7-witness");
  sub->add_option("word", in.words, "Braid word: signed generators, D or D^k, separated by spaces or '.'");
}

void add_budgets(CLI::App* sub, Budgets& b) {
  b.max_conjugations = default_conjugation_budget();
  sub->add_option("--max-conjugations", b.max_conjugations, "Conjugation budget (env BRAIDSC_MAX_CONJUGATIONS)")
      ->check(CLI::PositiveNumber);
  sub->add_option("--max-nodes", b.max_nodes, "Node budget")->check(CLI::PositiveNumber);
  sub->add_option("--max-seconds", b.max_seconds, "Wall-clock budget")->check(CLI::PositiveNumber);
  sub->add_flag("--verify", b.verify, "Self-check the enumerated graph");
  sub->add_flag("--reduced", b.reduced, "Use the reduced conjugator frontier");
  sub->add_flag("--quiet", b.quiet, "No progress on stderr");
}

ScOptions sc_options(const Budgets& b, std::ostream& err, const std::string& tag) {
  ScOptions o;
  o.max_conjugations = b.max_conjugations;
  o.max_nodes = b.max_nodes;
  o.max_seconds = b.max_seconds;
  o.verify = b.verify;
  o.frontier = b.reduced ? ScOptions::Frontier::reduced : ScOptions::Frontier::exhaustive;
  if (!b.quiet) {
    static std::mutex mu;
    o.progress_period = 2.0;
    o.on_progress = [&err, tag](std::size_t nodes, long conj) {
      std::lock_guard lock(mu);
      err << "[" << tag << "] nodes=" << nodes << " conjugations=" << conj << std::endl;
    };
  }
  return o;
}

int need(int v, const char* what) {
  if (v < 0) throw UsageError(std::string("missing ") + what);
  return v;
}

BraidWord family_word(const std::string& name, const Input& in) {
  const auto abc = [&] {
    if (in.abc.size() != 3) throw UsageError(name + " needs --abc a,b,c");
    return in.abc;
  };
  if (name == "beta") return beta(need(in.n, "--n"), need(in.len, "--len"));
  if (name == "gamma") return gamma(need(in.n, "--n"), need(in.len, "--len"));
  if (name == "gamma-k") {
    if (in.k.empty()) throw UsageError("gamma-k needs --k");
    return gamma(GammaSpec{need(in.n, "--n"), in.k});
  }
  if (name == "gamma5") return gamma5(need(in.len, "--len"));
  if (name == "delta5") return delta5(need(in.len, "--len"));
  if (name == "delta-abc") {
    const auto v = abc();
    return delta_abc(v[0], v[1], v[2]);
  }
  if (name == "beta7-witness") {
    const auto v = abc();
    return beta7_witness(v[0], v[1], v[2]);
  }
  throw UsageError("unknown family '" + name + "'");
}

std::string join(const std::vector<std::string>& words) {
  std::string s;
  for (const auto& w : words) s += (s.empty() ? "" : " ") + w;
  return s;
}

CanonicalBraid input_braid(const Input& in) {
  if (!in.family.empty()) {
    if (!in.words.empty()) throw UsageError("give either a word or --family, not both");
    return normal_form(family_word(in.family, in));
  }
  if (in.n < 2) throw UsageError("--n is required with a braid word");
  return normal_form(parse_braid_word(join(in.words), in.n));
}

std::string orbit_line(const OrbitPartition& p) {
  std::ostringstream os;
  for (std::size_t i = 0; i < p.orbits.size(); ++i) os << (i ? " " : "") << p.orbits[i].size();
  return os.str();
}

int cmd_sc(const Input& in, const Budgets& b, bool full, bool json, const std::string& dot, std::ostream& out,
           std::ostream& err) {
  const auto x = input_braid(in);
  const auto g = sliding_circuit_set(x, sc_options(b, err, "sc"));
  if (!dot.empty()) {
    std::ofstream f(dot);
    if (!f) throw UsageError("cannot write " + dot);
    f << sc_to_dot(g);
  }
  if (json) {
    out << sc_to_json(g, full, full) << '\n';
    return ok;
  }
  const auto p = cycling_orbit_partition(g);
  out << "size " << g.size() << '\n';
  out << "orbits " << p.orbits.size() << '\n';
  out << "orbit_sizes " << orbit_line(p) << '\n';
  if (full) {
    for (const auto& y : g.nodes) out << y.serialize() << '\n';
  }
  return ok;
}

int cmd_conj(int n, const std::vector<std::string>& pair, const Budgets& b, std::ostream& out, std::ostream& err) {
  if (pair.size() != 2) throw UsageError("conj needs two braid words");
  const auto x = normal_form(parse_braid_word(pair[0], n));
  const auto y = normal_form(parse_braid_word(pair[1], n));
  const auto g = are_conjugate(x, y, sc_options(b, err, "conj"));
  if (!g) {
    out << "not conjugate\n";
    return ok;
  }
  out << to_string(g->to_word()) << '\n';
  return ok;
}

std::string report_line(const OuroborosReport& r) {
  std::ostringstream os;
  os << (r.kind == OuroborosReport::Kind::round ? "round" : "eccentric") << " base=" << r.base.to_string()
     << " m=" << r.m << " head_tail=";
  for (std::size_t i = 0; i < r.head_tail.size(); ++i) os << (i ? "," : "") << r.head_tail[i];
  return os.str();
}

struct TableSpec {
  std::string kind;
  std::vector<int> ns;
  int lmin = -1;
  int lmax = -1;
  int jobs = 1;
};

int cmd_table(const TableSpec& t, const Budgets& b, std::ostream& out, std::ostream& err) {
  const bool is_beta = t.kind == "s-beta";
  if (!is_beta && t.kind != "gamma") throw UsageError("table is s-beta or gamma");
  const int lmin = t.lmin >= 0 ? t.lmin : (is_beta ? 2 : 3);
  const int step = is_beta ? 1 : 2;
  if (t.lmax < lmin) throw UsageError("--lmax must be at least " + std::to_string(lmin));
  if (t.ns.empty()) throw UsageError("table needs --n");
  std::vector<int> ls;
  for (int l = lmin; l <= t.lmax; l += step) ls.push_back(l);

  struct Cell {
    int n;
    int len;
    std::string text;
  };
  std::vector<Cell> cells;
  for (int n : t.ns) {
    for (int l : ls) cells.push_back({n, l, ""});
  }
  const auto valid = [&](int n, int l) {
    if (is_beta) return n >= 5 && n % 2 == 1 && l >= 2;
    return n >= 4 && n % 2 == 0 && l >= n - 1 && (l - n + 1) % 2 == 0;
  };

  std::atomic<std::size_t> next{0};
  std::mutex mu;
  std::exception_ptr failure;
  const auto worker = [&] {
    while (true) {
      const std::size_t i = next++;
      if (i >= cells.size()) return;
      auto& c = cells[i];
      if (!valid(c.n, c.len)) {
        c.text = "--";
        continue;
      }
      try {
        const auto x = normal_form(is_beta ? beta(c.n, c.len) : gamma(c.n, c.len));
        const std::string tag = t.kind + " N=" + std::to_string(c.n) + " L=" + std::to_string(c.len);
        const auto g = sliding_circuit_set(x, sc_options(b, err, tag));
        const long size = static_cast<long>(g.size());
        if (!is_beta) {
          c.text = std::to_string(size);
        } else if (size % c.len == 0) {
          c.text = std::to_string(size / c.len);
        } else {
          c.text = std::to_string(size) + "/" + std::to_string(c.len);
        }
      } catch (...) {
        std::lock_guard lock(mu);
        if (!failure) failure = std::current_exception();
        next = cells.size();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  for (int j = 1; j < std::max(1, t.jobs); ++j) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);

  out << "N\\L";
  for (int l : ls) out << ',' << l;
  out << '\n';
  std::size_t i = 0;
  for (int n : t.ns) {
    out << n;
    for (std::size_t c = 0; c < ls.size(); ++c) out << ',' << cells[i++].text;
    out << '\n';
  }
  return ok;
}

// Reruns the independent oracles from the test suite on a small corpus.
int cmd_selftest(std::ostream& out, std::ostream& err) {
  std::mt19937 rng(2024);
  int failures = 0;
  const auto fail = [&](const std::string& what) {
    ++failures;
    err << "selftest: " << what << '\n';
  };

  long words = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = 3 + trial % 5;
    const auto w = testing::random_word(rng, n, 1 + trial % 30);
    const auto x = normal_form(w);
    if (!testing::same_braid(w, x.to_word())) fail("normal form changes the braid: " + to_string(w));
    if (normal_form(x.to_word()) != x) fail("normal form not idempotent: " + to_string(w));
    if (!multiply(x, inverse(x)).is_trivial()) fail("inverse does not cancel: " + to_string(w));
    ++words;
  }
  out << "normal forms: " << words << " words ok\n";

  std::vector<GapDiagram> diagrams;
  for (int n = 4; n <= 6; ++n) {
    for (int trial = 0; trial < 40; ++trial) {
      const int p = 1 + trial % (n - 2);
      auto d = GapDiagram::from_round(n, {p, p + 1});
      for (const auto& t : testing::random_word(rng, n, 1 + trial % 5).letters) d = apply_generator(d, t.value);
      diagrams.push_back(d);
    }
  }
  int eps = 0;
  {
    const auto d0 = GapDiagram::from_round(3, {2, 3});
    const auto w0 = testing::free_word(d0.gaps());
    const auto image = testing::free_class(apply_generator(d0, 1));
    if (image == testing::canonical_class(testing::artin_substitute(w0, 1))) eps = 1;
    if (image == testing::canonical_class(testing::artin_substitute(w0, -1))) eps = -1;
  }
  if (eps == 0) fail("curve action matches neither Artin chirality");
  long actions = 0;
  long pieces = 0;
  for (const auto& d : diagrams) {
    const auto w = testing::free_word(d.gaps());
    for (int j = 1; j < d.n(); ++j) {
      for (int s : {j, -j}) {
        if (testing::free_class(apply_generator(d, s)) !=
            testing::canonical_class(testing::artin_substitute(w, eps * s))) {
          fail("curve action disagrees with the free group on " + d.serialize());
        }
        ++actions;
      }
    }
    if (d.gaps().size() > 10) continue;
    for (int p = 1; p < d.n(); ++p) {
      const RoundCurve c{p, p + 1};
      if (intersect_disks_with_round(d, c) != testing::geometric_intersection(d, c)) {
        fail("disk intersection disagrees with the grid oracle on " + d.serialize() + " and " + c.to_string());
      }
      ++pieces;
    }
  }
  out << "curve actions: " << actions << " ok\n";
  out << "disk intersections: " << pieces << " ok\n";

  ScOptions checked;
  checked.verify = true;
  checked.verify_restarts = -1;
  for (const auto& x : {normal_form(beta(5, 3)), normal_form(gamma(4, 5)), normal_form(delta5(3))}) {
    sliding_circuit_set(x, checked);  // throws VerificationFailure
  }
  out << "sliding circuit self-checks: 3 sets ok\n";
  return failures == 0 ? ok : verification;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Garside normal forms, sliding circuit sets and ouroboros detection for braid groups", "braidsc"};
  app.require_subcommand(1);

  Input in;
  Budgets budgets;

  auto* nf = app.add_subcommand("nf", "Left normal form");
  add_input(nf, in);
  bool nf_word = false;
  nf->add_flag("--as-word", nf_word, "Print the normal form as a braid word");

  auto* rigid = app.add_subcommand("rigid", "Rigidity test");
  add_input(rigid, in);

  auto* sc = app.add_subcommand("sc", "Sliding circuit set: size and cycling orbits");
  add_input(sc, in);
  add_budgets(sc, budgets);
  bool full = false;
  bool json = false;
  std::string dot;
  sc->add_flag("--full", full, "List the elements");
  sc->add_flag("--json", json, "JSON output");
  sc->add_option("--dot", dot, "Write the conjugation graph as DOT");

  auto* conj = app.add_subcommand("conj", "Conjugacy decision with a conjugator");
  int conj_n = 0;
  std::vector<std::string> pair;
  conj->add_option("--n", conj_n, "Strand count")->required();
  conj->add_option("words", pair, "Two braid words")->expected(2)->required();
  add_budgets(conj, budgets);

  auto* family = app.add_subcommand("family", "Print a family member");
  std::string family_name;
  bool family_nf = false;
  family->add_option("name", family_name, "beta|gamma|gamma-k|gamma5|delta5|delta-abc|beta7-witness")->required();
  add_family_options(family, in);
  family->add_flag("--nf", family_nf, "Print the normal form instead of the word");

  auto* ouro = app.add_subcommand("ouroboroi", "Round and eccentric ouroboros reports");
  add_input(ouro, in);
  bool ouro_json = false;
  bool strict = false;
  ouro->add_flag("--json", ouro_json, "JSON output");
  ouro->add_flag("--strict-bound", strict, "Allow at most m-2 shared punctures at a round head-tail");

  auto* table = app.add_subcommand("table", "CSV tables: rows N, columns L");
  TableSpec spec;
  table->add_option("kind", spec.kind, "s-beta|gamma")->required();
  table->add_option("--n", spec.ns, "Strand counts (repeatable)")->required();
  table->add_option("--lmin", spec.lmin, "Smallest L");
  table->add_option("--lmax", spec.lmax, "Largest L")->required();
  table->add_option("--jobs", spec.jobs, "Worker threads")->check(CLI::PositiveNumber);
  add_budgets(table, budgets);

  auto* selftest = app.add_subcommand("selftest", "Cross-check against the independent oracles");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? ok : usage;
  }

  try {
    if (nf->parsed()) {
      const auto x = input_braid(in);
      out << (nf_word ? to_string(x.to_word()) : x.serialize()) << '\n';
      return ok;
    }
    if (rigid->parsed()) {
      out << (is_rigid(input_braid(in)) ? "rigid" : "not rigid") << '\n';
      return ok;
    }
    if (sc->parsed()) return cmd_sc(in, budgets, full, json, dot, out, err);
    if (conj->parsed()) return cmd_conj(conj_n, pair, budgets, out, err);
    if (family->parsed()) {
      const auto w = family_word(family_name, in);
      out << (family_nf ? normal_form(w).serialize() : to_string(w)) << '\n';
      return ok;
    }
    if (ouro->parsed()) {
      OuroborosOptions o;
      if (strict) o.shared_deficit = 2;
      const auto r = find_ouroboroi(reduce_center(input_braid(in)), o);
      if (ouro_json) {
        out << ouroboroi_to_json(r) << '\n';
      } else {
        for (const auto& rep : r) out << report_line(rep) << '\n';
        out << "count " << r.size() << '\n';
      }
      return ok;
    }
    if (table->parsed()) return cmd_table(spec, budgets, out, err);
    if (selftest->parsed()) return cmd_selftest(out, err);
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return budget;
  } catch (const VerificationFailure& e) {
    err << "verification failed: " << e.what() << '\n';
    return verification;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return usage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return verification;
  }
  return usage;
}

}  // namespace braidsc::cli
