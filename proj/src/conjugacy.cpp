#include "braidsc/conjugacy.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

namespace braidsc {

namespace {

using Clock = std::chrono::steady_clock;

// Membership of candidates, memoized by serialization. The fast path applies
// when the root is rigid: SC is then exactly the rigid conjugates with the
// root's inf and sup.
class Membership {
 public:
  Membership(bool rigid_root, bool cross_check) : rigid_root_(rigid_root), cross_check_(cross_check) {}

  bool test(const CanonicalBraid& z, const std::string& key) {
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    bool result = false;
    if (rigid_root_) {
      result = is_rigid(z);
      if (cross_check_ && result != in_sliding_circuit(z)) {
        throw VerificationFailure("rigidity and sliding-periodicity disagree on " + key);
      }
    } else {
      result = in_sliding_circuit(z);
    }
    cache_.emplace(key, result);
    return result;
  }

 private:
  bool rigid_root_;
  bool cross_check_;
  std::unordered_map<std::string, bool> cache_;
};

class Budget {
 public:
  explicit Budget(const ScOptions& opts) : opts_(opts), start_(Clock::now()), last_report_(start_) {}

  void conjugation(long& count) {
    ++count;
    if (opts_.max_conjugations > 0 && count > opts_.max_conjugations) {
      throw BudgetExceeded("conjugation budget of " + std::to_string(opts_.max_conjugations) +
                           " exceeded");
    }
    if ((count & 0xfff) != 0) return;
    const auto now = Clock::now();
    if (opts_.max_seconds > 0) {
      const std::chrono::duration<double> elapsed = now - start_;
      if (elapsed.count() > opts_.max_seconds) {
        throw BudgetExceeded("time budget of " + std::to_string(opts_.max_seconds) +
                             " s exceeded");
      }
    }
    if (opts_.on_progress) {
      const std::chrono::duration<double> since = now - last_report_;
      if (since.count() >= opts_.progress_period) {
        last_report_ = now;
        opts_.on_progress(nodes_, count);
      }
    }
  }

  void nodes(std::size_t count) {
    nodes_ = count;
    if (opts_.max_nodes > 0 && static_cast<long>(count) > opts_.max_nodes) {
      throw BudgetExceeded("node budget of " + std::to_string(opts_.max_nodes) + " exceeded");
    }
  }

 private:
  const ScOptions& opts_;
  Clock::time_point start_;
  Clock::time_point last_report_;
  std::size_t nodes_ = 0;
};

std::vector<SimpleBraid> proper_simples(int n) {
  auto all = all_simple_braids(n);
  all.erase(std::remove_if(all.begin(), all.end(), [](const SimpleBraid& s) { return s.is_identity(); }),
            all.end());
  return all;
}

struct Candidate {
  SimpleBraid s;
  CanonicalBraid z;
  std::string key;
};

// Every nontrivial simple s with y^s in SC (or only the prefix-minimal ones).
std::vector<Candidate> expand(const CanonicalBraid& y, const std::vector<SimpleBraid>& simples,
                              const ScGraph& g, Membership& member, Budget& budget, long& count,
                              ScOptions::Frontier mode) {
  std::vector<Candidate> out;
  for (const auto& s : simples) {
    budget.conjugation(count);
    CanonicalBraid z = conjugate_by_simple(y, s);
    if (z.inf() != y.inf() || z.sup() != y.sup()) continue;
    std::string key = z.serialize();
    if (!g.index.contains(key) && !member.test(z, key)) continue;
    out.push_back({s, std::move(z), std::move(key)});
  }
  if (mode == ScOptions::Frontier::reduced) {
    std::vector<Candidate> minimal;
    for (const auto& c : out) {
      const bool dominated = std::any_of(out.begin(), out.end(), [&](const Candidate& d) {
        return d.s != c.s && is_prefix(d.s, c.s);
      });
      if (!dominated) minimal.push_back(c);
    }
    out = std::move(minimal);
  }
  return out;
}

ScGraph bfs(const CanonicalBraid& root, const ScOptions& opts) {
  ScGraph g;
  g.n = root.n();
  g.root_rigid = is_rigid(root);
  g.root_conjugator = CanonicalBraid::identity(root.n());
  g.nodes.push_back(root);
  g.witnesses.push_back(CanonicalBraid::identity(root.n()));
  g.index.emplace(root.serialize(), 0);

  const auto simples = proper_simples(root.n());
  Membership member(g.root_rigid, opts.verify);
  Budget budget(opts);

  std::vector<int> level{0};
  while (!level.empty()) {
    struct Pending {
      int from;
      std::string key;
      SimpleBraid s;
    };
    std::vector<Pending> pending;
    std::map<std::string, std::pair<CanonicalBraid, CanonicalBraid>> fresh;  // key -> (node, witness)
    for (int yi : level) {
      const CanonicalBraid y = g.nodes[static_cast<std::size_t>(yi)];
      for (auto& c : expand(y, simples, g, member, budget, g.conjugations, opts.frontier)) {
        if (!g.index.contains(c.key) && !fresh.contains(c.key)) {
          CanonicalBraid w = multiply(g.witnesses[static_cast<std::size_t>(yi)],
                                      CanonicalBraid::from_simple(c.s));
          fresh.emplace(c.key, std::make_pair(std::move(c.z), std::move(w)));
        }
        if (opts.record_edges) pending.push_back({yi, std::move(c.key), c.s});
      }
    }
    level.clear();
    for (auto& [key, nw] : fresh) {
      const int id = static_cast<int>(g.nodes.size());
      g.index.emplace(key, id);
      g.nodes.push_back(std::move(nw.first));
      g.witnesses.push_back(std::move(nw.second));
      level.push_back(id);
    }
    budget.nodes(g.nodes.size());
    for (const auto& p : pending) g.edges.push_back({p.from, g.index.at(p.key), p.s});
  }
  return g;
}

std::vector<bool> reach(int count, const std::vector<std::vector<int>>& adj) {
  std::vector<bool> seen(static_cast<std::size_t>(count), false);
  std::vector<int> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : adj[static_cast<std::size_t>(v)]) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = true;
        stack.push_back(w);
      }
    }
  }
  return seen;
}

void verify(const ScGraph& g, const ScOptions& opts) {
  const auto need = [&](const CanonicalBraid& y, const char* what, int from) {
    if (!g.find(y)) {
      throw VerificationFailure(std::string(what) + " of node " + std::to_string(from) +
                                " leaves the set: " + y.serialize());
    }
  };
  const SimpleBraid delta = SimpleBraid::delta(g.n);
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    const auto& y = g.nodes[i];
    const int id = static_cast<int>(i);
    if (y.inf() != g.nodes[0].inf() || y.sup() != g.nodes[0].sup()) {
      throw VerificationFailure("node " + std::to_string(id) + " has a different inf/sup");
    }
    need(cycle(y, CycleDirection::forward).result, "cycling", id);
    need(cycle(y, CycleDirection::backward).result, "decycling", id);
    need(conjugate_by_simple(y, delta), "conjugation by Delta", id);
    if (conjugate(g.nodes[0], g.witnesses[i]) != y) {
      throw VerificationFailure("witness of node " + std::to_string(id) + " is wrong");
    }
  }

  if (opts.record_edges && g.nodes.size() > 1) {
    std::vector<std::vector<int>> fwd(g.nodes.size());
    std::vector<std::vector<int>> bwd(g.nodes.size());
    for (const auto& e : g.edges) {
      fwd[static_cast<std::size_t>(e.from)].push_back(e.to);
      bwd[static_cast<std::size_t>(e.to)].push_back(e.from);
    }
    const int count = static_cast<int>(g.nodes.size());
    const auto f = reach(count, fwd);
    const auto b = reach(count, bwd);
    for (int i = 0; i < count; ++i) {
      if (!f[static_cast<std::size_t>(i)] || !b[static_cast<std::size_t>(i)]) {
        throw VerificationFailure("conjugation graph is not strongly connected at node " +
                                  std::to_string(i));
      }
    }
  }

  if (opts.verify_restarts != 0) {
    const std::size_t total = g.nodes.size();
    const std::size_t want = opts.verify_restarts < 0
                                 ? total
                                 : std::min(total, static_cast<std::size_t>(opts.verify_restarts));
    ScOptions inner = opts;
    inner.verify = false;
    inner.verify_restarts = 0;
    inner.record_edges = false;
    for (std::size_t k = 0; k < want; ++k) {
      const std::size_t i = want == total ? k : k * total / want;
      const ScGraph other = bfs(g.nodes[i], inner);
      bool same = other.nodes.size() == total;
      for (const auto& [key, _] : other.index) same = same && g.index.contains(key);
      if (!same) {
        throw VerificationFailure("restart from node " + std::to_string(i) + " finds " +
                                  std::to_string(other.nodes.size()) + " nodes instead of " +
                                  std::to_string(total));
      }
    }
  }
}

}  // namespace

std::optional<int> ScGraph::find(const CanonicalBraid& y) const {
  if (auto it = index.find(y.serialize()); it != index.end()) return it->second;
  return std::nullopt;
}

Conjugation circuit_representative(const CanonicalBraid& x) {
  std::unordered_set<std::string> seen;
  CanonicalBraid y = x;
  CanonicalBraid g = CanonicalBraid::identity(x.n());
  while (seen.insert(y.serialize()).second) {
    auto [next, step] = cyclic_sliding(y);
    g = multiply(g, step);
    y = std::move(next);
  }
  return {y, g};
}

bool in_sliding_circuit(const CanonicalBraid& y) {
  std::unordered_set<std::string> seen;
  CanonicalBraid z = cyclic_sliding(y).result;
  while (z != y) {
    if (!seen.insert(z.serialize()).second) return false;
    z = cyclic_sliding(z).result;
  }
  return true;
}

std::vector<SimpleBraid> frontier(const CanonicalBraid& y, const ScOptions& opts) {
  ScGraph empty;
  Membership member(is_rigid(y), false);
  ScOptions unlimited = opts;
  unlimited.max_seconds = 0;
  Budget budget(unlimited);
  long count = 0;
  std::vector<SimpleBraid> out;
  for (const auto& c : expand(y, proper_simples(y.n()), empty, member, budget, count, opts.frontier)) {
    out.push_back(c.s);
  }
  return out;
}

ScGraph sliding_circuit_set(const CanonicalBraid& x, const ScOptions& opts) {
  auto [rep, conj] = circuit_representative(x);
  ScGraph g = bfs(rep, opts);
  g.root_conjugator = std::move(conj);
  if (opts.verify) verify(g, opts);
  return g;
}

std::vector<int> OrbitPartition::sizes() const {
  std::vector<int> out;
  for (const auto& o : orbits) out.push_back(static_cast<int>(o.size()));
  return out;
}

OrbitPartition cycling_orbit_partition(const ScGraph& g) {
  OrbitPartition p;
  std::vector<bool> assigned(g.nodes.size(), false);
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    if (assigned[i]) continue;
    std::vector<int> orbit;
    int j = static_cast<int>(i);
    while (true) {
      orbit.push_back(j);
      assigned[static_cast<std::size_t>(j)] = true;
      const auto next = g.find(cycle(g.nodes[static_cast<std::size_t>(j)], CycleDirection::forward).result);
      if (!next) throw VerificationFailure("cycling leaves the set at node " + std::to_string(j));
      if (*next == static_cast<int>(i)) break;
      if (assigned[static_cast<std::size_t>(*next)]) {
        throw VerificationFailure("cycling is not a permutation at node " + std::to_string(j));
      }
      j = *next;
    }
    p.orbits.push_back(std::move(orbit));
  }
  return p;
}

std::optional<CanonicalBraid> are_conjugate(const CanonicalBraid& x, const CanonicalBraid& y,
                                            const ScOptions& opts) {
  if (x.n() != y.n()) throw std::invalid_argument("are_conjugate: strand counts differ");
  if (exponent_sum(x) != exponent_sum(y)) return std::nullopt;
  const auto [ry, gy] = circuit_representative(y);
  const auto [rx, gx] = circuit_representative(x);
  if (rx.inf() != ry.inf() || rx.sup() != ry.sup()) return std::nullopt;
  ScOptions inner = opts;
  inner.record_edges = false;
  const ScGraph g = bfs(rx, inner);
  const auto node = g.find(ry);
  if (!node) return std::nullopt;
  CanonicalBraid c = multiply(multiply(gx, g.witnesses[static_cast<std::size_t>(*node)]), inverse(gy));
  if (conjugate(x, c) != y) throw VerificationFailure("assembled conjugator does not conjugate");
  return c;
}

std::string sc_to_json(const ScGraph& g, bool with_elements, bool with_edges) {
  const auto orbits = cycling_orbit_partition(g);
  nlohmann::json j;
  j["n"] = g.n;
  j["root"] = g.nodes.front().serialize();
  j["size"] = g.nodes.size();
  j["orbit_count"] = orbits.orbits.size();
  j["orbit_sizes"] = orbits.sizes();
  if (with_elements) {
    auto& el = j["elements"] = nlohmann::json::array();
    for (const auto& y : g.nodes) el.push_back(y.serialize());
  }
  if (with_edges) {
    auto& ed = j["edges"] = nlohmann::json::array();
    for (const auto& e : g.edges) {
      ed.push_back({{"from", e.from}, {"to", e.to},
                    {"conjugator", CanonicalBraid::from_simple(e.label).serialize()}});
    }
  }
  return j.dump(2);
}

std::string sc_to_dot(const ScGraph& g) {
  std::ostringstream os;
  os << "digraph sc {\n";
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    os << "  n" << i << " [label=\"" << g.nodes[i].serialize() << "\"];\n";
  }
  for (const auto& e : g.edges) {
    os << "  n" << e.from << " -> n" << e.to << " [label=\"" << e.label.to_string() << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace braidsc
