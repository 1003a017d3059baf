#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "braidsc/braid.hpp"

namespace braidsc {

/// A resource guard tripped during enumeration. The enumeration is abandoned,
/// never truncated.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A self-check of an enumerated graph failed.
class VerificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ScOptions {
  enum class Frontier { exhaustive, reduced };

  Frontier frontier = Frontier::exhaustive;
  bool record_edges = true;
  long max_conjugations = 10'000'000;
  long max_nodes = 2'000'000;
  double max_seconds = 0;  // 0: no wall-clock limit

  /// Checks closure under cycling, decycling and tau, witness soundness,
  /// membership-test agreement, and strong connectivity of the edge graph.
  bool verify = false;
  /// Literal BFS restarts from this many nodes (spread evenly); -1 for all.
  int verify_restarts = 0;
  /// Called with (nodes found, conjugations) at most once per progress_period
  /// seconds during enumeration.
  std::function<void(std::size_t, long)> on_progress;
  double progress_period = 1.0;
};

struct ScEdge {
  int from = 0;
  int to = 0;
  SimpleBraid label;
};

/// The sliding circuit set of a braid as a conjugation graph. Nodes are in BFS
/// order, each BFS level sorted by serialization; node 0 is the root.
struct ScGraph {
  int n = 0;
  std::vector<CanonicalBraid> nodes;
  /// witnesses[i] conjugates nodes[0] to nodes[i].
  std::vector<CanonicalBraid> witnesses;
  std::vector<ScEdge> edges;
  /// Conjugates the input braid to nodes[0].
  CanonicalBraid root_conjugator;
  long conjugations = 0;
  bool root_rigid = false;

  std::optional<int> find(const CanonicalBraid& y) const;
  std::size_t size() const { return nodes.size(); }

  std::unordered_map<std::string, int> index;
};

/// Iterates cyclic sliding until an element repeats; returns an element of the
/// terminal circuit and g with conjugate(x, g) = rep.
Conjugation circuit_representative(const CanonicalBraid& x);

/// True iff iterated cyclic sliding returns to y.
bool in_sliding_circuit(const CanonicalBraid& y);

/// Nontrivial simple braids s with y^s in the same sliding circuit set,
/// restricted to the prefix-minimal ones when opts.frontier is reduced.
std::vector<SimpleBraid> frontier(const CanonicalBraid& y, const ScOptions& opts = {});

ScGraph sliding_circuit_set(const CanonicalBraid& x, const ScOptions& opts = {});

struct OrbitPartition {
  /// Node indices, each orbit listed in cycling order from its least index.
  std::vector<std::vector<int>> orbits;

  std::vector<int> sizes() const;
};

/// Orbits of forward cycling on the nodes. Throws VerificationFailure if
/// cycling leaves the node set or does not act as a permutation.
OrbitPartition cycling_orbit_partition(const ScGraph& g);

/// A conjugator g with conjugate(x, g) = y, or nullopt if none exists.
std::optional<CanonicalBraid> are_conjugate(const CanonicalBraid& x, const CanonicalBraid& y,
                                            const ScOptions& opts = {});

/// JSON with n, root, size, orbit_count, orbit_sizes and, when requested,
/// elements and edges.
std::string sc_to_json(const ScGraph& g, bool with_elements, bool with_edges);
std::string sc_to_dot(const ScGraph& g);

}  // namespace braidsc
