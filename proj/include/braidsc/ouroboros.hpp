#pragma once

#include <string>
#include <vector>

#include "braidsc/braid.hpp"
#include "braidsc/curves.hpp"

namespace braidsc {

struct OuroborosReport {
  enum class Kind { round, eccentric };
  Kind kind = Kind::round;
  RoundCurve base;
  int m = 0;
  // 1-based indices into the non-Delta factors: {i} for a round ouroboros,
  // {i, i+1} (or {l, 1}) for an eccentric one.
  std::vector<int> head_tail;

  friend bool operator==(const OuroborosReport&, const OuroborosReport&) = default;
};

struct OuroborosOptions {
  // A round head-tail may leave at most m - shared_deficit punctures of the
  // base disk in place. 1 lets the tube shift by a single strand; 2 is the
  // stricter bound.
  int shared_deficit = 1;
};

/// The curve-action chain of x in its cyclic order starting after factor
/// `after` (1-based) and stopping before factor `before`, with Delta^inf in
/// its place between x_l and x_1.
std::vector<CurveFactor> cyclic_chain(const CanonicalBraid& x, int after, int before);

/// Both throw std::invalid_argument unless inf(x) is 0 or 1 (see reduce_center).
std::vector<OuroborosReport> find_round_ouroboroi(const CanonicalBraid& x, const OuroborosOptions& opts = {});
std::vector<OuroborosReport> find_eccentric_ouroboroi(const CanonicalBraid& x);

/// Round then eccentric, each sorted by head-tail and base.
std::vector<OuroborosReport> find_ouroboroi(const CanonicalBraid& x, const OuroborosOptions& opts = {});

/// JSON array of {kind, base: [p, q], m, head_tail}.
std::string ouroboroi_to_json(const std::vector<OuroborosReport>& reports);

}  // namespace braidsc
