#pragma once

#include <optional>
#include <string>
#include <vector>

#include "braidsc/simple_braid.hpp"

namespace braidsc {

/// A circle around the consecutive punctures p..q.
struct RoundCurve {
  int p = 1;
  int q = 2;

  std::string to_string() const;
  friend bool operator==(const RoundCurve&, const RoundCurve&) = default;
};

/// Throws std::invalid_argument unless 1 <= p < q <= n and q - p + 1 < n.
void check_round(const RoundCurve& c, int n);

/// A factor of a canonical braid as seen by the curve action.
struct CurveFactor {
  enum class Kind { simple, inverse_simple, delta_power };
  Kind kind = Kind::simple;
  SimpleBraid simple;
  long exponent = 0;
  int n = 0;

  static CurveFactor of(const SimpleBraid& s) { return {Kind::simple, s, 0, s.n()}; }
  static CurveFactor inverse_of(const SimpleBraid& s) { return {Kind::inverse_simple, s, 0, s.n()}; }
  static CurveFactor delta(int n, long k) { return {Kind::delta_power, SimpleBraid::identity(n), k, n}; }
};

/// Image of a round curve under a factor, if round. The puncture at position i
/// moves to position pi(i).
std::optional<RoundCurve> round_image(const RoundCurve& c, const CurveFactor& f);

struct Transport {
  std::vector<RoundCurve> curves;       // c and each successive image
  std::optional<std::size_t> failed_at;  // first factor with a non-round image
};

Transport transport_round(const RoundCurve& c, const std::vector<CurveFactor>& chain);

/// A simple closed curve in the n-punctured disk, in minimal position with the
/// real axis through the punctures, recorded as the cyclic sequence of gaps it
/// crosses (gap g lies between punctures g and g+1; 0 and n are outer). The arc
/// leaving crossing k is in the upper half plane iff k is even. Stored in a
/// canonical rotation, so equality is equality of isotopy classes.
class GapDiagram {
 public:
  GapDiagram() = default;

  static GapDiagram from_round(int n, const RoundCurve& c);
  /// Reduces the word; throws std::invalid_argument on odd length, bad gaps,
  /// or a word that reduces to nothing.
  static GapDiagram from_gaps(int n, std::vector<int> gaps);

  int n() const { return n_; }
  const std::vector<int>& gaps() const { return gaps_; }

  std::optional<RoundCurve> as_round() const;
  std::vector<int> punctures_inside() const;

  /// "n=<n> gaps=[g0 g1 ...]".
  std::string serialize() const;

  friend bool operator==(const GapDiagram&, const GapDiagram&) = default;

 private:
  int n_ = 0;
  std::vector<int> gaps_;
};

/// Image under sigma_|j|^sign(j).
GapDiagram apply_generator(const GapDiagram& d, int j);
GapDiagram apply_simple(const GapDiagram& d, const SimpleBraid& s);
GapDiagram apply_inverse_simple(const GapDiagram& d, const SimpleBraid& s);
GapDiagram apply_factor(const GapDiagram& d, const CurveFactor& f);

/// Components of the intersection of the disks bounded by d and by c, each
/// given by the punctures it contains (possibly none), with both curves in
/// minimal position. Sorted; empty when the disks are disjoint.
std::vector<std::vector<int>> intersect_disks_with_round(const GapDiagram& d, const RoundCurve& c);

/// Positions of the crossings of d along the axis: rank[k] orders crossing k
/// among all crossings (gap-major, left to right within a gap).
std::vector<int> axis_order(const GapDiagram& d);

}  // namespace braidsc
