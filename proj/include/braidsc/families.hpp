#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "braidsc/braid.hpp"

namespace braidsc {

/// A decreasing run followed by an increasing run of the labels 1..n, stored
/// as one side bit per label v >= 2: true when v sits left of all smaller
/// labels.
class DownUpSequence {
 public:
  DownUpSequence() = default;

  /// Throws std::invalid_argument unless order is a down-up arrangement of 1..n.
  static DownUpSequence from_order(const std::vector<int>& order);

  int n() const { return static_cast<int>(left_.size()); }
  bool left(int label) const { return left_[static_cast<std::size_t>(label - 1)]; }
  std::vector<int> order() const;

  /// Flips the side of every label in flip; label 1 has no side and is ignored.
  DownUpSequence phi(const std::set<int>& flip) const;

  friend bool operator==(const DownUpSequence&, const DownUpSequence&) = default;

 private:
  std::vector<bool> left_;  // left_[0] unused
};

/// Connects equal labels of consecutive rows; with swap (i, i-1) the targets
/// of labels i and i-1 are exchanged.
SimpleBraid transition_braid(const DownUpSequence& top, const DownUpSequence& bottom,
                             std::optional<std::pair<int, int>> swap = std::nullopt);

struct GammaSpec {
  int n = 4;
  std::vector<int> k;  // k_1 .. k_{n-2}
};

/// One step of the gamma construction.
struct GammaRow {
  DownUpSequence row;
  std::optional<std::pair<int, int>> swap;  // carried by the transition into this row
};

/// The full row sequence, starting with the initial down-up sequence.
std::vector<GammaRow> gamma_rows(const GammaSpec& spec);

BraidWord beta(int n, int len);
BraidWord gamma(const GammaSpec& spec);
/// gamma with k = (K, 0, ..., 0) where len = n - 1 + 2K.
BraidWord gamma(int n, int len);
BraidWord gamma5(int len);
BraidWord delta5(int len);
BraidWord delta_abc(int a, int b, int c);
BraidWord beta7_witness(int a, int b, int c);

/// Square of the half-twist on strands a..b.
CanonicalBraid full_twist(int n, int a, int b);

enum class Family { beta, gamma, delta5 };

/// Size of the sliding circuit set predicted for the family member.
long expected_sc_size(Family family, int n, int len);

std::optional<Family> parse_family(const std::string& name);

}  // namespace braidsc
