#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "braidsc/simple_braid.hpp"

namespace braidsc {

/// One letter of a braid word: sigma_|value|^sign(value), or Delta^value.
struct BraidToken {
  enum class Kind { generator, delta };
  Kind kind = Kind::generator;
  int value = 0;

  static BraidToken generator(int j) { return {Kind::generator, j}; }
  static BraidToken delta_power(int e) { return {Kind::delta, e}; }

  friend bool operator==(const BraidToken&, const BraidToken&) = default;
};

struct BraidWord {
  int n = 0;
  std::vector<BraidToken> letters;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

/// Raised by parse_braid_word; offset is the byte offset of the bad token.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::invalid_argument(what + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Tokens separated by whitespace and/or '.'; a token is a nonzero signed
/// integer, 'D', or 'D^' followed by a signed integer.
BraidWord parse_braid_word(std::string_view text, int n);

/// Renders a word in the same grammar parse_braid_word accepts.
std::string to_string(const BraidWord& w);

/// Concatenation helpers used by the family generators.
BraidWord& append_positive(BraidWord& w, std::initializer_list<int> generators);
BraidWord concat(const BraidWord& a, const BraidWord& b);

/// Left-weighted normal form Delta^inf * f_1 ... f_l with every f_i a proper
/// simple braid (neither identity nor Delta).
class CanonicalBraid {
 public:
  CanonicalBraid() = default;

  static CanonicalBraid identity(int n);
  static CanonicalBraid delta_power(int n, long k);
  static CanonicalBraid from_simple(const SimpleBraid& s);

  /// Normalizes Delta^inf * simples (any simple braids, in any order).
  static CanonicalBraid from_factors(int n, long inf, std::vector<SimpleBraid> simples);

  /// No normalization: the caller guarantees the factors are proper and
  /// pairwise left-weighted.
  static CanonicalBraid from_factors_unchecked(int n, long inf, std::vector<SimpleBraid> factors);

  /// Inverse of serialize(). Throws std::invalid_argument on malformed text or
  /// on factors that are not already in normal form.
  static CanonicalBraid parse(std::string_view text);

  int n() const { return n_; }
  long inf() const { return inf_; }
  long sup() const { return inf_ + static_cast<long>(factors_.size()); }
  int canonical_length() const { return static_cast<int>(factors_.size()); }
  const std::vector<SimpleBraid>& factors() const { return factors_; }

  bool is_trivial() const { return inf_ == 0 && factors_.empty(); }

  /// "n=<n> inf=<k> | [..] | [..]": factors as 1-based one-line images.
  std::string serialize() const;

  /// Word "D^k . w(f_1) . ... . w(f_l)" in the standard grammar.
  BraidWord to_word() const;

  friend bool operator==(const CanonicalBraid&, const CanonicalBraid&) = default;

 private:
  int n_ = 0;
  long inf_ = 0;
  std::vector<SimpleBraid> factors_;
};

CanonicalBraid normal_form(const BraidWord& w);

CanonicalBraid multiply(const CanonicalBraid& x, const CanonicalBraid& y);
CanonicalBraid inverse(const CanonicalBraid& x);
CanonicalBraid power(const CanonicalBraid& x, int p);

/// g^-1 * x * g.
CanonicalBraid conjugate(const CanonicalBraid& x, const CanonicalBraid& g);

/// s^-1 * x * s for a simple s; the hot path of circuit enumeration.
CanonicalBraid conjugate_by_simple(const CanonicalBraid& x, const SimpleBraid& s);

/// Signed crossing count; a conjugacy invariant.
long exponent_sum(const CanonicalBraid& x);

/// Multiplies by a power of Delta^2 so that inf lands in {0, 1}.
CanonicalBraid reduce_center(const CanonicalBraid& x);

struct Conjugation {
  CanonicalBraid result;
  CanonicalBraid conjugator;
};

enum class CycleDirection { forward, backward };

/// iota(x) = tau^-inf(x_1). Identity when l = 0.
SimpleBraid initial_factor(const CanonicalBraid& x);
/// phi(x) = x_l. Identity when l = 0.
SimpleBraid final_factor(const CanonicalBraid& x);

/// Forward: conjugate by iota(x) (cycling). Backward: conjugate by x_l^-1
/// (decycling). Returns x with a trivial conjugator when l = 0.
Conjugation cycle(const CanonicalBraid& x, CycleDirection direction);

/// iota(x) meet right_complement(phi(x)); identity iff x is rigid or l = 0.
SimpleBraid preferred_prefix(const CanonicalBraid& x);

/// Conjugation by the preferred prefix.
Conjugation cyclic_sliding(const CanonicalBraid& x);

/// (x_l, tau^{inf mod 2}(x_1)) left-weighted; true when l = 0.
bool is_rigid(const CanonicalBraid& x);

}  // namespace braidsc

template <>
struct std::hash<braidsc::CanonicalBraid> {
  std::size_t operator()(const braidsc::CanonicalBraid& x) const noexcept {
    std::size_t h = static_cast<std::size_t>(x.n()) * 1000003u ^ static_cast<std::size_t>(x.inf());
    for (const auto& f : x.factors()) h = h * 1099511628211ull ^ f.hash();
    return h;
  }
};
