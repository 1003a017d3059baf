#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace braidsc {

inline constexpr int kMaxStrands = 16;

/// Bit i-1 set for atom sigma_i; i in 1..n-1.
using AtomSet = std::uint32_t;

/// A positive permutation braid on n strands, stored as the permutation it
/// induces: the strand starting at position i ends at position image(i).
///
/// Products are read left to right, so the permutation of a*b is the
/// permutation of b applied after the permutation of a.
class SimpleBraid {
 public:
  SimpleBraid() = default;

  static SimpleBraid identity(int n);
  static SimpleBraid delta(int n);
  static SimpleBraid atom(int n, int i);

  /// 1-based one-line images. Throws std::invalid_argument unless a bijection.
  static SimpleBraid from_images(std::span<const int> images);

  /// Positive word in generators 1..n-1. Throws std::invalid_argument if two
  /// strands cross twice (the word is not a permutation braid).
  static SimpleBraid from_word(int n, std::span<const int> generators);

  int n() const { return n_; }

  /// 0-based image of 0-based position i.
  int operator[](int i) const { return img_[static_cast<std::size_t>(i)]; }

  /// 1-based one-line form.
  std::vector<int> images() const;

  bool is_identity() const;
  bool is_delta() const;

  /// Number of crossings.
  int length() const;

  /// Atoms that are prefixes: {i : pi(i) > pi(i+1)}.
  AtomSet starting_set() const;
  /// Atoms that are suffixes: {i : pi^-1(i) > pi^-1(i+1)}.
  AtomSet finishing_set() const;

  /// A reduced positive word, greedily taking the lowest starting atom.
  std::vector<int> word() const;

  SimpleBraid inverse_permutation() const;

  std::string to_string() const;

  std::size_t hash() const;

  friend auto operator<=>(const SimpleBraid&, const SimpleBraid&) = default;
  friend bool operator==(const SimpleBraid&, const SimpleBraid&) = default;

 private:
  friend SimpleBraid compose_unchecked(const SimpleBraid&, const SimpleBraid&);
  friend SimpleBraid left_gcd(const SimpleBraid&, const SimpleBraid&);
  friend SimpleBraid right_complement(const SimpleBraid&);
  friend SimpleBraid left_complement(const SimpleBraid&);
  friend SimpleBraid tau(const SimpleBraid&);
  friend SimpleBraid prefix_quotient(const SimpleBraid&, const SimpleBraid&);

  std::uint8_t n_ = 0;
  std::array<std::uint8_t, kMaxStrands> img_{};
};

/// Permutation product a*b. Only a simple braid when the crossing counts add.
SimpleBraid compose_unchecked(const SimpleBraid& a, const SimpleBraid& b);

/// Meet in prefix order: the largest simple braid that left-divides both.
SimpleBraid left_gcd(const SimpleBraid& a, const SimpleBraid& b);

/// The simple braid c with a*c = Delta.
SimpleBraid right_complement(const SimpleBraid& a);

/// The simple braid c with c*a = Delta.
SimpleBraid left_complement(const SimpleBraid& a);

/// Conjugation by Delta: Delta^-1 a Delta.
SimpleBraid tau(const SimpleBraid& a);

inline SimpleBraid tau_power(const SimpleBraid& a, long k) {
  return (k % 2 != 0) ? tau(a) : a;
}

/// True iff (a, b) is left-weighted: S(b) is contained in F(a).
bool is_left_weighted(const SimpleBraid& a, const SimpleBraid& b);

/// True iff a left-divides b.
bool is_prefix(const SimpleBraid& a, const SimpleBraid& b);

/// a^-1 * b for a prefix a of b.
SimpleBraid prefix_quotient(const SimpleBraid& a, const SimpleBraid& b);

/// All n! simple braids, sorted lexicographically by one-line form.
std::vector<SimpleBraid> all_simple_braids(int n);

}  // namespace braidsc

template <>
struct std::hash<braidsc::SimpleBraid> {
  std::size_t operator()(const braidsc::SimpleBraid& s) const noexcept { return s.hash(); }
};
