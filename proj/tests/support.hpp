#pragma once

// Test-only oracles and generators. Nothing here calls the normal-form code.

#include <random>
#include <vector>

#include "braidsc/braid.hpp"

namespace braidsc::testing {

/// Free-group word over x_1..x_n: letter +j is x_j, -j is x_j^-1.
using FreeWord = std::vector<int>;

inline void push_reduced(FreeWord& w, int letter) {
  if (!w.empty() && w.back() == -letter) {
    w.pop_back();
  } else {
    w.push_back(letter);
  }
}

/// The Artin action of B_n on the free group F_n, which is faithful: two braid
/// words are equal in B_n iff their actions agree on every generator.
class ArtinAction {
 public:
  explicit ArtinAction(int n) : n_(n), images_(static_cast<std::size_t>(n)) {
    for (int j = 1; j <= n; ++j) images_[j - 1] = {j};
  }

  void apply_generator(int g) {
    const int i = g > 0 ? g : -g;
    FreeWord a;
    FreeWord b;
    if (g > 0) {
      a = {i, i + 1, -i};  // x_i -> x_i x_{i+1} x_i^-1
      b = {i};             // x_{i+1} -> x_i
    } else {
      a = {i + 1};                // x_i -> x_{i+1}
      b = {-(i + 1), i, i + 1};  // x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}
    }
    for (auto& img : images_) {
      FreeWord out;
      for (int letter : img) {
        const int j = letter > 0 ? letter : -letter;
        const FreeWord* sub = nullptr;
        if (j == i) sub = &a;
        if (j == i + 1) sub = &b;
        if (sub == nullptr) {
          push_reduced(out, letter);
        } else if (letter > 0) {
          for (int l : *sub) push_reduced(out, l);
        } else {
          for (auto it = sub->rbegin(); it != sub->rend(); ++it) push_reduced(out, -*it);
        }
      }
      img = std::move(out);
    }
  }

  void apply_word(const BraidWord& w) {
    for (const auto& t : w.letters) {
      if (t.kind == BraidToken::Kind::generator) {
        apply_generator(t.value);
        continue;
      }
      const int e = t.value;
      for (int rep = 0; rep < (e < 0 ? -e : e); ++rep) {
        // Delta = (s1 ... s_{n-1})(s1 ... s_{n-2}) ... (s1).
        std::vector<int> delta;
        for (int top = n_ - 1; top >= 1; --top) {
          for (int g = 1; g <= top; ++g) delta.push_back(g);
        }
        if (e > 0) {
          for (int g : delta) apply_generator(g);
        } else {
          for (auto it = delta.rbegin(); it != delta.rend(); ++it) apply_generator(-*it);
        }
      }
    }
  }

  const std::vector<FreeWord>& images() const { return images_; }

  friend bool operator==(const ArtinAction&, const ArtinAction&) = default;

 private:
  int n_;
  std::vector<FreeWord> images_;
};

inline ArtinAction artin(const BraidWord& w) {
  ArtinAction a(w.n);
  a.apply_word(w);
  return a;
}

inline bool same_braid(const BraidWord& a, const BraidWord& b) {
  return a.n == b.n && artin(a) == artin(b);
}

inline BraidWord inverse_word(const BraidWord& w) {
  BraidWord out;
  out.n = w.n;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    out.letters.push_back({it->kind, -it->value});
  }
  return out;
}

inline BraidWord random_word(std::mt19937& rng, int n, int length, bool positive = false) {
  BraidWord w;
  w.n = n;
  std::uniform_int_distribution<int> gen(1, n - 1);
  std::bernoulli_distribution sign(0.5);
  for (int i = 0; i < length; ++i) {
    int g = gen(rng);
    if (!positive && sign(rng)) g = -g;
    w.letters.push_back(BraidToken::generator(g));
  }
  return w;
}

/// Permutation product a*b by definition (strand i goes to b(a(i))), and
/// crossing count by definition, independent of SimpleBraid's helpers.
inline std::vector<int> perm_product(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = b[static_cast<std::size_t>(a[i] - 1)];
  return c;
}

inline int crossings(const std::vector<int>& p) {
  int count = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) count += p[i] > p[j];
  }
  return count;
}

/// a left-divides b among simple braids: some simple c has a*c = b with
/// lengths adding.
inline bool brute_prefix(const SimpleBraid& a, const SimpleBraid& b,
                         const std::vector<SimpleBraid>& all) {
  for (const auto& c : all) {
    if (perm_product(a.images(), c.images()) == b.images() &&
        crossings(a.images()) + crossings(c.images()) == crossings(b.images())) {
      return true;
    }
  }
  return false;
}

}  // namespace braidsc::testing
