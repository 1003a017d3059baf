#include "braidsc/families.hpp"

#include <algorithm>
#include <stdexcept>

namespace braidsc {

namespace {

void push(BraidWord& w, std::initializer_list<int> gens, int times = 1) {
  for (int t = 0; t < times; ++t) append_positive(w, gens);
}

BraidWord word(int n) {
  BraidWord w;
  w.n = n;
  return w;
}

long binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

long ipow(long b, int e) {
  long r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

std::set<int> even_labels(int n) {
  std::set<int> out;
  for (int v = 2; v <= n; v += 2) out.insert(v);
  return out;
}

}  // namespace

DownUpSequence DownUpSequence::from_order(const std::vector<int>& order) {
  const int n = static_cast<int>(order.size());
  std::vector<int> pos(static_cast<std::size_t>(n) + 1, -1);
  for (int i = 0; i < n; ++i) {
    const int v = order[static_cast<std::size_t>(i)];
    if (v < 1 || v > n || pos[static_cast<std::size_t>(v)] != -1) {
      throw std::invalid_argument("not an arrangement of 1..n");
    }
    pos[static_cast<std::size_t>(v)] = i;
  }
  DownUpSequence s;
  s.left_.assign(static_cast<std::size_t>(n), false);
  for (int v = 2; v <= n; ++v) s.left_[static_cast<std::size_t>(v - 1)] = pos[v] < pos[1];
  if (s.order() != order) throw std::invalid_argument("not a down-up sequence");
  return s;
}

std::vector<int> DownUpSequence::order() const {
  std::vector<int> left;
  std::vector<int> right;
  for (int v = n(); v >= 2; --v) {
    if (this->left(v)) left.push_back(v);
  }
  left.push_back(1);
  for (int v = 2; v <= n(); ++v) {
    if (!this->left(v)) right.push_back(v);
  }
  left.insert(left.end(), right.begin(), right.end());
  return left;
}

DownUpSequence DownUpSequence::phi(const std::set<int>& flip) const {
  DownUpSequence s = *this;
  for (int v : flip) {
    if (v >= 2 && v <= n()) s.left_[static_cast<std::size_t>(v - 1)] = !left(v);
  }
  return s;
}

SimpleBraid transition_braid(const DownUpSequence& top, const DownUpSequence& bottom,
                             std::optional<std::pair<int, int>> swap) {
  if (top.n() != bottom.n()) throw std::invalid_argument("transition between different label sets");
  const int n = top.n();
  const auto t = top.order();
  const auto b = bottom.order();
  std::vector<int> bottom_pos(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i < n; ++i) bottom_pos[static_cast<std::size_t>(b[static_cast<std::size_t>(i)])] = i + 1;
  if (swap) std::swap(bottom_pos[static_cast<std::size_t>(swap->first)],
                      bottom_pos[static_cast<std::size_t>(swap->second)]);
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = bottom_pos[static_cast<std::size_t>(t[static_cast<std::size_t>(i)])];
  return SimpleBraid::from_images(images);
}

std::vector<GammaRow> gamma_rows(const GammaSpec& spec) {
  const int n = spec.n;
  if (n < 4 || n % 2 != 0) throw std::invalid_argument("gamma needs an even strand count >= 4");
  if (static_cast<int>(spec.k.size()) != n - 2) throw std::invalid_argument("gamma needs n-2 repeat counts");
  for (int k : spec.k) {
    if (k < 0) throw std::invalid_argument("negative repeat count");
  }
  const auto k = [&](int i) { return spec.k[static_cast<std::size_t>(i - 1)]; };

  std::vector<int> first;
  for (int v = n; v >= 1; --v) {
    if (v % 4 == 0 || v % 4 == 3) first.push_back(v);
  }
  for (int v = 1; v <= n; ++v) {
    if (v % 4 == 1 || v % 4 == 2) first.push_back(v);
  }
  std::vector<GammaRow> rows;
  rows.push_back({DownUpSequence::from_order(first), std::nullopt});
  std::reverse(first.begin(), first.end());
  rows.push_back({DownUpSequence::from_order(first), std::nullopt});

  const auto evens = even_labels(n);
  const auto repeat_pairs = [&](int times) {
    for (int t = 0; t < 2 * times; ++t) rows.push_back({rows.back().row.phi(evens), std::nullopt});
  };
  for (int i = n; i >= 3; --i) {
    std::set<int> flip = evens;
    if (i % 2 == 0) {
      flip.erase(i);
    } else {
      flip.insert(i);
    }
    rows.push_back({rows.back().row.phi(flip), std::make_pair(i, i - 1)});
    const int r = n - i + 3;  // index of the new row among the main rows
    if (r <= n - 1) repeat_pairs(k(n + 1 - r));
  }
  repeat_pairs(k(1));
  return rows;
}

BraidWord gamma(const GammaSpec& spec) {
  const auto rows = gamma_rows(spec);
  BraidWord w = word(spec.n);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto s = transition_braid(rows[i - 1].row, rows[i].row, rows[i].swap);
    if (s.is_delta()) {
      w.letters.push_back(BraidToken::delta_power(1));
      continue;
    }
    for (int g : s.word()) w.letters.push_back(BraidToken::generator(g));
  }
  return w;
}

BraidWord gamma(int n, int len) {
  if ((len - (n - 1)) < 0 || (len - (n - 1)) % 2 != 0) {
    throw std::invalid_argument("gamma length must be n-1+2K");
  }
  GammaSpec spec{n, std::vector<int>(static_cast<std::size_t>(n - 2), 0)};
  spec.k[0] = (len - (n - 1)) / 2;
  return gamma(spec);
}

BraidWord beta(int n, int len) {
  if (n < 5 || n % 2 == 0) throw std::invalid_argument("beta needs an odd strand count >= 5");
  if (len < 0) throw std::invalid_argument("beta needs a non-negative length");
  BraidWord w = word(n);
  for (int rep = 0; rep <= len; ++rep) {
    for (int g = 1; g <= n - 2; g += 2) w.letters.push_back(BraidToken::generator(g));
  }
  for (int g = 1; g <= n - 1; ++g) w.letters.push_back(BraidToken::generator(g));
  return w;
}

BraidWord gamma5(int len) {
  if (len < 3 || len % 2 == 0) throw std::invalid_argument("gamma5 needs an odd length >= 3");
  BraidWord w = word(5);
  w.letters.push_back(BraidToken::delta_power(1));
  push(w, {1, 2, 3, 2, 1});
  push(w, {1, 3, 2, 1, 1, 2, 1, 3}, (len - 3) / 2);
  push(w, {1, 3, 2, 1, 4});
  return w;
}

BraidWord delta5(int len) {
  if (len < 3 || len % 2 == 0) throw std::invalid_argument("delta5 needs an odd length >= 3");
  BraidWord w = word(5);
  push(w, {1, 3, 1, 2, 3, 2, 1, 4, 1, 2, 4, 3, 2, 1});
  push(w, {1, 2, 3, 2, 2, 3, 2, 1}, (len - 3) / 2);
  return w;
}

BraidWord delta_abc(int a, int b, int c) {
  if (a < 0 || b < 0 || c < 0) throw std::invalid_argument("delta_abc needs a, b, c >= 0");
  BraidWord w = word(5);
  const std::initializer_list<int> s = {1, 2, 3, 2, 2, 3, 2, 1};
  push(w, {1, 2, 3, 2, 4, 2, 4, 3, 2, 1});  // X
  push(w, s, a);
  push(w, {1, 3});  // Y
  push(w, s, b);
  push(w, {1, 2, 3, 2, 1, 1, 2, 3, 2, 1});  // Z
  push(w, s, c);
  return w;
}

BraidWord beta7_witness(int a, int b, int c) {
  if (a < 0 || b < 0 || c < 0) throw std::invalid_argument("beta7_witness needs a, b, c >= 0");
  BraidWord w = word(7);
  push(w, {2, 1, 4, 6});
  push(w, {1, 4, 6}, a);
  push(w, {1, 4, 3, 5, 6, 5});
  push(w, {1, 3, 5}, b);
  push(w, {1, 3, 5, 4, 3, 2, 1, 6});
  push(w, {2, 4, 6}, c);
  return w;
}

CanonicalBraid full_twist(int n, int a, int b) {
  if (a < 1 || b > n || a >= b) throw std::invalid_argument("full_twist needs 1 <= a < b <= n");
  BraidWord w = word(n);
  for (int rep = 0; rep < 2; ++rep) {
    for (int top = b - 1; top >= a; --top) {
      for (int g = a; g <= top; ++g) w.letters.push_back(BraidToken::generator(g));
    }
  }
  return normal_form(w);
}

long expected_sc_size(Family family, int n, int len) {
  switch (family) {
    case Family::beta: {
      if (n < 5 || n % 2 == 0 || len < 2) throw std::invalid_argument("beta size needs odd n >= 5, L >= 2");
      const long h = (n - 3) / 2;
      return len * binomial(h + len - 2, h) * ipow(2, (n - 5) / 2);
    }
    case Family::gamma:
      if (n < 4 || len < n - 1 || (len - n + 1) % 2 != 0) {
        throw std::invalid_argument("gamma size needs L = n-1+2K");
      }
      if (n == 4 && len == 3) return 6;
      return 2L * (len - 1) * ipow(len, n - 3);
    case Family::delta5:
      if (n != 5 || len < 3 || len % 2 == 0) throw std::invalid_argument("delta5 size needs n = 5, odd L >= 3");
      return 2L * len * len * len;
  }
  return 0;
}

std::optional<Family> parse_family(const std::string& name) {
  if (name == "beta") return Family::beta;
  if (name == "gamma") return Family::gamma;
  if (name == "delta5" || name == "delta") return Family::delta5;
  return std::nullopt;
}

}  // namespace braidsc
