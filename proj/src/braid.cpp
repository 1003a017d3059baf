#include "braidsc/braid.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <sstream>

namespace braidsc {

namespace {

long floor_mod2(long k) { return ((k % 2) + 2) % 2; }

// Makes (a, b) left-weighted in place. Returns false if it already was.
bool rebalance(SimpleBraid& a, SimpleBraid& b) {
  const SimpleBraid t = left_gcd(right_complement(a), b);
  if (t.is_identity()) return false;
  a = compose_unchecked(a, t);
  b = prefix_quotient(t, b);
  return true;
}

// Delta^inf * factors, kept left-weighted after every operation.
class Accumulator {
 public:
  Accumulator(int n, long inf, std::vector<SimpleBraid> factors)
      : n_(n), inf_(inf), factors_(std::move(factors)) {}

  void append_delta(long e) {
    if (e % 2 != 0) {
      for (auto& f : factors_) f = tau(f);
    }
    inf_ += e;
  }

  void append_simple(const SimpleBraid& s) {
    factors_.push_back(s);
    for (std::size_t j = factors_.size() - 1; j > 0; --j) {
      if (!rebalance(factors_[j - 1], factors_[j])) break;
    }
  }

  void prepend_simple(const SimpleBraid& s) {
    factors_.insert(factors_.begin(), s);
    for (std::size_t j = 0; j + 1 < factors_.size(); ++j) {
      if (!rebalance(factors_[j], factors_[j + 1])) break;
    }
  }

  // s^-1 = Delta^-1 * tau(right_complement(s)).
  void append_inverse_simple(const SimpleBraid& s) {
    append_delta(-1);
    append_simple(tau(right_complement(s)));
  }

  CanonicalBraid finish() && {
    // Local moves reach the unique left-weighted fixpoint; the incremental
    // updates above normally leave nothing for this sweep to do.
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t j = 0; j + 1 < factors_.size(); ++j) {
        if (rebalance(factors_[j], factors_[j + 1])) changed = true;
      }
    }
    std::size_t first = 0;
    while (first < factors_.size() && factors_[first].is_delta()) ++first;
    std::size_t last = factors_.size();
    while (last > first && factors_[last - 1].is_identity()) --last;
    std::vector<SimpleBraid> proper(factors_.begin() + static_cast<std::ptrdiff_t>(first),
                                    factors_.begin() + static_cast<std::ptrdiff_t>(last));
    return CanonicalBraid::from_factors_unchecked(n_, inf_ + static_cast<long>(first),
                                                  std::move(proper));
  }

 private:
  int n_;
  long inf_;
  std::vector<SimpleBraid> factors_;
};

void require_same_n(const CanonicalBraid& x, const CanonicalBraid& y, const char* what) {
  if (x.n() != y.n()) throw std::invalid_argument(std::string(what) + ": strand counts differ");
}

}  // namespace

// ---------------------------------------------------------------------------
// Words

BraidWord parse_braid_word(std::string_view text, int n) {
  if (n < 2 || n > kMaxStrands) throw std::invalid_argument("strand count out of range");
  BraidWord w;
  w.n = n;
  std::size_t i = 0;
  const auto is_sep = [](char c) { return c == '.' || std::isspace(static_cast<unsigned char>(c)); };
  while (i < text.size()) {
    if (is_sep(text[i])) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < text.size() && !is_sep(text[i])) ++i;
    std::string_view tok = text.substr(start, i - start);

    auto parse_int = [&](std::string_view s, int& out) {
      if (!s.empty() && s.front() == '+') s.remove_prefix(1);
      if (s.empty()) return false;
      const char* b = s.data();
      const char* e = s.data() + s.size();
      auto [p, ec] = std::from_chars(b, e, out);
      return ec == std::errc{} && p == e;
    };

    if (tok.front() == 'D') {
      if (tok.size() == 1) {
        w.letters.push_back(BraidToken::delta_power(1));
        continue;
      }
      int e = 0;
      if (tok[1] != '^' || !parse_int(tok.substr(2), e)) {
        throw ParseError("malformed Delta token '" + std::string(tok) + "'", start);
      }
      w.letters.push_back(BraidToken::delta_power(e));
      continue;
    }
    int j = 0;
    if (!parse_int(tok, j)) {
      throw ParseError("malformed token '" + std::string(tok) + "'", start);
    }
    if (j == 0) throw ParseError("generator index 0", start);
    if (j >= n || -j >= n) {
      throw ParseError("generator index out of range: " + std::string(tok), start);
    }
    w.letters.push_back(BraidToken::generator(j));
  }
  return w;
}

std::string to_string(const BraidWord& w) {
  std::ostringstream os;
  bool first = true;
  for (const auto& t : w.letters) {
    if (!first) os << ' ';
    first = false;
    if (t.kind == BraidToken::Kind::delta) {
      os << 'D';
      if (t.value != 1) os << '^' << t.value;
    } else {
      os << t.value;
    }
  }
  return os.str();
}

BraidWord& append_positive(BraidWord& w, std::initializer_list<int> generators) {
  for (int g : generators) w.letters.push_back(BraidToken::generator(g));
  return w;
}

BraidWord concat(const BraidWord& a, const BraidWord& b) {
  if (a.n != b.n) throw std::invalid_argument("concat: strand counts differ");
  BraidWord out = a;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

// ---------------------------------------------------------------------------
// CanonicalBraid

CanonicalBraid CanonicalBraid::identity(int n) { return delta_power(n, 0); }

CanonicalBraid CanonicalBraid::delta_power(int n, long k) {
  if (n < 2 || n > kMaxStrands) throw std::invalid_argument("strand count out of range");
  return from_factors_unchecked(n, k, {});
}

CanonicalBraid CanonicalBraid::from_simple(const SimpleBraid& s) {
  return from_factors(s.n(), 0, {s});
}

CanonicalBraid CanonicalBraid::from_factors(int n, long inf, std::vector<SimpleBraid> simples) {
  for (const auto& s : simples) {
    if (s.n() != n) throw std::invalid_argument("from_factors: strand counts differ");
  }
  Accumulator acc(n, inf, {});
  for (const auto& s : simples) acc.append_simple(s);
  return std::move(acc).finish();
}

CanonicalBraid CanonicalBraid::from_factors_unchecked(int n, long inf,
                                                      std::vector<SimpleBraid> factors) {
  CanonicalBraid x;
  x.n_ = n;
  x.inf_ = inf;
  x.factors_ = std::move(factors);
  return x;
}

std::string CanonicalBraid::serialize() const {
  std::string out = "n=" + std::to_string(n_) + " inf=" + std::to_string(inf_) + " |";
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i != 0) out += " |";
    out += ' ';
    out += factors_[i].to_string();
  }
  return out;
}

CanonicalBraid CanonicalBraid::parse(std::string_view text) {
  const auto fail = [&](const std::string& why) {
    return std::invalid_argument("malformed canonical braid '" + std::string(text) + "': " + why);
  };
  std::istringstream is{std::string(text)};
  std::string tok;
  int n = 0;
  long inf = 0;
  if (!(is >> tok) || tok.rfind("n=", 0) != 0) throw fail("expected n=");
  n = std::stoi(tok.substr(2));
  if (!(is >> tok) || tok.rfind("inf=", 0) != 0) throw fail("expected inf=");
  inf = std::stol(tok.substr(4));
  if (!(is >> tok) || tok != "|") throw fail("expected '|'");
  std::vector<SimpleBraid> factors;
  std::string rest;
  std::getline(is, rest);
  std::size_t pos = 0;
  while (true) {
    const std::size_t open = rest.find('[', pos);
    if (open == std::string::npos) break;
    const std::size_t close = rest.find(']', open);
    if (close == std::string::npos) throw fail("unterminated factor");
    std::istringstream fs(rest.substr(open + 1, close - open - 1));
    std::vector<int> images;
    int v = 0;
    while (fs >> v) images.push_back(v);
    if (static_cast<int>(images.size()) != n) throw fail("factor of wrong size");
    factors.push_back(SimpleBraid::from_images(images));
    pos = close + 1;
  }
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].is_identity() || factors[i].is_delta()) throw fail("improper factor");
    if (i + 1 < factors.size() && !is_left_weighted(factors[i], factors[i + 1])) {
      throw fail("factors not left-weighted");
    }
  }
  return from_factors_unchecked(n, inf, std::move(factors));
}

BraidWord CanonicalBraid::to_word() const {
  BraidWord w;
  w.n = n_;
  if (inf_ != 0) w.letters.push_back(BraidToken::delta_power(static_cast<int>(inf_)));
  for (const auto& f : factors_) {
    for (int g : f.word()) w.letters.push_back(BraidToken::generator(g));
  }
  return w;
}

// ---------------------------------------------------------------------------
// Arithmetic

CanonicalBraid normal_form(const BraidWord& w) {
  Accumulator acc(w.n, 0, {});
  for (const auto& t : w.letters) {
    if (t.kind == BraidToken::Kind::delta) {
      acc.append_delta(t.value);
    } else if (t.value > 0) {
      acc.append_simple(SimpleBraid::atom(w.n, t.value));
    } else {
      acc.append_inverse_simple(SimpleBraid::atom(w.n, -t.value));
    }
  }
  return std::move(acc).finish();
}

CanonicalBraid multiply(const CanonicalBraid& x, const CanonicalBraid& y) {
  require_same_n(x, y, "multiply");
  Accumulator acc(x.n(), x.inf(), x.factors());
  acc.append_delta(y.inf());
  for (const auto& f : y.factors()) acc.append_simple(f);
  return std::move(acc).finish();
}

CanonicalBraid inverse(const CanonicalBraid& x) {
  Accumulator acc(x.n(), 0, {});
  const auto& f = x.factors();
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc.append_inverse_simple(*it);
  acc.append_delta(-x.inf());
  return std::move(acc).finish();
}

CanonicalBraid power(const CanonicalBraid& x, int p) {
  CanonicalBraid base = p < 0 ? inverse(x) : x;
  CanonicalBraid out = CanonicalBraid::identity(x.n());
  for (int i = 0; i < std::abs(p); ++i) out = multiply(out, base);
  return out;
}

CanonicalBraid conjugate(const CanonicalBraid& x, const CanonicalBraid& g) {
  require_same_n(x, g, "conjugate");
  return multiply(multiply(inverse(g), x), g);
}

CanonicalBraid conjugate_by_simple(const CanonicalBraid& x, const SimpleBraid& s) {
  // s^-1 Delta^k F s = Delta^(k-1) tau^(k+1)(right_complement(s)) F s.
  const long k = x.inf();
  Accumulator acc(x.n(), k - 1, x.factors());
  acc.prepend_simple(tau_power(right_complement(s), k + 1));
  acc.append_simple(s);
  return std::move(acc).finish();
}

long exponent_sum(const CanonicalBraid& x) {
  long total = x.inf() * static_cast<long>(x.n()) * (x.n() - 1) / 2;
  for (const auto& f : x.factors()) total += f.length();
  return total;
}

CanonicalBraid reduce_center(const CanonicalBraid& x) {
  return CanonicalBraid::from_factors_unchecked(x.n(), floor_mod2(x.inf()), x.factors());
}

// ---------------------------------------------------------------------------
// Cycling, sliding, rigidity

SimpleBraid initial_factor(const CanonicalBraid& x) {
  if (x.factors().empty()) return SimpleBraid::identity(x.n());
  return tau_power(x.factors().front(), x.inf());
}

SimpleBraid final_factor(const CanonicalBraid& x) {
  if (x.factors().empty()) return SimpleBraid::identity(x.n());
  return x.factors().back();
}

Conjugation cycle(const CanonicalBraid& x, CycleDirection direction) {
  if (x.factors().empty()) return {x, CanonicalBraid::identity(x.n())};
  if (direction == CycleDirection::forward) {
    const SimpleBraid iota = initial_factor(x);
    return {conjugate_by_simple(x, iota), CanonicalBraid::from_simple(iota)};
  }
  // x_l * Delta^k x_1 ... x_{l-1} = Delta^k tau^k(x_l) x_1 ... x_{l-1}.
  const auto& f = x.factors();
  Accumulator acc(x.n(), x.inf(), {});
  acc.append_simple(tau_power(f.back(), x.inf()));
  for (std::size_t i = 0; i + 1 < f.size(); ++i) acc.append_simple(f[i]);
  return {std::move(acc).finish(), inverse(CanonicalBraid::from_simple(f.back()))};
}

SimpleBraid preferred_prefix(const CanonicalBraid& x) {
  if (x.factors().empty()) return SimpleBraid::identity(x.n());
  return left_gcd(initial_factor(x), right_complement(final_factor(x)));
}

Conjugation cyclic_sliding(const CanonicalBraid& x) {
  const SimpleBraid p = preferred_prefix(x);
  if (p.is_identity()) return {x, CanonicalBraid::identity(x.n())};
  return {conjugate_by_simple(x, p), CanonicalBraid::from_simple(p)};
}

bool is_rigid(const CanonicalBraid& x) {
  if (x.factors().empty()) return true;
  return is_left_weighted(x.factors().back(), tau_power(x.factors().front(), x.inf()));
}

}  // namespace braidsc
