#include "braidsc/curves.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace braidsc {

namespace {

std::size_t wrap(long k, std::size_t m) {
  const long mm = static_cast<long>(m);
  return static_cast<std::size_t>(((k % mm) + mm) % mm);
}

// The other endpoint of the arc leaving crossing k into the given half plane.
std::size_t other_end(std::size_t k, bool upper, std::size_t m) {
  const bool forward = (k % 2 == 0) == upper;
  return wrap(static_cast<long>(k) + (forward ? 1 : -1), m);
}

// Cancels bigons until none remain; the result still starts with an upper arc.
std::vector<int> reduce(std::vector<int> w) {
  while (true) {
    std::vector<int> st;
    st.reserve(w.size());
    for (int g : w) {
      if (!st.empty() && st.back() == g) {
        st.pop_back();
      } else {
        st.push_back(g);
      }
    }
    w = std::move(st);
    if (w.size() >= 2 && w.front() == w.back()) {
      w.pop_back();
      w.erase(w.begin());
      std::rotate(w.begin(), w.begin() + 1, w.end());
      continue;
    }
    return w;
  }
}

std::vector<int> canonical(const std::vector<int>& w) {
  std::vector<int> best = w;
  std::vector<int> rev(w.rbegin(), w.rend());
  for (const std::vector<int>* src : std::array<const std::vector<int>*, 2>{&w, &rev}) {
    for (std::size_t s = 0; s < src->size(); s += 2) {
      std::vector<int> cand(src->begin() + static_cast<std::ptrdiff_t>(s), src->end());
      cand.insert(cand.end(), src->begin(), src->begin() + static_cast<std::ptrdiff_t>(s));
      best = std::min(best, cand);
    }
  }
  return best;
}

// True iff crossing a lies left of crossing b (same gap). Nested arcs reverse
// the order at their far ends, so follow both strands until they separate.
bool left_of(const std::vector<int>& gaps, std::size_t a, std::size_t b) {
  const std::size_t m = gaps.size();
  bool flip = false;
  bool upper = true;
  for (std::size_t step = 0; step <= m; ++step) {
    const int g = gaps[a];
    const std::size_t da = other_end(a, upper, m);
    const std::size_t db = other_end(b, upper, m);
    const int ga = gaps[da];
    const int gb = gaps[db];
    if (ga != gb) {
      const bool r = ((ga > g) == (gb > g)) ? ga > gb : ga < gb;
      return r != flip;
    }
    flip = !flip;
    upper = !upper;
    a = da;
    b = db;
  }
  throw std::logic_error("crossings cannot be ordered; the word is not a simple curve");
}

struct Chord {
  int lo;
  int hi;
};

bool interleave(const Chord& a, const Chord& b) {
  return (a.lo < b.lo && b.lo < a.hi && a.hi < b.hi) || (b.lo < a.lo && a.lo < b.hi && b.hi < a.hi);
}

// Upper and lower chords between axis positions.
void chords(const std::vector<int>& pos, std::vector<Chord>& upper, std::vector<Chord>& lower) {
  const std::size_t m = pos.size();
  for (std::size_t k = 0; k < m; ++k) {
    const int a = pos[k];
    const int b = pos[wrap(static_cast<long>(k) + 1, m)];
    (k % 2 == 0 ? upper : lower).push_back({std::min(a, b), std::max(a, b)});
  }
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

std::string RoundCurve::to_string() const {
  return "[" + std::to_string(p) + "," + std::to_string(q) + "]";
}

void check_round(const RoundCurve& c, int n) {
  if (c.p < 1 || c.q > n || c.p >= c.q || c.q - c.p + 1 >= n) {
    throw std::invalid_argument("round curve " + c.to_string() + " invalid on " + std::to_string(n) +
                                " punctures");
  }
}

std::optional<RoundCurve> round_image(const RoundCurve& c, const CurveFactor& f) {
  const int n = f.n;
  if (f.kind == CurveFactor::Kind::delta_power) {
    if (f.exponent % 2 == 0) return c;
    return RoundCurve{n + 1 - c.q, n + 1 - c.p};
  }
  const SimpleBraid pi = f.kind == CurveFactor::Kind::simple ? f.simple : f.simple.inverse_permutation();
  int lo = n;
  int hi = -1;
  for (int i = c.p; i <= c.q; ++i) {
    lo = std::min(lo, pi[i - 1]);
    hi = std::max(hi, pi[i - 1]);
  }
  if (hi - lo != c.q - c.p) return std::nullopt;
  return RoundCurve{lo + 1, hi + 1};
}

Transport transport_round(const RoundCurve& c, const std::vector<CurveFactor>& chain) {
  Transport t;
  t.curves.push_back(c);
  for (std::size_t i = 0; i < chain.size(); ++i) {
    const auto next = round_image(t.curves.back(), chain[i]);
    if (!next) {
      t.failed_at = i;
      return t;
    }
    t.curves.push_back(*next);
  }
  return t;
}

GapDiagram GapDiagram::from_round(int n, const RoundCurve& c) {
  check_round(c, n);
  GapDiagram d;
  d.n_ = n;
  d.gaps_ = canonical({c.p - 1, c.q});
  return d;
}

GapDiagram GapDiagram::from_gaps(int n, std::vector<int> gaps) {
  if (n < 3 || n > kMaxStrands) throw std::invalid_argument("puncture count out of range");
  if (gaps.size() % 2 != 0) throw std::invalid_argument("gap word of odd length");
  for (int g : gaps) {
    if (g < 0 || g > n) throw std::invalid_argument("gap index out of range");
  }
  gaps = reduce(std::move(gaps));
  if (gaps.empty()) throw std::invalid_argument("gap word bounds no essential curve");
  GapDiagram d;
  d.n_ = n;
  d.gaps_ = canonical(gaps);

  const auto rank = axis_order(d);
  std::vector<Chord> upper;
  std::vector<Chord> lower;
  chords(rank, upper, lower);
  for (const auto* side : {&upper, &lower}) {
    for (std::size_t i = 0; i < side->size(); ++i) {
      for (std::size_t j = i + 1; j < side->size(); ++j) {
        if (interleave((*side)[i], (*side)[j])) throw std::invalid_argument("gap word self-intersects");
      }
    }
  }
  const auto inside = d.punctures_inside().size();
  if (inside < 2 || static_cast<int>(inside) > n - 1) {
    throw std::invalid_argument("curve is not essential");
  }
  return d;
}

std::optional<RoundCurve> GapDiagram::as_round() const {
  if (gaps_.size() != 2) return std::nullopt;
  const int a = std::min(gaps_[0], gaps_[1]);
  const int b = std::max(gaps_[0], gaps_[1]);
  return RoundCurve{a + 1, b};
}

std::vector<int> GapDiagram::punctures_inside() const {
  std::vector<int> out;
  int left = 0;
  for (int p = 1; p <= n_; ++p) {
    left += static_cast<int>(std::count(gaps_.begin(), gaps_.end(), p - 1));
    if (left % 2 == 1) out.push_back(p);
  }
  return out;
}

std::string GapDiagram::serialize() const {
  std::ostringstream os;
  os << "n=" << n_ << " gaps=[";
  for (std::size_t i = 0; i < gaps_.size(); ++i) os << (i ? " " : "") << gaps_[i];
  os << ']';
  return os.str();
}

std::vector<int> axis_order(const GapDiagram& d) {
  const auto& gaps = d.gaps();
  std::vector<std::size_t> idx(gaps.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    if (gaps[a] != gaps[b]) return gaps[a] < gaps[b];
    if (a == b) return false;
    return left_of(gaps, a, b);
  });
  std::vector<int> rank(gaps.size());
  for (std::size_t r = 0; r < idx.size(); ++r) rank[idx[r]] = static_cast<int>(r);
  return rank;
}

GapDiagram apply_generator(const GapDiagram& d, int j) {
  const int a = j > 0 ? j : -j;
  if (a < 1 || a >= d.n()) throw std::invalid_argument("generator index out of range");
  const auto& w = d.gaps();
  std::vector<int> out;
  out.reserve(w.size() + 8);
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (w[k] != a) {
      out.push_back(w[k]);
      continue;
    }
    // The arc arriving at crossing k is upper iff k is odd.
    const bool from_upper = k % 2 == 1;
    const bool left_first = from_upper == (j > 0);
    out.push_back(left_first ? a - 1 : a + 1);
    out.push_back(a);
    out.push_back(left_first ? a + 1 : a - 1);
  }
  return GapDiagram::from_gaps(d.n(), std::move(out));
}

GapDiagram apply_simple(const GapDiagram& d, const SimpleBraid& s) {
  GapDiagram r = d;
  for (int g : s.word()) r = apply_generator(r, g);
  return r;
}

GapDiagram apply_inverse_simple(const GapDiagram& d, const SimpleBraid& s) {
  GapDiagram r = d;
  const auto w = s.word();
  for (auto it = w.rbegin(); it != w.rend(); ++it) r = apply_generator(r, -*it);
  return r;
}

GapDiagram apply_factor(const GapDiagram& d, const CurveFactor& f) {
  switch (f.kind) {
    case CurveFactor::Kind::simple:
      return apply_simple(d, f.simple);
    case CurveFactor::Kind::inverse_simple:
      return apply_inverse_simple(d, f.simple);
    case CurveFactor::Kind::delta_power:
      // Delta^2 acts trivially on curves.
      return f.exponent % 2 == 0 ? d : apply_simple(d, SimpleBraid::delta(d.n()));
  }
  return d;
}

std::vector<std::vector<int>> intersect_disks_with_round(const GapDiagram& d, const RoundCurve& c) {
  const int n = d.n();
  check_round(c, n);
  const auto& gaps = d.gaps();
  const auto rank = axis_order(d);
  // First axis position of each gap among d's crossings.
  std::vector<int> start(static_cast<std::size_t>(n) + 2, 0);
  for (int g : gaps) ++start[static_cast<std::size_t>(g) + 1];
  for (int g = 1; g <= n + 1; ++g) start[static_cast<std::size_t>(g)] += start[static_cast<std::size_t>(g) - 1];
  const int gl = c.p - 1;
  const int gr = c.q;
  const int nl = start[static_cast<std::size_t>(gl) + 1] - start[static_cast<std::size_t>(gl)];
  const int nr = start[static_cast<std::size_t>(gr) + 1] - start[static_cast<std::size_t>(gr)];

  // Axis items in order: gap 0 crossings, puncture 1, gap 1 crossings, ...
  // Item i sits at 4 * i; c's crossings sit just before an item.
  const auto place = [&](int sl, int sr, std::vector<int>& dpos, int& lpos, int& rpos) {
    dpos.resize(gaps.size());
    for (std::size_t k = 0; k < gaps.size(); ++k) dpos[k] = 4 * (rank[k] + gaps[k]);
    lpos = 4 * (start[static_cast<std::size_t>(gl)] + sl + gl) - 3;
    rpos = 4 * (start[static_cast<std::size_t>(gr)] + sr + gr) - 1;
  };

  std::vector<Chord> upper;
  std::vector<Chord> lower;
  int best = -1;
  int best_l = 0;
  int best_r = 0;
  for (int sl = 0; sl <= nl; ++sl) {
    for (int sr = 0; sr <= nr; ++sr) {
      std::vector<int> dpos;
      int lp = 0;
      int rp = 0;
      place(sl, sr, dpos, lp, rp);
      upper.clear();
      lower.clear();
      chords(dpos, upper, lower);
      const Chord cc{lp, rp};
      int count = 0;
      for (const auto& ch : upper) count += interleave(ch, cc);
      for (const auto& ch : lower) count += interleave(ch, cc);
      if (best < 0 || count < best) {
        best = count;
        best_l = sl;
        best_r = sr;
      }
    }
  }

  std::vector<int> dpos;
  int lp = 0;
  int rp = 0;
  place(best_l, best_r, dpos, lp, rp);
  upper.clear();
  lower.clear();
  chords(dpos, upper, lower);
  upper.push_back({lp, rp});
  lower.push_back({lp, rp});

  // Interval t lies between points t-1 and t of the sorted axis.
  std::vector<int> points(dpos.begin(), dpos.end());
  points.push_back(lp);
  points.push_back(rp);
  std::sort(points.begin(), points.end());
  const std::size_t intervals = points.size() + 1;
  // A representative coordinate for each interval.
  std::vector<double> mid(intervals);
  mid[0] = points.front() - 1.0;
  mid[intervals - 1] = points.back() + 1.0;
  for (std::size_t t = 1; t + 1 < intervals; ++t) mid[t] = (points[t - 1] + points[t]) / 2.0;

  const auto signature = [&](const std::vector<Chord>& side, double x) {
    std::vector<bool> s(side.size());
    for (std::size_t i = 0; i < side.size(); ++i) s[i] = side[i].lo < x && x < side[i].hi;
    return s;
  };
  UnionFind uf(intervals);
  for (const auto* side : {&upper, &lower}) {
    std::map<std::vector<bool>, std::size_t> cell;
    for (std::size_t t = 0; t < intervals; ++t) {
      auto [it, fresh] = cell.emplace(signature(*side, mid[t]), t);
      if (!fresh) uf.unite(t, it->second);
    }
  }

  const auto inside_d = [&](double x) {
    int left = 0;
    for (int p : dpos) left += p < x;
    return left % 2 == 1;
  };
  const auto inside_c = [&](double x) { return lp < x && x < rp; };

  std::map<std::size_t, std::vector<int>> comps;
  for (std::size_t t = 0; t < intervals; ++t) {
    if (inside_d(mid[t]) && inside_c(mid[t])) comps.try_emplace(uf.find(t));
  }
  for (int p = 1; p <= n; ++p) {
    const double x = 4.0 * (start[static_cast<std::size_t>(p)] + p - 1);
    std::size_t t = 0;
    while (t < points.size() && points[t] < x) ++t;
    if (inside_d(x) && inside_c(x)) comps[uf.find(t)].push_back(p);
  }
  std::vector<std::vector<int>> out;
  for (auto& [_, punct] : comps) out.push_back(std::move(punct));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace braidsc
