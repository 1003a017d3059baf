#include "braidsc/ouroboros.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <tuple>

#include <json.hpp>

namespace braidsc {

namespace {

void require_normalized(const CanonicalBraid& x) {
  if (x.inf() != 0 && x.inf() != 1) {
    throw std::invalid_argument("ouroboros detection needs inf in {0, 1}; apply reduce_center first");
  }
}

std::vector<RoundCurve> all_round_curves(int n) {
  std::vector<RoundCurve> out;
  for (int p = 1; p <= n; ++p) {
    for (int q = p + 1; q <= n && q - p + 1 < n; ++q) out.push_back({p, q});
  }
  return out;
}

// Punctures (1-based) enclosed by the image of a set of punctures.
std::set<int> image_of(const std::set<int>& punctures, const SimpleBraid& s, bool inverse) {
  const SimpleBraid pi = inverse ? s.inverse_permutation() : s;
  std::set<int> out;
  for (int p : punctures) out.insert(pi[p - 1] + 1);
  return out;
}

std::set<int> flipped(const std::set<int>& punctures, int n) {
  std::set<int> out;
  for (int p : punctures) out.insert(n + 1 - p);
  return out;
}

std::set<int> interval(const RoundCurve& c) {
  std::set<int> out;
  for (int p = c.p; p <= c.q; ++p) out.insert(p);
  return out;
}

// Image of c under the chain, if round. Per-factor transport settles most
// cases; a rotated chain need not be a normal form, so a curve can come back
// round through non-round intermediates, and those need the full diagrams.
std::optional<RoundCurve> round_after(const RoundCurve& c, const std::vector<CurveFactor>& chain, int n) {
  const auto t = transport_round(c, chain);
  if (!t.failed_at) return t.curves.back();
  auto d = GapDiagram::from_round(n, t.curves.back());
  for (std::size_t k = *t.failed_at; k < chain.size(); ++k) d = apply_factor(d, chain[k]);
  return d.as_round();
}

bool report_less(const OuroborosReport& a, const OuroborosReport& b) {
  return std::tie(a.kind, a.head_tail, a.base.p, a.base.q) < std::tie(b.kind, b.head_tail, b.base.p, b.base.q);
}

}  // namespace

std::vector<CurveFactor> cyclic_chain(const CanonicalBraid& x, int after, int before) {
  const int l = x.canonical_length();
  std::vector<CurveFactor> chain;
  int k = after;
  do {
    if (k == l) {
      chain.push_back(CurveFactor::delta(x.n(), x.inf()));
      k = 0;
    }
    ++k;
    if (k == before) break;
    chain.push_back(CurveFactor::of(x.factors()[static_cast<std::size_t>(k - 1)]));
  } while (true);
  return chain;
}

std::vector<OuroborosReport> find_round_ouroboroi(const CanonicalBraid& x, const OuroborosOptions& opts) {
  require_normalized(x);
  if (opts.shared_deficit < 1) throw std::invalid_argument("shared_deficit must be at least 1");
  std::vector<OuroborosReport> out;
  const int l = x.canonical_length();
  const int n = x.n();
  for (int i = 1; i <= l; ++i) {
    const auto chain = cyclic_chain(x, i, i);
    const auto& head = x.factors()[static_cast<std::size_t>(i - 1)];
    for (const auto& c : all_round_curves(n)) {
      const auto entry = round_after(c, chain, n);
      if (!entry) continue;
      const auto d = apply_simple(GapDiagram::from_round(n, *entry), head);
      const auto pieces = intersect_disks_with_round(d, c);
      const int m = c.q - c.p + 1;
      if (pieces.size() == 1 && static_cast<int>(pieces.front().size()) <= m - opts.shared_deficit) {
        out.push_back({OuroborosReport::Kind::round, c, m, {i}});
      }
    }
  }
  std::sort(out.begin(), out.end(), report_less);
  return out;
}

std::vector<OuroborosReport> find_eccentric_ouroboroi(const CanonicalBraid& x) {
  require_normalized(x);
  std::vector<OuroborosReport> out;
  const int l = x.canonical_length();
  const int n = x.n();
  if (l < 2) return out;
  for (int i = 1; i <= l; ++i) {
    // Head-tail factors x_i and x_{i+1}; across the end the second block is
    // Delta^inf x_1, with Delta^inf kept in place.
    const int next = i == l ? 1 : i + 1;
    const bool across = i == l;
    const auto chain = cyclic_chain(x, next, i);
    const auto& first = x.factors()[static_cast<std::size_t>(i - 1)];
    const auto& second = x.factors()[static_cast<std::size_t>(next - 1)];
    for (const auto& c : all_round_curves(n)) {
      const auto j = round_after(c, chain, n);
      if (!j) continue;
      // Punctures of c pulled back through the second block.
      auto back = image_of(interval(c), second, true);
      if (across && x.inf() % 2 != 0) back = flipped(back, n);
      // Punctures of the transported curve pushed through the first block.
      const auto forward = image_of(interval(*j), first, false);
      if (back == forward) {
        out.push_back({OuroborosReport::Kind::eccentric, c, c.q - c.p + 1, {i, next}});
      }
    }
  }
  std::sort(out.begin(), out.end(), report_less);
  return out;
}

std::vector<OuroborosReport> find_ouroboroi(const CanonicalBraid& x, const OuroborosOptions& opts) {
  auto out = find_round_ouroboroi(x, opts);
  const auto ecc = find_eccentric_ouroboroi(x);
  out.insert(out.end(), ecc.begin(), ecc.end());
  return out;
}

std::string ouroboroi_to_json(const std::vector<OuroborosReport>& reports) {
  auto arr = nlohmann::json::array();
  for (const auto& r : reports) {
    arr.push_back({{"kind", r.kind == OuroborosReport::Kind::round ? "round" : "eccentric"},
                   {"base", {r.base.p, r.base.q}},
                   {"m", r.m},
                   {"head_tail", r.head_tail}});
  }
  return arr.dump();
}

}  // namespace braidsc
