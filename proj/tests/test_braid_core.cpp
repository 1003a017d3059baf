#include <random>
#include <set>

#include "braidsc/braid.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace braidsc;
using braidsc::testing::artin;
using braidsc::testing::brute_prefix;
using braidsc::testing::random_word;
using braidsc::testing::same_braid;

namespace {

SimpleBraid simple(int n, std::initializer_list<int> gens) {
  std::vector<int> g(gens);
  return SimpleBraid::from_word(n, g);
}

CanonicalBraid nf(const char* text, int n) { return normal_form(parse_braid_word(text, n)); }

BraidWord word_of(const CanonicalBraid& x) { return x.to_word(); }

}  // namespace

TEST_CASE("word grammar") {
  const auto w = parse_braid_word("1 2 -3", 5);
  CHECK(w.letters == std::vector<BraidToken>{BraidToken::generator(1), BraidToken::generator(2),
                                             BraidToken::generator(-3)});
  const auto d = parse_braid_word("D . 1 3", 4);
  CHECK(d.letters == std::vector<BraidToken>{BraidToken::delta_power(1), BraidToken::generator(1),
                                             BraidToken::generator(3)});
  CHECK(parse_braid_word("D^-2.+1", 3).letters ==
        std::vector<BraidToken>{BraidToken::delta_power(-2), BraidToken::generator(1)});
  CHECK(parse_braid_word("  ", 3).letters.empty());

  CHECK_THROWS_AS(parse_braid_word("4", 4), ParseError);
  CHECK_THROWS_AS(parse_braid_word("1 0", 4), ParseError);
  CHECK_THROWS_AS(parse_braid_word("1 x", 4), ParseError);
  CHECK_THROWS_AS(parse_braid_word("D2", 4), ParseError);
  try {
    parse_braid_word("1 2 -9", 4);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 4);
  }
  CHECK(to_string(parse_braid_word("D^3 1 -2", 4)) == "D^3 1 -2");
}

TEST_CASE("simple braid basics") {
  CHECK(all_simple_braids(4).size() == 24);
  CHECK(all_simple_braids(5).size() == 120);
  CHECK(SimpleBraid::delta(4).length() == 6);
  CHECK(simple(4, {1, 2, 1}) == simple(4, {2, 1, 2}));
  CHECK_THROWS(simple(3, {1, 1}));
  for (const auto& s : all_simple_braids(5)) {
    CHECK(simple(5, {}) == SimpleBraid::identity(5));
    const auto w = s.word();
    CHECK(static_cast<int>(w.size()) == s.length());
    CHECK(SimpleBraid::from_word(5, w) == s);
  }
}

TEST_CASE("left_gcd examples") {
  const auto s = simple(4, {1, 2, 1});
  CHECK(left_gcd(s, s) == s);
  CHECK(left_gcd(simple(3, {1}), simple(3, {2})).is_identity());
  CHECK(left_gcd(simple(4, {1, 2}), simple(4, {1, 3})) == simple(4, {1}));
}

TEST_CASE("prefix lattice on B4 against brute force") {
  const auto all = all_simple_braids(4);
  for (const auto& a : all) {
    for (const auto& b : all) {
      CHECK(is_prefix(a, b) == brute_prefix(a, b, all));
    }
  }
  for (const auto& a : all) {
    for (const auto& b : all) {
      const auto g = left_gcd(a, b);
      CHECK(g == left_gcd(b, a));
      CHECK(brute_prefix(g, a, all));
      CHECK(brute_prefix(g, b, all));
      for (const auto& c : all) {
        if (brute_prefix(c, a, all) && brute_prefix(c, b, all)) CHECK(brute_prefix(c, g, all));
        CHECK(left_gcd(left_gcd(a, b), c) == left_gcd(a, left_gcd(b, c)));
      }
      CHECK(is_left_weighted(a, b) == left_gcd(right_complement(a), b).is_identity());
      if (brute_prefix(a, b, all)) {
        CHECK(compose_unchecked(a, prefix_quotient(a, b)) == b);
      }
    }
    CHECK(left_gcd(a, a) == a);
  }
}

TEST_CASE("complements and tau") {
  const auto id3 = SimpleBraid::identity(3);
  CHECK(right_complement(id3).is_delta());
  CHECK(right_complement(SimpleBraid::delta(3)).is_identity());
  CHECK(right_complement(simple(3, {1})) == simple(3, {2, 1}));

  CHECK(tau(simple(4, {1})) == simple(4, {3}));
  CHECK(tau(SimpleBraid::delta(4)).is_delta());
  CHECK(tau(simple(4, {1, 3})) == simple(4, {1, 3}));

  const auto all = all_simple_braids(5);
  for (const auto& s : all) {
    CHECK(tau(tau(s)) == s);
    CHECK(compose_unchecked(s, right_complement(s)).is_delta());
    CHECK(compose_unchecked(left_complement(s), s).is_delta());
    CHECK(s.length() + right_complement(s).length() == 10);
    // Delta^-1 s Delta as a braid.
    BraidWord w{5, {BraidToken::delta_power(-1)}};
    for (int g : s.word()) w.letters.push_back(BraidToken::generator(g));
    w.letters.push_back(BraidToken::delta_power(1));
    BraidWord t{5, {}};
    for (int g : tau(s).word()) t.letters.push_back(BraidToken::generator(g));
    CHECK(same_braid(w, t));
  }
}

TEST_CASE("left-weightedness examples") {
  CHECK(is_left_weighted(simple(3, {1}), simple(3, {1})));
  CHECK_FALSE(is_left_weighted(simple(3, {1}), simple(3, {2})));
  for (const auto& s : all_simple_braids(4)) CHECK(is_left_weighted(SimpleBraid::delta(4), s));
}

TEST_CASE("normal form examples") {
  const auto d = nf("1 2 1", 3);
  CHECK(d.inf() == 1);
  CHECK(d.canonical_length() == 0);
  CHECK(d.serialize() == "n=3 inf=1 |");

  const auto x = nf("2 2", 3);
  CHECK(x.inf() == 0);
  CHECK(x.factors() == std::vector<SimpleBraid>{simple(3, {2}), simple(3, {2})});
  CHECK(x.serialize() == "n=3 inf=0 | [1 3 2] | [1 3 2]");
  CHECK(CanonicalBraid::parse(x.serialize()) == x);

  const auto b = nf("1 3 1 3 1 3 1 2 3 4", 5);
  CHECK(b.inf() == 0);
  CHECK(b.sup() == 4);

  for (int n = 2; n <= 7; ++n) {
    BraidWord w{n, {}};
    for (int top = n - 1; top >= 1; --top) {
      for (int g = 1; g <= top; ++g) w.letters.push_back(BraidToken::generator(g));
    }
    const auto c = normal_form(w);
    CHECK(c.inf() == 1);
    CHECK(c.canonical_length() == 0);
  }
  CHECK_THROWS(CanonicalBraid::parse("n=3 inf=0 | [1 3 2] | [2 1 3]"));
  CHECK_THROWS(CanonicalBraid::parse("n=3 inf=0 | [3 2 1]"));
  CHECK_THROWS(CanonicalBraid::parse("inf=0 |"));
}

TEST_CASE("multiply, inverse, conjugate examples") {
  const auto s1 = nf("1", 3);
  const auto D = CanonicalBraid::delta_power(3, 1);
  CHECK(multiply(s1, CanonicalBraid::identity(3)) == s1);
  const auto dd = multiply(D, D);
  CHECK(dd.inf() == 2);
  CHECK(dd.canonical_length() == 0);
  CHECK(multiply(s1, nf("-1", 3)).is_trivial());

  CHECK(inverse(CanonicalBraid::identity(3)).is_trivial());
  CHECK(inverse(D) == CanonicalBraid::delta_power(3, -1));
  const auto a = nf("1 2", 3);
  const auto ai = inverse(a);
  CHECK(ai.inf() == -1);
  CHECK(multiply(ai, a).is_trivial());
  CHECK(multiply(a, ai).is_trivial());

  CHECK(conjugate(s1, CanonicalBraid::identity(3)) == s1);
  CHECK(conjugate(s1, CanonicalBraid::delta_power(3, 2)) == s1);
  // g^-1 x g with g = s2 s1 sends s1 to s2; g = s1 s2 sends s2 to s1.
  CHECK(conjugate(s1, nf("2 1", 3)) == nf("2", 3));
  CHECK(conjugate(nf("2", 3), nf("1 2", 3)) == s1);
  CHECK(same_braid(word_of(conjugate(s1, nf("1 2", 3))), parse_braid_word("-2 1 2", 3)));

  const auto x = nf("1 -2 3 3 -1 2", 4);
  const auto D4 = CanonicalBraid::delta_power(4, 1);
  CHECK(conjugate(conjugate(x, D4), D4) == x);
  CHECK(power(x, 3) == multiply(x, multiply(x, x)));
  CHECK(power(x, -2) == inverse(multiply(x, x)));
  CHECK(power(x, 0).is_trivial());
  CHECK(reduce_center(nf("D^5 1", 3)) == nf("D 1", 3));
  CHECK(reduce_center(nf("D^-3 1", 3)) == nf("D 1", 3));
  CHECK(exponent_sum(nf("D -1 -1 2", 3)) == 3 - 2 + 1);
}

TEST_CASE("normal form agrees with the Artin action on random words") {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 3 + trial % 4;
    const auto w = random_word(rng, n, 1 + trial % 10);
    const auto x = normal_form(w);
    CHECK(same_braid(word_of(x), w));
    for (std::size_t i = 0; i + 1 < x.factors().size(); ++i) {
      CHECK(is_left_weighted(x.factors()[i], x.factors()[i + 1]));
    }
    for (const auto& f : x.factors()) {
      CHECK_FALSE(f.is_identity());
      CHECK_FALSE(f.is_delta());
    }
    const auto y = normal_form(random_word(rng, n, 1 + trial % 7));
    CHECK(same_braid(word_of(multiply(x, y)), concat(word_of(x), word_of(y))));
    const auto g = normal_form(random_word(rng, n, 1 + trial % 5));
    CHECK(same_braid(word_of(conjugate(x, g)),
                     concat(concat(braidsc::testing::inverse_word(word_of(g)), word_of(x)),
                            word_of(g))));
  }
}

TEST_CASE("normal form idempotence and inverse cancellation") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 3000; ++trial) {
    const int n = 3 + trial % 5;
    const auto x = normal_form(random_word(rng, n, 1 + trial % 30));
    CHECK(normal_form(x.to_word()) == x);
    CHECK(CanonicalBraid::parse(x.serialize()) == x);
    CHECK(multiply(x, inverse(x)).is_trivial());
    CHECK(multiply(inverse(x), x).is_trivial());
    CHECK(exponent_sum(x) == exponent_sum(conjugate(x, normal_form(random_word(rng, n, 6)))));
  }
}

TEST_CASE("conjugate_by_simple matches general conjugation") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 3 + trial % 4;
    const auto x = normal_form(random_word(rng, n, 2 + trial % 15));
    const auto all = all_simple_braids(n);
    const auto& s = all[static_cast<std::size_t>(trial * 7919) % all.size()];
    CHECK(conjugate_by_simple(x, s) == conjugate(x, CanonicalBraid::from_simple(s)));
  }
}

TEST_CASE("cycling and sliding") {
  CHECK(cycle(CanonicalBraid::delta_power(3, 2), CycleDirection::forward).result ==
        CanonicalBraid::delta_power(3, 2));
  CHECK(preferred_prefix(nf("1", 3)).is_identity());
  CHECK(preferred_prefix(CanonicalBraid::delta_power(3, 1)).is_identity());
  CHECK(is_rigid(CanonicalBraid::delta_power(4, 1)));

  // A rigid braid cycles by rotating its factors.
  const auto r = nf("1 3 . 1 2 3 2 1 . 1 2 3 2 . 2 3 2 1", 4);
  REQUIRE(r.inf() == 0);
  REQUIRE(r.canonical_length() == 4);
  REQUIRE(is_rigid(r));
  {
    const auto c = cycle(r, CycleDirection::forward).result;
    const auto& f = r.factors();
    CHECK(c.factors() == std::vector<SimpleBraid>{f[1], f[2], f[3], f[0]});
    CHECK(cycle(c, CycleDirection::backward).result == r);
  }

  // Sliding can fix a non-rigid braid when the prefix commutes with it.
  const auto fixed = nf("1 4 1", 5);
  CHECK_FALSE(is_rigid(fixed));
  CHECK(preferred_prefix(fixed) == simple(5, {4}));
  CHECK(cyclic_sliding(fixed).result == fixed);

  std::mt19937 rng(1234);
  int rigid_seen = 0;
  for (int trial = 0; trial < 600; ++trial) {
    const int n = 3 + trial % 4;
    auto x = normal_form(random_word(rng, n, 1 + trial % 20, trial % 3 == 0));
    for (auto dir : {CycleDirection::forward, CycleDirection::backward}) {
      const auto [y, g] = cycle(x, dir);
      CHECK(conjugate(x, g) == y);
    }
    const auto [y, g] = cyclic_sliding(x);
    CHECK(conjugate(x, g) == y);
    if (is_rigid(x)) CHECK(y == x);
    CHECK(preferred_prefix(x).is_identity() == is_rigid(x));
    rigid_seen += is_rigid(x) ? 1 : 0;
    // Iterating sliding reaches a rigid braid or a cycle of equal inf/sup.
    for (int i = 0; i < 40; ++i) x = cyclic_sliding(x).result;
    const auto z = cyclic_sliding(x).result;
    CHECK(z.inf() >= x.inf());
    CHECK(z.sup() <= x.sup());
    const auto cz = cycle(x, CycleDirection::forward).result;
    CHECK(cz.inf() >= x.inf());
  }
  CHECK(rigid_seen > 0);
}
