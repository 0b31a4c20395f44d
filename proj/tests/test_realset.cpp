#include <doctest.h>

#include "testutil.hpp"

using namespace extlab;
using testutil::Rng;

namespace {

RealSet S(const std::string& text) { return parse_realset(text); }

}  // namespace

TEST_CASE("canonicalize merges and normalizes") {
  CHECK(to_string(canonicalize({Interval::right_open(Rat(0), Rat(1)),
                                Interval::closed(Rat(1), Rat(2))})) == "[0,2]");
  CHECK(RealSet().is_empty());
  CHECK(canonicalize({}) == RealSet());
  CHECK(to_string(S("(0,1) U (1,2)")) == "(0,1) U (1,2)");  // 1 excluded by both
  CHECK(S("[0,1] U [1,2]") == S("[0,2]"));
  CHECK(S("(0,1] U (1,2)") == S("(0,2)"));
  CHECK(S("[0,5] U [1,2]") == S("[0,5]"));
  CHECK(S("{1} U (1,2)") == S("[1,2)"));
}

TEST_CASE("malformed intervals are rejected") {
  CHECK_THROWS_AS(canonicalize({Interval::closed(Rat(2), Rat(1))}), std::invalid_argument);
  CHECK_THROWS_AS(canonicalize({Interval::open(Rat(1), Rat(1))}), std::invalid_argument);
  CHECK_THROWS_AS(canonicalize({Interval::left_open(Rat(1), Rat(1))}), std::invalid_argument);
}

TEST_CASE("boolean operations match the spec examples") {
  CHECK(complement(S("(0,1)")) == S("(-inf,0] U [1,inf)"));
  CHECK(intersect(S("[0,2]"), S("[1,3]")) == S("[1,2]"));
  CHECK(union_of(RealSet(), S("[0,1]")) == S("[0,1]"));
  CHECK(difference(S("[0,3]"), S("(1,2)")) == S("[0,1] U [2,3]"));
}

TEST_CASE("contains respects inclusion flags") {
  CHECK_FALSE(S("[0,1)").contains(Rat(1)));
  CHECK(S("{5}").contains(Rat(5)));
  CHECK(S("(-inf,0]").contains(Rat(-1000000)));
  CHECK_FALSE(S("(0,1)").contains(Rat(0)));
}

TEST_CASE("closure, interior and the predicates") {
  CHECK(closure(S("(0,1)")) == S("[0,1]"));
  CHECK(is_closed(S("[0,1] U {3}")));
  CHECK(interior(S("{0}")).is_empty());
  CHECK(interior(S("[0,1]")) == S("(0,1)"));
  CHECK(is_open(S("(0,1) U (2,3)")));
  CHECK_FALSE(is_open(S("[0,1)")));
  CHECK_FALSE(is_closed(S("[0,1)")));
  CHECK(closure(S("[0,1) U (1,2]")) == S("[0,2]"));
}

TEST_CASE("fsigma decomposition follows the shrink rule") {
  CHECK(fsigma_decomposition(S("(0,1)"), 4) == S("[1/4,3/4]"));
  CHECK(fsigma_decomposition(S("[0,1]"), 1) == S("[0,1]"));
  CHECK(fsigma_decomposition(S("[0,1]"), 7) == S("[0,1]"));
  CHECK(fsigma_decomposition(S("(0,inf)"), 2) == S("[1/2,inf)"));
  CHECK(fsigma_decomposition(S("(0,1)"), 1) == S("{1/2}"));  // midpoint collapse
  CHECK(fsigma_decomposition(S("[0,1)"), 1) == S("[0,1/2]"));
  CHECK_THROWS_AS(fsigma_decomposition(S("[0,1]"), 0), std::invalid_argument);
}

TEST_CASE("gdelta codecomposition complements the decomposition") {
  CHECK(gdelta_codecomposition(S("(0,1)"), 4) == S("(-inf,0] U [1,inf)"));
  CHECK(gdelta_codecomposition(S("[0,1]"), 4) == S("(-inf,-1/4] U [5/4,inf)"));
  CHECK(gdelta_codecomposition(RealSet::line(), 3).is_empty());
}

TEST_CASE("membership oracle agreement over random pairs") {
  Rng rng(0xA11CE);
  for (int iter = 0; iter < 60; ++iter) {
    RealSet s = testutil::random_set(rng, 4);
    RealSet t = testutil::random_set(rng, 4);
    RealSet u = union_of(s, t), i = intersect(s, t), d = difference(s, t), c = complement(s);
    for (int k = 0; k < 50; ++k) {
      Rat x = testutil::random_rational(rng);
      bool in_s = s.contains(x), in_t = t.contains(x);
      CHECK(u.contains(x) == (in_s || in_t));
      CHECK(i.contains(x) == (in_s && in_t));
      CHECK(d.contains(x) == (in_s && !in_t));
      CHECK(c.contains(x) == !in_s);
    }
  }
}

TEST_CASE("canonicalize is idempotent and canonical forms are unique") {
  Rng rng(0xBEEF);
  for (int iter = 0; iter < 200; ++iter) {
    RealSet s = testutil::random_set(rng, 5);
    CHECK(canonicalize(s.pieces()) == s);
    // Shatter s into overlapping fragments; the canonical form must return.
    std::vector<Interval> fragments;
    for (const auto& p : s.pieces()) {
      fragments.push_back(p);
      if (!p.is_singleton() && p.lo.value.finite() && p.hi.value.finite()) {
        Rat mid = (p.lo.value.value + p.hi.value.value) / 2;
        fragments.push_back(Interval{p.lo, {ExtRat(mid), true}});
        fragments.push_back(Interval{{ExtRat(mid), true}, p.hi});
      }
    }
    CHECK(canonicalize(std::move(fragments)) == s);
  }
}

TEST_CASE("complement is involutive and De Morgan holds canonically") {
  Rng rng(0xD0);
  for (int iter = 0; iter < 100; ++iter) {
    RealSet s = testutil::random_set(rng, 4);
    RealSet t = testutil::random_set(rng, 4);
    CHECK(complement(complement(s)) == s);
    CHECK(complement(union_of(s, t)) == intersect(complement(s), complement(t)));
    CHECK(complement(intersect(s, t)) == union_of(complement(s), complement(t)));
  }
}

TEST_CASE("decomposition chains: closed, monotone, exhaustive, disjoint") {
  Rng rng(0xF00D);
  for (int iter = 0; iter < 40; ++iter) {
    RealSet a = testutil::random_set(rng, 4);
    RealSet prev_f, prev_g;
    std::vector<RealSet> fs, gs;
    for (int n = 1; n <= 10; ++n) {
      RealSet fn = fsigma_decomposition(a, n);
      RealSet gn = gdelta_codecomposition(a, n);
      CHECK(is_closed(fn));
      CHECK(is_closed(gn));
      CHECK(subset_of(prev_f, fn));
      CHECK(subset_of(prev_g, gn));
      CHECK(subset_of(fn, a));
      CHECK(subset_of(gn, complement(a)));
      prev_f = fn;
      prev_g = gn;
      fs.push_back(std::move(fn));
      gs.push_back(std::move(gn));
    }
    for (const auto& fj : fs)
      for (const auto& gk : gs) CHECK(intersect(fj, gk).is_empty());

    // Coverage bound: a member at distance d from the nearest excluded
    // endpoint of its piece lies in F_n for n = ceil(1/d)+1.
    for (int k = 0; k < 20; ++k) {
      Rat x = testutil::random_member(rng, a);
      if (!a.contains(x)) continue;
      const Interval* piece = nullptr;
      for (const auto& p : a.pieces())
        if (p.contains(x)) piece = &p;
      REQUIRE(piece != nullptr);
      std::vector<Rat> dists;
      if (piece->lo.value.finite() && !piece->lo.included)
        dists.push_back(x - piece->lo.value.value);
      if (piece->hi.value.finite() && !piece->hi.included)
        dists.push_back(piece->hi.value.value - x);
      int n = 1;
      if (!dists.empty()) {
        Rat d = *std::min_element(dists.begin(), dists.end());
        n = testutil::inv_ceil(d) + 1;
      }
      CHECK(fsigma_decomposition(a, n).contains(x));
    }
  }
}

TEST_CASE("set notation round-trips") {
  Rng rng(0xCAFE);
  for (int iter = 0; iter < 150; ++iter) {
    RealSet s = testutil::random_set(rng, 5);
    CHECK(parse_realset(to_string(s)) == s);
  }
  CHECK(parse_realset("empty").is_empty());
  CHECK(to_string(RealSet()) == "empty");
  CHECK(parse_realset(to_string(RealSet::line())) == RealSet::line());
}
