#include "doctest.h"
#include "support.hpp"

#include "cellforms/convergence.hpp"
#include "cellforms/errors.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace cellforms;
using testing::poly;
using testing::word;

namespace {

// Interleavings by brute force: choose which positions hold the a-letters.
std::set<Word> brute_shuffle(const Word& a, const Word& b) {
  std::set<Word> out;
  const std::size_t len = a.size() + b.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << len); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountll(mask)) != a.size()) continue;
    Word w;
    std::size_t i = 0, j = 0;
    for (std::size_t k = 0; k < len; ++k) w.push_back((mask >> k) & 1 ? a[i++] : b[j++]);
    out.insert(w);
  }
  return out;
}

std::size_t factorial(int k) { return k <= 1 ? 1 : static_cast<std::size_t>(k) * factorial(k - 1); }

}  // namespace

TEST_CASE("labels parse and order") {
  CHECK(parse_label("0") == Label::zero());
  CHECK(parse_label("inf") == Label::infinity());
  CHECK(parse_label("∞") == Label::infinity());
  CHECK(parse_label("t3") == Label::var(3));
  CHECK(Label::zero() < Label::one());
  CHECK(Label::one() < Label::var(1));
  CHECK(Label::var(2) < Label::infinity());
  CHECK_THROWS_AS(parse_label("x"), DomainError);
  CHECK_THROWS_AS(parse_label("t0"), DomainError);
  for (int n = 4; n <= 7; ++n) {
    for (const Label& l : all_labels(n)) CHECK(Label::from_code(l.code(n), n) == l);
  }
}

TEST_CASE("canonicalize rotates infinity to the end") {
  CHECK(poly({"0", "1", "t1", "t2", "inf", "t3"}).str() == "(t3,0,1,t1,t2,inf)");
  CHECK(poly({"0", "t1", "t2", "1", "inf"}).str() == "(0,t1,t2,1,inf)");
  CHECK(poly({"inf", "0", "t1", "t2", "1"}).str() == "(0,t1,t2,1,inf)");
  CHECK_THROWS_AS(poly({"0", "0", "t1", "inf"}), MalformedPolygonError);
  CHECK_THROWS_AS(poly({"0", "1", "inf"}), MalformedPolygonError);
  CHECK_THROWS_AS(poly({"0", "1", "t2", "inf"}), MalformedPolygonError);
}

TEST_CASE("enumeration counts (n-1)!") {
  CHECK(enumerate_polygons(4).size() == 6);
  CHECK(enumerate_polygons(5).size() == 24);
  CHECK(enumerate_polygons(6).size() == 120);
  for (int n = 4; n <= 7; ++n) {
    const auto all = enumerate_polygons(n);
    CHECK(all.size() == factorial(n - 1));
    CHECK(std::set<Polygon>(all.begin(), all.end()).size() == all.size());
    for (const auto& p : all) CHECK(p[static_cast<std::size_t>(n - 1)] == Label::infinity());
  }
  CHECK_THROWS_AS(enumerate_polygons(3), DomainError);
}

TEST_CASE("shuffle") {
  const auto s = shuffle(word({"t1"}), word({"t2"}));
  REQUIRE(s.size() == 2);
  CHECK(s[0] == word({"t1", "t2"}));
  CHECK(s[1] == word({"t2", "t1"}));
  CHECK(shuffle(word({"t1", "t2"}), Word{}) == std::vector<Word>{word({"t1", "t2"})});
  CHECK(shuffle(word({"t1", "t2"}), word({"t3"})).size() == 3);
  CHECK_THROWS_AS(shuffle(word({"t1"}), word({"t1"})), DomainError);

  const Word a = word({"0", "t2", "t4"});
  const Word b = word({"t1", "1", "t3"});
  const auto fast = shuffle(a, b);
  CHECK(fast.size() == 20);
  CHECK(std::set<Word>(fast.begin(), fast.end()) == brute_shuffle(a, b));
}

TEST_CASE("permutation action") {
  const Polygon d5 = poly({"0", "t1", "t2", "1", "inf"});
  CHECK(act(Permutation::identity(5), d5) == d5);
  const auto swap = Permutation::from_map(5, {{Label::var(1), Label::var(2)}, {Label::var(2), Label::var(1)}});
  CHECK(act(swap, d5).str() == "(0,t2,t1,1,inf)");
  CHECK_THROWS_AS(Permutation::from_images(5, {0, 0, 2, 3, 4}), DomainError);
  CHECK_THROWS_AS(Permutation::from_map(5, {{Label::var(1), Label::var(2)}}), DomainError);

  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<int> s(6), t(6);
    for (int i = 0; i < 6; ++i) s[i] = t[i] = i;
    std::shuffle(s.begin(), s.end(), rng);
    std::shuffle(t.begin(), t.end(), rng);
    const auto sigma = Permutation::from_images(6, s);
    const auto tau = Permutation::from_images(6, t);
    const auto& all = enumerate_polygons(6);
    const Polygon& p = all[static_cast<std::size_t>(trial) % all.size()];
    CHECK(act(sigma.compose(tau), p) == act(sigma, act(tau, p)));
  }
}

TEST_CASE("reverse") {
  CHECK(reverse(poly({"0", "t1", "t2", "1", "inf"})).str() == "(1,t2,t1,0,inf)");
  CHECK(reverse(poly({"0", "t1", "1", "inf"})).str() == "(1,t1,0,inf)");
  for (const auto& p : enumerate_polygons(5)) CHECK(reverse(reverse(p)) == p);
}

TEST_CASE("chords") {
  const auto c5 = chords(poly({"0", "t1", "t2", "1", "inf"}));
  std::set<std::string> names;
  for (const auto& c : c5) names.insert(c.str());
  CHECK(names == std::set<std::string>{"(0,t1)", "(t1,t2)", "(1,t2)", "(1,inf)", "(0,inf)"});
  CHECK(chords(delta(6).polygon).size() == 9);
  for (const auto& p : enumerate_polygons(4)) CHECK(chords(p).size() == 2);
  const Polygon p = poly({"t2", "0", "1", "t1", "inf"});
  CHECK(common_chords(p, p) == chords(p));
  CHECK(common_chords(p, delta(5).polygon).empty());
  for (int n = 4; n <= 7; ++n) {
    for (const auto& q : enumerate_polygons(n)) CHECK(chords(q) == chords(reverse(q)));
  }
}

TEST_CASE("chord canonical side") {
  // ties go to the side without infinity
  const Chord c(word({"1", "inf", "t3"}), 6);
  CHECK(c.str() == "(0,t1,t2)");
  CHECK(c.finite_side() == word({"0", "t1", "t2"}));
  const Chord small(word({"t1", "t2", "t3", "1"}), 6);
  CHECK(small.str() == "(0,inf)");
  CHECK(small.finite_side() == word({"t1", "t2", "t3", "1"}));
}

TEST_CASE("polygon sums") {
  PolygonSum s;
  const Polygon p = poly({"0", "t1", "1", "inf"});
  s.add(p, 2);
  s.add(p, -2);
  CHECK(s.empty());
  s.add(p, testing::q("1/3"));
  CHECK((s * 3).terms().at(p) == 1);
  PolygonSum other(poly({"0", "1", "t1", "inf"}));
  CHECK_THROWS(other += PolygonSum(poly({"0", "1", "t1", "t2", "inf"})));
}
