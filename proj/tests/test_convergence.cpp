#include "doctest.h"
#include "support.hpp"

#include "cellforms/convergence.hpp"
#include "cellforms/errors.hpp"

#include <random>

using namespace cellforms;
using testing::form;
using testing::poly;
using testing::word;

namespace {

Chord chord(std::initializer_list<const char*> side, int n) { return Chord(word(side), n); }

}  // namespace

TEST_CASE("standard cell") {
  CHECK(delta(5).polygon.str() == "(0,t1,t2,1,inf)");
  CHECK(delta(4).polygon.str() == "(0,t1,1,inf)");
  CHECK(delta(6).chords().size() == 9);
  CHECK(delta(7).chords().size() == 14);  // n(n-3)/2 diagonals
}

TEST_CASE("chord criterion on 01-polygons") {
  CHECK(converges_01(poly({"t2", "0", "1", "t1", "inf"})));
  CHECK_FALSE(converges_01(poly({"0", "1", "t1", "t2", "inf"})));
  CHECK_THROWS_AS(converges_01(poly({"0", "t1", "1", "t2", "inf"})), DomainError);
  std::size_t census = 0;
  for (const auto& p : basis01(5)) census += converges_01(p) ? 1 : 0;
  CHECK(census == 1);
}

TEST_CASE("pole orders") {
  const FormSum good = form({"t2", "0", "1", "t1", "inf"});
  for (const auto& c : delta(5).chords()) {
    const auto o = pole_order(good, c, 0);
    CHECK(integrable(o));
  }
  const FormSum d5 = form({"0", "t1", "t2", "1", "inf"});
  const auto o = pole_order(d5, chord({"0", "t1"}, 5), 0);
  REQUIRE(o);
  CHECK(*o == -1);
  CHECK_FALSE(pole_order(FormSum(5), chord({"0", "t1"}, 5), 0).has_value());
  CHECK_THROWS_AS(pole_order(good, chord({"0", "t2"}, 5), 0), DomainError);
}

TEST_CASE("pole orders are chart independent") {
  for (int n = 4; n <= 6; ++n) {
    for (const auto& p : basis01(n)) {
      const FormSum f(cell_form(p));
      for (const auto& c : delta(n).chords()) {
        const auto a = pole_order_in_chart(f, make_chart(c, 1));
        const auto b = pole_order_in_chart(f, make_chart(c, 2));
        CHECK(a == b);
      }
    }
  }
}

TEST_CASE("pole order of a sum is at least the minimum") {
  std::mt19937 rng(9);
  const auto basis = basis01_forms(6);
  for (int trial = 0; trial < 40; ++trial) {
    const FormSum& f = basis[rng() % basis.size()];
    const FormSum& g = basis[rng() % basis.size()];
    for (const auto& c : delta(6).chords()) {
      const auto of = pole_order(f, c, 3);
      const auto og = pole_order(g, c, 3);
      const auto os = pole_order(f + g, c, 3);
      const int inf = 1 << 20;
      const int vf = of.value_or(inf), vg = og.value_or(inf), vs = os.value_or(inf);
      CHECK(vs >= std::min(vf, vg));
      if (vf != vg) CHECK(vs == std::min(vf, vg));
    }
  }
}

TEST_CASE("chord criterion agrees with the analytic test") {
  for (int n = 5; n <= 6; ++n) {
    for (const auto& p : basis01(n)) {
      if (converges_01(p)) CHECK(converges_on_delta(FormSum(cell_form(p)), 0));
    }
  }
}

TEST_CASE("analytic convergence of the worked insertion form") {
  const FormSum omega = form({"0", "1", "t1", "t2", "inf", "t3"}) + form({"0", "1", "t2", "t1", "inf", "t3"});
  CHECK(converges_on_delta(omega, 0));
  CHECK_FALSE(converges_on_delta(form({"0", "1", "t1", "t2", "inf", "t3"}), 0));
  CHECK(converges_on_delta(FormSum(6), 0));
}

TEST_CASE("convergent subspaces") {
  // dt/t and dt/(t-1) both diverge on (0,1)
  CHECK(convergent_subspace(4, 0).dimension() == 0);
  const auto s5 = convergent_subspace(5, 0);
  CHECK(s5.dimension() == 1);
  const auto s6 = convergent_subspace(6, 0);
  CHECK(s6.dimension() == 4);
  for (const auto& f : s6.forms) CHECK(converges_on_delta(f, 17));
  // re-verify the residue constraints on fresh charts
  for (const auto& c : delta(6).chords()) {
    for (std::uint64_t s = 100; s < 108; ++s) {
      const auto row = residue_row(s6.forms, make_chart(c, s));
      for (const auto& v : row) CHECK(v == 0);
    }
  }
  CHECK_THROWS_AS(convergent_subspace(8, 0), DomainError);
}
