#include "doctest.h"
#include "support.hpp"

#include "cellforms/errors.hpp"
#include "cellforms/ideal.hpp"

using namespace cellforms;
using testing::poly;
using testing::word;

TEST_CASE("generator counts") {
  CHECK(ideal_generators(4).size() == 3);
  CHECK(ideal_generators(5).size() == 7);
  CHECK(ideal_generators(6).size() == 15);
  CHECK(ideal_generators(7).size() == 31);
  for (int n = 4; n <= 7; ++n) CHECK(ideal_generators(n).size() == ((std::size_t{1} << (n - 1)) - 2) / 2);
}

TEST_CASE("generator for A=(t1), B=(0,t2,1)") {
  const PolygonSum g = shuffle_relation(Label::infinity(), {word({"t1"}), word({"0", "t2", "1"})}, 5);
  CHECK(g.size() == 4);
  for (const auto& [p, c] : g.terms()) CHECK(c == 1);
  const auto gens = ideal_generators(5);
  CHECK(std::find(gens.begin(), gens.end(), g) != gens.end());
}

TEST_CASE("shuffle relations at other points") {
  CHECK(shuffle_relation(Label::zero(), {word({"t1"}), word({"t2", "1", "inf"})}, 5).size() == 4);
  CHECK(shuffle_relation(Label::one(), {word({"t1"}), word({"0", "inf"})}, 4).size() == 3);
  CHECK_THROWS_AS(shuffle_relation(Label::one(), {word({"t1"}), word({"0", "1"})}, 4), DomainError);
  CHECK_THROWS_AS(shuffle_relation(Label::one(), {word({"t1"}), word({"0"})}, 4), DomainError);
}

TEST_CASE("the ideal lies in the kernel") {
  for (int n = 4; n <= 7; ++n) {
    const KernelReport r = verify_kernel(n, 0);
    CHECK(r.ok());
    CHECK(r.points == 20);
    CHECK(r.max_abs_value == 0);
  }
  for (int n = 4; n <= 6; ++n) {
    std::vector<FormSum> gens;
    for (const auto& g : ideal_generators(n)) gens.push_back(to_forms(g));
    CHECK(rank(gens, 0) == 0);
  }
}

TEST_CASE("shuffles with respect to any point vanish as forms") {
  for (int n = 4; n <= 6; ++n) {
    const auto xs = random_points(n, 10, 21);
    for (const Label& x : all_labels(n)) {
      // partitions of the remaining points, A containing the smallest
      Word rest;
      for (const Label& l : all_labels(n)) {
        if (l != x) rest.push_back(l);
      }
      for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << rest.size()) - 1; mask += 2) {
        Partition2 part;
        for (std::size_t i = 0; i < rest.size(); ++i) ((mask >> i) & 1 ? part.a : part.b).push_back(rest[i]);
        const FormSum f = to_forms(shuffle_relation(x, part, n));
        for (const auto& pt : xs) CHECK(evaluate(f, pt) == 0);
      }
    }
  }
}

TEST_CASE("reduction to the 01-basis") {
  const Polygon b = poly({"t1", "0", "1", "t2", "inf"});
  const auto basis = basis01(5);
  const auto unit = reduce_to_01(b, 0);
  for (std::size_t i = 0; i < basis.size(); ++i) CHECK(unit[i] == (basis[i] == b ? 1 : 0));

  const Polygon p = poly({"0", "t1", "1", "t2", "inf"});
  const auto v = reduce_to_01(p, 0);
  const FormSum rebuilt = combine(basis01_forms(5), v);
  for (const auto& x : random_points(5, 8, 0x77)) CHECK(evaluate(rebuilt, x) == evaluate(FormSum(cell_form(p)), x));

  // n=4: 1/(t(1-t)) = 1/t + 1/(1-t); (0,1,t1,inf) = 1/(t1-1), (t1,0,1,inf) = -1/t1
  const auto w = reduce_to_01(poly({"0", "t1", "1", "inf"}), 0);
  REQUIRE(w.size() == 2);
  CHECK(w[0] == -1);
  CHECK(w[1] == -1);
}

TEST_CASE("reduction is a projection and covers every polygon") {
  for (int n = 4; n <= 6; ++n) {
    const Reducer r(n, 0);
    const auto fresh = random_points(n, 8, 0x1234);
    for (const auto& p : enumerate_polygons(n)) {
      const auto c = r.reduce(p);
      const FormSum rebuilt = combine(r.basis_forms(), c);
      for (const auto& x : fresh) CHECK(evaluate(rebuilt, x) == evaluate(cell_form(p), x));
      CHECK(r.reduce(rebuilt) == c);
    }
  }
  const Reducer r(5, 0);
  for (const auto& g : ideal_generators(5)) {
    for (const auto& c : r.reduce(g)) CHECK(c == 0);
  }
}
