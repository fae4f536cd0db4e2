#include "doctest.h"
#include "support.hpp"

#include "cellforms/convergence.hpp"
#include "cellforms/errors.hpp"
#include "cellforms/insertion.hpp"

using namespace cellforms;
using testing::form;
using testing::poly;

namespace {

InsertionEntry leaf(const char* l) { return InsertionEntry{parse_label(l)}; }

InsertionEntry block(std::vector<InsertionEntry> a, std::vector<InsertionEntry> b) {
  return InsertionEntry{ShuffleBlock{std::move(a), std::move(b)}};
}

InsertionSpec worked_example() {
  return InsertionSpec{6, {leaf("0"), leaf("1"), block({leaf("t1")}, {leaf("t2")}), leaf("inf"), leaf("t3")}};
}

}  // namespace

TEST_CASE("the worked insertion form expands to two terms") {
  const InsertionForm f = expand_insertion(worked_example(), 0);
  CHECK(f.polygons.size() == 2);
  CHECK(f.polygons.terms().count(poly({"0", "1", "t1", "t2", "inf", "t3"})) == 1);
  CHECK(f.polygons.terms().count(poly({"0", "1", "t2", "t1", "inf", "t3"})) == 1);
  for (const auto& [p, c] : f.polygons.terms()) CHECK(c == 1);
  CHECK(converges_on_delta(f.form, 0));
  CHECK(worked_example().str() == "[0,1,(t1 ш t2),inf,t3]");
}

TEST_CASE("a block with an empty factor is the host itself") {
  const InsertionSpec spec{5, {leaf("t2"), leaf("0"), leaf("1"), block({leaf("t1")}, {}), leaf("inf")}};
  const InsertionForm f = expand_insertion(spec, 0);
  CHECK(f.polygons == PolygonSum(poly({"t2", "0", "1", "t1", "inf"})));
}

TEST_CASE("expansion of nested blocks") {
  const auto words = expand_words({leaf("0"), block({leaf("t1"), block({leaf("t2")}, {leaf("t3")})}, {leaf("t4")})});
  // (t1 (t2 ш t3)) ш t4: 2 inner words of length 3 each shuffled with one letter
  CHECK(words.size() == 8);
}

TEST_CASE("divergent or malformed insertions are rejected") {
  // host t1 replaced by (t1 ш t2) inside the standard cell itself diverges
  const InsertionSpec bad{6, {leaf("0"), block({leaf("t1")}, {leaf("t2")}), leaf("t3"), leaf("1"), leaf("inf")}};
  CHECK_THROWS_AS(expand_insertion(bad, 0), DivergentInsertionError);
  const InsertionSpec open{6, {leaf("0"), leaf("1"), block({leaf("t1")}, {leaf("t2")}), leaf("t3"), leaf("inf")}};
  CHECK_THROWS_AS(expand_insertion(open, 0), DivergentInsertionError);
  const InsertionSpec dup{5, {leaf("0"), leaf("1"), block({leaf("t1")}, {leaf("t1")}), leaf("inf")}};
  CHECK_THROWS_AS(expand_insertion(dup, 0), DomainError);
}

TEST_CASE("insertion forms") {
  CHECK(insertion_forms(5, 0).empty());
  const auto six = insertion_forms(6, 0);
  CHECK_FALSE(six.empty());
  for (const auto& f : six) {
    CHECK(converges_on_delta(f.form, 5));
    for (const auto& [p, c] : f.polygons.terms()) {
      CHECK(c == 1);
      CHECK(p.is_01());
    }
    CHECK(to_forms(f.polygons) == f.form);
  }
}

TEST_CASE("the worked example lies in the span of the n=6 basis") {
  const DeltaBasis db = delta_basis(6, 0);
  std::vector<FormSum> forms;
  for (const auto& e : db.elements) forms.push_back(e.form);
  CHECK(express_in_basis(expand_insertion(worked_example(), 0).form, forms, 0).has_value());
}

TEST_CASE("delta basis certification") {
  const auto d4 = delta_basis(4, 0);
  CHECK(d4.report.match());
  CHECK(d4.elements.empty());
  const auto d5 = delta_basis(5, 0);
  CHECK(d5.report.match());
  CHECK(d5.elements.size() == 1);
  CHECK(d5.report.rank == 1);
  const auto d6 = delta_basis(6, 0);
  CHECK(d6.report.sound());
  CHECK(d6.report.match());
  CHECK(d6.report.status() == "MATCH");
  std::vector<FormSum> forms;
  for (const auto& e : d6.elements) {
    CHECK(converges_on_delta(e.form, 2));
    forms.push_back(e.form);
  }
  CHECK(rank(forms, 4) == forms.size());
  CHECK(convergent_01_polygons(6).size() == d6.report.convergent_01);
}
