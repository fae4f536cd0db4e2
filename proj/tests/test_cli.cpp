#include "doctest.h"

#include "cellforms/cli.hpp"

#include "json.hpp"

#include <sstream>

namespace {

struct Result {
  int code;
  nlohmann::json out;
  std::string text;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out;
  const int code = cellforms::cli::run(args, in, out);
  Result r{code, nullptr, out.str()};
  try {
    r.out = nlohmann::json::parse(r.text);
  } catch (const nlohmann::json::exception&) {
  }
  return r;
}

}  // namespace

TEST_CASE("enumerative commands") {
  const auto b = run({"basis01", "--n", "5"});
  CHECK(b.code == 0);
  CHECK(b.out.size() == 6);
  CHECK(run({"polygons", "--n", "4"}).out.size() == 6);
  CHECK(run({"ideal-gens", "--n", "5"}).out.size() == 7);
  CHECK(run({"polygons", "--n", "8"}).code == 2);
  CHECK(run({"polygons", "--n", "3"}).out["kind"] == "domain");
  CHECK(run({"frobnicate"}).code == 2);
}

TEST_CASE("zagier dims") {
  const auto r = run({"zagier-dims", "--N", "10"});
  CHECK(r.code == 0);
  CHECK(r.out == nlohmann::json::parse("[1,0,1,1,1,2,2,3,4,5,7]"));
}

TEST_CASE("cell form and shuffle") {
  const auto r = run({"cellform", "--polygon", R"(["0","1","t1","t3","inf","t2"])"});
  CHECK(r.code == 0);
  CHECK(r.out == nlohmann::json::parse(
                     R"([{"coeff":"1","sign":1,"factors":[["0","t2"],["t1","1"],["t3","t1"]]}])"));
  const auto from_stdin = run({"cellform"}, R"(["t2","0","1","t1","inf"])");
  CHECK(from_stdin.code == 0);
  const auto s = run({"shuffle", "--a", R"(["t1","t2"])", "--b", R"(["t3"])"});
  CHECK(s.out.size() == 3);
  CHECK(run({"cellform", "--polygon", R"(["0","0","t1","inf"])"}).code == 2);
}

TEST_CASE("malformed JSON gives a diagnostic") {
  const auto r = run({"reduce"}, "[{\"coeff\": ");
  CHECK(r.code == 2);
  CHECK(r.out["kind"] == "malformed-json");
  CHECK(r.out.contains("error"));
}

TEST_CASE("reduce") {
  const auto r = run({"reduce"}, R"([{"coeff":"1","polygon":["0","t1","1","inf"]}])");
  CHECK(r.code == 0);
  CHECK(r.out["coefficients"] == nlohmann::json::parse(R"(["-1","-1"])"));
}

TEST_CASE("integrate and fit") {
  const auto r = run({"integrate", "--tol", "1e-8"}, R"([{"coeff":"1","polygon":["t2","0","1","t1","inf"]}])");
  CHECK(r.code == 0);
  CHECK(std::fabs(r.out["value"].get<double>() - 1.6449340668482264) < 1e-8);
  CHECK(r.out["fit"]["found"] == true);
  CHECK(r.out["fit"]["terms"][0]["mzv"] == "zeta(2)");

  const auto divergent = run({"integrate"}, R"([{"coeff":"1","polygon":["0","1","t1","t2","inf"]}])");
  CHECK(divergent.code == 2);
  const auto stuck = run({"integrate", "--tol", "1e-15", "--levels", "2"},
                         R"([{"polygon":["0","1","t1","t2","inf","t3"]},{"polygon":["0","1","t2","t1","inf","t3"]}])");
  CHECK(stuck.code == 3);
  CHECK(stuck.out["kind"] == "no-convergence");

  const auto fit = run({"mzv-fit", "--value", "0.6010284515797971", "--weight", "3", "--max-den", "64"});
  CHECK(fit.code == 0);
  CHECK(fit.out["fit"]["terms"][0]["coeff"] == "1/2");
}

TEST_CASE("verify and determinism") {
  const auto v = run({"verify", "--n", "5"});
  CHECK(v.code == 0);
  CHECK(v.out["all_pass"] == true);
  CHECK(run({"delta-basis", "--n", "6"}).text == run({"delta-basis", "--n", "6"}).text);
  const auto db = run({"delta-basis", "--n", "5"});
  CHECK(db.out["report"]["status"] == "MATCH");
  CHECK(run({"convergent-basis", "--n", "5", "--seed", "4"}).out["dimension"] == 1);
}
