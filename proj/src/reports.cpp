#include "cellforms/reports.hpp"

#include "cellforms/convergence.hpp"
#include "cellforms/errors.hpp"
#include "cellforms/ideal.hpp"
#include "cellforms/insertion.hpp"

#include <algorithm>

namespace cellforms {

namespace {

std::size_t factorial(int k) { return k <= 1 ? 1 : static_cast<std::size_t>(k) * factorial(k - 1); }

Json polygon_list(const std::vector<Polygon>& ps) {
  Json list = Json::array();
  for (const auto& p : ps) list.push_back(to_json(p));
  return list;
}

}  // namespace

void check_enumerative_n(int n) {
  if (n < 4 || n > 7) throw DomainError("n must be in 4..7, got " + std::to_string(n));
}

Json polygons_report(int n) {
  check_enumerative_n(n);
  return polygon_list(enumerate_polygons(n));
}

Json basis01_report(int n) {
  check_enumerative_n(n);
  return polygon_list(basis01(n));
}

Json ideal_generators_report(int n) {
  check_enumerative_n(n);
  Json list = Json::array();
  for (const auto& g : ideal_generators(n)) list.push_back(to_json(g));
  return list;
}

Json reduce_report(const PolygonSum& s, std::uint64_t seed) {
  if (s.empty()) throw DomainError("cannot infer n from an empty PolygonSum");
  check_enumerative_n(s.n());
  const Reducer reducer(s.n(), seed);
  Json coeffs = Json::array();
  for (const auto& c : reducer.reduce(s)) coeffs.push_back(to_string(c));
  return Json{{"n", s.n()}, {"basis", polygon_list(reducer.basis())}, {"coefficients", std::move(coeffs)}};
}

Json pole_report(const FormSum& f, std::uint64_t seed) {
  Json orders = Json::array();
  std::uint64_t salt = 0;
  for (const Chord& c : delta(f.n()).chords()) {
    const PoleOrder o = pole_order(f, c, derive_seed(seed, salt++));
    orders.push_back(Json{{"chord", to_json(c)}, {"order", o ? Json(*o) : Json("inf")}});
  }
  return orders;
}

Json convergent_basis_report(int n, std::uint64_t seed) {
  check_enumerative_n(n);
  const auto sub = convergent_subspace(n, seed);
  Json forms = Json::array();
  for (const auto& f : sub.forms) forms.push_back(Json{{"form", to_json(f)}, {"pole_orders", pole_report(f, seed)}});
  Json constraints = Json::array();
  for (const auto& [c, k] : sub.constraint_rank) constraints.push_back(Json{{"chord", to_json(c)}, {"new_constraints", k}});
  return Json{{"n", n},
              {"dimension", sub.dimension()},
              {"forms", std::move(forms)},
              {"constraints", std::move(constraints)},
              {"charts", sub.charts_used}};
}

Json insertion_forms_report(int n, std::uint64_t seed) {
  check_enumerative_n(n);
  Json list = Json::array();
  if (n < 5) return list;
  for (const auto& f : insertion_forms(n, seed)) {
    list.push_back(Json{{"spec", f.spec.str()}, {"polygons", to_json(f.polygons)}, {"form", to_json(f.form)}});
  }
  return list;
}

Json delta_basis_report(int n, std::uint64_t seed) {
  check_enumerative_n(n);
  const DeltaBasis db = delta_basis(n, seed);
  Json forms = Json::array();
  for (const auto& e : db.elements) {
    forms.push_back(Json{{"origin", e.origin}, {"polygons", to_json(e.polygons)}, {"form", to_json(e.form)}});
  }
  const auto& r = db.report;
  return Json{{"n", r.n},
              {"forms", std::move(forms)},
              {"report",
               Json{{"status", r.status()},
                    {"convergent_01", r.convergent_01},
                    {"insertion", r.insertion},
                    {"rank", r.rank},
                    {"subspace_dimension", r.subspace_dimension},
                    {"contained_in_subspace", r.contained},
                    {"sound", r.sound()},
                    {"generator", "bounded-depth insertion enumeration (depth <= 2)"}}}};
}

Json integrate_report(const FormSum& f, const QuadratureSpec& q, std::uint64_t seed) {
  const IntegrationResult r = integrate(f, q, seed);
  const int weight = f.n() - 3;
  Json fit = nullptr;
  if (weight >= 2 && weight <= 5) fit = to_json(fit_mzv(r.value, weight, 64, std::max(q.tolerance, r.error)));
  return Json{{"value", r.value}, {"error", r.error}, {"nodes_per_axis", r.nodes_per_axis}, {"fit", std::move(fit)}};
}

Json verify_report(int n, std::uint64_t seed) {
  check_enumerative_n(n);
  Json checks = Json::array();
  bool all_pass = true;
  auto record = [&](const std::string& name, bool pass, Json detail) {
    all_pass = all_pass && pass;
    checks.push_back(Json{{"check", name}, {"pass", pass}, {"detail", std::move(detail)}});
  };
  const std::size_t expected = factorial(n - 2);

  const KernelReport kernel = verify_kernel(n, seed);
  record("shuffle ideal maps to zero", kernel.ok(),
         Json{{"generators", kernel.generators}, {"points", kernel.points}, {"max_abs", to_string(kernel.max_abs_value)}});

  std::vector<FormSum> all;
  for (const auto& p : enumerate_polygons(n)) all.emplace_back(cell_form(p));
  const std::size_t rank_all = rank(all, seed);
  record("rank of all cell forms", rank_all == expected, Json{{"rank", rank_all}, {"expected", expected}});

  const std::size_t rank01 = rank(basis01_forms(n), seed);
  record("rank of 01-basis", rank01 == expected, Json{{"rank", rank01}, {"expected", expected}});

  const Reducer reducer(n, seed);
  std::size_t reduced = 0;
  for (const auto& p : enumerate_polygons(n)) {
    try {
      reducer.reduce(p);
      ++reduced;
    } catch (const InternalError&) {
    }
  }
  record("every polygon reduces to the 01-basis", reduced == factorial(n - 1),
         Json{{"reduced", reduced}, {"polygons", factorial(n - 1)}});

  bool agree = true;
  std::size_t convergent = 0;
  for (const auto& p : basis01(n)) {
    if (!converges_01(p)) continue;
    ++convergent;
    agree = agree && converges_on_delta(FormSum(cell_form(p)), seed);
  }
  record("chord criterion implies analytic convergence", agree, Json{{"convergent_01", convergent}});

  const DeltaBasis db = delta_basis(n, seed);
  record("convergent basis certification", db.report.match(),
         Json{{"status", db.report.status()},
              {"rank", db.report.rank},
              {"subspace_dimension", db.report.subspace_dimension}});
  return Json{{"n", n}, {"all_pass", all_pass}, {"checks", std::move(checks)}};
}

}  // namespace cellforms
