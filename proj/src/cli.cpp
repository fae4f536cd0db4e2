#include "cellforms/cli.hpp"

#include "cellforms/errors.hpp"
#include "cellforms/json_io.hpp"
#include "cellforms/reports.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <functional>
#include <istream>
#include <iterator>
#include <ostream>

namespace cellforms::cli {

namespace {

Json read_json(const std::string& inline_text, const std::string& path, std::istream& in) {
  std::string text;
  if (!inline_text.empty()) {
    text = inline_text;
  } else if (!path.empty() && path != "-") {
    std::ifstream file(path);
    if (!file) throw DomainError("cannot open input file " + path);
    text.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
  } else {
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  return Json::parse(text);
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out) {
  CLI::App app{"Cell forms, shuffle ideal and periods on M_{0,n}", "cellform"};
  app.require_subcommand(1);
  app.fallthrough();
  std::uint64_t seed = 0;
  app.add_option("--seed", seed, "Seed for all randomized exact procedures")->capture_default_str();

  int n = 0;
  auto add_n = [&](CLI::App* sub) { sub->add_option("--n", n, "Number of marked points")->required(); };

  std::function<Json()> action;
  int exit_code = kOk;

  auto* polygons = app.add_subcommand("polygons", "List canonical polygons");
  add_n(polygons);
  polygons->callback([&] {
    action = [&] { return polygons_report(n); };
  });

  std::string polygon_text;
  auto* cellform = app.add_subcommand("cellform", "Cell form of a polygon (JSON array; stdin if omitted)");
  cellform->add_option("--polygon", polygon_text, "Polygon as JSON array of labels");
  cellform->callback([&] {
    action = [&] { return to_json(FormSum(cell_form(polygon_from_json(read_json(polygon_text, "", in))))); };
  });

  std::string a_text, b_text;
  auto* shuffle_cmd = app.add_subcommand("shuffle", "Shuffle product of two label sequences");
  shuffle_cmd->add_option("--a", a_text, "First sequence (JSON)")->required();
  shuffle_cmd->add_option("--b", b_text, "Second sequence (JSON)")->required();
  shuffle_cmd->callback([&] {
    action = [&] {
      Json list = Json::array();
      for (const auto& w : shuffle(word_from_json(Json::parse(a_text)), word_from_json(Json::parse(b_text)))) {
        list.push_back(to_json(std::span<const Label>(w)));
      }
      return list;
    };
  });

  auto* gens = app.add_subcommand("ideal-gens", "Generators of the shuffle ideal");
  add_n(gens);
  gens->callback([&] {
    action = [&] { return ideal_generators_report(n); };
  });

  std::string input_path;
  auto* reduce = app.add_subcommand("reduce", "Reduce a PolygonSum to 01-basis coefficients");
  reduce->add_option("--input", input_path, "PolygonSum JSON file (stdin if omitted)");
  reduce->callback([&] {
    action = [&] { return reduce_report(polygon_sum_from_json(read_json("", input_path, in)), seed); };
  });

  auto* b01 = app.add_subcommand("basis01", "The 01-basis polygons");
  add_n(b01);
  b01->callback([&] {
    action = [&] { return basis01_report(n); };
  });

  auto* conv = app.add_subcommand("convergent-basis", "Basis of 01-combinations convergent on the standard cell");
  add_n(conv);
  conv->callback([&] {
    action = [&] { return convergent_basis_report(n, seed); };
  });

  auto* ins = app.add_subcommand("insertion-forms", "Insertion forms extending the convergent 01-forms");
  add_n(ins);
  ins->callback([&] {
    action = [&] { return insertion_forms_report(n, seed); };
  });

  auto* db = app.add_subcommand("delta-basis", "Convergent 01-forms plus insertion forms, with certification");
  add_n(db);
  db->callback([&] {
    action = [&] { return delta_basis_report(n, seed); };
  });

  std::string form_path;
  double tol = 0.0;
  int form_n = 0;
  int nodes = 8;
  int levels = 0;
  auto* integ = app.add_subcommand("integrate", "Integrate a convergent form over the standard cell");
  integ->add_option("--form", form_path, "FormSum or PolygonSum JSON file (stdin if omitted)");
  integ->add_option("--tol", tol, "Tolerance between successive levels (default by n)");
  integ->add_option("--n", form_n, "Number of marked points (inferred if omitted)");
  integ->add_option("--nodes", nodes, "Nodes per axis at the first level")->capture_default_str();
  integ->add_option("--levels", levels, "Number of doubling levels (default by n)");
  integ->callback([&] {
    action = [&] {
      const Json j = read_json("", form_path, in);
      const FormSum f = any_form_from_json(j, form_n > 0 ? std::optional<int>(form_n) : std::nullopt);
      const int size = f.n() > 0 ? f.n() : (form_n > 0 ? form_n : 4);
      QuadratureSpec q = QuadratureSpec::defaults_for(size);
      q.nodes_per_axis = nodes;
      if (tol > 0) q.tolerance = tol;
      if (levels > 0) q.levels = levels;
      return integrate_report(f, q, seed);
    };
  });

  double value = 0.0;
  int weight = 0;
  long max_den = 64;
  double eps = 1e-8;
  auto* fit = app.add_subcommand("mzv-fit", "Fit a value as a rational combination of MZVs");
  fit->add_option("--value", value, "Value to fit")->required();
  fit->add_option("--weight", weight, "MZV weight (2..5)")->required();
  fit->add_option("--max-den", max_den, "Largest allowed denominator")->capture_default_str();
  fit->add_option("--eps", eps, "Error bound of the value")->capture_default_str();
  fit->callback([&] {
    action = [&] { return Json{{"value", value}, {"fit", to_json(fit_mzv(value, weight, max_den, eps))}}; };
  });

  int big_n = 0;
  auto* zd = app.add_subcommand("zagier-dims", "Dimensions d_0..d_N from d_n = d_{n-2} + d_{n-3}");
  zd->add_option("--N", big_n, "Largest index")->required();
  zd->callback([&] {
    action = [&] {
      Json list = Json::array();
      for (auto d : zagier_dims(big_n)) list.push_back(d);
      return list;
    };
  });

  auto* verify = app.add_subcommand("verify", "Run the invariant suite for one n");
  add_n(verify);
  verify->callback([&] {
    action = [&] {
      Json report = verify_report(n, seed);
      if (!report["all_pass"].get<bool>()) exit_code = kFailure;
      return report;
    };
  });

  auto diagnostic = [&](const std::string& kind, const std::string& message, int code) {
    out << Json{{"error", message}, {"kind", kind}}.dump(2) << '\n';
    return code;
  };

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const auto used = app.get_subcommands();
    out << (used.empty() ? app.help() : used.front()->help());
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    return diagnostic("usage", e.what(), kDomain);
  }

  try {
    const Json result = action();
    out << result.dump(2) << '\n';
    return exit_code;
  } catch (const Json::parse_error& e) {
    return diagnostic("malformed-json", e.what(), kDomain);
  } catch (const Json::exception& e) {
    return diagnostic("malformed-json", e.what(), kDomain);
  } catch (const DomainError& e) {
    return diagnostic("domain", e.what(), kDomain);
  } catch (const NoConvergenceError& e) {
    return diagnostic("no-convergence", e.what(), kNoConvergence);
  } catch (const UnstableError& e) {
    return diagnostic("unstable", e.what(), kFailure);
  } catch (const std::exception& e) {
    return diagnostic("internal", e.what(), kFailure);
  }
}

}  // namespace cellforms::cli
