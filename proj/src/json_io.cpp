#include "cellforms/json_io.hpp"

#include "cellforms/errors.hpp"

#include <algorithm>

namespace cellforms {

Json to_json(const Rational& q) { return to_string(q); }
Json to_json(const Label& l) { return l.str(); }

Json to_json(std::span<const Label> word) {
  Json out = Json::array();
  for (const Label& l : word) out.push_back(l.str());
  return out;
}

Json to_json(const Polygon& p) { return to_json(std::span<const Label>(p.order())); }

Json to_json(const PolygonSum& s) {
  Json out = Json::array();
  for (const auto& [p, c] : s.terms()) out.push_back(Json{{"coeff", to_string(c)}, {"polygon", to_json(p)}});
  return out;
}

Json to_json(const BasicForm& f) {
  Json factors = Json::array();
  for (const auto& [a, b] : f.factors) factors.push_back(Json::array({a.str(), b.str()}));
  return Json{{"sign", f.sign}, {"factors", std::move(factors)}};
}

Json to_json(const FormSum& f) {
  Json out = Json::array();
  for (const auto& [form, c] : f.terms()) {
    Json term{{"coeff", to_string(c)}};
    const Json body = to_json(form);
    for (const auto& [k, v] : body.items()) term[k] = v;
    out.push_back(std::move(term));
  }
  return out;
}

Json to_json(const Chord& c) { return to_json(std::span<const Label>(c.side())); }

Json to_json(const MzvFit& fit) {
  Json terms = Json::array();
  for (const auto& [q, name] : fit.terms) terms.push_back(Json{{"coeff", to_string(q)}, {"mzv", name}});
  return Json{{"found", fit.found}, {"terms", std::move(terms)}, {"residual", fit.residual}};
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw DomainError("rational must be a string \"p/q\" or an integer");
}

Label label_from_json(const Json& j) {
  if (!j.is_string()) throw DomainError("label must be a string");
  return parse_label(j.get<std::string>());
}

Word word_from_json(const Json& j) {
  if (!j.is_array()) throw DomainError("expected a JSON array of labels");
  Word w;
  for (const auto& e : j) w.push_back(label_from_json(e));
  return w;
}

Polygon polygon_from_json(const Json& j) { return canonicalize(word_from_json(j)); }

PolygonSum polygon_sum_from_json(const Json& j) {
  if (!j.is_array()) throw DomainError("PolygonSum must be a JSON array");
  PolygonSum out;
  for (const auto& term : j) {
    if (!term.is_object() || !term.contains("polygon")) throw DomainError("PolygonSum term needs a \"polygon\" field");
    const Rational c = term.contains("coeff") ? rational_from_json(term.at("coeff")) : Rational(1);
    out.add(polygon_from_json(term.at("polygon")), c);
  }
  return out;
}

FormSum form_sum_from_json(const Json& j, std::optional<int> n) {
  if (!j.is_array()) throw DomainError("FormSum must be a JSON array");
  struct Parsed {
    Rational coeff;
    int sign;
    std::vector<Factor> factors;
  };
  std::vector<Parsed> parsed;
  int max_var = 0;
  for (const auto& term : j) {
    if (!term.is_object() || !term.contains("factors")) throw DomainError("FormSum term needs a \"factors\" field");
    Parsed p{term.contains("coeff") ? rational_from_json(term.at("coeff")) : Rational(1), 1, {}};
    if (term.contains("sign")) {
      if (!term.at("sign").is_number_integer()) throw DomainError("sign must be +1 or -1");
      p.sign = term.at("sign").get<int>();
      if (p.sign != 1 && p.sign != -1) throw DomainError("sign must be +1 or -1");
    }
    if (!term.at("factors").is_array()) throw DomainError("factors must be an array of label pairs");
    for (const auto& f : term.at("factors")) {
      if (!f.is_array() || f.size() != 2) throw DomainError("each factor is a pair of labels");
      const Label a = label_from_json(f[0]);
      const Label b = label_from_json(f[1]);
      if (a.is_infinity() || b.is_infinity()) throw DomainError("factors never involve infinity");
      if (a == b) throw DomainError("factor (a - a) vanishes identically");
      for (const Label& l : {a, b}) {
        if (l.is_var()) max_var = std::max(max_var, l.index());
      }
      if (!a.is_var() && !b.is_var()) {
        // constant (1 - 0) or (0 - 1)
        if (a == Label::zero()) p.sign = -p.sign;
        continue;
      }
      p.factors.emplace_back(a, b);
    }
    parsed.push_back(std::move(p));
  }
  const int size = n.value_or(max_var + 3);
  if (size < 4) throw DomainError("cannot infer n >= 4 from the form; pass n explicitly");
  if (max_var > size - 3) throw DomainError("factor label out of range for n=" + std::to_string(size));
  FormSum out(size);
  for (auto& p : parsed) {
    if (static_cast<int>(p.factors.size()) > size - 2) throw DomainError("too many factors for n=" + std::to_string(size));
    BasicForm f{size, p.sign, std::move(p.factors)};
    std::sort(f.factors.begin(), f.factors.end());
    out.add(f, p.coeff);
  }
  return out;
}

FormSum any_form_from_json(const Json& j, std::optional<int> n) {
  if (j.is_array() && !j.empty() && j.front().is_object() && j.front().contains("polygon")) {
    PolygonSum s = polygon_sum_from_json(j);
    if (n && !s.empty() && s.n() != *n) throw DomainError("polygon size does not match n");
    return to_forms(s);
  }
  return form_sum_from_json(j, n);
}

}  // namespace cellforms
