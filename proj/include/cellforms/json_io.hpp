#ifndef CELLFORMS_JSON_IO_HPP
#define CELLFORMS_JSON_IO_HPP

// JSON schemas shared by the CLI and the Python module.
//
//   Polygon     ["0","t1","t3","1","t2","inf"]
//   PolygonSum  [{"coeff":"1","polygon":[...]}, ...]
//   FormSum     [{"coeff":"p/q","sign":1,"factors":[["t1","1"],["0","t2"]]}, ...]
//
// Rationals are strings "p/q" (or "p" for integers). Parsing errors throw
// DomainError.

#include "cellforms/combinatorics.hpp"
#include "cellforms/forms.hpp"
#include "cellforms/periods.hpp"

#include "json.hpp"

#include <optional>

namespace cellforms {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& q);
Json to_json(const Label& l);
Json to_json(std::span<const Label> word);
Json to_json(const Polygon& p);
Json to_json(const PolygonSum& s);
Json to_json(const BasicForm& f);
Json to_json(const FormSum& f);
Json to_json(const Chord& c);
Json to_json(const MzvFit& fit);

Rational rational_from_json(const Json& j);
Label label_from_json(const Json& j);
Word word_from_json(const Json& j);
Polygon polygon_from_json(const Json& j);
PolygonSum polygon_sum_from_json(const Json& j);
// n defaults to (largest variable index) + 3.
FormSum form_sum_from_json(const Json& j, std::optional<int> n = std::nullopt);

// Accepts either schema: a PolygonSum is converted through cell forms.
FormSum any_form_from_json(const Json& j, std::optional<int> n = std::nullopt);

}  // namespace cellforms

#endif  // CELLFORMS_JSON_IO_HPP
