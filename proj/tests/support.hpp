#ifndef CELLFORMS_TESTS_SUPPORT_HPP
#define CELLFORMS_TESTS_SUPPORT_HPP

#include "cellforms/combinatorics.hpp"
#include "cellforms/forms.hpp"

#include <string>
#include <vector>

namespace testing {

inline cellforms::Word word(std::initializer_list<const char*> labels) {
  cellforms::Word w;
  for (const char* l : labels) w.push_back(cellforms::parse_label(l));
  return w;
}

inline cellforms::Polygon poly(std::initializer_list<const char*> labels) {
  return cellforms::canonicalize(word(labels));
}

inline cellforms::FormSum form(std::initializer_list<const char*> labels) {
  return cellforms::FormSum(cellforms::cell_form(poly(labels)));
}

inline cellforms::Point point(std::initializer_list<cellforms::Rational> coords) {
  return cellforms::Point{std::vector<cellforms::Rational>(coords)};
}

inline cellforms::Rational q(const char* text) { return cellforms::parse_rational(text); }

}  // namespace testing

#endif  // CELLFORMS_TESTS_SUPPORT_HPP
