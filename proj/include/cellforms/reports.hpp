#ifndef CELLFORMS_REPORTS_HPP
#define CELLFORMS_REPORTS_HPP

// JSON reports shared by the command-line tool and the Python module.

#include "cellforms/json_io.hpp"
#include "cellforms/periods.hpp"

#include <cstdint>

namespace cellforms {

// Throws DomainError unless 4 <= n <= 7.
void check_enumerative_n(int n);

Json polygons_report(int n);
Json basis01_report(int n);
Json ideal_generators_report(int n);
Json reduce_report(const PolygonSum& s, std::uint64_t seed);
// Pole order per standard-cell chord; "inf" when the pullback vanishes.
Json pole_report(const FormSum& f, std::uint64_t seed);
Json convergent_basis_report(int n, std::uint64_t seed);
Json insertion_forms_report(int n, std::uint64_t seed);
Json delta_basis_report(int n, std::uint64_t seed);
// {value, error, nodes_per_axis, fit}; fit is null outside weights 2..5.
Json integrate_report(const FormSum& f, const QuadratureSpec& q, std::uint64_t seed);
// {n, all_pass, checks: [{check, pass, detail}]}
Json verify_report(int n, std::uint64_t seed);

}  // namespace cellforms

#endif  // CELLFORMS_REPORTS_HPP
