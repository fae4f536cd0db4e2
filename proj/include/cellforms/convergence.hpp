#ifndef CELLFORMS_CONVERGENCE_HPP
#define CELLFORMS_CONVERGENCE_HPP

// Convergence of forms on the standard cell 0 < t1 < ... < t_{n-3} < 1.
//
// Each chord of the standard cell is a boundary divisor where the points of
// its finite side collide. A blow-up chart parametrises a transverse curve
//   t_k = base + u * scale_k   (k on the finite side),
// with every other variable frozen at a generic constant. Pulling a form back
// gives a univariate rational function of u; its Laurent order plus the
// exponent of u in the volume form decides integrability across the divisor.

#include "cellforms/combinatorics.hpp"
#include "cellforms/forms.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

namespace cellforms {

struct StandardCell {
  Polygon polygon;

  int n() const { return polygon.n(); }
  std::set<Chord> chords() const { return cellforms::chords(polygon); }
};

StandardCell delta(int n);

struct BlowupChart {
  Chord chord;
  Word side;                         // finite side, standard-cell order
  Rational base;                     // 0 or 1 when the side contains it, else generic
  std::map<Label, Rational> scales;  // variables on the side
  std::map<Label, Rational> fixed;   // variables off the side
  int volume_exponent = 0;           // #side vars - 1 (side holds 0 or 1), else #side vars - 2

  // Value of a label along the chart as alpha + beta * u.
  std::pair<Rational, Rational> linear(const Label& l) const;
};

// Throws DomainError unless c is a chord of the standard cell.
BlowupChart make_chart(const Chord& c, std::uint64_t seed);

// Coefficients of u^lo .. u^hi of the pulled-back coefficient function.
std::vector<Rational> pullback_series(const FormSum& f, const BlowupChart& chart, int lo, int hi);

// Laurent order of the pullback plus the volume exponent; nullopt when the
// pullback vanishes identically (no pole at all). Order >= 0 is integrable,
// -1 is a logarithmic divergence. Two independent charts must agree.
using PoleOrder = std::optional<int>;

PoleOrder pole_order_in_chart(const FormSum& f, const BlowupChart& chart);
PoleOrder pole_order(const FormSum& f, const Chord& c, std::uint64_t seed);

inline bool integrable(const PoleOrder& order) { return !order || *order >= 0; }

// Chord criterion for 01-polygons: no chord shared with the standard cell.
bool converges_01(const Polygon& p);

bool converges_on_delta(const FormSum& f, std::uint64_t seed);

struct ConvergentSubspace {
  int n = 0;
  std::vector<Polygon> basis;                      // the 01-basis the coefficients refer to
  std::vector<std::vector<Rational>> coefficients;  // one vector per basis element of the subspace
  std::vector<FormSum> forms;
  std::map<Chord, std::size_t> constraint_rank;    // residue constraints found per chord
  std::size_t charts_used = 0;

  std::size_t dimension() const { return forms.size(); }
};

// Forms in the span of the 01-basis with vanishing residue along every chord
// of the standard cell.
ConvergentSubspace convergent_subspace(int n, std::uint64_t seed);

// Residue constraint row: coefficient of u^{-1-e} for each form.
std::vector<Rational> residue_row(const std::vector<FormSum>& forms, const BlowupChart& chart);

}  // namespace cellforms

#endif  // CELLFORMS_CONVERGENCE_HPP
