#include "cellforms/convergence.hpp"

#include "cellforms/errors.hpp"
#include "cellforms/linalg.hpp"

#include <algorithm>
#include <random>

namespace cellforms {

StandardCell delta(int n) {
  if (n < 4) throw DomainError("standard cell needs n >= 4, got " + std::to_string(n));
  Word w = finite_labels_cell_order(n);
  w.push_back(Label::infinity());
  return StandardCell{canonicalize(w)};
}

std::pair<Rational, Rational> BlowupChart::linear(const Label& l) const {
  switch (l.kind()) {
    case LabelKind::Zero: return {Rational(0), Rational(0)};
    case LabelKind::One: return {Rational(1), Rational(0)};
    case LabelKind::Var: {
      if (auto it = scales.find(l); it != scales.end()) return {base, it->second};
      return {fixed.at(l), Rational(0)};
    }
    case LabelKind::Infinity: break;
  }
  throw DomainError("infinity has no affine chart value");
}

namespace {

class ChartRng {
 public:
  explicit ChartRng(std::uint64_t seed) : rng_(seed) {}

  Rational draw() {
    constexpr std::uint64_t kBound = 10000;
    const auto num = static_cast<long>(rng_() % (2 * kBound + 1)) - static_cast<long>(kBound);
    const auto den = static_cast<long>(rng_() % kBound) + 1;
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

  // Fresh value avoiding everything in `taken`.
  Rational draw_avoiding(std::vector<Rational>& taken) {
    for (;;) {
      Rational q = draw();
      if (std::find(taken.begin(), taken.end(), q) == taken.end()) {
        taken.push_back(q);
        return q;
      }
    }
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace

BlowupChart make_chart(const Chord& c, std::uint64_t seed) {
  const int n = c.n();
  if (!delta(n).chords().count(c)) throw DomainError("chord " + c.str() + " is not a chord of the standard cell");

  BlowupChart chart{c, c.finite_side(), Rational(0), {}, {}, 0};
  ChartRng rng(seed);
  const bool has_zero = std::count(chart.side.begin(), chart.side.end(), Label::zero()) > 0;
  const bool has_one = std::count(chart.side.begin(), chart.side.end(), Label::one()) > 0;

  // Distinct alpha values keep factors between different clusters nonzero at u = 0.
  std::vector<Rational> alphas{Rational(0), Rational(1)};
  if (has_one) {
    chart.base = 1;
  } else if (!has_zero) {
    chart.base = rng.draw_avoiding(alphas);
  }
  std::vector<Rational> betas{Rational(0)};
  int side_vars = 0;
  for (const Label& l : chart.side) {
    if (!l.is_var()) continue;
    chart.scales.emplace(l, rng.draw_avoiding(betas));
    ++side_vars;
  }
  for (int i = 1; i <= n - 3; ++i) {
    const Label l = Label::var(i);
    if (!chart.scales.count(l)) chart.fixed.emplace(l, rng.draw_avoiding(alphas));
  }
  chart.volume_exponent = (has_zero || has_one) ? side_vars - 1 : side_vars - 2;
  return chart;
}

namespace {

struct PulledTerm {
  Rational lead;              // coefficient of u^{-zeros}
  int zeros = 0;              // factors vanishing at u = 0
  std::vector<Rational> r;    // remaining factors written alpha (1 + r u)
};

PulledTerm pull_back(const BasicForm& f, const Rational& coeff, const BlowupChart& chart) {
  PulledTerm t;
  t.lead = coeff / f.sign;
  for (const auto& [a, b] : f.factors) {
    auto [aa, ab] = chart.linear(a);
    auto [ba, bb] = chart.linear(b);
    Rational alpha = aa - ba;
    Rational beta = ab - bb;
    if (alpha == 0) {
      if (beta == 0) throw UnstableError("degenerate blow-up chart: factor vanishes identically");
      ++t.zeros;
      t.lead /= beta;
    } else {
      t.lead /= alpha;
      t.r.push_back(beta / alpha);
    }
  }
  return t;
}

// Series of prod 1 / (1 + r_i u) up to u^degree.
std::vector<Rational> geometric_product(const std::vector<Rational>& r, int degree) {
  std::vector<Rational> s(static_cast<std::size_t>(degree + 1));
  s[0] = 1;
  for (const Rational& ri : r) {
    if (ri == 0) continue;
    for (std::size_t k = 1; k < s.size(); ++k) s[k] -= ri * s[k - 1];
  }
  return s;
}

void accumulate(const PulledTerm& t, int lo, int hi, std::vector<Rational>& out) {
  const int degree = hi + t.zeros;
  if (degree < 0) return;
  const auto s = geometric_product(t.r, degree);
  for (int d = std::max(0, lo + t.zeros); d <= degree; ++d) {
    out[static_cast<std::size_t>(d - t.zeros - lo)] += t.lead * s[static_cast<std::size_t>(d)];
  }
}

bool vanishes_identically(const FormSum& f, const BlowupChart& chart, std::uint64_t seed) {
  ChartRng rng(seed);
  int checked = 0;
  while (checked < 3) {
    const Rational u = rng.draw();
    if (u == 0) continue;
    Rational total(0);
    bool at_pole = false;
    for (const auto& [form, c] : f.terms()) {
      Rational denom(form.sign);
      for (const auto& [a, b] : form.factors) {
        auto [aa, ab] = chart.linear(a);
        auto [ba, bb] = chart.linear(b);
        const Rational v = (aa - ba) + (ab - bb) * u;
        if (v == 0) at_pole = true;
        denom *= v;
      }
      if (at_pole) break;
      total += c / denom;
    }
    if (at_pole) continue;
    if (total != 0) return false;
    ++checked;
  }
  return true;
}

}  // namespace

std::vector<Rational> pullback_series(const FormSum& f, const BlowupChart& chart, int lo, int hi) {
  if (hi < lo) return {};
  std::vector<Rational> out(static_cast<std::size_t>(hi - lo + 1));
  for (const auto& [form, c] : f.terms()) accumulate(pull_back(form, c, chart), lo, hi, out);
  return out;
}

PoleOrder pole_order_in_chart(const FormSum& f, const BlowupChart& chart) {
  if (f.empty()) return std::nullopt;
  const int n = f.n();
  const int lo = -(n - 2);
  const int cap = static_cast<int>(f.size()) * (n - 2) + 2 * n;
  std::vector<PulledTerm> terms;
  terms.reserve(f.size());
  for (const auto& [form, c] : f.terms()) terms.push_back(pull_back(form, c, chart));

  bool checked_zero = false;
  for (int hi = lo + n; ; hi = std::min(cap, lo + 2 * (hi - lo))) {
    std::vector<Rational> series(static_cast<std::size_t>(hi - lo + 1));
    for (const auto& t : terms) accumulate(t, lo, hi, series);
    for (std::size_t i = 0; i < series.size(); ++i) {
      if (series[i] != 0) return static_cast<int>(i) + lo + chart.volume_exponent;
    }
    if (!checked_zero) {
      if (vanishes_identically(f, chart, derive_seed(static_cast<std::uint64_t>(hi), 0x2E70))) return std::nullopt;
      checked_zero = true;
    }
    if (hi >= cap) throw UnstableError("no nonzero Laurent coefficient found for a nonvanishing pullback");
  }
}

PoleOrder pole_order(const FormSum& f, const Chord& c, std::uint64_t seed) {
  if (f.empty()) return std::nullopt;
  if (f.n() != c.n()) throw DomainError("form and chord have different n");
  constexpr int kAttempts = 4;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    try {
      const auto first = pole_order_in_chart(f, make_chart(c, derive_seed(seed, 2 * attempt)));
      const auto second = pole_order_in_chart(f, make_chart(c, derive_seed(seed, 2 * attempt + 1)));
      if (first == second) return first;
    } catch (const UnstableError&) {
      // retry with fresh constants
    }
  }
  throw UnstableError("pole order along chord " + c.str() + " disagrees between charts");
}

bool converges_01(const Polygon& p) {
  if (!p.is_01()) throw DomainError(p.str() + " is not a 01-polygon");
  return common_chords(p, delta(p.n()).polygon).empty();
}

bool converges_on_delta(const FormSum& f, std::uint64_t seed) {
  if (f.empty()) return true;
  std::uint64_t salt = 0;
  for (const Chord& c : delta(f.n()).chords()) {
    if (!integrable(pole_order(f, c, derive_seed(seed, salt++)))) return false;
  }
  return true;
}

std::vector<Rational> residue_row(const std::vector<FormSum>& forms, const BlowupChart& chart) {
  const int target = -1 - chart.volume_exponent;
  std::vector<Rational> row;
  row.reserve(forms.size());
  for (const auto& f : forms) {
    const int lowest = -(f.n() - 2);
    const auto series = pullback_series(f, chart, lowest, target);
    for (int e = lowest; e < target; ++e) {
      if (series[static_cast<std::size_t>(e - lowest)] != 0) {
        throw InternalError("pole of order above one along chord " + chart.chord.str());
      }
    }
    row.push_back(series.empty() ? Rational(0) : series.back());
  }
  return row;
}

ConvergentSubspace convergent_subspace(int n, std::uint64_t seed) {
  if (n < 4 || n > 7) throw DomainError("convergent_subspace supports n in 4..7, got " + std::to_string(n));
  ConvergentSubspace out;
  out.n = n;
  out.basis = basis01(n);
  const auto forms = basis01_forms(n);
  RowSpace constraints(forms.size());

  constexpr int kStableCharts = 2;
  constexpr int kMaxCharts = 400;
  constexpr int kVerifyCharts = 8;
  std::uint64_t chord_salt = 0;
  for (const Chord& c : delta(n).chords()) {
    const std::uint64_t chord_seed = derive_seed(seed, 0xC40D + chord_salt++);
    std::size_t found = 0;
    int stale = 0;
    int used = 0;
    // Sample charts until the rank stops growing, then re-check on fresh
    // charts; any growth during re-checking restarts the stability count.
    for (int verified = 0; verified < kVerifyCharts;) {
      if (used >= kMaxCharts) throw UnstableError("residue constraints did not stabilise along " + c.str());
      const auto chart = make_chart(c, derive_seed(chord_seed, static_cast<std::uint64_t>(used++)));
      if (constraints.insert(residue_row(forms, chart))) {
        ++found;
        stale = 0;
        verified = 0;
      } else if (stale < kStableCharts) {
        ++stale;
      } else {
        ++verified;
      }
    }
    out.constraint_rank.emplace(c, found);
    out.charts_used += static_cast<std::size_t>(used);
  }

  RationalMatrix m(constraints.dimension(), forms.size());
  for (std::size_t i = 0; i < constraints.dimension(); ++i) {
    for (std::size_t j = 0; j < forms.size(); ++j) m(i, j) = constraints.rows()[i][j];
  }
  out.coefficients = nullspace(m);
  for (const auto& v : out.coefficients) out.forms.push_back(combine(forms, v));
  return out;
}

}  // namespace cellforms
