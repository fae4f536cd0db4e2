// Tensor Gauss-Legendre quadrature over the standard cell.
//
// The simplex 0 < t1 < ... < tm < 1 is mapped to the unit cube by
// t_m = x_m, t_k = x_k t_{k+1}; each cube axis is then stretched by the
// double-exponential map x = (1 + tanh(pi/2 sinh s)) / 2, s in [-h, h], which
// clusters nodes at both ends so that the logarithmic endpoint behaviour of
// convergent periods does not spoil Gauss-Legendre convergence. Differences
// t_q - t_p are evaluated as t_q (1 - x_p ... x_{q-1}) with the complement
// carried exactly, so no cancellation occurs near the faces.

#include "cellforms/convergence.hpp"
#include "cellforms/errors.hpp"
#include "cellforms/parallel.hpp"
#include "cellforms/periods.hpp"

#include <cmath>
#include <numbers>

namespace cellforms {

QuadratureSpec QuadratureSpec::defaults_for(int n) {
  QuadratureSpec q;
  if (n <= 5) {
    q.tolerance = 1e-8;
    q.levels = 5;
  } else if (n == 6) {
    q.tolerance = 1e-6;
    q.levels = 5;
  } else {
    q.tolerance = 1e-4;
    q.levels = 5;
  }
  return q;
}

namespace {

constexpr double kHalfWidth = 3.5;

struct AxisNode {
  double x;       // node in (0, 1)
  double xc;      // 1 - x, computed without cancellation
  double weight;
};

std::vector<AxisNode> axis_nodes(int count) {
  // Gauss-Legendre on [-1, 1] by Newton iteration on P_count.
  std::vector<AxisNode> out(static_cast<std::size_t>(count));
  const long double pi = std::numbers::pi_v<long double>;
  for (int i = 0; i < count; ++i) {
    long double xi = std::cos(pi * (i + 0.75L) / (count + 0.5L));
    long double dp = 0;
    for (int iter = 0; iter < 100; ++iter) {
      long double p0 = 1, p1 = xi;
      for (int k = 2; k <= count; ++k) {
        const long double p2 = ((2 * k - 1) * xi * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = count * (xi * p1 - p0) / (xi * xi - 1);
      const long double step = p1 / dp;
      xi -= step;
      if (std::fabs(step) < 1e-19L) break;
    }
    const long double w = 2 / ((1 - xi * xi) * dp * dp);
    const long double s = kHalfWidth * xi;
    const long double z = pi / 2 * std::sinh(s);
    const long double x = 1 / (1 + std::exp(-2 * z));
    const long double xc = 1 / (1 + std::exp(2 * z));
    const long double jac = kHalfWidth * pi / 2 * std::cosh(s) * 2 * x * xc;
    out[static_cast<std::size_t>(i)] = {static_cast<double>(x), static_cast<double>(xc), static_cast<double>(w * jac)};
  }
  return out;
}

struct CompiledTerm {
  double coeff;
  std::vector<std::pair<int, int>> factors;  // cell positions (a, b) of a - b
};

std::vector<CompiledTerm> compile(const FormSum& f) {
  std::vector<CompiledTerm> out;
  for (const auto& [form, c] : f.terms()) {
    CompiledTerm t{c.get_d() * form.sign, {}};
    for (const auto& [a, b] : form.factors) t.factors.emplace_back(a.cell_position(f.n()), b.cell_position(f.n()));
    out.push_back(std::move(t));
  }
  return out;
}

// Integrand sum at one cube point. x[1..m], xc[1..m]; index 0 unused.
class CellEvaluator {
 public:
  CellEvaluator(int m, const std::vector<CompiledTerm>& terms)
      : m_(m), terms_(terms), t_(static_cast<std::size_t>(m + 2)), c_(static_cast<std::size_t>((m + 2) * (m + 2))) {}

  double operator()(const double* x, const double* xc) {
    const int top = m_ + 1;
    t_[static_cast<std::size_t>(top)] = 1.0;
    for (int k = m_; k >= 1; --k) t_[static_cast<std::size_t>(k)] = x[k] * t_[static_cast<std::size_t>(k + 1)];
    t_[0] = 0.0;
    for (int p = 1; p <= m_; ++p) {
      double c = xc[p];
      at(p, p + 1) = c;
      for (int q = p + 1; q <= m_; ++q) {
        c = c * x[q] + xc[q];
        at(p, q + 1) = c;
      }
    }
    double jacobian = 1.0;
    for (int k = 2; k <= m_; ++k) jacobian *= t_[static_cast<std::size_t>(k)];

    double total = 0.0;
    for (const auto& term : terms_) {
      double denom = 1.0;
      for (const auto& [a, b] : term.factors) denom *= difference(a, b);
      total += term.coeff / denom;
    }
    return total * jacobian;
  }

 private:
  double& at(int p, int q) { return c_[static_cast<std::size_t>(p * (m_ + 2) + q)]; }

  // value(a) - value(b) for cell positions a, b.
  double difference(int a, int b) {
    if (a > b) return positive_gap(b, a);
    return -positive_gap(a, b);
  }
  double positive_gap(int p, int q) {
    const double tq = t_[static_cast<std::size_t>(q)];
    return p == 0 ? tq : tq * at(p, q);
  }

  int m_;
  const std::vector<CompiledTerm>& terms_;
  std::vector<double> t_;
  std::vector<double> c_;
};

double tensor_rule(const std::vector<CompiledTerm>& terms, int m, int count) {
  const auto nodes = axis_nodes(count);
  const std::size_t per_axis = nodes.size();
  std::vector<long double> partial(per_axis, 0.0L);
  parallel_for(per_axis, [&](std::size_t outer) {
    CellEvaluator eval(m, terms);
    std::vector<double> x(static_cast<std::size_t>(m + 1)), xc(static_cast<std::size_t>(m + 1));
    std::vector<std::size_t> idx(static_cast<std::size_t>(m + 1), 0);
    idx[static_cast<std::size_t>(m)] = outer;
    long double sum = 0.0L;
    for (;;) {
      double w = 1.0;
      for (int k = 1; k <= m; ++k) {
        const auto& node = nodes[idx[static_cast<std::size_t>(k)]];
        x[static_cast<std::size_t>(k)] = node.x;
        xc[static_cast<std::size_t>(k)] = node.xc;
        w *= node.weight;
      }
      sum += static_cast<long double>(w) * eval(x.data(), xc.data());
      int k = 1;
      while (k < m && ++idx[static_cast<std::size_t>(k)] == per_axis) {
        idx[static_cast<std::size_t>(k)] = 0;
        ++k;
      }
      if (k >= m) break;
    }
    partial[outer] = sum;
  });
  long double total = 0.0L;
  for (long double p : partial) total += p;
  return static_cast<double>(total);
}

void check_spec(const QuadratureSpec& q) {
  if (q.nodes_per_axis < 8) throw DomainError("quadrature needs at least 8 nodes per axis");
  if (q.levels < 2) throw DomainError("quadrature needs at least 2 levels");
  if (!(q.tolerance > 0)) throw DomainError("quadrature tolerance must be positive");
}

}  // namespace

IntegrationResult integrate_all_levels(const FormSum& f, const QuadratureSpec& q) {
  check_spec(q);
  IntegrationResult r;
  if (f.empty()) {
    r.level_values.assign(static_cast<std::size_t>(q.levels), 0.0);
    r.level_errors.assign(static_cast<std::size_t>(q.levels - 1), 0.0);
    r.nodes_per_axis = q.nodes_per_axis << (q.levels - 1);
    return r;
  }
  const auto terms = compile(f);
  const int m = f.n() - 3;
  for (int level = 0; level < q.levels; ++level) {
    const int count = q.nodes_per_axis << level;
    r.level_values.push_back(tensor_rule(terms, m, count));
    r.nodes_per_axis = count;
    if (level > 0) r.level_errors.push_back(std::fabs(r.level_values[level] - r.level_values[level - 1]));
  }
  r.value = r.level_values.back();
  r.error = r.level_errors.back();
  return r;
}

IntegrationResult integrate(const FormSum& f, const QuadratureSpec& q, std::uint64_t seed) {
  check_spec(q);
  IntegrationResult r;
  if (f.empty()) {
    r.nodes_per_axis = q.nodes_per_axis;
    return r;
  }
  if (!converges_on_delta(f, seed)) {
    throw DomainError("form does not converge on the standard cell; refusing to integrate");
  }
  const auto terms = compile(f);
  const int m = f.n() - 3;
  for (int level = 0; level < q.levels; ++level) {
    const int count = q.nodes_per_axis << level;
    r.level_values.push_back(tensor_rule(terms, m, count));
    r.nodes_per_axis = count;
    if (level == 0) continue;
    const double err = std::fabs(r.level_values[level] - r.level_values[level - 1]);
    r.level_errors.push_back(err);
    if (err < q.tolerance) {
      r.value = r.level_values.back();
      r.error = err;
      return r;
    }
  }
  throw NoConvergenceError("quadrature did not converge: last level difference " +
                           std::to_string(r.level_errors.back()) + " exceeds tolerance " + std::to_string(q.tolerance));
}

}  // namespace cellforms
