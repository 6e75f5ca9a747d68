#include "gls/psi.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "gls/special.hpp"

namespace gls {

double PsiFunction::eval(double p) const {
  if (degenerate_) {
    if (p != r_)
      throw std::domain_error("degenerate psi evaluated away from its point");
    return 1.0;
  }
  if (!support_.contains(p)) {
    std::ostringstream os;
    os << "psi '" << tag_ << "' evaluated at p=" << p
       << " outside open support (" << support_.a << ", " << support_.b << ")";
    throw std::domain_error(os.str());
  }
  return fn_(p);
}

PsiFunction PsiFunction::degenerate(double r) {
  if (r < 1.0)
    throw std::invalid_argument("degenerate psi: requires r >= 1");
  PsiFunction psi;
  psi.support_ = {r, r};
  psi.degenerate_ = true;
  psi.r_ = r;
  std::ostringstream os;
  os << "degenerate:" << r;
  psi.tag_ = os.str();
  return psi;
}

PsiFunction make_power_psi(double a, double b, double alpha, double beta) {
  if (!(a < b)) throw std::invalid_argument("power psi: requires A < B");
  if (a < 1.0) throw std::invalid_argument("power psi: requires A >= 1");
  if (alpha < 0.0 || beta < 0.0)
    throw std::invalid_argument("power psi: requires alpha, beta >= 0");
  std::ostringstream os;
  os << "power:" << a << "," << b << "," << alpha << "," << beta;
  return PsiFunction(
      {a, b},
      [a, b, alpha, beta](double p) {
        return std::pow(p - a, -alpha) * std::pow(b - p, -beta);
      },
      os.str());
}

PsiFunction make_exponent_psi(double beta) {
  if (beta <= 0.0)
    throw std::invalid_argument("exponent psi: requires beta > 0");
  std::ostringstream os;
  os << "exp:" << beta;
  return PsiFunction({1.0, kInf},
                     [beta](double p) { return std::pow(p, beta); }, os.str());
}

PsiFunction make_degenerate_psi(double r) { return PsiFunction::degenerate(r); }

PsiFunction make_gab_psi(double a, double b, double alpha, double beta) {
  if (!(1.0 <= a && a < b))
    throw std::invalid_argument("gab psi: requires 1 <= a < b");
  if (alpha < 0.0 || beta < 0.0)
    throw std::invalid_argument("gab psi: requires alpha, beta >= 0");
  const double h = std::min(0.5 * (a + b), 2.0 * a);
  std::ostringstream os;
  os << "gab:" << a << "," << b << "," << alpha << "," << beta;
  return PsiFunction(
      {a, b},
      [a, b, alpha, beta, h](double p) {
        const double zeta = (p < h) ? std::pow(p - a, alpha)
                                    : std::pow(b - p, beta);
        return 1.0 / zeta;
      },
      os.str());
}

PsiFunction make_natural_psi(const std::function<Estimate(double)>& lp_eval,
                             const std::vector<double>& p_grid,
                             const std::string& source_tag) {
  if (p_grid.size() < 2)
    throw std::invalid_argument("natural psi: need at least 2 grid points");
  std::vector<double> grid = p_grid;
  std::sort(grid.begin(), grid.end());
  std::vector<double> inv_p(grid.size()), log_psi(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const Estimate e = lp_eval(grid[i]);
    if (!e.finite())
      throw std::runtime_error("natural psi: |source|_p diverges at p=" +
                               std::to_string(grid[i]));
    if (e.value <= 0.0)
      throw std::runtime_error("natural psi: zero norm at p=" +
                               std::to_string(grid[i]));
    inv_p[i] = 1.0 / grid[i];
    log_psi[i] = std::log(e.value);
  }
  const double lo = grid.front(), hi = grid.back();
  auto fn = [grid, inv_p, log_psi](double p) {
    const double t = 1.0 / p;
    // inv_p is decreasing in index; find bracketing nodes.
    std::size_t j = 1;
    while (j + 1 < grid.size() && p > grid[j]) ++j;
    const double t0 = inv_p[j - 1], t1 = inv_p[j];
    const double w = (t - t0) / (t1 - t0);
    return std::exp(log_psi[j - 1] * (1.0 - w) + log_psi[j] * w);
  };
  return PsiFunction({lo, hi}, fn, "natural:" + source_tag);
}

PsiFunction transform_psi(const PsiFunction& psi, const PsiTransform& t) {
  if (psi.is_degenerate())
    throw std::invalid_argument("transform_psi: degenerate psi not supported");
  const Interval s = psi.support();
  // copyable evaluator closing over the source psi
  auto base = [psi](double p) { return psi.eval(p); };
  switch (t.kind) {
    case PsiTransform::Kind::hilbert: {
      if (s.a < 1.0)
        throw std::invalid_argument(
            "hilbert transform of psi requires support within (1, inf)");
      return PsiFunction(
          s, [base](double p) { return pichorides(p) * base(p); },
          "hilbert[" + psi.family_tag() + "]");
    }
    case PsiTransform::Kind::conjugate_zeta: {
      if (s.a < 1.0)
        throw std::invalid_argument(
            "conjugate_zeta requires support within (1, inf)");
      // p -> p/(p-1) is a decreasing involution of (1, inf).
      const double new_a = s.unbounded() ? 1.0 : s.b / (s.b - 1.0);
      const double new_b = (s.a == 1.0) ? kInf : s.a / (s.a - 1.0);
      return PsiFunction(
          {new_a, new_b}, [base](double p) { return base(p / (p - 1.0)); },
          "conjugate_zeta[" + psi.family_tag() + "]");
    }
    case PsiTransform::Kind::degree_d: {
      const double d = t.d;
      std::ostringstream os;
      os << "degree:" << d << "[" << psi.family_tag() << "]";
      return PsiFunction(
          s, [base, d](double p) { return std::pow(p, d) * base(p); },
          os.str());
    }
    case PsiTransform::Kind::maximal: {
      if (s.a < 1.0)
        throw std::invalid_argument(
            "maximal transform of psi requires support within (1, inf)");
      const double lambda = t.lambda, mu = t.mu;
      std::ostringstream os;
      os << "maximal:" << lambda << "," << mu << "[" << psi.family_tag() << "]";
      return PsiFunction(
          s,
          [base, lambda, mu](double p) {
            return std::pow(p, lambda) * std::pow(p - 1.0, -mu) * base(p);
          },
          os.str());
    }
    case PsiTransform::Kind::leindler:
      return PsiFunction(
          s, [base](double p) { return p * base(p); },
          "leindler[" + psi.family_tag() + "]");
  }
  throw std::logic_error("transform_psi: unknown kind");
}

PsiValidationReport validate_psi(const PsiFunction& psi,
                                 const std::vector<double>& grid,
                                 bool check_convexity, double convexity_tol) {
  PsiValidationReport report;
  report.convexity_requested = check_convexity;
  std::vector<double> values;
  values.reserve(grid.size());
  for (double p : grid) {
    double v;
    try {
      v = psi.eval(p);
    } catch (const std::exception& e) {
      report.violations.push_back({p, e.what()});
      values.push_back(std::nan(""));
      continue;
    }
    if (!std::isfinite(v))
      report.violations.push_back({p, "psi not finite"});
    else if (v <= 0.0)
      report.violations.push_back({p, "psi not strictly positive"});
    values.push_back(v);
  }
  if (check_convexity && grid.size() >= 3) {
    for (std::size_t i = 1; i + 1 < grid.size(); ++i) {
      if (!std::isfinite(values[i - 1]) || !std::isfinite(values[i]) ||
          !std::isfinite(values[i + 1]))
        continue;
      auto phi = [&](std::size_t k) {
        return grid[k] * std::log(values[k]);
      };
      // non-uniform second difference of p log psi(p)
      const double h0 = grid[i] - grid[i - 1];
      const double h1 = grid[i + 1] - grid[i];
      const double second =
          2.0 * (h0 * phi(i + 1) - (h0 + h1) * phi(i) + h1 * phi(i - 1)) /
          (h0 * h1 * (h0 + h1));
      report.worst_second_difference =
          std::min(report.worst_second_difference, second);
      if (second < -convexity_tol) report.convexity_ok = false;
    }
  }
  return report;
}

}  // namespace gls
