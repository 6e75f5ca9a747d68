#include "gls/source.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "gls/special.hpp"
#include "gls/summation.hpp"

namespace gls {

namespace {

double lgamma_safe(double x) { return std::lgamma(x); }

// Cached term arrays h(n) = log^Delta(n)/n for the extremal series.
const std::vector<double>& h_array(double delta, std::int64_t terms) {
  static std::map<std::pair<double, std::int64_t>,
                  std::unique_ptr<std::vector<double>>>
      cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{delta, terms}];
  if (!slot) {
    auto v = std::make_unique<std::vector<double>>(
        static_cast<std::size_t>(terms) + 1, 0.0);
    for (std::int64_t n = 1; n <= terms; ++n)
      (*v)[static_cast<std::size_t>(n)] =
          std::pow(std::log(static_cast<double>(n)), delta) /
          static_cast<double>(n);
    slot = std::move(v);
  }
  return *slot;
}

}  // namespace

FunctionSource src_const1() {
  FunctionSource s;
  s.domain = Domain::torus;
  s.eval = [](double) { return 1.0; };
  s.tag = "const1";
  s.lp_exact = [](double) {
    Estimate e;
    e.value = 1.0;
    return e;
  };
  s.tail_closed = [](double u) { return u < 1.0 ? 1.0 : 0.0; };
  s.even = true;
  s.trig_degree = 0;
  return s;
}

FunctionSource src_cosx() {
  FunctionSource s;
  s.domain = Domain::torus;
  s.eval = [](double x) { return std::cos(x); };
  s.tag = "cosx";
  // (2pi)^{-1} int |cos|^p dx = Gamma((p+1)/2) / (sqrt(pi) Gamma(p/2+1))
  s.lp_exact = [](double p) {
    Estimate e;
    e.value = std::exp((lgamma_safe(0.5 * (p + 1.0)) -
                        lgamma_safe(0.5 * p + 1.0) -
                        0.5 * std::log(kPi)) /
                       p);
    return e;
  };
  s.tail_closed = [](double u) {
    return u < 1.0 ? 2.0 / kPi * std::acos(std::max(u, 0.0)) : 0.0;
  };
  s.even = true;
  s.trig_degree = 1;
  return s;
}

FunctionSource src_poly(const TrigPolynomial& f, std::string tag) {
  FunctionSource s;
  s.domain = Domain::torus;
  auto poly = std::make_shared<TrigPolynomial>(f);
  s.eval = [poly](double x) { return (*poly)(x); };
  s.tag = std::move(tag);
  s.trig_degree = f.degree();
  return s;
}

FunctionSource src_gdelta(double delta, bool sine, std::int64_t series_terms) {
  if (delta < 0.0) throw std::invalid_argument("src_gdelta: Delta >= 0");
  if (series_terms < 1000)
    throw std::invalid_argument("src_gdelta: series budget too small");
  FunctionSource s;
  s.domain = Domain::torus;
  const double x_switch = 40.0 / static_cast<double>(series_terms);
  const auto* h = &h_array(delta, series_terms);
  s.eval = [delta, sine, series_terms, x_switch, h](double x) {
    double t = std::remainder(x, kTwoPi);  // (-pi, pi]
    const double sgn = (t < 0.0 && sine) ? -1.0 : 1.0;
    t = std::fabs(t);
    if (t == 0.0) return sine ? 0.0 : kInf;
    if (t < x_switch) {
      const double al = -std::log(t);  // |log t|, t < 40/terms < 1
      return sine ? sgn * 0.5 * kPi * std::pow(al, delta)
                  : std::pow(al, delta + 1.0) / (delta + 1.0);
    }
    const auto n_direct = std::min<std::int64_t>(
        series_terms, std::max<std::int64_t>(64, std::llround(40.0 / t)));
    // direct block with incremental rotation, reseeded every 4096 steps
    const double c1 = std::cos(t), s1 = std::sin(t);
    double re = 0.0, im = 0.0, ck = 1.0, sk = 0.0;
    for (std::int64_t n = 1; n <= n_direct; ++n) {
      if ((n & 4095) == 1) {
        ck = std::cos(static_cast<double>(n) * t);
        sk = std::sin(static_cast<double>(n) * t);
      } else {
        const double cn = ck * c1 - sk * s1;
        sk = sk * c1 + ck * s1;
        ck = cn;
      }
      const double hn = (*h)[static_cast<std::size_t>(n)];
      re += hn * ck;
      im += hn * sk;
    }
    const AbelTail tail = abel_tail(
        [delta](double n) { return std::pow(std::log(n), delta) / n; },
        static_cast<double>(n_direct + 1), t);
    re += tail.value.real();
    im += tail.value.imag();
    return sine ? sgn * im : re;
  };
  std::ostringstream os;
  os << (sine ? "gdelta_sin" : "gdelta_cos") << ":Delta=" << delta;
  s.tag = os.str();
  s.family = "gdelta";
  s.family_params = {delta, sine ? 1.0 : 0.0,
                     static_cast<double>(series_terms)};
  s.singular_points = {0.0};
  s.even = !sine;
  s.odd = sine;
  return s;
}

FunctionSource src_gm(double m) {
  if (m < 1.0) throw std::invalid_argument("src_gm: requires m >= 1");
  FunctionSource s;
  s.domain = Domain::torus;
  s.eval = [m](double x) {
    const double t = std::fabs(std::remainder(x, kTwoPi));
    if (t == 0.0) return kInf;
    return std::pow(std::log(kTwoPi / t), 1.0 / m);
  };
  std::ostringstream os;
  os << "gm:m=" << m;
  s.tag = os.str();
  s.singular_points = {0.0};
  s.even = true;
  // |g_m|_p^p = 2 Gamma(p/m + 1, log 2)
  s.lp_exact = [m](double p) {
    Estimate e;
    e.value =
        std::exp((std::log(2.0) + log_upper_gamma(p / m + 1.0, std::log(2.0))) /
                 p);
    return e;
  };
  s.tail_closed = [m](double u) {
    if (u <= 0.0) return 1.0;
    return std::min(1.0, 2.0 * std::exp(-std::pow(u, m)));
  };
  return s;
}

FunctionSource src_indicator01() {
  FunctionSource s;
  s.domain = Domain::line;
  s.eval = [](double x) { return (x >= 0.0 && x <= 1.0) ? 1.0 : 0.0; };
  s.tag = "indicator01";
  s.singular_points = {0.0, 1.0};
  s.lp_exact = [](double) {
    Estimate e;
    e.value = 1.0;
    return e;
  };
  s.tail_closed = [](double u) { return u < 1.0 ? 1.0 : 0.0; };
  s.window = 1.0;
  s.support_positive = true;
  return s;
}

FunctionSource src_absinv() {
  FunctionSource s;
  s.domain = Domain::line;
  s.eval = [](double x) { return 1.0 / (1.0 + std::fabs(x)); };
  s.tag = "absinv";
  s.lp_exact = [](double p) {
    if (p <= 1.0) return Estimate::diverged();
    Estimate e;
    e.value = std::pow(2.0 / (p - 1.0), 1.0 / p);
    return e;
  };
  s.tail_closed = [](double u) {
    return u < 1.0 ? 2.0 * (1.0 / u - 1.0) : 0.0;
  };
  s.window = 1024.0;
  s.tail_lp = [](double p, double X) {
    if (p <= 1.0) return kInf;
    return 2.0 * std::pow(1.0 + X, 1.0 - p) / (p - 1.0);
  };
  s.even = true;
  return s;
}

FunctionSource src_gaussian() {
  FunctionSource s;
  s.domain = Domain::line;
  s.eval = [](double x) { return std::exp(-0.5 * x * x); };
  s.tag = "gaussian";
  s.lp_exact = [](double p) {
    Estimate e;
    e.value = std::pow(kTwoPi / p, 0.5 / p);
    return e;
  };
  s.tail_closed = [](double u) {
    if (u >= 1.0) return 0.0;
    if (u <= 0.0) return kInf;
    return 2.0 * std::sqrt(-2.0 * std::log(u));
  };
  s.window = 16.0;
  s.tail_lp = [](double p, double X) {
    return std::sqrt(kTwoPi / p) * std::erfc(X * std::sqrt(0.5 * p));
  };
  s.even = true;
  return s;
}

FunctionSource src_fab(double a, double b) {
  if (!(0.0 < a && a < b))
    throw std::invalid_argument("src_fab: requires 0 < a < b");
  FunctionSource s;
  s.domain = Domain::line;
  s.eval = [a, b](double x) {
    if (x <= 0.0) return 0.0;
    return x < 1.0 ? std::pow(x, -1.0 / b) : std::pow(x, -1.0 / a);
  };
  std::ostringstream os;
  os << "fab:a=" << a << ",b=" << b;
  s.tag = os.str();
  s.singular_points = {0.0, 1.0};
  s.lp_exact = [a, b](double p) {
    if (p <= a || p >= b) return Estimate::diverged();
    Estimate e;
    e.value = std::pow(b / (b - p) + a / (p - a), 1.0 / p);
    return e;
  };
  s.tail_closed = [a, b](double u) {
    if (u <= 0.0) return kInf;
    return u >= 1.0 ? std::pow(u, -b) : std::pow(u, -a);
  };
  s.window = 1024.0;
  s.support_positive = true;
  s.tail_lp = [a](double p, double X) {
    if (p <= a) return kInf;
    return std::pow(X, 1.0 - p / a) / (p / a - 1.0);
  };
  return s;
}

}  // namespace gls
