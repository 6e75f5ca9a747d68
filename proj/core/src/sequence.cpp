#include "gls/sequence.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "gls/special.hpp"
#include "gls/summation.hpp"

namespace gls {

namespace {

std::string fmt_tag(const std::string& name, std::initializer_list<double> ps) {
  std::ostringstream os;
  os << name;
  bool first = true;
  for (double v : ps) {
    os << (first ? ":" : ",") << v;
    first = false;
  }
  return os.str();
}

}  // namespace

WeightedSequence seq_power_log(double L, double q) {
  if (L < 1.0) throw std::invalid_argument("seq_power_log: requires L >= 1");
  if (q < 0.0) throw std::invalid_argument("seq_power_log: requires q >= 0");
  WeightedSequence s;
  s.coeff = [L, q](double n) {
    if (n < 1.5) return q > 0.0 ? 0.0 : 1.0;  // log(1) = 0
    return std::pow(n, -1.0 / L) * std::pow(std::log(n), q);
  };
  s.weight = [](double) { return 1.0; };
  s.family_tag = fmt_tag("power_log", {L, q});
  s.coeff_shape = PowerLogShape{[L](double p) { return p / L; },
                                [q](double p) { return p * q; }};
  s.monotone = SeqMonotone::decreasing;
  // n^{-1/L} log^q n decreases once log n > qL.
  s.monotone_from = std::max(2.0, std::ceil(std::exp(q * L)));
  return s;
}

WeightedSequence seq_harmonic() {
  WeightedSequence s;
  s.coeff = [](double n) { return 1.0 / n; };
  s.weight = [](double) { return 1.0; };
  s.family_tag = "harmonic";
  s.coeff_shape =
      PowerLogShape{[](double p) { return p; }, [](double) { return 0.0; }};
  s.monotone = SeqMonotone::decreasing;
  return s;
}

WeightedSequence seq_unit(int k) {
  if (k < 1) throw std::invalid_argument("seq_unit: requires k >= 1");
  std::vector<double> c(static_cast<std::size_t>(k), 0.0);
  c.back() = 1.0;
  return seq_dense(std::move(c), fmt_tag("unit", {static_cast<double>(k)}));
}

WeightedSequence seq_dense(std::vector<double> c, std::string tag) {
  WeightedSequence s;
  s.dense = std::move(c);
  s.truncation = static_cast<std::int64_t>(s.dense.size());
  auto arr = s.dense;
  s.coeff = [arr](double n) {
    const auto i = static_cast<std::size_t>(n);
    return (i >= 1 && i <= arr.size()) ? arr[i - 1] : 0.0;
  };
  s.weight = [](double) { return 1.0; };
  s.family_tag = std::move(tag);
  return s;
}

WeightedSequence seq_leindler_corpus(double s_par, double theta,
                                     std::int64_t n) {
  if (s_par <= 0.0 || theta < 0.0 || n < 10)
    throw std::invalid_argument("seq_leindler_corpus: bad parameters");
  std::vector<double> x(static_cast<std::size_t>(n));
  for (std::int64_t k = 1; k <= n; ++k)
    x[static_cast<std::size_t>(k - 1)] =
        std::pow(static_cast<double>(k), 1.0 + theta) / s_par;
  WeightedSequence s = seq_dense(std::move(x),
                                 fmt_tag("leindler_corpus", {s_par, theta}));
  s.weight = [s_par](double k) { return std::pow(k, -1.0 - s_par); };
  s.weight_shape = std::make_pair(1.0 + s_par, 0.0);
  return s;
}

WeightedSequence seq_weighted_ab(double b, double delta) {
  if (b <= 1.0) throw std::invalid_argument("seq_weighted_ab: requires b > 1");
  if (delta < 0.0)
    throw std::invalid_argument("seq_weighted_ab: requires Delta >= 0");
  WeightedSequence s;
  s.coeff = [](double k) { return k; };
  s.weight = [b, delta](double k) {
    if (k < 1.5) return delta > 0.0 ? 0.0 : 1.0;
    return std::pow(k, -b - 1.0) * std::pow(std::log(k), delta);
  };
  s.family_tag = fmt_tag("weighted_ab", {b, delta});
  s.coeff_shape =
      PowerLogShape{[](double p) { return -p; }, [](double) { return 0.0; }};
  s.weight_shape = std::make_pair(b + 1.0, delta);
  s.monotone = SeqMonotone::increasing;
  return s;
}

WeightedSequence seq_log_lambda(double delta) {
  if (delta < 0.0)
    throw std::invalid_argument("seq_log_lambda: requires Delta >= 0");
  WeightedSequence s;
  s.coeff = [delta](double n) {
    if (n < 1.5) return delta > 0.0 ? 0.0 : 1.0;
    return std::pow(std::log(n), delta) / n;
  };
  s.weight = [](double) { return 1.0; };
  s.family_tag = fmt_tag("log_lambda", {delta});
  s.coeff_shape = PowerLogShape{[](double p) { return p; },
                                [delta](double p) { return p * delta; }};
  s.monotone = SeqMonotone::decreasing;
  s.monotone_from = std::max(2.0, std::ceil(std::exp(delta)));
  return s;
}

// --- Analytic power-log tails ---------------------------------------------

Estimate powerlog_tail(double a, double q, double n0) {
  if (q < 0.0) throw std::invalid_argument("powerlog_tail: requires q >= 0");
  if (n0 < 2.0) throw std::invalid_argument("powerlog_tail: requires n0 >= 2");
  if (a <= 1.0 + 1e-12) return Estimate::diverged();
  // integral_{n0}^inf x^{-a} log^q x dx = Gamma(q+1, (a-1) log n0)/(a-1)^{q+1}
  const double ln_n0 = std::log(n0);
  const double log_integral =
      log_upper_gamma(q + 1.0, (a - 1.0) * ln_n0) - (q + 1.0) * std::log(a - 1.0);
  const double f0 = std::exp(-a * ln_n0 + q * std::log(ln_n0));  // f(n0)
  const double fp0 = f0 * (q / ln_n0 - a) / n0;                  // f'(n0)
  const double value = std::exp(log_integral) - 0.5 * f0 - fp0 / 12.0;
  // next Euler-Maclaurin order ~ f'''(n0)/720
  const double err = f0 * std::pow((a + q + 2.0) / n0, 3) / 720.0 + 1e-16 * value;
  Estimate e;
  e.value = value;
  e.error = err;
  return e;
}

namespace {

// Per-variant extra weight on |c(n)|^p, and its shift of the power-log shape.
struct VariantWeight {
  std::function<double(double, double)> factor;  // (n, p-dependent) -> weight
  double shape_shift;                            // added to A_c(p)
  bool extra_term;  // nu: second tail with unshifted shape (the "+1")
};

VariantWeight variant_weight(SeqVariant v, double p, double gamma) {
  switch (v) {
    case SeqVariant::plain:
      return {[](double, double) { return 1.0; }, 0.0, false};
    case SeqVariant::nu:
      if (p < 2.0)
        throw std::invalid_argument("nu-variant norms require p >= 2");
      return {[p](double n, double) { return std::pow(n, p - 2.0) + 1.0; },
              -(p - 2.0), true};
    case SeqVariant::beta:
      return {[](double, double) { return 1.0; }, 0.0, false};  // beta applied separately
    case SeqVariant::gamma_weight: {
      if (gamma <= 0.0 || gamma >= 1.0)
        throw std::invalid_argument("gamma_weight requires gamma in (0,1)");
      if (p <= 1.0 || p >= 1.0 / gamma)
        throw std::invalid_argument(
            "gamma_weight norms require p in (1, 1/gamma)");
      return {[p, gamma](double n, double) {
                return std::pow(n, p * (1.0 + gamma) - 2.0);
              },
              -(p * (1.0 + gamma) - 2.0), false};
    }
  }
  throw std::logic_error("unknown variant");
}

}  // namespace

Estimate lp_sequence(const WeightedSequence& c, double p, SeqVariant variant,
                     double gamma) {
  if (p <= 0.0) throw std::invalid_argument("lp_sequence: requires p > 0");
  if (variant == SeqVariant::beta && !c.weight)
    throw std::invalid_argument("beta-variant requires a weight");
  const VariantWeight vw = variant_weight(variant, p, gamma);

  // combined closed-form shape of the summand, when available
  std::optional<std::pair<double, double>> shape;  // (A, Q)
  if (c.coeff_shape && !c.is_dense() &&
      (variant != SeqVariant::beta || c.weight_shape)) {
    double a_total = c.coeff_shape->exponent(p) + vw.shape_shift;
    double q_total = c.coeff_shape->log_power(p);
    if (variant == SeqVariant::beta) {
      a_total += c.weight_shape->first;
      q_total += c.weight_shape->second;
    }
    shape = std::make_pair(a_total, q_total);
  }

  // quick divergence verdict from the closed form
  if (shape && shape->first <= 1.0 + 1e-12) return Estimate::diverged();

  const std::int64_t n_direct =
      c.is_dense() ? static_cast<std::int64_t>(c.dense.size())
                   : (shape ? std::min<std::int64_t>(c.truncation, 20'000)
                            : c.truncation);

  std::vector<double> terms;
  terms.reserve(static_cast<std::size_t>(std::min<std::int64_t>(n_direct, 1 << 20)));
  double cauchy_window = 0.0;  // sum of the last block, for the Cauchy test
  const std::int64_t window = std::max<std::int64_t>(n_direct / 10, 1);
  for (std::int64_t n = 1; n <= n_direct; ++n) {
    const double nn = static_cast<double>(n);
    const double cn = c.is_dense() ? c.dense[static_cast<std::size_t>(n - 1)]
                                   : c.coeff(nn);
    if (cn == 0.0) continue;
    double term = std::pow(std::fabs(cn), p) * vw.factor(nn, p);
    if (variant == SeqVariant::beta) term *= c.weight(nn);
    terms.push_back(term);
    if (n > n_direct - window) cauchy_window += term;
  }
  double total = tree_sum(terms);
  double err = 1e-16 * total;

  if (!c.is_dense()) {
    if (shape) {
      Estimate tail = powerlog_tail(shape->first, shape->second,
                                    static_cast<double>(n_direct));
      if (tail.divergent) return Estimate::diverged();
      total += tail.value;
      err += tail.error;
      if (vw.extra_term) {  // nu-variant "+1" component
        Estimate tail2 =
            powerlog_tail(c.coeff_shape->exponent(p), c.coeff_shape->log_power(p),
                          static_cast<double>(n_direct));
        if (tail2.divergent) return Estimate::diverged();
        total += tail2.value;
        err += tail2.error;
      }
    } else {
      // no descriptor: truncation with a Cauchy test on the last 10% block
      if (total > 0.0 && cauchy_window > 1e-6 * total)
        return Estimate::diverged();
      err += cauchy_window;
    }
  }

  if (!std::isfinite(total)) return Estimate::diverged();
  Estimate e;
  e.value = std::fabs(c.scale) * std::pow(total, 1.0 / p);
  // |d norm / d total| = norm / (p total)
  e.error = (total > 0.0) ? e.value * err / (p * total) : 0.0;
  return e;
}

NormInput norm_input(const WeightedSequence& c, SeqVariant variant,
                     double gamma) {
  WeightedSequence unscaled = c;
  const double s = unscaled.scale;
  unscaled.scale = 1.0;
  NormInput in;
  in.lp = [unscaled = std::move(unscaled), variant, gamma](double p) {
    return lp_sequence(unscaled, p, variant, gamma);
  };
  in.scale = s;
  return in;
}

Estimate sequence_tail_measure(const WeightedSequence& c, double u) {
  if (u <= 0.0)
    throw std::invalid_argument("sequence_tail_measure: requires u > 0");

  if (c.is_dense()) {
    std::vector<double> hits;
    for (std::size_t i = 0; i < c.dense.size(); ++i)
      if (std::fabs(c.scale * c.dense[i]) > u)
        hits.push_back(c.weight(static_cast<double>(i + 1)));
    Estimate e;
    e.value = tree_sum(hits);
    return e;
  }

  if (c.monotone == SeqMonotone::increasing) {
    // {n : |c(n)| > u} = (n_u, inf): fresh weighted sum + analytic tail.
    // Find the first index exceeding u by doubling + bisection.
    auto val = [&](double n) { return std::fabs(c.scale * c.coeff(n)); };
    double n_first_d = 1.0;
    if (val(1.0) <= u) {
      double lo = 1.0, hi = 2.0;  // invariant: val(lo) <= u < val(hi)
      while (val(hi) <= u && hi < 1e305) hi *= 2.0;
      if (hi >= 1e305) return Estimate::diverged();
      while (hi - lo > 1.5) {
        const double mid = std::floor(0.5 * (lo + hi));
        if (!(mid > lo && mid < hi)) break;  // double-spacing floor
        (val(mid) > u ? hi : lo) = mid;
      }
      n_first_d = hi;
    }
    if (!c.weight_shape)
      throw std::invalid_argument(
          "sequence_tail_measure: increasing family needs a weight shape");
    Estimate e;
    if (n_first_d > 1e9) {
      // analytic tail alone: at such indices the correction terms are
      // negligible relative to the integral
      Estimate tail = powerlog_tail(c.weight_shape->first,
                                    c.weight_shape->second, n_first_d - 1.0);
      if (tail.divergent) return Estimate::diverged();
      e.value = tail.value;
      e.error = tail.error;
      return e;
    }
    const auto n_first = static_cast<std::int64_t>(n_first_d);
    const std::int64_t n_mid = n_first + 20'000;
    std::vector<double> ws;
    ws.reserve(20'000);
    for (std::int64_t n = n_first; n < n_mid; ++n)
      ws.push_back(c.weight(static_cast<double>(n)));
    Estimate tail = powerlog_tail(c.weight_shape->first, c.weight_shape->second,
                                  static_cast<double>(n_mid - 1));
    if (tail.divergent) return Estimate::diverged();
    e.value = tree_sum(ws) + tail.value;
    e.error = tail.error;
    return e;
  }

  if (c.monotone == SeqMonotone::decreasing) {
    auto val = [&](double n) { return std::fabs(c.scale * c.coeff(n)); };
    // head region [1, monotone_from): individual checks
    std::vector<double> hits;
    const auto head_end = static_cast<std::int64_t>(c.monotone_from);
    for (std::int64_t n = 1; n < head_end; ++n)
      if (val(static_cast<double>(n)) > u)
        hits.push_back(c.weight(static_cast<double>(n)));
    // monotone region: last index with |c| > u by doubling + bisection
    double lo = c.monotone_from, hi = c.monotone_from;
    if (val(lo) > u) {
      hi = 2.0 * lo;  // invariant: val(lo) > u >= val(hi)
      while (val(hi) > u && hi < 1e305) hi *= 2.0;
      if (hi >= 1e305) return Estimate::diverged();
      while (hi - lo > 1.5) {
        const double mid = std::floor(0.5 * (lo + hi));
        if (!(mid > lo && mid < hi)) break;  // double-spacing floor
        (val(mid) > u ? lo : hi) = mid;
      }
      // weighted count over [monotone_from, lo]
      const double last_d = lo;
      bool unit_weight = true;
      for (double n = static_cast<double>(head_end);
           n <= std::min(last_d, static_cast<double>(head_end) + 16.0); ++n)
        if (c.weight(n) != 1.0) unit_weight = false;
      if (unit_weight && (c.family_tag.rfind("power_log", 0) == 0 ||
                          c.family_tag == "harmonic" ||
                          c.family_tag.rfind("log_lambda", 0) == 0)) {
        hits.push_back(last_d - static_cast<double>(head_end) + 1.0);
      } else {
        if (last_d - static_cast<double>(head_end) > 1e7)
          throw std::runtime_error(
              "sequence_tail_measure: weighted level set too large");
        const auto last = static_cast<std::int64_t>(last_d);
        for (std::int64_t n = head_end; n <= last; ++n)
          hits.push_back(c.weight(static_cast<double>(n)));
      }
    }
    Estimate e;
    e.value = tree_sum(hits);
    return e;
  }

  throw std::invalid_argument(
      "sequence_tail_measure: sequence without monotonicity metadata");
}

WeightedSequence leindler_apply(const WeightedSequence& x, LeindlerOp op) {
  if (!x.is_dense())
    throw std::invalid_argument(
        "leindler_apply: input must be a dense (truncated) sequence");
  const std::size_t n = x.dense.size();
  std::vector<double> out(n, 0.0);

  if (op == LeindlerOp::T) {
    // Sigma(k) running prefix of beta; then suffix-accumulate x beta / Sigma.
    std::vector<double> z(n);
    double sigma_prefix = 0.0;
    for (std::size_t k = 1; k <= n; ++k) {
      sigma_prefix += x.weight(static_cast<double>(k));
      z[k - 1] = x.scale * x.dense[k - 1] * x.weight(static_cast<double>(k)) /
                 sigma_prefix;
    }
    double acc = 0.0;
    for (std::size_t k = n; k >= 1; --k) {
      acc += z[k - 1];
      out[k - 1] = acc;
    }
  } else {
    // sigma(k) = analytic tail beyond the array + exact backward recurrence.
    if (!x.weight_shape)
      throw std::invalid_argument(
          "leindler_apply: U requires a summable weight (analytic tail)");
    Estimate beyond = powerlog_tail(x.weight_shape->first,
                                    x.weight_shape->second,
                                    static_cast<double>(n));
    if (beyond.divergent)
      throw std::invalid_argument("leindler_apply: U requires summable beta");
    std::vector<double> sigma(n + 1);
    sigma[n] = beyond.value;
    for (std::size_t k = n; k >= 1; --k)
      sigma[k - 1] = sigma[k] + x.weight(static_cast<double>(k));
    double acc = 0.0;
    for (std::size_t k = 1; k <= n; ++k) {
      acc += x.scale * x.dense[k - 1] * x.weight(static_cast<double>(k)) /
             sigma[k - 1];
      out[k - 1] = acc;
    }
  }

  WeightedSequence y = x;
  y.scale = 1.0;
  y.dense = std::move(out);
  auto arr = y.dense;
  y.coeff = [arr](double nn) {
    const auto i = static_cast<std::size_t>(nn);
    return (i >= 1 && i <= arr.size()) ? arr[i - 1] : 0.0;
  };
  y.family_tag =
      std::string(op == LeindlerOp::T ? "leindlerT[" : "leindlerU[") +
      x.family_tag + "]";
  y.monotone = SeqMonotone::none;
  return y;
}

}  // namespace gls
