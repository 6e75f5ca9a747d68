#include "gls/space.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gls {

namespace {

constexpr double kGolden = 0.6180339887498949;  // 1/phi

struct Probe {
  double p = 0.0;
  double ratio = -1.0;  // unscaled |f|_p / psi(p); -1 marks "not evaluated"
  double err = 0.0;
  bool divergent = false;
};

class RatioCurve {
 public:
  RatioCurve(const NormInput& f, const PsiFunction& psi)
      : f_(f), psi_(psi) {}

  Probe eval(double p) const {
    Probe pr;
    pr.p = p;
    if (!psi_.support().contains(p)) return pr;
    const Estimate e = f_.lp(p);
    if (!e.finite()) {
      pr.divergent = true;
      return pr;
    }
    const double denom = psi_.eval(p);
    pr.ratio = e.value / denom;
    pr.err = e.error / denom;
    return pr;
  }

 private:
  const NormInput& f_;
  const PsiFunction& psi_;
};

// Golden-section maximization on [lo, hi] starting from a bracketing triple.
// Returns the best probe found (ratio curve assumed smooth near the max).
Probe golden_refine(const RatioCurve& curve, Probe best, double lo, double hi,
                    int iters, bool* divergent) {
  double a = lo, b = hi;
  double x1 = b - kGolden * (b - a), x2 = a + kGolden * (b - a);
  Probe p1 = curve.eval(x1), p2 = curve.eval(x2);
  for (int i = 0; i < iters && b - a > 1e-14 * (1.0 + std::fabs(b)); ++i) {
    if (p1.divergent || p2.divergent) {
      *divergent = true;
      return best;
    }
    if (p1.ratio >= p2.ratio) {
      b = x2;
      x2 = x1;
      p2 = p1;
      x1 = b - kGolden * (b - a);
      p1 = curve.eval(x1);
    } else {
      a = x1;
      x1 = x2;
      p1 = p2;
      x2 = a + kGolden * (b - a);
      p2 = curve.eval(x2);
    }
    const Probe& top = p1.ratio >= p2.ratio ? p1 : p2;
    if (top.ratio > best.ratio) best = top;
  }
  return best;
}

}  // namespace

NormReport gls_norm(const NormInput& f, const PsiFunction& psi,
                    const BudgetOptions& opt) {
  NormReport rep;

  if (psi.is_degenerate()) {  // ||f|| = |f|_r exactly
    const double r = psi.degenerate_r();
    const Estimate e = f.lp(r);
    rep.argmax_p = r;
    if (!e.finite()) {
      rep.unbounded = true;
      rep.divergent_lp = true;
      rep.value = kInf;
      return rep;
    }
    rep.value = std::fabs(f.scale) * e.value;
    rep.error = std::fabs(f.scale) * e.error;
    return rep;
  }

  const Interval sup = psi.support();
  const double A = sup.a;
  const bool open_top = sup.unbounded();
  const double B = open_top ? std::max(opt.p_max, A + 1.0) : sup.b;
  const double width = B - A;

  const RatioCurve curve(f, psi);
  std::vector<Probe> grid;
  grid.reserve(70);
  // two-sided geometric concentration: 32 insets from each end
  for (int i = 1; i <= 32; ++i) {
    const double eps = width * std::pow(0.5, i + 1);
    grid.push_back(curve.eval(A + eps));
    if (!open_top) grid.push_back(curve.eval(B - eps));
  }
  if (open_top)  // doubling ladder toward the p_max stand-in
    for (double p = std::max(2.0 * A, A + 0.5); p < B; p *= 2.0)
      grid.push_back(curve.eval(p));
  grid.push_back(curve.eval(A + 0.5 * width));
  grid.push_back(curve.eval(B - 1e-3 * width));

  Probe best;
  for (const auto& pr : grid) {
    if (pr.divergent) {
      rep.unbounded = true;
      rep.divergent_lp = true;
      rep.value = kInf;
      rep.argmax_p = pr.p;
      return rep;
    }
    if (pr.ratio > best.ratio) best = pr;
  }
  if (best.ratio <= 0.0) {  // zero function (or empty probe set)
    rep.value = 0.0;
    rep.argmax_p = best.p;
    return rep;
  }

  // golden-section refinement around the best grid point
  {
    double lo = A, hi = B;
    for (const auto& pr : grid) {
      if (pr.p < best.p && pr.p > lo) lo = pr.p;
      if (pr.p > best.p && pr.p < hi) hi = pr.p;
    }
    if (lo == A) lo = A + 1e-9 * width;
    if (hi == B) hi = B - (open_top ? 0.0 : 1e-9 * width);
    bool div = false;
    const Probe refined = golden_refine(curve, best, lo, hi, 80, &div);
    if (div) {
      rep.unbounded = true;
      rep.divergent_lp = true;
      rep.value = kInf;
      return rep;
    }
    if (refined.ratio > best.ratio) best = refined;
  }
  const double after_golden = best.ratio;

  // endpoint inset-deepening: prior grid reached eps = width * 2^{-33}
  auto deepen = [&](bool lower) {
    int streak_fast = 0;  // consecutive >= 1.5x jumps
    std::vector<double> last_incr;
    double prev = best.ratio;
    const int depth_cap = 1000;  // eps underflows long before this
    for (int k = 34; k < depth_cap; ++k) {
      const double eps = width * std::pow(0.5, k);
      if (eps == 0.0) break;
      const double p = lower ? A + eps : B - eps;
      if (p <= A || p >= B) break;  // eps below representable offset
      const Probe pr = curve.eval(p);
      if (pr.divergent) {
        rep.unbounded = true;
        rep.divergent_lp = true;
        return;
      }
      rep.inset_depth = std::max(rep.inset_depth, k - 33);
      if (pr.ratio > best.ratio) best = pr;
      const double incr = pr.ratio / prev - 1.0;
      prev = pr.ratio;
      last_incr.push_back(incr);
      if (last_incr.size() > 5) last_incr.erase(last_incr.begin());
      streak_fast = incr >= 0.5 ? streak_fast + 1 : 0;
      if (streak_fast >= 5) {
        rep.unbounded = true;
        return;
      }
      if (incr <= 1e-3) {
        rep.stability = std::fabs(incr);
        return;  // stabilized
      }
    }
    // cap hit: unbounded only if still rising steadily
    if (last_incr.size() == 5 &&
        *std::min_element(last_incr.begin(), last_incr.end()) >= 0.05)
      rep.unbounded = true;
  };

  deepen(/*lower=*/true);
  if (!rep.unbounded && !open_top) deepen(/*lower=*/false);

  if (open_top && !rep.unbounded) {
    // growth check at the p_max stand-in: ratio still rising by >= 5% per
    // doubling at the cap means the sup lives at p = infinity
    const Probe pc = curve.eval(B);
    const Probe ph = curve.eval(0.5 * B);
    const Probe pq = curve.eval(0.25 * B);
    if (pc.divergent || ph.divergent || pq.divergent) {
      rep.unbounded = true;
      rep.divergent_lp = true;
    } else if (pc.ratio > 0.0 && pc.ratio >= 1.05 * ph.ratio &&
               ph.ratio >= 1.05 * pq.ratio) {
      rep.unbounded = true;
      if (pc.ratio > best.ratio) best = pc;
    } else if (pc.ratio > best.ratio) {
      best = pc;
    }
  }

  if (rep.unbounded) {
    rep.value = kInf;
    rep.argmax_p = best.p;
    return rep;
  }

  if (rep.stability == 0.0 && best.ratio > 0.0)
    rep.stability = std::fabs(best.ratio / after_golden - 1.0);
  rep.value = std::fabs(f.scale) * best.ratio;
  rep.argmax_p = best.p;
  rep.error = std::fabs(f.scale) * best.err;
  return rep;
}

NormReport fundamental_function(const PsiFunction& psi, double delta,
                                const BudgetOptions& opt) {
  if (!(delta > 0.0))
    throw std::invalid_argument("fundamental_function: requires delta > 0");
  NormInput ind;
  ind.lp = [delta](double p) {
    Estimate e;
    e.value = std::pow(delta, 1.0 / p);
    return e;
  };
  return gls_norm(ind, psi, opt);
}

std::vector<double> default_trend_grid() { return {2, 4, 8, 16, 32, 50}; }

namespace {

TrendReport run_trend(const std::function<Probe(double)>& probe,
                      std::vector<double> p_grid, double vanish_factor,
                      double persist_factor) {
  TrendReport rep;
  if (p_grid.empty()) p_grid = default_trend_grid();
  std::sort(p_grid.begin(), p_grid.end());

  double mx = 0.0;
  bool monotone_down = true;
  for (double p : p_grid) {
    const Probe pr = probe(p);
    if (pr.divergent) {
      rep.verdict = Trend::inconclusive;
      rep.note = "norm divergent at p = " + std::to_string(p);
      return rep;
    }
    if (pr.ratio < 0.0) continue;  // outside support: skip
    if (!rep.ratio.empty() && pr.ratio > rep.ratio.back() * (1.0 + 1e-12))
      monotone_down = false;
    rep.p_grid.push_back(p);
    rep.ratio.push_back(pr.ratio);
    mx = std::max(mx, pr.ratio);
  }
  if (rep.ratio.size() < 3) {
    rep.note = "fewer than three usable grid points";
    return rep;
  }
  if (mx == 0.0) {  // identically zero ratio: vanishes trivially
    rep.verdict = Trend::vanishes;
    return rep;
  }
  const std::size_t n = rep.ratio.size();
  const double tail_min =
      std::min({rep.ratio[n - 1], rep.ratio[n - 2], rep.ratio[n - 3]});
  if (monotone_down && rep.ratio.back() < vanish_factor * mx) {
    rep.verdict = Trend::vanishes;
  } else if (tail_min > persist_factor * mx) {
    rep.verdict = Trend::persists;
  } else {
    rep.verdict = Trend::inconclusive;
    rep.note = "trend between thresholds";
  }
  return rep;
}

}  // namespace

TrendReport g0_membership(const NormInput& f, const PsiFunction& psi,
                          std::vector<double> p_grid, double vanish_factor,
                          double persist_factor) {
  if (!psi.support().unbounded())
    throw std::invalid_argument(
        "g0_membership: psi support must be unbounded above");
  const RatioCurve curve(f, psi);
  return run_trend([&](double p) { return curve.eval(p); }, std::move(p_grid),
                   vanish_factor, persist_factor);
}

TrendReport psi_dominance(const PsiFunction& psi, const PsiFunction& theta,
                          std::vector<double> p_grid, double vanish_factor,
                          double persist_factor) {
  if (!psi.support().unbounded() || !theta.support().unbounded())
    throw std::invalid_argument(
        "psi_dominance: both supports must be unbounded above");
  auto probe = [&](double p) {
    Probe pr;
    pr.p = p;
    if (!psi.support().contains(p) || !theta.support().contains(p)) return pr;
    pr.ratio = psi.eval(p) / theta.eval(p);
    return pr;
  };
  return run_trend(probe, std::move(p_grid), vanish_factor, persist_factor);
}

}  // namespace gls
