#include "gls/duality.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gls/quadrature.hpp"
#include "gls/special.hpp"

namespace gls {

namespace {

constexpr double kInvPhi = 0.6180339887498949;

// Golden-section maximizer of g over [lo, hi] on the log axis.
std::pair<double, double> golden_max_log(
    const std::function<double(double)>& g, double lo, double hi) {
  double a = std::log(lo), b = std::log(hi);
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double gc = g(std::exp(c)), gd = g(std::exp(d));
  for (int it = 0; it < 120 && b - a > 1e-13; ++it) {
    if (gc >= gd) {
      b = d;
      d = c;
      gd = gc;
      c = b - kInvPhi * (b - a);
      gc = g(std::exp(c));
    } else {
      a = c;
      c = d;
      gc = gd;
      d = a + kInvPhi * (b - a);
      gd = g(std::exp(d));
    }
  }
  const double z = std::exp(0.5 * (a + b));
  return {z, g(z)};
}

}  // namespace

// --- Tail functions -------------------------------------------------------

TailProfile tail_profile(const FunctionSource& f) {
  TailProfile t;
  t.tag = f.tag;
  t.domain_note = "continuous-measure";
  const double s = std::fabs(f.scale);
  if (s == 0.0) {
    t.eval = [](double u) {
      if (u <= 0.0) throw std::invalid_argument("tail_function: requires u > 0");
      return Estimate{};
    };
    return t;
  }
  if (f.tail_closed) {
    t.eval = [tc = f.tail_closed, s](double u) {
      if (u <= 0.0) throw std::invalid_argument("tail_function: requires u > 0");
      Estimate e;
      e.value = tc(u / s);
      return e;
    };
    return t;
  }
  if (f.domain == Domain::torus && f.trig_degree >= 0) {
    // Dense samples once; each level u is then resolved by bisecting every
    // sign change of |f| - u within its sample cell. Grazing levels (u at a
    // local extremum) are resolved only to the sampling resolution.
    const int deg = std::max(f.trig_degree, 1);
    const std::size_t n = std::max<std::size_t>(4096, 64 * std::size_t(deg));
    auto xs = std::make_shared<std::vector<double>>(n + 1);
    auto vs = std::make_shared<std::vector<double>>(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
      const double x = -kPi + kTwoPi * double(i) / double(n);
      (*xs)[i] = x;
      (*vs)[i] = std::fabs(f.eval(x));
    }
    t.kind = TailKind::empirical;
    t.eval = [xs, vs, ev = f.eval, s, n](double u) {
      if (u <= 0.0) throw std::invalid_argument("tail_function: requires u > 0");
      const double uu = u / s;
      double length = 0.0;
      std::size_t ncross = 0;
      for (std::size_t i = 0; i < n; ++i) {
        const bool ia = (*vs)[i] > uu, ib = (*vs)[i + 1] > uu;
        const double xa = (*xs)[i], xb = (*xs)[i + 1];
        if (ia && ib) {
          length += xb - xa;
          continue;
        }
        if (!ia && !ib) continue;
        double lo = xa, hi = xb;
        for (int it = 0; it < 60; ++it) {
          const double mid = 0.5 * (lo + hi);
          ((std::fabs(ev(mid)) > uu) == ia ? lo : hi) = mid;
        }
        const double c = 0.5 * (lo + hi);
        length += ia ? (c - xa) : (xb - c);
        ++ncross;
      }
      Estimate e;
      e.value = length / kTwoPi;
      e.error = 1e-12 + double(ncross) * 1e-16;
      return e;
    };
    return t;
  }
  throw std::invalid_argument("tail_profile: source '" + f.tag +
                              "' has no analytic inversion or monotone "
                              "sampling structure");
}

TailProfile tail_profile(const WeightedSequence& c) {
  TailProfile t;
  t.tag = c.family_tag;
  t.domain_note = "counting/beta-weighted";
  t.kind = TailKind::empirical;
  t.eval = [c](double u) { return sequence_tail_measure(c, u); };
  return t;
}

Estimate tail_function(const FunctionSource& f, double u) {
  return tail_profile(f).eval(u);
}

Estimate tail_function(const WeightedSequence& c, double u) {
  return sequence_tail_measure(c, u);
}

// --- Tchebychev bound -----------------------------------------------------

TailBoundReport tchebychev_bound_from_norm(double norm_value,
                                           const PsiFunction& psi, double u,
                                           const BudgetOptions& opt) {
  if (u <= 0.0)
    throw std::invalid_argument("tchebychev_bound: requires u > 0");
  TailBoundReport r;
  r.norm_value = norm_value;
  if (!std::isfinite(norm_value) || norm_value < 0.0) {
    r.bound = kInf;  // divergent norm propagates
    return r;
  }
  if (norm_value == 0.0) {
    r.bound = 0.0;
    return r;
  }
  const double lam = std::log(norm_value) - std::log(u);
  if (psi.is_degenerate()) {
    const double rdeg = psi.degenerate_r();
    r.argmin_p = rdeg;
    const double h = rdeg * lam;
    r.bound = h > 700.0 ? kInf : std::exp(h);
    return r;
  }
  auto h = [&](double p) { return p * (lam + std::log(psi.eval(p))); };
  const Interval sup = psi.support();
  const bool open_top = sup.unbounded();
  double lo, hi, hi_cap;
  if (!open_top) {
    const double eps = (sup.b - sup.a) * 1e-6;
    lo = sup.a + eps;
    hi = sup.b - eps;
    hi_cap = hi;
  } else {
    lo = sup.a + std::max(1e-9 * std::max(sup.a, 1.0), 1e-12);
    hi = std::max({opt.p_max, 4.0 * sup.a, sup.a + 8.0});
    hi_cap = 1e8;
  }
  const int n = 256;
  std::vector<double> ps(n);
  int bi = -1;
  double bh = kInf, bp = lo;
  for (;;) {
    const double la = std::log(lo), lb = std::log(hi);
    bi = -1;
    bh = kInf;
    for (int i = 0; i < n; ++i) {
      const double p = std::exp(la + (lb - la) * i / (n - 1.0));
      ps[i] = p;
      const double hv = h(p);
      if (std::isfinite(hv) && hv < bh) {
        bh = hv;
        bp = p;
        bi = i;
      }
    }
    if (bi >= n - 2 && hi < hi_cap) {
      hi = std::min(hi * 10.0, hi_cap);
      continue;
    }
    break;
  }
  if (bi < 0) {
    r.bound = kInf;
    return r;
  }
  const double glo = bi > 0 ? ps[bi - 1] : ps[0];
  const double ghi = bi < n - 1 ? ps[bi + 1] : ps[n - 1];
  if (ghi > glo) {
    auto [pm, negh] = golden_max_log([&](double p) { return -h(p); }, glo, ghi);
    if (-negh < bh && std::isfinite(negh)) {
      bh = -negh;
      bp = pm;
    }
  }
  r.argmin_p = bp;
  r.edge = (bi <= 0) || (bi >= n - 1);
  r.bound = bh > 700.0 ? kInf : std::exp(bh);
  return r;
}

TailBoundReport tchebychev_bound(const WeightedSequence& c,
                                 const PsiFunction& psi, double u,
                                 SeqVariant variant, const BudgetOptions& opt) {
  const NormReport nr = gls_norm(norm_input(c, variant), psi, opt);
  const double nv = (nr.unbounded || nr.divergent_lp) ? kInf : nr.value;
  return tchebychev_bound_from_norm(nv, psi, u, opt);
}

TailBoundReport tchebychev_bound(const FunctionSource& f,
                                 const PsiFunction& psi, double u,
                                 const BudgetOptions& opt) {
  const NormReport nr = gls_norm(norm_input(f, opt), psi, opt);
  const double nv = (nr.unbounded || nr.divergent_lp) ? kInf : nr.value;
  return tchebychev_bound_from_norm(nv, psi, u, opt);
}

// --- Norm from tail -------------------------------------------------------

Estimate norm_from_tail(const TailProfile& T, double p,
                        const BudgetOptions& opt) {
  if (p < 1.0)
    throw std::invalid_argument("norm_from_tail: requires p >= 1");
  const GLRule& full = gauss_legendre(std::max(opt.gl_nodes, 8));
  const GLRule& half = gauss_legendre(std::max(opt.gl_nodes / 2, 4));
  const int ncell = 8;
  bool divergent = false;

  // integral of p u^{p-1} T(u) over [a, 2a], with the half-rule difference
  // as the panel error.
  auto window = [&](double a, double* err) -> double {
    double vf = 0.0, vh = 0.0;
    const double step = a / ncell;
    for (int ci = 0; ci < ncell && !divergent; ++ci) {
      const double mid = a + step * (ci + 0.5), hw = 0.5 * step;
      auto panel = [&](const GLRule& rule) {
        double acc = 0.0;
        for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
          const double u = mid + hw * rule.nodes[j];
          const Estimate te = T.eval(u);
          if (te.divergent || !std::isfinite(te.value)) {
            divergent = true;
            return kInf;
          }
          acc += hw * rule.weights[j] * p * std::pow(u, p - 1.0) * te.value;
        }
        return acc;
      };
      vf += panel(full);
      vh += panel(half);
    }
    if (!std::isfinite(vf)) divergent = true;
    *err = std::fabs(vf - vh);
    return vf;
  };

  double total = 0.0, err = 0.0;
  for (const bool down : {false, true}) {
    if (divergent) break;
    double a = down ? 0.5 : 1.0;
    const double fac = down ? 0.5 : 2.0;
    int quiet = 0, grow = 0;
    double c_prev = kInf;
    bool converged = false;
    for (int k = 0; k < 1000; ++k, a *= fac) {
      double we = 0.0;
      const double c = window(a, &we);
      if (divergent) break;
      total += c;
      err += we;
      if (k >= 8 && c > c_prev * 1.0000001 && c > 0.0) {
        if (++grow >= 6) {
          divergent = true;
          break;
        }
      } else {
        grow = 0;
      }
      if (c <= 1e-14 * std::max(total, 1e-300)) {
        if (++quiet >= 3) {
          converged = true;
          break;
        }
      } else {
        quiet = 0;
      }
      c_prev = c;
    }
    if (!divergent && !converged) divergent = true;  // no decay in 1000 octaves
    err += 3e-14 * total;  // beyond the quiet cut
  }
  if (divergent) return Estimate::diverged();
  if (total <= 0.0) return Estimate{};
  Estimate e;
  e.value = std::pow(total, 1.0 / p);
  e.error = e.value * std::min(err / total, 1.0) / p;
  return e;
}

// --- Young-Fenchel conjugation --------------------------------------------

ConjugateResult young_fenchel(const ConvexProfile& W, double y) {
  const double floor_lo = std::max(W.domain_lo, 1e-8);
  const double cap_hi = std::min(W.domain_hi, 1e8);
  double lo = std::clamp(W.z_lo, floor_lo, cap_hi);
  double hi = std::clamp(W.z_hi, lo, cap_hi);
  if (!(hi > lo))
    throw std::invalid_argument("young_fenchel: empty bracket");
  auto obj = [&](double z) {
    const double w = W.eval(z);
    return std::isfinite(w) ? y * z - w : -kInf;
  };
  const int n = 512;
  std::vector<double> zs(n);
  int bi = -1;
  double bv = -kInf;
  for (;;) {
    const double la = std::log(lo), lb = std::log(hi);
    bi = -1;
    bv = -kInf;
    for (int i = 0; i < n; ++i) {
      const double z = std::exp(la + (lb - la) * i / (n - 1.0));
      zs[i] = z;
      const double v = obj(z);
      if (v > bv) {
        bv = v;
        bi = i;
      }
    }
    if (bi >= n - 2 && hi < cap_hi) {
      hi = std::min(hi * 10.0, cap_hi);
      continue;
    }
    if (bi <= 1 && lo > floor_lo * (1.0 + 1e-9)) {
      lo = std::max(lo / 10.0, floor_lo);
      continue;
    }
    break;
  }
  ConjugateResult r;
  if (bi < 0) {
    r.value = -kInf;
    r.lower_bound_only = true;
    return r;
  }
  r.value = bv;
  r.argmax_z = zs[bi];
  const double glo = bi > 0 ? zs[bi - 1] : zs[0];
  const double ghi = bi < n - 1 ? zs[bi + 1] : zs[n - 1];
  if (ghi > glo) {
    auto [za, va] = golden_max_log(obj, glo, ghi);
    if (va > r.value) {
      r.value = va;
      r.argmax_z = za;
    }
  }
  r.lower_bound_only = (bi >= n - 1 && hi >= cap_hi) ||
                       (bi <= 0 && lo <= floor_lo * (1.0 + 1e-9));
  return r;
}

ConvexityReport certify_convex(const ConvexProfile& W, int grid_points,
                               double tol) {
  ConvexityReport rep;
  const int n = std::max(grid_points, 5);
  const double lo = std::max(W.z_lo, std::max(W.domain_lo, 1e-8));
  const double hi = std::min(W.z_hi, W.domain_hi);
  if (!(hi > lo))
    throw std::invalid_argument("certify_convex: empty bracket");
  const double h = (hi - lo) / (n - 1);
  std::vector<double> v(n);
  double scale = 1.0;
  for (int i = 0; i < n; ++i) {
    v[i] = W.eval(lo + h * i);
    if (std::isfinite(v[i])) scale = std::max(scale, std::fabs(v[i]));
  }
  for (int i = 1; i + 1 < n; ++i) {
    if (!std::isfinite(v[i - 1]) || !std::isfinite(v[i]) ||
        !std::isfinite(v[i + 1])) {
      rep.ok = false;
      rep.at = lo + h * i;
      return rep;
    }
    const double d2 = v[i - 1] - 2.0 * v[i] + v[i + 1];
    if (d2 < rep.worst_second_difference) {
      rep.worst_second_difference = d2;
      rep.at = lo + h * i;
    }
  }
  rep.ok = rep.worst_second_difference >= -tol * scale;
  return rep;
}

// --- N-function synthesis -------------------------------------------------

namespace {

ConvexProfile psi_w_profile(const PsiFunction& psi) {
  if (psi.is_degenerate())
    throw std::invalid_argument(
        "n_from_psi: degenerate psi has no N-function synthesis");
  const Interval s = psi.support();
  ConvexProfile W;
  W.tag = "p log psi(p) [" + psi.family_tag() + "]";
  const double width = s.unbounded() ? 1.0 : s.b - s.a;
  W.domain_lo = s.a + 1e-9 * std::max(width, 1.0);
  W.domain_hi = s.unbounded() ? kInf : s.b - 1e-9 * width;
  W.z_lo = std::max(2.0, W.domain_lo);
  W.z_hi = std::min(200.0, W.domain_hi);
  if (!(W.z_hi > W.z_lo)) {
    W.z_lo = W.domain_lo;
    W.z_hi = W.domain_hi;
  }
  W.eval = [psi](double p) { return p * std::log(psi.eval(p)); };
  return W;
}

ConvexProfile certified_psi_profile(const PsiFunction& psi) {
  ConvexProfile W = psi_w_profile(psi);
  const ConvexityReport cert = certify_convex(W);
  if (!cert.ok)
    throw std::invalid_argument(
        "n_from_psi: p log psi(p) failed the convexity certificate");
  return W;
}

}  // namespace

double log_n_from_psi(const PsiFunction& psi, double u) {
  const double e2 = std::exp(2.0);
  if (!(u >= e2 * (1.0 - 1e-12)))
    throw std::invalid_argument("n_from_psi: requires u >= e^2");
  const ConvexProfile W = certified_psi_profile(psi);
  return young_fenchel(W, std::log(u)).value;
}

double n_from_psi(const PsiFunction& psi, double u) {
  return std::exp(log_n_from_psi(psi, u));
}

std::function<double(double)> make_n_function(const PsiFunction& psi) {
  const ConvexProfile W = certified_psi_profile(psi);
  // W*(y) precomputed on a uniform y-grid. Interpolation runs on
  // log(W* + shift): registry conjugates grow exponentially in y, where the
  // log is near-linear and the chord error stays at rounding scale (direct
  // chords on W* would carry an absolute error proportional to W* itself).
  // The final chord slope continues past the last node.
  const double y1 = 48.0;
  const int m = 64 * 46 + 1;
  std::vector<double> wstar(m);
  double wmin = kInf;
  for (int i = 0; i < m; ++i) {
    wstar[i] = young_fenchel(W, 2.0 + i / 64.0).value;
    wmin = std::min(wmin, wstar[i]);
  }
  const double shift = std::max(0.0, 1.0 - wmin);
  auto ts = std::make_shared<std::vector<double>>(m);
  for (int i = 0; i < m; ++i) (*ts)[i] = std::log(wstar[i] + shift);
  const double slope0 = std::exp(wstar[0] - 2.0);  // N(e^2)/e^2
  const double top_slope = ((*ts)[m - 1] - (*ts)[m - 2]) * 64.0;
  return [ts, slope0, top_slope, shift, y1, m](double u) -> double {
    if (u <= 0.0) return 0.0;
    const double y = std::log(u);
    if (y <= 2.0) return slope0 * u;  // linear stitch below e^2
    double t;
    if (y >= y1) {
      t = (*ts)[m - 1] + top_slope * (y - y1);
    } else {
      const double pos = (y - 2.0) * 64.0;
      const int i = std::min(int(pos), m - 2);
      const double fr = pos - i;
      t = (*ts)[i] * (1.0 - fr) + (*ts)[i + 1] * fr;
    }
    return std::exp(std::exp(t) - shift);
  };
}

// --- Orlicz norm ----------------------------------------------------------

Estimate orlicz_norm(const FunctionSource& f,
                     const std::function<double(double)>& N,
                     const BudgetOptions& opt) {
  const SampledMesh base = build_mesh(f, opt, 0);
  const SampledMesh fine = build_mesh(f, opt, 1);
  const double s = std::fabs(f.scale);
  const bool has_tail =
      f.domain == Domain::line && static_cast<bool>(f.tail_lp);

  bool anypos = false;
  for (double v : base.fx)
    if (v > 0.0) {
      anypos = true;
      break;
    }
  if ((!anypos && !has_tail) || s == 0.0) return Estimate{};

  const GLRule& rule = gauss_legendre(8);
  // integral of N(v |f0|) dmu: mesh samples plus dyadic extension blocks
  // beyond the line window; +inf on overflow or sustained block growth.
  auto integral = [&](const SampledMesh& mesh, double v) -> double {
    double acc = 0.0;
    for (std::size_t i = 0; i < mesh.x.size(); ++i) {
      const double nv = N(v * mesh.fx[i]);
      if (!std::isfinite(nv)) return kInf;
      acc += mesh.w[i] * nv;
    }
    acc *= mesh.measure_norm;
    if (!std::isfinite(acc)) return kInf;
    if (has_tail) {
      double X = f.window;
      int quiet = 0, grow = 0;
      double c_prev = kInf;
      bool converged = false;
      for (int k = 0; k < 200; ++k, X *= 2.0) {
        double c = 0.0;
        const double mid = 1.5 * X, hw = 0.5 * X;
        for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
          const double x = mid + hw * rule.nodes[j];
          double val = N(v * std::fabs(f.eval(x)));
          if (!f.support_positive) {
            if (f.even || f.odd)
              val *= 2.0;
            else
              val += N(v * std::fabs(f.eval(-x)));
          }
          c += hw * rule.weights[j] * val;
        }
        if (!std::isfinite(c)) return kInf;
        acc += c;
        if (k >= 4 && c > c_prev) {
          if (++grow >= 5) return kInf;
        } else {
          grow = 0;
        }
        if (c <= 1e-14 * (1.0 + acc)) {
          if (++quiet >= 3) {
            converged = true;
            break;
          }
        } else {
          quiet = 0;
        }
        c_prev = c;
      }
      if (!converged) return kInf;
    }
    return acc;
  };
  auto objective = [&](const SampledMesh& mesh, double v) -> double {
    const double I = integral(mesh, v);
    return std::isfinite(I) ? (1.0 + I) / v : kInf;
  };

  double blo = 1e-6, bhi = 1e6;
  const int nb = 121;
  std::vector<double> vs(nb);
  int bi = -1;
  double bv = kInf;
  for (;;) {
    const double la = std::log(blo), lb = std::log(bhi);
    bi = -1;
    bv = kInf;
    for (int i = 0; i < nb; ++i) {
      const double v = std::exp(la + (lb - la) * i / (nb - 1.0));
      vs[i] = v;
      const double o = objective(base, v);
      if (o < bv) {
        bv = o;
        bi = i;
      }
    }
    if (bi == nb - 1 && bhi < 1e12) {
      bhi *= 10.0;
      continue;
    }
    if (bi == 0 && blo > 1e-12) {
      blo /= 10.0;
      continue;
    }
    break;
  }
  if (bi < 0 || !std::isfinite(bv)) return Estimate::diverged();

  double vstar = vs[bi];
  const double glo = bi > 0 ? vs[bi - 1] : vs[0];
  const double ghi = bi < nb - 1 ? vs[bi + 1] : vs[nb - 1];
  if (ghi > glo) {
    auto [vm, negobj] = golden_max_log(
        [&](double v) { return -objective(base, v); }, glo, ghi);
    if (-negobj <= bv) {
      vstar = vm;
      bv = -negobj;
    }
  }
  const double ob = objective(base, vstar);
  const double of = objective(fine, vstar);
  if (!std::isfinite(ob) && !std::isfinite(of)) return Estimate::diverged();
  Estimate e;
  if (std::isfinite(of)) {
    e.value = s * of;
    e.error = s * (std::isfinite(ob) ? std::fabs(of - ob) : of * 1e-3);
  } else {
    e.value = s * ob;
    e.error = s * ob * 1e-3;
  }
  return e;
}

}  // namespace gls
