#include "gls/operators.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <sstream>
#include <stdexcept>

#include "gls/quadrature.hpp"
#include "gls/space.hpp"
#include "gls/special.hpp"
#include "gls/summation.hpp"

namespace gls {

namespace {

// Gauss-Legendre integral of g over [a, b], the cell split into `pieces`
// equal sub-cells. Contributions are collected and tree-summed by callers,
// so this returns the per-cell partial sums instead of folding them.
void gl_pieces(const std::function<double(double)>& g, double a, double b,
               int pieces, int nodes, std::vector<double>& parts) {
  const GLRule& rule = gauss_legendre(nodes);
  const double step = (b - a) / pieces;
  for (int c = 0; c < pieces; ++c) {
    const double lo = a + c * step;
    const double mid = lo + 0.5 * step, half = 0.5 * step;
    double cell = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      const double v = g(mid + half * rule.nodes[i]);
      if (std::isfinite(v)) cell += half * rule.weights[i] * v;
    }
    parts.push_back(cell);
  }
}

int osc_pieces(double width, double osc_len, int cap = 1 << 16) {
  if (osc_len <= 0.0 || width <= osc_len) return 1;
  return std::min<int>(cap, static_cast<int>(std::ceil(width / osc_len)));
}

// Integral over [edge, far] graded dyadically toward `edge` (where the
// integrand may be singular-adjacent or merely non-smooth). The innermost
// sliver is integrated as a single cell; cells respect osc_len.
void graded_toward(const std::function<double(double)>& g, double edge,
                   double far, int levels, int nodes, double osc_len,
                   std::vector<double>& parts) {
  const double len = far - edge;  // signed
  double outer = 1.0;
  for (int k = 0; k < levels; ++k) {
    const double inner = 0.5 * outer;
    double a = edge + len * inner, b = edge + len * outer;
    if (a > b) std::swap(a, b);
    gl_pieces(g, a, b, osc_pieces(b - a, osc_len), nodes, parts);
    outer = inner;
    if (std::fabs(len) * outer < 1e-300) break;
  }
  double a = edge, b = edge + len * outer;
  if (a > b) std::swap(a, b);
  if (b > a) gl_pieces(g, a, b, 1, nodes, parts);
}

// Integral over [a, b] graded into both endpoints.
void graded_segment(const std::function<double(double)>& g, double a, double b,
                    int levels, int nodes, double osc_len,
                    std::vector<double>& parts) {
  const double mid = 0.5 * (a + b);
  graded_toward(g, a, mid, levels, nodes, osc_len, parts);
  graded_toward(g, b, mid, levels, nodes, osc_len, parts);
}

std::vector<double> circle_singulars(const FunctionSource& f) {
  std::vector<double> s;
  for (double v : f.singular_points) s.push_back(std::remainder(v, kTwoPi));
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

// Sorted deduplicated interior breakpoints restricted to (0, cap).
std::vector<double> interior_breaks(std::vector<double> pts, double cap) {
  std::sort(pts.begin(), pts.end());
  std::vector<double> out;
  for (double v : pts) {
    if (!(v > 1e-300 && v < cap)) continue;
    if (!out.empty() && v - out.back() < 1e-13 * std::max(1.0, v)) continue;
    out.push_back(v);
  }
  return out;
}

// Finite-range principal-value core: integral of q over (0, s_end] with the
// given interior breakpoints, graded into 0, s_end and every breakpoint.
double pv_finite(const std::function<double(double)>& q, double s_end,
                 const std::vector<double>& breaks, int levels, int nodes) {
  std::vector<double> parts;
  double prev = 0.0;
  for (double b : breaks) {
    graded_segment(q, prev, b, levels, nodes, 0.0, parts);
    prev = b;
  }
  graded_segment(q, prev, s_end, levels, nodes, 0.0, parts);
  return tree_sum(parts);
}

struct FarField {
  double value = 0.0;
  bool divergent = false;
};

// Dyadic far-field windows [S 2^k, S 2^{k+1}] of a decaying integrand:
// quiet-stop after three consecutive negligible windows, sustained growth
// reported as divergence.
FarField far_field(const std::function<double(double)>& q, double s_from,
                   int nodes) {
  FarField out;
  std::vector<double> parts;
  double total = 0.0;
  int quiet = 0, rising = 0;
  double prev_abs = kInf;
  double lo = s_from;
  for (int k = 0; k < 500; ++k) {
    const double hi = 2.0 * lo;
    std::vector<double> wparts;
    gl_pieces(q, lo, hi, 4, nodes, wparts);
    const double c = tree_sum(wparts);
    parts.push_back(c);
    total += c;
    const double mag = std::fabs(c);
    if (mag <= 1e-14 * (std::fabs(total) + 1e-300) || mag < 1e-305) {
      if (++quiet >= 3) {
        out.value = tree_sum(parts);
        return out;
      }
    } else {
      quiet = 0;
    }
    rising = (k > 4 && mag > prev_abs) ? rising + 1 : 0;
    if (rising >= 8) {
      out.divergent = true;
      return out;
    }
    prev_abs = mag;
    lo = hi;
  }
  out.divergent = true;
  return out;
}

void require_torus(const FunctionSource& f, const char* who) {
  if (f.domain != Domain::torus)
    throw std::invalid_argument(std::string(who) + ": torus source required");
}

void require_line(const FunctionSource& f, const char* who) {
  if (f.domain != Domain::line)
    throw std::invalid_argument(std::string(who) + ": line source required");
}

void reject_singular_x(const FunctionSource& f, double x, const char* who,
                       bool torus) {
  for (double s : f.singular_points) {
    const double d = torus ? std::fabs(std::remainder(x - s, kTwoPi))
                           : std::fabs(x - s);
    if (d < 1e-12 * std::max(1.0, std::fabs(x)))
      throw std::invalid_argument(std::string(who) +
                                  ": x coincides with a singularity of f");
  }
}

}  // namespace

// --- Torus Fourier data ----------------------------------------------------

TrigPolynomial TorusCoefficients::poly() const {
  TrigPolynomial p;
  p.a = a;
  p.b = b;
  return p;
}

std::vector<double> TorusCoefficients::moduli() const {
  std::vector<double> m(a.size());
  for (std::size_t k = 0; k < a.size(); ++k)
    m[k] = 0.5 * std::hypot(a[k], b[k]);
  return m;
}

double TorusCoefficients::eval(double x, int m) const {
  const int top =
      m < 0 ? degree() : std::min(m, degree());
  double sum = c0;
  const double c1 = std::cos(x), s1 = std::sin(x);
  double ck = c1, sk = s1;
  for (int k = 1; k <= top; ++k) {
    if (k > 1) {
      const double cn = ck * c1 - sk * s1;
      sk = sk * c1 + ck * s1;
      ck = cn;
    }
    sum += a[static_cast<std::size_t>(k - 1)] * ck +
           b[static_cast<std::size_t>(k - 1)] * sk;
  }
  return sum;
}

TorusCoefficients fourier_torus(const TrigPolynomial& f, int M) {
  if (M < 0) throw std::invalid_argument("fourier_torus: M >= 0 required");
  TorusCoefficients c;
  const int top = std::min(M, f.degree());
  c.a.assign(f.a.begin(), f.a.begin() + top);
  c.b.assign(f.b.begin(), f.b.begin() + top);
  c.a.resize(static_cast<std::size_t>(M), 0.0);
  c.b.resize(static_cast<std::size_t>(M), 0.0);
  return c;
}

TorusCoefficients fourier_torus(const FunctionSource& f, int M,
                                const BudgetOptions& opt) {
  require_torus(f, "fourier_torus");
  if (M < 0) throw std::invalid_argument("fourier_torus: M >= 0 required");
  TorusCoefficients c;
  c.a.assign(static_cast<std::size_t>(M), 0.0);
  c.b.assign(static_cast<std::size_t>(M), 0.0);

  if (f.trig_degree >= 0) {
    // Equispaced sampling: exact by discrete orthogonality once the grid
    // exceeds the sum of the input degree and the requested degree.
    const int n = 2 * std::max(M, f.trig_degree) + 1;
    std::vector<double> fv(static_cast<std::size_t>(n));
    std::vector<double> xs(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
      xs[static_cast<std::size_t>(j)] = -kPi + (j + 0.5) * kTwoPi / n;
      fv[static_cast<std::size_t>(j)] =
          f.eval(xs[static_cast<std::size_t>(j)]);
    }
    std::vector<double> parts(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) parts[static_cast<std::size_t>(j)] = fv[j];
    c.c0 = tree_sum(parts) / n;
    for (int k = 1; k <= M; ++k) {
      std::vector<double> pc(static_cast<std::size_t>(n)),
          ps(static_cast<std::size_t>(n));
      for (int j = 0; j < n; ++j) {
        pc[static_cast<std::size_t>(j)] = fv[j] * std::cos(k * xs[j]);
        ps[static_cast<std::size_t>(j)] = fv[j] * std::sin(k * xs[j]);
      }
      c.a[static_cast<std::size_t>(k - 1)] = 2.0 * tree_sum(pc) / n;
      c.b[static_cast<std::size_t>(k - 1)] = 2.0 * tree_sum(ps) / n;
    }
    c.c0 *= f.scale;
    for (auto& v : c.a) v *= f.scale;
    for (auto& v : c.b) v *= f.scale;
    return c;
  }

  // Composite mesh: segments between midpoints of adjacent singular points
  // (or the full circle), graded into each singular point, cells split so a
  // fixed rule resolves cos(Mx).
  const double osc_len = kPi / (2.0 * (M + 1));
  const int levels = std::min(opt.quad_levels_log, 916);
  std::vector<double> xs, ws;
  auto collect = [&](double a, double b, double edge) {
    // chain from `edge` (= a or b) toward the other end
    const GLRule& rule = gauss_legendre(opt.gl_nodes);
    const double far = (edge == a) ? b : a;
    const double len = far - edge;
    double outer = 1.0;
    for (int k = 0; k < levels; ++k) {
      const double inner = 0.5 * outer;
      double lo = edge + len * inner, hi = edge + len * outer;
      if (lo > hi) std::swap(lo, hi);
      const int pieces = osc_pieces(hi - lo, osc_len, 1 << 14);
      const double step = (hi - lo) / pieces;
      for (int pc = 0; pc < pieces; ++pc) {
        const double mid = lo + (pc + 0.5) * step, half = 0.5 * step;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
          xs.push_back(mid + half * rule.nodes[i]);
          ws.push_back(half * rule.weights[i]);
        }
      }
      outer = inner;
      if (std::fabs(len) * outer < 1e-300) break;
    }
    {
      double lo = edge, hi = edge + len * outer;
      if (lo > hi) std::swap(lo, hi);
      if (hi > lo) {
        const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
          xs.push_back(mid + half * rule.nodes[i]);
          ws.push_back(half * rule.weights[i]);
        }
      }
    }
  };
  const auto sing = circle_singulars(f);
  if (sing.empty()) {
    const GLRule& rule = gauss_legendre(opt.gl_nodes);
    const int n_cells = std::max(opt.quad_uniform_cells, 8 * (M + 1));
    const double step = kTwoPi / n_cells;
    for (int i = 0; i < n_cells; ++i) {
      const double mid = -kPi + (i + 0.5) * step, half = 0.5 * step;
      for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
        xs.push_back(mid + half * rule.nodes[j]);
        ws.push_back(half * rule.weights[j]);
      }
    }
  } else {
    const auto n = sing.size();
    for (std::size_t i = 0; i < n; ++i) {
      const double s = sing[i];
      const double prev = i == 0 ? sing.back() - kTwoPi : sing[i - 1];
      const double next = i + 1 == n ? sing.front() + kTwoPi : sing[i + 1];
      const double lo = 0.5 * (prev + s), hi = 0.5 * (s + next);
      if (s - lo > 0.0) collect(lo, s, s);
      if (hi - s > 0.0) collect(s, hi, s);
    }
  }

  const std::size_t nn = xs.size();
  std::vector<double> fw(nn);
  for (std::size_t i = 0; i < nn; ++i) {
    const double v = f.eval(xs[i]);
    fw[i] = std::isfinite(v) ? ws[i] * v : 0.0;
  }
  c.c0 = tree_sum(fw) / kTwoPi;
  // per-node incremental rotation over k
  std::vector<double> ck(nn), sk(nn), c1(nn), s1(nn);
  for (std::size_t i = 0; i < nn; ++i) {
    c1[i] = std::cos(xs[i]);
    s1[i] = std::sin(xs[i]);
  }
  std::vector<double> pa(nn), pb(nn);
  for (int k = 1; k <= M; ++k) {
    for (std::size_t i = 0; i < nn; ++i) {
      if (k == 1) {
        ck[i] = c1[i];
        sk[i] = s1[i];
      } else {
        const double cn = ck[i] * c1[i] - sk[i] * s1[i];
        sk[i] = sk[i] * c1[i] + ck[i] * s1[i];
        ck[i] = cn;
      }
      pa[i] = fw[i] * ck[i];
      pb[i] = fw[i] * sk[i];
    }
    c.a[static_cast<std::size_t>(k - 1)] = tree_sum(pa) / kPi;
    c.b[static_cast<std::size_t>(k - 1)] = tree_sum(pb) / kPi;
  }
  c.c0 *= f.scale;
  for (auto& v : c.a) v *= f.scale;
  for (auto& v : c.b) v *= f.scale;
  return c;
}

FunctionSource sm_source(const TorusCoefficients& c, int M, std::string tag) {
  auto cc = std::make_shared<TorusCoefficients>(c);
  const int top = M < 0 ? c.degree() : std::min(M, c.degree());
  FunctionSource s;
  s.domain = Domain::torus;
  s.eval = [cc, top](double x) { return cc->eval(x, top); };
  s.tag = std::move(tag);
  s.trig_degree = std::max(top, 0);
  return s;
}

// --- Periodic Hilbert transform -------------------------------------------

TrigPolynomial hilbert_periodic(const TrigPolynomial& f) {
  return conjugate(f);
}

FunctionSource hilbert_periodic(const FunctionSource& f,
                                const BudgetOptions& opt, int max_degree,
                                double decay_tol) {
  require_torus(f, "hilbert_periodic");

  if (f.family == "gdelta" && f.family_params.size() == 3) {
    // Exact conjugate rewrite: the sine series maps to minus the cosine
    // series with the same coefficients, and vice versa without the sign.
    const double delta = f.family_params[0];
    const bool sine = f.family_params[1] != 0.0;
    const auto terms = static_cast<std::int64_t>(f.family_params[2]);
    FunctionSource out = src_gdelta(delta, !sine, terms);
    out.scale = sine ? -f.scale : f.scale;
    out.tag = "H[" + f.tag + "]";
    return out;
  }

  const int degree = f.trig_degree >= 0 ? f.trig_degree : max_degree;
  TorusCoefficients c = fourier_torus(f, degree, opt);

  if (f.trig_degree < 0) {
    const auto m = c.moduli();
    double head = 0.0, tail = 0.0;
    const std::size_t cut =
        static_cast<std::size_t>(0.9 * static_cast<double>(m.size()));
    for (std::size_t k = 0; k < m.size(); ++k) {
      head = std::max(head, m[k]);
      if (k >= cut) tail = std::max(tail, m[k]);
    }
    const double floor_zero = 1e-12 * std::max(1.0, std::fabs(c.c0));
    if (head > floor_zero && tail > decay_tol * head) {
      std::ostringstream os;
      os << "hilbert_periodic: coefficient decay check failed at degree "
         << degree << " (tail-decile modulus " << tail << " vs head " << head
         << "); the expansion degree is insufficient for this source";
      throw std::runtime_error(os.str());
    }
  }

  // The coefficients already carry f.scale, so the output keeps scale 1.
  TrigPolynomial g = conjugate(c.poly());  // constant term annihilated
  return src_poly(g, "H[" + f.tag + "]");
}

Estimate hilbert_periodic_pv(const FunctionSource& f, double x,
                             const BudgetOptions& opt) {
  require_torus(f, "hilbert_periodic_pv");
  reject_singular_x(f, x, "hilbert_periodic_pv", true);

  auto q = [&f, x](double s) {
    const double d = f.eval(x - s) - f.eval(x + s);
    if (!std::isfinite(d)) return 0.0;
    return d / std::tan(0.5 * s);
  };
  std::vector<double> raw;
  for (double s0 : f.singular_points) {
    raw.push_back(std::fabs(std::remainder(x - s0, kTwoPi)));
    raw.push_back(std::fabs(std::remainder(s0 - x, kTwoPi)));
  }
  const auto breaks = interior_breaks(raw, kPi);

  const int nodes = opt.gl_nodes;
  const double base =
      pv_finite(q, kPi, breaks, opt.quad_levels, nodes) / kTwoPi;
  const double fine =
      pv_finite(q, kPi, breaks, opt.quad_levels + 12,
                std::min(128, nodes + 8)) /
      kTwoPi;
  Estimate e;
  e.value = fine * f.scale;
  e.error = std::fabs(fine - base) * std::fabs(f.scale);
  return e;
}

Estimate hilbert_line(const FunctionSource& f, double x,
                      const BudgetOptions& opt) {
  require_line(f, "hilbert_line");
  reject_singular_x(f, x, "hilbert_line", false);

  auto q = [&f, x](double s) {
    const double d = f.eval(x - s) - f.eval(x + s);
    if (!std::isfinite(d)) return 0.0;
    return d / s;
  };
  std::vector<double> raw{std::fabs(x)};
  for (double s0 : f.singular_points) raw.push_back(std::fabs(x - s0));
  double s_near = 1.0;
  {
    auto all = interior_breaks(raw, kInf);
    if (!all.empty()) s_near = std::max(1.0, all.back());
  }
  const auto breaks = interior_breaks(raw, s_near);

  const int nodes = opt.gl_nodes;
  auto run = [&](int levels, int nn, Estimate& out) {
    const double inner = pv_finite(q, s_near, breaks, levels, nn);
    const FarField far = far_field(q, s_near, nn);
    if (far.divergent) {
      out = Estimate::diverged();
      return false;
    }
    out.value = (inner + far.value) / kPi;
    return true;
  };
  Estimate base, fine;
  if (!run(opt.quad_levels, nodes, base)) return base;
  if (!run(opt.quad_levels + 12, std::min(128, nodes + 8), fine)) return fine;
  Estimate e;
  e.value = fine.value * f.scale;
  e.error = std::fabs(fine.value - base.value) * std::fabs(f.scale);
  return e;
}

// --- Line Fourier transform ------------------------------------------------

double FourierPoint::modulus() const { return std::hypot(re, im); }

namespace {

struct WindowSums {
  double re = 0.0, im = 0.0, abs = 0.0, edge_sup = 0.0;
};

// cos/sin moments of f over [lo, hi] on one side of the origin
// (side = +1 or -1), cells split for the oscillation and graded toward any
// singular points of f inside.
WindowSums window_moments(const FunctionSource& f, double t, double side,
                          double lo, double hi, double osc_len, int levels,
                          int nodes) {
  WindowSums out;
  auto fre = [&](double s) {
    const double v = f.eval(side * s);
    return std::isfinite(v) ? v * std::cos(t * side * s) : 0.0;
  };
  auto fim = [&](double s) {
    const double v = f.eval(side * s);
    return std::isfinite(v) ? v * std::sin(t * side * s) : 0.0;
  };
  auto fabsf = [&](double s) {
    const double v = f.eval(side * s);
    return std::isfinite(v) ? std::fabs(v) : 0.0;
  };
  std::vector<double> pts;
  for (double s : f.singular_points) {
    const double u = side * s;  // map to the positive half-line coordinate
    if (u > lo && u < hi) pts.push_back(u);
  }
  std::sort(pts.begin(), pts.end());
  std::vector<double> pre, pim, pab;
  double prev = lo;
  auto seg = [&](double a, double b) {
    if (b <= a) return;
    const bool grade = levels > 0;
    if (grade) {
      graded_segment(fre, a, b, levels, nodes, osc_len, pre);
      graded_segment(fim, a, b, levels, nodes, osc_len, pim);
      graded_segment(fabsf, a, b, levels, nodes, osc_len, pab);
    } else {
      gl_pieces(fre, a, b, osc_pieces(b - a, osc_len), nodes, pre);
      gl_pieces(fim, a, b, osc_pieces(b - a, osc_len), nodes, pim);
      gl_pieces(fabsf, a, b, osc_pieces(b - a, osc_len), nodes, pab);
    }
  };
  for (double p : pts) {
    seg(prev, p);
    prev = p;
  }
  seg(prev, hi);
  out.re = tree_sum(pre);
  out.im = tree_sum(pim);
  out.abs = tree_sum(pab);
  const double ev = f.eval(side * hi);
  out.edge_sup = std::isfinite(ev) ? std::fabs(ev) : 0.0;
  return out;
}

}  // namespace

FourierPoint fourier_line(const FunctionSource& f, double t,
                          const BudgetOptions& opt, double rel_tol) {
  require_line(f, "fourier_line");
  FourierPoint out;
  const double osc_len = t != 0.0 ? 0.5 * kPi / std::fabs(t) : 0.0;
  const int nodes = opt.gl_nodes;

  const bool mirror = !f.support_positive;
  const bool sym = mirror && (f.even || f.odd);

  std::vector<double> re_parts, im_parts;
  double re = 0.0, im = 0.0, abs_total = 0.0;
  double prev_abs = -1.0;
  int quiet = 0;
  double lo = 0.0, hi = 1.0;
  for (int k = 0; k < 200; ++k) {
    // [0,1] graded when f has singular anchors; beyond: plain octaves
    const int levels =
        k == 0 && !f.singular_points.empty() ? opt.quad_levels : 0;
    WindowSums pos =
        window_moments(f, t, +1.0, lo, hi, osc_len, levels, nodes);
    WindowSums neg;
    if (sym) {
      neg.re = f.even ? pos.re : -pos.re;
      neg.im = f.even ? -pos.im : pos.im;
      neg.abs = pos.abs;
      neg.edge_sup = pos.edge_sup;
    } else if (mirror) {
      neg = window_moments(f, t, -1.0, lo, hi, osc_len, levels, nodes);
    }
    re_parts.push_back(pos.re + neg.re);
    im_parts.push_back(pos.im + neg.im);
    re += pos.re + neg.re;
    im += pos.im + neg.im;
    const double wabs = pos.abs + neg.abs;
    abs_total += wabs;

    // Remainder bounds: geometric decay of the window mass, or the
    // oscillatory bound 2 sup_{|x| >= hi} |f| / |t| for monotone tails.
    double bound = kInf;
    if (prev_abs > 0.0) {
      const double rho = wabs / prev_abs;
      if (rho < 0.95) bound = wabs * rho / (1.0 - rho);
    }
    if (wabs <= 1e-305 * std::max(1.0, abs_total)) bound = std::min(bound, 0.0);
    if (t != 0.0) {
      const double sup_edge = pos.edge_sup + neg.edge_sup;
      bound = std::min(bound, 2.0 * sup_edge / std::fabs(t));
    }
    const double ref =
        std::max(std::hypot(re, im), 1e-3 * abs_total) + 1e-300;
    if (bound <= rel_tol * ref) {
      out.error = bound;
      if (++quiet >= 1) {
        out.re = tree_sum(re_parts) * f.scale;
        out.im = tree_sum(im_parts) * f.scale;
        out.error = bound * std::fabs(f.scale);
        return out;
      }
    } else {
      quiet = 0;
    }
    prev_abs = wabs;
    lo = hi;
    hi *= 2.0;
  }
  out.stabilized = false;
  out.re = tree_sum(re_parts) * f.scale;
  out.im = tree_sum(im_parts) * f.scale;
  out.error = kInf;
  return out;
}

FunctionSource transform_source(const FunctionSource& f, double window,
                                const BudgetOptions& opt, double rel_tol) {
  require_line(f, "transform_source");
  auto inner = std::make_shared<FunctionSource>(f);
  inner->scale = 1.0;
  auto optc = std::make_shared<BudgetOptions>(opt);
  FunctionSource s;
  s.domain = Domain::line;
  s.eval = [inner, optc, rel_tol](double t) {
    return fourier_line(*inner, t, *optc, rel_tol).modulus();
  };
  s.scale = std::fabs(f.scale);
  s.tag = "F[" + f.tag + "]";
  s.window = window;
  s.even = true;  // |F| of a real source
  s.osc_length = 0.5 * kPi / std::max(1.0, f.window);
  return s;
}

Estimate fourier_line_partial_inverse(const FunctionSource& f, double M,
                                      double x, const BudgetOptions& opt,
                                      double rel_tol) {
  require_line(f, "fourier_line_partial_inverse");
  if (!(M > 0.0))
    throw std::invalid_argument("fourier_line_partial_inverse: M > 0");
  // (2pi)^{-1} int_{-M}^{M} F(t) e^{-itx} dt, with F(-t) = conj F(t):
  // pi^{-1} int_0^M [Re F(t) cos(tx) + Im F(t) sin(tx)] dt.
  const double osc_len =
      0.5 * kPi / std::max({1.0, std::fabs(x), f.window * 0.25});
  const int pieces = osc_pieces(M, osc_len, 1 << 14);
  const GLRule& rule = gauss_legendre(opt.gl_nodes);
  std::vector<double> parts;
  double err = 0.0;
  const double step = M / pieces;
  for (int c = 0; c < pieces; ++c) {
    const double mid = (c + 0.5) * step, half = 0.5 * step;
    double cell = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      const double t = mid + half * rule.nodes[i];
      const FourierPoint F = fourier_line(f, t, opt, rel_tol);
      err += half * rule.weights[i] * F.error;
      cell += half * rule.weights[i] *
              (F.re * std::cos(t * x) + F.im * std::sin(t * x));
    }
    parts.push_back(cell);
  }
  Estimate e;
  e.value = tree_sum(parts) / kPi;
  e.error = err / kPi;
  return e;
}

ParsevalReport parseval_line(const FunctionSource& f,
                             const BudgetOptions& opt) {
  require_line(f, "parseval_line");
  ParsevalReport rep;
  {
    LpEvaluator ev(f, opt, true);
    const Estimate n2 = ev(2.0);
    rep.rhs = kTwoPi * n2.value * n2.value;
  }
  // int |F|^2 dt: F is Hermitian for real f, so integrate 2 int_0^T.
  const double osc_len = 0.5 * kPi / std::max(1.0, f.window);
  const GLRule& rule = gauss_legendre(opt.gl_nodes);
  std::vector<double> parts;
  double total = 0.0;
  double lo = 0.0, hi = 1.0;
  int quiet = 0;
  for (int k = 0; k < 36 && quiet < 2; ++k) {
    const int pieces = osc_pieces(hi - lo, osc_len, 1 << 14);
    const double step = (hi - lo) / pieces;
    double wsum = 0.0;
    for (int c = 0; c < pieces; ++c) {
      const double mid = lo + (c + 0.5) * step, half = 0.5 * step;
      double cell = 0.0;
      for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double t = mid + half * rule.nodes[i];
        const double m = fourier_line(f, t, opt, 1e-10).modulus();
        cell += half * rule.weights[i] * m * m;
      }
      wsum += cell;
      parts.push_back(cell);
    }
    total += wsum;
    if (std::fabs(wsum) <= 1e-13 * (total + 1e-300))
      ++quiet;
    else
      quiet = 0;
    lo = hi;
    hi *= 2.0;
  }
  rep.lhs = 2.0 * tree_sum(parts);
  rep.rel_gap = std::fabs(rep.lhs - rep.rhs) /
                std::max({std::fabs(rep.lhs), std::fabs(rep.rhs), 1e-300});
  return rep;
}

// --- Sharp and shape constants ---------------------------------------------

SharpConstant sharp_constant(SharpConstantKind kind, double p, double param) {
  SharpConstant out;
  switch (kind) {
    case SharpConstantKind::pichorides:
      if (!(p > 1.0))
        throw std::invalid_argument("sharp_constant: pichorides needs p > 1");
      out.value = pichorides(p);
      return out;
    case SharpConstantKind::gamma_weight: {
      if (!(param > 0.0 && param < 1.0))
        throw std::invalid_argument(
            "sharp_constant: gamma_weight needs gamma in (0,1)");
      const double p0 = 1.0 / param;
      if (!(p > 1.0 && p < p0))
        throw std::invalid_argument(
            "sharp_constant: gamma_weight needs p in (1, 1/gamma)");
      out.value = 1.0 / (param * param * (p0 - p));
      out.shape_only = true;  // asymptote near p0, prefactor normalized
      return out;
    }
    case SharpConstantKind::riesz: {
      if (!(p > 1.0))
        throw std::invalid_argument("sharp_constant: riesz needs p > 1");
      const double d = param > 0.0 ? param : 1.0;
      out.value = std::pow(p, d);
      out.shape_only = true;
      return out;
    }
    case SharpConstantKind::paley:
      if (!(p >= 2.0))
        throw std::invalid_argument("sharp_constant: paley needs p >= 2");
      out.value = p;
      out.shape_only = true;
      return out;
    case SharpConstantKind::hausdorff_young:
      if (!(p >= 2.0))
        throw std::invalid_argument(
            "sharp_constant: hausdorff_young needs p >= 2");
      out.value = std::pow(kTwoPi, 1.0 / p);
      return out;
    case SharpConstantKind::maximal_s:
      if (!(p > 1.0))
        throw std::invalid_argument("sharp_constant: maximal_s needs p > 1");
      out.value = std::pow(p, 4) / std::pow(p - 1.0, 3);
      out.shape_only = true;
      return out;
    case SharpConstantKind::maximal_R:
      if (!(p > 1.0))
        throw std::invalid_argument("sharp_constant: maximal_R needs p > 1");
      out.value = std::pow(p, 4) / ((p - 1.0) * (p - 1.0));
      out.shape_only = true;
      return out;
    case SharpConstantKind::maximal_F:
      if (!(p > 1.0))
        throw std::invalid_argument("sharp_constant: maximal_F needs p > 1");
      out.value = 1.0 / ((p - 1.0) * (p - 1.0));
      out.shape_only = true;
      return out;
  }
  throw std::invalid_argument("sharp_constant: unknown kind");
}

// --- Weight operator -------------------------------------------------------

WeightGamma weight_gamma_apply(const std::vector<double>& a,
                               const std::vector<double>& b, double gamma) {
  if (!(gamma > 0.0 && gamma < 1.0))
    throw std::invalid_argument("weight_gamma_apply: gamma in (0,1) required");
  auto check = [](const std::vector<double>& v, const char* name) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] < 0.0)
        throw std::invalid_argument(
            std::string("weight_gamma_apply: ") + name +
            " must be nonnegative (monotone-coefficient assumption)");
      if (i > 0 && v[i] > v[i - 1])
        throw std::invalid_argument(
            std::string("weight_gamma_apply: ") + name +
            " must be nonincreasing (monotone-coefficient assumption)");
    }
  };
  check(a, "a");
  check(b, "b");
  WeightGamma w;
  w.gamma = gamma;
  w.p0 = 1.0 / gamma;
  const std::size_t n = std::max(a.size(), b.size());
  for (std::size_t k = 0; k < n; ++k) {
    w.lambda.push_back(k < a.size() ? a[k] : 0.0);
    w.lambda.push_back(k < b.size() ? b[k] : 0.0);
  }
  while (!w.lambda.empty() && w.lambda.back() == 0.0) w.lambda.pop_back();
  return w;
}

Estimate gamma_norm(const WeightGamma& w, double p) {
  if (!(p > 1.0 && p < w.p0))
    throw std::invalid_argument("gamma_norm: p in (1, 1/gamma) required");
  return lp_sequence(seq_dense(w.lambda, "lambda"), p,
                     SeqVariant::gamma_weight, w.gamma);
}

Estimate gamma_norm(const WeightedSequence& lambda, double gamma, double p) {
  if (!(gamma > 0.0 && gamma < 1.0))
    throw std::invalid_argument("gamma_norm: gamma in (0,1) required");
  if (!(p > 1.0 && p < 1.0 / gamma))
    throw std::invalid_argument("gamma_norm: p in (1, 1/gamma) required");
  return lp_sequence(lambda, p, SeqVariant::gamma_weight, gamma);
}

FunctionSource ugamma_source(const FunctionSource& f, double gamma) {
  require_torus(f, "ugamma_source");
  if (!(gamma > 0.0 && gamma < 1.0))
    throw std::invalid_argument("ugamma_source: gamma in (0,1) required");
  FunctionSource s;
  s.domain = Domain::torus;
  auto inner = std::make_shared<FunctionSource>(f);
  s.eval = [inner, gamma](double x) {
    const double t = std::fabs(std::remainder(x, kTwoPi));
    if (t == 0.0) return kInf;
    return std::pow(t, -gamma) * inner->eval(x);
  };
  s.scale = f.scale;
  s.tag = "ugamma:g=" + std::to_string(gamma) + "[" + f.tag + "]";
  s.singular_points = f.singular_points;
  s.singular_points.push_back(0.0);
  s.even = f.even;
  s.odd = f.odd;
  return s;
}

// --- Maximal operators -----------------------------------------------------

MaximalResult maximal_s_star(const TorusCoefficients& c, int m_max) {
  MaximalResult out;
  const int top = m_max < 0 ? c.degree() : std::min(m_max, c.degree());
  auto cc = std::make_shared<TorusCoefficients>(c);
  out.fn.domain = Domain::torus;
  out.fn.eval = [cc, top](double x) {
    double partial = cc->c0;
    double best = 0.0;
    const double c1 = std::cos(x), s1 = std::sin(x);
    double ck = c1, sk = s1;
    for (int k = 1; k <= top; ++k) {
      if (k > 1) {
        const double cn = ck * c1 - sk * s1;
        sk = sk * c1 + ck * s1;
        ck = cn;
      }
      partial += cc->a[static_cast<std::size_t>(k - 1)] * ck +
                 cc->b[static_cast<std::size_t>(k - 1)] * sk;
      best = std::max(best, std::fabs(partial));
    }
    return top == 0 ? std::fabs(cc->c0) : best;
  };
  out.fn.tag = "s_star";
  out.fn.osc_length = kPi / std::max(1, top);
  for (int m = 1; m <= top; ++m) out.grid.push_back(m);
  out.note = "grid supremum over M = 1..top: a lower bound of the true sup";
  return out;
}

MaximalResult maximal_F_star(const FunctionSource& f,
                             std::vector<double> a_grid,
                             const BudgetOptions& opt) {
  require_line(f, "maximal_F_star");
  if (a_grid.empty())
    throw std::invalid_argument("maximal_F_star: empty grid");
  std::sort(a_grid.begin(), a_grid.end());
  auto inner = std::make_shared<FunctionSource>(f);
  auto grid = std::make_shared<std::vector<double>>(a_grid);
  auto optc = std::make_shared<BudgetOptions>(opt);
  MaximalResult out;
  out.fn.domain = Domain::line;
  out.fn.eval = [inner, grid, optc](double x) {
    const double osc_len = x != 0.0 ? 0.5 * kPi / std::fabs(x) : 0.0;
    double re = 0.0, im = 0.0, best = 0.0;
    double prev = 0.0;
    const bool mirror = !inner->support_positive;
    for (double a : *grid) {
      if (a <= prev) continue;
      const int levels = prev == 0.0 ? optc->quad_levels : 0;
      WindowSums pos = window_moments(*inner, x, +1.0, prev, a, osc_len,
                                      levels, optc->gl_nodes);
      re += pos.re;
      im += pos.im;
      if (mirror) {
        WindowSums neg = window_moments(*inner, x, -1.0, prev, a, osc_len,
                                        levels, optc->gl_nodes);
        re += neg.re;
        im += neg.im;
      }
      best = std::max(best, std::hypot(re, im));
      prev = a;
    }
    return best;
  };
  out.fn.scale = std::fabs(f.scale);
  out.fn.tag = "F_star[" + f.tag + "]";
  out.fn.window = 64.0;
  out.grid = std::move(a_grid);
  out.note = "grid supremum over the a-grid: a lower bound of the true sup";
  return out;
}

MaximalResult maximal_R_star(const FunctionSource& f,
                             std::vector<double> a_grid,
                             const BudgetOptions& opt) {
  require_line(f, "maximal_R_star");
  if (a_grid.empty())
    throw std::invalid_argument("maximal_R_star: empty grid");
  std::sort(a_grid.begin(), a_grid.end());
  auto inner = std::make_shared<FunctionSource>(f);
  auto grid = std::make_shared<std::vector<double>>(a_grid);
  auto optc = std::make_shared<BudgetOptions>(opt);
  MaximalResult out;
  out.fn.domain = Domain::line;
  out.fn.eval = [inner, grid, optc](double x) {
    double best = 0.0;
    for (double a : *grid) {
      // int f(x+s) sin(as)/s ds over both signs of s
      auto g = [&](double s) {
        const double v = inner->eval(x + s);
        if (!std::isfinite(v)) return 0.0;
        const double kern = s != 0.0 ? std::sin(a * s) / s : a;
        return v * kern;
      };
      const double osc_len = 0.5 * kPi / a;
      std::vector<double> parts;
      for (double side : {+1.0, -1.0}) {
        auto gs = [&](double s) { return g(side * s); };
        // inner [0,1] graded at 0 images of f's singular points
        std::vector<double> pts;
        for (double s0 : inner->singular_points) {
          const double u = side * (s0 - x);
          if (u > 0.0 && u < 1.0) pts.push_back(u);
        }
        std::sort(pts.begin(), pts.end());
        double prev = 0.0;
        for (double p : pts) {
          graded_segment(gs, prev, p, optc->quad_levels, optc->gl_nodes,
                         osc_len, parts);
          prev = p;
        }
        graded_segment(gs, prev, 1.0, optc->quad_levels, optc->gl_nodes,
                       osc_len, parts);
        double lo = 1.0;
        double total = 0.0;
        int quiet = 0;
        for (int k = 0; k < 60 && quiet < 3; ++k) {
          std::vector<double> wp;
          gl_pieces(gs, lo, 2.0 * lo, osc_pieces(lo, osc_len), optc->gl_nodes,
                    wp);
          const double cw = tree_sum(wp);
          parts.push_back(cw);
          total += cw;
          if (std::fabs(cw) <= 1e-12 * (std::fabs(total) + 1e-300))
            ++quiet;
          else
            quiet = 0;
          lo *= 2.0;
        }
      }
      best = std::max(best, std::fabs(tree_sum(parts)));
    }
    return best;
  };
  out.fn.scale = std::fabs(f.scale);
  out.fn.tag = "R_star[" + f.tag + "]";
  out.fn.window = std::min(f.window, 64.0);
  out.grid = std::move(a_grid);
  out.note = "grid supremum over the a-grid: a lower bound of the true sup";
  return out;
}

// --- Classical bound checks ------------------------------------------------

const char* bound_check_name(BoundCheckKind kind) {
  switch (kind) {
    case BoundCheckKind::hilbert_lp: return "hilbert_lp";
    case BoundCheckKind::hilbert_gls: return "hilbert_gls";
    case BoundCheckKind::riesz_sM: return "riesz_sM";
    case BoundCheckKind::maximal_s_shape: return "maximal_s_shape";
    case BoundCheckKind::paley: return "paley";
    case BoundCheckKind::hy_discrete: return "hy_discrete";
    case BoundCheckKind::hy_line: return "hy_line";
    case BoundCheckKind::leindler_T: return "leindler_T";
    case BoundCheckKind::leindler_U: return "leindler_U";
    case BoundCheckKind::theorem_gamma: return "theorem_gamma";
  }
  return "unknown";
}

namespace {

std::vector<TrigPolynomial> corpus_slice(int limit) {
  const auto& all = trig_corpus();
  if (limit <= 0 || limit >= static_cast<int>(all.size())) return all;
  return {all.begin(), all.begin() + limit};
}

void push_record(BoundCheckReport& rep, std::string id, double p, double lhs,
                 double rhs, double tol) {
  CheckRecord r;
  r.id = std::move(id);
  r.p = p;
  r.lhs = lhs;
  r.rhs = rhs;
  r.ratio = rhs != 0.0 ? lhs / rhs : kInf;
  r.pass = std::isfinite(lhs) && std::isfinite(rhs) &&
           lhs <= rhs * (1.0 + tol);
  rep.records.push_back(r);
  rep.aggregate_pass = rep.aggregate_pass && r.pass;
}

std::string poly_id(std::size_t i) {
  return "poly#" + std::to_string(i);
}

// Least-squares slope of y against x.
double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  const double d = n * sxx - sx * sx;
  return (n * sxy - sx * sy) / d;
}

}  // namespace

BoundCheckReport bound_check(BoundCheckKind kind, const BoundCheckConfig& cfg) {
  BoundCheckReport rep;
  rep.kind = bound_check_name(kind);
  const BudgetOptions& opt = cfg.budget;

  switch (kind) {
    case BoundCheckKind::hilbert_lp: {
      const double tol = cfg.tol >= 0.0 ? cfg.tol : 1e-6;
      const auto p_grid = cfg.p_grid.empty()
                              ? std::vector<double>{1.25, 1.5, 2, 3, 4, 8}
                              : cfg.p_grid;
      const auto corpus = corpus_slice(cfg.corpus_limit);
      for (std::size_t i = 0; i < corpus.size(); ++i) {
        LpEvaluator ef(src_poly(corpus[i], poly_id(i)), opt);
        LpEvaluator eh(src_poly(hilbert_periodic(corpus[i]), "H"), opt);
        for (double p : p_grid) {
          push_record(rep, poly_id(i), p, eh(p).value,
                      pichorides(p) * ef(p).value, tol);
        }
      }
      rep.note = "lhs = |H f|_p, rhs = K_H(p) |f|_p";
      return rep;
    }

    case BoundCheckKind::hilbert_gls: {
      const double tol = cfg.tol >= 0.0 ? cfg.tol : 1e-5;
      const std::vector<std::pair<std::string, PsiFunction>> psis = {
          {"exp:0.5", make_exponent_psi(0.5)},
          {"power:1.2,6,1,1", make_power_psi(1.2, 6.0, 1.0, 1.0)}};
      const auto corpus = corpus_slice(cfg.corpus_limit);
      for (std::size_t i = 0; i < corpus.size(); ++i) {
        const NormInput nf = norm_input(src_poly(corpus[i], poly_id(i)), opt);
        const NormInput nh =
            norm_input(src_poly(hilbert_periodic(corpus[i]), "H"), opt);
        for (const auto& [ptag, psi] : psis) {
          const PsiFunction psi_h =
              transform_psi(psi, PsiTransform::hilbert());
          const double lhs = gls_norm(nh, psi_h, opt).value;
          const double rhs = gls_norm(nf, psi, opt).value;
          push_record(rep, poly_id(i) + "|" + ptag, 0.0, lhs, rhs, tol);
        }
      }
      rep.note = "lhs = GLS norm of H f against the transformed weight";
      return rep;
    }

    case BoundCheckKind::riesz_sM: {
      const double tol = cfg.tol >= 0.0 ? cfg.tol : 1e-6;
      const auto p_grid =
          cfg.p_grid.empty() ? std::vector<double>{4, 8} : cfg.p_grid;
      const auto m_grid =
          cfg.m_grid.empty() ? std::vector<int>{8, 64} : cfg.m_grid;
      const auto corpus = corpus_slice(cfg.corpus_limit);
      for (std::size_t i = 0; i < corpus.size(); ++i) {
        LpEvaluator ef(src_poly(corpus[i], poly_id(i)), opt);
        for (int m : m_grid) {
          LpEvaluator es(src_poly(partial_sum(corpus[i], m), "sM"), opt);
          for (double p : p_grid) {
            push_record(rep, poly_id(i) + "|M=" + std::to_string(m), p,
                        es(p).value, 2.0 * p * ef(p).value, tol);
          }
        }
      }
      rep.note = "lhs = |s_M f|_p, rhs = 2 p |f|_p (frozen multiplier cap 2)";
      return rep;
    }

    case BoundCheckKind::maximal_s_shape: {
      const double tol = cfg.tol >= 0.0 ? cfg.tol : 1e-6;
      const auto p_grid =
          cfg.p_grid.empty() ? std::vector<double>{1.5, 4} : cfg.p_grid;
      const auto corpus = corpus_slice(cfg.corpus_limit);
      for (std::size_t i = 0; i < corpus.size(); ++i) {
        LpEvaluator ef(src_poly(corpus[i], poly_id(i)), opt);
        MaximalResult star =
            maximal_s_star(fourier_torus(corpus[i], corpus[i].degree()));
        LpEvaluator es(star.fn, opt);
        for (double p : p_grid) {
          const double shape = std::pow(p, 4) / std::pow(p - 1.0, 3);
          push_record(rep, poly_id(i), p, es(p).value, shape * ef(p).value,
                      tol);
        }
      }
      rep.note =
          "lhs = |s* f|_p, rhs = p^4/(p-1)^3 |f|_p (frozen multiplier cap 1)";
      return rep;
    }

    case BoundCheckKind::paley: {
      const double tol = cfg.tol >= 0.0 ? cfg.tol : 1e-6;
      const auto p_grid =
          cfg.p_grid.empty() ? std::vector<double>{2, 3, 4, 8} : cfg.p_grid;
      const auto corpus = corpus_slice(cfg.corpus_limit);
      for (std::size_t i = 0; i < corpus.size(); ++i) {
        LpEvaluator ef(src_poly(corpus[i], poly_id(i)), opt);
        const WeightedSequence mods =
            seq_dense(exp_coeff_moduli(corpus[i]), "moduli");
        for (double p : p_grid) {
          // coefficient norm over both frequency signs
          const double cnu = std::pow(2.0, 1.0 / p) *
                             lp_sequence(mods, p, SeqVariant::nu).value;
          push_record(rep, poly_id(i), p, ef(p).value, 2.0 * p * cnu, tol);
        }
      }
      rep.note =
          "lhs = |f|_p, rhs = p (1 + sup|phi|) |c|_{p,nu} with the "
          "exponential system (frozen multiplier cap 1)";
      return rep;
    }

    case BoundCheckKind::hy_discrete: {
      const double tol = cfg.tol >= 0.0 ? cfg.tol : 1e-9;
      const auto p_grid =
          cfg.p_grid.empty() ? std::vector<double>{1.25, 1.5, 2} : cfg.p_grid;
      const auto corpus = corpus_slice(cfg.corpus_limit);
      for (std::size_t i = 0; i < corpus.size(); ++i) {
        LpEvaluator ef(src_poly(corpus[i], poly_id(i)), opt);
        const WeightedSequence mods =
            seq_dense(exp_coeff_moduli(corpus[i]), "moduli");
        for (double p : p_grid) {
          if (!(p > 1.0 && p <= 2.0))
            throw std::invalid_argument("hy_discrete: p in (1,2] required");
          const double q = p / (p - 1.0);
          const double lhs = std::pow(2.0, 1.0 / q) *
                             lp_sequence(mods, q, SeqVariant::plain).value;
          push_record(rep, poly_id(i), p, lhs, ef(p).value, tol);
        }
      }
      rep.note = "lhs = |c|_q over both frequency signs, rhs = |f|_p";
      return rep;
    }

    case BoundCheckKind::hy_line: {
      const double tol = cfg.tol >= 0.0 ? cfg.tol : 1e-6;
      const auto p_grid =
          cfg.p_grid.empty() ? std::vector<double>{2, 4} : cfg.p_grid;
      const FunctionSource f = src_gaussian();
      LpEvaluator ef(f, opt, true);
      LpEvaluator eF(transform_source(f, 24.0, opt, 1e-9), opt, true);
      for (double p : p_grid) {
        if (!(p >= 2.0))
          throw std::invalid_argument("hy_line: p >= 2 required");
        const double q = p / (p - 1.0);
        push_record(rep, f.tag, p, eF(p).value,
                    std::pow(kTwoPi, 1.0 / p) * ef(q).value, tol);
      }
      rep.note = "lhs = |F f|_p, rhs = (2pi)^{1/p} |f|_{p/(p-1)}";
      return rep;
    }

    case BoundCheckKind::leindler_T:
    case BoundCheckKind::leindler_U: {
      const double tol = cfg.tol >= 0.0 ? cfg.tol : 1e-12;
      std::vector<double> p_grid = cfg.p_grid;
      if (p_grid.empty()) {
        // 12 log-spaced points in [1, 8]
        for (int i = 0; i < 12; ++i)
          p_grid.push_back(std::exp(std::log(8.0) * i / 11.0));
      }
      const WeightedSequence x =
          seq_leindler_corpus(cfg.s, cfg.theta, cfg.n_trunc);
      const WeightedSequence tx = leindler_apply(
          x, kind == BoundCheckKind::leindler_T ? LeindlerOp::T
                                                : LeindlerOp::U);
      std::ostringstream id;
      id << "leindler:s=" << cfg.s << ",theta=" << cfg.theta;
      for (double p : p_grid) {
        const double lhs = lp_sequence(tx, p, SeqVariant::beta).value;
        const double rhs = p * lp_sequence(x, p, SeqVariant::beta).value;
        push_record(rep, id.str(), p, lhs, rhs, tol);
      }
      rep.note = "lhs = |Op x|_{p,beta}, rhs = p |x|_{p,beta}";
      return rep;
    }

    case BoundCheckKind::theorem_gamma: {
      const double gamma = cfg.gamma;
      const double p0 = 1.0 / gamma;
      std::vector<double> p_grid = cfg.p_grid;
      if (p_grid.empty())
        p_grid = {0.8 * p0, 0.9 * p0, 0.95 * p0};
      const FunctionSource f =
          src_gdelta(cfg.delta, false, opt.series_terms);
      LpEvaluator eu(ugamma_source(f, gamma), opt);
      const WeightedSequence lambda = seq_log_lambda(cfg.delta);
      std::vector<double> xs, ys;
      std::ostringstream id;
      id << "ugamma:gamma=" << gamma << ",Delta=" << cfg.delta;
      for (double p : p_grid) {
        const double lhs = eu(p).value;
        const double rhs = gamma_norm(lambda, gamma, p).value;
        CheckRecord r;
        r.id = id.str();
        r.p = p;
        r.lhs = lhs;
        r.rhs = rhs;
        r.ratio = lhs / rhs;
        r.pass = std::isfinite(lhs) && std::isfinite(rhs);
        rep.records.push_back(r);
        rep.aggregate_pass = rep.aggregate_pass && r.pass;
        xs.push_back(-std::log(p0 - p));
        ys.push_back(std::log(r.ratio));
      }
      rep.fit_exponent = fit_slope(xs, ys);
      const bool band = rep.fit_exponent >= 0.5 && rep.fit_exponent <= 1.7;
      rep.aggregate_pass = rep.aggregate_pass && band;
      rep.note =
          "blow-up order of |U_gamma f|_p / |lambda|^{(gamma)}_p fitted "
          "against (p0 - p)^{-1}; accepted band [0.5, 1.7]";
      return rep;
    }
  }
  throw std::invalid_argument("bound_check: unknown kind");
}

}  // namespace gls
