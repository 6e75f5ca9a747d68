#include "gls/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <stdexcept>

#include "gls/special.hpp"
#include "gls/summation.hpp"

namespace gls {

namespace {

struct Block {
  double a = 0.0, b = 0.0;
  bool grade_left = false, grade_right = false;
};

// Append one GL cell over (a, b), splitting to respect osc_length.
void add_cell(SampledMesh& m, const FunctionSource& f, double a, double b,
              double wmul, int nodes, double osc_length, int chain,
              int level) {
  int pieces = 1;
  if (osc_length > 0.0 && b - a > osc_length)
    pieces = static_cast<int>(std::ceil((b - a) / osc_length));
  const auto& gl = gauss_legendre(nodes);
  const double step = (b - a) / pieces;
  for (int j = 0; j < pieces; ++j) {
    const double a0 = a + j * step, b0 = a0 + step;
    const double mid = 0.5 * (a0 + b0), half = 0.5 * (b0 - a0);
    MeshCell cell;
    cell.begin = m.x.size();
    for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
      const double xi = mid + half * gl.nodes[i];
      m.x.push_back(xi);
      m.w.push_back(wmul * half * gl.weights[i]);
      const double v = std::fabs(f.eval(xi));
      if (!std::isfinite(v)) m.any_nonfinite = true;
      m.fx.push_back(v);
    }
    cell.end = m.x.size();
    cell.chain = chain;
    cell.level = level;
    m.cells.push_back(cell);
  }
}

// Graded chain of `levels` cells filling (a, b) toward the singular end.
// toward_left grades toward a (cells shrink toward a). The innermost sliver
// (length (b-a) 2^{-levels}) is left to the geometric extrapolation.
void add_chain(SampledMesh& m, const FunctionSource& f, double a, double b,
               bool toward_left, double wmul, int nodes, int levels) {
  const double len = b - a;
  const int chain = m.num_chains++;
  for (int k = 0; k < levels; ++k) {
    const double hi = len * std::pow(0.5, k);
    const double lo = 0.5 * hi;
    if (toward_left)
      add_cell(m, f, a + lo, a + hi, wmul, nodes, 0.0, chain, k);
    else
      add_cell(m, f, b - hi, b - lo, wmul, nodes, 0.0, chain, k);
  }
}

void add_block(SampledMesh& m, const FunctionSource& f, const Block& blk,
               double wmul, int nodes, int levels, double osc_length) {
  if (blk.grade_left && blk.grade_right) {
    const double mid = 0.5 * (blk.a + blk.b);
    add_chain(m, f, blk.a, mid, true, wmul, nodes, levels);
    add_chain(m, f, mid, blk.b, false, wmul, nodes, levels);
  } else if (blk.grade_left) {
    add_chain(m, f, blk.a, blk.b, true, wmul, nodes, levels);
  } else if (blk.grade_right) {
    add_chain(m, f, blk.a, blk.b, false, wmul, nodes, levels);
  } else {
    add_cell(m, f, blk.a, blk.b, wmul, nodes, osc_length, -1, 0);
  }
}

std::vector<double> reduced_singulars(const FunctionSource& f) {
  std::vector<double> s;
  for (double v : f.singular_points) {
    double t = std::remainder(v, kTwoPi);
    s.push_back(t);
  }
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

}  // namespace

SampledMesh build_mesh(const FunctionSource& f, const BudgetOptions& opt,
                       int refine) {
  SampledMesh m;
  m.domain = f.domain;
  m.scale = f.scale;
  const int nodes = std::min(128, refine ? 2 * opt.gl_nodes : opt.gl_nodes);
  const int cells_mul = refine ? 2 : 1;

  if (f.domain == Domain::torus) {
    m.measure_norm = 1.0 / kTwoPi;
    auto sing = reduced_singulars(f);
    if (f.trig_degree >= 0 || sing.empty()) {
      const int n_cells =
          cells_mul * std::max(opt.quad_uniform_cells,
                               f.trig_degree > 0 ? 8 * f.trig_degree : 0);
      const double step = kTwoPi / n_cells;
      for (int i = 0; i < n_cells; ++i)
        add_cell(m, f, -kPi + i * step, -kPi + (i + 1) * step, 1.0, nodes,
                 0.0, -1, 0);
    } else {
      // depth capped so cell boundaries len*2^{-k} stay well inside the
      // double range (x = 0 would alias the singular point itself)
      const int levels =
          std::min(opt.quad_levels_log + (refine ? 16 : 0), 916);
      const bool sym_half = (f.even || f.odd) && sing.size() == 1 &&
                            sing.front() == 0.0;
      if (sym_half) {
        // |f| even: sample (0, pi] only with doubled weights
        add_chain(m, f, 0.0, kPi, true, 2.0, nodes, levels);
      } else {
        // segments between midpoints of adjacent singular points (cyclic)
        const auto n = sing.size();
        for (std::size_t i = 0; i < n; ++i) {
          const double s = sing[i];
          const double prev = i == 0 ? sing.back() - kTwoPi : sing[i - 1];
          const double next = i + 1 == n ? sing.front() + kTwoPi : sing[i + 1];
          const double lo = 0.5 * (prev + s), hi = 0.5 * (s + next);
          if (s - lo > 0.0) add_chain(m, f, lo, s, false, 1.0, nodes, levels);
          if (hi - s > 0.0) add_chain(m, f, s, hi, true, 1.0, nodes, levels);
        }
      }
    }
    return m;
  }

  // Line: blocks over [0, window] (mirrored or doubled for two-sided
  // functions), dyadic beyond 1, graded toward singular anchors.
  m.measure_norm = 1.0;
  m.window = f.window;
  m.tail_lp = f.tail_lp;
  m.tail_exact = f.tail_exact;
  const int levels = opt.quad_levels + (refine ? 16 : 0);
  const double osc = f.osc_length > 0.0 ? f.osc_length / cells_mul : 0.0;

  auto build_half = [&](double sign, double wmul) {
    std::vector<double> anchors{0.0};
    for (double s : f.singular_points) {
      const double t = sign * s;
      if (t > 0.0 && t < f.window) anchors.push_back(t);
    }
    for (double a = 1.0; a < f.window; a *= 2.0) anchors.push_back(a);
    anchors.push_back(f.window);
    std::sort(anchors.begin(), anchors.end());
    anchors.erase(std::unique(anchors.begin(), anchors.end()), anchors.end());
    auto is_sing = [&](double t) {
      if (t == 0.0 && !f.support_positive) return true;
      for (double s : f.singular_points)
        if (sign * s == t) return true;
      return false;
    };
    for (std::size_t i = 0; i + 1 < anchors.size(); ++i) {
      Block blk;
      blk.a = anchors[i];
      blk.b = anchors[i + 1];
      blk.grade_left = is_sing(blk.a);
      blk.grade_right = is_sing(blk.b);
      if (sign > 0)
        add_block(m, f, blk, wmul, nodes, levels, osc);
      else {  // mirror to negative axis
        Block neg;
        neg.a = -blk.b;
        neg.b = -blk.a;
        neg.grade_left = blk.grade_right;
        neg.grade_right = blk.grade_left;
        add_block(m, f, neg, wmul, nodes, levels, osc);
      }
    }
  };

  if (f.support_positive) {
    build_half(1.0, 1.0);
  } else if (f.even) {
    build_half(1.0, 2.0);
  } else {
    build_half(1.0, 1.0);
    build_half(-1.0, 1.0);
  }
  return m;
}

Estimate mesh_lp(const SampledMesh& mesh, double p) {
  if (p <= 0.0) throw std::invalid_argument("mesh_lp: requires p > 0");
  std::vector<double> cell_logs;
  cell_logs.reserve(mesh.cells.size() + 8);

  // per-chain innermost bookkeeping: last three cell logs
  struct ChainState {
    double l2 = -kInf, l1 = -kInf, l0 = -kInf;  // older .. newest
    double peak = -kInf;
  };
  std::vector<ChainState> chains(static_cast<std::size_t>(mesh.num_chains));

  for (const auto& cell : mesh.cells) {
    double mx = -kInf;
    for (std::size_t i = cell.begin; i < cell.end; ++i) {
      if (mesh.fx[i] <= 0.0) continue;
      if (!std::isfinite(mesh.fx[i])) return Estimate::diverged();
      mx = std::max(mx, std::log(mesh.w[i]) + p * std::log(mesh.fx[i]));
    }
    double lsum = -kInf;
    if (mx > -kInf) {
      double acc = 0.0;
      for (std::size_t i = cell.begin; i < cell.end; ++i) {
        if (mesh.fx[i] <= 0.0) continue;
        acc += std::exp(std::log(mesh.w[i]) + p * std::log(mesh.fx[i]) - mx);
      }
      lsum = mx + std::log(acc);
    }
    cell_logs.push_back(lsum);
    if (cell.chain >= 0) {
      auto& st = chains[static_cast<std::size_t>(cell.chain)];
      st.l2 = st.l1;
      st.l1 = st.l0;
      st.l0 = lsum;
      st.peak = std::max(st.peak, lsum);
    }
  }

  std::vector<double> err_logs;  // on the integral scale, in log space
  for (const auto& st : chains) {
    if (st.l0 == -kInf) continue;
    const bool growing = st.l0 > st.l1 && st.l1 > st.l2;
    if (growing && st.l0 > st.peak - 1.0) {
      // contributions still growing at the innermost level
      if (mesh.domain == Domain::line) return Estimate::diverged();
      err_logs.push_back(st.l0 + std::log(10.0));
      continue;
    }
    // geometric extrapolation of the dropped sliver; for pure power
    // singularities the dyadic cell ratio is exactly constant, so this is
    // exact, and the ratio drift |r0 - r1| measures the departure from it
    const double r0 = std::exp(st.l0 - st.l1);
    const double r1 = std::exp(st.l1 - st.l2);
    if (std::isfinite(r0) && r0 < 0.9995) {
      const double rem = st.l0 + std::log(r0 / (1.0 - r0));
      cell_logs.push_back(rem);
      const double drift =
          std::isfinite(r1) ? 2.0 * std::fabs(r0 - r1) / (1.0 - r0) : 1.0;
      err_logs.push_back(rem + std::log(std::min(drift + 1e-12, 1.0)));
    } else {
      err_logs.push_back(st.l0 + std::log(10.0));
    }
  }

  double total_log = tree_logsumexp(cell_logs);
  if (mesh.domain == Domain::line && mesh.tail_lp) {
    const double t = mesh.tail_lp(p, mesh.window);
    if (!std::isfinite(t)) return Estimate::diverged();
    if (t > 0.0) {
      const double lt = std::log(t);
      const double mx = std::max(total_log, lt);
      total_log = mx + std::log(std::exp(total_log - mx) + std::exp(lt - mx));
      if (!mesh.tail_exact) err_logs.push_back(lt);
    }
  }

  Estimate e;
  e.value = std::fabs(mesh.scale) *
            std::exp((total_log + std::log(mesh.measure_norm)) / p);
  if (!std::isfinite(e.value)) return Estimate::diverged();
  if (e.value > 0.0 && !err_logs.empty()) {
    // relative error of the integral, then /p for the norm
    const double rel = std::exp(tree_logsumexp(err_logs) - total_log);
    e.error = e.value * std::min(rel, 1.0) / p;
  }
  return e;
}

LpEvaluator::LpEvaluator(FunctionSource f, const BudgetOptions& opt,
                         bool use_exact)
    : src_(std::move(f)) {
  if (use_exact && src_.lp_exact) {
    exact_ = true;
    return;
  }
  base_ = build_mesh(src_, opt, 0);
  fine_ = build_mesh(src_, opt, 1);
}

NormInput norm_input(const FunctionSource& f, const BudgetOptions& opt,
                     bool use_exact) {
  FunctionSource unscaled = f;
  const double s = unscaled.scale;
  unscaled.scale = 1.0;
  auto ev = std::make_shared<LpEvaluator>(std::move(unscaled), opt, use_exact);
  NormInput in;
  in.lp = [ev](double p) { return (*ev)(p); };
  in.scale = s;
  return in;
}

Estimate LpEvaluator::operator()(double p) const {
  if (exact_) {
    Estimate e = src_.lp_exact(p);
    if (!e.finite()) return Estimate::diverged();
    e.value *= std::fabs(src_.scale);
    e.error *= std::fabs(src_.scale);
    return e;
  }
  const Estimate coarse = mesh_lp(base_, p);
  const Estimate fine = mesh_lp(fine_, p);
  if (coarse.divergent || fine.divergent) return Estimate::diverged();
  Estimate e = fine;
  e.error += std::fabs(fine.value - coarse.value);
  return e;
}

}  // namespace gls
