#pragma once

#include <vector>

#include "gls/common.hpp"
#include "gls/source.hpp"
#include "gls/space.hpp"

namespace gls {

// One quadrature cell: nodes [begin, end) in the flat node arrays. Cells in
// a graded chain carry (chain >= 0, level increasing toward the singular
// point); free cells have chain = -1.
struct MeshCell {
  std::size_t begin = 0;
  std::size_t end = 0;
  int chain = -1;
  int level = 0;
};

// Function samples on a composite Gauss-Legendre mesh. Built once per
// source; every L_p evaluation reuses the cached samples, so expensive
// evaluators (series hybrids, transform outputs) are sampled exactly once.
struct SampledMesh {
  std::vector<double> x;   // nodes
  std::vector<double> w;   // weights (include any symmetry doubling)
  std::vector<double> fx;  // |f(node)| of the unscaled function
  std::vector<MeshCell> cells;
  int num_chains = 0;
  Domain domain = Domain::torus;
  double measure_norm = 1.0;  // 1/(2pi) on the torus, 1 on the line
  double scale = 1.0;
  double window = 0.0;  // line: covered half-width
  std::function<double(double, double)> tail_lp;
  bool tail_exact = true;
  bool any_nonfinite = false;
};

// Build the composite mesh for a source: graded chains toward singular
// points (deep chains on the torus, where log-type singularities carry mass
// at extreme depth), dyadic blocks out to the window on the line, uniform
// cells for trig polynomials and smooth parts, oscillation-limited cell
// lengths. refine = 1 doubles node counts and deepens chains (used for the
// refinement-difference error estimate).
SampledMesh build_mesh(const FunctionSource& f, const BudgetOptions& opt,
                       int refine = 0);

// |f|_p from cached samples. Cell sums run in log space (integrands like
// |f|^50 overflow doubles long before their integral does). Graded chains
// are extrapolated geometrically past the innermost cell; line-chain growth
// at the innermost level is reported as divergence. Returns the norm of the
// scaled function.
Estimate mesh_lp(const SampledMesh& mesh, double p);

// Cached-by-construction |f|_p evaluator: closed form when the source has
// one (and use_exact), otherwise base + refined meshes with the difference
// as the error estimate.
// Adapter for the GLS norm engine: unscaled |f|_p closure (closed form when
// available, else cached meshes) plus the structural scale.
NormInput norm_input(const FunctionSource& f, const BudgetOptions& opt = {},
                     bool use_exact = true);

class LpEvaluator {
 public:
  LpEvaluator(FunctionSource f, const BudgetOptions& opt,
              bool use_exact = true);
  Estimate operator()(double p) const;
  const FunctionSource& source() const { return src_; }

 private:
  FunctionSource src_;
  bool exact_ = false;
  SampledMesh base_, fine_;
};

}  // namespace gls
