#pragma once

#include <functional>
#include <string>
#include <vector>

#include "gls/common.hpp"

namespace gls {

// An evaluable exponent weight psi(p) on an open support (A, B). The
// degenerate case is a tagged singleton {r} whose induced norm is exactly
// the L_r norm. Instances are immutable after construction.
class PsiFunction {
 public:
  PsiFunction() = default;
  PsiFunction(Interval support, std::function<double(double)> fn,
              std::string family_tag)
      : support_(support), fn_(std::move(fn)), tag_(std::move(family_tag)) {}

  static PsiFunction degenerate(double r);

  double eval(double p) const;
  const Interval& support() const { return support_; }
  const std::string& family_tag() const { return tag_; }
  bool is_degenerate() const { return degenerate_; }
  double degenerate_r() const { return r_; }

 private:
  Interval support_{};
  std::function<double(double)> fn_;
  std::string tag_;
  bool degenerate_ = false;
  double r_ = 0.0;
};

// --- Families -------------------------------------------------------------

// psi(p) = (p-A)^{-alpha} (B-p)^{-beta} on (A, B).
PsiFunction make_power_psi(double a, double b, double alpha, double beta);
// psi(p) = p^{beta} on (1, inf).
PsiFunction make_exponent_psi(double beta);
// singleton support {r}; induced GLS norm equals |f|_r.
PsiFunction make_degenerate_psi(double r);
// psi = 1/zeta(a,b,alpha,beta; p), zeta piecewise (p-a)^alpha / (b-p)^beta
// with breakpoint h = min((a+b)/2, 2a); represents the G(a,b,alpha,beta) norm
// sup_p |f|_p zeta(p) in the common sup_p |f|_p / psi(p) form.
PsiFunction make_gab_psi(double a, double b, double alpha, double beta);

// Natural weight psi(p) = |source|_p from a norm evaluator, precomputed on
// p_grid and interpolated log-linearly in 1/p between nodes (the chord lies
// above the true norm curve, so the induced GLS norm is 1, attained at the
// nodes). Support is the open hull of the grid.
PsiFunction make_natural_psi(const std::function<Estimate(double)>& lp_eval,
                             const std::vector<double>& p_grid,
                             const std::string& source_tag);

// --- Transforms -----------------------------------------------------------

struct PsiTransform {
  enum class Kind { hilbert, conjugate_zeta, degree_d, maximal, leindler };
  Kind kind;
  double d = 0.0;       // degree_d
  double lambda = 0.0;  // maximal
  double mu = 0.0;      // maximal

  static PsiTransform hilbert() { return {Kind::hilbert}; }
  static PsiTransform conjugate_zeta() { return {Kind::conjugate_zeta}; }
  static PsiTransform degree(double d) { return {Kind::degree_d, d}; }
  static PsiTransform maximal(double lambda, double mu) {
    return {Kind::maximal, 0.0, lambda, mu};
  }
  static PsiTransform leindler() { return {Kind::leindler}; }
};

// hilbert:        K_H(p) psi(p), support in (1, inf)
// conjugate_zeta: zeta(p) = psi(p/(p-1)); support (A,B) in (1, inf) maps to
//                 (B/(B-1), A/(A-1)); involutive
// degree_d:       p^d psi(p)
// maximal:        p^lambda (p-1)^{-mu} psi(p), support in (1, inf)
// leindler:       p psi(p)
PsiFunction transform_psi(const PsiFunction& psi, const PsiTransform& t);

// --- Validation -----------------------------------------------------------

struct PsiValidationReport {
  struct Violation {
    double p;
    std::string what;
  };
  std::vector<Violation> violations;
  bool convexity_requested = false;
  bool convexity_ok = true;  // of p log psi(p), by second differences
  double worst_second_difference = 0.0;
  bool ok() const { return violations.empty(); }
};

PsiValidationReport validate_psi(const PsiFunction& psi,
                                 const std::vector<double>& grid,
                                 bool check_convexity = false,
                                 double convexity_tol = 1e-9);

}  // namespace gls
