#pragma once

#include <string>
#include <vector>

#include "gls/common.hpp"
#include "gls/operators.hpp"
#include "gls/psi.hpp"
#include "gls/sequence.hpp"
#include "gls/source.hpp"

namespace gls {

// Spec-string grammar shared by the CLI and suite configs.
//
//   psi:      power:A,B,alpha,beta | exp:beta | degenerate:r
//             | gab:a,b,alpha,beta | natural:<source-or-sequence-spec>
//   source:   torus:const1 | torus:cosx
//             | torus:gdelta_sin:Delta=..[,terms=..]
//             | torus:gdelta_cos:Delta=..[,terms=..]
//             | torus:gm:m=..
//             | line:indicator01 | line:absinv | line:gaussian
//             | line:fab:a=..,b=..
//   sequence: seq:power_log:L=..,q=.. | seq:harmonic | seq:unit[:k=..]
//             | seq:leindler:s=..,theta=..[,n=..]
//             | seq:weighted_ab:b=..,Delta=.. | seq:log_lambda:Delta=..
//             | seq:custom:<csv path, one value per line>
//   grid:     v1,v2,... | lin:lo,hi,n | log:lo,hi,n
//
// Natural psi uses a 33-point grid on (1.05, 8) by default; nodes where the
// underlying norm is non-finite are dropped.
//
// Parse failures throw std::invalid_argument describing the expected form.

PsiFunction parse_psi(const std::string& spec, const BudgetOptions& opt = {});

FunctionSource parse_source(const std::string& spec,
                            const BudgetOptions& opt = {});

WeightedSequence parse_sequence(const std::string& spec,
                                const BudgetOptions& opt = {});

std::vector<double> parse_grid(const std::string& spec);

BoundCheckKind parse_bound_check_kind(const std::string& name);

inline bool is_sequence_spec(const std::string& spec) {
  return spec.rfind("seq:", 0) == 0;
}

}  // namespace gls
