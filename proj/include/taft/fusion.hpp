#pragma once

#include <utility>
#include <vector>

#include "taft/matrix.hpp"
#include "taft/reps.hpp"

namespace taft {

// S/T pair over an ordered label set with a distinguished unit label.
struct FusionDatum {
  long d = 0;
  std::vector<Weight> labels;
  long unit = -1;
  CycMatrix S;
  std::vector<CycNum> T;

  long index_of(Weight w) const;
};

// Quantum traces for the pivot z^{-1}K (the pivot_i parameter generalizes to
// z^{-i}K; only i = 1 carries the verified identities).
CycNum qtrace_plus(const Module& m, const CycMatrix& f, long pivot_i = 1);
CycNum qtrace_minus(const Module& m, const CycMatrix& f, long pivot_i = 1);

// Closed forms zeta^{1-l-p}(l)_zeta and zeta^p(l)_zeta for the traces of the
// identity on the simple module with the given label.
CycNum dim_plus(const Algebra& alg, Weight w);
CycNum dim_minus(const Algebra& alg, Weight w);

// Scalar by which the partial quantum trace of the double braiding acts on
// the simple module labelled lambda, the other strand running over mu:
//   plus:  trace over the second factor of the action on M_lambda (x) M_mu,
//          second strand closed with z^{-1}K;
//   minus: trace over the first factor of the action on M_mu (x) M_lambda,
//          first strand closed with K^{-1}z.
// Throws std::logic_error if the partial trace is not scalar (never expected:
// the module is simple).
CycNum s_plus_categorical(const Algebra& alg, Weight lambda, Weight mu);
CycNum s_minus_categorical(const Algebra& alg, Weight lambda, Weight mu);

// All pairs at once (row = lambda, column = mu), sharing cached module data.
struct CategoricalST {
  std::vector<Weight> labels;
  CycMatrix s_plus;
  CycMatrix s_minus;
};
CategoricalST categorical_s(const Algebra& alg);

// Closed-form S and T matrices over all of Lambda(d).
struct ClosedST {
  std::vector<Weight> labels;
  CycMatrix s_plus;
  CycMatrix s_minus;
  std::vector<CycNum> t_plus;
  std::vector<CycNum> t_minus;
};
ClosedST s_t_closed(const Algebra& alg);

// Sum of dim_- * dim_+ over all simples resp. over one representative per
// orbit of the stable labels; both are checked against their closed forms
// (2d^2 resp. d^2 over (1-zeta)(1-zeta^{-1})) and the stable value must be
// half the full one.  Throws std::logic_error on any mismatch.
struct GlobalDims {
  CycNum full;
  CycNum stable;
};
GlobalDims global_dims(const Algebra& alg);

// The normalized stable S/T pair on a set of orbit representatives:
//   S = (sqrt(-zeta)/d) zeta^{-ll'-lp'-pl'-2pp'} (zeta^{ll'} - 1),  T = zeta^{-p(l+p)}.
FusionDatum stable_datum(const Algebra& alg);
FusionDatum stable_datum(const Algebra& alg, const std::vector<Weight>& reps);

// Structural checks on a stable datum: S symmetric, S conj(S) = identity,
// T entries d-th roots of unity and orbit-invariant, no zero in the unit
// column, and the sign law relating an entry to its involution partners.
CheckReport verify_stable_datum(const Algebra& alg, const FusionDatum& fd);

// N_{f,g}^h = sum_i S_{i,f} S_{i,g} conj(S_{i,h}) / S_{i,unit}; every entry
// must reduce to a rational integer (std::logic_error otherwise).
std::vector<std::vector<std::vector<long long>>> verlinde(const CycMatrix& S,
                                                          long unit);
std::vector<std::vector<std::vector<long long>>> verlinde(const FusionDatum& fd);

}  // namespace taft
