#pragma once

#include <map>
#include <vector>

#include "taft/double_algebra.hpp"
#include "taft/matrix.hpp"

namespace taft {

// Label (l, p) of a simple module: dimension l in {1, ..., d}, parameter p
// taken mod d.
struct Weight {
  long l = 0;
  long p = 0;
  auto operator<=>(const Weight&) const = default;
};

std::string weight_to_string(Weight w);

std::vector<Weight> all_weights(long d);  // l = 1..d, p = 0..d-1, in order
long weight_index(long d, Weight w);      // (l-1) d + p

// Stable labels are those with l not divisible by d.
bool is_stable_weight(long d, Weight w);

// The involution (l, p) -> (d - l, p + l) on stable labels.
Weight iota(long d, Weight w);

// Chosen representative of an iota-orbit: the smaller dimension l; for even d
// and l = d/2 the representative has p < d/2.
bool is_canonical_weight(long d, Weight w);
std::vector<Weight> canonical_weights(long d);  // d(d-1)/2 labels

// Generator matrices of a module.  Every construction in this library keeps K
// and Z diagonal, which the subquotient machinery relies on.
struct Module {
  long dim = 0;
  CycMatrix E, F, K, Z;
};

Module simple_module(const Algebra& alg, Weight w);
Module tensor_module(const Algebra& alg, const Module& a, const Module& b);

// Generator relations as exact matrix identities.
CheckReport verify_module(const Algebra& alg, const Module& m);

// Action of arbitrary elements on one module, caching monomial images.
class ActionContext {
 public:
  ActionContext(const Algebra& alg, Module m);
  const Algebra& algebra() const { return *alg_; }
  const Module& module() const { return mod_; }
  const CycMatrix& mono_action(const Mono& m);
  CycMatrix act(const DoubleElt& x);

 private:
  const Algebra* alg_;
  Module mod_;
  std::vector<CycMatrix> pe_, pf_, pk_, pz_;
  std::map<std::pair<int, int>, CycMatrix> fe_;
  std::map<Mono, CycMatrix> mono_;
};

CycMatrix act(const Algebra& alg, const DoubleElt& x, const Module& m);

// Scalar by which the twist acts on the simple module with label w.
CycNum theta_scalar(const Algebra& alg, Weight w);

// Basis of intertwiners s -> m, as dim(m) x dim(s) matrices.  Requires
// diagonal K and Z on both modules.
std::vector<CycMatrix> hom_space(const Algebra& alg, const Module& s,
                                 const Module& m);

// Multiset of composition factors, as label -> multiplicity, computed by
// iterated socles.
std::map<Weight, long> composition_factors(const Algebra& alg, const Module& m);

}  // namespace taft
