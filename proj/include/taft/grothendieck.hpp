#pragma once

#include <utility>
#include <vector>

#include "taft/reps.hpp"

namespace taft {

// Based commutative ring: chosen basis labels, unit index, and the structure
// tensor N with x_a x_b = sum_c N[a][b][c] x_c (exact integers).
struct FusionRing {
  long d = 0;
  std::vector<Weight> labels;
  long unit = -1;
  std::vector<std::vector<std::vector<long long>>> tensor;

  long index_of(Weight w) const;  // -1 if absent
};

// The based ring on all d^2 classes m_{l,p}, built from the shift rule
// v_{zeta^q} m_{l,p} = m_{l,p+q} and the two-dimensional class recursion.
FusionRing full_ring(long d);

// Values chi_{i,j}(m_{l,p}) = zeta^{p i + (2p+l-1) j} (l)_{zeta^i}, listed in
// full_ring label order.
std::vector<CycNum> character(const Algebra& alg, long i, long j);

// Index pairs (i, j) of the characters that kill the stable-quotient ideal
// (every m_{d,p} and every m_lambda + m_{iota lambda}).
std::vector<std::pair<long, long>> factoring_characters(const Algebra& alg);

// Quotient ring on one representative per iota-orbit of the stable labels;
// non-representative classes reduce to minus their partner, the l = d classes
// to zero.  Structure constants may be negative.
struct StableRing {
  long d = 0;
  std::vector<Weight> reps;
  long unit = -1;
  std::vector<std::vector<std::vector<long long>>> tensor;
  // full_ring label index -> (rep index, sign); sign 0 means the class dies.
  std::vector<std::pair<long, int>> reduction;

  long index_of(Weight w) const;
};

StableRing stable_ring(long d);  // canonical representatives
StableRing stable_ring(long d, const std::vector<Weight>& reps);

// Commutativity, unit laws, associativity (and nonnegativity if requested).
CheckReport verify_ring_axioms(const FusionRing& r, bool require_nonnegative);
CheckReport verify_stable_ring(const StableRing& r);

}  // namespace taft
