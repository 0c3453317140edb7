#pragma once

#include <optional>
#include <vector>

#include "taft/fusion.hpp"

namespace taft {

// A label (i, j, k): the two distinguished values i = f(0) < j = f(1) of an
// admissible map f on {0, ..., d}, together with the unique value k missing
// from f on {2, ..., d}; membership in the constrained family forces
// k = (i + j) mod d.
struct MalleLabel {
  long i = 0, j = 0, k = 0;
  auto operator<=>(const MalleLabel&) const = default;
};

// All labels in lexicographic (i, j) order; exactly d(d-1)/2 of them.
std::vector<MalleLabel> enumerate_psi_sharp(long d);

// The full map f on {0, ..., d}: f(0) = i, f(1) = j, and the complement of
// {k} in {0, ..., d-1} in increasing order on {2, ..., d}.
std::vector<long> full_map(const MalleLabel& f, long d);

// (-1)^{#{(y, y') : y < y' and f(y) < f(y')}} over the full map.
int eps_sign(const MalleLabel& f, long d);

// delta = prod_{0 <= i < j <= d-1} (zeta^j - zeta^i), the determinant of the
// character table (zeta^{ab})_{a,b}.
CycNum delta_det(const Algebra& alg);

// Frobenius eigenvalue: zeta_*^{d(1-d^2)} prod_y zeta_*^{-6(f(y)^2 + d f(y))},
// with zeta_* a primitive conductor-root whose 12th power is zeta; the result
// is independent of the admissible choice (select one via skip).
CycNum frobenius(const Algebra& alg, const MalleLabel& f, long skip = 0);

// Entry of the second-exterior-power (x) (d-1)-st-exterior-power matrix of
// the character table, by the closed form
//   (-1)^{k+k'} (delta/d) zeta^{-kk'} (zeta^{ii'+jj'} - zeta^{ij'+ji'}).
CycNum s_bold(const Algebra& alg, const MalleLabel& f, const MalleLabel& g);

// The same entry as a product of exact determinants: the 2x2 minor of the
// character table on rows {i, j} / columns {i', j'} times the determinant of
// the table with row k and column k' deleted.
CycNum s_bold_minors(const Algebra& alg, const MalleLabel& f,
                     const MalleLabel& g);

// The Z-fusion datum over the (i, j, k) labels:
//   S_{f,g} = ((-1)^{d-1}/delta) eps(f) eps(g) conj(s_bold(f, g)),
//   T = diag(Frobenius), unit at (0, 1, 1).
struct MalleDatum {
  long d = 0;
  std::vector<MalleLabel> labels;
  long unit = -1;
  CycMatrix S;
  std::vector<CycNum> T;

  long index_of(const MalleLabel& f) const;
};
MalleDatum malle_datum(const Algebra& alg);

// Axioms: S symmetric, conj-transpose inverse, S^4 = 1, S^2 commutes with T,
// (ST)^3 scalar (the scalar is recorded; it must be +/-1), unit column
// nonzero, T entries roots of unity, Verlinde tensor integral with identity
// unit slice.
struct MalleAxiomReport {
  CheckReport axioms;
  std::optional<CycNum> st_cubed_scalar;  // c with (ST)^3 = c * identity
};
MalleAxiomReport verify_malle_axioms(const MalleDatum& md);

}  // namespace taft
