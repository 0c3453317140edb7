#pragma once

#include <string>
#include <vector>

#include "taft/malle.hpp"

namespace taft {

// (i, j) with i < j maps to the stable label (j - i, i).
Weight phi(long d, long i, long j);

// The signed reindexing: take phi(i, j) when (-1)^k eps(f) = +1, its
// involution partner when the sign is -1.  Either way the image is a set of
// orbit representatives of the stable labels.
struct Reindexing {
  long d = 0;
  std::vector<MalleLabel> labels;  // enumeration order
  std::vector<Weight> image;       // signed images, aligned with labels
  std::vector<int> sign;           // +1 : phi, -1 : iota(phi)
};
Reindexing phi_tilde(long d);

// Exact certification that the Z-fusion datum of the cyclic group and the
// stable categorical datum coincide after reindexing:
//   conj(T_cyclic)[f]    = T_stable[phi_tilde(f)]                 (exactly)
//   conj(S_cyclic)[f,g]  = c * S_stable[phi_tilde(f), phi_tilde(g)]
// with the verified constant c = (-1)^{d(d-1)/2} / sqrt(-zeta).  The check is
// re-run against the opposite quantum parameter (e -> -e) to record which
// orientation admits a constant entry ratio.
struct CompareReport {
  long d = 0;
  long e = 1;
  bool t_matches = false;
  bool s_matches = false;
  CycNum s_constant;  // the constant c verified in the matching orientation
  // "same", "opposite", "both (self-conjugate)", or "none"
  std::string matched_orientation;
  bool opposite_constant_exists = false;
  long entries_checked = 0;
  std::vector<std::string> discrepancies;
};
CompareReport certify_main(long d, long e = 1);

}  // namespace taft
