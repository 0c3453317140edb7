#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <set>
#include <stdexcept>

#include "taft/compare.hpp"
#include "taft/reps.hpp"

using namespace taft;

namespace {

std::string first_failure(const CompareReport& rep) {
  return rep.discrepancies.empty() ? std::string("(none)")
                                   : rep.discrepancies.front();
}

// Normalize a weight to its orbit key: the lexicographically smaller of
// {w, iota(w)}.
Weight orbit_key(long d, Weight w) {
  const Weight v = iota(d, w);
  return v < w ? v : w;
}

}  // namespace

TEST_CASE("phi maps pair labels to stable weights") {
  CHECK(phi(4, 1, 3) == Weight{2, 1});
  CHECK(phi(2, 0, 1) == Weight{1, 0});
  CHECK(phi(5, 0, 4) == Weight{4, 0});
  CHECK_THROWS_AS(phi(4, 3, 1), std::invalid_argument);
  CHECK_THROWS_AS(phi(4, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(phi(4, 0, 4), std::invalid_argument);

  for (long d = 2; d <= 10; ++d) {
    std::set<Weight> orbits;
    long count = 0;
    for (const auto& f : enumerate_psi_sharp(d)) {
      const Weight w = phi(d, f.i, f.j);
      CHECK(is_stable_weight(d, w));
      orbits.insert(orbit_key(d, w));
      ++count;
    }
    // Exactly one label per involution orbit.
    CHECK(count == d * (d - 1) / 2);
    CHECK(static_cast<long>(orbits.size()) == count);
  }
}

TEST_CASE("phi_tilde picks a signed representative per orbit") {
  for (long d = 2; d <= 10; ++d) {
    const Reindexing re = phi_tilde(d);
    REQUIRE(re.d == d);
    REQUIRE(re.labels.size() == re.image.size());
    REQUIRE(re.labels.size() == re.sign.size());
    std::set<Weight> orbits;
    for (size_t a = 0; a < re.labels.size(); ++a) {
      const auto& f = re.labels[a];
      const Weight base = phi(d, f.i, f.j);
      const int parity = ((f.i + f.j) % d) % 2 == 0 ? 1 : -1;
      CHECK(re.sign[a] == parity * eps_sign(f, d));
      CHECK(re.image[a] == (re.sign[a] == 1 ? base : iota(d, base)));
      CHECK(is_stable_weight(d, re.image[a]));
      orbits.insert(orbit_key(d, re.image[a]));
    }
    CHECK(orbits.size() == re.labels.size());
  }
}

TEST_CASE("smallest case end to end") {
  const Reindexing re = phi_tilde(2);
  REQUIRE(re.labels.size() == 1);
  CHECK(re.labels[0] == MalleLabel{0, 1, 1});
  // eps = -1 and (-1)^{i+j} = -1, so the branch keeps phi itself.
  CHECK(re.sign[0] == 1);
  CHECK(re.image[0] == Weight{1, 0});

  const CompareReport rep = certify_main(2);
  INFO(first_failure(rep));
  CHECK(rep.t_matches);
  CHECK(rep.s_matches);
  CHECK(rep.matched_orientation == "both (self-conjugate)");
  // conj(S_cyclic) = [-1] against S_stable = [+1]: the constant is -1.
  CHECK(rep.s_constant == CycNum(24, -1));
  CHECK(rep.entries_checked == 2);
  CHECK(rep.discrepancies.empty());
}

TEST_CASE("certification succeeds in the same orientation") {
  for (long d = 2; d <= 8; ++d) {
    for (long e : {1L, d - 1}) {
      if (std::gcd(e, d) != 1) continue;
      const CompareReport rep = certify_main(d, e);
      INFO("d=", d, " e=", e, " ", first_failure(rep));
      CHECK(rep.d == d);
      CHECK(rep.e == e % d);
      CHECK(rep.t_matches);
      CHECK(rep.s_matches);
      CHECK(rep.discrepancies.empty());
      const long n = d * (d - 1) / 2;
      CHECK(rep.entries_checked == n + n * n);
      if (d == 2) {
        CHECK(rep.matched_orientation == "both (self-conjugate)");
      } else {
        CHECK(rep.matched_orientation == "same");
      }
      // The constant squares to the inverse of -zeta.
      const Algebra& alg = Algebra::get(d, rep.e);
      CHECK((rep.s_constant * rep.s_constant * alg.zeta()).reduced() ==
            CycNum(alg.conductor(), -1));
    }
  }
}

TEST_CASE("certification with a general coprime parameter") {
  for (auto [d, e] : {std::pair<long, long>{5, 2}, {7, 3}, {9, 4}}) {
    const CompareReport rep = certify_main(d, e);
    INFO("d=", d, " e=", e, " ", first_failure(rep));
    CHECK(rep.t_matches);
    CHECK(rep.s_matches);
    CHECK(rep.matched_orientation == "same");
  }
}

TEST_CASE("opposite orientation admits no constant ratio for d >= 4") {
  for (long d = 4; d <= 8; ++d) {
    const CompareReport rep = certify_main(d, 1);
    INFO("d=", d);
    CHECK_FALSE(rep.opposite_constant_exists);
  }
}

TEST_CASE("reports are deterministic") {
  const CompareReport a = certify_main(5, 1);
  const CompareReport b = certify_main(5, 1);
  CHECK(a.s_constant == b.s_constant);
  CHECK(a.matched_orientation == b.matched_orientation);
  CHECK(a.entries_checked == b.entries_checked);
  CHECK(a.discrepancies == b.discrepancies);
}

TEST_CASE("invalid parameters are rejected") {
  CHECK_THROWS_AS(certify_main(4, 2), std::invalid_argument);
  CHECK_THROWS_AS(certify_main(6, 3), std::invalid_argument);
  CHECK_THROWS_AS(certify_main(1, 1), std::invalid_argument);
}
