#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <vector>

#include "taft/fusion.hpp"
#include "taft/grothendieck.hpp"

using namespace taft;

namespace {

std::string first_failure(const CheckReport& rep) {
  return rep.failures.empty() ? std::string() : rep.failures.front();
}

long norm_mod(long x, long d) { return (x % d + d) % d; }

}  // namespace

TEST_CASE("quantum traces of the identity give the two dimension formulas") {
  for (long d : {2L, 3L, 4L, 5L, 6L}) {
    CAPTURE(d);
    const Algebra& alg = Algebra::get(d);
    for (const Weight& w : all_weights(d)) {
      const Module m = simple_module(alg, w);
      const CycMatrix id = CycMatrix::identity(m.dim, alg.conductor());
      CAPTURE(w.l);
      CAPTURE(w.p);
      CHECK(qtrace_plus(m, id) == dim_plus(alg, w));
      CHECK(qtrace_minus(m, id) == dim_minus(alg, w));
    }
    // unit object has plus-dimension one
    const Module unit = simple_module(alg, {1, 0});
    CHECK(qtrace_plus(unit, CycMatrix::identity(1, alg.conductor())) ==
          CycNum(alg.conductor(), 1));
  }
}

TEST_CASE("quantum traces reject shape mismatches") {
  const Algebra& alg = Algebra::get(3);
  const Module m = simple_module(alg, {2, 0});
  const CycMatrix wrong = CycMatrix::identity(3, alg.conductor());
  CHECK_THROWS_AS(qtrace_plus(m, wrong), std::invalid_argument);
  CHECK_THROWS_AS(qtrace_minus(m, wrong), std::invalid_argument);
}

TEST_CASE("partial braiding traces realize the characters") {
  for (long d : {2L, 3L, 4L}) {
    CAPTURE(d);
    const Algebra& alg = Algebra::get(d);
    const auto labels = all_weights(d);
    const auto cat = categorical_s(alg);
    for (long a = 0; a < d * d; ++a) {
      const Weight lam = labels[a];
      const auto chi_p =
          character(alg, norm_mod(-lam.l, d), norm_mod(-lam.p, d));
      const auto chi_m =
          character(alg, norm_mod(-lam.l, d), norm_mod(1 - lam.p, d));
      for (long b = 0; b < d * d; ++b) {
        CAPTURE(a);
        CAPTURE(b);
        CHECK(cat.s_plus.at(a, b) == chi_p[b]);
        CHECK(cat.s_minus.at(a, b) == chi_m[b]);
      }
    }
  }
}

TEST_CASE("per-pair scalars agree with the batched matrix") {
  const long d = 3;
  const Algebra& alg = Algebra::get(d);
  const auto cat = categorical_s(alg);
  const auto labels = all_weights(d);
  for (const Weight& lam : {Weight{1, 0}, Weight{2, 1}, Weight{3, 2}})
    for (const Weight& mu : {Weight{1, 2}, Weight{2, 0}, Weight{3, 1}}) {
      const long a = weight_index(d, lam), b = weight_index(d, mu);
      CHECK(s_plus_categorical(alg, lam, mu) == cat.s_plus.at(a, b));
      CHECK(s_minus_categorical(alg, lam, mu) == cat.s_minus.at(a, b));
    }
  // the unit strand contributes the trivial scalar
  for (const Weight& lam : labels)
    CHECK(s_plus_categorical(alg, lam, {1, 0}) == CycNum(alg.conductor(), 1));
}

TEST_CASE("the slot scalar is a ring morphism in the second argument") {
  for (long d : {2L, 3L, 4L}) {
    CAPTURE(d);
    const Algebra& alg = Algebra::get(d);
    const FusionRing r = full_ring(d);
    const auto cat = categorical_s(alg);
    const long n = d * d;
    for (long lam = 0; lam < n; ++lam)
      for (long a = 0; a < n; ++a)
        for (long b = 0; b < n; ++b) {
          CycNum sum;
          for (long c = 0; c < n; ++c) {
            if (r.tensor[a][b][c] == 0) continue;
            sum += cat.s_plus.at(lam, c) *
                   CycNum(alg.conductor(), r.tensor[a][b][c]);
          }
          CAPTURE(lam);
          CAPTURE(a);
          CAPTURE(b);
          CHECK(cat.s_plus.at(lam, a) * cat.s_plus.at(lam, b) == sum);
        }
  }
}

TEST_CASE("closed S matrices match the categorical traces times dimensions") {
  for (long d : {2L, 3L, 4L}) {
    CAPTURE(d);
    const Algebra& alg = Algebra::get(d);
    const auto cat = categorical_s(alg);
    const auto cl = s_t_closed(alg);
    const auto labels = all_weights(d);
    for (long a = 0; a < d * d; ++a)
      for (long b = 0; b < d * d; ++b) {
        CAPTURE(a);
        CAPTURE(b);
        CHECK(cl.s_plus.at(a, b) ==
              cat.s_plus.at(a, b) * dim_plus(alg, labels[a]));
        CHECK(cl.s_minus.at(a, b) ==
              cat.s_minus.at(a, b) * dim_minus(alg, labels[a]));
      }
    // unit column of the closed S holds the plus-dimensions
    const long u = weight_index(d, {1, 0});
    for (long a = 0; a < d * d; ++a)
      CHECK(cl.s_plus.at(a, u) == dim_plus(alg, labels[a]));
  }
}

TEST_CASE("T entries are the inverse balancing scalars") {
  for (long d : {2L, 3L, 4L, 5L}) {
    CAPTURE(d);
    const Algebra& alg = Algebra::get(d);
    const auto cl = s_t_closed(alg);
    for (size_t a = 0; a < cl.labels.size(); ++a) {
      const Weight w = cl.labels[a];
      // the balancing element acts on M_{l,p} by theta-scalar times z-scalar
      const CycNum balance =
          theta_scalar(alg, w) * alg.zeta_pow(2 * w.p + w.l - 1);
      CAPTURE(w.l);
      CAPTURE(w.p);
      CHECK(balance == alg.zeta_pow(w.p * (w.p + w.l)));
      CHECK(cl.t_plus[a] * balance == CycNum(alg.conductor(), 1));
      CHECK(cl.t_minus[a] == balance);
      CHECK(cl.t_minus[a] == cl.t_plus[a].conj());
    }
  }
  const Algebra& alg = Algebra::get(4);
  const auto cl = s_t_closed(alg);
  CHECK(cl.t_plus[weight_index(4, {1, 1})] == alg.zeta_pow(-2));
}

TEST_CASE("global dimensions: sums, closed forms, total positivity") {
  for (long d = 2; d <= 8; ++d) {
    CAPTURE(d);
    const Algebra& alg = Algebra::get(d);
    const GlobalDims gd = global_dims(alg);  // internal exact cross-checks
    CHECK(gd.full == gd.stable + gd.stable);
    if (d == 2) CHECK(gd.full == CycNum(alg.conductor(), 2));
    if (d == 3) CHECK(gd.stable == CycNum(alg.conductor(), 3));
    if (d <= 6) {
      // every Galois conjugate of the stable dimension is a positive real
      for (long k = 1; k < alg.conductor(); ++k) {
        if (std::gcd(k, alg.conductor()) != 1) continue;
        CHECK(gd.stable.galois(k).sign_real() > 0);
      }
    }
  }
}

TEST_CASE("square root of the stable dimension matches the chosen root") {
  for (long d = 2; d <= 8; ++d) {
    CAPTURE(d);
    const Algebra& alg = Algebra::get(d);
    const CycNum one(alg.conductor(), 1);
    const CycNum root = sqrt_minus_zeta(d) * CycNum(alg.conductor(), d) *
                        (one - alg.zeta()).inverse();
    CHECK(root * root == global_dims(alg).stable);
    CHECK(root.sign_real() > 0);
  }
}

TEST_CASE("stable datum: closed entries, unit, and involution sign laws") {
  for (long d = 2; d <= 8; ++d) {
    CAPTURE(d);
    const Algebra& alg = Algebra::get(d);
    const FusionDatum fd = stable_datum(alg);
    CHECK(fd.labels.size() == static_cast<size_t>(d * (d - 1) / 2));
    CHECK(fd.labels[fd.unit] == Weight{1, 0});
    const CheckReport rep = verify_stable_datum(alg, fd);
    INFO(first_failure(rep));
    CHECK(rep.ok);
    // normalization: closed S entries are the unnormalized ones over the
    // square root of the stable global dimension
    const auto cl = s_t_closed(alg);
    const CycNum one(alg.conductor(), 1);
    const CycNum root_inv((sqrt_minus_zeta(d) * CycNum(alg.conductor(), d) *
                           (one - alg.zeta()).inverse())
                              .inverse());
    for (size_t a = 0; a < fd.labels.size(); ++a)
      for (size_t b = 0; b < fd.labels.size(); ++b) {
        const long fa = weight_index(d, fd.labels[a]);
        const long fb = weight_index(d, fd.labels[b]);
        CHECK(fd.S.at(a, b) == cl.s_plus.at(fa, fb) * root_inv);
        CHECK(fd.T[a] == cl.t_plus[fa]);
      }
  }
}

TEST_CASE("stable datum at d = 2 is the sign-one datum") {
  const Algebra& alg = Algebra::get(2);
  const FusionDatum fd = stable_datum(alg);
  REQUIRE(fd.labels.size() == 1);
  CHECK(fd.labels[0] == Weight{1, 0});
  // the zeta^{-ll'-...} factor equals zeta^{-1} = -1 here, so the entry is
  // (1/2)(-1)((-1)-1) = +1 with the positively normalized square root
  CHECK(fd.S.at(0, 0) == CycNum(alg.conductor(), 1));
  CHECK(fd.T[0] == CycNum(alg.conductor(), 1));
}

TEST_CASE("flipping a representative flips its S row and column, fixes T") {
  const long d = 5;
  const Algebra& alg = Algebra::get(d);
  const auto can = canonical_weights(d);
  std::vector<Weight> alt = can;
  const size_t flip_at = 2;
  alt[flip_at] = iota(d, can[flip_at]);
  const FusionDatum a = stable_datum(alg);
  const FusionDatum b = stable_datum(alg, alt);
  for (size_t x = 0; x < can.size(); ++x)
    for (size_t y = 0; y < can.size(); ++y) {
      const bool flip = (x == flip_at) != (y == flip_at);
      CHECK(b.S.at(x, y) == (flip ? -a.S.at(x, y) : a.S.at(x, y)));
    }
  for (size_t x = 0; x < can.size(); ++x) CHECK(b.T[x] == a.T[x]);
}

TEST_CASE("stable datum rejects bad representative sets") {
  const Algebra& alg = Algebra::get(3);
  std::vector<Weight> reps = canonical_weights(3);
  reps[0] = Weight{3, 1};
  CHECK_THROWS_AS(stable_datum(alg, reps), std::invalid_argument);
  reps = canonical_weights(3);
  reps[1] = iota(3, reps[0]);
  CHECK_THROWS_AS(stable_datum(alg, reps), std::invalid_argument);
}

TEST_CASE("verlinde constants of the stable datum equal the quotient ring") {
  for (long d = 2; d <= 6; ++d) {
    CAPTURE(d);
    const Algebra& alg = Algebra::get(d);
    const FusionDatum fd = stable_datum(alg);
    const auto N = verlinde(fd);  // throws if any entry is not an integer
    const StableRing s = stable_ring(d);
    REQUIRE(fd.labels == s.reps);
    const long m = static_cast<long>(fd.labels.size());
    for (long a = 0; a < m; ++a)
      for (long b = 0; b < m; ++b)
        for (long c = 0; c < m; ++c) {
          CAPTURE(a);
          CAPTURE(b);
          CAPTURE(c);
          CHECK(N[a][b][c] == s.tensor[a][b][c]);
        }
    // unit slice is the identity
    for (long b = 0; b < m; ++b)
      for (long c = 0; c < m; ++c)
        CHECK(N[fd.unit][b][c] == (b == c ? 1 : 0));
  }
}

TEST_CASE("verlinde integrality holds through d = 8") {
  for (long d = 7; d <= 8; ++d) {
    CAPTURE(d);
    const Algebra& alg = Algebra::get(d);
    CHECK_NOTHROW(verlinde(stable_datum(alg)));
  }
}

TEST_CASE("verlinde respects a change of representatives") {
  const long d = 4;
  const Algebra& alg = Algebra::get(d);
  const auto can = canonical_weights(d);
  std::vector<Weight> alt = can;
  alt[1] = iota(d, can[1]);
  const auto N = verlinde(stable_datum(alg, alt));
  const StableRing s = stable_ring(d, alt);
  const long m = static_cast<long>(can.size());
  for (long a = 0; a < m; ++a)
    for (long b = 0; b < m; ++b)
      for (long c = 0; c < m; ++c) CHECK(N[a][b][c] == s.tensor[a][b][c]);
}
