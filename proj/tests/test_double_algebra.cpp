#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "taft/double_algebra.hpp"

using taft::Algebra;
using taft::CheckReport;
using taft::CycNum;
using taft::DoubleElt;
using taft::DoubleTensor;
using taft::Mono;

namespace {

// Small random elements with a few monomial terms and small coefficients.
DoubleElt random_elt(const Algebra& alg, std::minstd_rand& rng) {
  std::uniform_int_distribution<int> exp(0, static_cast<int>(alg.d()) - 1);
  std::uniform_int_distribution<int> nterms(1, 4);
  std::uniform_int_distribution<long> coeff(-3, 3);
  DoubleElt x = alg.zero();
  int n = nterms(rng);
  for (int t = 0; t < n; ++t) {
    CycNum c = CycNum(alg.conductor(), coeff(rng)) * alg.zeta_pow(exp(rng));
    x.add_term(Mono{exp(rng), exp(rng), exp(rng), exp(rng)}, c);
  }
  return x;
}


// First failure message of a report, for doctest INFO context.
std::string first_failure(const CheckReport& rep) {
  return rep.failures.empty() ? std::string("(no failures)") : rep.failures.front();
}

}  // namespace

TEST_CASE("defining relations hold in the normal form") {
  for (long d : {2L, 3L, 4L}) {
    const Algebra& alg = Algebra::get(d);
    const DoubleElt E = alg.gen_E(), F = alg.gen_F(), K = alg.gen_K(),
                    z = alg.gen_z();

    // K E = zeta E K, K F = zeta^{-1} F K
    CHECK(K * E == (E * K).scaled(alg.zeta()));
    CHECK(K * F == (F * K).scaled(alg.zeta_pow(-1)));

    // E F - F E = K - z K^{-1}
    DoubleElt lhs = E * F - F * E;
    DoubleElt rhs = K - z * alg.k_power(-1);
    CHECK(lhs == rhs);

    // z is central
    for (const DoubleElt& x : {E, F, K}) CHECK(z * x == x * z);

    // K^d = z^d = 1 via repeated products
    DoubleElt kp = alg.one(), zp = alg.one();
    for (long t = 0; t < d; ++t) {
      kp = kp * K;
      zp = zp * z;
    }
    CHECK(kp == alg.one());
    CHECK(zp == alg.one());

    // E^d = F^d = 0
    DoubleElt ep = alg.one(), fp = alg.one();
    for (long t = 0; t < d; ++t) {
      ep = ep * E;
      fp = fp * F;
    }
    CHECK(ep.is_zero());
    CHECK(fp.is_zero());
  }
}

TEST_CASE("straightening E past F^2") {
  for (long d : {3L, 4L, 5L}) {
    const Algebra& alg = Algebra::get(d);
    const DoubleElt E = alg.gen_E(), F = alg.gen_F(), K = alg.gen_K(),
                    z = alg.gen_z();
    // E F^2 - F^2 E = (2)_zeta F (zeta^{-1} K - z K^{-1})
    DoubleElt lhs = E * F * F - F * F * E;
    DoubleElt inner = K.scaled(alg.zeta_pow(-1)) - z * alg.k_power(-1);
    DoubleElt rhs = (F * inner).scaled(taft::q_int(2, alg.zeta()));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("multiplication is associative") {
  const Algebra& alg = Algebra::get(3);
  std::minstd_rand rng(20240817);
  for (int trial = 0; trial < 60; ++trial) {
    DoubleElt x = random_elt(alg, rng);
    DoubleElt y = random_elt(alg, rng);
    DoubleElt w = random_elt(alg, rng);
    CHECK((x * y) * w == x * (y * w));
  }
}

TEST_CASE("coproduct and counit are algebra morphisms") {
  for (long d : {2L, 3L}) {
    const Algebra& alg = Algebra::get(d);
    std::minstd_rand rng(987 + d);
    for (int trial = 0; trial < 15; ++trial) {
      DoubleElt x = random_elt(alg, rng);
      DoubleElt y = random_elt(alg, rng);
      CHECK(x.coproduct() * y.coproduct() == (x * y).coproduct());
      CHECK(x.counit() * y.counit() == (x * y).counit());
    }
  }
}

TEST_CASE("antipode closed forms and anti-morphism property") {
  for (long d : {2L, 3L, 4L}) {
    const Algebra& alg = Algebra::get(d);
    const DoubleElt E = alg.gen_E(), F = alg.gen_F(), K = alg.gen_K(),
                    z = alg.gen_z();

    // S(K) = K^{-1}, S(z) = z^{-1}
    CHECK(K.antipode() == alg.k_power(-1));
    CHECK(z.antipode() == alg.z_power(-1));
    // S(E) = -E K^{-1}, S(F) = -z^{-1} K F
    CHECK(E.antipode() == -(E * alg.k_power(-1)));
    CHECK(F.antipode() == -(alg.z_power(-1) * K * F));

    std::minstd_rand rng(55 + d);
    for (int trial = 0; trial < 10; ++trial) {
      DoubleElt x = random_elt(alg, rng);
      DoubleElt y = random_elt(alg, rng);
      CHECK((x * y).antipode() == y.antipode() * x.antipode());
    }
  }
}

TEST_CASE("hopf axioms hold on every basis monomial") {
  for (long d : {2L, 3L}) {
    CheckReport rep = taft::verify_hopf(Algebra::get(d));
    INFO(first_failure(rep));
    CHECK(rep.ok);
    CHECK(rep.checked == d * d * d * d);
  }
}

TEST_CASE("r-matrix: i = 0 slice has the expected coefficients") {
  const long d = 3;
  const Algebra& alg = Algebra::get(d);
  const DoubleTensor& R = alg.r_matrix();
  const CycNum inv_d(alg.conductor(), mpq_class(1, 3));
  for (int j = 0; j < d; ++j) {
    for (int k = 0; k < d; ++k) {
      DoubleTensor::Key key{Mono{0, j, 0, 0},
                            Mono{static_cast<int>((d - k) % d), k, 0, 0}};
      auto it = R.terms().find(key);
      REQUIRE(it != R.terms().end());
      CHECK(it->second == inv_d * alg.zeta_pow(-static_cast<long>(k) * j));
    }
  }
}

TEST_CASE("r-matrix satisfies the quasi-triangularity identities") {
  for (long d : {2L, 3L}) {
    CheckReport rep = taft::verify_rmatrix(Algebra::get(d));
    INFO(first_failure(rep));
    CHECK(rep.ok);
    CHECK(rep.checked == 8);
  }
}

TEST_CASE("twist identities") {
  for (long d : {2L, 3L}) {
    CheckReport rep = taft::verify_twist(Algebra::get(d), true);
    INFO(first_failure(rep));
    CHECK(rep.ok);
    CHECK(rep.checked == 7);
  }
  // centrality, counit, and the antipode identity stay cheap for larger d
  for (long d : {4L, 5L}) {
    CheckReport rep = taft::verify_twist(Algebra::get(d), false);
    INFO(first_failure(rep));
    CHECK(rep.ok);
    CHECK(rep.checked == 6);
  }
}

TEST_CASE("one-dimensional characters respect the relations") {
  for (long d : {2L, 3L, 4L, 5L}) {
    CheckReport rep = taft::verify_one_dim_characters(Algebra::get(d));
    INFO(first_failure(rep));
    CHECK(rep.ok);
  }
}

TEST_CASE("group-like elements are exactly the z^a K^b") {
  const Algebra& alg = Algebra::get(3);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      CHECK(alg.monomial(a, b, 0, 0).is_group_like());
  CHECK_FALSE(alg.gen_E().is_group_like());
  CHECK_FALSE((alg.gen_K() + alg.gen_z()).is_group_like());
  CHECK_FALSE(alg.zero().is_group_like());
  CHECK_FALSE(alg.monomial(0, 1, 1, 0).is_group_like());
}

TEST_CASE("alternate parameter choices give a consistent algebra") {
  const Algebra& alg = Algebra::get(4, 3);
  CHECK(alg.zeta_pow(4) == CycNum(alg.conductor(), 1));
  const DoubleElt E = alg.gen_E(), F = alg.gen_F(), K = alg.gen_K();
  CHECK(K * E == (E * K).scaled(alg.zeta()));
  CHECK(E * F - F * E == K - alg.gen_z() * alg.k_power(-1));
  CheckReport rep = taft::verify_twist(alg, false);
  CHECK(rep.ok);
}

TEST_CASE("element printing is stable and readable") {
  const Algebra& alg = Algebra::get(3);
  CHECK(alg.zero().to_string() == "0");
  CHECK(alg.one().to_string() == "(1) 1");
  DoubleElt x = alg.gen_K() * alg.gen_F();
  CHECK(x.to_string().find("K") != std::string::npos);
  CHECK(x.to_string().find("F") != std::string::npos);
}
