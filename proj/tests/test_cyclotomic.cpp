#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "taft/cyclotomic.hpp"

using taft::CycNum;

namespace {

CycNum random_elt(long N, std::mt19937& rng, int max_terms = 6) {
  std::uniform_int_distribution<long> idx(0, N - 1);
  std::uniform_int_distribution<long> coef(-5, 5);
  std::uniform_int_distribution<long> den(1, 4);
  CycNum x(N);
  int terms = 1 + static_cast<int>(rng() % max_terms);
  for (int t = 0; t < terms; ++t) {
    mpq_class c(coef(rng), den(rng));
    c.canonicalize();
    if (c == 0) c = 1;
    x += CycNum(N, c) * CycNum::root_of_unity(N, idx(rng));
  }
  return x;
}

}  // namespace

TEST_CASE("roots of unity multiply by exponent addition") {
  long N = 24;
  for (long a = 0; a < N; a += 5)
    for (long b = 0; b < N; b += 7)
      CHECK(CycNum::root_of_unity(N, a) * CycNum::root_of_unity(N, b) ==
            CycNum::root_of_unity(N, a + b));
  CHECK(CycNum::root_of_unity(N, N) == CycNum(N, 1L));
  CHECK(CycNum::root_of_unity(N, -1) == CycNum::root_of_unity(N, N - 1));
}

TEST_CASE("cyclotomic polynomial degrees and vanishing") {
  CHECK(taft::cyclo_degree(24) == 8);
  CHECK(taft::cyclo_degree(36) == 12);
  CHECK(taft::cyclo_degree(48) == 16);
  CHECK(taft::cyclo_degree(60) == 16);
  CHECK(taft::cyclo_degree(120) == 32);
  for (long N : {24L, 36L, 48L, 60L}) {
    const auto& phi = taft::cyclo_polynomial(N);
    CycNum v(N);
    for (size_t i = 0; i < phi.size(); ++i)
      v += CycNum(N, mpq_class(phi[i])) * CycNum::root_of_unity(N, static_cast<long>(i));
    CHECK(v.is_zero());
  }
}

TEST_CASE("reduction is idempotent") {
  std::mt19937 rng(7);
  for (int t = 0; t < 50; ++t) {
    CycNum x = random_elt(36, rng);
    CycNum once = x.reduced();
    CycNum twice = once.reduced();
    CHECK(once.raw_numerators() == twice.raw_numerators());
    CHECK(once.raw_denominator() == twice.raw_denominator());
    CHECK(x == once);
  }
}

TEST_CASE("field arithmetic identities") {
  std::mt19937 rng(11);
  long N = 36;
  for (int t = 0; t < 40; ++t) {
    CycNum a = random_elt(N, rng), b = random_elt(N, rng), c = random_elt(N, rng);
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("conjugation is a multiplicative involution") {
  std::mt19937 rng(13);
  for (long N : {24L, 36L}) {
    for (int t = 0; t < 30; ++t) {
      CycNum a = random_elt(N, rng), b = random_elt(N, rng);
      CHECK((a * b).conj() == a.conj() * b.conj());
      CHECK(a.conj().conj() == a);
    }
    CHECK(CycNum::root_of_unity(N, 1).conj() == CycNum::root_of_unity(N, N - 1));
    CHECK(CycNum::root_of_unity(N, 1).galois(N - 1) ==
          CycNum::root_of_unity(N, 1).conj());
  }
}

TEST_CASE("inverses: a * a^{-1} = 1 on random nonzero elements") {
  std::mt19937 rng(17);
  for (long d : {3L, 4L}) {
    long N = taft::conductor_for(d);
    CycNum one(N, 1L);
    int done = 0;
    while (done < 200) {
      CycNum a = random_elt(N, rng);
      if (a.is_zero()) continue;
      CHECK(a * a.inverse() == one);
      ++done;
    }
  }
}

TEST_CASE("q-analogues") {
  {
    CycNum zeta = taft::primitive_root(2);
    CHECK(zeta == -CycNum(24, 1L));
    CHECK(taft::q_int(2, zeta).is_zero());
    CHECK(taft::q_int(1, zeta) == CycNum(24, 1L));
    CHECK(taft::q_fact(0, zeta) == CycNum(24, 1L));
  }
  {
    CycNum zeta = taft::primitive_root(3);
    CHECK(taft::q_fact(2, zeta) == CycNum(36, 1L) + zeta);
    CHECK(taft::q_int(3, zeta).is_zero());
  }
  for (long d = 2; d <= 8; ++d) {
    CycNum zeta = taft::primitive_root(d);
    CHECK(taft::q_int(d, zeta).is_zero());
    CHECK_FALSE(taft::q_int(d - 1, zeta).is_zero());
  }
}

TEST_CASE("primitive root parameterization") {
  for (long d = 2; d <= 6; ++d) {
    CycNum z1 = taft::primitive_root(d, 1);
    CHECK(z1.pow(d) == CycNum(taft::conductor_for(d), 1L));
    for (long m = 1; m < d; ++m) CHECK_FALSE(z1.pow(m) == CycNum(taft::conductor_for(d), 1L));
    CycNum zminus = taft::primitive_root(d, -1);
    CHECK(zminus == z1.conj());
    CHECK(zminus == z1.inverse());
  }
  CHECK_THROWS(taft::primitive_root(4, 2));
}

TEST_CASE("square root of -zeta singled out by positivity") {
  CHECK(taft::sqrt_minus_zeta(2) == CycNum(24, 1L));
  for (long d = 2; d <= 8; ++d) {
    for (long e : {1L, d - 1L}) {
      if (std::gcd(e, d) != 1) continue;
      CycNum zeta = taft::primitive_root(d, e);
      CycNum w = taft::sqrt_minus_zeta(d, e);
      CHECK(w * w == -zeta);
      long N = taft::conductor_for(d);
      CycNum v = CycNum(N, d) * w * (CycNum(N, 1L) - zeta).inverse();
      CHECK(v.is_real_positive());
      // w lies in mu_{4d}: w^{4d} = 1
      CHECK(w.pow(4 * d) == CycNum(N, 1L));
    }
  }
}

TEST_CASE("zeta_star exponent selection") {
  CHECK(taft::zeta_star_exponent(3, 1) == 1);
  CHECK(taft::zeta_star_exponent(2, 1) == 1);
  CHECK(taft::zeta_star_exponent(4, 3) == 7);   // 3, then 3+4=7 coprime to 48
  CHECK(taft::zeta_star_exponent(3, 1, 1) == 7);  // next valid choice after 1
  // order of zeta_star(3,1) is 36
  CycNum zs = taft::zeta_star(3, 1);
  CHECK(zs.pow(36) == CycNum(36, 1L));
  CHECK_FALSE(zs.pow(12) == CycNum(36, 1L));
  CHECK_FALSE(zs.pow(18) == CycNum(36, 1L));
}

TEST_CASE("rational and integer extraction") {
  long N = 24;
  CycNum x(N, mpq_class(6, 4));
  CHECK(x.is_rational());
  CHECK(x.rational_value() == mpq_class(3, 2));
  CHECK_FALSE(x.is_integer());
  CycNum z = CycNum::root_of_unity(N, 12);  // equals -1
  CHECK(z.is_integer());
  CHECK(z.integer_value() == -1);
  CHECK_FALSE(CycNum::root_of_unity(N, 3).is_rational());
}

TEST_CASE("numeric embedding") {
  auto [re, im] = taft::primitive_root(2).approx();
  CHECK(re == doctest::Approx(-1.0));
  CHECK(im == doctest::Approx(0.0));
  CycNum zeta = taft::primitive_root(3);
  CycNum norm = (CycNum(36, 1L) - zeta) * (CycNum(36, 1L) - zeta.conj());
  CHECK(norm.is_real_positive());
  CHECK(norm == CycNum(36, 3L));
  CHECK_FALSE(zeta.is_real_positive());
  CHECK_THROWS(zeta.sign_real());  // not a real number: the guard must fire
}

TEST_CASE("unattached zero combines with anything") {
  CycNum zero;
  CycNum x = CycNum::root_of_unity(24, 5);
  CHECK(zero + x == x);
  CHECK((zero * x).is_zero());
  CHECK(zero == CycNum(24));
  CHECK(zero.is_zero());
  CycNum acc;
  acc += x;
  acc += x;
  CHECK(acc == CycNum(24, 2L) * x);
}

TEST_CASE("compact keeps sparse support, reduces dense support") {
  long N = 24;
  CycNum sparse = CycNum::root_of_unity(N, 20) + CycNum::root_of_unity(N, 3);
  CycNum copy = sparse;
  copy.compact();
  CHECK(copy.raw_numerators() == sparse.raw_numerators());
  CycNum dense(N);
  for (long i = 0; i < N; ++i) dense += CycNum::root_of_unity(N, i);
  dense.compact();
  long nnz = 0;
  for (const auto& c : dense.raw_numerators())
    if (c != 0) ++nnz;
  CHECK(nnz <= taft::cyclo_degree(N));
  CHECK(dense.is_zero());  // sum of all 24th roots of unity vanishes
}
