#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace taft {

// An exact element of the cyclotomic field Q(zeta_N).
//
// Representation: a common denominator den > 0 and a length-N vector of
// integer numerators, encoding (1/den) * sum_i num[i] * x^i modulo x^N - 1.
// Multiplication is cyclic convolution (cheap, sparsity-preserving);
// reduction modulo the N-th cyclotomic polynomial happens lazily, on
// equality tests, inversion, sign decisions and serialization.
//
// A default-constructed value is the "unattached" zero (conductor 0): it
// combines with any operand and adopts its conductor, so containers of
// CycNum can be zero-initialized without knowing N.
class CycNum {
 public:
  CycNum();
  explicit CycNum(long conductor);                      // zero of Q(zeta_N)
  CycNum(long conductor, const mpq_class& rational_value);
  CycNum(long conductor, long integer_value);

  static CycNum root_of_unity(long conductor, long k);  // zeta_N^k

  long conductor() const { return conductor_; }

  bool is_zero() const;       // exact test (reduces a copy when needed)
  bool is_rational() const;
  mpq_class rational_value() const;  // requires is_rational()
  bool is_integer() const;
  long integer_value() const;        // requires is_integer(), fits in long

  CycNum operator+(const CycNum& o) const;
  CycNum operator-(const CycNum& o) const;
  CycNum operator*(const CycNum& o) const;
  CycNum operator-() const;
  CycNum& operator+=(const CycNum& o);
  CycNum& operator-=(const CycNum& o);
  CycNum& operator*=(const CycNum& o);

  CycNum inverse() const;            // requires nonzero
  CycNum conj() const;               // complex conjugation zeta -> zeta^{-1}
  CycNum galois(long k) const;       // zeta -> zeta^k, gcd(k, N) = 1
  CycNum pow(long exponent) const;   // integer exponents, negatives invert

  bool operator==(const CycNum& o) const;
  bool operator!=(const CycNum& o) const { return !(*this == o); }

  // Canonical form: reduced modulo Phi_N, denominator positive and coprime
  // to the content of the numerators.
  CycNum reduced() const;

  // Rational coefficients of the canonical form, indexed by power of
  // zeta_N, length N (entries of degree >= deg Phi_N are zero).
  std::vector<mpq_class> canonical_coeffs() const;

  // Numeric embedding at zeta_N = exp(2*pi*sqrt(-1)/N), 256-bit internally.
  std::pair<double, double> approx() const;  // (re, im)

  // Sign of the value, which must be real (imaginary part below 1e-20) and
  // bounded away from zero (|value| > 1e-20); throws otherwise.
  int sign_real() const;

  // Exactly real (fixed by conjugation) and positive in the embedding.
  bool is_real_positive() const;

  // Raw access (unreduced representation); mainly for serialization and
  // the sparse multiplication kernels.
  const std::vector<mpz_class>& raw_numerators() const { return num_; }
  const mpz_class& raw_denominator() const { return den_; }

  // Cheap syntactic zero test: true only when every stored numerator is zero
  // (no reduction attempted).  Safe for skipping terms in accumulations.
  bool raw_is_zero() const {
    for (const auto& v : num_)
      if (v != 0) return false;
    return true;
  }

  // Reduce + strip content if the support is larger than deg Phi_N; used to
  // keep matrix accumulators compact.
  void compact();

  std::string to_string() const;     // human-readable, zeta-power form

 private:
  void ensure(long conductor);       // attach an unattached zero
  void reduce_in_place();            // modulo Phi_N (integer-exact)
  void normalize_in_place();         // strip gcd(content, den)
  bool raw_zero() const;             // all numerators zero

  long conductor_;                   // 0 = unattached zero
  mpz_class den_;                    // > 0
  std::vector<mpz_class> num_;       // length conductor_

  friend class CycloTables;
};

// Per-conductor tables: the cyclotomic polynomial Phi_N and embedding data.
long cyclo_degree(long conductor);                       // deg Phi_N
const std::vector<mpz_class>& cyclo_polynomial(long N);  // monic, ascending

// q-analogues: (n)_xi = 1 + xi + ... + xi^{n-1} and (n)!_xi, with
// (0)_xi = 0 and (0)!_xi = 1.
CycNum q_int(long n, const CycNum& xi);
CycNum q_fact(long n, const CycNum& xi);

// The conductor used throughout for parameter d: N = 12*d.
long conductor_for(long d);

// Primitive d-th root zeta = zeta_N^{12e}, gcd(e, d) = 1 (default e = 1).
CycNum primitive_root(long d, long e = 1);

// The square root w of -zeta singled out by the requirement that
// d*w/(1 - zeta) is a positive real number; w lies in mu_{4d} <= mu_{12d}.
CycNum sqrt_minus_zeta(long d, long e = 1);

// zeta_* = zeta_N^{e + k*d} for the smallest k >= 0 making the exponent
// coprime to 12d; `skip` asks for the (skip+1)-th valid choice instead.
CycNum zeta_star(long d, long e = 1);
long zeta_star_exponent(long d, long e = 1, long skip = 0);

}  // namespace taft
