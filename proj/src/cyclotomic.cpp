#include "taft/cyclotomic.hpp"

#include <mpfr.h>

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace taft {

namespace {

// ---------------------------------------------------------------------------
// Cyclotomic polynomials over Z, ascending coefficients, monic.
// Phi_n is obtained by exact division of x^n - 1 by the Phi_m of the proper
// divisors m | n; no factorization machinery is involved.
// ---------------------------------------------------------------------------

using ZPoly = std::vector<mpz_class>;

int zdeg(const ZPoly& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
    if (p[i] != 0) return i;
  return -1;
}

// Exact division of polynomials over Z (remainder known to vanish).
ZPoly zdiv_exact(ZPoly a, const ZPoly& b) {
  int da = zdeg(a), db = zdeg(b);
  if (db < 0) throw std::logic_error("division by zero polynomial");
  ZPoly q(static_cast<size_t>(da - db + 1), mpz_class(0));
  for (int i = da; i >= db; --i) {
    if (a[i] == 0) continue;
    mpz_class c = a[i] / b[db];
    if (c * b[db] != a[i]) throw std::logic_error("inexact polynomial division");
    q[i - db] = c;
    for (int t = 0; t <= db; ++t) a[i - db + t] -= c * b[t];
  }
  if (zdeg(a) >= 0) throw std::logic_error("nonzero remainder in exact division");
  return q;
}

std::map<long, ZPoly>& phi_cache() {
  static std::map<long, ZPoly> cache;
  return cache;
}

// Call only with the cache mutex held; recursion stays under the same lock.
const ZPoly& phi_nolock(long n) {
  auto it = phi_cache().find(n);
  if (it != phi_cache().end()) return it->second;
  ZPoly p(static_cast<size_t>(n + 1), mpz_class(0));
  p[0] = -1;
  p[static_cast<size_t>(n)] = 1;  // x^n - 1
  for (long m = 1; m < n; ++m)
    if (n % m == 0) p = zdiv_exact(p, phi_nolock(m));
  p.resize(static_cast<size_t>(zdeg(p)) + 1);
  return phi_cache().emplace(n, std::move(p)).first->second;
}

const ZPoly& phi_poly(long n) {
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  return phi_nolock(n);
}

// Per-conductor tables shared by all values of that conductor.
struct Tables {
  long N = 0;
  long deg = 0;                                  // deg Phi_N
  std::vector<std::pair<long, mpz_class>> phi_tail;  // nonzero coeffs below x^deg
  // 256-bit embedding of the powers of zeta_N (initialized in place; the
  // vectors are sized once and never reallocated afterwards).
  std::vector<__mpfr_struct> cosv, sinv;
  Tables() = default;
  Tables(const Tables&) = delete;
  Tables& operator=(const Tables&) = delete;
  ~Tables() {
    for (auto& x : cosv) mpfr_clear(&x);
    for (auto& x : sinv) mpfr_clear(&x);
  }
};

constexpr mpfr_prec_t kEmbedPrec = 256;

const Tables& tables_for(long N) {
  static std::mutex mu;
  static std::map<long, Tables> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(N);
  if (it != cache.end()) return it->second;
  Tables& t = cache[N];
  t.N = N;
  const ZPoly& phi = phi_poly(N);
  t.deg = zdeg(phi);
  for (long i = 0; i < t.deg; ++i)
    if (phi[i] != 0) t.phi_tail.emplace_back(i, phi[i]);
  t.cosv.resize(static_cast<size_t>(N));
  t.sinv.resize(static_cast<size_t>(N));
  mpfr_t two_pi, arg;
  mpfr_init2(two_pi, kEmbedPrec);
  mpfr_init2(arg, kEmbedPrec);
  mpfr_const_pi(two_pi, MPFR_RNDN);
  mpfr_mul_ui(two_pi, two_pi, 2, MPFR_RNDN);
  for (long i = 0; i < N; ++i) {
    mpfr_init2(&t.cosv[static_cast<size_t>(i)], kEmbedPrec);
    mpfr_init2(&t.sinv[static_cast<size_t>(i)], kEmbedPrec);
    mpfr_mul_si(arg, two_pi, i, MPFR_RNDN);
    mpfr_div_si(arg, arg, N, MPFR_RNDN);
    mpfr_cos(&t.cosv[static_cast<size_t>(i)], arg, MPFR_RNDN);
    mpfr_sin(&t.sinv[static_cast<size_t>(i)], arg, MPFR_RNDN);
  }
  mpfr_clear(two_pi);
  mpfr_clear(arg);
  return t;
}

long mod_nonneg(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

long cyclo_degree(long conductor) { return tables_for(conductor).deg; }

const std::vector<mpz_class>& cyclo_polynomial(long N) { return phi_poly(N); }

// ---------------------------------------------------------------------------
// CycNum
// ---------------------------------------------------------------------------

CycNum::CycNum() : conductor_(0), den_(1) {}

CycNum::CycNum(long conductor) : conductor_(conductor), den_(1) {
  if (conductor < 1) throw std::invalid_argument("conductor must be >= 1");
  num_.assign(static_cast<size_t>(conductor), mpz_class(0));
}

CycNum::CycNum(long conductor, const mpq_class& rational_value) : CycNum(conductor) {
  mpq_class v = rational_value;
  v.canonicalize();
  num_[0] = v.get_num();
  den_ = v.get_den();
}

CycNum::CycNum(long conductor, long integer_value) : CycNum(conductor) {
  num_[0] = integer_value;
}

CycNum CycNum::root_of_unity(long conductor, long k) {
  CycNum r(conductor);
  r.num_[static_cast<size_t>(mod_nonneg(k, conductor))] = 1;
  return r;
}

bool CycNum::raw_zero() const {
  for (const auto& x : num_)
    if (x != 0) return false;
  return true;
}

void CycNum::ensure(long conductor) {
  if (conductor_ == 0) {
    conductor_ = conductor;
    num_.assign(static_cast<size_t>(conductor), mpz_class(0));
    den_ = 1;
  } else if (conductor_ != conductor) {
    throw std::invalid_argument("conductor mismatch");
  }
}

void CycNum::reduce_in_place() {
  if (conductor_ == 0) return;
  const Tables& t = tables_for(conductor_);
  for (long i = conductor_ - 1; i >= t.deg; --i) {
    if (num_[static_cast<size_t>(i)] == 0) continue;
    mpz_class q;
    mpz_swap(q.get_mpz_t(), num_[static_cast<size_t>(i)].get_mpz_t());
    for (const auto& [idx, c] : t.phi_tail)
      mpz_submul(num_[static_cast<size_t>(i - t.deg + idx)].get_mpz_t(),
                 q.get_mpz_t(), c.get_mpz_t());
  }
}

void CycNum::normalize_in_place() {
  if (conductor_ == 0) return;
  if (raw_zero()) {
    den_ = 1;
    return;
  }
  mpz_class g = den_;
  for (const auto& x : num_) {
    if (x == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) return;
  }
  for (auto& x : num_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
}

CycNum CycNum::reduced() const {
  CycNum r = *this;
  r.reduce_in_place();
  r.normalize_in_place();
  return r;
}

void CycNum::compact() {
  if (conductor_ == 0) return;
  long nnz = 0;
  for (const auto& x : num_)
    if (x != 0) ++nnz;
  if (nnz > tables_for(conductor_).deg) {
    reduce_in_place();
    normalize_in_place();
  }
}

bool CycNum::is_zero() const {
  if (conductor_ == 0 || raw_zero()) return true;
  CycNum r = *this;
  r.reduce_in_place();
  return r.raw_zero();
}

bool CycNum::is_rational() const {
  if (conductor_ == 0) return true;
  CycNum r = *this;
  r.reduce_in_place();
  for (size_t i = 1; i < r.num_.size(); ++i)
    if (r.num_[i] != 0) return false;
  return true;
}

mpq_class CycNum::rational_value() const {
  if (conductor_ == 0) return mpq_class(0);
  CycNum r = reduced();
  for (size_t i = 1; i < r.num_.size(); ++i)
    if (r.num_[i] != 0) throw std::domain_error("value is not rational");
  mpq_class v(r.num_[0], r.den_);
  v.canonicalize();
  return v;
}

bool CycNum::is_integer() const {
  if (!is_rational()) return false;
  return rational_value().get_den() == 1;
}

long CycNum::integer_value() const {
  mpq_class v = rational_value();
  if (v.get_den() != 1) throw std::domain_error("value is not an integer");
  if (!v.get_num().fits_slong_p()) throw std::overflow_error("integer too large");
  return v.get_num().get_si();
}

CycNum CycNum::operator+(const CycNum& o) const {
  CycNum r = *this;
  r += o;
  return r;
}

CycNum CycNum::operator-(const CycNum& o) const {
  CycNum r = *this;
  r -= o;
  return r;
}

CycNum& CycNum::operator+=(const CycNum& o) {
  if (o.conductor_ == 0) return *this;
  ensure(o.conductor_);
  if (den_ == o.den_) {
    for (long i = 0; i < conductor_; ++i)
      if (o.num_[static_cast<size_t>(i)] != 0)
        num_[static_cast<size_t>(i)] += o.num_[static_cast<size_t>(i)];
    return *this;
  }
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), den_.get_mpz_t(), o.den_.get_mpz_t());
  mpz_class scale_self = o.den_ / g;   // multiplies our numerators
  mpz_class scale_other = den_ / g;    // multiplies theirs
  if (scale_self != 1)
    for (auto& x : num_) x *= scale_self;
  den_ *= scale_self;
  for (long i = 0; i < conductor_; ++i)
    if (o.num_[static_cast<size_t>(i)] != 0)
      mpz_addmul(num_[static_cast<size_t>(i)].get_mpz_t(),
                 o.num_[static_cast<size_t>(i)].get_mpz_t(), scale_other.get_mpz_t());
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) {
  *this += -o;
  return *this;
}

CycNum CycNum::operator-() const {
  CycNum r = *this;
  for (auto& x : r.num_) x = -x;
  return r;
}

CycNum CycNum::operator*(const CycNum& o) const {
  if (conductor_ == 0 || o.conductor_ == 0) {
    // zero times anything: an attached zero wins over unattached
    return conductor_ == 0 ? CycNum(*this) : CycNum(o.conductor_);
  }
  if (conductor_ != o.conductor_) throw std::invalid_argument("conductor mismatch");
  CycNum r(conductor_);
  r.den_ = den_ * o.den_;
  std::vector<long> nz_a, nz_b;
  nz_a.reserve(static_cast<size_t>(conductor_));
  nz_b.reserve(static_cast<size_t>(conductor_));
  for (long i = 0; i < conductor_; ++i)
    if (num_[static_cast<size_t>(i)] != 0) nz_a.push_back(i);
  for (long i = 0; i < conductor_; ++i)
    if (o.num_[static_cast<size_t>(i)] != 0) nz_b.push_back(i);
  for (long i : nz_a) {
    const mpz_class& a = num_[static_cast<size_t>(i)];
    for (long j : nz_b) {
      long k = i + j;
      if (k >= conductor_) k -= conductor_;
      mpz_addmul(r.num_[static_cast<size_t>(k)].get_mpz_t(), a.get_mpz_t(),
                 o.num_[static_cast<size_t>(j)].get_mpz_t());
    }
  }
  return r;
}

CycNum& CycNum::operator*=(const CycNum& o) {
  *this = *this * o;
  return *this;
}

bool CycNum::operator==(const CycNum& o) const {
  if (conductor_ == 0) return o.is_zero();
  if (o.conductor_ == 0) return is_zero();
  if (conductor_ != o.conductor_) return false;
  return (*this - o).is_zero();
}

CycNum CycNum::conj() const {
  if (conductor_ == 0) return *this;
  CycNum r(conductor_);
  r.den_ = den_;
  for (long i = 0; i < conductor_; ++i)
    r.num_[static_cast<size_t>(mod_nonneg(-i, conductor_))] = num_[static_cast<size_t>(i)];
  return r;
}

CycNum CycNum::galois(long k) const {
  if (conductor_ == 0) return *this;
  if (std::gcd(mod_nonneg(k, conductor_), conductor_) != 1)
    throw std::invalid_argument("galois exponent not coprime to conductor");
  CycNum r(conductor_);
  r.den_ = den_;
  for (long i = 0; i < conductor_; ++i)
    r.num_[static_cast<size_t>(mod_nonneg(i * k, conductor_))] = num_[static_cast<size_t>(i)];
  return r;
}

CycNum CycNum::pow(long exponent) const {
  if (conductor_ == 0) {
    if (exponent == 0) throw std::domain_error("0^0 of unattached zero");
    return *this;
  }
  CycNum base = *this;
  long e = exponent;
  if (e < 0) {
    base = base.inverse();
    e = -e;
  }
  CycNum acc(conductor_, 1L);
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

// Extended Euclid over Q[x] modulo Phi_N.
namespace {

using QPoly = std::vector<mpq_class>;

int qdeg(const QPoly& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
    if (p[i] != 0) return i;
  return -1;
}

QPoly qsub_mul(QPoly a, const QPoly& q, const QPoly& b) {
  // a - q*b
  int dq = qdeg(q), db = qdeg(b);
  if (dq < 0 || db < 0) return a;
  if (static_cast<int>(a.size()) < dq + db + 1) a.resize(static_cast<size_t>(dq + db + 1));
  for (int i = 0; i <= dq; ++i) {
    if (q[i] == 0) continue;
    for (int j = 0; j <= db; ++j)
      if (b[j] != 0) a[static_cast<size_t>(i + j)] -= q[static_cast<size_t>(i)] * b[static_cast<size_t>(j)];
  }
  return a;
}

QPoly qdivq(const QPoly& a, const QPoly& b) {
  int da = qdeg(a), db = qdeg(b);
  QPoly rem = a, quo(static_cast<size_t>(std::max(da - db + 1, 1)), mpq_class(0));
  for (int i = da; i >= db; --i) {
    if (rem[static_cast<size_t>(i)] == 0) continue;
    mpq_class c = rem[static_cast<size_t>(i)] / b[static_cast<size_t>(db)];
    quo[static_cast<size_t>(i - db)] = c;
    for (int t = 0; t <= db; ++t)
      rem[static_cast<size_t>(i - db + t)] -= c * b[static_cast<size_t>(t)];
  }
  return quo;
}

}  // namespace

CycNum CycNum::inverse() const {
  if (conductor_ == 0 || is_zero()) throw std::domain_error("inverse of zero");
  CycNum a = reduced();
  const Tables& t = tables_for(conductor_);
  QPoly r0(phi_poly(conductor_).size());
  const ZPoly& phi = phi_poly(conductor_);
  for (size_t i = 0; i < phi.size(); ++i) r0[i] = mpq_class(phi[i]);
  QPoly r1(static_cast<size_t>(t.deg), mpq_class(0));
  for (long i = 0; i < t.deg; ++i)
    r1[static_cast<size_t>(i)] = mpq_class(a.num_[static_cast<size_t>(i)], a.den_);
  for (auto& c : r1) c.canonicalize();
  QPoly s0(1, mpq_class(0)), s1(1, mpq_class(1));
  while (qdeg(r1) > 0) {
    QPoly q = qdivq(r0, r1);
    QPoly r2 = qsub_mul(r0, q, r1);
    QPoly s2 = qsub_mul(s0, q, s1);
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (qdeg(r1) != 0) throw std::logic_error("gcd with Phi_N not constant");
  mpq_class c = r1[0];
  CycNum out(conductor_);
  mpz_class lcm_den(1);
  QPoly inv = s1;
  for (auto& x : inv) {
    x /= c;
    x.canonicalize();
  }
  for (const auto& x : inv)
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), mpq_denref(x.get_mpq_t()));
  out.den_ = lcm_den;
  for (size_t i = 0; i < inv.size() && i < out.num_.size(); ++i)
    out.num_[i] = inv[i].get_num() * (lcm_den / inv[i].get_den());
  out.normalize_in_place();
  return out;
}

std::vector<mpq_class> CycNum::canonical_coeffs() const {
  if (conductor_ == 0) throw std::domain_error("unattached zero has no coefficients");
  CycNum r = reduced();
  std::vector<mpq_class> out(static_cast<size_t>(conductor_));
  for (long i = 0; i < conductor_; ++i) {
    out[static_cast<size_t>(i)] = mpq_class(r.num_[static_cast<size_t>(i)], r.den_);
    out[static_cast<size_t>(i)].canonicalize();
  }
  return out;
}

std::pair<double, double> CycNum::approx() const {
  if (conductor_ == 0) return {0.0, 0.0};
  const Tables& t = tables_for(conductor_);
  mpfr_t re, im, term;
  mpfr_init2(re, kEmbedPrec);
  mpfr_init2(im, kEmbedPrec);
  mpfr_init2(term, kEmbedPrec);
  mpfr_set_zero(re, 1);
  mpfr_set_zero(im, 1);
  for (long i = 0; i < conductor_; ++i) {
    const mpz_class& n = num_[static_cast<size_t>(i)];
    if (n == 0) continue;
    mpfr_set_z(term, n.get_mpz_t(), MPFR_RNDN);
    mpfr_fma(re, term, &t.cosv[static_cast<size_t>(i)], re, MPFR_RNDN);
    mpfr_fma(im, term, &t.sinv[static_cast<size_t>(i)], im, MPFR_RNDN);
  }
  mpfr_t den;
  mpfr_init2(den, kEmbedPrec);
  mpfr_set_z(den, den_.get_mpz_t(), MPFR_RNDN);
  mpfr_div(re, re, den, MPFR_RNDN);
  mpfr_div(im, im, den, MPFR_RNDN);
  double dre = mpfr_get_d(re, MPFR_RNDN);
  double dim = mpfr_get_d(im, MPFR_RNDN);
  mpfr_clear(re);
  mpfr_clear(im);
  mpfr_clear(term);
  mpfr_clear(den);
  return {dre, dim};
}

int CycNum::sign_real() const {
  auto [re, im] = approx();
  if (std::abs(im) > 1e-20)
    throw std::logic_error("sign_real: imaginary part not negligible");
  if (std::abs(re) <= 1e-20)
    throw std::logic_error("sign_real: magnitude below decision margin");
  return re > 0 ? 1 : -1;
}

bool CycNum::is_real_positive() const {
  if (is_zero()) return false;
  if (!(*this == conj())) return false;
  return sign_real() > 0;
}

std::string CycNum::to_string() const {
  if (conductor_ == 0) return "0";
  std::vector<mpq_class> c = canonical_coeffs();
  std::ostringstream os;
  bool first = true;
  for (long i = 0; i < conductor_; ++i) {
    const mpq_class& q = c[static_cast<size_t>(i)];
    if (q == 0) continue;
    mpq_class a = q;
    bool neg = a < 0;
    if (neg) a = -a;
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    bool unit_coeff = (a == 1) && i != 0;
    if (!unit_coeff) {
      if (a.get_den() == 1)
        os << a.get_num().get_str();
      else
        os << "(" << a.get_num().get_str() << "/" << a.get_den().get_str() << ")";
    }
    if (i != 0) {
      if (!unit_coeff) os << "*";
      os << "zeta" << conductor_;
      if (i != 1) os << "^" << i;
    }
  }
  if (first) return "0";
  return os.str();
}

// ---------------------------------------------------------------------------
// q-analogues and the distinguished roots
// ---------------------------------------------------------------------------

CycNum q_int(long n, const CycNum& xi) {
  if (n < 0) throw std::invalid_argument("q_int: n must be >= 0");
  if (xi.conductor() == 0) throw std::invalid_argument("q_int: xi must be attached");
  CycNum acc(xi.conductor());
  CycNum p(xi.conductor(), 1L);
  for (long t = 0; t < n; ++t) {
    acc += p;
    p *= xi;
  }
  return acc;
}

CycNum q_fact(long n, const CycNum& xi) {
  if (n < 0) throw std::invalid_argument("q_fact: n must be >= 0");
  CycNum acc(xi.conductor() == 0 ? 1 : xi.conductor(), 1L);
  for (long t = 1; t <= n; ++t) acc *= q_int(t, xi);
  return acc;
}

long conductor_for(long d) {
  if (d < 2) throw std::invalid_argument("d must be >= 2");
  return 12 * d;
}

CycNum primitive_root(long d, long e) {
  long N = conductor_for(d);
  if (std::gcd(mod_nonneg(e, d), d) != 1)
    throw std::invalid_argument("e must be coprime to d");
  return CycNum::root_of_unity(N, mod_nonneg(12 * e, N));
}

CycNum sqrt_minus_zeta(long d, long e) {
  long N = conductor_for(d);
  CycNum zeta = primitive_root(d, e);
  CycNum w = CycNum::root_of_unity(N, mod_nonneg(3 * (d + 2 * e), N));
  if (!(w * w == -zeta)) throw std::logic_error("square-root candidate failed w^2 = -zeta");
  CycNum one(N, 1L);
  CycNum v = CycNum(N, d) * w * (one - zeta).inverse();
  if (!(v == v.conj())) throw std::logic_error("d*w/(1-zeta) is not real");
  // exact cross-check: |v|^2 = d^2 / ((1-zeta)(1-zeta^{-1}))
  CycNum target = CycNum(N, d * d) * ((one - zeta) * (one - zeta.conj())).inverse();
  if (!(v * v.conj() == target)) throw std::logic_error("square-root magnitude check failed");
  if (v.sign_real() < 0) w = -w;
  return w;
}

long zeta_star_exponent(long d, long e, long skip) {
  long N = conductor_for(d);
  if (std::gcd(mod_nonneg(e, d), d) != 1)
    throw std::invalid_argument("e must be coprime to d");
  long found = 0;
  for (long k = 0;; ++k) {
    long t = e + k * d;
    if (std::gcd(mod_nonneg(t, N), N) == 1) {
      if (found == skip) return t;
      ++found;
    }
    if (k > 24 * (skip + 1)) throw std::logic_error("no coprime exponent found");
  }
}

CycNum zeta_star(long d, long e) {
  return CycNum::root_of_unity(conductor_for(d), zeta_star_exponent(d, e));
}

}  // namespace taft
