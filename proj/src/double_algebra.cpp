#include "taft/double_algebra.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace taft {
namespace {

int modd(long v, long d) {
  long r = v % d;
  if (r < 0) r += d;
  return static_cast<int>(r);
}

Mono shift_kz(const Mono& m, int a, int b, long d) {
  return Mono{modd(m[0] + a, d), modd(m[1] + b, d), m[2], m[3]};
}

std::string mono_to_string(const Mono& m) {
  std::ostringstream os;
  bool any = false;
  auto put = [&](const char* sym, int exp) {
    if (exp == 0) return;
    if (any) os << " ";
    os << sym;
    if (exp != 1) os << "^" << exp;
    any = true;
  };
  put("z", m[0]);
  put("K", m[1]);
  put("F", m[2]);
  put("E", m[3]);
  if (!any) os << "1";
  return os.str();
}

}  // namespace

// ---------------------------------------------------------------------------
// Algebra construction

const Algebra& Algebra::get(long d, long e) {
  static std::mutex mu;
  static std::map<std::pair<long, long>, std::unique_ptr<Algebra>> cache;
  std::lock_guard<std::mutex> lk(mu);
  auto key = std::make_pair(d, e);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, std::unique_ptr<Algebra>(new Algebra(d, e))).first;
  return *it->second;
}

Algebra::~Algebra() = default;

Algebra::Algebra(long d, long e) : d_(d), e_(e), N_(conductor_for(d)) {
  if (d < 2) throw std::invalid_argument("Algebra: d must be at least 2");
  CycNum zeta = primitive_root(d, e);

  zeta_pows_.reserve(static_cast<size_t>(d_));
  CycNum cur(N_, 1);
  for (long t = 0; t < d_; ++t) {
    zeta_pows_.push_back(cur);
    cur = cur * zeta;
  }
  if (!(cur == CycNum(N_, 1)))
    throw std::logic_error("Algebra: quantum parameter does not have order d");

  qfact_.reserve(static_cast<size_t>(d_) + 1);
  qfact_.emplace_back(N_, 1);
  for (long n = 1; n <= d_; ++n)
    qfact_.push_back(qfact_.back() * q_int(n, zeta));
  qfact_inv_.reserve(static_cast<size_t>(d_));
  for (long n = 0; n < d_; ++n) qfact_inv_.push_back(qfact_[n].inverse());

  // Rewrite table: E^j F^i as a combination of normal-order monomials, built
  // by induction on j from
  //   E F^i = F^i E + zeta^{1-i} (i)_zeta F^{i-1} K - (i)_zeta z F^{i-1} K^{-1}.
  normal_ef_.assign(static_cast<size_t>(d_),
                    std::vector<std::vector<std::pair<Mono, CycNum>>>(
                        static_cast<size_t>(d_)));
  for (int i = 0; i < d_; ++i)
    normal_ef_[0][i] = {{Mono{0, 0, i, 0}, CycNum(N_, 1)}};
  for (int j = 1; j < d_; ++j)
    normal_ef_[j][0] = {{Mono{0, 0, 0, j}, CycNum(N_, 1)}};
  for (int j = 1; j < d_; ++j) {
    for (int i = 1; i < d_; ++i) {
      std::map<Mono, CycNum> acc;
      auto add = [&](const Mono& m, const CycNum& c) {
        auto it = acc.find(m);
        if (it == acc.end())
          acc.emplace(m, c);
        else
          it->second += c;
      };
      const CycNum qi = q_int(i, zeta);
      const CycNum scale_b = zeta_pow(1 - i) * qi;
      // E^j F^i = (E^{j-1} F^i) E
      //           + zeta^{1-i}(i)_zeta (E^{j-1} F^{i-1}) K
      //           - (i)_zeta z (E^{j-1} F^{i-1}) K^{-1}
      for (const auto& [m, c] : normal_ef_[j - 1][i]) {
        if (m[3] + 1 >= d_) continue;  // E^d = 0
        add(Mono{m[0], m[1], m[2], m[3] + 1}, c);
      }
      for (const auto& [m, c] : normal_ef_[j - 1][i - 1]) {
        // right-multiply by K: picks up zeta^{gamma - delta}
        add(Mono{m[0], modd(m[1] + 1, d_), m[2], m[3]},
            c * scale_b * zeta_pow(m[2] - m[3]));
        // left z, right K^{-1}: picks up zeta^{delta - gamma}
        add(Mono{modd(m[0] + 1, d_), modd(m[1] - 1, d_), m[2], m[3]},
            -(c * qi * zeta_pow(m[3] - m[2])));
      }
      auto& out = normal_ef_[j][i];
      out.reserve(acc.size());
      for (auto& [m, c] : acc)
        if (!c.is_zero()) out.emplace_back(m, c);
    }
  }

  // Antipode powers S(E)^j and S(F)^i.  In normal order
  //   S(E) = -E K^{-1} = -zeta K^{d-1} E,   S(F) = -z^{-1} K F,
  // and a product of pure-E (or pure-F) monomials stays a single monomial.
  s_e_pow_.reserve(static_cast<size_t>(d_));
  s_f_pow_.reserve(static_cast<size_t>(d_));
  s_e_pow_.emplace_back(Mono{0, 0, 0, 0}, CycNum(N_, 1));
  s_f_pow_.emplace_back(Mono{0, 0, 0, 0}, CycNum(N_, 1));
  const std::pair<Mono, CycNum> se1{Mono{0, modd(-1, d_), 0, 1},
                                    -zeta_pow(1)};
  const std::pair<Mono, CycNum> sf1{Mono{modd(-1, d_), 1, 1, 0},
                                    CycNum(N_, -1)};
  std::vector<std::pair<Mono, CycNum>> buf;
  for (int n = 1; n < d_; ++n) {
    mono_mul(s_e_pow_[n - 1].first, se1.first, buf);
    if (buf.size() != 1)
      throw std::logic_error("Algebra: S(E)^n is not a single monomial");
    s_e_pow_.emplace_back(buf[0].first,
                          s_e_pow_[n - 1].second * se1.second * buf[0].second);
    mono_mul(s_f_pow_[n - 1].first, sf1.first, buf);
    if (buf.size() != 1)
      throw std::logic_error("Algebra: S(F)^n is not a single monomial");
    s_f_pow_.emplace_back(buf[0].first,
                          s_f_pow_[n - 1].second * sf1.second * buf[0].second);
  }
}

const CycNum& Algebra::zeta_pow(long t) const {
  return zeta_pows_[static_cast<size_t>(modd(t, d_))];
}

const CycNum& Algebra::qfact(long n) const {
  return qfact_.at(static_cast<size_t>(n));
}

const CycNum& Algebra::qfact_inv(long n) const {
  return qfact_inv_.at(static_cast<size_t>(n));
}

DoubleElt Algebra::zero() const { return DoubleElt(*this); }

DoubleElt Algebra::one() const { return monomial(0, 0, 0, 0); }

DoubleElt Algebra::gen_E() const { return monomial(0, 0, 0, 1); }

DoubleElt Algebra::gen_F() const { return monomial(0, 0, 1, 0); }

DoubleElt Algebra::gen_K() const { return monomial(0, 1, 0, 0); }

DoubleElt Algebra::gen_z() const { return monomial(1, 0, 0, 0); }

DoubleElt Algebra::monomial(int a, int b, int i, int j) const {
  return monomial(a, b, i, j, CycNum(N_, 1));
}

DoubleElt Algebra::monomial(int a, int b, int i, int j, const CycNum& c) const {
  if (i < 0 || i >= d_ || j < 0 || j >= d_)
    throw std::invalid_argument("Algebra::monomial: E/F exponent out of range");
  DoubleElt r(*this);
  r.add_term(Mono{modd(a, d_), modd(b, d_), i, j}, c);
  return r;
}

DoubleElt Algebra::k_power(long t) const { return monomial(0, modd(t, d_), 0, 0); }

DoubleElt Algebra::z_power(long t) const { return monomial(modd(t, d_), 0, 0, 0); }

DoubleElt Algebra::scalar(const CycNum& c) const { return monomial(0, 0, 0, 0, c); }

std::vector<Mono> Algebra::all_monomials() const {
  std::vector<Mono> out;
  out.reserve(static_cast<size_t>(d_ * d_ * d_ * d_));
  for (int a = 0; a < d_; ++a)
    for (int b = 0; b < d_; ++b)
      for (int i = 0; i < d_; ++i)
        for (int j = 0; j < d_; ++j) out.push_back(Mono{a, b, i, j});
  return out;
}

const std::vector<std::pair<Mono, CycNum>>& Algebra::normal_ef(int j, int i) const {
  return normal_ef_.at(static_cast<size_t>(j)).at(static_cast<size_t>(i));
}

void Algebra::mono_mul(const Mono& x, const Mono& y,
                       std::vector<std::pair<Mono, CycNum>>& out) const {
  out.clear();
  const auto& tab = normal_ef_[static_cast<size_t>(x[3])][static_cast<size_t>(y[2])];
  const long pre = static_cast<long>(x[2] - x[3]) * y[1];
  for (const auto& [m, c] : tab) {
    const int gamma = x[2] + m[2];
    if (gamma >= d_) continue;  // F^d = 0
    const int delta = m[3] + y[3];
    if (delta >= d_) continue;  // E^d = 0
    out.emplace_back(
        Mono{modd(x[0] + y[0] + m[0], d_), modd(x[1] + y[1] + m[1], d_), gamma,
             delta},
        c * zeta_pow(pre + static_cast<long>(x[2]) * m[1]));
  }
}

// ---------------------------------------------------------------------------
// Cached structural elements

void Algebra::ensure_r_nolock() const {
  if (r_cache_) return;
  auto r = std::make_unique<DoubleTensor>(*this);
  const CycNum inv_d(N_, mpq_class(1, static_cast<unsigned long>(d_)));
  for (int i = 0; i < d_; ++i) {
    for (int j = 0; j < d_; ++j) {
      for (int k = 0; k < d_; ++k) {
        // (1/d) zeta^{(i-k)(i+j) - i(i+1)/2} / (i)!_zeta  *  E^i K^j
        //   (x)  z^{-k} F^i K^k, rewritten into normal order:
        //   E^i K^j = zeta^{-ij} K^j E^i,  z^{-k} F^i K^k = zeta^{ik} z^{-k} K^k F^i.
        long exo = static_cast<long>(i - k) * (i + j) -
                   static_cast<long>(i) * (i + 1) / 2 -
                   static_cast<long>(i) * j + static_cast<long>(i) * k;
        CycNum c = inv_d * qfact_inv(i) * zeta_pow(exo);
        r->add_term({Mono{0, j, 0, i}, Mono{modd(-k, d_), k, i, 0}}, c);
      }
    }
  }
  r_cache_ = std::move(r);
}

const DoubleTensor& Algebra::r_matrix() const {
  std::lock_guard<std::mutex> lk(cache_mu_);
  ensure_r_nolock();
  return *r_cache_;
}

const DoubleTensor& Algebra::monodromy() const {
  std::lock_guard<std::mutex> lk(cache_mu_);
  ensure_r_nolock();
  if (!monodromy_cache_)
    monodromy_cache_ =
        std::make_unique<DoubleTensor>(r_cache_->swapped() * *r_cache_);
  return *monodromy_cache_;
}

const DoubleElt& Algebra::twist() const {
  std::lock_guard<std::mutex> lk(cache_mu_);
  if (!twist_cache_) {
    auto th = std::make_unique<DoubleElt>(*this);
    const CycNum inv_d(N_, mpq_class(1, static_cast<unsigned long>(d_)));
    for (int i = 0; i < d_; ++i) {
      for (int j = 0; j < d_; ++j) {
        for (int k = 0; k < d_; ++k) {
          // (-1)^i (1/d) zeta^{(i-k)(i+j)-i} / (i)!_zeta
          //   * z^{k-i} F^i E^i K^{i+j-k-1}; the K factor commutes past
          //   F^i E^i without a scalar, so each term is one monomial.
          long exo = static_cast<long>(i - k) * (i + j) - i;
          CycNum c = inv_d * qfact_inv(i) * zeta_pow(exo);
          if (i % 2 == 1) c = -c;
          th->add_term(Mono{modd(k - i, d_), modd(i + j - k - 1, d_), i, i}, c);
        }
      }
    }
    twist_cache_ = std::move(th);
  }
  return *twist_cache_;
}

const DoubleTensor& Algebra::delta_fe_nolock(int i, int j) const {
  auto key = std::make_pair(i, j);
  auto it = delta_fe_cache_.find(key);
  if (it != delta_fe_cache_.end()) return it->second;

  DoubleTensor val(*this);
  if (i == 0 && j == 0) {
    val.add_term({Mono{0, 0, 0, 0}, Mono{0, 0, 0, 0}}, CycNum(N_, 1));
  } else if (j > 0) {
    // Delta(F)^i Delta(E)^j = (previous) * Delta(E),
    // Delta(E) = 1 (x) E + E (x) K.
    DoubleTensor dE(*this);
    dE.add_term({Mono{0, 0, 0, 0}, Mono{0, 0, 0, 1}}, CycNum(N_, 1));
    dE.add_term({Mono{0, 0, 0, 1}, Mono{0, 1, 0, 0}}, CycNum(N_, 1));
    val = delta_fe_nolock(i, j - 1) * dE;
  } else {
    // Delta(F) = F (x) 1 + z K^{-1} (x) F.
    DoubleTensor dF(*this);
    dF.add_term({Mono{0, 0, 1, 0}, Mono{0, 0, 0, 0}}, CycNum(N_, 1));
    dF.add_term({Mono{1, modd(-1, d_), 0, 0}, Mono{0, 0, 1, 0}}, CycNum(N_, 1));
    val = delta_fe_nolock(i - 1, 0) * dF;
  }
  return delta_fe_cache_.emplace(key, std::move(val)).first->second;
}

const DoubleTensor& Algebra::delta_fe(int i, int j) const {
  std::lock_guard<std::mutex> lk(cache_mu_);
  return delta_fe_nolock(i, j);
}

// ---------------------------------------------------------------------------
// DoubleElt

void DoubleElt::add_term(const Mono& m, const CycNum& c) {
  auto it = terms_.find(m);
  if (it == terms_.end())
    terms_.emplace(m, c);
  else
    it->second += c;
}

DoubleElt DoubleElt::operator+(const DoubleElt& o) const {
  DoubleElt r(*this);
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

DoubleElt DoubleElt::operator-(const DoubleElt& o) const {
  DoubleElt r(*this);
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

DoubleElt DoubleElt::operator-() const {
  DoubleElt r(*alg_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

DoubleElt DoubleElt::operator*(const DoubleElt& o) const {
  DoubleElt r(*alg_);
  std::vector<std::pair<Mono, CycNum>> buf;
  for (const auto& [mx, cx] : terms_) {
    for (const auto& [my, cy] : o.terms_) {
      alg_->mono_mul(mx, my, buf);
      if (buf.empty()) continue;
      CycNum cc = cx * cy;
      for (const auto& [m, c] : buf) r.add_term(m, cc * c);
    }
  }
  return r;
}

DoubleElt DoubleElt::scaled(const CycNum& c) const {
  DoubleElt r(*alg_);
  for (const auto& [m, cm] : terms_) r.terms_.emplace(m, cm * c);
  return r;
}

bool DoubleElt::operator==(const DoubleElt& o) const {
  return (*this - o).is_zero();
}

bool DoubleElt::is_zero() const {
  for (const auto& [m, c] : terms_)
    if (!c.is_zero()) return false;
  return true;
}

DoubleElt DoubleElt::pruned() const {
  DoubleElt r(*alg_);
  for (const auto& [m, c] : terms_)
    if (!c.is_zero()) r.terms_.emplace(m, c.reduced());
  return r;
}

CycNum DoubleElt::counit() const {
  CycNum s(alg_->conductor(), 0);
  for (const auto& [m, c] : terms_)
    if (m[2] == 0 && m[3] == 0) s += c;
  return s;
}

DoubleElt DoubleElt::antipode() const {
  const long d = alg_->d();
  DoubleElt r(*alg_);
  std::vector<std::pair<Mono, CycNum>> buf;
  for (const auto& [m, c] : terms_) {
    // S(z^a K^b F^i E^j) = S(E)^j S(F)^i K^{-b} z^{-a}
    const auto& se = alg_->s_e_pow_[static_cast<size_t>(m[3])];
    const auto& sf = alg_->s_f_pow_[static_cast<size_t>(m[2])];
    alg_->mono_mul(se.first, sf.first, buf);
    CycNum cc = c * se.second * sf.second;
    for (const auto& [mm, cm] : buf) {
      // right-multiply by K^{-b}: zeta^{-b(gamma-delta)}, then z^{-a}
      CycNum coeff =
          cc * cm * alg_->zeta_pow(static_cast<long>(m[1]) * (mm[3] - mm[2]));
      r.add_term(Mono{modd(mm[0] - m[0], d), modd(mm[1] - m[1], d), mm[2], mm[3]},
                 coeff);
    }
  }
  return r;
}

DoubleTensor DoubleElt::coproduct() const {
  DoubleTensor r(*alg_);
  for (const auto& [m, c] : terms_) {
    const DoubleTensor& base = alg_->delta_fe(m[2], m[3]);
    for (const auto& [k, ck] : base.terms()) {
      r.add_term({shift_kz(k[0], m[0], m[1], alg_->d()),
                  shift_kz(k[1], m[0], m[1], alg_->d())},
                 c * ck);
    }
  }
  return r;
}

bool DoubleElt::is_group_like() const {
  if (!(counit() == CycNum(alg_->conductor(), 1))) return false;
  return coproduct() == DoubleTensor::outer(*this, *this);
}

std::string DoubleElt::to_string() const {
  DoubleElt p = pruned();
  if (p.terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ") " << mono_to_string(m);
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// DoubleTensor

void DoubleTensor::add_term(const Key& k, const CycNum& c) {
  auto it = terms_.find(k);
  if (it == terms_.end())
    terms_.emplace(k, c);
  else
    it->second += c;
}

DoubleTensor DoubleTensor::operator+(const DoubleTensor& o) const {
  DoubleTensor r(*this);
  for (const auto& [k, c] : o.terms_) r.add_term(k, c);
  return r;
}

DoubleTensor DoubleTensor::operator-(const DoubleTensor& o) const {
  DoubleTensor r(*this);
  for (const auto& [k, c] : o.terms_) r.add_term(k, -c);
  return r;
}

DoubleTensor DoubleTensor::operator*(const DoubleTensor& o) const {
  DoubleTensor r(*alg_);
  std::vector<std::pair<Mono, CycNum>> b1, b2;
  for (const auto& [kx, cx] : terms_) {
    for (const auto& [ky, cy] : o.terms_) {
      alg_->mono_mul(kx[0], ky[0], b1);
      if (b1.empty()) continue;
      alg_->mono_mul(kx[1], ky[1], b2);
      if (b2.empty()) continue;
      CycNum cc = cx * cy;
      for (const auto& [m1, c1] : b1) {
        CycNum c01 = cc * c1;
        for (const auto& [m2, c2] : b2) r.add_term({m1, m2}, c01 * c2);
      }
    }
  }
  return r;
}

DoubleTensor DoubleTensor::scaled(const CycNum& c) const {
  DoubleTensor r(*alg_);
  for (const auto& [k, ck] : terms_) r.terms_.emplace(k, ck * c);
  return r;
}

bool DoubleTensor::operator==(const DoubleTensor& o) const {
  return (*this - o).is_zero();
}

bool DoubleTensor::is_zero() const {
  for (const auto& [k, c] : terms_)
    if (!c.is_zero()) return false;
  return true;
}

DoubleTensor DoubleTensor::pruned() const {
  DoubleTensor r(*alg_);
  for (const auto& [k, c] : terms_)
    if (!c.is_zero()) r.terms_.emplace(k, c.reduced());
  return r;
}

DoubleTensor DoubleTensor::swapped() const {
  DoubleTensor r(*alg_);
  for (const auto& [k, c] : terms_) r.add_term({k[1], k[0]}, c);
  return r;
}

DoubleElt DoubleTensor::counit_left() const {
  DoubleElt r(*alg_);
  for (const auto& [k, c] : terms_)
    if (k[0][2] == 0 && k[0][3] == 0) r.add_term(k[1], c);
  return r;
}

DoubleElt DoubleTensor::counit_right() const {
  DoubleElt r(*alg_);
  for (const auto& [k, c] : terms_)
    if (k[1][2] == 0 && k[1][3] == 0) r.add_term(k[0], c);
  return r;
}

DoubleElt DoubleTensor::mult_antipode_left() const {
  DoubleElt r(*alg_);
  std::vector<std::pair<Mono, CycNum>> buf;
  for (const auto& [k, c] : terms_) {
    DoubleElt s = alg_->monomial(k[0][0], k[0][1], k[0][2], k[0][3]).antipode();
    for (const auto& [ms, cs] : s.terms()) {
      alg_->mono_mul(ms, k[1], buf);
      CycNum cc = c * cs;
      for (const auto& [m, cm] : buf) r.add_term(m, cc * cm);
    }
  }
  return r;
}

DoubleElt DoubleTensor::mult_antipode_right() const {
  DoubleElt r(*alg_);
  std::vector<std::pair<Mono, CycNum>> buf;
  for (const auto& [k, c] : terms_) {
    DoubleElt s = alg_->monomial(k[1][0], k[1][1], k[1][2], k[1][3]).antipode();
    for (const auto& [ms, cs] : s.terms()) {
      alg_->mono_mul(k[0], ms, buf);
      CycNum cc = c * cs;
      for (const auto& [m, cm] : buf) r.add_term(m, cc * cm);
    }
  }
  return r;
}

DoubleTensor3 DoubleTensor::coproduct_slot(int slot) const {
  if (slot != 0 && slot != 1)
    throw std::invalid_argument("coproduct_slot: slot must be 0 or 1");
  DoubleTensor3 r(*alg_);
  const long d = alg_->d();
  for (const auto& [k, c] : terms_) {
    const Mono& m = k[static_cast<size_t>(slot)];
    const DoubleTensor& base = alg_->delta_fe(m[2], m[3]);
    for (const auto& [kk, ck] : base.terms()) {
      Mono d1 = shift_kz(kk[0], m[0], m[1], d);
      Mono d2 = shift_kz(kk[1], m[0], m[1], d);
      if (slot == 0)
        r.add_term({d1, d2, k[1]}, c * ck);
      else
        r.add_term({k[0], d1, d2}, c * ck);
    }
  }
  return r;
}

DoubleTensor3 DoubleTensor::embed13() const {
  DoubleTensor3 r(*alg_);
  const Mono id{0, 0, 0, 0};
  for (const auto& [k, c] : terms_) r.add_term({k[0], id, k[1]}, c);
  return r;
}

DoubleTensor3 DoubleTensor::embed23() const {
  DoubleTensor3 r(*alg_);
  const Mono id{0, 0, 0, 0};
  for (const auto& [k, c] : terms_) r.add_term({id, k[0], k[1]}, c);
  return r;
}

DoubleTensor3 DoubleTensor::embed12() const {
  DoubleTensor3 r(*alg_);
  const Mono id{0, 0, 0, 0};
  for (const auto& [k, c] : terms_) r.add_term({k[0], k[1], id}, c);
  return r;
}

DoubleTensor DoubleTensor::outer(const DoubleElt& x, const DoubleElt& y) {
  DoubleTensor r(x.algebra());
  for (const auto& [mx, cx] : x.terms())
    for (const auto& [my, cy] : y.terms()) r.add_term({mx, my}, cx * cy);
  return r;
}

// ---------------------------------------------------------------------------
// DoubleTensor3

void DoubleTensor3::add_term(const Key& k, const CycNum& c) {
  auto it = terms_.find(k);
  if (it == terms_.end())
    terms_.emplace(k, c);
  else
    it->second += c;
}

DoubleTensor3 DoubleTensor3::operator-(const DoubleTensor3& o) const {
  DoubleTensor3 r(*this);
  for (const auto& [k, c] : o.terms_) r.add_term(k, -c);
  return r;
}

DoubleTensor3 DoubleTensor3::operator*(const DoubleTensor3& o) const {
  DoubleTensor3 r(*alg_);
  std::vector<std::pair<Mono, CycNum>> b1, b2, b3;
  for (const auto& [kx, cx] : terms_) {
    for (const auto& [ky, cy] : o.terms_) {
      alg_->mono_mul(kx[0], ky[0], b1);
      if (b1.empty()) continue;
      alg_->mono_mul(kx[1], ky[1], b2);
      if (b2.empty()) continue;
      alg_->mono_mul(kx[2], ky[2], b3);
      if (b3.empty()) continue;
      CycNum cc = cx * cy;
      for (const auto& [m1, c1] : b1) {
        CycNum c01 = cc * c1;
        for (const auto& [m2, c2] : b2) {
          CycNum c012 = c01 * c2;
          for (const auto& [m3, c3] : b3) r.add_term({m1, m2, m3}, c012 * c3);
        }
      }
    }
  }
  return r;
}

bool DoubleTensor3::operator==(const DoubleTensor3& o) const {
  return (*this - o).is_zero();
}

bool DoubleTensor3::is_zero() const {
  for (const auto& [k, c] : terms_)
    if (!c.is_zero()) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Verification suites

CheckReport verify_hopf(const Algebra& alg) {
  CheckReport rep;
  rep.name = "hopf-axioms";
  for (const Mono& m : alg.all_monomials()) {
    DoubleElt x = alg.monomial(m[0], m[1], m[2], m[3]);
    DoubleTensor dx = x.coproduct();
    const std::string tag = mono_to_string(m);
    if (dx.coproduct_slot(0) != dx.coproduct_slot(1))
      rep.fail("coassociativity fails on " + tag);
    if (dx.counit_left() != x)
      rep.fail("left counit law fails on " + tag);
    if (dx.counit_right() != x)
      rep.fail("right counit law fails on " + tag);
    DoubleElt eps_unit = alg.scalar(x.counit());
    if (dx.mult_antipode_left() != eps_unit)
      rep.fail("left antipode law fails on " + tag);
    if (dx.mult_antipode_right() != eps_unit)
      rep.fail("right antipode law fails on " + tag);
    if (x.antipode().antipode() != alg.gen_K() * x * alg.k_power(-1))
      rep.fail("S^2 != K-conjugation on " + tag);
    ++rep.checked;
  }
  return rep;
}

CheckReport verify_rmatrix(const Algebra& alg) {
  CheckReport rep;
  rep.name = "r-matrix";
  const DoubleTensor& R = alg.r_matrix();

  if (R.counit_left() != alg.one())
    rep.fail("(eps x id) R != 1");
  if (R.counit_right() != alg.one())
    rep.fail("(id x eps) R != 1");
  rep.checked += 2;

  const DoubleElt gens[] = {alg.gen_E(), alg.gen_F(), alg.gen_K(), alg.gen_z()};
  const char* names[] = {"E", "F", "K", "z"};
  for (int g = 0; g < 4; ++g) {
    DoubleTensor dx = gens[g].coproduct();
    if (dx.swapped() * R != R * dx)
      rep.fail(std::string("Delta^op(x) R != R Delta(x) for x = ") + names[g]);
    ++rep.checked;
  }

  DoubleTensor3 r13 = R.embed13();
  if (R.coproduct_slot(0) != r13 * R.embed23())
    rep.fail("(Delta x id) R != R13 R23");
  ++rep.checked;
  if (R.coproduct_slot(1) != r13 * R.embed12())
    rep.fail("(id x Delta) R != R13 R12");
  ++rep.checked;
  return rep;
}

CheckReport verify_twist(const Algebra& alg, bool include_coproduct_identity) {
  CheckReport rep;
  rep.name = "twist";
  const DoubleElt& th = alg.twist();

  const DoubleElt gens[] = {alg.gen_E(), alg.gen_F(), alg.gen_K(), alg.gen_z()};
  const char* names[] = {"E", "F", "K", "z"};
  for (int g = 0; g < 4; ++g) {
    if (th * gens[g] != gens[g] * th)
      rep.fail(std::string("twist does not commute with ") + names[g]);
    ++rep.checked;
  }

  if (!(th.counit() == CycNum(alg.conductor(), 1)))
    rep.fail("eps(theta) != 1");
  ++rep.checked;

  if (th.antipode() != alg.gen_z() * th)
    rep.fail("S(theta) != z theta");
  ++rep.checked;

  if (include_coproduct_identity) {
    if (alg.monodromy() * th.coproduct() != DoubleTensor::outer(th, th))
      rep.fail("monodromy * Delta(theta) != theta x theta");
    ++rep.checked;
  }
  return rep;
}

CheckReport verify_one_dim_characters(const Algebra& alg) {
  CheckReport rep;
  rep.name = "one-dimensional-characters";
  const long d = alg.d();
  const CycNum zero(alg.conductor(), 0);
  const CycNum one(alg.conductor(), 1);

  // Character with K -> xi, z -> xi^2, E, F -> 0, evaluated on normal forms.
  auto value = [&](const DoubleElt& x, long q) {
    CycNum s(alg.conductor(), 0);
    for (const auto& [m, c] : x.terms())
      if (m[2] == 0 && m[3] == 0)
        s += c * alg.zeta_pow(q * (2 * m[0] + m[1]));
    return s;
  };

  for (long q = 0; q < d; ++q) {
    const CycNum xi = alg.zeta_pow(q);
    const CycNum xi2 = alg.zeta_pow(2 * q);
    // Well-definedness on every defining relation, with both sides evaluated
    // through multiplicativity of the character.
    if (!(xi.pow(d) == one)) rep.fail("xi^d != 1");
    if (!(xi2.pow(d) == one)) rep.fail("(xi^2)^d != 1");
    // E F - F E = K - z K^{-1}:  0 - 0 = xi - xi^2 xi^{-1}
    if (!(xi - xi2 * xi.inverse() == zero))
      rep.fail("commutator relation is not respected");
    rep.checked += 3;
    // Multiplicativity against the normal-form product on generator pairs.
    const DoubleElt gens[] = {alg.gen_E(), alg.gen_F(), alg.gen_K(), alg.gen_z()};
    for (const DoubleElt& x : gens) {
      for (const DoubleElt& y : gens) {
        if (!(value(x * y, q) == value(x, q) * value(y, q)))
          rep.fail("character not multiplicative on a generator pair");
        ++rep.checked;
      }
    }
  }
  return rep;
}

}  // namespace taft
