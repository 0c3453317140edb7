#pragma once

#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "taft/cyclotomic.hpp"

namespace taft {

// Basis monomial z^a K^b F^i E^j in the fixed normal order; exponents lie in
// {0, ..., d-1} (K^d = z^d = 1, E^d = F^d = 0).
using Mono = std::array<int, 4>;

class DoubleElt;
class DoubleTensor;
class DoubleTensor3;

// Immutable context for one choice of (d, e): the quantum parameter
// zeta = zeta_N^{12e}, the rewrite table E^j F^i -> normal form that drives
// multiplication, and the cached structural elements (R, monodromy, twist).
class Algebra {
 public:
  static const Algebra& get(long d, long e = 1);

  long d() const { return d_; }
  long e() const { return e_; }
  long conductor() const { return N_; }
  const CycNum& zeta() const { return zeta_pows_[1 % static_cast<size_t>(d_)]; }
  const CycNum& zeta_pow(long t) const;   // zeta^t, any integer t
  const CycNum& qfact(long n) const;      // (n)!_zeta, 0 <= n <= d
  const CycNum& qfact_inv(long n) const;  // 1/(n)!_zeta, 0 <= n <= d-1

  DoubleElt zero() const;
  DoubleElt one() const;
  DoubleElt gen_E() const;
  DoubleElt gen_F() const;
  DoubleElt gen_K() const;
  DoubleElt gen_z() const;
  DoubleElt monomial(int a, int b, int i, int j) const;
  DoubleElt monomial(int a, int b, int i, int j, const CycNum& c) const;
  DoubleElt k_power(long t) const;  // K^t, any integer t
  DoubleElt z_power(long t) const;
  DoubleElt scalar(const CycNum& c) const;

  std::vector<Mono> all_monomials() const;  // the d^4 basis monomials

  // E^j F^i rewritten into the normal form (sum of monomials).
  const std::vector<std::pair<Mono, CycNum>>& normal_ef(int j, int i) const;

  // Product of two basis monomials; appends (monomial, coefficient) pairs.
  void mono_mul(const Mono& x, const Mono& y,
                std::vector<std::pair<Mono, CycNum>>& out) const;

  // Structural elements (built on first use, then cached).
  const DoubleTensor& r_matrix() const;
  const DoubleTensor& monodromy() const;  // tau(R) * R
  const DoubleElt& twist() const;         // theta

  // Coproduct powers Delta(F)^i * Delta(E)^j (cached building block).
  const DoubleTensor& delta_fe(int i, int j) const;

  ~Algebra();

 private:
  explicit Algebra(long d, long e);
  Algebra(const Algebra&) = delete;
  void ensure_r_nolock() const;
  const DoubleTensor& delta_fe_nolock(int i, int j) const;

  long d_, e_, N_;
  std::vector<CycNum> zeta_pows_;
  std::vector<CycNum> qfact_;
  std::vector<CycNum> qfact_inv_;
  std::vector<std::vector<std::vector<std::pair<Mono, CycNum>>>> normal_ef_;
  std::vector<std::pair<Mono, CycNum>> s_e_pow_, s_f_pow_;  // S(E)^j, S(F)^i

  mutable std::mutex cache_mu_;
  mutable std::unique_ptr<DoubleTensor> r_cache_;
  mutable std::unique_ptr<DoubleTensor> monodromy_cache_;
  mutable std::unique_ptr<DoubleElt> twist_cache_;
  mutable std::map<std::pair<int, int>, DoubleTensor> delta_fe_cache_;

  friend class DoubleElt;
};

// Sparse element of D(B) in the PBW normal form.
class DoubleElt {
 public:
  explicit DoubleElt(const Algebra& alg) : alg_(&alg) {}

  const Algebra& algebra() const { return *alg_; }
  const std::map<Mono, CycNum>& terms() const { return terms_; }

  void add_term(const Mono& m, const CycNum& c);

  DoubleElt operator+(const DoubleElt& o) const;
  DoubleElt operator-(const DoubleElt& o) const;
  DoubleElt operator-() const;
  DoubleElt operator*(const DoubleElt& o) const;
  DoubleElt scaled(const CycNum& c) const;
  bool operator==(const DoubleElt& o) const;
  bool operator!=(const DoubleElt& o) const { return !(*this == o); }

  bool is_zero() const;
  DoubleElt pruned() const;  // canonical sparse form: drop zero coefficients

  CycNum counit() const;
  DoubleElt antipode() const;
  DoubleTensor coproduct() const;
  bool is_group_like() const;

  std::string to_string() const;

 private:
  const Algebra* alg_;
  std::map<Mono, CycNum> terms_;
};

// Sparse element of D(B) (x) D(B).
class DoubleTensor {
 public:
  using Key = std::array<Mono, 2>;

  explicit DoubleTensor(const Algebra& alg) : alg_(&alg) {}

  const Algebra& algebra() const { return *alg_; }
  const std::map<Key, CycNum>& terms() const { return terms_; }

  void add_term(const Key& k, const CycNum& c);

  DoubleTensor operator+(const DoubleTensor& o) const;
  DoubleTensor operator-(const DoubleTensor& o) const;
  DoubleTensor operator*(const DoubleTensor& o) const;
  DoubleTensor scaled(const CycNum& c) const;
  bool operator==(const DoubleTensor& o) const;
  bool operator!=(const DoubleTensor& o) const { return !(*this == o); }
  bool is_zero() const;
  DoubleTensor pruned() const;

  DoubleTensor swapped() const;  // tau: a (x) b -> b (x) a

  // Contractions with the counit on one slot.
  DoubleElt counit_left() const;   // (eps (x) id)
  DoubleElt counit_right() const;  // (id (x) eps)

  // m o (S (x) id) and m o (id (x) S): multiply the slots after applying the
  // antipode to one of them.
  DoubleElt mult_antipode_left() const;
  DoubleElt mult_antipode_right() const;

  // Apply the coproduct to one slot, producing a three-fold tensor.
  DoubleTensor3 coproduct_slot(int slot) const;

  // Embed into the three-fold tensor with the identity in the missing slot:
  // positions name which slots of the result receive this element's slots.
  DoubleTensor3 embed13() const;
  DoubleTensor3 embed23() const;
  DoubleTensor3 embed12() const;

  static DoubleTensor outer(const DoubleElt& x, const DoubleElt& y);

 private:
  const Algebra* alg_;
  std::map<Key, CycNum> terms_;
};

// Sparse element of D(B) (x) D(B) (x) D(B).
class DoubleTensor3 {
 public:
  using Key = std::array<Mono, 3>;

  explicit DoubleTensor3(const Algebra& alg) : alg_(&alg) {}

  const Algebra& algebra() const { return *alg_; }
  const std::map<Key, CycNum>& terms() const { return terms_; }

  void add_term(const Key& k, const CycNum& c);

  DoubleTensor3 operator-(const DoubleTensor3& o) const;
  DoubleTensor3 operator*(const DoubleTensor3& o) const;
  bool operator==(const DoubleTensor3& o) const;
  bool operator!=(const DoubleTensor3& o) const { return !(*this == o); }
  bool is_zero() const;

 private:
  const Algebra* alg_;
  std::map<Key, CycNum> terms_;
};

// Aggregated pass/fail result of a family of exact checks.
struct CheckReport {
  std::string name;
  bool ok = true;
  long checked = 0;
  std::vector<std::string> failures;
  void fail(const std::string& what) {
    ok = false;
    if (failures.size() < 16) failures.push_back(what);
  }
};

// Hopf axioms on every basis monomial: coassociativity, counit laws,
// antipode law, and S^2 = conjugation by K.
CheckReport verify_hopf(const Algebra& alg);

// Quasi-triangularity of R and its counit laws.
CheckReport verify_rmatrix(const Algebra& alg);

// Twist identities: centrality, counit, S(theta) = z*theta, and
// monodromy * Delta(theta) = theta (x) theta.
CheckReport verify_twist(const Algebra& alg, bool include_coproduct_identity = true);

// The one-dimensional characters K -> xi, z -> xi^2 (xi in mu_d) respect all
// defining relations.
CheckReport verify_one_dim_characters(const Algebra& alg);

}  // namespace taft
