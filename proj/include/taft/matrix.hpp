#pragma once

#include <optional>
#include <vector>

#include "taft/cyclotomic.hpp"

namespace taft {

// Dense matrix over the cyclotomic field Q(zeta_N).  All entries share the
// matrix conductor; arithmetic is exact.
class CycMatrix {
 public:
  CycMatrix() : rows_(0), cols_(0), conductor_(0) {}
  CycMatrix(long rows, long cols, long conductor);
  static CycMatrix identity(long n, long conductor);

  long rows() const { return rows_; }
  long cols() const { return cols_; }
  long conductor() const { return conductor_; }

  CycNum& at(long r, long c) { return data_[static_cast<size_t>(r * cols_ + c)]; }
  const CycNum& at(long r, long c) const {
    return data_[static_cast<size_t>(r * cols_ + c)];
  }

  CycMatrix operator+(const CycMatrix& o) const;
  CycMatrix operator-(const CycMatrix& o) const;
  CycMatrix operator*(const CycMatrix& o) const;
  void add_scaled(const CycMatrix& o, const CycNum& c);  // *this += c * o
  CycMatrix scaled(const CycNum& c) const;
  bool operator==(const CycMatrix& o) const;
  bool operator!=(const CycMatrix& o) const { return !(*this == o); }
  bool is_zero() const;

  CycMatrix transposed() const;
  CycMatrix conjugated() const;  // entrywise complex conjugation
  CycMatrix galois_image(long k) const;  // entrywise Galois action
  CycMatrix kron(const CycMatrix& o) const;
  CycMatrix power(long n) const;  // n >= 0
  CycNum trace() const;

  // The scalar c with *this == c * identity, if the matrix is square and
  // scalar; otherwise nullopt.
  std::optional<CycNum> scalar_value() const;

  CycMatrix reduced() const;  // entrywise canonical form

 private:
  long rows_, cols_, conductor_;
  std::vector<CycNum> data_;
};

// Reduced row-echelon form data of an exact Gaussian elimination.
struct Rref {
  CycMatrix mat;
  std::vector<long> pivot_cols;
  long rank = 0;
};

Rref row_reduce(const CycMatrix& m);

// Basis of the right nullspace {v : m v = 0}, as column vectors.
std::vector<std::vector<CycNum>> nullspace(const CycMatrix& m);

CycNum determinant(const CycMatrix& m);

}  // namespace taft
