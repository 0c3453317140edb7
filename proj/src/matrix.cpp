#include "taft/matrix.hpp"

#include <stdexcept>

namespace taft {

CycMatrix::CycMatrix(long rows, long cols, long conductor)
    : rows_(rows), cols_(cols), conductor_(conductor) {
  if (rows < 0 || cols < 0)
    throw std::invalid_argument("CycMatrix: negative dimension");
  data_.assign(static_cast<size_t>(rows) * static_cast<size_t>(cols),
               CycNum(conductor, 0));
}

CycMatrix CycMatrix::identity(long n, long conductor) {
  CycMatrix m(n, n, conductor);
  for (long i = 0; i < n; ++i) m.at(i, i) = CycNum(conductor, 1);
  return m;
}

CycMatrix CycMatrix::operator+(const CycMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("CycMatrix: shape mismatch in +");
  CycMatrix r = *this;
  for (size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
  return r;
}

CycMatrix CycMatrix::operator-(const CycMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("CycMatrix: shape mismatch in -");
  CycMatrix r = *this;
  for (size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
  return r;
}

CycMatrix CycMatrix::operator*(const CycMatrix& o) const {
  if (cols_ != o.rows_)
    throw std::invalid_argument("CycMatrix: shape mismatch in *");
  CycMatrix r(rows_, o.cols_, conductor_);
  for (long i = 0; i < rows_; ++i) {
    for (long k = 0; k < cols_; ++k) {
      const CycNum& a = at(i, k);
      if (a.raw_is_zero()) continue;
      for (long j = 0; j < o.cols_; ++j) {
        const CycNum& b = o.at(k, j);
        if (b.raw_is_zero()) continue;
        r.at(i, j) += a * b;
      }
    }
  }
  return r;
}

void CycMatrix::add_scaled(const CycMatrix& o, const CycNum& c) {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("CycMatrix: shape mismatch in add_scaled");
  for (size_t i = 0; i < data_.size(); ++i) {
    if (!o.data_[i].raw_is_zero()) data_[i] += o.data_[i] * c;
  }
}

CycMatrix CycMatrix::scaled(const CycNum& c) const {
  CycMatrix r = *this;
  for (auto& x : r.data_) x = x * c;
  return r;
}

bool CycMatrix::operator==(const CycMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (size_t i = 0; i < data_.size(); ++i)
    if (!(data_[i] == o.data_[i])) return false;
  return true;
}

bool CycMatrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

CycMatrix CycMatrix::transposed() const {
  CycMatrix r(cols_, rows_, conductor_);
  for (long i = 0; i < rows_; ++i)
    for (long j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

CycMatrix CycMatrix::conjugated() const {
  CycMatrix r = *this;
  for (auto& x : r.data_) x = x.conj();
  return r;
}

CycMatrix CycMatrix::galois_image(long k) const {
  CycMatrix r = *this;
  for (auto& x : r.data_) x = x.galois(k);
  return r;
}

CycMatrix CycMatrix::kron(const CycMatrix& o) const {
  CycMatrix r(rows_ * o.rows_, cols_ * o.cols_, conductor_);
  for (long i = 0; i < rows_; ++i) {
    for (long j = 0; j < cols_; ++j) {
      const CycNum& a = at(i, j);
      if (a.raw_is_zero()) continue;
      for (long p = 0; p < o.rows_; ++p)
        for (long q = 0; q < o.cols_; ++q) {
          const CycNum& b = o.at(p, q);
          if (b.raw_is_zero()) continue;
          r.at(i * o.rows_ + p, j * o.cols_ + q) = a * b;
        }
    }
  }
  return r;
}

CycMatrix CycMatrix::power(long n) const {
  if (rows_ != cols_) throw std::invalid_argument("CycMatrix: power of non-square");
  if (n < 0) throw std::invalid_argument("CycMatrix: negative power");
  CycMatrix r = identity(rows_, conductor_);
  CycMatrix base = *this;
  while (n > 0) {
    if (n & 1) r = r * base;
    base = base * base;
    n >>= 1;
  }
  return r;
}

CycNum CycMatrix::trace() const {
  CycNum s(conductor_, 0);
  for (long i = 0; i < rows_ && i < cols_; ++i) s += at(i, i);
  return s;
}

std::optional<CycNum> CycMatrix::scalar_value() const {
  if (rows_ != cols_ || rows_ == 0) return std::nullopt;
  const CycNum& c = at(0, 0);
  for (long i = 0; i < rows_; ++i) {
    for (long j = 0; j < cols_; ++j) {
      if (i == j) {
        if (!(at(i, j) == c)) return std::nullopt;
      } else if (!at(i, j).is_zero()) {
        return std::nullopt;
      }
    }
  }
  return c.reduced();
}

CycMatrix CycMatrix::reduced() const {
  CycMatrix r = *this;
  for (auto& x : r.data_) x = x.reduced();
  return r;
}

Rref row_reduce(const CycMatrix& m) {
  Rref out;
  out.mat = m;
  CycMatrix& a = out.mat;
  const long rows = a.rows(), cols = a.cols();
  long r = 0;
  for (long c = 0; c < cols && r < rows; ++c) {
    long pivot = -1;
    for (long i = r; i < rows; ++i) {
      if (!a.at(i, c).is_zero()) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != r)
      for (long j = 0; j < cols; ++j) std::swap(a.at(pivot, j), a.at(r, j));
    CycNum inv = a.at(r, c).inverse();
    for (long j = c; j < cols; ++j) a.at(r, j) = (a.at(r, j) * inv).reduced();
    for (long i = 0; i < rows; ++i) {
      if (i == r || a.at(i, c).is_zero()) continue;
      CycNum f = a.at(i, c);
      for (long j = c; j < cols; ++j)
        a.at(i, j) = (a.at(i, j) - f * a.at(r, j)).reduced();
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.rank = r;
  return out;
}

std::vector<std::vector<CycNum>> nullspace(const CycMatrix& m) {
  Rref rr = row_reduce(m);
  const long cols = m.cols();
  std::vector<bool> is_pivot(static_cast<size_t>(cols), false);
  for (long c : rr.pivot_cols) is_pivot[static_cast<size_t>(c)] = true;

  std::vector<std::vector<CycNum>> basis;
  for (long fc = 0; fc < cols; ++fc) {
    if (is_pivot[static_cast<size_t>(fc)]) continue;
    std::vector<CycNum> v(static_cast<size_t>(cols), CycNum(m.conductor(), 0));
    v[static_cast<size_t>(fc)] = CycNum(m.conductor(), 1);
    for (size_t pi = 0; pi < rr.pivot_cols.size(); ++pi) {
      long pc = rr.pivot_cols[pi];
      v[static_cast<size_t>(pc)] = -rr.mat.at(static_cast<long>(pi), fc);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

CycNum determinant(const CycMatrix& m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("determinant: non-square matrix");
  const long n = m.rows();
  CycMatrix a = m;
  CycNum det(m.conductor(), 1);
  for (long c = 0; c < n; ++c) {
    long pivot = -1;
    for (long i = c; i < n; ++i) {
      if (!a.at(i, c).is_zero()) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) return CycNum(m.conductor(), 0);
    if (pivot != c) {
      for (long j = c; j < n; ++j) std::swap(a.at(pivot, j), a.at(c, j));
      det = -det;
    }
    const CycNum& pv = a.at(c, c);
    det = (det * pv).reduced();
    CycNum inv = pv.inverse();
    for (long i = c + 1; i < n; ++i) {
      if (a.at(i, c).is_zero()) continue;
      CycNum f = (a.at(i, c) * inv).reduced();
      for (long j = c; j < n; ++j)
        a.at(i, j) = (a.at(i, j) - f * a.at(c, j)).reduced();
    }
  }
  return det.reduced();
}

}  // namespace taft
