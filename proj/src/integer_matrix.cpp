#include "siegel/integer_matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace siegel {

long residue(const Integer& x, long n) {
  Integer r = x % n;
  if (r < 0) r += n;
  return r.convert_to<long>();
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("IntMatrix: ragged row list");
    for (long long v : r) data_.emplace_back(v);
  }
}

IntMatrix::IntMatrix(const std::vector<std::vector<long long>>& rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.front().size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("IntMatrix: ragged row list");
    for (long long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw std::out_of_range("IntMatrix::block");
  IntMatrix b(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

void IntMatrix::set_block(std::size_t r0, std::size_t c0, const IntMatrix& m) {
  if (r0 + m.rows_ > rows_ || c0 + m.cols_ > cols_) throw std::out_of_range("IntMatrix::set_block");
  for (std::size_t i = 0; i < m.rows_; ++i)
    for (std::size_t j = 0; j < m.cols_; ++j) (*this)(r0 + i, c0 + j) = m(i, j);
}

std::vector<Integer> IntMatrix::diagonal() const {
  std::vector<Integer> d;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) d.push_back((*this)(i, i));
  return d;
}

IntMatrix IntMatrix::operator-() const {
  IntMatrix r = *this;
  for (auto& x : r.data_) x = -x;
  return r;
}

IntMatrix& IntMatrix::operator+=(const IntMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("IntMatrix: shape mismatch in +");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

IntMatrix& IntMatrix::operator-=(const IntMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("IntMatrix: shape mismatch in -");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

IntMatrix& IntMatrix::operator*=(const Integer& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("IntMatrix: shape mismatch in *");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

std::vector<Integer> operator*(const IntMatrix& a, const std::vector<Integer>& v) {
  if (a.cols_ != v.size()) throw std::invalid_argument("IntMatrix: shape mismatch in matrix-vector *");
  std::vector<Integer> r(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) r[i] += a(i, k) * v[k];
  return r;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

bool IntMatrix::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

bool IntMatrix::divisible_by(long n) const {
  for (const auto& x : data_)
    if (x % n != 0) return false;
  return true;
}

IntMatrix IntMatrix::divided_by(long n) const {
  if (!divisible_by(n)) throw std::domain_error("IntMatrix: entries not divisible");
  IntMatrix r = *this;
  for (auto& x : r.data_) x /= n;
  return r;
}

Integer IntMatrix::max_abs() const {
  Integer m = 0;
  for (const auto& x : data_) m = std::max(m, Integer(abs(x)));
  return m;
}

ResidueMatrix IntMatrix::reduce(long modulus) const {
  if (rows_ != cols_) throw std::invalid_argument("IntMatrix::reduce: matrix not square");
  ResidueMatrix r(rows_, modulus);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.set(i, j, residue((*this)(i, j), modulus));
  return r;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

ResidueMatrix::ResidueMatrix(std::size_t n, long modulus) : n_(n), modulus_(modulus), data_(n * n, 0) {
  if (modulus < 1 || modulus > 16384) throw std::invalid_argument("ResidueMatrix: unsupported modulus");
}

ResidueMatrix ResidueMatrix::identity(std::size_t n, long modulus) {
  ResidueMatrix m(n, modulus);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

void ResidueMatrix::set(std::size_t i, std::size_t j, long v) {
  v %= modulus_;
  if (v < 0) v += modulus_;
  data_[i * n_ + j] = static_cast<std::int16_t>(v);
}

ResidueMatrix ResidueMatrix::transpose() const {
  ResidueMatrix t(n_, modulus_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) t.set(j, i, (*this)(i, j));
  return t;
}

ResidueMatrix ResidueMatrix::reduce(long modulus) const {
  if (modulus_ % modulus != 0) throw std::invalid_argument("ResidueMatrix::reduce: not a divisor of the modulus");
  ResidueMatrix r(n_, modulus);
  for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = static_cast<std::int16_t>(data_[k] % modulus);
  return r;
}

IntMatrix ResidueMatrix::lift() const {
  IntMatrix m(n_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) m(i, j) = (*this)(i, j);
  return m;
}

ResidueMatrix operator*(const ResidueMatrix& a, const ResidueMatrix& b) {
  if (a.n_ != b.n_ || a.modulus_ != b.modulus_) throw std::invalid_argument("ResidueMatrix: incompatible operands");
  ResidueMatrix c(a.n_, a.modulus_);
  for (std::size_t i = 0; i < a.n_; ++i)
    for (std::size_t j = 0; j < a.n_; ++j) {
      long s = 0;
      for (std::size_t k = 0; k < a.n_; ++k) s += long(a(i, k)) * b(k, j);
      c.set(i, j, s);
    }
  return c;
}

std::uint64_t ResidueMatrix::hash() const {
  // FNV-1a over the residues.
  std::uint64_t h = 1469598103934665603ULL;
  for (auto v : data_) {
    h ^= static_cast<std::uint64_t>(static_cast<std::uint16_t>(v));
    h *= 1099511628211ULL;
  }
  return h ^ static_cast<std::uint64_t>(modulus_);
}

}  // namespace siegel
