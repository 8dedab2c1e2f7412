#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace siegel {

using Integer = boost::multiprecision::cpp_int;

/// Non-negative residue of `x` modulo `n` (n > 0).
long residue(const Integer& x, long n);

class ResidueMatrix;

/// Dense integer matrix with arbitrary-precision entries, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);
  explicit IntMatrix(const std::vector<std::vector<long long>>& rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix zero(std::size_t rows, std::size_t cols) { return IntMatrix(rows, cols); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntMatrix transpose() const;
  IntMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const IntMatrix& m);
  std::vector<Integer> diagonal() const;

  IntMatrix operator-() const;
  IntMatrix& operator+=(const IntMatrix& o);
  IntMatrix& operator-=(const IntMatrix& o);
  IntMatrix& operator*=(const Integer& s);

  friend IntMatrix operator+(IntMatrix a, const IntMatrix& b) { return a += b; }
  friend IntMatrix operator-(IntMatrix a, const IntMatrix& b) { return a -= b; }
  friend IntMatrix operator*(IntMatrix a, const Integer& s) { return a *= s; }
  friend IntMatrix operator*(const Integer& s, IntMatrix a) { return a *= s; }
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend std::vector<Integer> operator*(const IntMatrix& a, const std::vector<Integer>& v);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b);

  bool is_zero() const;
  /// Every entry divisible by `n`.
  bool divisible_by(long n) const;
  /// Exact division of every entry; throws std::domain_error if some entry is not divisible.
  IntMatrix divided_by(long n) const;
  /// Largest absolute value of an entry.
  Integer max_abs() const;
  ResidueMatrix reduce(long modulus) const;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Square matrix over Z/nZ with entries stored as residues in [0, n).
class ResidueMatrix {
 public:
  ResidueMatrix() = default;
  ResidueMatrix(std::size_t n, long modulus);

  static ResidueMatrix identity(std::size_t n, long modulus);

  std::size_t size() const { return n_; }
  long modulus() const { return modulus_; }

  long operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, long v);

  ResidueMatrix transpose() const;
  /// Reduction to a divisor of the current modulus.
  ResidueMatrix reduce(long modulus) const;
  /// Lift to an integer matrix with entries in [0, modulus).
  IntMatrix lift() const;

  friend ResidueMatrix operator*(const ResidueMatrix& a, const ResidueMatrix& b);
  friend bool operator==(const ResidueMatrix& a, const ResidueMatrix& b) = default;

  std::uint64_t hash() const;
  const std::vector<std::int16_t>& entries() const { return data_; }

 private:
  std::size_t n_ = 0;
  long modulus_ = 1;
  std::vector<std::int16_t> data_;
};

struct ResidueMatrixHash {
  std::size_t operator()(const ResidueMatrix& m) const { return static_cast<std::size_t>(m.hash()); }
};

}  // namespace siegel
