#include "siegel/symplectic.hpp"

#include <string>

namespace siegel {

namespace {

void require_even_square(std::size_t rows, std::size_t cols) {
  if (rows != cols || rows == 0 || rows % 2 != 0)
    throw DimensionError("symplectic check needs a 2g x 2g matrix, got " + std::to_string(rows) + "x" +
                         std::to_string(cols));
}

bool is_symmetric(const IntMatrix& s) { return s.rows() == s.cols() && s == s.transpose(); }

}  // namespace

IntMatrix symplectic_form(std::size_t g) {
  IntMatrix j(2 * g, 2 * g);
  for (std::size_t i = 0; i < g; ++i) {
    j(i, g + i) = 1;
    j(g + i, i) = -1;
  }
  return j;
}

bool is_symplectic(const IntMatrix& m) {
  require_even_square(m.rows(), m.cols());
  const IntMatrix j = symplectic_form(m.rows() / 2);
  return m.transpose() * j * m == j;
}

bool is_symplectic(const ResidueMatrix& m) {
  require_even_square(m.size(), m.size());
  const std::size_t g = m.size() / 2;
  const ResidueMatrix j = symplectic_form(g).reduce(m.modulus());
  return m.transpose() * j * m == j;
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
  const Integer det = determinant(m);
  if (det != 1 && det != -1) throw std::domain_error("matrix is not unimodular");
  const std::size_t n = m.rows();
  IntMatrix adj(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      IntMatrix minor(n - 1, n - 1);
      for (std::size_t r = 0, rr = 0; r < n; ++r) {
        if (r == i) continue;
        for (std::size_t c = 0, cc = 0; c < n; ++c) {
          if (c == j) continue;
          minor(rr, cc++) = m(r, c);
        }
        ++rr;
      }
      Integer cof = determinant(minor);
      if ((i + j) % 2) cof = -cof;
      adj(j, i) = cof;
    }
  return adj * det;
}

SymplecticMatrix::SymplecticMatrix(IntMatrix entries) : g_(entries.rows() / 2), m_(std::move(entries)) {
  if (!is_symplectic(m_)) throw NotSymplecticError("matrix is not symplectic: " + m_.to_string());
}

SymplecticMatrix::SymplecticMatrix(IntMatrix entries, Unchecked) : g_(entries.rows() / 2), m_(std::move(entries)) {}

SymplecticMatrix SymplecticMatrix::identity(std::size_t g) {
  return SymplecticMatrix(IntMatrix::identity(2 * g), Unchecked{});
}

SymplecticMatrix SymplecticMatrix::standard_j(std::size_t g) { return SymplecticMatrix(symplectic_form(g), Unchecked{}); }

SymplecticMatrix SymplecticMatrix::from_blocks(const IntMatrix& a, const IntMatrix& b, const IntMatrix& c,
                                               const IntMatrix& d) {
  const std::size_t g = a.rows();
  for (const IntMatrix* x : {&a, &b, &c, &d})
    if (x->rows() != g || x->cols() != g) throw DimensionError("symplectic blocks must all be g x g");
  IntMatrix m(2 * g, 2 * g);
  m.set_block(0, 0, a);
  m.set_block(0, g, b);
  m.set_block(g, 0, c);
  m.set_block(g, g, d);
  return SymplecticMatrix(std::move(m));
}

SymplecticMatrix SymplecticMatrix::translation(const IntMatrix& s) {
  if (!is_symmetric(s)) throw NotSymplecticError("translation needs a symmetric matrix");
  const std::size_t g = s.rows();
  IntMatrix m = IntMatrix::identity(2 * g);
  m.set_block(0, g, s);
  return SymplecticMatrix(std::move(m), Unchecked{});
}

SymplecticMatrix SymplecticMatrix::lower_translation(const IntMatrix& s) {
  if (!is_symmetric(s)) throw NotSymplecticError("translation needs a symmetric matrix");
  const std::size_t g = s.rows();
  IntMatrix m = IntMatrix::identity(2 * g);
  m.set_block(g, 0, s);
  return SymplecticMatrix(std::move(m), Unchecked{});
}

SymplecticMatrix SymplecticMatrix::block_diagonal(const IntMatrix& a) {
  const std::size_t g = a.rows();
  IntMatrix m(2 * g, 2 * g);
  m.set_block(0, 0, a);
  m.set_block(g, g, unimodular_inverse(a).transpose());
  return SymplecticMatrix(std::move(m), Unchecked{});
}

SymplecticMatrix SymplecticMatrix::inverse() const {
  IntMatrix m(2 * g_, 2 * g_);
  m.set_block(0, 0, d().transpose());
  m.set_block(0, g_, -b().transpose());
  m.set_block(g_, 0, -c().transpose());
  m.set_block(g_, g_, a().transpose());
  return SymplecticMatrix(std::move(m), Unchecked{});
}

SymplecticMatrix SymplecticMatrix::transpose() const { return SymplecticMatrix(m_.transpose(), Unchecked{}); }

SymplecticMatrix operator*(const SymplecticMatrix& x, const SymplecticMatrix& y) {
  if (x.g_ != y.g_) throw DimensionError("genus mismatch in symplectic product");
  return SymplecticMatrix(x.m_ * y.m_, SymplecticMatrix::Unchecked{});
}

SymplecticMatrix fricke_conjugate(const SymplecticMatrix& m) {
  const IntMatrix c = m.c();
  if (!c.divisible_by(2)) throw NotConjugableError("J2-conjugate is not integral: C has an odd entry");
  return SymplecticMatrix::from_blocks(m.d(), -c.divided_by(2), m.b() * Integer(-2), m.a());
}

ResidueMatrix symplectic_inverse(const ResidueMatrix& m) {
  const std::size_t n = m.size();
  if (n % 2) throw DimensionError("symplectic inverse of odd-size matrix");
  const std::size_t g = n / 2;
  ResidueMatrix r(n, m.modulus());
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = 0; j < g; ++j) {
      r.set(i, j, m(g + j, g + i));        // ᵗD
      r.set(i, g + j, -m(j, g + i));       // -ᵗB
      r.set(g + i, j, -m(g + j, i));       // -ᵗC
      r.set(g + i, g + j, m(j, i));        // ᵗA
    }
  return r;
}

}  // namespace siegel
