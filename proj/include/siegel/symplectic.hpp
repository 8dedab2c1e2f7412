#pragma once

#include <stdexcept>

#include "siegel/integer_matrix.hpp"

namespace siegel {

/// Raised for malformed matrix shapes (odd or non-square dimension).
struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Raised when a matrix fails ᵗMJM = J.
struct NotSymplecticError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Raised when J₂-conjugation leaves the integral group (odd entry in C).
/// An operation was applied outside the subgroup on which it is defined.
struct PreconditionError : std::domain_error {
  using std::domain_error::domain_error;
};

struct NotConjugableError : std::domain_error {
  using std::domain_error::domain_error;
};

/// The standard symplectic form [[0, 1_g], [-1_g, 0]].
IntMatrix symplectic_form(std::size_t g);

/// ᵗMJM == J exactly. Throws DimensionError unless M is square of even size.
bool is_symplectic(const IntMatrix& m);
bool is_symplectic(const ResidueMatrix& m);

/// Determinant by fraction-free elimination.
Integer determinant(const IntMatrix& m);
/// Inverse of a matrix with determinant ±1; throws std::domain_error otherwise.
IntMatrix unimodular_inverse(const IntMatrix& m);

/// Element of Sp(2g, Z). The invariant ᵗγJγ = J is checked on construction.
class SymplecticMatrix {
 public:
  /// Validating constructor.
  explicit SymplecticMatrix(IntMatrix entries);

  static SymplecticMatrix identity(std::size_t g);
  /// The form J itself.
  static SymplecticMatrix standard_j(std::size_t g);
  static SymplecticMatrix from_blocks(const IntMatrix& a, const IntMatrix& b, const IntMatrix& c, const IntMatrix& d);
  /// γ_S = [[1, S], [0, 1]] for symmetric S.
  static SymplecticMatrix translation(const IntMatrix& s);
  /// ᵗγ_S = [[1, 0], [S, 1]] for symmetric S.
  static SymplecticMatrix lower_translation(const IntMatrix& s);
  /// [[A, 0], [0, ᵗA⁻¹]] for unimodular A.
  static SymplecticMatrix block_diagonal(const IntMatrix& a);

  std::size_t genus() const { return g_; }
  const IntMatrix& entries() const { return m_; }

  IntMatrix a() const { return m_.block(0, 0, g_, g_); }
  IntMatrix b() const { return m_.block(0, g_, g_, g_); }
  IntMatrix c() const { return m_.block(g_, 0, g_, g_); }
  IntMatrix d() const { return m_.block(g_, g_, g_, g_); }

  /// [[ᵗD, -ᵗB], [-ᵗC, ᵗA]].
  SymplecticMatrix inverse() const;
  SymplecticMatrix transpose() const;
  ResidueMatrix reduce(long modulus) const { return m_.reduce(modulus); }

  friend SymplecticMatrix operator*(const SymplecticMatrix& x, const SymplecticMatrix& y);
  friend bool operator==(const SymplecticMatrix& x, const SymplecticMatrix& y) { return x.m_ == y.m_; }

 private:
  struct Unchecked {};
  SymplecticMatrix(IntMatrix entries, Unchecked);

  std::size_t g_ = 0;
  IntMatrix m_;
};

/// γ^{J₂} = J₂γJ₂⁻¹ = [[D, -C/2], [-2B, A]]; throws NotConjugableError if C has an odd entry.
SymplecticMatrix fricke_conjugate(const SymplecticMatrix& m);

/// The inverse of a symplectic residue matrix, by the block formula.
ResidueMatrix symplectic_inverse(const ResidueMatrix& m);

}  // namespace siegel
