#pragma once

#include <complex>
#include <stdexcept>

#include <Eigen/Dense>

#include "siegel/rng.hpp"
#include "siegel/symplectic.hpp"

namespace siegel {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using RMatrix = Eigen::MatrixXd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

struct NotInUpperHalfSpaceError : std::domain_error {
  using std::domain_error::domain_error;
};

/// A point τ of the Siegel upper half space: symmetric with positive-definite imaginary part.
class SiegelPoint {
 public:
  /// Requires exact symmetry and Im τ > 0 (Cholesky must succeed).
  explicit SiegelPoint(CMatrix tau);
  /// Symmetrizes (τ + ᵗτ)/2 first; for results of floating-point Möbius actions.
  static SiegelPoint symmetrized(const CMatrix& tau);
  /// i · 1_g.
  static SiegelPoint imaginary_identity(std::size_t g);

  std::size_t genus() const { return static_cast<std::size_t>(tau_.rows()); }
  const CMatrix& tau() const { return tau_; }
  RMatrix real_part() const { return tau_.real(); }
  RMatrix imag_part() const { return tau_.imag(); }
  double min_imag_eigenvalue() const;

  SiegelPoint scaled(double s) const { return SiegelPoint(tau_ * s); }
  /// τ + S for an integral symmetric S.
  SiegelPoint translated(const IntMatrix& s) const;

 private:
  CMatrix tau_;
};

/// X entries uniform in [-1,1] (upper triangle, row-major, mirrored), then
/// Y = L·ᵗL + ½·1 with L entries uniform in [-1,1] (row-major).
SiegelPoint random_point(std::size_t g, Rng& rng);

CMatrix to_complex(const IntMatrix& m);

/// Cτ + D.
CMatrix automorphy_matrix(const SymplecticMatrix& gamma, const SiegelPoint& tau);
/// γ·τ = (Aτ + B)(Cτ + D)⁻¹.
SiegelPoint act(const SymplecticMatrix& gamma, const SiegelPoint& tau);
/// Principal square root of det(Cτ + D).
Complex sqrt_det_principal(const SymplecticMatrix& gamma, const SiegelPoint& tau);

/// J₂·τ = -(2τ)⁻¹.
SiegelPoint fricke_act(const SiegelPoint& tau);
/// The branch of det(τ)^{1/2} that is holomorphic on the whole upper half space,
/// equal to e^{iπg/4}·det(τ/i)^{1/2} with det(τ/i)^{1/2} > 0 on iY.
Complex sqrt_det_tau_holomorphic(const SiegelPoint& tau);

}  // namespace siegel
