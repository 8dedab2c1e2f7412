#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "siegel/characteristics.hpp"
#include "siegel/cyclotomic.hpp"
#include "siegel/siegel_point.hpp"
#include "siegel/theta.hpp"

namespace siegel {

/// Raised when every even theta constant at τ is below the pivot threshold.
struct IllConditionedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A rational number modulo 1 with denominator dividing 8, stored as eighths in [0, 8).
struct PhiValue {
  int eighths = 0;

  double value() const { return eighths / 8.0; }
  /// e(φ) = ζ₈^{eighths}.
  Cyclotomic8 exp() const { return Cyclotomic8::zeta(eighths); }
  /// e(2φ), always a power of i.
  Cyclotomic8 exp_doubled() const { return Cyclotomic8::zeta(2 * eighths); }
  friend bool operator==(const PhiValue&, const PhiValue&) = default;
};

/// φ_m(γ) = -⅛(ᵗm'ᵗBDm' + ᵗm''ᵗACm'' - 2ᵗm'ᵗBCm'') + ¼ᵗdiag(AᵗB)(Dm' - Cm'') mod 1,
/// m taken with entries in {0, 1}.
PhiValue phi(const ThetaCharacteristic& m, const SymplecticMatrix& gamma);

/// κ(γ)⁴ = (-1)^{Tr(ᵗBC)}.
int kappa_pow4(const SymplecticMatrix& gamma);
/// κ(γ)² = (-1)^{Tr((A - 1)/2)}; γ must lie in Γ_g(2).
int kappa_pow2(const SymplecticMatrix& gamma);

/// The matrix γ̃ = [[A, 2B], [C/2, D]] with 2(γ·τ) = γ̃·(2τ). Requires C ≡ 0 (mod 2).
SymplecticMatrix doubled_conjugate(const SymplecticMatrix& gamma);

/// κ(γ) relative to the principal branch of det(Cτ+D)^{1/2}, extracted at τ from the
/// even characteristic with the largest |ϑ_m(τ)|.
Complex extract_kappa(const SymplecticMatrix& gamma, const SiegelPoint& tau, double tol = kDefaultTolerance);

/// κ(γ)·det(Cτ+D)^{1/2}: the branch-independent automorphy factor of the theta constants.
Complex theta_automorphy_factor(const SymplecticMatrix& gamma, const SiegelPoint& tau,
                                double tol = kDefaultTolerance);

struct TransformationReport {
  Complex kappa;
  ThetaCharacteristic pivot;
  double max_residual = 0.0;  // relative to the largest theta value involved
  double scale = 0.0;
  std::vector<double> residuals;  // per even characteristic, enumeration order
};

/// Checks ϑ_{γ·m}(γ·τ) = κ det(Cτ+D)^{1/2} e(φ_m(γ)) ϑ_m(τ) for every even m with one κ.
/// ϑ_{γ·m} is read on the unreduced image, i.e. with the sign from reduce().
TransformationReport verify_transformation(const SymplecticMatrix& gamma, const SiegelPoint& tau,
                                           double tol = kDefaultTolerance);

using FormFunction = std::function<Complex(const SiegelPoint&)>;

/// f|_{γ,k/2,v}(τ) = v⁻¹ det(Cτ+D)^{-k/2} f(γ·τ), principal branch of the square root.
Complex slash(const FormFunction& f, const SymplecticMatrix& gamma, int k, Complex multiplier,
              const SiegelPoint& tau);

/// f|_{J₂,k/2,v}(τ) = v⁻¹ det(τ)^{-k/2} f(J₂·τ) with the holomorphic branch of det(τ)^{1/2}.
Complex fricke_slash(const FormFunction& f, int k, Complex multiplier, const SiegelPoint& tau);

/// v_Θ(γ) = κ(γ̃), extracted at 2τ; γ ∈ Γ_{g,0}(2).
Complex v_theta(const SymplecticMatrix& gamma, const SiegelPoint& tau, double tol = kDefaultTolerance);

/// v_Θ(J₂) := v_ϑ(J) = κ(J), extracted at τ₀ = i·1_g.
Complex v_theta_fricke(std::size_t g, double tol = kDefaultTolerance);

/// f_a|_{γ,1/2,v_Θ} = phase · f_target.
struct MonomialEntry {
  std::size_t target = 0;
  Cyclotomic8 phase;
  friend bool operator==(const MonomialEntry&, const MonomialEntry&) = default;
};

/// Exact action of γ ∈ Γ_{g,0}(2) on the second-order theta constants Θ[a], a indexed by bits_of().
std::vector<MonomialEntry> second_order_action(const SymplecticMatrix& gamma);

}  // namespace siegel
