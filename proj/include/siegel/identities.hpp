#pragma once

#include <vector>

#include "siegel/characteristics.hpp"
#include "siegel/theta.hpp"

namespace siegel {

/// Residual of an identity, relative to the largest term entering it.
struct IdentityResidual {
  double relative = 0.0;
  double absolute = 0.0;
  double scale = 0.0;
};

/// Θ[σ]Θ[σ+ε] = 2^{-g} ∑_{ε'} (-1)^{σ·ε'} ϑ[ε;ε']², worst case over all σ, ε.
IdentityResidual riemann_relation(const SiegelPoint& tau, double tol = kDefaultTolerance);

/// ϑ[ε;ε']² = ∑_σ (-1)^{σ·ε'} Θ[σ]Θ[σ+ε], worst case over all ε, ε'.
IdentityResidual riemann_relation_inverse(const SiegelPoint& tau, double tol = kDefaultTolerance);

/// ϑ[ε;ε'](τ,(z+w)/2) ϑ[δ;δ'](τ,(z-w)/2)
///   = ∑_σ ϑ[(ε+δ)/2 - σ; ε'+δ'](2τ, z) ϑ[(ε-δ)/2 + σ; ε'-δ'](2τ, w),
/// where [a; b] denotes the shifts a/2, b/2. Worst case over all pairs of characteristics.
IdentityResidual addition_formula(const SiegelPoint& tau, const CVector& z, const CVector& w,
                                  double tol = kDefaultTolerance);

/// The 2^g × 2^g matrix 2^{-g}(-1)^{σ·ε'} taking (ϑ[ε;ε']²)_{ε'} to (Θ[σ]Θ[σ+ε])_σ.
std::vector<std::vector<double>> riemann_change_of_basis(std::size_t g);

}  // namespace siegel
