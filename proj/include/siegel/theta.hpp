#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "siegel/characteristics.hpp"
#include "siegel/siegel_point.hpp"

namespace siegel {

inline constexpr double kDefaultTolerance = 1e-12;

/// A truncated theta series. |value - exact| <= tail_bound < requested tolerance.
struct ThetaValue {
  Complex value;
  int radius = 0;  // box half-width containing every lattice point summed
  double tail_bound = 0.0;
  std::size_t terms = 0;
};

struct GradientValue {
  CVector value;
  int radius = 0;
  double tail_bound = 0.0;  // per component
  std::size_t terms = 0;
};

/// Bound on ∑ ‖x‖^N exp(-π‖x‖²) over the points x of a lattice translate with
/// minimal distance ≥ rho lying outside the ball of radius `radius`, in dimension g.
/// Returns +inf when the bound is not applicable (radius < rho + sqrt(N/2π)).
double gaussian_tail_bound(std::size_t g, double rho, double radius, int derivative_order);

/// Smallest box half-width R ≥ 1 such that summing |n_i| ≤ R (for any characteristic
/// shift in [-1,1]^g) leaves a certified tail below `tol`.
int truncation_radius(const RMatrix& imag, double tol);

/// ϑ_m(τ, z) = ∑_n e(½ᵗ(n+m'/2)τ(n+m'/2) + ᵗ(n+m'/2)(z+m''/2)), e(t) = exp(2πit).
ThetaValue theta(const ThetaCharacteristic& m, const SiegelPoint& tau, const CVector& z, double tol = kDefaultTolerance);

/// The series with arbitrary real shifts in place of m'/2 and m''/2:
/// ∑_n e(½ᵗ(n+top)τ(n+top) + ᵗ(n+top)(z+bottom)).
ThetaValue theta_shifted(const RVector& top, const RVector& bottom, const SiegelPoint& tau, const CVector& z,
                         double tol = kDefaultTolerance);

/// Same series summed over the full box |n_i| ≤ radius, in lexicographic order.
ThetaValue theta_box(const ThetaCharacteristic& m, const SiegelPoint& tau, const CVector& z, int radius);

/// ϑ_m(τ) = ϑ_m(τ, 0).
Complex theta_constant(const ThetaCharacteristic& m, const SiegelPoint& tau, double tol = kDefaultTolerance);

/// Θ[a](τ) = ϑ[a; 0](2τ).
Complex second_order(const std::vector<std::uint8_t>& a, const SiegelPoint& tau, double tol = kDefaultTolerance);

/// grad_z ϑ_m(τ, z) at z = 0 for odd m. Throws std::domain_error for even m.
GradientValue theta_gradient(const ThetaCharacteristic& m, const SiegelPoint& tau, double tol = kDefaultTolerance);

/// All 2^g second-order theta constants, indexed by the integer whose bits are a₁…a_g.
std::vector<Complex> second_order_all(const SiegelPoint& tau, double tol = kDefaultTolerance);

/// a ∈ F₂^g from its index (a₁ most significant).
std::vector<std::uint8_t> bits_of(std::size_t g, std::uint64_t index);
std::uint64_t index_of(const std::vector<std::uint8_t>& bits);

}  // namespace siegel
