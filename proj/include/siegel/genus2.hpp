#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "siegel/cocycles.hpp"
#include "siegel/groups.hpp"

namespace siegel {

/// (-1)^{a₁}, (-1)^{a₂}, (-1)^{a₁a₂} for M₁, M₂, M₃; `a` as the index of (a₁, a₂).
int sign_action(int generator, std::uint64_t a);

/// A point of P³ given by homogeneous coordinates, not all zero.
class ProjectivePoint3 {
 public:
  explicit ProjectivePoint3(std::array<Complex, 4> x);
  const std::array<Complex, 4>& coordinates() const { return x_; }
  /// Index of the first coordinate of largest modulus.
  std::size_t pivot() const;
  /// Coordinates divided by the pivot coordinate.
  std::array<Complex, 4> normalized() const;
  /// Scale-equivalence up to `tol` after normalizing both by this point's pivot.
  bool equivalent(const ProjectivePoint3& other, double tol) const;

 private:
  std::array<Complex, 4> x_;
};

/// [x₀ : x₁ : x₂ : x₃] ↦ [x₀² : x₁² : x₂² : x₃²].
ProjectivePoint3 squaring_map(const ProjectivePoint3& p);

/// Distinct projective classes among all sign choices of coordinatewise square roots.
std::vector<ProjectivePoint3> squaring_preimages(const ProjectivePoint3& q, double tol = 1e-9);

/// (x₀x₁ + x₀x₂ + x₁x₂ − x₃²)² − 4x₀x₁x₂(x₀ + x₁ + x₂ + x₃ + x₄).
Complex igusa_quartic(const std::array<Complex, 5>& x);

/// (f_a(τ))_a for g = 2, a indexed 00, 01, 10, 11.
std::array<Complex, 4> f_values(const SiegelPoint& tau, double tol = kDefaultTolerance);

/// Exact phases of f_a² under γ ∈ Γ₀(2) (weight 1, multiplier v_Θ²): the entries of
/// second_order_action with every phase squared.
std::vector<MonomialEntry> squared_action(const SymplecticMatrix& gamma);

/// φ⁻¹ on integral matrices: [[A, B/2], [C, (D + ᵗA⁻¹)/2]] for y ∈ Γ₀⁰(2) with det A = ±1.
SymplecticMatrix phi_inverse_exact(const SymplecticMatrix& y);

struct SignReport {
  double max_sign_residual = 0;        // |f_a(M_i τ)/f_a(τ) − sign|
  double max_square_residual = 0;      // |f_a²(M_i τ)/f_a²(τ) − 1|
  double max_theta_square_residual = 0;  // |ϑ_b²(M_i τ)/ϑ_b²(τ) − 1|, ϑ_b = ϑ[0; b]
  int sign_rank = 0;                   // rank over F₂ of the exponent table of M₁, M₂, M₃
  int distinct_patterns = 0;           // distinct sign vectors of the 8 group elements
  bool trivial_on_f00 = false;
  std::size_t samples = 0;
};

/// Sign table and trivial action of Γ₂²(2,4)/Γ₂(2,4) on f_a², ϑ_b² at random τ.
SignReport verify_integer_weight_subring(std::uint64_t seed, int samples = 5, double tol = kDefaultTolerance);

struct GModuleCheck {
  std::string label;
  SymplecticMatrix x;                 // in Γ₀(2), acts on f_a²
  SymplecticMatrix y;                 // φ(x) in Γ₀⁰(2), acts on f_a
  std::vector<MonomialEntry> f_side;  // f_a|_{y,1/2,v_Θ}
  std::vector<MonomialEntry> f2_side; // f_a²|_{x,1,v_Θ²}
  bool exact_equal = false;
  double numeric_residual = 0;        // both sides against the monomial prediction, worst over samples
};

struct GModuleReport {
  std::vector<GModuleCheck> checks;
  bool all_exact = true;
  double max_residual = 0;
  double witness_residual = 0;  // intertwining of f_a ↦ f_a² under y ∈ H and x = φ⁻¹(y)
};

/// Equivariance of f_a ↦ f_a² under φ for each x in `gamma0_generators`, plus the squaring
/// witness for H given by generators in Γ₀⁰(2) with det A = ±1.
GModuleReport verify_G_module_iso(const std::vector<SymplecticMatrix>& gamma0_generators,
                                  const std::vector<SymplecticMatrix>& h_generators, std::uint64_t seed,
                                  int samples = 3, double tol = kDefaultTolerance);

struct MembershipCheck {
  std::string label;
  std::size_t tested = 0;
  std::size_t failures = 0;
  bool ok() const { return failures == 0; }
};

struct FrickeReport {
  Complex v_theta_j2;            // v_Θ(J₂) = κ(J) at i·1₂
  double v_theta_root_error = 0; // |v⁸ − 1|
  Complex ratio_constant;        // f_a(J₂τ)/(det τ^{1/2} ϑ_a(τ)) at the first sample
  double ratio_spread = 0;       // max pairwise deviation over a and τ
  double ratio_vs_multiplier = 0;
  double slash_residual = 0;     // |f_a|_{J₂,1/2,v_Θ} − ϑ_a| relative
  double involution_residual = 0;
  double hadamard_residual = 0;  // change of basis between (f_σ f_{σ+ε}) and (ϑ[ε;ε']²)
  std::vector<MembershipCheck> memberships;
  std::vector<std::string> fixed_groups;  // intermediate groups found fixed by conjugation
  std::vector<std::string> moved_groups;
};

FrickeReport verify_fricke_identities(std::uint64_t seed, int point_samples = 5, int group_samples = 100,
                                      double tol = kDefaultTolerance);

}  // namespace siegel
