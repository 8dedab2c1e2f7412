#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "siegel/cocycles.hpp"
#include "siegel/quotients.hpp"
#include "siegel/siegel_point.hpp"

namespace siegel {

/// π⁻⁴·w·ᵗw with w = ψ_{m₁}(τ) × ψ_{m₂}(τ), ψ_m the z-gradient of ϑ_m at z = 0.
/// Requires g = 3 and two distinct odd columns (construction of M enforces this).
/// Throws std::domain_error for an even column and std::invalid_argument for equal columns.
CMatrix gradient_form(const CharacteristicMatrix& m, const SiegelPoint& tau, double tol = kDefaultTolerance);
/// Same without the distinct-columns check (equal columns give the zero matrix).
CMatrix gradient_form_unchecked(const CharacteristicMatrix& m, const SiegelPoint& tau,
                                double tol = kDefaultTolerance);
/// π⁻⁴·w·ᵗw, w = p₁ × p₂.
CMatrix gradient_outer(const CVector& p1, const CVector& p2);

/// χ_M(γ) = κ(γ)⁴·e(2φ_{m₁}(γ) + 2φ_{m₂}(γ)), a 4th root of unity.
Cyclotomic8 chi(const CharacteristicMatrix& m, const SymplecticMatrix& gamma);

/// γ·M column by column.
CharacteristicMatrix act(const SymplecticMatrix& gamma, const CharacteristicMatrix& m);

/// ‖W(γ·M)(γ·τ) − χ_M(γ)·det(Cτ+D)⁴·ᵗ(Cτ+D)⁻¹W(M)(τ)(Cτ+D)⁻¹‖ relative to the larger side.
double w_law_residual(const CharacteristicMatrix& m, const SymplecticMatrix& gamma, const SiegelPoint& tau,
                      double tol = kDefaultTolerance);

/// Finite formal sum ∑ c_N W(N) with exact coefficients, keyed by ordered column pairs.
class FormalThetaCombination {
 public:
  void add(const CharacteristicMatrix& n, const Cyclotomic8& c);
  const std::map<CharacteristicMatrix, Cyclotomic8>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Coefficient of N (zero when absent).
  Cyclotomic8 coefficient(const CharacteristicMatrix& n) const;
  /// Merges each N with its column swap (W is unchanged by the swap), keyed by the
  /// ordering with the smaller first column.
  FormalThetaCombination canonicalized() const;
  /// ∑ c_N W(N)(τ) from a table of gradients indexed by odd characteristic index.
  CMatrix evaluate(const std::map<std::uint64_t, CVector>& gradients) const;

 private:
  std::map<CharacteristicMatrix, Cyclotomic8> terms_;
};

/// The 64 translations γ_B, B = ∑ ε_i B_i, representing Γ₃²(2,4)/Γ₃(2,4), together with the
/// BFS enumeration they were validated against.
struct SymmetrizationGroup {
  FiniteQuotient quotient;
  std::vector<SymplecticMatrix> representatives;
  std::vector<IntMatrix> shifts;  // B for each representative
  bool words_match_bfs = false;   // the 2⁶ products are pairwise distinct classes covering the quotient
};

SymmetrizationGroup symmetrization_group();

/// ∑_γ κ(γ)⁴ e(2φ_{n₁}(γ) + 2φ_{n₂}(γ)) W(N), N = (γ⁻¹·m₁, γ⁻¹·m₂), with ordered keys.
FormalThetaCombination symmetrize(const CharacteristicMatrix& m, const SymmetrizationGroup& group);

struct ClassificationEntry {
  CharacteristicMatrix m;
  FormalThetaCombination phi;  // merged keys
  bool nonvanishing = false;
  bool criterion = false;      // m₁′ = m₂′
  std::size_t ordered_support = 0;  // nonzero coefficients before merging column swaps
  double numeric_ratio = 0;    // ‖Φ(M)(τ₀)‖ / ∑‖W(M)(τ₀ + B)‖ from the direct sum
  double formal_vs_direct = 0; // ‖formal evaluation − direct sum‖ / ∑‖W(M)(τ₀ + B)‖
};

struct ClassificationReport {
  std::vector<ClassificationEntry> entries;  // all 378 unordered pairs
  std::size_t nonvanishing = 0;
  std::size_t nonvanishing_ordered = 0;      // the same count without merging column swaps
  bool criterion_matches = false;
  std::size_t census_prediction = 0;         // ∑ over m′ of C(#odd with that m′, 2)
  double max_vanishing_ratio = 0;
  double min_nonvanishing_ratio = 0;
  double max_formal_vs_direct = 0;
  std::size_t gap_violations = 0;            // vanishing ≥ 1e−8 or nonvanishing ≤ 1e−6
  std::vector<std::size_t> ratio_histogram;  // counts per decade from 1e−20 to 1e0
  bool words_match_bfs = false;
  std::size_t quotient_order = 0;
  std::size_t points = 0;
};

/// Classifies all pairs of distinct odd genus-3 characteristics. The numeric gap check runs at
/// every point given; ratios are the worst case over the points. No points skips it.
ClassificationReport classify_all(const std::vector<SiegelPoint>& points, double tol = kDefaultTolerance);

/// The example pair (0,0,1;0,0,1), (0,0,1;0,1,1) and the four N_i of its symmetrization.
CharacteristicMatrix example_m();
std::vector<CharacteristicMatrix> example_n();

struct R16Residual {
  Complex value;
  double scale = 0;
  double relative = 0;
};

/// 2³∑ϑ_m¹⁶ − (∑ϑ_m⁸)² over the even characteristics, relative to the larger of the two terms.
R16Residual verify_r16(const SiegelPoint& tau, double tol = kDefaultTolerance);

struct QInvarianceReport {
  double max_ratio_error = 0;           // |q(M_i·τ)/q(τ) − 1|
  bool exact_product_phase_one = false; // ∏_a i^{ᵗaB_i a} = 1 for every i
  double max_phase_residual = 0;        // |f_a(M_i·τ)/f_a(τ) − i^{ᵗaB_ia}|
  std::vector<int> sign_flips;          // number of a with f_a ↦ −f_a under M_i
  std::size_t resampled = 0;            // points rejected because some f_a was nearly zero
  std::size_t samples = 0;
};

/// q = ∏_{a ∈ F₂³} f_a under the generators M₁, …, M₆.
QInvarianceReport verify_q_invariance(std::uint64_t seed, int samples = 5, double tol = kDefaultTolerance);

}  // namespace siegel
