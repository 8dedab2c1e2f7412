#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "siegel/groups.hpp"

namespace siegel {

/// Configuration problems in a quotient computation: element bound exceeded,
/// generators outside the ambient group, kernel not contained in the ambient group.
struct QuotientConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotASubgroupError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// ambient / kernel, enumerated by breadth-first search over right multiplication by
/// generators. Two elements x, y are the same class iff y⁻¹x reduces into the kernel.
class FiniteQuotient {
 public:
  const GroupDescriptor& ambient() const { return ambient_; }
  const GroupDescriptor& kernel() const { return kernel_; }
  long modulus() const { return modulus_; }
  std::size_t order() const { return reps_.size(); }

  const std::vector<SymplecticMatrix>& generators() const { return gens_; }
  const std::vector<std::string>& generator_names() const { return names_; }

  /// Residues modulo M* of the representative of element i (element 0 is the identity).
  const ResidueMatrix& residues(std::size_t i) const { return reps_[i]; }
  /// An exact integral lift: the product of the generator word.
  const SymplecticMatrix& lift(std::size_t i) const { return lifts_[i]; }
  /// Generator indices whose product (left to right) represents element i.
  const std::vector<std::size_t>& word(std::size_t i) const { return words_[i]; }
  std::string word_string(std::size_t i) const;

  std::size_t multiply(std::size_t i, std::size_t j) const { return table_[i * order() + j]; }
  std::size_t inverse(std::size_t i) const { return inverses_[i]; }
  std::size_t element_order(std::size_t i) const;

  /// Index of the class containing `x` (residues modulo a multiple of M*), if x lies in the ambient group.
  std::optional<std::size_t> find(const ResidueMatrix& x) const;
  std::optional<std::size_t> find(const SymplecticMatrix& x) const { return find(x.reduce(modulus_)); }

  /// Class generated by the given elements.
  std::vector<std::size_t> subgroup(const std::vector<std::size_t>& gens) const;

  friend FiniteQuotient enumerate_quotient(const GroupDescriptor&, const GroupDescriptor&,
                                           const std::vector<SymplecticMatrix>&, std::vector<std::string>,
                                           std::size_t);

 private:
  FiniteQuotient(GroupDescriptor ambient, GroupDescriptor kernel, long modulus)
      : ambient_(std::move(ambient)), kernel_(std::move(kernel)), modulus_(modulus) {}
  bool same_class(const ResidueMatrix& x, const ResidueMatrix& y) const;

  GroupDescriptor ambient_;
  GroupDescriptor kernel_;
  long modulus_;
  std::vector<SymplecticMatrix> gens_;
  std::vector<std::string> names_;
  std::vector<ResidueMatrix> reps_;
  std::vector<SymplecticMatrix> lifts_;
  std::vector<std::vector<std::size_t>> words_;
  std::vector<std::size_t> table_;
  std::vector<std::size_t> inverses_;
};

inline constexpr std::size_t kDefaultQuotientBound = 4096;

/// Quotient over the registered generators of `big`.
FiniteQuotient enumerate_quotient(const GroupDescriptor& big, const GroupDescriptor& small,
                                  std::size_t max_elements = kDefaultQuotientBound);

/// Quotient over explicit generators of `big` (names default to s1, s2, ...).
FiniteQuotient enumerate_quotient(const GroupDescriptor& big, const GroupDescriptor& small,
                                  const std::vector<SymplecticMatrix>& gens, std::vector<std::string> names = {},
                                  std::size_t max_elements = kDefaultQuotientBound);

/// True if both quotients have the same ambient and kernel and the same set of classes.
bool same_cosets(const FiniteQuotient& p, const FiniteQuotient& q);

/// For every generator t of the ambient group and sampled kernel elements k, t·k·t⁻¹ lies in the kernel.
bool kernel_is_normal(const FiniteQuotient& q, std::uint64_t seed, int samples = 20, int word_length = 6);

struct QuotientMap {
  const FiniteQuotient* domain = nullptr;
  const FiniteQuotient* codomain = nullptr;
  std::vector<std::size_t> image;
  bool representative_independent = true;  // images agree for rep·k over kernel generators k

  bool is_multiplicative() const;
  bool is_bijective() const;
};

/// [[A, 2B], [C, 2D - ᵗA⁻¹]] modulo `modulus`, the reduction of
/// [[1,0],[CA⁻¹,1]]·[[A,0],[0,ᵗA⁻¹]]·[[1,2A⁻¹B],[0,1]]. A must be invertible mod 2.
ResidueMatrix phi_residues(const SymplecticMatrix& gamma, long modulus);

/// φ(γ) as an integral matrix; exists when det A = ±1.
std::optional<SymplecticMatrix> phi_exact(const SymplecticMatrix& gamma);

/// φ(γ)^{J₂} = [[2D - ᵗA⁻¹, -C/2], [-4B, A]] modulo `modulus`.
ResidueMatrix fricke_phi_residues(const SymplecticMatrix& gamma, long modulus);

/// A representative of γ·Γ₂²(2,4) with det A = ±1, found by multiplying with kernel
/// generators up to `depth` times.
std::optional<SymplecticMatrix> factorizable_representative(const SymplecticMatrix& gamma,
                                                            const std::vector<SymplecticMatrix>& kernel_gens,
                                                            int depth = 4);

/// φ: Γ₀(2)/Γ₂²(2,4) → Γ₀⁰(2)/Γ₂(2,4).
QuotientMap phi_iso(const FiniteQuotient& domain, const FiniteQuotient& codomain);
/// φ′: Γ₀(2)/Γ₂²(2,4) → Γ₀(4)/Γ₂(2,4)^{J₂}, x ↦ φ(x)^{J₂}.
QuotientMap fricke_iso(const FiniteQuotient& domain, const FiniteQuotient& codomain);

struct StructureReport {
  std::size_t order = 0;
  bool is_abelian = false;
  std::size_t exponent = 0;
  std::vector<std::size_t> class_sizes;  // conjugacy class sizes, ascending
  std::vector<std::size_t> order_counts;  // order_counts[k] = #elements of order k
  bool normal_elementary_abelian_16 = false;
  std::vector<std::size_t> normal_subgroup;  // elements of the subgroup found, if any
  std::size_t complement_order = 0;
  bool complement_nonabelian = false;
  std::string description;
};

StructureReport structure_report(const FiniteQuotient& q);

/// Order, exponent, abelianness and conjugacy-class sizes of a subgroup given by its elements.
struct Fingerprint {
  std::size_t order = 0;
  std::size_t exponent = 0;
  bool is_abelian = false;
  std::vector<std::size_t> class_sizes;
  std::vector<std::size_t> order_counts;
  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const FiniteQuotient& q, const std::vector<std::size_t>& elements);

struct SubgroupMatch {
  std::vector<std::size_t> h;        // elements of H ⊂ G = Γ₀(2)/Γ₂²(2,4)
  std::vector<std::size_t> phi_h;    // elements of φ(H) ⊂ Γ₀⁰(2)/Γ₂(2,4)
  GroupDescriptor gamma;             // Γ: Γ₂(2,4) ⊂ Γ ⊂ Γ₀⁰(2)
  GroupDescriptor gamma_prime;       // Γ′: Γ₂²(2,4) ⊂ Γ′ ⊂ Γ₀(2)
  Fingerprint h_fingerprint;
  Fingerprint gamma_fingerprint;        // of the re-enumerated Γ/Γ₂(2,4)
  Fingerprint gamma_prime_fingerprint;  // of the re-enumerated Γ′/Γ₂²(2,4)
  bool explicit_map_ok = false;         // φ restricts to a bijective homomorphism between the re-enumerations
  std::vector<std::string> gamma_matches;        // named descriptors with the same cosets as Γ
  std::vector<std::string> gamma_prime_matches;  // named descriptors with the same cosets as Γ′
};

/// Which realization of G the generators of H are given in.
enum class QuotientSide { gamma0, gamma00 };

/// Preimages of H and of its counterpart under φ. With side == gamma00 the generators are
/// classes in Γ₀⁰(2)/Γ₂(2,4) and H is taken as their preimage under φ.
SubgroupMatch match_subgroups(const FiniteQuotient& g_quotient, const FiniteQuotient& g00_quotient,
                              const QuotientMap& phi, const std::vector<std::size_t>& h_generators,
                              QuotientSide side = QuotientSide::gamma0);

/// γ_{B_i} for the basis B₁, …, B_{g(g+1)/2} of symmetric matrices with even diagonal entries
/// 2E_ii first and the off-diagonal E_ij + E_ji after, in row order.
std::vector<SymplecticMatrix> level_generators_m(std::size_t g);

}  // namespace siegel
