#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "siegel/rng.hpp"
#include "siegel/symplectic.hpp"

namespace siegel {

struct GenusMismatchError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NoGeneratorsError : std::logic_error {
  using std::logic_error::logic_error;
};

enum class GroupKind {
  full,              // Γ_g
  principal,         // Γ_g(n)
  theta_level,       // Γ_g(n, 2n)
  level_24,          // Γ_g(2,4) via diag(B) ≡ diag(C) ≡ 0 (mod 4)
  level_24_squared,  // Γ_g²(2,4)
  level_24_star,     // Γ_g*(2,4): κ(γ)² = 1 inside Γ_g(2,4)
  level_24_fricke,   // Γ_g(2,4)^{J₂}
  gamma0_2,          // Γ_{g,0}(2): C ≡ 0 (mod 2)
  gamma00_2,         // Γ₀⁰(2): B ≡ C ≡ 0 (mod 2)
  gamma1_2,          // Γ₁(2): A ≡ D ≡ 1, C ≡ 0 (mod 2)
  gamma0_4,          // Γ₀(4): C ≡ 0 (mod 4)
  custom,            // predicate on residues supplied by the caller
};

/// A congruence subgroup of Sp(2g, Z) whose membership is decided by the
/// residues of the entries modulo `modulus()`.
class GroupDescriptor {
 public:
  using ResiduePredicate = std::function<bool(const ResidueMatrix&)>;

  static GroupDescriptor full(std::size_t g);
  static GroupDescriptor principal(std::size_t g, long n);
  static GroupDescriptor theta_level(std::size_t g, long n);
  static GroupDescriptor level_24(std::size_t g);
  static GroupDescriptor level_24_squared(std::size_t g);
  static GroupDescriptor level_24_star(std::size_t g);
  static GroupDescriptor level_24_fricke(std::size_t g);
  static GroupDescriptor gamma0_2(std::size_t g);
  static GroupDescriptor gamma00_2(std::size_t g);
  static GroupDescriptor gamma1_2(std::size_t g);
  static GroupDescriptor gamma0_4(std::size_t g);
  /// `predicate` receives residues modulo `modulus`.
  static GroupDescriptor custom(std::string name, std::size_t g, long modulus, ResiduePredicate predicate,
                                std::vector<SymplecticMatrix> generators = {});

  /// Inverse of name(): "Gamma", "Gamma(n)", "Gamma(n,2n)", "Gamma(2,4)", "Gamma^2(2,4)",
  /// "Gamma*(2,4)", "Gamma(2,4)^J2", "Gamma0(2)", "Gamma00(2)", "Gamma1(2)", "Gamma0(4)".
  static GroupDescriptor parse(const std::string& name, std::size_t g);

  GroupKind kind() const { return kind_; }
  std::size_t genus() const { return g_; }
  long level() const { return n_; }
  /// M*: membership depends only on entries modulo this number.
  long modulus() const { return modulus_; }
  const std::string& name() const { return name_; }

  /// Membership from residues; `r.modulus()` must be a multiple of modulus().
  bool contains(const ResidueMatrix& r) const;

  const std::vector<SymplecticMatrix>& custom_generators() const { return custom_generators_; }

 private:
  GroupDescriptor(GroupKind kind, std::size_t g, long n, long modulus, std::string name)
      : kind_(kind), g_(g), n_(n), modulus_(modulus), name_(std::move(name)) {}

  GroupKind kind_;
  std::size_t g_;
  long n_;
  long modulus_;
  std::string name_;
  ResiduePredicate predicate_;
  std::vector<SymplecticMatrix> custom_generators_;
};

/// Congruence test of every condition of `group`. Throws GenusMismatchError.
bool member(const SymplecticMatrix& m, const GroupDescriptor& group);

/// Registered generating set (closure is all that is relied upon). Throws NoGeneratorsError.
std::vector<SymplecticMatrix> generators(const GroupDescriptor& group);

/// Product of `word_length` generators or their inverses picked from `gens` with `rng`.
SymplecticMatrix random_word(const std::vector<SymplecticMatrix>& gens, Rng& rng, int word_length);

/// Deterministic random product of registered generators seeded by `seed`.
SymplecticMatrix random_element(const GroupDescriptor& group, std::uint64_t seed, int word_length);

/// Elementary symmetric matrices used by the generator tables.
IntMatrix unit_diagonal(std::size_t g, std::size_t i, long scale = 1);
IntMatrix unit_symmetric(std::size_t g, std::size_t i, std::size_t j, long scale = 1);

}  // namespace siegel
