#include "siegel/groups.hpp"

#include <regex>

namespace siegel {

namespace {

// Residue views of the blocks of a 2g x 2g residue matrix.
struct Blocks {
  const ResidueMatrix& r;
  std::size_t g;
  long a(std::size_t i, std::size_t j) const { return r(i, j); }
  long b(std::size_t i, std::size_t j) const { return r(i, g + j); }
  long c(std::size_t i, std::size_t j) const { return r(g + i, j); }
  long d(std::size_t i, std::size_t j) const { return r(g + i, g + j); }
};

bool mod_eq(long x, long want, long m) { return ((x - want) % m + m) % m == 0; }

// A ≡ D ≡ 1 (mod m) on the diagonal and 0 off it.
bool ad_identity(const Blocks& x, long m) {
  for (std::size_t i = 0; i < x.g; ++i)
    for (std::size_t j = 0; j < x.g; ++j) {
      const long e = i == j ? 1 : 0;
      if (!mod_eq(x.a(i, j), e, m) || !mod_eq(x.d(i, j), e, m)) return false;
    }
  return true;
}

bool b_zero(const Blocks& x, long m) {
  for (std::size_t i = 0; i < x.g; ++i)
    for (std::size_t j = 0; j < x.g; ++j)
      if (!mod_eq(x.b(i, j), 0, m)) return false;
  return true;
}

bool c_zero(const Blocks& x, long m) {
  for (std::size_t i = 0; i < x.g; ++i)
    for (std::size_t j = 0; j < x.g; ++j)
      if (!mod_eq(x.c(i, j), 0, m)) return false;
  return true;
}

bool diag_b_zero(const Blocks& x, long m) {
  for (std::size_t i = 0; i < x.g; ++i)
    if (!mod_eq(x.b(i, i), 0, m)) return false;
  return true;
}

bool diag_c_zero(const Blocks& x, long m) {
  for (std::size_t i = 0; i < x.g; ++i)
    if (!mod_eq(x.c(i, i), 0, m)) return false;
  return true;
}

// diag(ᵗAC) ≡ diag(ᵗBD) ≡ 0 (mod m).
bool theta_diagonals(const Blocks& x, long m) {
  for (std::size_t k = 0; k < x.g; ++k) {
    long ac = 0, bd = 0;
    for (std::size_t i = 0; i < x.g; ++i) {
      ac += x.a(i, k) * x.c(i, k);
      bd += x.b(i, k) * x.d(i, k);
    }
    if (!mod_eq(ac, 0, m) || !mod_eq(bd, 0, m)) return false;
  }
  return true;
}

bool level_24_residues(const Blocks& x) {
  return ad_identity(x, 2) && b_zero(x, 2) && c_zero(x, 2) && diag_b_zero(x, 4) && diag_c_zero(x, 4);
}

// Unimodular A matrices generating GL(g, Z): adjacent swaps, one shear, one sign flip.
std::vector<IntMatrix> gl_generators(std::size_t g) {
  std::vector<IntMatrix> out;
  for (std::size_t i = 0; i + 1 < g; ++i) {
    IntMatrix p = IntMatrix::identity(g);
    p(i, i) = 0;
    p(i + 1, i + 1) = 0;
    p(i, i + 1) = 1;
    p(i + 1, i) = 1;
    out.push_back(p);
  }
  if (g >= 2) {
    IntMatrix s = IntMatrix::identity(g);
    s(0, 1) = 1;
    out.push_back(s);
  }
  IntMatrix n = IntMatrix::identity(g);
  n(0, 0) = -1;
  out.push_back(n);
  return out;
}

// A ≡ 1 (mod n) shears 1 + n·E_ij, i ≠ j.
std::vector<IntMatrix> congruence_shears(std::size_t g, long n) {
  std::vector<IntMatrix> out;
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = 0; j < g; ++j) {
      if (i == j) continue;
      IntMatrix s = IntMatrix::identity(g);
      s(i, j) = n;
      out.push_back(s);
    }
  return out;
}

// Translations in both triangles by diagonal scale `dscale` and off-diagonal scale `oscale`.
void add_translations(std::vector<SymplecticMatrix>& out, std::size_t g, long upper_d, long upper_o, long lower_d,
                      long lower_o) {
  for (std::size_t i = 0; i < g; ++i) {
    if (upper_d) out.push_back(SymplecticMatrix::translation(unit_diagonal(g, i, upper_d)));
    if (lower_d) out.push_back(SymplecticMatrix::lower_translation(unit_diagonal(g, i, lower_d)));
  }
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = i + 1; j < g; ++j) {
      if (upper_o) out.push_back(SymplecticMatrix::translation(unit_symmetric(g, i, j, upper_o)));
      if (lower_o) out.push_back(SymplecticMatrix::lower_translation(unit_symmetric(g, i, j, lower_o)));
    }
}

std::vector<SymplecticMatrix> theta_level_generators(std::size_t g, long n) {
  std::vector<SymplecticMatrix> out;
  add_translations(out, g, 2 * n, n, 2 * n, n);
  for (const auto& a : congruence_shears(g, n)) out.push_back(SymplecticMatrix::block_diagonal(a));
  return out;
}

}  // namespace

IntMatrix unit_diagonal(std::size_t g, std::size_t i, long scale) {
  IntMatrix m(g, g);
  m(i, i) = scale;
  return m;
}

IntMatrix unit_symmetric(std::size_t g, std::size_t i, std::size_t j, long scale) {
  IntMatrix m(g, g);
  m(i, j) = scale;
  m(j, i) = scale;
  return m;
}

GroupDescriptor GroupDescriptor::full(std::size_t g) { return {GroupKind::full, g, 1, 1, "Gamma"}; }

GroupDescriptor GroupDescriptor::principal(std::size_t g, long n) {
  if (n < 1) throw std::invalid_argument("principal congruence level must be positive");
  return {GroupKind::principal, g, n, n, "Gamma(" + std::to_string(n) + ")"};
}

GroupDescriptor GroupDescriptor::theta_level(std::size_t g, long n) {
  if (n < 1) throw std::invalid_argument("theta level must be positive");
  return {GroupKind::theta_level, g, n, 2 * n, "Gamma(" + std::to_string(n) + "," + std::to_string(2 * n) + ")"};
}

GroupDescriptor GroupDescriptor::level_24(std::size_t g) { return {GroupKind::level_24, g, 2, 4, "Gamma(2,4)"}; }

GroupDescriptor GroupDescriptor::level_24_squared(std::size_t g) {
  return {GroupKind::level_24_squared, g, 2, 4, "Gamma^2(2,4)"};
}

GroupDescriptor GroupDescriptor::level_24_star(std::size_t g) {
  return {GroupKind::level_24_star, g, 2, 4, "Gamma*(2,4)"};
}

GroupDescriptor GroupDescriptor::level_24_fricke(std::size_t g) {
  return {GroupKind::level_24_fricke, g, 2, 8, "Gamma(2,4)^J2"};
}

GroupDescriptor GroupDescriptor::gamma0_2(std::size_t g) { return {GroupKind::gamma0_2, g, 2, 2, "Gamma0(2)"}; }
GroupDescriptor GroupDescriptor::gamma00_2(std::size_t g) { return {GroupKind::gamma00_2, g, 2, 2, "Gamma00(2)"}; }
GroupDescriptor GroupDescriptor::gamma1_2(std::size_t g) { return {GroupKind::gamma1_2, g, 2, 2, "Gamma1(2)"}; }
GroupDescriptor GroupDescriptor::gamma0_4(std::size_t g) { return {GroupKind::gamma0_4, g, 4, 4, "Gamma0(4)"}; }

GroupDescriptor GroupDescriptor::custom(std::string name, std::size_t g, long modulus, ResiduePredicate predicate,
                                        std::vector<SymplecticMatrix> gens) {
  GroupDescriptor d(GroupKind::custom, g, modulus, modulus, std::move(name));
  d.predicate_ = std::move(predicate);
  d.custom_generators_ = std::move(gens);
  return d;
}

GroupDescriptor GroupDescriptor::parse(const std::string& name, std::size_t g) {
  static const std::regex principal_re(R"(Gamma\((\d+)\))");
  static const std::regex theta_re(R"(Gamma\((\d+),(\d+)\))");
  std::smatch m;
  if (name == "Gamma") return full(g);
  if (name == "Gamma(2,4)") return level_24(g);
  if (name == "Gamma^2(2,4)") return level_24_squared(g);
  if (name == "Gamma*(2,4)") return level_24_star(g);
  if (name == "Gamma(2,4)^J2") return level_24_fricke(g);
  if (name == "Gamma0(2)") return gamma0_2(g);
  if (name == "Gamma00(2)") return gamma00_2(g);
  if (name == "Gamma1(2)") return gamma1_2(g);
  if (name == "Gamma0(4)") return gamma0_4(g);
  if (std::regex_match(name, m, principal_re)) return principal(g, std::stol(m[1]));
  if (std::regex_match(name, m, theta_re)) {
    const long n = std::stol(m[1]);
    if (std::stol(m[2]) != 2 * n) throw std::invalid_argument("group Gamma(n,m) needs m = 2n: " + name);
    return theta_level(g, n);
  }
  throw std::invalid_argument("unknown group descriptor: " + name);
}

bool GroupDescriptor::contains(const ResidueMatrix& r) const {
  if (r.size() != 2 * g_) throw GenusMismatchError("residue matrix genus does not match " + name_);
  if (r.modulus() % modulus_ != 0) throw std::invalid_argument("residues of insufficient modulus for " + name_);
  const Blocks x{r, g_};
  switch (kind_) {
    case GroupKind::full:
      return true;
    case GroupKind::principal:
      return ad_identity(x, n_) && b_zero(x, n_) && c_zero(x, n_);
    case GroupKind::theta_level:
      return ad_identity(x, n_) && b_zero(x, n_) && c_zero(x, n_) && theta_diagonals(x, 2 * n_);
    case GroupKind::level_24:
      return level_24_residues(x);
    case GroupKind::level_24_squared:
      return ad_identity(x, 2) && c_zero(x, 2) && diag_b_zero(x, 2) && diag_c_zero(x, 4);
    case GroupKind::level_24_star: {
      if (!level_24_residues(x)) return false;
      // κ(γ)² = (-1)^{Tr((A-1)/2)} on Γ_g(2).
      long t = 0;
      for (std::size_t i = 0; i < g_; ++i) t += ((x.a(i, i) % 4) == 3) ? 1 : 0;
      return t % 2 == 0;
    }
    case GroupKind::level_24_fricke:
      return ad_identity(x, 2) && c_zero(x, 4) && diag_c_zero(x, 8) && diag_b_zero(x, 2);
    case GroupKind::gamma0_2:
      return c_zero(x, 2);
    case GroupKind::gamma00_2:
      return b_zero(x, 2) && c_zero(x, 2);
    case GroupKind::gamma1_2:
      return ad_identity(x, 2) && c_zero(x, 2);
    case GroupKind::gamma0_4:
      return c_zero(x, 4);
    case GroupKind::custom:
      return predicate_(r.modulus() == modulus_ ? r : r.reduce(modulus_));
  }
  return false;
}

bool member(const SymplecticMatrix& m, const GroupDescriptor& group) {
  if (m.genus() != group.genus())
    throw GenusMismatchError("genus " + std::to_string(m.genus()) + " matrix tested against genus " +
                             std::to_string(group.genus()) + " group " + group.name());
  return group.contains(m.reduce(group.modulus()));
}

std::vector<SymplecticMatrix> generators(const GroupDescriptor& group) {
  const std::size_t g = group.genus();
  std::vector<SymplecticMatrix> out;
  switch (group.kind()) {
    case GroupKind::full:
      add_translations(out, g, 1, 1, 0, 0);
      for (const auto& a : gl_generators(g)) out.push_back(SymplecticMatrix::block_diagonal(a));
      out.push_back(SymplecticMatrix::standard_j(g));
      break;
    case GroupKind::principal:
      add_translations(out, g, group.level(), group.level(), group.level(), group.level());
      for (const auto& a : congruence_shears(g, group.level())) out.push_back(SymplecticMatrix::block_diagonal(a));
      break;
    case GroupKind::theta_level:
      out = theta_level_generators(g, group.level());
      break;
    case GroupKind::level_24_star:
      out = theta_level_generators(g, 2);
      break;
    case GroupKind::level_24: {
      out = theta_level_generators(g, 2);
      IntMatrix flip = IntMatrix::identity(g);
      flip(0, 0) = -1;
      out.push_back(SymplecticMatrix::block_diagonal(flip));
      break;
    }
    case GroupKind::level_24_squared: {
      out = generators(GroupDescriptor::level_24(g));
      add_translations(out, g, 2, 1, 0, 0);
      break;
    }
    case GroupKind::level_24_fricke:
      for (const auto& x : generators(GroupDescriptor::level_24(g))) out.push_back(fricke_conjugate(x));
      break;
    case GroupKind::gamma0_2:
      // ᵗγ_{2S}, [[A,0],[0,ᵗA⁻¹]] and γ_S.
      add_translations(out, g, 1, 1, 2, 2);
      for (const auto& a : gl_generators(g)) out.push_back(SymplecticMatrix::block_diagonal(a));
      break;
    case GroupKind::gamma00_2:
      add_translations(out, g, 2, 2, 2, 2);
      for (const auto& a : gl_generators(g)) out.push_back(SymplecticMatrix::block_diagonal(a));
      break;
    case GroupKind::gamma1_2: {
      add_translations(out, g, 1, 1, 2, 2);
      for (const auto& a : congruence_shears(g, 2)) out.push_back(SymplecticMatrix::block_diagonal(a));
      IntMatrix flip = IntMatrix::identity(g);
      flip(0, 0) = -1;
      out.push_back(SymplecticMatrix::block_diagonal(flip));
      break;
    }
    case GroupKind::gamma0_4:
      add_translations(out, g, 1, 1, 4, 4);
      for (const auto& a : gl_generators(g)) out.push_back(SymplecticMatrix::block_diagonal(a));
      break;
    case GroupKind::custom:
      if (group.custom_generators().empty())
        throw NoGeneratorsError("no generators registered for " + group.name());
      out = group.custom_generators();
      break;
  }
  return out;
}

SymplecticMatrix random_word(const std::vector<SymplecticMatrix>& gens, Rng& rng, int word_length) {
  if (gens.empty()) throw NoGeneratorsError("empty generating set");
  SymplecticMatrix w = SymplecticMatrix::identity(gens.front().genus());
  for (int k = 0; k < word_length; ++k) {
    const std::uint64_t pick = rng.index(2 * gens.size());
    const SymplecticMatrix& s = gens[pick / 2];
    w = w * (pick % 2 ? s.inverse() : s);
  }
  return w;
}

SymplecticMatrix random_element(const GroupDescriptor& group, std::uint64_t seed, int word_length) {
  Rng rng(seed);
  return random_word(generators(group), rng, word_length);
}

}  // namespace siegel
