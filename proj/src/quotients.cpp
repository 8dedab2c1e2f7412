#include "siegel/quotients.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace siegel {

namespace {

long mod(long x, long m) { return ((x % m) + m) % m; }

long lcm_modulus(long a, long b) { return std::lcm(a, b); }

// Inverse of a g×g block modulo 2^k by elimination with odd pivots.
IntMatrix inverse_mod(const IntMatrix& a, long m) {
  const std::size_t n = a.rows();
  std::vector<std::vector<long>> w(n, std::vector<long>(2 * n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) w[i][j] = residue(a(i, j), m);
    w[i][n + i] = 1;
  }
  auto unit_inverse = [m](long x) {
    for (long y = 1; y < m; ++y)
      if (mod(x * y, m) == 1) return y;
    throw std::domain_error("inverse_mod: pivot is not a unit");
  };
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && std::gcd(w[p][c], m) != 1) ++p;
    if (p == n) throw std::domain_error("inverse_mod: block is not invertible modulo " + std::to_string(m));
    std::swap(w[p], w[c]);
    const long inv = unit_inverse(w[c][c]);
    for (auto& x : w[c]) x = mod(x * inv, m);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || w[r][c] == 0) continue;
      const long f = w[r][c];
      for (std::size_t k = 0; k < 2 * n; ++k) w[r][k] = mod(w[r][k] - f * w[c][k], m);
    }
  }
  IntMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = w[i][n + j];
  return out;
}

IntMatrix assemble(const IntMatrix& a, const IntMatrix& b, const IntMatrix& c, const IntMatrix& d) {
  const std::size_t g = a.rows();
  IntMatrix m(2 * g, 2 * g);
  m.set_block(0, 0, a);
  m.set_block(0, g, b);
  m.set_block(g, 0, c);
  m.set_block(g, g, d);
  return m;
}

bool is_commutative(const FiniteQuotient& q, const std::vector<std::size_t>& elems) {
  for (auto x : elems)
    for (auto y : elems)
      if (q.multiply(x, y) != q.multiply(y, x)) return false;
  return true;
}

std::vector<std::vector<std::size_t>> conjugacy_classes(const FiniteQuotient& q, const std::vector<std::size_t>& elems) {
  std::vector<std::vector<std::size_t>> classes;
  std::set<std::size_t> seen;
  for (auto x : elems) {
    if (seen.count(x)) continue;
    std::set<std::size_t> cls;
    for (auto h : elems) cls.insert(q.multiply(q.multiply(h, x), q.inverse(h)));
    seen.insert(cls.begin(), cls.end());
    classes.emplace_back(cls.begin(), cls.end());
  }
  return classes;
}

}  // namespace

std::string FiniteQuotient::word_string(std::size_t i) const {
  if (words_[i].empty()) return "1";
  std::ostringstream os;
  for (std::size_t k = 0; k < words_[i].size(); ++k) os << (k ? "*" : "") << names_[words_[i][k]];
  return os.str();
}

std::size_t FiniteQuotient::element_order(std::size_t i) const {
  std::size_t k = 1;
  for (std::size_t x = i; x != 0; x = multiply(x, i)) ++k;
  return k;
}

bool FiniteQuotient::same_class(const ResidueMatrix& x, const ResidueMatrix& y) const {
  return kernel_.contains(symplectic_inverse(y) * x);
}

std::optional<std::size_t> FiniteQuotient::find(const ResidueMatrix& x) const {
  const ResidueMatrix r = x.modulus() == modulus_ ? x : x.reduce(modulus_);
  if (!ambient_.contains(r)) return std::nullopt;
  for (std::size_t i = 0; i < reps_.size(); ++i)
    if (same_class(r, reps_[i])) return i;
  return std::nullopt;
}

std::vector<std::size_t> FiniteQuotient::subgroup(const std::vector<std::size_t>& gens) const {
  std::set<std::size_t> elems{0};
  std::deque<std::size_t> frontier{0};
  while (!frontier.empty()) {
    const std::size_t x = frontier.front();
    frontier.pop_front();
    for (auto s : gens) {
      const std::size_t y = multiply(x, s);
      if (elems.insert(y).second) frontier.push_back(y);
    }
  }
  return {elems.begin(), elems.end()};
}

FiniteQuotient enumerate_quotient(const GroupDescriptor& big, const GroupDescriptor& small, std::size_t max_elements) {
  return enumerate_quotient(big, small, generators(big), {}, max_elements);
}

FiniteQuotient enumerate_quotient(const GroupDescriptor& big, const GroupDescriptor& small,
                                  const std::vector<SymplecticMatrix>& gens, std::vector<std::string> names,
                                  std::size_t max_elements) {
  if (big.genus() != small.genus()) throw GenusMismatchError("quotient of groups of different genus");
  if (gens.empty()) throw NoGeneratorsError("no generators for " + big.name());
  if (names.empty())
    for (std::size_t k = 0; k < gens.size(); ++k) names.push_back("s" + std::to_string(k + 1));
  if (names.size() != gens.size()) throw QuotientConfigError("generator names do not match generators");
  const long m = lcm_modulus(big.modulus(), small.modulus());
  FiniteQuotient q(big, small, m);
  q.gens_ = gens;
  q.names_ = std::move(names);
  for (const auto& s : gens)
    if (!member(s, big)) throw QuotientConfigError("generator outside " + big.name());
  for (const auto& k : generators(small))
    if (!member(k, big)) throw QuotientConfigError(small.name() + " is not contained in " + big.name());

  const std::size_t g = big.genus();
  std::vector<ResidueMatrix> gen_res;
  for (const auto& s : gens) gen_res.push_back(s.reduce(m));
  q.reps_.push_back(ResidueMatrix::identity(2 * g, m));
  q.lifts_.push_back(SymplecticMatrix::identity(g));
  q.words_.push_back({});
  for (std::size_t head = 0; head < q.reps_.size(); ++head) {
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const ResidueMatrix y = q.reps_[head] * gen_res[k];
      bool known = false;
      for (const auto& r : q.reps_)
        if (q.same_class(y, r)) {
          known = true;
          break;
        }
      if (known) continue;
      if (q.reps_.size() >= max_elements)
        throw QuotientConfigError("quotient " + big.name() + "/" + small.name() + " exceeds " +
                                  std::to_string(max_elements) + " elements");
      q.reps_.push_back(y);
      q.lifts_.push_back(q.lifts_[head] * gens[k]);
      auto w = q.words_[head];
      w.push_back(k);
      q.words_.push_back(std::move(w));
    }
  }
  const std::size_t n = q.reps_.size();
  q.table_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto k = q.find(q.reps_[i] * q.reps_[j]);
      if (!k) throw std::logic_error("quotient table: product left the enumerated classes");
      q.table_[i * n + j] = *k;
    }
  q.inverses_.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (q.table_[i * n + j] == 0) q.inverses_[i] = j;
  return q;
}

bool same_cosets(const FiniteQuotient& p, const FiniteQuotient& q) {
  if (p.order() != q.order() || p.modulus() != q.modulus()) return false;
  std::set<std::size_t> hit;
  for (std::size_t i = 0; i < p.order(); ++i) {
    const auto j = q.find(p.residues(i));
    if (!j) return false;
    hit.insert(*j);
  }
  return hit.size() == q.order();
}

bool kernel_is_normal(const FiniteQuotient& q, std::uint64_t seed, int samples, int word_length) {
  Rng rng(seed);
  const auto kernel_gens = generators(q.kernel());
  std::vector<SymplecticMatrix> ks = kernel_gens;
  for (int s = 0; s < samples; ++s) ks.push_back(random_word(kernel_gens, rng, word_length));
  for (const auto& t : generators(q.ambient())) {
    const SymplecticMatrix t_inv = t.inverse();
    for (const auto& k : ks)
      if (!member(t * k * t_inv, q.kernel())) return false;
  }
  return true;
}

bool QuotientMap::is_multiplicative() const {
  const std::size_t n = domain->order();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (image[domain->multiply(i, j)] != codomain->multiply(image[i], image[j])) return false;
  return true;
}

bool QuotientMap::is_bijective() const {
  if (domain->order() != codomain->order()) return false;
  std::set<std::size_t> s(image.begin(), image.end());
  return s.size() == codomain->order();
}

ResidueMatrix phi_residues(const SymplecticMatrix& gamma, long modulus) {
  const IntMatrix a = gamma.a();
  const IntMatrix at_inv = inverse_mod(a, modulus).transpose();
  return assemble(a, gamma.b() * Integer(2), gamma.c(), gamma.d() * Integer(2) - at_inv).reduce(modulus);
}

std::optional<SymplecticMatrix> phi_exact(const SymplecticMatrix& gamma) {
  const IntMatrix a = gamma.a();
  const Integer det = determinant(a);
  if (det != 1 && det != -1) return std::nullopt;
  const IntMatrix at_inv = unimodular_inverse(a).transpose();
  return SymplecticMatrix(assemble(a, gamma.b() * Integer(2), gamma.c(), gamma.d() * Integer(2) - at_inv));
}

ResidueMatrix fricke_phi_residues(const SymplecticMatrix& gamma, long modulus) {
  const IntMatrix a = gamma.a();
  const IntMatrix c = gamma.c();
  if (!c.divisible_by(2)) throw PreconditionError("fricke_phi_residues needs C = 0 (mod 2)");
  const IntMatrix at_inv = inverse_mod(a, modulus).transpose();
  return assemble(gamma.d() * Integer(2) - at_inv, -c.divided_by(2), gamma.b() * Integer(-4), a).reduce(modulus);
}

std::optional<SymplecticMatrix> factorizable_representative(const SymplecticMatrix& gamma,
                                                            const std::vector<SymplecticMatrix>& kernel_gens,
                                                            int depth) {
  std::vector<SymplecticMatrix> layer{gamma};
  std::vector<SymplecticMatrix> steps;
  for (const auto& k : kernel_gens) {
    steps.push_back(k);
    steps.push_back(k.inverse());
  }
  for (int d = 0; d <= depth; ++d) {
    for (const auto& x : layer) {
      const Integer det = determinant(x.a());
      if (det == 1 || det == -1) return x;
    }
    if (d == depth) break;
    std::vector<SymplecticMatrix> next;
    for (const auto& x : layer)
      for (const auto& s : steps) next.push_back(x * s);
    layer = std::move(next);
    if (layer.size() > 200000) break;
  }
  return std::nullopt;
}

namespace {

template <class F>
QuotientMap build_map(const FiniteQuotient& domain, const FiniteQuotient& codomain, F&& f) {
  QuotientMap map{&domain, &codomain, {}, true};
  const auto kernel_gens = generators(domain.kernel());
  for (std::size_t i = 0; i < domain.order(); ++i) {
    const SymplecticMatrix& x = domain.lift(i);
    const auto y = codomain.find(f(x, codomain.modulus()));
    if (!y) throw std::logic_error("quotient map: image outside " + codomain.ambient().name());
    map.image.push_back(*y);
    for (const auto& k : kernel_gens)
      for (const auto& rep : {x * k, k * x}) {
        const auto z = codomain.find(f(rep, codomain.modulus()));
        if (!z || *z != *y) map.representative_independent = false;
      }
  }
  return map;
}

}  // namespace

QuotientMap phi_iso(const FiniteQuotient& domain, const FiniteQuotient& codomain) {
  return build_map(domain, codomain, [](const SymplecticMatrix& x, long m) { return phi_residues(x, m); });
}

QuotientMap fricke_iso(const FiniteQuotient& domain, const FiniteQuotient& codomain) {
  return build_map(domain, codomain, [](const SymplecticMatrix& x, long m) { return fricke_phi_residues(x, m); });
}

Fingerprint fingerprint(const FiniteQuotient& q, const std::vector<std::size_t>& elements) {
  Fingerprint f;
  f.order = elements.size();
  f.is_abelian = is_commutative(q, elements);
  f.exponent = 1;
  f.order_counts.assign(elements.size() + 1, 0);
  for (auto x : elements) {
    const std::size_t o = q.element_order(x);
    f.exponent = std::lcm(f.exponent, o);
    ++f.order_counts[o];
  }
  for (const auto& c : conjugacy_classes(q, elements)) f.class_sizes.push_back(c.size());
  std::sort(f.class_sizes.begin(), f.class_sizes.end());
  return f;
}

StructureReport structure_report(const FiniteQuotient& q) {
  StructureReport r;
  std::vector<std::size_t> all(q.order());
  std::iota(all.begin(), all.end(), 0);
  const Fingerprint f = fingerprint(q, all);
  r.order = f.order;
  r.is_abelian = f.is_abelian;
  r.exponent = f.exponent;
  r.class_sizes = f.class_sizes;
  r.order_counts = f.order_counts;

  // Normal subgroups of exponent 2 are unions of classes of involutions closed under products.
  std::vector<std::vector<std::size_t>> involution_classes;
  for (const auto& c : conjugacy_classes(q, all))
    if (c.front() != 0 && q.element_order(c.front()) == 2) involution_classes.push_back(c);
  const std::size_t target = 16;
  if (q.order() % target == 0 && involution_classes.size() < 24) {
    for (std::uint32_t mask = 1; mask < (1u << involution_classes.size()) && !r.normal_elementary_abelian_16; ++mask) {
      std::set<std::size_t> n{0};
      for (std::size_t k = 0; k < involution_classes.size(); ++k)
        if (mask >> k & 1) n.insert(involution_classes[k].begin(), involution_classes[k].end());
      if (n.size() != target) continue;
      bool closed = true;
      for (auto x : n) {
        for (auto y : n)
          if (!n.count(q.multiply(x, y))) {
            closed = false;
            break;
          }
        if (!closed) break;
      }
      if (!closed) continue;
      r.normal_elementary_abelian_16 = true;
      r.normal_subgroup.assign(n.begin(), n.end());
      r.complement_order = q.order() / target;
      // G/N is abelian iff every commutator lies in N.
      for (auto x : all) {
        for (auto y : all) {
          const std::size_t comm = q.multiply(q.multiply(x, y), q.multiply(q.inverse(x), q.inverse(y)));
          if (!n.count(comm)) {
            r.complement_nonabelian = true;
            break;
          }
        }
        if (r.complement_nonabelian) break;
      }
    }
  }
  std::ostringstream os;
  if (r.order == 1)
    os << "trivial";
  else if (r.is_abelian && r.exponent == 2)
    os << "F2^" << static_cast<int>(std::log2(static_cast<double>(r.order)));
  else if (r.normal_elementary_abelian_16 && r.complement_order == 6 && r.complement_nonabelian)
    os << "F2^4 x| S3";
  else
    os << "order " << r.order << (r.is_abelian ? ", abelian" : ", nonabelian");
  r.description = os.str();
  return r;
}

std::vector<SymplecticMatrix> level_generators_m(std::size_t g) {
  std::vector<SymplecticMatrix> out;
  for (std::size_t i = 0; i < g; ++i) out.push_back(SymplecticMatrix::translation(unit_diagonal(g, i, 2)));
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = i + 1; j < g; ++j) out.push_back(SymplecticMatrix::translation(unit_symmetric(g, i, j)));
  return out;
}

namespace {

// The preimage in q.ambient() of a set of classes, as a residue predicate.
GroupDescriptor preimage(const FiniteQuotient& q, const std::vector<std::size_t>& classes, const std::string& name,
                         std::vector<SymplecticMatrix> gens) {
  const auto* quotient = &q;
  const std::set<std::size_t> members(classes.begin(), classes.end());
  return GroupDescriptor::custom(
      name, q.ambient().genus(), q.modulus(),
      [quotient, members](const ResidueMatrix& r) {
        const auto k = quotient->find(r);
        return k.has_value() && members.count(*k) > 0;
      },
      std::move(gens));
}

std::vector<std::string> named_matches(const FiniteQuotient& q, const std::vector<std::size_t>& classes,
                                       const std::vector<GroupDescriptor>& candidates) {
  // A group between the kernel and the ambient group is determined by the classes it contains;
  // membership of a candidate is constant on classes once it contains the kernel.
  const std::set<std::size_t> members(classes.begin(), classes.end());
  const auto kernel_gens = generators(q.kernel());
  std::vector<std::string> out;
  for (const auto& c : candidates) {
    bool ok = true;
    for (const auto& k : kernel_gens) ok = ok && member(k, c);
    for (const auto& s : generators(c)) ok = ok && member(s, q.ambient());
    for (std::size_t i = 0; i < q.order() && ok; ++i) ok = c.contains(q.residues(i).reduce(c.modulus())) == (members.count(i) > 0);
    if (ok) out.push_back(c.name());
  }
  return out;
}

}  // namespace

SubgroupMatch match_subgroups(const FiniteQuotient& gq, const FiniteQuotient& g00q, const QuotientMap& phi,
                              const std::vector<std::size_t>& given_generators, QuotientSide side) {
  std::vector<std::size_t> h_generators = given_generators;
  if (side == QuotientSide::gamma00) {
    std::vector<std::size_t> pre(g00q.order(), gq.order());
    for (std::size_t x = 0; x < gq.order(); ++x) pre[phi.image[x]] = x;
    for (auto& x : h_generators) {
      if (x >= g00q.order() || pre[x] == gq.order()) throw NotASubgroupError("generator outside the image of phi");
      x = pre[x];
    }
  }
  for (auto x : h_generators)
    if (x >= gq.order()) throw NotASubgroupError("subgroup generator index out of range");
  const std::vector<std::size_t> h = gq.subgroup(h_generators);
  std::vector<std::size_t> phi_h;
  for (auto x : h) phi_h.push_back(phi.image[x]);
  std::sort(phi_h.begin(), phi_h.end());
  {
    std::set<std::size_t> s(phi_h.begin(), phi_h.end());
    for (auto x : phi_h)
      for (auto y : phi_h)
        if (!s.count(g00q.multiply(x, y))) throw NotASubgroupError("image of H under phi is not closed");
  }
  const std::size_t g = gq.ambient().genus();

  std::vector<SymplecticMatrix> gens_prime = generators(gq.kernel());
  std::vector<SymplecticMatrix> gens = generators(g00q.kernel());
  std::vector<std::string> names_prime, names;
  for (std::size_t k = 0; k < gens_prime.size(); ++k) names_prime.push_back("k" + std::to_string(k + 1));
  for (std::size_t k = 0; k < gens.size(); ++k) names.push_back("k" + std::to_string(k + 1));
  std::vector<std::size_t> h_lift_index;
  for (auto x : h_generators) {
    gens_prime.push_back(gq.lift(x));
    names_prime.push_back("h" + std::to_string(x));
    gens.push_back(g00q.lift(phi.image[x]));
    names.push_back("phi(h" + std::to_string(x) + ")");
  }
  GroupDescriptor gamma_prime = preimage(gq, h, "Gamma'", gens_prime);
  GroupDescriptor gamma = preimage(g00q, phi_h, "Gamma", gens);

  const FiniteQuotient qp = enumerate_quotient(gamma_prime, gq.kernel(), gens_prime, names_prime);
  const FiniteQuotient qg = enumerate_quotient(gamma, g00q.kernel(), gens, names);
  std::vector<std::size_t> all_p(qp.order()), all_g(qg.order());
  std::iota(all_p.begin(), all_p.end(), 0);
  std::iota(all_g.begin(), all_g.end(), 0);

  // Explicit map qp → qg: through G, φ, and back.
  bool map_ok = qp.order() == h.size() && qg.order() == h.size();
  if (map_ok) {
    std::vector<std::size_t> image(qp.order());
    for (std::size_t i = 0; i < qp.order(); ++i) {
      const auto in_g = gq.find(qp.residues(i));
      const auto back = in_g ? qg.find(g00q.residues(phi.image[*in_g])) : std::nullopt;
      if (!back) {
        map_ok = false;
        break;
      }
      image[i] = *back;
    }
    if (map_ok) {
      std::set<std::size_t> s(image.begin(), image.end());
      map_ok = s.size() == qg.order();
      for (std::size_t i = 0; i < qp.order() && map_ok; ++i)
        for (std::size_t j = 0; j < qp.order() && map_ok; ++j)
          map_ok = image[qp.multiply(i, j)] == qg.multiply(image[i], image[j]);
    }
  }

  const std::vector<GroupDescriptor> named_g00{GroupDescriptor::principal(g, 2), GroupDescriptor::level_24(g),
                                               GroupDescriptor::gamma00_2(g), GroupDescriptor::gamma1_2(g),
                                               GroupDescriptor::level_24_squared(g)};
  const std::vector<GroupDescriptor> named_g0{GroupDescriptor::gamma1_2(g), GroupDescriptor::level_24_squared(g),
                                              GroupDescriptor::gamma0_2(g), GroupDescriptor::gamma00_2(g),
                                              GroupDescriptor::principal(g, 2)};
  SubgroupMatch out{
      .h = h,
      .phi_h = phi_h,
      .gamma = gamma,
      .gamma_prime = gamma_prime,
      .h_fingerprint = fingerprint(gq, h),
      .gamma_fingerprint = fingerprint(qg, all_g),
      .gamma_prime_fingerprint = fingerprint(qp, all_p),
      .explicit_map_ok = map_ok,
      .gamma_matches = named_matches(g00q, phi_h, named_g00),
      .gamma_prime_matches = named_matches(gq, h, named_g0),
  };
  return out;
}

}  // namespace siegel
