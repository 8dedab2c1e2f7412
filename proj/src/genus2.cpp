#include "siegel/genus2.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "siegel/identities.hpp"
#include "siegel/quotients.hpp"

namespace siegel {

namespace {

constexpr std::size_t kGenus = 2;

std::string label_for(const SymplecticMatrix& x) {
  const IntMatrix one = IntMatrix::identity(kGenus);
  std::ostringstream os;
  if (x.a() == one && x.d() == one && x.c().is_zero())
    os << "gamma_S S=" << x.b().to_string();
  else if (x.a() == one && x.d() == one && x.b().is_zero())
    os << "tgamma_2S 2S=" << x.c().to_string();
  else if (x.b().is_zero() && x.c().is_zero())
    os << "gamma' A=" << x.a().to_string();
  else
    os << x.entries().to_string();
  return os.str();
}

double max_abs(const std::array<Complex, 4>& v) {
  double m = 0;
  for (const auto& x : v) m = std::max(m, std::abs(x));
  return m;
}

ThetaCharacteristic lower(std::uint64_t b) { return ThetaCharacteristic(bits_of(kGenus, 0), bits_of(kGenus, b)); }

// f_a|_{γ,k/2,v}(τ) for all a at once; k = 1 acts on f_a, k = 2 on f_a² with v².
std::array<Complex, 4> slashed(const SymplecticMatrix& gamma, const SiegelPoint& tau, int k, double tol) {
  const auto image = f_values(act(gamma, tau), tol);
  const Complex v = v_theta(gamma, tau, tol);
  const Complex multiplier = k == 1 ? v : v * v;
  const Complex root = sqrt_det_principal(gamma, tau);
  std::array<Complex, 4> out;
  for (std::size_t a = 0; a < 4; ++a) {
    const Complex value = k == 1 ? image[a] : image[a] * image[a];
    out[a] = std::pow(root, -k) * value / multiplier;
  }
  return out;
}

struct Sampler {
  Rng rng;
  SymplecticMatrix draw(const std::vector<SymplecticMatrix>& gens) {
    return random_word(gens, rng, 1 + static_cast<int>(rng.index(12)));
  }
};

}  // namespace

int sign_action(int generator, std::uint64_t a) {
  const auto bits = bits_of(kGenus, a);
  switch (generator) {
    case 1:
      return bits[0] ? -1 : 1;
    case 2:
      return bits[1] ? -1 : 1;
    case 3:
      return (bits[0] & bits[1]) ? -1 : 1;
  }
  throw std::invalid_argument("sign_action: generator must be 1, 2 or 3");
}

ProjectivePoint3::ProjectivePoint3(std::array<Complex, 4> x) : x_(x) {
  if (max_abs(x_) == 0) throw std::invalid_argument("ProjectivePoint3: all coordinates are zero");
}

std::size_t ProjectivePoint3::pivot() const {
  std::size_t k = 0;
  for (std::size_t i = 1; i < 4; ++i)
    if (std::abs(x_[i]) > std::abs(x_[k])) k = i;
  return k;
}

std::array<Complex, 4> ProjectivePoint3::normalized() const {
  const Complex p = x_[pivot()];
  std::array<Complex, 4> out;
  for (std::size_t i = 0; i < 4; ++i) out[i] = x_[i] / p;
  return out;
}

bool ProjectivePoint3::equivalent(const ProjectivePoint3& other, double tol) const {
  const std::size_t k = pivot();
  if (std::abs(other.x_[k]) <= tol * max_abs(other.x_)) return false;
  for (std::size_t i = 0; i < 4; ++i)
    if (std::abs(x_[i] / x_[k] - other.x_[i] / other.x_[k]) > tol) return false;
  return true;
}

ProjectivePoint3 squaring_map(const ProjectivePoint3& p) {
  std::array<Complex, 4> y;
  for (std::size_t i = 0; i < 4; ++i) y[i] = p.coordinates()[i] * p.coordinates()[i];
  return ProjectivePoint3(y);
}

std::vector<ProjectivePoint3> squaring_preimages(const ProjectivePoint3& q, double tol) {
  const auto y = q.normalized();
  std::array<Complex, 4> root;
  for (std::size_t i = 0; i < 4; ++i) root[i] = std::sqrt(y[i]);
  std::vector<ProjectivePoint3> out;
  for (unsigned signs = 0; signs < 16; ++signs) {
    std::array<Complex, 4> x;
    for (std::size_t i = 0; i < 4; ++i) x[i] = (signs >> i & 1) ? -root[i] : root[i];
    const ProjectivePoint3 p(x);
    if (!squaring_map(p).equivalent(q, tol)) continue;
    const bool seen = std::any_of(out.begin(), out.end(), [&](const ProjectivePoint3& o) { return o.equivalent(p, tol); });
    if (!seen) out.push_back(p);
  }
  return out;
}

Complex igusa_quartic(const std::array<Complex, 5>& x) {
  const Complex s = x[0] * x[1] + x[0] * x[2] + x[1] * x[2] - x[3] * x[3];
  return s * s - 4.0 * x[0] * x[1] * x[2] * (x[0] + x[1] + x[2] + x[3] + x[4]);
}

std::array<Complex, 4> f_values(const SiegelPoint& tau, double tol) {
  if (tau.genus() != kGenus) throw GenusMismatchError("f_values: genus 2 only");
  const auto v = second_order_all(tau, tol);
  return {v[0], v[1], v[2], v[3]};
}

std::vector<MonomialEntry> squared_action(const SymplecticMatrix& gamma) {
  auto entries = second_order_action(gamma);
  for (auto& e : entries) e.phase = e.phase * e.phase;
  return entries;
}

SymplecticMatrix phi_inverse_exact(const SymplecticMatrix& y) {
  const IntMatrix b = y.b();
  if (!b.divisible_by(2) || !y.c().divisible_by(2))
    throw PreconditionError("phi_inverse_exact needs an element of Gamma00(2)");
  const IntMatrix at_inv = unimodular_inverse(y.a()).transpose();
  const IntMatrix d = y.d() + at_inv;
  if (!d.divisible_by(2)) throw PreconditionError("phi_inverse_exact: D + tA^-1 is not even");
  return SymplecticMatrix::from_blocks(y.a(), b.divided_by(2), y.c(), d.divided_by(2));
}

SignReport verify_integer_weight_subring(std::uint64_t seed, int samples, double tol) {
  SignReport r;
  Rng rng(seed);
  const auto m = level_generators_m(kGenus);
  for (int s = 0; s < samples; ++s) {
    const SiegelPoint tau = random_point(kGenus, rng);
    const auto f = f_values(tau, tol);
    std::array<Complex, 4> t;
    for (std::uint64_t b = 0; b < 4; ++b) t[b] = theta_constant(lower(b), tau, tol);
    for (int i = 1; i <= 3; ++i) {
      const SiegelPoint moved = tau.translated(m[i - 1].b());
      const auto fm = f_values(moved, tol);
      for (std::uint64_t a = 0; a < 4; ++a) {
        const Complex ratio = fm[a] / f[a];
        r.max_sign_residual = std::max(r.max_sign_residual, std::abs(ratio - double(sign_action(i, a))));
        r.max_square_residual = std::max(r.max_square_residual, std::abs(ratio * ratio - 1.0));
        const Complex tb = theta_constant(lower(a), moved, tol);
        r.max_theta_square_residual = std::max(r.max_theta_square_residual, std::abs(tb * tb / (t[a] * t[a]) - 1.0));
      }
    }
    ++r.samples;
  }
  // Exponent table rows e_i(a) over F₂, eliminated to row-echelon form.
  std::vector<unsigned> rows;
  for (int i = 1; i <= 3; ++i) {
    unsigned row = 0;
    for (std::uint64_t a = 0; a < 4; ++a)
      if (sign_action(i, a) < 0) row |= 1u << a;
    rows.push_back(row);
  }
  for (unsigned bit = 0; bit < 4; ++bit) {
    auto it = std::find_if(rows.begin() + r.sign_rank, rows.end(), [bit](unsigned x) { return x >> bit & 1; });
    if (it == rows.end()) continue;
    std::iter_swap(rows.begin() + r.sign_rank, it);
    for (std::size_t k = 0; k < rows.size(); ++k)
      if (k != static_cast<std::size_t>(r.sign_rank) && (rows[k] >> bit & 1)) rows[k] ^= rows[r.sign_rank];
    ++r.sign_rank;
  }
  std::set<std::array<int, 4>> patterns;
  for (unsigned e = 0; e < 8; ++e) {
    std::array<int, 4> p{1, 1, 1, 1};
    for (int i = 1; i <= 3; ++i)
      if (e >> (i - 1) & 1)
        for (std::uint64_t a = 0; a < 4; ++a) p[a] *= sign_action(i, a);
    patterns.insert(p);
  }
  r.distinct_patterns = static_cast<int>(patterns.size());
  r.trivial_on_f00 = sign_action(1, 0) == 1 && sign_action(2, 0) == 1 && sign_action(3, 0) == 1;
  return r;
}

GModuleReport verify_G_module_iso(const std::vector<SymplecticMatrix>& gamma0_generators,
                                  const std::vector<SymplecticMatrix>& h_generators, std::uint64_t seed, int samples,
                                  double tol) {
  GModuleReport report;
  Rng rng(seed);
  std::vector<SiegelPoint> points;
  for (int s = 0; s < samples; ++s) points.push_back(random_point(kGenus, rng));
  std::vector<std::array<Complex, 4>> base;
  for (const auto& tau : points) base.push_back(f_values(tau, tol));

  for (const auto& x : gamma0_generators) {
    const auto y = phi_exact(x);
    if (!y) throw PreconditionError("verify_G_module_iso: generator without an integral phi image");
    GModuleCheck c{label_for(x), x, *y, second_order_action(*y), squared_action(x), false, 0.0};
    c.exact_equal = c.f_side == c.f2_side;
    for (std::size_t s = 0; s < points.size(); ++s) {
      const auto& f = base[s];
      const double scale = std::max(max_abs(f), max_abs(f) * max_abs(f));
      const auto lhs1 = slashed(*y, points[s], 1, tol);
      const auto lhs2 = slashed(x, points[s], 2, tol);
      for (std::size_t a = 0; a < 4; ++a) {
        const auto& e1 = c.f_side[a];
        const auto& e2 = c.f2_side[a];
        const Complex p1 = e1.phase.to_complex() * f[e1.target];
        const Complex p2 = e2.phase.to_complex() * f[e2.target] * f[e2.target];
        c.numeric_residual = std::max({c.numeric_residual, std::abs(lhs1[a] - p1) / scale, std::abs(lhs2[a] - p2) / scale});
      }
    }
    report.all_exact = report.all_exact && c.exact_equal;
    report.max_residual = std::max(report.max_residual, c.numeric_residual);
    report.checks.push_back(std::move(c));
  }

  // The linear map f_a ↦ f_a² intertwines the actions: coefficients of f_a|_y in the basis
  // f_b, measured at one point, must reproduce f_a²|_x in the basis f_b² at the next point.
  for (const auto& y : h_generators) {
    const SymplecticMatrix x = phi_inverse_exact(y);
    const auto table = second_order_action(y);
    for (std::size_t s = 0; s < points.size(); ++s) {
      const auto& here = points[s];
      const auto& there = points[(s + 1) % points.size()];
      const auto f1 = slashed(y, here, 1, tol);
      const auto f2 = slashed(x, there, 2, tol);
      const auto& f_here = base[s];
      const auto& f_there = base[(s + 1) % points.size()];
      const double scale = max_abs(f_there) * max_abs(f_there);
      for (std::size_t a = 0; a < 4; ++a) {
        const std::size_t t = table[a].target;
        const Complex coefficient = f1[a] / f_here[t];
        report.witness_residual =
            std::max(report.witness_residual, std::abs(f2[a] - coefficient * f_there[t] * f_there[t]) / scale);
      }
    }
  }
  return report;
}

FrickeReport verify_fricke_identities(std::uint64_t seed, int point_samples, int group_samples, double tol) {
  FrickeReport r;
  r.v_theta_j2 = v_theta_fricke(kGenus, tol);
  r.v_theta_root_error = std::abs(std::pow(r.v_theta_j2, 8) - 1.0);
  Rng rng(seed);
  bool first = true;
  for (int s = 0; s < point_samples; ++s) {
    const SiegelPoint tau = random_point(kGenus, rng);
    const auto fj = f_values(fricke_act(tau), tol);
    const Complex root = sqrt_det_tau_holomorphic(tau);
    std::array<Complex, 4> th;
    for (std::uint64_t a = 0; a < 4; ++a) th[a] = theta_constant(lower(a), tau, tol);
    for (std::uint64_t a = 0; a < 4; ++a) {
      const Complex ratio = fj[a] / (root * th[a]);
      if (first) {
        r.ratio_constant = ratio;
        first = false;
      }
      r.ratio_spread = std::max(r.ratio_spread, std::abs(ratio - r.ratio_constant));
      r.ratio_vs_multiplier = std::max(r.ratio_vs_multiplier, std::abs(ratio - r.v_theta_j2));
      const Complex slash_value = fj[a] / (r.v_theta_j2 * root);
      r.slash_residual = std::max(r.slash_residual, std::abs(slash_value - th[a]) / max_abs(th));
    }
    const SiegelPoint back = fricke_act(fricke_act(tau));
    r.involution_residual = std::max(r.involution_residual, (back.tau() - tau.tau()).cwiseAbs().maxCoeff());
    r.hadamard_residual =
        std::max({r.hadamard_residual, riemann_relation(tau, tol).relative, riemann_relation_inverse(tau, tol).relative});
  }

  Sampler sampler{Rng(seed ^ 0x9e3779b97f4a7c15ULL)};
  auto conj_check = [&](const std::string& label, const std::vector<SymplecticMatrix>& elements,
                        const GroupDescriptor& target) {
    MembershipCheck c{label, 0, 0};
    for (const auto& x : elements) {
      ++c.tested;
      if (!member(fricke_conjugate(x), target)) ++c.failures;
    }
    r.memberships.push_back(c);
    return c.ok();
  };
  auto draw = [&](const GroupDescriptor& g, int n) {
    const auto gens = generators(g);
    std::vector<SymplecticMatrix> out;
    for (int k = 0; k < n; ++k) out.push_back(sampler.draw(gens));
    return out;
  };

  const auto k2 = GroupDescriptor::level_24_squared(kGenus);
  const auto g0 = GroupDescriptor::gamma0_2(kGenus);
  const auto g00 = GroupDescriptor::gamma00_2(kGenus);
  const auto g04 = GroupDescriptor::gamma0_4(kGenus);
  conj_check("Gamma^2(2,4) generators", generators(k2), k2);
  conj_check("Gamma^2(2,4) samples", draw(k2, group_samples), k2);
  conj_check("Gamma0(2) generators", generators(g0), g0);
  conj_check("Gamma0(2) samples", draw(g0, group_samples), g0);
  {
    // Membership in Γ₂²(2,4) is preserved both ways on Γ₀(2) samples.
    MembershipCheck c{"Gamma^2(2,4) membership equivalence on Gamma0(2) samples", 0, 0};
    for (const auto& x : draw(g0, group_samples)) {
      ++c.tested;
      if (member(x, k2) != member(fricke_conjugate(x), k2)) ++c.failures;
    }
    r.memberships.push_back(c);
  }
  conj_check("Gamma00(2) generators into Gamma0(4)", generators(g00), g04);
  conj_check("Gamma00(2) samples into Gamma0(4)", draw(g00, group_samples), g04);
  conj_check("Gamma0(4) generators into Gamma00(2)", generators(g04), g00);
  conj_check("Gamma0(4) samples into Gamma00(2)", draw(g04, group_samples), g00);

  for (const auto& g : {GroupDescriptor::level_24(kGenus), GroupDescriptor::principal(kGenus, 2),
                        GroupDescriptor::gamma1_2(kGenus), GroupDescriptor::gamma00_2(kGenus)}) {
    bool fixed = true;
    for (const auto& x : generators(g)) fixed = fixed && member(fricke_conjugate(x), g);
    for (const auto& x : draw(g, 20)) fixed = fixed && member(fricke_conjugate(x), g);
    (fixed ? r.fixed_groups : r.moved_groups).push_back(g.name());
  }
  return r;
}

}  // namespace siegel
