#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "siegel/genus2.hpp"
#include "siegel/genus3.hpp"
#include "siegel/identities.hpp"
#include "siegel/quotients.hpp"

using namespace siegel;

namespace {

constexpr std::uint64_t kSeed = 1;

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void require(bool condition, const std::string& what) {
    if (!condition) {
      ok = false;
      detail << "FAILED " << what << "; ";
    }
  }
  template <class T>
  void note(const std::string& name, const T& value) {
    detail << name << "=" << value << "; ";
  }
};

struct Criterion {
  int number;
  std::string name;
  double limit_seconds;
  std::function<void(Outcome&)> run;
};

std::vector<SiegelPoint> random_points(std::size_t g, Rng& rng, int n) {
  std::vector<SiegelPoint> out;
  for (int k = 0; k < n; ++k) out.push_back(random_point(g, rng));
  return out;
}

CVector random_vector(std::size_t g, Rng& rng) {
  CVector z(static_cast<Eigen::Index>(g));
  for (auto& c : z) c = Complex(rng.uniform(-0.5, 0.5), rng.uniform(-0.5, 0.5));
  return z;
}

bool contains(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

void census(Outcome& out) {
  for (std::size_t g = 1; g <= 4; ++g) {
    const std::size_t half = std::size_t{1} << (g - 1), full = std::size_t{1} << g;
    const std::size_t even = enumerate_characteristics(g, ParityFilter::even).size();
    const std::size_t odd = enumerate_characteristics(g, ParityFilter::odd).size();
    out.require(even == half * (full + 1) && odd == half * (full - 1), "census g=" + std::to_string(g));
    out.note("g" + std::to_string(g), std::to_string(even) + "/" + std::to_string(odd));
  }
}

void odd_vanishing(Outcome& out) {
  Rng rng(kSeed);
  double worst = 0;
  for (std::size_t g : {2, 3})
    for (const auto& tau : random_points(g, rng, 10))
      for (const auto& m : enumerate_characteristics(g, ParityFilter::odd))
        worst = std::max(worst, std::abs(theta_constant(m, tau)));
  out.note("max|odd theta|", worst);
  out.require(worst < 1e-10, "odd theta constants < 1e-10");
}

void transformation(Outcome& out) {
  Rng rng(kSeed);
  const auto gens = generators(GroupDescriptor::full(2));
  double residual = 0, kappa8 = 0;
  int kappa4_mismatch = 0;
  for (int k = 0; k < 100; ++k) {
    const SymplecticMatrix gamma = random_word(gens, rng, 1 + static_cast<int>(rng.index(12)));
    const auto r = verify_transformation(gamma, random_point(2, rng));
    residual = std::max(residual, r.max_residual);
    kappa8 = std::max(kappa8, std::abs(std::pow(r.kappa, 8) - 1.0));
    const Complex k4 = std::pow(r.kappa, 4);
    if ((k4.real() > 0 ? 1 : -1) != kappa_pow4(gamma) || std::abs(std::abs(k4.real()) - 1) > 1e-6) ++kappa4_mismatch;
  }
  const auto level2 = generators(GroupDescriptor::principal(2, 2));
  double kappa2 = 0;
  for (int k = 0; k < 100; ++k) {
    const SymplecticMatrix gamma = random_word(level2, rng, 1 + static_cast<int>(rng.index(12)));
    const Complex kappa = extract_kappa(gamma, random_point(2, rng));
    kappa2 = std::max(kappa2, std::abs(kappa * kappa - double(kappa_pow2(gamma))));
  }
  out.note("residual", residual);
  out.note("|k^8-1|", kappa8);
  out.note("k^4 mismatches", kappa4_mismatch);
  out.note("|k^2-formula|", kappa2);
  out.require(residual < 1e-8, "transformation residual < 1e-8");
  out.require(kappa8 < 1e-6, "|kappa^8 - 1| < 1e-6");
  out.require(kappa4_mismatch == 0, "kappa^4 = (-1)^Tr(tBC)");
  out.require(kappa2 < 1e-6, "kappa^2 on Gamma(2)");
}

void riemann(Outcome& out) {
  Rng rng(kSeed);
  double rel = 0;
  for (std::size_t g : {2, 3})
    for (const auto& tau : random_points(g, rng, 10))
      rel = std::max({rel, riemann_relation(tau).relative, riemann_relation_inverse(tau).relative});
  double addition = 0;
  for (int k = 0; k < 10; ++k) {
    const SiegelPoint tau = random_point(2, rng);
    const CVector z = random_vector(2, rng), w = random_vector(2, rng);
    addition = std::max(addition, addition_formula(tau, z, w).relative);
  }
  out.note("relations", rel);
  out.note("addition", addition);
  out.require(rel < 1e-8, "Riemann relations < 1e-8");
  out.require(addition < 1e-8, "addition formula < 1e-8");
}

void quotient_orders(Outcome& out) {
  const auto g0 = enumerate_quotient(GroupDescriptor::gamma0_2(2), GroupDescriptor::level_24_squared(2));
  const auto f2 = enumerate_quotient(GroupDescriptor::level_24_squared(2), GroupDescriptor::level_24(2));
  const SymmetrizationGroup sym = symmetrization_group();
  const StructureReport s = structure_report(g0);
  out.note("index", g0.order());
  out.note("genus2", f2.order());
  out.note("genus3", sym.quotient.order());
  out.note("structure", s.description);
  out.require(g0.order() == 96, "[Gamma0(2) : Gamma^2(2,4)] = 96");
  out.require(f2.order() == 8, "genus-2 quotient of order 8");
  out.require(sym.quotient.order() == 64 && sym.words_match_bfs, "genus-3 quotient of order 64 matching 2^6 words");
  out.require(s.normal_elementary_abelian_16, "normal exponent-2 subgroup of order 16");
  out.require(s.complement_order == 6 && s.complement_nonabelian, "nonabelian quotient of order 6");
}

void phi_isomorphism(Outcome& out) {
  const auto g0 = enumerate_quotient(GroupDescriptor::gamma0_2(2), GroupDescriptor::level_24_squared(2));
  const auto g00 = enumerate_quotient(GroupDescriptor::gamma00_2(2), GroupDescriptor::level_24(2));
  const QuotientMap phi = phi_iso(g0, g00);
  std::vector<std::size_t> images;
  for (const auto& x : generators(GroupDescriptor::gamma0_2(2))) images.push_back(phi.image[*g0.find(x)]);
  const std::size_t generated = g00.subgroup(images).size();
  const auto m = level_generators_m(2);
  std::vector<std::size_t> h;
  for (std::size_t i = 0; i < 2; ++i) {
    h.push_back(*g00.find(m[i]));
    h.push_back(*g00.find(m[i].transpose()));
  }
  const SubgroupMatch match = match_subgroups(g0, g00, phi, h, QuotientSide::gamma00);
  out.note("generated", generated);
  out.note("|H|", match.h.size());
  out.require(phi.is_multiplicative(), "phi multiplicative");
  out.require(phi.is_bijective(), "phi bijective");
  out.require(generated == g00.order(), "generator images generate the codomain");
  out.require(contains(match.gamma_matches, "Gamma(2)"), "Gamma = Gamma(2)");
  out.require(contains(match.gamma_prime_matches, "Gamma1(2)"), "Gamma' = Gamma1(2)");
}

void g_module(Outcome& out) {
  const auto m = level_generators_m(2);
  const std::vector<SymplecticMatrix> h{m[0], m[1], m[0].transpose(), m[1].transpose()};
  const GModuleReport r = verify_G_module_iso(generators(GroupDescriptor::gamma0_2(2)), h, kSeed, 3);
  out.note("generators", r.checks.size());
  out.note("slash residual", r.max_residual);
  out.require(r.all_exact, "monomial matrices agree exactly");
  out.require(r.max_residual < 1e-8, "slash residual < 1e-8");
}

void fricke(Outcome& out) {
  const FrickeReport r = verify_fricke_identities(kSeed, 5, 100);
  for (const auto& c : r.memberships) out.require(c.ok() && c.tested > 0, c.label);
  out.note("membership checks", r.memberships.size());
  out.note("ratio spread", r.ratio_spread);
  out.require(r.ratio_spread < 1e-8, "Fricke ratio constant within 1e-8");
}

void fibers(Outcome& out) {
  Rng rng(kSeed);
  int eight = 0, bad = 0;
  for (int k = 0; k < 100; ++k) {
    std::array<Complex, 4> x;
    for (auto& c : x) c = Complex(rng.uniform(-1, 1), rng.uniform(-1, 1));
    const ProjectivePoint3 q(x);
    const auto pre = squaring_preimages(q);
    eight += pre.size() == 8;
    for (const auto& p : pre) bad += !squaring_map(p).equivalent(q, 1e-9);
  }
  out.note("points with 8 preimages", eight);
  out.require(eight == 100 && bad == 0, "100 fibers of size 8");
}

void r16(Outcome& out) {
  Rng rng(kSeed);
  double worst = 0;
  for (const auto& tau : random_points(3, rng, 10)) worst = std::max(worst, verify_r16(tau).relative);
  out.note("relative", worst);
  out.require(worst < 1e-8, "R16 relative residual < 1e-8");
}

void classification(Outcome& out) {
  Rng rng(kSeed);
  const ClassificationReport r = classify_all(random_points(3, rng, 3));
  const FormalThetaCombination example = symmetrize(example_m(), symmetrization_group());
  bool example_ok = example.terms().size() == 4;
  for (const auto& n : example_n()) example_ok = example_ok && example.coefficient(n) == Cyclotomic8(16);
  out.note("nonvanishing", r.nonvanishing);
  out.note("max vanishing", r.max_vanishing_ratio);
  out.note("min nonvanishing", r.min_nonvanishing_ratio);
  out.require(r.entries.size() == 378 && r.nonvanishing == 42, "42 of 378 nonvanishing");
  out.require(r.criterion_matches, "nonvanishing iff m1' = m2'");
  out.require(example_ok, "example coefficient 16 on N1..N4 and 0 elsewhere");
  out.require(r.gap_violations == 0 && r.max_vanishing_ratio < 1e-8 && r.min_nonvanishing_ratio > 1e-6,
              "numerical gap");
}

void q_invariance(Outcome& out) {
  const QInvarianceReport r = verify_q_invariance(kSeed, 5);
  out.note("max |ratio - 1|", r.max_ratio_error);
  out.require(r.samples == 5, "5 samples");
  out.require(r.max_ratio_error < 1e-8, "q invariant within 1e-8");
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "characteristic census", 1, census},
      {2, "odd theta vanishing", 10, odd_vanishing},
      {3, "transformation formula", 60, transformation},
      {4, "Riemann identities", 60, riemann},
      {5, "quotient orders", 120, quotient_orders},
      {6, "isomorphism phi", 60, phi_isomorphism},
      {7, "G-module equivariance", 60, g_module},
      {8, "Fricke suite", 60, fricke},
      {9, "degree-8 fibers", 1, fibers},
      {10, "R16 identity", 120, r16},
      {11, "Phi(M) classification", 600, classification},
      {12, "q-invariance", 30, q_invariance},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(out);
    } catch (const std::exception& e) {
      out.require(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.require(seconds < c.limit_seconds, "time limit");
    failures += !out.ok;
    std::printf("%s  criterion %2d  %-24s %8.2f s / %4.0f s  %s\n", out.ok ? "PASS" : "FAIL", c.number,
                c.name.c_str(), seconds, c.limit_seconds, out.detail.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
