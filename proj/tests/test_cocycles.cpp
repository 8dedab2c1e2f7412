#include <cmath>
#include <vector>

#include "doctest.h"
#include "siegel/cocycles.hpp"
#include "siegel/groups.hpp"
#include "siegel/quotients.hpp"

using namespace siegel;

namespace {

const double kPi = std::acos(-1.0);

std::vector<SymplecticMatrix> theta_group_generators(std::size_t g) {
  auto gens = generators(GroupDescriptor::theta_level(g, 1));
  gens.push_back(SymplecticMatrix::standard_j(g));
  return gens;
}

}  // namespace

TEST_SUITE("cocycles") {
  TEST_CASE("cyclotomic arithmetic") {
    const Cyclotomic8 z = Cyclotomic8::zeta(1);
    CHECK(Cyclotomic8::zeta(8) == Cyclotomic8(1));
    CHECK(Cyclotomic8::zeta(4) == Cyclotomic8(-1));
    CHECK(Cyclotomic8::zeta(-1) == Cyclotomic8::zeta(7));
    CHECK(Cyclotomic8::i_pow(1) * Cyclotomic8::i_pow(1) == Cyclotomic8(-1));
    CHECK(z.root_index() == 1);
    CHECK(Cyclotomic8(2).root_index() == -1);
    CHECK((z - z).is_zero());
    const auto w = (z + Cyclotomic8::zeta(3)).to_complex();
    CHECK(std::abs(w - Complex(0, std::sqrt(2.0))) < 1e-15);
    for (int k = 0; k < 8; ++k) {
      CHECK(std::abs(Cyclotomic8::zeta(k).to_complex() - std::polar(1.0, kPi * k / 4)) < 1e-15);
      CHECK(Cyclotomic8::zeta(k).root_index() == k);
    }
  }

  TEST_CASE("phi examples") {
    for (std::size_t g = 1; g <= 3; ++g)
      for (const auto& m : enumerate_characteristics(g)) CHECK(phi(m, SymplecticMatrix::identity(g)).eighths == 0);
    const auto b1 = level_generators_m(3)[0];
    CHECK(phi(ThetaCharacteristic::parse("001|011"), b1).eighths == 0);
    CHECK(phi(ThetaCharacteristic::parse("100|011"), b1).eighths == 2);
    const PhiValue p{3};
    CHECK(p.value() == doctest::Approx(0.375));
    CHECK(p.exp_doubled() == Cyclotomic8::zeta(6));
    Rng rng(1);
    const auto gens = generators(GroupDescriptor::full(3));
    for (int k = 0; k < 50; ++k) {
      const SymplecticMatrix x = random_word(gens, rng, 10);
      for (const auto& m : enumerate_characteristics(3)) CHECK(phi(m, x).exp_doubled().root_index() % 2 == 0);
    }
  }

  TEST_CASE("kappa powers") {
    CHECK(kappa_pow4(SymplecticMatrix::identity(2)) == 1);
    CHECK(kappa_pow4(SymplecticMatrix::standard_j(1)) == -1);
    CHECK(kappa_pow4(SymplecticMatrix::standard_j(2)) == 1);
    const SymplecticMatrix x(IntMatrix{{3, 2}, {4, 3}});
    CHECK(kappa_pow2(x) == -1);
    CHECK(kappa_pow2(SymplecticMatrix::identity(3)) == 1);
    CHECK_THROWS_AS(kappa_pow2(SymplecticMatrix::standard_j(1)), PreconditionError);
    const SiegelPoint tau = SiegelPoint::imaginary_identity(1);
    CHECK(std::abs(std::pow(extract_kappa(x, tau), 2) + 1.0) < 1e-10);
    // ϑ(-1/τ) = (τ/i)^{1/2} ϑ(τ) against the principal root of -τ.
    CHECK(std::abs(extract_kappa(SymplecticMatrix::standard_j(1), tau) - std::polar(1.0, kPi / 4)) < 1e-12);
    CHECK(std::abs(extract_kappa(SymplecticMatrix::identity(2), SiegelPoint::imaginary_identity(2)) - 1.0) < 1e-14);
  }

  TEST_CASE("kappa squared and fourth power on samples") {
    Rng rng(2);
    const auto level2 = generators(GroupDescriptor::principal(2, 2));
    for (int k = 0; k < 20; ++k) {
      const SymplecticMatrix x = random_word(level2, rng, 8);
      CHECK(kappa_pow4(x) == 1);
      const Complex kappa = extract_kappa(x, random_point(2, rng));
      CHECK(std::abs(kappa * kappa - double(kappa_pow2(x))) < 1e-8);
    }
    const auto full = generators(GroupDescriptor::full(2));
    for (int k = 0; k < 20; ++k) {
      const SymplecticMatrix x = random_word(full, rng, 10);
      const Complex kappa = extract_kappa(x, random_point(2, rng));
      CHECK(std::abs(std::pow(kappa, 8) - 1.0) < 1e-8);
      CHECK(std::abs(std::pow(kappa, 4) - double(kappa_pow4(x))) < 1e-8);
    }
  }

  TEST_CASE("doubled conjugate has the same kappa squared on Gamma00(2)") {
    Rng rng(3);
    const auto gens = generators(GroupDescriptor::gamma00_2(2));
    for (int k = 0; k < 100; ++k) {
      const SymplecticMatrix x = random_word(gens, rng, 8);
      const SymplecticMatrix t = doubled_conjugate(x);
      const SiegelPoint tau = random_point(2, rng);
      const SiegelPoint lhs = act(x, tau).scaled(2.0), rhs = act(t, tau.scaled(2.0));
      CHECK((lhs.tau() - rhs.tau()).norm() < 1e-9 * (1 + lhs.tau().norm()));
      const Complex a = extract_kappa(t, tau), b = extract_kappa(x, tau);
      CHECK(std::abs(a * a - b * b) < 1e-8);
    }
    CHECK_THROWS_AS(doubled_conjugate(SymplecticMatrix::standard_j(2)), PreconditionError);
  }

  TEST_CASE("doubled conjugate can flip kappa squared on Gamma0(2)") {
    // Both kappas are pinned by the full transformation formula, so the flip is genuine.
    const SymplecticMatrix x(IntMatrix{{1, 1}, {2, 3}});
    const SymplecticMatrix t = doubled_conjugate(x);
    CHECK(t == SymplecticMatrix(IntMatrix{{1, 2}, {1, 3}}));
    Rng rng(8);
    for (int k = 0; k < 3; ++k) {
      const SiegelPoint tau = random_point(1, rng);
      CHECK(verify_transformation(x, tau).max_residual < 1e-10);
      CHECK(verify_transformation(t, tau).max_residual < 1e-10);
      CHECK(std::abs(std::pow(extract_kappa(x, tau), 2) + 1.0) < 1e-10);
      CHECK(std::abs(std::pow(extract_kappa(t, tau), 2) - 1.0) < 1e-10);
    }
  }

  TEST_CASE("transformation formula") {
    Rng rng(4);
    for (std::size_t g = 1; g <= 3; ++g) {
      const auto gens = generators(GroupDescriptor::full(g));
      for (int k = 0; k < 10; ++k) {
        const auto r = verify_transformation(random_word(gens, rng, 12), random_point(g, rng));
        CHECK(r.max_residual < 1e-8);
      }
    }
    const auto id = verify_transformation(SymplecticMatrix::identity(2), random_point(2, rng));
    CHECK(id.max_residual < 1e-15);
    CHECK(std::abs(id.kappa - 1.0) < 1e-14);
  }

  TEST_CASE("translation closed form") {
    Rng rng(5);
    for (int k = 0; k < 10; ++k) {
      const SiegelPoint tau = random_point(3, rng);
      IntMatrix s(3, 3);
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i; j < 3; ++j) s(i, j) = s(j, i) = static_cast<long long>(rng.index(5)) - 2;
      const SiegelPoint shifted = tau.translated(s);
      for (const auto& m : enumerate_characteristics(3, ParityFilter::even)) {
        // ϑ_m(τ + S) = e(-(ᵗm'Sm' + 2ᵗm'diag S)/8) ϑ[m'; m'' + Sm' + diag S](τ).
        RVector top(3), bottom(3);
        long long quad = 0;
        for (std::size_t i = 0; i < 3; ++i) {
          long long sm = 0;
          for (std::size_t j = 0; j < 3; ++j) sm += static_cast<long long>(s(i, j)) * m.top()[j];
          const long long diag = static_cast<long long>(s(i, i));
          top(static_cast<Eigen::Index>(i)) = 0.5 * m.top()[i];
          bottom(static_cast<Eigen::Index>(i)) = 0.5 * static_cast<double>(m.bottom()[i] + sm + diag);
          quad += m.top()[i] * (sm + 2 * diag);
        }
        const Complex phase = std::polar(1.0, -2 * kPi * static_cast<double>(quad) / 8.0);
        const Complex rhs = phase * theta_shifted(top, bottom, tau, CVector::Zero(3)).value;
        CHECK(std::abs(theta_constant(m, shifted) - rhs) < 1e-10);
      }
      CHECK(std::abs(extract_kappa(SymplecticMatrix::translation(s), tau) - 1.0) < 1e-10);
    }
  }

  TEST_CASE("automorphy factor is a cocycle on the theta group") {
    Rng rng(6);
    for (std::size_t g = 1; g <= 2; ++g) {
      const auto gens = theta_group_generators(g);
      for (const auto& s : gens) CHECK(member(s, GroupDescriptor::theta_level(g, 1)));
      for (int k = 0; k < 50; ++k) {
        const SymplecticMatrix x = random_word(gens, rng, 6), y = random_word(gens, rng, 6);
        const SiegelPoint tau = random_point(g, rng);
        const Complex lhs = theta_automorphy_factor(x * y, tau);
        const Complex rhs = theta_automorphy_factor(x, act(y, tau)) * theta_automorphy_factor(y, tau);
        CHECK(std::abs(lhs - rhs) < 1e-6 * std::max(1.0, std::abs(lhs)));
      }
    }
  }

  TEST_CASE("slash action on second-order theta constants") {
    Rng rng(7);
    const auto gens = generators(GroupDescriptor::gamma0_2(2));
    std::vector<SymplecticMatrix> samples = gens;
    for (int k = 0; k < 10; ++k) samples.push_back(random_word(gens, rng, 8));
    for (const auto& x : samples) {
      const auto action = second_order_action(x);
      const SiegelPoint tau = random_point(2, rng);
      const Complex v = v_theta(x, tau);
      for (std::uint64_t a = 0; a < 4; ++a) {
        const FormFunction f = [a](const SiegelPoint& t) { return second_order(bits_of(2, a), t); };
        const Complex lhs = slash(f, x, 1, v, tau);
        const Complex rhs = action[a].phase.to_complex() * second_order(bits_of(2, action[a].target), tau);
        CHECK(std::abs(lhs - rhs) < 1e-8 * std::max(1.0, std::abs(rhs)));
      }
    }
  }

  TEST_CASE("slash by the identity") {
    const SiegelPoint tau = SiegelPoint::imaginary_identity(2);
    const FormFunction f = [](const SiegelPoint& t) { return second_order({1, 0}, t); };
    CHECK(std::abs(slash(f, SymplecticMatrix::identity(2), 1, 1.0, tau) - f(tau)) < 1e-15);
    const auto id = second_order_action(SymplecticMatrix::identity(2));
    for (std::size_t a = 0; a < 4; ++a) CHECK(id[a] == MonomialEntry{a, Cyclotomic8(1)});
  }
}
