#include <cmath>

#include "doctest.h"
#include "siegel/genus2.hpp"
#include "siegel/quotients.hpp"

using namespace siegel;

namespace {

ProjectivePoint3 point(double a, double b, double c, double d) {
  return ProjectivePoint3({Complex(a), Complex(b), Complex(c), Complex(d)});
}

}  // namespace

TEST_SUITE("genus2") {
  TEST_CASE("sign table") {
    for (int i = 1; i <= 3; ++i) CHECK(sign_action(i, 0) == 1);
    CHECK(sign_action(3, 3) == -1);
    CHECK(sign_action(1, 2) == -1);
    CHECK(sign_action(1, 1) == 1);
    CHECK(sign_action(2, 1) == -1);
    CHECK(sign_action(3, 1) == 1);
    CHECK_THROWS_AS(sign_action(4, 0), std::invalid_argument);
  }

  TEST_CASE("sign action matches theta values") {
    const auto m = level_generators_m(2);
    Rng rng(1);
    for (int k = 0; k < 3; ++k) {
      const SiegelPoint tau = random_point(2, rng);
      const auto before = f_values(tau);
      for (int i = 1; i <= 3; ++i) {
        const auto after = f_values(act(m[static_cast<std::size_t>(i - 1)], tau));
        for (std::uint64_t a = 0; a < 4; ++a)
          CHECK(std::abs(after[a] / before[a] - double(sign_action(i, a))) < 1e-8);
      }
    }
  }

  TEST_CASE("projective points") {
    CHECK_THROWS_AS(point(0, 0, 0, 0), std::invalid_argument);
    const auto p = point(1, 2, -3, 0.5);
    CHECK(p.pivot() == 2);
    CHECK(p.equivalent(point(-2, -4, 6, -1), 1e-12));
    CHECK_FALSE(p.equivalent(point(1, 2, 3, 0.5), 1e-12));
    CHECK(std::abs(p.normalized()[2] - 1.0) < 1e-15);
  }

  TEST_CASE("squaring fibers") {
    const auto ones = point(1, 1, 1, 1);
    CHECK(squaring_map(ones).equivalent(ones, 1e-12));
    CHECK(squaring_preimages(ones).size() == 8);
    const auto corner = point(1, 0, 0, 0);
    CHECK(squaring_map(corner).equivalent(corner, 1e-12));
    CHECK(squaring_preimages(corner).size() == 1);
    CHECK(squaring_preimages(point(1, 1, 0, 0)).size() == 2);
    Rng rng(2);
    for (int k = 0; k < 100; ++k) {
      std::array<Complex, 4> x;
      for (auto& c : x) c = Complex(rng.uniform(-1, 1), rng.uniform(-1, 1));
      const ProjectivePoint3 q(x);
      const auto pre = squaring_preimages(q);
      CHECK(pre.size() == 8);
      for (const auto& p : pre) CHECK(squaring_map(p).equivalent(q, 1e-9));
    }
  }

  TEST_CASE("squaring is compatible with f_a -> f_a^2") {
    Rng rng(3);
    const SiegelPoint tau = random_point(2, rng);
    const auto f = f_values(tau);
    const auto sq = squaring_map(ProjectivePoint3(f));
    CHECK(sq.equivalent(ProjectivePoint3({f[0] * f[0], f[1] * f[1], f[2] * f[2], f[3] * f[3]}), 1e-12));
    CHECK_THROWS_AS(f_values(SiegelPoint::imaginary_identity(3)), GenusMismatchError);
  }

  TEST_CASE("Igusa quartic") {
    CHECK(std::abs(igusa_quartic({0, 0, 0, 0, 0})) == 0.0);
    CHECK(std::abs(igusa_quartic({1, 1, 1, 0, -3}) - 9.0) < 1e-15);
    for (double t : {-2.0, 0.0, 0.5, 7.0}) CHECK(std::abs(igusa_quartic({0, 0, 0, 1, t}) - 1.0) < 1e-15);
    CHECK(std::abs(igusa_quartic({0, 0, 0, 1, Complex(0, 3)}) - 1.0) < 1e-15);
  }

  TEST_CASE("integer-weight subring") {
    const SignReport r = verify_integer_weight_subring(4, 3);
    CHECK(r.max_sign_residual < 1e-8);
    CHECK(r.max_square_residual < 1e-8);
    CHECK(r.max_theta_square_residual < 1e-8);
    CHECK(r.sign_rank == 3);
    CHECK(r.distinct_patterns == 8);
    CHECK(r.trivial_on_f00);
  }

  TEST_CASE("monomial actions of the generator families") {
    // ᵗγ_{2S}: a -> a - diag(S).
    const auto lower = second_order_action(SymplecticMatrix::lower_translation(unit_diagonal(2, 0, 2)));
    for (std::size_t a = 0; a < 4; ++a) CHECK(lower[a].target == (a ^ 2u));
    // γ_{2S} on f_a and γ_S on f_a^2: i^{ᵗa 2S a}.
    for (const IntMatrix& s : {unit_diagonal(2, 0), unit_diagonal(2, 1), unit_symmetric(2, 0, 1)}) {
      const auto f_side = second_order_action(SymplecticMatrix::translation(s * Integer(2)));
      const auto f2_side = squared_action(SymplecticMatrix::translation(s));
      for (std::size_t a = 0; a < 4; ++a) {
        const auto bits = bits_of(2, a);
        long q = 0;
        for (std::size_t i = 0; i < 2; ++i)
          for (std::size_t j = 0; j < 2; ++j) q += 2 * bits[i] * static_cast<long>(s(i, j)) * bits[j];
        CHECK(f_side[a] == MonomialEntry{a, Cyclotomic8::i_pow(q)});
        CHECK(f2_side[a] == MonomialEntry{a, Cyclotomic8::i_pow(q)});
      }
    }
    // [[A, 0], [0, ᵗA⁻¹]]: a -> ᵗA a.
    const IntMatrix shear{{1, 1}, {0, 1}};
    const auto diag = second_order_action(SymplecticMatrix::block_diagonal(shear));
    for (std::size_t a = 0; a < 4; ++a) {
      const auto bits = bits_of(2, a);
      const std::vector<std::uint8_t> image{bits[0], static_cast<std::uint8_t>((bits[0] + bits[1]) % 2)};
      CHECK(diag[a].target == index_of(image));
    }
  }

  TEST_CASE("G-module equivariance") {
    const auto m = level_generators_m(2);
    const std::vector<SymplecticMatrix> h{m[0], m[1], m[0].transpose(), m[1].transpose()};
    const GModuleReport r = verify_G_module_iso(generators(GroupDescriptor::gamma0_2(2)), h, 5, 3);
    CHECK(r.all_exact);
    CHECK(r.max_residual < 1e-8);
    CHECK(r.witness_residual < 1e-8);
    for (const auto& c : r.checks) {
      CAPTURE(c.label);
      CHECK(c.f_side == c.f2_side);
      CHECK(member(c.y, GroupDescriptor::gamma00_2(2)));
    }
  }

  TEST_CASE("phi inverse on integral matrices") {
    const auto gens = generators(GroupDescriptor::gamma0_2(2));
    Rng rng(6);
    int tested = 0;
    for (int k = 0; k < 40; ++k) {
      const SymplecticMatrix x = random_word(gens, rng, 6);
      const auto y = phi_exact(x);
      if (!y) continue;
      ++tested;
      CHECK(phi_inverse_exact(*y) == x);
    }
    CHECK(tested > 0);
    CHECK_THROWS_AS(phi_inverse_exact(SymplecticMatrix::standard_j(2)), PreconditionError);
  }

  TEST_CASE("Fricke identities") {
    const FrickeReport r = verify_fricke_identities(7, 5, 100);
    CHECK(std::abs(r.v_theta_j2) == doctest::Approx(1.0));
    CHECK(r.v_theta_root_error < 1e-6);
    CHECK(r.ratio_spread < 1e-8);
    CHECK(r.ratio_vs_multiplier < 1e-8);
    CHECK(r.slash_residual < 1e-8);
    CHECK(r.involution_residual < 1e-8);
    CHECK(r.hadamard_residual < 1e-8);
    REQUIRE_FALSE(r.memberships.empty());
    for (const auto& c : r.memberships) {
      CAPTURE(c.label);
      CHECK(c.ok());
      CHECK(c.tested > 0);
    }
    CHECK(r.fixed_groups == std::vector<std::string>{"Gamma1(2)"});
  }
}
