#include <cmath>
#include <set>

#include "doctest.h"
#include "siegel/genus3.hpp"

using namespace siegel;

namespace {

CharacteristicMatrix pair(const char* a, const char* b) {
  return CharacteristicMatrix({ThetaCharacteristic::parse(a), ThetaCharacteristic::parse(b)});
}

const SymmetrizationGroup& group() {
  static const SymmetrizationGroup g = symmetrization_group();
  return g;
}

}  // namespace

TEST_SUITE("genus3") {
  TEST_CASE("gradient forms") {
    Rng rng(1);
    const SiegelPoint tau = random_point(3, rng);
    const CMatrix w = gradient_form(example_m(), tau);
    CHECK((w - w.transpose()).norm() < 1e-15 * w.norm());
    CHECK(w.norm() > 1e-10);
    Eigen::JacobiSVD<CMatrix> svd(w);
    CHECK(svd.singularValues()(1) < 1e-12 * svd.singularValues()(0));
    CHECK((gradient_form(example_m().swapped(), tau) - w).norm() < 1e-15 * w.norm());

    const auto m1 = ThetaCharacteristic::parse("001|001");
    const auto same = CharacteristicMatrix::unchecked({m1, m1});
    CHECK(gradient_form_unchecked(same, tau).norm() == 0.0);
    CHECK_THROWS_AS(gradient_form(same, tau), std::invalid_argument);
    const auto even = CharacteristicMatrix::unchecked({m1, ThetaCharacteristic::parse("000|000")});
    CHECK_THROWS_AS(gradient_form_unchecked(even, tau), std::domain_error);
  }

  TEST_CASE("characters") {
    const auto m = example_m();
    CHECK(chi(m, SymplecticMatrix::identity(3)) == Cyclotomic8(1));
    const auto b1 = level_generators_m(3)[0];
    CHECK(chi(m, b1) == Cyclotomic8(1));
    CHECK(act(SymplecticMatrix::identity(3), m) == m);
    for (const auto& x : group().representatives) {
      CHECK(kappa_pow4(x) == 1);
      const int k = chi(m, x).root_index();
      CHECK(k >= 0);
      CHECK(k % 2 == 0);
    }
  }

  TEST_CASE("W transformation law") {
    Rng rng(2);
    const auto gens = generators(GroupDescriptor::full(3));
    const auto level = generators(GroupDescriptor::level_24(3));
    for (int k = 0; k < 4; ++k) {
      const SymplecticMatrix x = random_word(k % 2 ? gens : level, rng, 6);
      CHECK(w_law_residual(example_m(), x, random_point(3, rng)) < 1e-6);
    }
  }

  TEST_CASE("symmetrization group") {
    CHECK(group().quotient.order() == 64);
    CHECK(group().words_match_bfs);
    CHECK(group().representatives.size() == 64);
    std::set<std::size_t> classes;
    for (const auto& x : group().representatives) classes.insert(*group().quotient.find(x));
    CHECK(classes.size() == 64);
  }

  TEST_CASE("the example combination") {
    const FormalThetaCombination phi = symmetrize(example_m(), group());
    const auto n = example_n();
    REQUIRE(n.size() == 4);
    CHECK(n[0] == example_m());
    CHECK(n[1] == n[0].swapped());
    CHECK(n[3] == n[2].swapped());
    CHECK(phi.terms().size() == 4);
    for (const auto& ni : n) CHECK(phi.coefficient(ni) == Cyclotomic8(16));
    CHECK(phi.coefficient(pair("001|001", "001|101")).is_zero());
    const auto merged = phi.canonicalized();
    CHECK(merged.terms().size() == 2);
    CHECK(merged.coefficient(n[0]) == Cyclotomic8(32));
  }

  TEST_CASE("different top rows cancel") {
    const auto m = pair("001|001", "010|010");
    CHECK(symmetrize(m, group()).is_zero());
    CHECK(symmetrize(m.swapped(), group()).is_zero());
  }

  TEST_CASE("formal combinations") {
    FormalThetaCombination f;
    const auto m = example_m();
    f.add(m, Cyclotomic8(2));
    f.add(m, Cyclotomic8(-2));
    CHECK(f.is_zero());
    f.add(m, Cyclotomic8(1));
    f.add(m.swapped(), Cyclotomic8(0, 1));
    const auto c = f.canonicalized();
    CHECK(c.terms().size() == 1);
    CHECK(c.coefficient(m) == Cyclotomic8(1, 1));
  }

  TEST_CASE("classification without numerics") {
    const ClassificationReport r = classify_all({});
    CHECK(r.entries.size() == 378);
    CHECK(r.nonvanishing == 42);
    CHECK(r.nonvanishing_ordered == 42);
    CHECK(r.census_prediction == 42);
    CHECK(r.criterion_matches);
    CHECK(r.quotient_order == 64);
    for (const auto& e : r.entries) CHECK(e.nonvanishing == e.criterion);
  }

  TEST_CASE("classification with the gap check") {
    Rng rng(3);
    const ClassificationReport r = classify_all({random_point(3, rng)});
    CHECK(r.points == 1);
    CHECK(r.gap_violations == 0);
    CHECK(r.max_vanishing_ratio < 1e-8);
    CHECK(r.min_nonvanishing_ratio > 1e-6);
    CHECK(r.max_formal_vs_direct < 1e-6);
  }

  TEST_CASE("R16 relation") {
    Rng rng(4);
    for (int k = 0; k < 2; ++k) {
      const SiegelPoint tau = random_point(3, rng);
      CHECK(verify_r16(tau).relative < 1e-8);
      CHECK(verify_r16(tau.translated(unit_diagonal(3, 1, 2))).relative < 1e-8);
    }
  }

  TEST_CASE("q invariance") {
    const QInvarianceReport r = verify_q_invariance(5, 2);
    CHECK(r.max_ratio_error < 1e-8);
    CHECK(r.max_phase_residual < 1e-8);
    CHECK(r.exact_product_phase_one);
    CHECK(r.sign_flips == std::vector<int>{4, 4, 4, 2, 2, 2});
    CHECK(r.samples == 2);
  }
}
