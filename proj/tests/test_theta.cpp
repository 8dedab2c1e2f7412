#include <cmath>
#include <vector>

#include "doctest.h"
#include "siegel/theta.hpp"

using namespace siegel;

namespace {

const double kPi = std::acos(-1.0);

// ∑_n exp(-π n² y) for τ = iy, summed directly in long double.
long double jacobi_theta3(long double y) {
  long double s = 0;
  for (int n = -60; n <= 60; ++n) s += std::exp(-static_cast<long double>(kPi) * n * n * y);
  return s;
}

// The genus-1 series with characteristic shifts, summed directly.
Complex theta1d(double top, double bottom, Complex tau, Complex z) {
  Complex s = 0;
  for (int n = -60; n <= 60; ++n) {
    const double v = n + top;
    s += std::exp(2.0 * kPi * Complex(0, 1) * (0.5 * v * v * tau + v * (z + bottom)));
  }
  return s;
}

SiegelPoint diagonal_point(const std::vector<Complex>& d) {
  CMatrix t = CMatrix::Zero(static_cast<Eigen::Index>(d.size()), static_cast<Eigen::Index>(d.size()));
  for (std::size_t i = 0; i < d.size(); ++i) t(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = d[i];
  return SiegelPoint(t);
}

CVector random_z(std::size_t g, Rng& rng) {
  CVector z(static_cast<Eigen::Index>(g));
  for (auto& c : z) c = Complex(rng.uniform(-0.5, 0.5), rng.uniform(-0.5, 0.5));
  return z;
}

}  // namespace

TEST_SUITE("theta-engine") {
  TEST_CASE("Siegel point validation") {
    CHECK_THROWS_AS(SiegelPoint(CMatrix::Identity(2, 2)), NotInUpperHalfSpaceError);
    CMatrix t(2, 2);
    t << Complex(0, 1), Complex(0.1, 0), Complex(0.2, 0), Complex(0, 1);
    CHECK_THROWS(SiegelPoint{t});
    Rng rng(1);
    for (int k = 0; k < 50; ++k) CHECK(random_point(3, rng).min_imag_eigenvalue() >= 0.5 - 1e-12);
  }

  TEST_CASE("truncation radius") {
    const RMatrix y = RMatrix::Identity(2, 2);
    const int r = truncation_radius(y, 1e-12);
    CHECK(r <= 5);
    CHECK(r >= 1);
    // Every omitted term has |n + shift| ≥ r - 1 in some coordinate; sum them directly.
    double tail = 0;
    for (int a = -40; a <= 40; ++a)
      for (int b = -40; b <= 40; ++b)
        if (std::max(std::abs(a), std::abs(b)) > r) {
          const double da = std::max(0.0, std::abs(a) - 1.0), db = std::max(0.0, std::abs(b) - 1.0);
          tail += std::exp(-kPi * (da * da + db * db));
        }
    CHECK(tail < 1e-12);
    int previous = 0;
    for (double tol : {1e-4, 1e-8, 1e-12, 1e-16, 1e-20, 1e-30}) {
      const int rt = truncation_radius(y, tol);
      CHECK(rt >= previous);
      previous = rt;
    }
    CHECK(previous < 20);
    CHECK(truncation_radius(0.25 * y, 1e-12) >= r);
    CHECK_THROWS_AS(truncation_radius(y, 0), std::invalid_argument);
    CHECK_THROWS_AS(truncation_radius(-y, 1e-12), NotInUpperHalfSpaceError);
  }

  TEST_CASE("genus-1 value at tau = i") {
    const auto tau = SiegelPoint::imaginary_identity(1);
    const ThetaValue v = theta(ThetaCharacteristic::parse("0|0"), tau, CVector::Zero(1));
    const double oracle = static_cast<double>(jacobi_theta3(1.0L));
    CHECK(std::abs(v.value - oracle) < 1e-12);
    CHECK(std::abs(v.value.real() - 1.0864348112133080) < 1e-12);
    CHECK(v.tail_bound < 1e-12);
  }

  TEST_CASE("genus-1 values with characteristics and z") {
    Rng rng(2);
    for (int k = 0; k < 20; ++k) {
      const Complex tau(rng.uniform(-1, 1), rng.uniform(0.5, 2));
      const Complex z(rng.uniform(-0.5, 0.5), rng.uniform(-0.3, 0.3));
      CMatrix t(1, 1);
      t(0, 0) = tau;
      CVector zv(1);
      zv(0) = z;
      for (const auto& m : enumerate_characteristics(1)) {
        const Complex expected = theta1d(0.5 * m.top()[0], 0.5 * m.bottom()[0], tau, z);
        CHECK(std::abs(theta(m, SiegelPoint(t), zv).value - expected) < 1e-11);
      }
    }
  }

  TEST_CASE("diagonal tau factorizes") {
    const SiegelPoint tau = diagonal_point({Complex(0.3, 1.1), Complex(-0.2, 0.8), Complex(0.45, 1.6)});
    for (const auto& m : enumerate_characteristics(3, ParityFilter::even)) {
      Complex product = 1;
      for (std::size_t i = 0; i < 3; ++i)
        product *= theta1d(0.5 * m.top()[i], 0.5 * m.bottom()[i],
                           tau.tau()(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)), 0.0);
      CHECK(std::abs(theta_constant(m, tau) - product) < 1e-11);
    }
  }

  TEST_CASE("odd theta constants vanish") {
    Rng rng(3);
    for (std::size_t g = 2; g <= 3; ++g)
      for (int k = 0; k < 5; ++k) {
        const SiegelPoint tau = random_point(g, rng);
        for (const auto& m : enumerate_characteristics(g, ParityFilter::odd))
          CHECK(std::abs(theta_constant(m, tau)) < 1e-10);
      }
  }

  TEST_CASE("parity in z") {
    Rng rng(4);
    const SiegelPoint tau = random_point(2, rng);
    const CVector z = random_z(2, rng);
    for (const auto& m : enumerate_characteristics(2)) {
      const Complex plus = theta(m, tau, z).value, minus = theta(m, tau, -z).value;
      CHECK(std::abs(plus - static_cast<double>(parity(m)) * minus) < 1e-11);
    }
  }

  TEST_CASE("certified tail against a larger box") {
    Rng rng(5);
    for (int k = 0; k < 100; ++k) {
      const std::size_t g = 1 + k % 3;
      const SiegelPoint tau = random_point(g, rng);
      const CVector z = random_z(g, rng);
      const auto m = ThetaCharacteristic::from_index(g, rng.index(std::uint64_t{1} << (2 * g)));
      const ThetaValue v = theta(m, tau, z);
      const ThetaValue wide = theta_box(m, tau, z, v.radius + 2);
      CHECK(v.tail_bound < 1e-12);
      CHECK(std::abs(v.value - wide.value) <= v.tail_bound + 1e-14 * std::abs(wide.value) + 1e-15);
    }
  }

  TEST_CASE("second-order theta constants") {
    Rng rng(6);
    const SiegelPoint tau = random_point(2, rng);
    const auto all = second_order_all(tau);
    REQUIRE(all.size() == 4);
    for (std::uint64_t a = 0; a < 4; ++a) {
      const auto bits = bits_of(2, a);
      CHECK(index_of(bits) == a);
      const Complex direct = theta_constant(ThetaCharacteristic(bits, {0, 0}), tau.scaled(2.0));
      CHECK(std::abs(all[a] - direct) < 1e-14);
      CHECK(std::abs(second_order(bits, tau) - direct) < 1e-14);
    }
  }

  TEST_CASE("gradient against finite differences") {
    Rng rng(7);
    const double h = 1e-5;
    for (std::size_t g : {std::size_t{1}, std::size_t{3}}) {
      const SiegelPoint tau = random_point(g, rng);
      for (const auto& m : enumerate_characteristics(g, ParityFilter::odd)) {
        const GradientValue grad = theta_gradient(m, tau);
        CHECK(grad.tail_bound < 1e-12);
        for (std::size_t k = 0; k < g; ++k) {
          CVector e = CVector::Zero(static_cast<Eigen::Index>(g));
          e(static_cast<Eigen::Index>(k)) = h;
          const Complex fd = (theta(m, tau, e).value - theta(m, tau, -e).value) / (2 * h);
          CHECK(std::abs(grad.value(static_cast<Eigen::Index>(k)) - fd) < 1e-6);
        }
      }
    }
  }

  TEST_CASE("gradient at imaginary tau is real") {
    CMatrix t = CMatrix::Zero(3, 3);
    t.diagonal().setConstant(Complex(0, 1.2));
    t(0, 1) = t(1, 0) = Complex(0, 0.3);
    const SiegelPoint tau(t);
    // v and -v pair to -4π v_k exp(-π ᵗvYv) sin(π ᵗv m'').
    for (const auto& m : enumerate_characteristics(3, ParityFilter::odd)) {
      const CVector grad = theta_gradient(m, tau).value;
      for (const auto& c : grad) CHECK(std::abs(c.imag()) < 1e-13 * std::max(1.0, std::abs(c)));
    }
    const CVector g1 = theta_gradient(ThetaCharacteristic::parse("1|1"), SiegelPoint::imaginary_identity(1)).value;
    Complex direct = 0;
    for (int n = -30; n <= 30; ++n) {
      const double v = n + 0.5;
      direct += Complex(0, 2 * kPi * v) * std::exp(-kPi * v * v) * std::exp(Complex(0, kPi * v));
    }
    CHECK(std::abs(g1(0) - direct) < 1e-12);
    CHECK(std::abs(direct.imag()) < 1e-15);
    CHECK_THROWS_AS(theta_gradient(ThetaCharacteristic::parse("000|000"), tau), std::domain_error);
  }

  TEST_CASE("error handling") {
    const auto tau = SiegelPoint::imaginary_identity(2);
    CHECK_THROWS_AS(theta(ThetaCharacteristic::parse("0|0"), tau, CVector::Zero(2)), std::invalid_argument);
    CHECK_THROWS_AS(theta(ThetaCharacteristic::parse("00|00"), tau, CVector::Zero(2), -1.0), std::invalid_argument);
    CHECK_THROWS_AS(theta_box(ThetaCharacteristic::parse("00|00"), tau, CVector::Zero(2), -1), std::invalid_argument);
    CHECK(std::isfinite(theta(ThetaCharacteristic::parse("00|00"), tau, CVector::Zero(2), 1e-30).value.real()));
  }
}
