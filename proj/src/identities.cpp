#include "siegel/identities.hpp"

#include <algorithm>
#include <cmath>

namespace siegel {

namespace {

int dot2(std::uint64_t x, std::uint64_t y) { return __builtin_popcountll(x & y) & 1; }

void track(IdentityResidual& r, Complex lhs, Complex rhs, double term_scale) {
  r.absolute = std::max(r.absolute, std::abs(lhs - rhs));
  r.scale = std::max({r.scale, std::abs(lhs), std::abs(rhs), term_scale});
}

void finish(IdentityResidual& r) { r.relative = r.scale > 0 ? r.absolute / r.scale : r.absolute; }

// ϑ[ε;ε']² indexed by (ε, ε') as bit patterns.
std::vector<std::vector<Complex>> squared_constants(const SiegelPoint& tau, double tol) {
  const std::size_t g = tau.genus();
  const std::uint64_t n = std::uint64_t{1} << g;
  std::vector<std::vector<Complex>> sq(n, std::vector<Complex>(n));
  for (std::uint64_t e = 0; e < n; ++e)
    for (std::uint64_t ep = 0; ep < n; ++ep) {
      const ThetaCharacteristic m(bits_of(g, e), bits_of(g, ep));
      const Complex t = theta_constant(m, tau, tol);
      sq[e][ep] = t * t;
    }
  return sq;
}

}  // namespace

std::vector<std::vector<double>> riemann_change_of_basis(std::size_t g) {
  const std::uint64_t n = std::uint64_t{1} << g;
  std::vector<std::vector<double>> h(n, std::vector<double>(n));
  for (std::uint64_t s = 0; s < n; ++s)
    for (std::uint64_t ep = 0; ep < n; ++ep) h[s][ep] = (dot2(s, ep) ? -1.0 : 1.0) / static_cast<double>(n);
  return h;
}

IdentityResidual riemann_relation(const SiegelPoint& tau, double tol) {
  const std::size_t g = tau.genus();
  const std::uint64_t n = std::uint64_t{1} << g;
  const auto f = second_order_all(tau, tol);
  const auto sq = squared_constants(tau, tol);
  const auto h = riemann_change_of_basis(g);
  IdentityResidual r;
  for (std::uint64_t s = 0; s < n; ++s)
    for (std::uint64_t e = 0; e < n; ++e) {
      Complex rhs = 0;
      double terms = 0;
      for (std::uint64_t ep = 0; ep < n; ++ep) {
        rhs += h[s][ep] * sq[e][ep];
        terms = std::max(terms, std::abs(sq[e][ep]) / static_cast<double>(n));
      }
      track(r, f[s] * f[s ^ e], rhs, terms);
    }
  finish(r);
  return r;
}

IdentityResidual riemann_relation_inverse(const SiegelPoint& tau, double tol) {
  const std::size_t g = tau.genus();
  const std::uint64_t n = std::uint64_t{1} << g;
  const auto f = second_order_all(tau, tol);
  const auto sq = squared_constants(tau, tol);
  IdentityResidual r;
  for (std::uint64_t e = 0; e < n; ++e)
    for (std::uint64_t ep = 0; ep < n; ++ep) {
      Complex rhs = 0;
      double terms = 0;
      for (std::uint64_t s = 0; s < n; ++s) {
        const Complex t = f[s] * f[s ^ e];
        rhs += dot2(s, ep) ? -t : t;
        terms = std::max(terms, std::abs(t));
      }
      track(r, sq[e][ep], rhs, terms);
    }
  finish(r);
  return r;
}

IdentityResidual addition_formula(const SiegelPoint& tau, const CVector& z, const CVector& w, double tol) {
  const std::size_t g = tau.genus();
  const std::uint64_t n = std::uint64_t{1} << (2 * g);
  const SiegelPoint tau2 = tau.scaled(2.0);
  const CVector half_sum = 0.5 * (z + w), half_diff = 0.5 * (z - w);
  auto vec = [&](std::uint64_t bits) {
    RVector v(g);
    const auto b = bits_of(g, bits);
    for (std::size_t i = 0; i < g; ++i) v(i) = b[i];
    return v;
  };
  IdentityResidual r;
  for (std::uint64_t p = 0; p < n; ++p)
    for (std::uint64_t q = 0; q < n; ++q) {
      const ThetaCharacteristic mp = ThetaCharacteristic::from_index(g, p);
      const ThetaCharacteristic mq = ThetaCharacteristic::from_index(g, q);
      const RVector e = vec(index_of(mp.top())), ep = vec(index_of(mp.bottom()));
      const RVector d = vec(index_of(mq.top())), dp = vec(index_of(mq.bottom()));
      const Complex lhs = theta(mp, tau, half_sum, tol).value * theta(mq, tau, half_diff, tol).value;
      Complex rhs = 0;
      double terms = 0;
      for (std::uint64_t s = 0; s < (std::uint64_t{1} << g); ++s) {
        const RVector sigma = vec(s);
        const Complex t1 = theta_shifted(0.5 * (0.5 * (e + d) - sigma), 0.5 * (ep + dp), tau2, z, tol).value;
        const Complex t2 = theta_shifted(0.5 * (0.5 * (e - d) + sigma), 0.5 * (ep - dp), tau2, w, tol).value;
        rhs += t1 * t2;
        terms = std::max(terms, std::abs(t1 * t2));
      }
      track(r, lhs, rhs, terms);
    }
  finish(r);
  return r;
}

}  // namespace siegel
