#include "siegel/cocycles.hpp"

#include <cmath>

#include "siegel/groups.hpp"

namespace siegel {

namespace {

Integer trace(const IntMatrix& m) {
  Integer t = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

Integer dot(const std::vector<Integer>& x, const std::vector<Integer>& y) {
  Integer s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

struct EvenThetas {
  std::vector<ThetaCharacteristic> chars;
  std::vector<Complex> values;
};

EvenThetas even_thetas(const SiegelPoint& tau, double tol) {
  EvenThetas t;
  t.chars = enumerate_characteristics(tau.genus(), ParityFilter::even);
  for (const auto& m : t.chars) t.values.push_back(theta_constant(m, tau, tol));
  return t;
}

std::size_t pivot_index(const EvenThetas& t, double tol) {
  std::size_t best = 0;
  for (std::size_t k = 1; k < t.values.size(); ++k)
    if (std::abs(t.values[k]) > std::abs(t.values[best])) best = k;
  if (std::abs(t.values[best]) <= 10 * tol)
    throw IllConditionedError("all even theta constants are below the pivot threshold at this point");
  return best;
}

std::size_t position(const std::vector<ThetaCharacteristic>& chars, const ThetaCharacteristic& m) {
  for (std::size_t k = 0; k < chars.size(); ++k)
    if (chars[k] == m) return k;
  throw std::logic_error("characteristic " + m.to_string() + " missing from enumeration");
}

Complex kappa_from(const SymplecticMatrix& gamma, const SiegelPoint& tau, const EvenThetas& at_tau,
                   const EvenThetas& at_image, std::size_t pivot) {
  const ThetaCharacteristic& m = at_tau.chars[pivot];
  const IntegerCharacteristic image = act_unreduced(gamma, m);
  const Complex lhs = double(image.reduction_sign()) * at_image.values[position(at_image.chars, image.reduce())];
  const Complex factor = sqrt_det_principal(gamma, tau) * phi(m, gamma).exp().to_complex() * at_tau.values[pivot];
  return lhs / factor;
}

}  // namespace

PhiValue phi(const ThetaCharacteristic& m, const SymplecticMatrix& gamma) {
  if (m.genus() != gamma.genus()) throw GenusMismatchError("phi: genus mismatch");
  const IntMatrix a = gamma.a(), b = gamma.b(), c = gamma.c(), d = gamma.d();
  const IntegerCharacteristic x = lift(m);
  const auto& m1 = x.top;
  const auto& m2 = x.bottom;
  const IntMatrix bt = b.transpose(), at = a.transpose();
  const Integer q1 = dot(m1, bt * d * m1);
  const Integer q2 = dot(m2, at * c * m2);
  const Integer q3 = dot(m1, bt * c * m2);
  const auto dab = (a * bt).diagonal();
  const auto dm1 = d * m1, cm2 = c * m2;
  std::vector<Integer> lin(m.genus());
  for (std::size_t i = 0; i < m.genus(); ++i) lin[i] = dm1[i] - cm2[i];
  // 8φ = -(q1 + q2 - 2q3) + 2·ᵗdiag(AᵗB)(Dm' - Cm'').
  const Integer numerator = -(q1 + q2 - 2 * q3) + 2 * dot(dab, lin);
  return PhiValue{static_cast<int>(residue(numerator, 8))};
}

int kappa_pow4(const SymplecticMatrix& gamma) {
  return residue(trace(gamma.b().transpose() * gamma.c()), 2) ? -1 : 1;
}

int kappa_pow2(const SymplecticMatrix& gamma) {
  if (!member(gamma, GroupDescriptor::principal(gamma.genus(), 2)))
    throw PreconditionError("kappa_pow2 needs an element of the level-2 principal congruence subgroup");
  const Integer t = (trace(gamma.a()) - Integer(gamma.genus())) / 2;
  return residue(t, 2) ? -1 : 1;
}

SymplecticMatrix doubled_conjugate(const SymplecticMatrix& gamma) {
  const IntMatrix c = gamma.c();
  if (!c.divisible_by(2)) throw PreconditionError("doubled_conjugate needs C = 0 (mod 2)");
  return SymplecticMatrix::from_blocks(gamma.a(), gamma.b() * Integer(2), c.divided_by(2), gamma.d());
}

Complex extract_kappa(const SymplecticMatrix& gamma, const SiegelPoint& tau, double tol) {
  const EvenThetas at_tau = even_thetas(tau, tol);
  const std::size_t p = pivot_index(at_tau, tol);
  const EvenThetas at_image = even_thetas(act(gamma, tau), tol);
  return kappa_from(gamma, tau, at_tau, at_image, p);
}

Complex theta_automorphy_factor(const SymplecticMatrix& gamma, const SiegelPoint& tau, double tol) {
  return extract_kappa(gamma, tau, tol) * sqrt_det_principal(gamma, tau);
}

TransformationReport verify_transformation(const SymplecticMatrix& gamma, const SiegelPoint& tau, double tol) {
  const EvenThetas at_tau = even_thetas(tau, tol);
  const std::size_t p = pivot_index(at_tau, tol);
  const EvenThetas at_image = even_thetas(act(gamma, tau), tol);
  TransformationReport report;
  report.pivot = at_tau.chars[p];
  report.kappa = kappa_from(gamma, tau, at_tau, at_image, p);
  const Complex root = sqrt_det_principal(gamma, tau);
  std::vector<double> abs_res;
  double scale = 0;
  for (std::size_t k = 0; k < at_tau.chars.size(); ++k) {
    const ThetaCharacteristic& m = at_tau.chars[k];
    const IntegerCharacteristic image = act_unreduced(gamma, m);
    const Complex lhs = double(image.reduction_sign()) * at_image.values[position(at_image.chars, image.reduce())];
    const Complex rhs = report.kappa * root * phi(m, gamma).exp().to_complex() * at_tau.values[k];
    abs_res.push_back(std::abs(lhs - rhs));
    scale = std::max({scale, std::abs(lhs), std::abs(rhs)});
  }
  report.scale = scale;
  for (double r : abs_res) {
    report.residuals.push_back(scale > 0 ? r / scale : r);
    report.max_residual = std::max(report.max_residual, report.residuals.back());
  }
  return report;
}

Complex slash(const FormFunction& f, const SymplecticMatrix& gamma, int k, Complex multiplier,
              const SiegelPoint& tau) {
  const Complex root = sqrt_det_principal(gamma, tau);
  return std::pow(root, -k) * f(act(gamma, tau)) / multiplier;
}

Complex fricke_slash(const FormFunction& f, int k, Complex multiplier, const SiegelPoint& tau) {
  const Complex root = sqrt_det_tau_holomorphic(tau);
  return std::pow(root, -k) * f(fricke_act(tau)) / multiplier;
}

Complex v_theta(const SymplecticMatrix& gamma, const SiegelPoint& tau, double tol) {
  return extract_kappa(doubled_conjugate(gamma), tau.scaled(2.0), tol);
}

Complex v_theta_fricke(std::size_t g, double tol) {
  return extract_kappa(SymplecticMatrix::standard_j(g), SiegelPoint::imaginary_identity(g), tol);
}

std::vector<MonomialEntry> second_order_action(const SymplecticMatrix& gamma) {
  const std::size_t g = gamma.genus();
  const SymplecticMatrix tilde = doubled_conjugate(gamma);
  const SymplecticMatrix tilde_inv = tilde.inverse();
  std::vector<MonomialEntry> out;
  for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << g); ++idx) {
    const ThetaCharacteristic target(bits_of(g, idx), std::vector<std::uint8_t>(g, 0));
    // Θ[a](γτ) = ϑ[a;0](γ̃·2τ) = s·κ(γ̃) det^{1/2} e(φ_m(γ̃)) ϑ_m(2τ), m = γ̃⁻¹·[a;0], s the lift sign.
    const ThetaCharacteristic m = act(tilde_inv, target);
    for (auto b : m.bottom())
      if (b != 0) throw std::logic_error("second_order_action: preimage characteristic has nonzero lower half");
    const IntegerCharacteristic image = act_unreduced(tilde, m);
    if (image.reduce() != target) throw std::logic_error("second_order_action: action is not compatible with inverse");
    MonomialEntry e;
    e.target = index_of(m.top());
    e.phase = Cyclotomic8(image.reduction_sign()) * phi(m, tilde).exp();
    out.push_back(e);
  }
  return out;
}

}  // namespace siegel
