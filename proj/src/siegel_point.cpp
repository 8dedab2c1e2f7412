#include "siegel/siegel_point.hpp"

#include <cmath>

namespace siegel {

SiegelPoint::SiegelPoint(CMatrix tau) : tau_(std::move(tau)) {
  if (tau_.rows() == 0 || tau_.rows() != tau_.cols()) throw std::invalid_argument("Siegel point must be square");
  if ((tau_ - tau_.transpose()).cwiseAbs().maxCoeff() != 0.0)
    throw NotInUpperHalfSpaceError("Siegel point must be exactly symmetric");
  Eigen::LLT<RMatrix> llt(tau_.imag());
  if (llt.info() != Eigen::Success) throw NotInUpperHalfSpaceError("imaginary part is not positive definite");
}

SiegelPoint SiegelPoint::symmetrized(const CMatrix& tau) {
  CMatrix s = tau;
  for (Eigen::Index i = 0; i < s.rows(); ++i)
    for (Eigen::Index j = i + 1; j < s.cols(); ++j) {
      const Complex v = 0.5 * (tau(i, j) + tau(j, i));
      s(i, j) = v;
      s(j, i) = v;
    }
  return SiegelPoint(std::move(s));
}

SiegelPoint SiegelPoint::imaginary_identity(std::size_t g) {
  return SiegelPoint(CMatrix::Identity(g, g) * Complex(0.0, 1.0));
}

double SiegelPoint::min_imag_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<RMatrix> es(tau_.imag(), Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

SiegelPoint SiegelPoint::translated(const IntMatrix& s) const { return SiegelPoint(tau_ + to_complex(s)); }

SiegelPoint random_point(std::size_t g, Rng& rng) {
  const Eigen::Index n = static_cast<Eigen::Index>(g);
  RMatrix x(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i; j < n; ++j) {
      x(i, j) = rng.uniform(-1.0, 1.0);
      x(j, i) = x(i, j);
    }
  RMatrix l(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) l(i, j) = rng.uniform(-1.0, 1.0);
  RMatrix y = l * l.transpose() + 0.5 * RMatrix::Identity(n, n);
  y = 0.5 * (y + y.transpose()).eval();
  CMatrix tau(n, n);
  tau.real() = x;
  tau.imag() = y;
  return SiegelPoint(std::move(tau));
}

CMatrix to_complex(const IntMatrix& m) {
  CMatrix c(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) c(i, j) = Complex(m(i, j).convert_to<double>(), 0.0);
  return c;
}

CMatrix automorphy_matrix(const SymplecticMatrix& gamma, const SiegelPoint& tau) {
  return to_complex(gamma.c()) * tau.tau() + to_complex(gamma.d());
}

SiegelPoint act(const SymplecticMatrix& gamma, const SiegelPoint& tau) {
  if (gamma.genus() != tau.genus()) throw std::invalid_argument("genus mismatch in symplectic action");
  const CMatrix num = to_complex(gamma.a()) * tau.tau() + to_complex(gamma.b());
  const CMatrix den = automorphy_matrix(gamma, tau);
  // (Aτ+B)(Cτ+D)⁻¹ = ᵗ((Cτ+D)⁻ᵗ ᵗ(Aτ+B)); solve instead of inverting.
  const CMatrix result = den.transpose().partialPivLu().solve(num.transpose()).transpose();
  return SiegelPoint::symmetrized(result);
}

Complex sqrt_det_principal(const SymplecticMatrix& gamma, const SiegelPoint& tau) {
  Complex det = automorphy_matrix(gamma, tau).determinant();
  // arg in (-π, π]: a signed zero imaginary part must not flip the negative real axis.
  if (det.imag() == 0.0) det.imag(0.0);
  return std::sqrt(det);
}

SiegelPoint fricke_act(const SiegelPoint& tau) {
  const Eigen::Index n = tau.tau().rows();
  const CMatrix inv = tau.tau().partialPivLu().solve(CMatrix::Identity(n, n));
  return SiegelPoint::symmetrized(-0.5 * inv);
}

Complex sqrt_det_tau_holomorphic(const SiegelPoint& tau) {
  // τ/i = Y^{1/2}(1 - iH)Y^{1/2} with H = Y^{-1/2} X Y^{-1/2} real symmetric, so
  // det(τ/i)^{1/2} = det(Y)^{1/2} ∏ (1 - iλ_k)^{1/2}, each factor on the principal branch.
  const RMatrix y = tau.imag_part();
  const RMatrix x = tau.real_part();
  Eigen::SelfAdjointEigenSolver<RMatrix> ey(y);
  const RVector ev = ey.eigenvalues();
  const RMatrix y_inv_half = ey.eigenvectors() * ev.cwiseSqrt().cwiseInverse().asDiagonal() *
                             ey.eigenvectors().transpose();
  RMatrix h = y_inv_half * x * y_inv_half;
  h = 0.5 * (h + h.transpose()).eval();
  Eigen::SelfAdjointEigenSolver<RMatrix> eh(h, Eigen::EigenvaluesOnly);
  Complex root = std::sqrt(ev.prod());
  for (Eigen::Index k = 0; k < eh.eigenvalues().size(); ++k)
    root *= std::sqrt(Complex(1.0, -eh.eigenvalues()(k)));
  const double g = static_cast<double>(tau.genus());
  return std::polar(1.0, M_PI * g / 4.0) * root;
}

}  // namespace siegel
