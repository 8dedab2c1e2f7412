#include "siegel/theta.hpp"

#include <cmath>
#include <limits>

#include <boost/math/special_functions/gamma.hpp>

namespace siegel {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Neumaier-compensated complex accumulator.
class Accumulator {
 public:
  void add(Complex x) {
    add_part(x.real(), re_, re_c_);
    add_part(x.imag(), im_, im_c_);
  }
  Complex value() const { return {re_ + re_c_, im_ + im_c_}; }

 private:
  static void add_part(double x, double& sum, double& comp) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x))
      comp += (sum - t) + x;
    else
      comp += (x - t) + sum;
    sum = t;
  }
  double re_ = 0, re_c_ = 0, im_ = 0, im_c_ = 0;
};

// Geometry of one series evaluation: Y = ᵗU·U, summation variable u = n + shift.
struct SeriesGeometry {
  RMatrix x, y, u, y_inv;
  RVector char_top;     // m'/2
  RVector char_bottom;  // m''/2
  RVector shift;        // m'/2 + Y⁻¹ Im z
  RVector z_re, z_im;
  double prefactor = 1.0;  // exp(π ᵗ(Im z) Y⁻¹ (Im z))
  double rho = 0.0;        // lower bound on the minimal distance of the lattice U·Z^g
};

SeriesGeometry make_geometry(const RVector& top, const RVector& bottom, const SiegelPoint& tau, const CVector& z) {
  const std::size_t g = tau.genus();
  if (static_cast<std::size_t>(top.size()) != g || static_cast<std::size_t>(bottom.size()) != g ||
      static_cast<std::size_t>(z.size()) != g)
    throw std::invalid_argument("theta: genus mismatch between characteristic, point and z");
  SeriesGeometry s;
  s.x = tau.real_part();
  s.y = tau.imag_part();
  Eigen::LLT<RMatrix> llt(s.y);
  if (llt.info() != Eigen::Success) throw NotInUpperHalfSpaceError("theta: Im tau not positive definite");
  s.u = llt.matrixU();
  s.y_inv = llt.solve(RMatrix::Identity(g, g));
  s.char_top = top;
  s.char_bottom = bottom;
  s.z_re = z.real();
  s.z_im = z.imag();
  const RVector c = s.y_inv * s.z_im;
  s.shift = s.char_top + c;
  s.prefactor = std::exp(kPi * s.z_im.dot(c));
  Eigen::SelfAdjointEigenSolver<RMatrix> es(s.y, Eigen::EigenvaluesOnly);
  s.rho = std::sqrt(es.eigenvalues().minCoeff());
  return s;
}

SeriesGeometry make_geometry(const ThetaCharacteristic& m, const SiegelPoint& tau, const CVector& z) {
  if (m.genus() != tau.genus()) throw std::invalid_argument("theta: genus mismatch between characteristic and point");
  RVector top(m.genus()), bottom(m.genus());
  for (std::size_t i = 0; i < m.genus(); ++i) {
    top(i) = 0.5 * m.top()[i];
    bottom(i) = 0.5 * m.bottom()[i];
  }
  return make_geometry(top, bottom, tau, z);
}

// Smallest ellipsoid radius (normalized metric) with scale · tail < tol.
double find_radius(std::size_t g, double rho, int order, double scale, double tol) {
  const double lo = rho + std::sqrt(order / (2 * kPi));
  auto bound = [&](double r) { return scale * gaussian_tail_bound(g, rho, r, order); };
  if (bound(lo) < tol) return lo;
  double a = lo, b = lo + 1.0;
  while (!(bound(b) < tol)) {
    a = b;
    b = lo + 2.0 * (b - lo);
    if (b > 1e6) throw std::runtime_error("theta: truncation radius search diverged");
  }
  for (int it = 0; it < 60; ++it) {
    const double mid = 0.5 * (a + b);
    (bound(mid) < tol ? b : a) = mid;
  }
  return b;
}

int box_radius(const SeriesGeometry& s, double radius) {
  double r = 0;
  for (Eigen::Index i = 0; i < s.shift.size(); ++i)
    r = std::max(r, std::abs(s.shift(i)) + radius * std::sqrt(s.y_inv(i, i)));
  return std::max(1, static_cast<int>(std::ceil(r)));
}

// Visits every n with ‖U(n + shift)‖ ≤ radius; last coordinate outermost.
template <class Visit>
void enumerate_ellipsoid(const SeriesGeometry& s, double radius, Visit&& visit) {
  const Eigen::Index g = s.shift.size();
  std::vector<long> n(g);
  RVector u(g);
  auto rec = [&](auto&& self, Eigen::Index i, double remaining) -> void {
    double t = 0;
    for (Eigen::Index j = i + 1; j < g; ++j) t += s.u(i, j) * u(j);
    const double uii = s.u(i, i);
    const double half = std::sqrt(std::max(remaining, 0.0)) / uii;
    const double center = -t / uii - s.shift(i);
    const long lo = static_cast<long>(std::ceil(center - half));
    const long hi = static_cast<long>(std::floor(center + half));
    for (long k = lo; k <= hi; ++k) {
      n[i] = k;
      u(i) = k + s.shift(i);
      const double r = uii * u(i) + t;
      if (i == 0)
        visit(n);
      else
        self(self, i - 1, remaining - r * r);
    }
  };
  rec(rec, g - 1, radius * radius);
}

// e(½ᵗvτv + ᵗv(z + m''/2)) with v = n + m'/2.
Complex summand(const SeriesGeometry& s, const std::vector<long>& n, RVector& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = n[i] + s.char_top(i);
  const double quad_y = v.dot(s.y * v);
  const double quad_x = v.dot(s.x * v);
  const double mag = -kPi * (quad_y + 2.0 * v.dot(s.z_im));
  double turns = 0.5 * quad_x + v.dot(s.z_re + s.char_bottom);
  turns -= std::round(turns);
  return std::polar(std::exp(mag), 2.0 * kPi * turns);
}

}  // namespace

double gaussian_tail_bound(std::size_t g, double rho, double radius, int derivative_order) {
  if (rho <= 0) return std::numeric_limits<double>::infinity();
  const double a = radius - rho;
  if (a < std::sqrt(derivative_order / (2 * kPi))) return std::numeric_limits<double>::infinity();
  // Balls of radius ρ/2 around lattice points are disjoint; comparing each term with the
  // integral over its ball gives g(2/ρ)^g ∫_{a}^∞ s^N e^{-πs²} (s + ρ/2)^{g-1} ds.
  double total = 0;
  double binom = 1;
  for (std::size_t k = 0; k < g; ++k) {
    const double p = 0.5 * (derivative_order + static_cast<double>(k) + 1.0);
    const double integral = 0.5 * std::pow(kPi, -p) * boost::math::tgamma(p, kPi * a * a);
    total += binom * std::pow(rho / 2, static_cast<double>(g - 1 - k)) * integral;
    binom = binom * static_cast<double>(g - 1 - k) / static_cast<double>(k + 1);
  }
  return static_cast<double>(g) * std::pow(2.0 / rho, static_cast<double>(g)) * total;
}

int truncation_radius(const RMatrix& imag, double tol) {
  if (!(tol > 0)) throw std::invalid_argument("truncation_radius: tolerance must be positive");
  const std::size_t g = static_cast<std::size_t>(imag.rows());
  Eigen::LLT<RMatrix> llt(imag);
  if (llt.info() != Eigen::Success) throw NotInUpperHalfSpaceError("truncation_radius: matrix not positive definite");
  Eigen::SelfAdjointEigenSolver<RMatrix> es(imag, Eigen::EigenvaluesOnly);
  const double rho = std::sqrt(es.eigenvalues().minCoeff());
  const double radius = find_radius(g, rho, 0, 1.0, tol);
  const RMatrix inv = llt.solve(RMatrix::Identity(g, g));
  double r = 0;
  for (std::size_t i = 0; i < g; ++i) r = std::max(r, 1.0 + radius * std::sqrt(inv(i, i)));
  return std::max(1, static_cast<int>(std::ceil(r)));
}

namespace {

ThetaValue sum_series(const SeriesGeometry& s, const SiegelPoint& tau, double tol) {
  if (!(tol > 0)) throw std::invalid_argument("theta: tolerance must be positive");
  const double radius = find_radius(tau.genus(), s.rho, 0, s.prefactor, tol);
  Accumulator acc;
  RVector v(tau.genus());
  std::size_t terms = 0;
  enumerate_ellipsoid(s, radius, [&](const std::vector<long>& n) {
    acc.add(summand(s, n, v));
    ++terms;
  });
  ThetaValue out;
  out.value = acc.value();
  out.radius = box_radius(s, radius);
  out.tail_bound = s.prefactor * gaussian_tail_bound(tau.genus(), s.rho, radius, 0);
  out.terms = terms;
  return out;
}

}  // namespace

ThetaValue theta(const ThetaCharacteristic& m, const SiegelPoint& tau, const CVector& z, double tol) {
  return sum_series(make_geometry(m, tau, z), tau, tol);
}

ThetaValue theta_shifted(const RVector& top, const RVector& bottom, const SiegelPoint& tau, const CVector& z,
                         double tol) {
  return sum_series(make_geometry(top, bottom, tau, z), tau, tol);
}

ThetaValue theta_box(const ThetaCharacteristic& m, const SiegelPoint& tau, const CVector& z, int radius) {
  if (radius < 0) throw std::invalid_argument("theta_box: negative radius");
  const SeriesGeometry s = make_geometry(m, tau, z);
  const std::size_t g = tau.genus();
  Accumulator acc;
  RVector v(g);
  std::vector<long> n(g, -radius);
  std::size_t terms = 0;
  while (true) {
    acc.add(summand(s, n, v));
    ++terms;
    std::size_t i = g;
    while (i > 0 && n[i - 1] == radius) n[--i] = -radius;
    if (i == 0) break;
    ++n[i - 1];
  }
  // Largest ellipsoid contained in the box.
  double inscribed = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < g; ++i)
    inscribed = std::min(inscribed, (radius - std::abs(s.shift(i))) / std::sqrt(s.y_inv(i, i)));
  ThetaValue out;
  out.value = acc.value();
  out.radius = radius;
  out.tail_bound = s.prefactor * gaussian_tail_bound(g, s.rho, inscribed, 0);
  out.terms = terms;
  return out;
}

Complex theta_constant(const ThetaCharacteristic& m, const SiegelPoint& tau, double tol) {
  return theta(m, tau, CVector::Zero(tau.genus()), tol).value;
}

Complex second_order(const std::vector<std::uint8_t>& a, const SiegelPoint& tau, double tol) {
  return theta_constant(ThetaCharacteristic(a, std::vector<std::uint8_t>(a.size(), 0)), tau.scaled(2.0), tol);
}

std::vector<Complex> second_order_all(const SiegelPoint& tau, double tol) {
  const std::size_t g = tau.genus();
  const SiegelPoint doubled = tau.scaled(2.0);
  std::vector<Complex> out;
  for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << g); ++idx)
    out.push_back(theta_constant(ThetaCharacteristic(bits_of(g, idx), std::vector<std::uint8_t>(g, 0)), doubled, tol));
  return out;
}

GradientValue theta_gradient(const ThetaCharacteristic& m, const SiegelPoint& tau, double tol) {
  if (parity(m) != -1) throw std::domain_error("theta_gradient: characteristic " + m.to_string() + " is even");
  if (!(tol > 0)) throw std::invalid_argument("theta_gradient: tolerance must be positive");
  const std::size_t g = tau.genus();
  const SeriesGeometry s = make_geometry(m, tau, CVector::Zero(g));
  // |2πi v_k| ≤ 2π‖v‖ ≤ (2π/ρ)‖Uv‖.
  const double scale = 2 * kPi / s.rho;
  const double radius = find_radius(g, s.rho, 1, scale, tol);
  std::vector<Accumulator> acc(g);
  RVector v(g);
  std::size_t terms = 0;
  enumerate_ellipsoid(s, radius, [&](const std::vector<long>& n) {
    const Complex t = summand(s, n, v);
    for (std::size_t k = 0; k < g; ++k) acc[k].add(Complex(0.0, 2 * kPi * v(k)) * t);
    ++terms;
  });
  GradientValue out;
  out.value.resize(g);
  for (std::size_t k = 0; k < g; ++k) out.value(k) = acc[k].value();
  out.radius = box_radius(s, radius);
  out.tail_bound = scale * gaussian_tail_bound(g, s.rho, radius, 1);
  out.terms = terms;
  return out;
}

std::vector<std::uint8_t> bits_of(std::size_t g, std::uint64_t index) {
  std::vector<std::uint8_t> a(g);
  for (std::size_t i = 0; i < g; ++i) a[i] = (index >> (g - 1 - i)) & 1u;
  return a;
}

std::uint64_t index_of(const std::vector<std::uint8_t>& bits) {
  std::uint64_t x = 0;
  for (auto b : bits) x = (x << 1) | b;
  return x;
}

}  // namespace siegel
