#include "siegel/genus3.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "siegel/parallel.hpp"

namespace siegel {

namespace {

constexpr std::size_t kGenus = 3;
constexpr double kVanishing = 1e-8;
constexpr double kNonvanishing = 1e-6;
constexpr int kHistogramDecades = 20;

CVector cross(const CVector& u, const CVector& v) {
  CVector w(3);
  w(0) = u(1) * v(2) - u(2) * v(1);
  w(1) = u(2) * v(0) - u(0) * v(2);
  w(2) = u(0) * v(1) - u(1) * v(0);
  return w;
}

void require_odd_pair(const CharacteristicMatrix& m) {
  if (m.size() != 2 || m.genus() != kGenus)
    throw std::invalid_argument("gradient form needs two genus-3 characteristics: " + m.to_string());
  for (const auto& c : m.columns())
    if (parity(c) != -1) throw std::domain_error("gradient form needs odd characteristics: " + c.to_string());
}

CMatrix form_at(const CharacteristicMatrix& m, const SiegelPoint& tau, double tol) {
  if (tau.genus() != kGenus) throw std::invalid_argument("gradient form needs a genus-3 point");
  return gradient_outer(theta_gradient(m[0], tau, tol).value, theta_gradient(m[1], tau, tol).value);
}

IntMatrix shift_of(std::size_t mask) {
  IntMatrix b = IntMatrix::zero(kGenus, kGenus);
  const auto gens = level_generators_m(kGenus);
  for (std::size_t i = 0; i < gens.size(); ++i)
    if ((mask >> i) & 1U) b += gens[i].b();
  return b;
}

bool same_top(const CharacteristicMatrix& m) { return m[0].top() == m[1].top(); }

}  // namespace

CMatrix gradient_outer(const CVector& p1, const CVector& p2) {
  const CVector w = cross(p1, p2);
  return (w * w.transpose()) / std::pow(std::numbers::pi, 4);
}

CMatrix gradient_form(const CharacteristicMatrix& m, const SiegelPoint& tau, double tol) {
  require_odd_pair(m);
  if (m[0] == m[1]) throw std::invalid_argument("gradient form needs distinct columns: " + m.to_string());
  return form_at(m, tau, tol);
}

CMatrix gradient_form_unchecked(const CharacteristicMatrix& m, const SiegelPoint& tau, double tol) {
  require_odd_pair(m);
  return form_at(m, tau, tol);
}

Cyclotomic8 chi(const CharacteristicMatrix& m, const SymplecticMatrix& gamma) {
  Cyclotomic8 out(kappa_pow4(gamma));
  for (const auto& c : m.columns()) out *= phi(c, gamma).exp_doubled();
  return out;
}

CharacteristicMatrix act(const SymplecticMatrix& gamma, const CharacteristicMatrix& m) {
  std::vector<ThetaCharacteristic> cols;
  for (const auto& c : m.columns()) cols.push_back(act(gamma, c));
  return CharacteristicMatrix(std::move(cols));
}

double w_law_residual(const CharacteristicMatrix& m, const SymplecticMatrix& gamma, const SiegelPoint& tau,
                      double tol) {
  const CMatrix lhs = gradient_form(act(gamma, m), act(gamma, tau), tol);
  const CMatrix p = automorphy_matrix(gamma, tau);
  const CMatrix p_inv = p.inverse();
  const CMatrix rhs =
      chi(m, gamma).to_complex() * std::pow(p.determinant(), 4) * p_inv.transpose() * gradient_form(m, tau, tol) * p_inv;
  const double scale = std::max(lhs.norm(), rhs.norm());
  return scale > 0 ? (lhs - rhs).norm() / scale : 0.0;
}

void FormalThetaCombination::add(const CharacteristicMatrix& n, const Cyclotomic8& c) {
  auto [it, inserted] = terms_.try_emplace(n, c);
  if (!inserted) it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Cyclotomic8 FormalThetaCombination::coefficient(const CharacteristicMatrix& n) const {
  const auto it = terms_.find(n);
  return it == terms_.end() ? Cyclotomic8() : it->second;
}

FormalThetaCombination FormalThetaCombination::canonicalized() const {
  FormalThetaCombination out;
  for (const auto& [n, c] : terms_) out.add(n[1].index() < n[0].index() ? n.swapped() : n, c);
  return out;
}

CMatrix FormalThetaCombination::evaluate(const std::map<std::uint64_t, CVector>& gradients) const {
  CMatrix sum = CMatrix::Zero(kGenus, kGenus);
  for (const auto& [n, c] : terms_)
    sum += c.to_complex() * gradient_outer(gradients.at(n[0].index()), gradients.at(n[1].index()));
  return sum;
}

SymmetrizationGroup symmetrization_group() {
  SymmetrizationGroup out{enumerate_quotient(GroupDescriptor::level_24_squared(kGenus),
                                             GroupDescriptor::level_24(kGenus)),
                          {}, {}, false};
  const std::size_t words = std::size_t{1} << level_generators_m(kGenus).size();
  std::vector<bool> seen(out.quotient.order(), false);
  bool distinct = true;
  for (std::size_t mask = 0; mask < words; ++mask) {
    IntMatrix b = shift_of(mask);
    SymplecticMatrix gamma = SymplecticMatrix::translation(b);
    const auto k = out.quotient.find(gamma);
    if (!k || seen[*k]) distinct = false;
    else seen[*k] = true;
    out.representatives.push_back(std::move(gamma));
    out.shifts.push_back(std::move(b));
  }
  out.words_match_bfs = distinct && out.quotient.order() == words;
  if (!out.words_match_bfs)
    throw QuotientConfigError("the 2^6 translation words do not enumerate Gamma^2(2,4)/Gamma(2,4): BFS order " +
                              std::to_string(out.quotient.order()));
  return out;
}

FormalThetaCombination symmetrize(const CharacteristicMatrix& m, const SymmetrizationGroup& group) {
  FormalThetaCombination out;
  for (const auto& gamma : group.representatives) {
    const CharacteristicMatrix n({inverse_act(gamma, m[0]), inverse_act(gamma, m[1])});
    out.add(n, chi(n, gamma));
  }
  return out;
}

CharacteristicMatrix example_m() {
  return CharacteristicMatrix({ThetaCharacteristic::parse("001|001"), ThetaCharacteristic::parse("001|011")});
}

std::vector<CharacteristicMatrix> example_n() {
  auto pair = [](const char* x, const char* y) {
    return CharacteristicMatrix({ThetaCharacteristic::parse(x), ThetaCharacteristic::parse(y)});
  };
  return {pair("001|001", "001|011"), pair("001|011", "001|001"), pair("001|101", "001|111"),
          pair("001|111", "001|101")};
}

ClassificationReport classify_all(const std::vector<SiegelPoint>& points, double tol) {
  const SymmetrizationGroup group = symmetrization_group();
  const auto odd = enumerate_characteristics(kGenus, ParityFilter::odd);

  ClassificationReport report;
  report.words_match_bfs = group.words_match_bfs;
  report.quotient_order = group.quotient.order();
  report.points = points.size();

  std::map<std::vector<std::uint8_t>, std::size_t> by_top;
  for (const auto& m : odd) ++by_top[m.top()];
  for (const auto& [top, count] : by_top) report.census_prediction += count * (count - 1) / 2;

  for (std::size_t i = 0; i < odd.size(); ++i)
    for (std::size_t j = i + 1; j < odd.size(); ++j) {
      ClassificationEntry e{CharacteristicMatrix({odd[i], odd[j]}), {}};
      report.entries.push_back(std::move(e));
    }

  parallel_for(report.entries.size(), [&](std::size_t k) {
    auto& e = report.entries[k];
    const FormalThetaCombination ordered = symmetrize(e.m, group);
    e.ordered_support = ordered.terms().size();
    e.phi = ordered.canonicalized();
    e.nonvanishing = !e.phi.is_zero();
    e.criterion = same_top(e.m);
  });

  report.criterion_matches = true;
  for (const auto& e : report.entries) {
    if (e.nonvanishing) ++report.nonvanishing;
    if (e.ordered_support > 0) ++report.nonvanishing_ordered;
    if (e.nonvanishing != e.criterion) report.criterion_matches = false;
  }

  // gradients[p][b][k]: ψ of odd[k] at points[p] + B_b.
  const std::size_t shifts = group.shifts.size();
  std::vector<std::vector<std::vector<CVector>>> gradients(
      points.size(), std::vector<std::vector<CVector>>(shifts, std::vector<CVector>(odd.size())));
  parallel_for(points.size() * shifts, [&](std::size_t t) {
    const std::size_t p = t / shifts, b = t % shifts;
    const SiegelPoint tau = points[p].translated(group.shifts[b]);
    for (std::size_t k = 0; k < odd.size(); ++k) gradients[p][b][k] = theta_gradient(odd[k], tau, tol).value;
  });
  std::map<std::uint64_t, std::size_t> slot;
  for (std::size_t k = 0; k < odd.size(); ++k) slot[odd[k].index()] = k;

  report.min_nonvanishing_ratio = points.empty() ? 0.0 : INFINITY;
  report.ratio_histogram.assign(kHistogramDecades, 0);
  for (auto& e : report.entries) {
    const std::size_t i = slot.at(e.m[0].index()), j = slot.at(e.m[1].index());
    e.numeric_ratio = e.nonvanishing ? INFINITY : 0.0;
    for (std::size_t p = 0; p < points.size(); ++p) {
      CMatrix direct = CMatrix::Zero(kGenus, kGenus);
      double scale = 0;
      for (std::size_t b = 0; b < shifts; ++b) {
        const CMatrix w = gradient_outer(gradients[p][b][i], gradients[p][b][j]);
        direct += w;
        scale += w.norm();
      }
      std::map<std::uint64_t, CVector> at_point;
      for (std::size_t k = 0; k < odd.size(); ++k) at_point.emplace(odd[k].index(), gradients[p][0][k]);
      const double ratio = direct.norm() / scale;
      e.numeric_ratio = e.nonvanishing ? std::min(e.numeric_ratio, ratio) : std::max(e.numeric_ratio, ratio);
      e.formal_vs_direct = std::max(e.formal_vs_direct, (e.phi.evaluate(at_point) - direct).norm() / scale);
    }
    if (points.empty()) continue;
    report.max_formal_vs_direct = std::max(report.max_formal_vs_direct, e.formal_vs_direct);
    if (e.nonvanishing) {
      report.min_nonvanishing_ratio = std::min(report.min_nonvanishing_ratio, e.numeric_ratio);
      if (!(e.numeric_ratio > kNonvanishing)) ++report.gap_violations;
    } else {
      report.max_vanishing_ratio = std::max(report.max_vanishing_ratio, e.numeric_ratio);
      if (!(e.numeric_ratio < kVanishing)) ++report.gap_violations;
    }
    const int decade = e.numeric_ratio > 0 ? static_cast<int>(std::floor(std::log10(e.numeric_ratio))) : -kHistogramDecades;
    ++report.ratio_histogram[std::clamp(decade + kHistogramDecades, 0, kHistogramDecades - 1)];
  }
  return report;
}

R16Residual verify_r16(const SiegelPoint& tau, double tol) {
  Complex s8 = 0, s16 = 0;
  double a8 = 0, a16 = 0;
  for (const auto& m : enumerate_characteristics(tau.genus(), ParityFilter::even)) {
    const Complex t8 = std::pow(theta_constant(m, tau, tol), 8);
    s8 += t8;
    s16 += t8 * t8;
    a8 += std::abs(t8);
    a16 += std::norm(t8);
  }
  R16Residual out;
  out.value = 8.0 * s16 - s8 * s8;
  out.scale = std::max(8.0 * a16, a8 * a8);
  out.relative = out.scale > 0 ? std::abs(out.value) / out.scale : 0.0;
  return out;
}

QInvarianceReport verify_q_invariance(std::uint64_t seed, int samples, double tol) {
  const auto gens = level_generators_m(kGenus);
  const std::size_t count = std::size_t{1} << kGenus;
  QInvarianceReport report;

  // i^{ᵗaBa} for each generator and a.
  std::vector<std::vector<Cyclotomic8>> phases(gens.size());
  report.exact_product_phase_one = true;
  for (std::size_t g = 0; g < gens.size(); ++g) {
    Cyclotomic8 product(1);
    int flips = 0;
    for (std::uint64_t a = 0; a < count; ++a) {
      const auto bits = bits_of(kGenus, a);
      std::vector<Integer> v(bits.begin(), bits.end());
      const auto bv = gens[g].b() * v;
      Integer q = 0;
      for (std::size_t k = 0; k < kGenus; ++k) q += v[k] * bv[k];
      const long e = residue(q, 4);
      phases[g].push_back(Cyclotomic8::i_pow(e));
      product *= phases[g].back();
      if (e == 2) ++flips;
    }
    report.sign_flips.push_back(flips);
    if (!(product == Cyclotomic8(1))) report.exact_product_phase_one = false;
  }

  Rng rng(seed);
  while (report.samples < static_cast<std::size_t>(samples)) {
    const SiegelPoint tau = random_point(kGenus, rng);
    const auto f = second_order_all(tau, tol);
    double top = 0, bottom = INFINITY;
    for (const auto& x : f) {
      top = std::max(top, std::abs(x));
      bottom = std::min(bottom, std::abs(x));
    }
    if (bottom < 1e-8 * top) {
      ++report.resampled;
      if (report.resampled > 100) throw IllConditionedError("q-invariance: no well-conditioned sample point");
      continue;
    }
    Complex q = 1;
    for (const auto& x : f) q *= x;
    for (std::size_t g = 0; g < gens.size(); ++g) {
      const auto shifted = second_order_all(tau.translated(gens[g].b()), tol);
      Complex q_shifted = 1;
      for (std::size_t a = 0; a < count; ++a) {
        q_shifted *= shifted[a];
        report.max_phase_residual =
            std::max(report.max_phase_residual, std::abs(shifted[a] / f[a] - phases[g][a].to_complex()));
      }
      report.max_ratio_error = std::max(report.max_ratio_error, std::abs(q_shifted / q - 1.0));
    }
    ++report.samples;
  }
  return report;
}

}  // namespace siegel
