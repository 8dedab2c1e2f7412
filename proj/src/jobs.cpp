#include "siegel/jobs.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <functional>
#include <map>

#include "siegel/genus2.hpp"
#include "siegel/identities.hpp"
#include "siegel/quotients.hpp"

namespace siegel {

namespace {

constexpr double kIdentityThreshold = 1e-8;
constexpr double kRootThreshold = 1e-6;
constexpr double kOddThreshold = 1e-10;
constexpr double kWLawThreshold = 1e-6;
constexpr double kFormalThreshold = 1e-6;
constexpr double kGradientFloor = 1e-10;

class Checks {
 public:
  void below(const std::string& name, double measured, double threshold) {
    add(name, measured < threshold, measured, {{"below", threshold}});
  }
  void above(const std::string& name, double measured, double threshold) {
    add(name, measured > threshold, measured, {{"above", threshold}});
  }
  void equal(const std::string& name, const Json& measured, const Json& expected) {
    add(name, measured == expected, measured, {{"equals", expected}});
  }
  void holds(const std::string& name, bool ok) { add(name, ok, ok, {{"equals", true}}); }

  const Json& list() const { return list_; }
  bool passed() const { return passed_; }

 private:
  void add(const std::string& name, bool ok, const Json& measured, Json threshold) {
    list_.push_back({{"name", name}, {"status", ok ? "pass" : "fail"}, {"measured", measured}, {"threshold", threshold}});
    passed_ = passed_ && ok;
  }
  Json list_ = Json::array();
  bool passed_ = true;
};

Json report(const JobConfig& cfg, const Checks& checks, Json artifacts) {
  return {{"schema", kReportSchema},
          {"job", cfg.job},
          {"config", {{"seed", cfg.seed}, {"tolerance", cfg.tol}, {"samples", cfg.samples}, {"genus", cfg.genus}}},
          {"prng", {{"algorithm", Rng::kAlgorithm}, {"reference_output_10000", Rng::kReferenceOutput10000}}},
          {"checks", checks.list()},
          {"artifacts", std::move(artifacts)},
          {"passed", checks.passed()}};
}

int samples_or(const JobConfig& cfg, int fallback) {
  if (cfg.samples < 0) throw ConfigError("samples must be non-negative");
  return cfg.samples > 0 ? cfg.samples : fallback;
}

std::size_t fixed_genus(const JobConfig& cfg, std::size_t g) {
  if (cfg.genus != 0 && cfg.genus != g)
    throw ConfigError("job " + cfg.job + " runs in genus " + std::to_string(g) + " only");
  return g;
}

std::vector<std::size_t> genus_list(const JobConfig& cfg, std::vector<std::size_t> fallback, std::size_t max_genus) {
  if (cfg.genus == 0) return fallback;
  if (cfg.genus > max_genus)
    throw ConfigError("job " + cfg.job + " supports genus up to " + std::to_string(max_genus));
  return {cfg.genus};
}

CVector random_vector(std::size_t g, Rng& rng) {
  CVector z(g);
  for (std::size_t i = 0; i < g; ++i) z(i) = Complex(rng.uniform(-1, 1), rng.uniform(-1, 1));
  return z;
}

std::vector<SiegelPoint> random_points(std::size_t g, Rng& rng, int n) {
  std::vector<SiegelPoint> out;
  for (int k = 0; k < n; ++k) out.push_back(random_point(g, rng));
  return out;
}

std::string key(std::size_t g) { return "g" + std::to_string(g); }

Json census_job(const JobConfig& cfg) {
  Checks checks;
  Json artifacts;
  for (std::size_t g : genus_list(cfg, {1, 2, 3, 4}, 6)) {
    const std::size_t even = enumerate_characteristics(g, ParityFilter::even).size();
    const std::size_t odd = enumerate_characteristics(g, ParityFilter::odd).size();
    const std::size_t half = std::size_t{1} << (g - 1), full = std::size_t{1} << g;
    checks.equal(key(g) + " even", even, half * (full + 1));
    checks.equal(key(g) + " odd", odd, half * (full - 1));
    artifacts[key(g)] = {{"even", even}, {"odd", odd}};
  }
  return report(cfg, checks, artifacts);
}

Json transformation_job(const JobConfig& cfg) {
  const std::size_t g = cfg.genus ? cfg.genus : 2;
  if (g > 3) throw ConfigError("transformation supports genus 1 to 3");
  const int n = samples_or(cfg, 100);
  Rng rng(cfg.seed);
  const auto gens = generators(GroupDescriptor::full(g));
  double residual = 0, kappa8 = 0;
  int kappa4_mismatch = 0, ill = 0;
  Json failures = Json::array();
  for (int k = 0; k < n; ++k) {
    const SymplecticMatrix gamma = random_word(gens, rng, 1 + static_cast<int>(rng.index(12)));
    const SiegelPoint tau = random_point(g, rng);
    try {
      const auto r = verify_transformation(gamma, tau, cfg.tol);
      residual = std::max(residual, r.max_residual);
      if (!(r.max_residual < kIdentityThreshold))
        failures.push_back({{"sample", k}, {"gamma", to_json(gamma)}, {"residual", r.max_residual}});
      kappa8 = std::max(kappa8, std::abs(std::pow(r.kappa, 8) - 1.0));
      if (std::abs(std::pow(r.kappa, 4) - static_cast<double>(kappa_pow4(gamma))) > kRootThreshold) ++kappa4_mismatch;
    } catch (const IllConditionedError&) {
      ++ill;
      --k;
      if (ill > n) throw;
    }
  }
  const auto level2 = generators(GroupDescriptor::principal(g, 2));
  int kappa2_mismatch = 0;
  double kappa2_residual = 0;
  for (int k = 0; k < n; ++k) {
    const SymplecticMatrix gamma = random_word(level2, rng, 1 + static_cast<int>(rng.index(12)));
    const SiegelPoint tau = random_point(g, rng);
    const Complex kappa = extract_kappa(gamma, tau, cfg.tol);
    const double d = std::abs(kappa * kappa - static_cast<double>(kappa_pow2(gamma)));
    kappa2_residual = std::max(kappa2_residual, d);
    if (d > kRootThreshold) ++kappa2_mismatch;
  }
  Checks checks;
  checks.below("transformation residual", residual, kIdentityThreshold);
  checks.below("|kappa^8 - 1|", kappa8, kRootThreshold);
  checks.equal("kappa^4 mismatches", kappa4_mismatch, 0);
  checks.equal("kappa^2 mismatches on Gamma(2)", kappa2_mismatch, 0);
  return report(cfg, checks,
                {{"genus", g},
                 {"samples", n},
                 {"max_residual", residual},
                 {"failures", failures},
                 {"ill_conditioned_redraws", ill},
                 {"kappa2_max_deviation", kappa2_residual}});
}

Json riemann_job(const JobConfig& cfg) {
  const int n = samples_or(cfg, 10);
  Rng rng(cfg.seed);
  Checks checks;
  Json artifacts;
  for (std::size_t g : genus_list(cfg, {2, 3}, 3)) {
    double rel = 0, rel_inverse = 0, odd_max = 0;
    const auto odd = enumerate_characteristics(g, ParityFilter::odd);
    for (const auto& tau : random_points(g, rng, n)) {
      rel = std::max(rel, riemann_relation(tau, cfg.tol).relative);
      rel_inverse = std::max(rel_inverse, riemann_relation_inverse(tau, cfg.tol).relative);
      for (const auto& m : odd) odd_max = std::max(odd_max, std::abs(theta_constant(m, tau, cfg.tol)));
    }
    checks.below(key(g) + " riemann relation", rel, kIdentityThreshold);
    checks.below(key(g) + " inverse riemann relation", rel_inverse, kIdentityThreshold);
    checks.below(key(g) + " odd theta constants", odd_max, kOddThreshold);
    artifacts[key(g)] = {{"riemann", rel}, {"riemann_inverse", rel_inverse}, {"odd_max", odd_max}};
  }
  const std::size_t g = cfg.genus ? cfg.genus : 2;
  double addition = 0;
  for (int k = 0; k < n; ++k) {
    const SiegelPoint tau = random_point(g, rng);
    const CVector z = random_vector(g, rng), w = random_vector(g, rng);
    addition = std::max(addition, addition_formula(tau, z, w, cfg.tol).relative);
  }
  checks.below(key(g) + " addition formula", addition, kIdentityThreshold);
  artifacts["addition_" + key(g)] = addition;
  return report(cfg, checks, artifacts);
}

std::vector<std::size_t> h_generators(const FiniteQuotient& g00) {
  const auto m = level_generators_m(2);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < 2; ++i) {
    out.push_back(*g00.find(m[i]));
    out.push_back(*g00.find(m[i].transpose()));
  }
  return out;
}

Json match_json(const SubgroupMatch& match) {
  return {{"H_order", match.h.size()},
          {"phi_H_order", match.phi_h.size()},
          {"explicit_map_ok", match.explicit_map_ok},
          {"gamma_matches", match.gamma_matches},
          {"gamma_prime_matches", match.gamma_prime_matches},
          {"gamma_fingerprint", {{"order", match.gamma_fingerprint.order}, {"exponent", match.gamma_fingerprint.exponent}}},
          {"gamma_prime_fingerprint",
           {{"order", match.gamma_prime_fingerprint.order}, {"exponent", match.gamma_prime_fingerprint.exponent}}}};
}

bool contains(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

Json quotients_job(const JobConfig& cfg) {
  fixed_genus(cfg, 2);
  Checks checks;
  const auto g0 = enumerate_quotient(GroupDescriptor::gamma0_2(2), GroupDescriptor::level_24_squared(2));
  const auto g00 = enumerate_quotient(GroupDescriptor::gamma00_2(2), GroupDescriptor::level_24(2));
  const auto g04 = enumerate_quotient(GroupDescriptor::gamma0_4(2), GroupDescriptor::level_24_fricke(2));
  const auto f2 = enumerate_quotient(GroupDescriptor::level_24_squared(2), GroupDescriptor::level_24(2));
  const auto f2_words = enumerate_quotient(GroupDescriptor::level_24_squared(2), GroupDescriptor::level_24(2),
                                           level_generators_m(2), {"M1", "M2", "M3"});
  const SymmetrizationGroup sym = symmetrization_group();
  const StructureReport s = structure_report(g0);

  checks.equal("[Gamma0(2) : Gamma^2(2,4)]", g0.order(), 96);
  checks.equal("|Gamma^2(2,4)/Gamma(2,4)| genus 2", f2.order(), 8);
  checks.holds("M1, M2, M3 give the same cosets", same_cosets(f2, f2_words));
  checks.equal("|Gamma^2(2,4)/Gamma(2,4)| genus 3", sym.quotient.order(), 64);
  checks.holds("genus-3 BFS agrees with the 2^6 words", sym.words_match_bfs);
  checks.holds("G has a normal elementary abelian subgroup of order 16", s.normal_elementary_abelian_16);
  checks.equal("complement order", s.complement_order, 6);
  checks.holds("complement nonabelian", s.complement_nonabelian);
  checks.holds("kernel normal in Gamma0(2)", kernel_is_normal(g0, cfg.seed));
  checks.holds("kernel normal in Gamma00(2)", kernel_is_normal(g00, cfg.seed + 1));

  const QuotientMap phi = phi_iso(g0, g00);
  checks.equal("|Gamma00(2)/Gamma(2,4)|", g00.order(), 96);
  checks.holds("phi multiplicative", phi.is_multiplicative());
  checks.holds("phi bijective", phi.is_bijective());
  checks.holds("phi independent of representative", phi.representative_independent);
  std::vector<std::size_t> images;
  for (const auto& x : generators(GroupDescriptor::gamma0_2(2))) images.push_back(phi.image[*g0.find(x)]);
  checks.equal("phi(generator families) generate", g00.subgroup(images).size(), g00.order());

  const QuotientMap fricke = fricke_iso(g0, g04);
  checks.equal("|Gamma0(4)/Gamma(2,4)^J2|", g04.order(), 96);
  checks.holds("phi' multiplicative", fricke.is_multiplicative());
  checks.holds("phi' bijective", fricke.is_bijective());

  const SubgroupMatch match = match_subgroups(g0, g00, phi, h_generators(g00), QuotientSide::gamma00);
  checks.equal("|H|", match.h.size(), 16);
  checks.holds("phi restricted to H is an isomorphism", match.explicit_map_ok);
  checks.holds("Gamma = Gamma(2)", contains(match.gamma_matches, "Gamma(2)"));
  checks.holds("Gamma' = Gamma1(2)", contains(match.gamma_prime_matches, "Gamma1(2)"));

  return report(cfg, checks,
                {{"index_96", g0.order()},
                 {"f2cubed", f2.order()},
                 {"genus3_quotient", sym.quotient.order()},
                 {"G_structure", s.description},
                 {"G_exponent", s.exponent},
                 {"G_class_sizes", s.class_sizes},
                 {"gamma00_quotient", g00.order()},
                 {"gamma0_4_quotient", g04.order()},
                 {"match", match_json(match)}});
}

std::string matrix_label(const SymplecticMatrix& x) { return x.entries().to_string(); }

Json signs_checks(const JobConfig& cfg, Checks& checks, int samples) {
  const SignReport s = verify_integer_weight_subring(cfg.seed, samples, cfg.tol);
  checks.below("sign action residual", s.max_sign_residual, kIdentityThreshold);
  checks.below("f_a^2 invariance residual", s.max_square_residual, kIdentityThreshold);
  checks.below("theta[0;b]^2 invariance residual", s.max_theta_square_residual, kIdentityThreshold);
  checks.equal("sign table rank over F2", s.sign_rank, 3);
  checks.equal("distinct sign patterns", s.distinct_patterns, 8);
  checks.holds("trivial on f_00", s.trivial_on_f00);
  Json table = Json::object();
  for (int i = 1; i <= 3; ++i) {
    Json row = Json::array();
    for (std::uint64_t a = 0; a < 4; ++a) row.push_back(sign_action(i, a));
    table["M" + std::to_string(i)] = row;
  }
  return table;
}

Json gmodule_job(const JobConfig& cfg) {
  fixed_genus(cfg, 2);
  const int n = samples_or(cfg, 3);
  Checks checks;
  const auto m = level_generators_m(2);
  const std::vector<SymplecticMatrix> h{m[0], m[1], m[0].transpose(), m[1].transpose()};
  const GModuleReport r = verify_G_module_iso(generators(GroupDescriptor::gamma0_2(2)), h, cfg.seed, n, cfg.tol);
  checks.holds("f and f^2 monomial actions agree exactly", r.all_exact);
  checks.below("slash residual", r.max_residual, kIdentityThreshold);
  checks.below("squaring intertwines H actions", r.witness_residual, kIdentityThreshold);
  Json per = Json::array();
  for (const auto& c : r.checks)
    per.push_back({{"label", c.label},
                   {"x", to_json(c.x)},
                   {"y", to_json(c.y)},
                   {"f_side", to_json(c.f_side)},
                   {"f2_side", to_json(c.f2_side)},
                   {"exact_equal", c.exact_equal},
                   {"residual", c.numeric_residual}});
  const Json signs = signs_checks(cfg, checks, std::max(n, 5));
  return report(cfg, checks, {{"generators", per}, {"sign_table", signs}});
}

Json fricke_job(const JobConfig& cfg) {
  fixed_genus(cfg, 2);
  const FrickeReport r = verify_fricke_identities(cfg.seed, samples_or(cfg, 5), 100, cfg.tol);
  Checks checks;
  checks.below("|v_Theta(J2)^8 - 1|", r.v_theta_root_error, kIdentityThreshold);
  checks.below("ratio spread over a and tau", r.ratio_spread, kIdentityThreshold);
  checks.below("ratio against v_Theta(J2)", r.ratio_vs_multiplier, kIdentityThreshold);
  checks.below("Fricke slash residual", r.slash_residual, kIdentityThreshold);
  checks.below("involution residual", r.involution_residual, kIdentityThreshold);
  checks.below("change of basis residual", r.hadamard_residual, kIdentityThreshold);
  Json memberships = Json::array();
  for (const auto& c : r.memberships) {
    checks.equal(c.label, c.failures, 0);
    memberships.push_back({{"label", c.label}, {"tested", c.tested}, {"failures", c.failures}});
  }
  return report(cfg, checks,
                {{"v_theta_j2", to_json(r.v_theta_j2)},
                 {"ratio_constant", to_json(r.ratio_constant)},
                 {"memberships", memberships},
                 {"fixed_groups", r.fixed_groups},
                 {"moved_groups", r.moved_groups}});
}

Json fibers_job(const JobConfig& cfg) {
  fixed_genus(cfg, 2);
  const int n = samples_or(cfg, 100);
  Rng rng(cfg.seed);
  std::map<std::size_t, int> histogram;
  int bad_images = 0;
  for (int k = 0; k < n; ++k) {
    std::array<Complex, 4> x;
    for (auto& c : x) c = Complex(rng.uniform(-1, 1), rng.uniform(-1, 1));
    const ProjectivePoint3 q(x);
    const auto pre = squaring_preimages(q);
    ++histogram[pre.size()];
    for (const auto& p : pre)
      if (!squaring_map(p).equivalent(q, 1e-9)) ++bad_images;
  }
  Checks checks;
  checks.equal("points with 8 preimages", histogram[8], n);
  checks.equal("preimages not mapping back", bad_images, 0);
  Json hist = Json::object();
  for (const auto& [size, count] : histogram)
    if (count) hist[std::to_string(size)] = count;
  return report(cfg, checks, {{"preimage_histogram", hist}});
}

Json classify_job(const JobConfig& cfg) {
  fixed_genus(cfg, 3);
  const int n = samples_or(cfg, 3);
  Rng rng(cfg.seed);
  const ClassificationReport r = classify_all(random_points(3, rng, n), cfg.tol);
  const SymmetrizationGroup group = symmetrization_group();
  Checks checks;
  checks.equal("total pairs", r.entries.size(), 378);
  checks.equal("nonvanishing", r.nonvanishing, 42);
  checks.equal("nonvanishing with ordered keys", r.nonvanishing_ordered, 42);
  checks.holds("nonvanishing iff m1' = m2'", r.criterion_matches);
  checks.equal("census prediction", r.census_prediction, 42);
  checks.holds("2^6 words match BFS", r.words_match_bfs);
  checks.equal("gap violations", r.gap_violations, 0);
  checks.below("formal against direct sum", r.max_formal_vs_direct, kFormalThreshold);

  const FormalThetaCombination example = symmetrize(example_m(), group);
  bool sixteen = example.terms().size() == 4;
  for (const auto& nm : example_n()) sixteen = sixteen && example.coefficient(nm) == Cyclotomic8(16);
  checks.holds("example: 16 on each of N1..N4 and 0 elsewhere", sixteen);

  bool fourth_roots = true, swap_invariant = true;
  for (const auto& e : r.entries) {
    for (const auto& gamma : group.representatives) {
      const int k = chi(e.m, gamma).root_index();
      fourth_roots = fourth_roots && k >= 0 && k % 2 == 0;
    }
    const auto swapped = symmetrize(e.m.swapped(), group).canonicalized();
    swap_invariant = swap_invariant && swapped.terms() == e.phi.terms();
  }
  checks.holds("chi is a 4th root of unity on the 64 representatives", fourth_roots);
  checks.holds("merged coefficients invariant under column swap", swap_invariant);

  const auto odd = enumerate_characteristics(3, ParityFilter::odd);
  const auto level = generators(GroupDescriptor::level_24(3));
  const auto full = generators(GroupDescriptor::full(3));
  double w_law = 0, w_min = INFINITY;
  for (int k = 0; k < std::max(n, 5); ++k) {
    const SiegelPoint tau = random_point(3, rng);
    const std::size_t i = rng.index(odd.size());
    std::size_t j = rng.index(odd.size() - 1);
    if (j >= i) ++j;
    const CharacteristicMatrix m({odd[i], odd[j]});
    w_min = std::min(w_min, gradient_form(m, tau, cfg.tol).norm());
    const auto& gens = k % 2 ? full : level;
    w_law = std::max(w_law, w_law_residual(m, random_word(gens, rng, 1 + static_cast<int>(rng.index(4))), tau, cfg.tol));
  }
  checks.below("W transformation law", w_law, kWLawThreshold);
  checks.above("W(M) nonzero at random tau", w_min, kGradientFloor);

  Json nonvanishing = Json::array(), entries = Json::array();
  for (const auto& e : r.entries) {
    if (e.nonvanishing) nonvanishing.push_back(to_json(e.m));
    entries.push_back({{"M", to_json(e.m)},
                       {"nonvanishing", e.nonvanishing},
                       {"criterion", e.criterion},
                       {"numeric_ratio", e.numeric_ratio},
                       {"coefficients", to_json(e.phi)}});
  }
  return report(cfg, checks,
                {{"total", r.entries.size()},
                 {"nonvanishing_count", r.nonvanishing},
                 {"nonvanishing", nonvanishing},
                 {"max_vanishing_ratio", r.max_vanishing_ratio},
                 {"min_nonvanishing_ratio", r.min_nonvanishing_ratio},
                 {"ratio_histogram_decades_from_1e-20", r.ratio_histogram},
                 {"example", {{"M", to_json(example_m())}, {"phi", to_json(example)}}},
                 {"entries", entries}});
}

Json r16_job(const JobConfig& cfg) {
  fixed_genus(cfg, 3);
  const int n = samples_or(cfg, 10);
  Rng rng(cfg.seed);
  double worst = 0, shifted = 0;
  for (const auto& tau : random_points(3, rng, n)) {
    worst = std::max(worst, verify_r16(tau, cfg.tol).relative);
    IntMatrix s = IntMatrix::zero(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i; j < 3; ++j) s(i, j) = s(j, i) = 2 * (static_cast<long>(rng.index(3)) - 1);
    shifted = std::max(shifted, verify_r16(tau.translated(s), cfg.tol).relative);
  }
  Json genus2 = Json::array();
  for (const auto& tau : random_points(2, rng, 3)) genus2.push_back(verify_r16(tau, cfg.tol).relative);
  Checks checks;
  checks.below("R16 relative residual", worst, kIdentityThreshold);
  checks.below("R16 at tau + 2S", shifted, kIdentityThreshold);
  return report(cfg, checks, {{"max_relative", worst}, {"genus2_relative_informational", genus2}});
}

Json q_invariance_job(const JobConfig& cfg) {
  fixed_genus(cfg, 3);
  const QInvarianceReport r = verify_q_invariance(cfg.seed, samples_or(cfg, 5), cfg.tol);
  Checks checks;
  checks.below("|q(M_i tau)/q(tau) - 1|", r.max_ratio_error, kIdentityThreshold);
  checks.below("f_a phase residual", r.max_phase_residual, kIdentityThreshold);
  checks.holds("exact phase product is 1", r.exact_product_phase_one);
  checks.holds("every generator flips an even number of signs",
               std::all_of(r.sign_flips.begin(), r.sign_flips.end(), [](int f) { return f % 2 == 0; }));
  return report(cfg, checks, {{"sign_flips", r.sign_flips}, {"samples", r.samples}, {"resampled", r.resampled}});
}

const std::map<std::string, std::function<Json(const JobConfig&)>>& registry() {
  static const std::map<std::string, std::function<Json(const JobConfig&)>> jobs{
      {"transformation", transformation_job}, {"riemann", riemann_job},   {"quotients", quotients_job},
      {"gmodule", gmodule_job},               {"fricke", fricke_job},     {"fibers", fibers_job},
      {"classify", classify_job},             {"r16", r16_job},           {"q-invariance", q_invariance_job},
      {"census", census_job}};
  return jobs;
}

}  // namespace

const std::vector<std::string>& job_names() {
  static const std::vector<std::string> names{"transformation", "riemann", "quotients", "gmodule",
                                              "fricke",         "fibers",  "classify",  "r16",
                                              "q-invariance",   "census",  "all"};
  return names;
}

Json run_job(const JobConfig& config) {
  if (config.tol <= 0) throw ConfigError("tolerance must be positive");
  if (config.job == "all") {
    Json jobs = Json::object();
    bool passed = true;
    for (const auto& name : job_names()) {
      if (name == "all") continue;
      JobConfig sub{name, config.seed, config.tol, 0, 0};
      jobs[name] = registry().at(name)(sub);
      passed = passed && report_passed(jobs[name]);
    }
    return {{"schema", kReportSchema},
            {"job", "all"},
            {"config", {{"seed", config.seed}, {"tolerance", config.tol}}},
            {"prng", {{"algorithm", Rng::kAlgorithm}, {"reference_output_10000", Rng::kReferenceOutput10000}}},
            {"jobs", jobs},
            {"passed", passed}};
  }
  const auto it = registry().find(config.job);
  if (it == registry().end()) throw ConfigError("unknown job: " + config.job);
  return it->second(config);
}

Json signs_job(const JobConfig& config) {
  fixed_genus(config, 2);
  Checks checks;
  const Json table = signs_checks(config, checks, samples_or(config, 5));
  return report(config, checks, {{"sign_table", table}});
}

Json quotient_job(const std::string& ambient, const std::string& kernel, std::size_t genus, bool list_elements) {
  const FiniteQuotient q = enumerate_quotient(GroupDescriptor::parse(ambient, genus), GroupDescriptor::parse(kernel, genus));
  Json out{{"ambient", q.ambient().name()},
           {"kernel", q.kernel().name()},
           {"genus", genus},
           {"order", q.order()},
           {"modulus", q.modulus()},
           {"generators", q.generator_names()}};
  if (list_elements) {
    Json elements = Json::array();
    for (std::size_t i = 0; i < q.order(); ++i)
      elements.push_back({{"index", i}, {"word", q.word_string(i)}, {"order", q.element_order(i)}});
    out["elements"] = elements;
  }
  return out;
}

Json structure_job(const std::string& ambient, const std::string& kernel, std::size_t genus) {
  const FiniteQuotient q = enumerate_quotient(GroupDescriptor::parse(ambient, genus), GroupDescriptor::parse(kernel, genus));
  const StructureReport s = structure_report(q);
  return {{"ambient", q.ambient().name()},
          {"kernel", q.kernel().name()},
          {"order", s.order},
          {"abelian", s.is_abelian},
          {"exponent", s.exponent},
          {"class_sizes", s.class_sizes},
          {"order_counts", s.order_counts},
          {"normal_elementary_abelian_16", s.normal_elementary_abelian_16},
          {"complement_order", s.complement_order},
          {"complement_nonabelian", s.complement_nonabelian},
          {"description", s.description}};
}

Json match_job() {
  const auto g0 = enumerate_quotient(GroupDescriptor::gamma0_2(2), GroupDescriptor::level_24_squared(2));
  const auto g00 = enumerate_quotient(GroupDescriptor::gamma00_2(2), GroupDescriptor::level_24(2));
  const QuotientMap phi = phi_iso(g0, g00);
  return match_json(match_subgroups(g0, g00, phi, h_generators(g00), QuotientSide::gamma00));
}

bool report_passed(const Json& report) { return report.value("passed", false); }

std::vector<std::string> emit_goldens(const std::string& directory) {
  std::error_code ec;
  std::filesystem::create_directories(directory, ec);
  if (ec) throw OutputError("cannot create directory " + directory + ": " + ec.message());
  std::vector<std::string> written;
  auto put = [&](const std::string& name, const Json& content) {
    const std::string path = (std::filesystem::path(directory) / name).string();
    write_json(content, path);
    written.push_back(path);
  };

  Json census = Json::object();
  for (std::size_t g = 1; g <= 4; ++g)
    census[key(g)] = {{"even", enumerate_characteristics(g, ParityFilter::even).size()},
                      {"odd", enumerate_characteristics(g, ParityFilter::odd).size()}};
  put("census.json", census);

  const auto g0 = enumerate_quotient(GroupDescriptor::gamma0_2(2), GroupDescriptor::level_24_squared(2));
  const auto g00 = enumerate_quotient(GroupDescriptor::gamma00_2(2), GroupDescriptor::level_24(2));
  const auto g04 = enumerate_quotient(GroupDescriptor::gamma0_4(2), GroupDescriptor::level_24_fricke(2));
  const auto f2 = enumerate_quotient(GroupDescriptor::level_24_squared(2), GroupDescriptor::level_24(2));
  const SymmetrizationGroup sym = symmetrization_group();
  const StructureReport s = structure_report(g0);
  put("group_orders.json", {{"index_96", g0.order()},
                            {"gamma00_quotient", g00.order()},
                            {"gamma0_4_quotient", g04.order()},
                            {"f2cubed", f2.order()},
                            {"genus3_quotient", sym.quotient.order()},
                            {"G_structure", s.description},
                            {"G_exponent", s.exponent},
                            {"G_class_sizes", s.class_sizes}});

  Json monomials = Json::array();
  for (const auto& x : generators(GroupDescriptor::gamma0_2(2))) {
    Json entry{{"x", to_json(x)}, {"f_squared_action", to_json(squared_action(x))}};
    if (const auto y = phi_exact(x)) {
      entry["phi_x"] = to_json(*y);
      entry["f_action_of_phi_x"] = to_json(second_order_action(*y));
    }
    entry["label"] = matrix_label(x);
    monomials.push_back(entry);
  }
  put("monomial_matrices.json", monomials);

  Json signs = Json::object();
  for (int i = 1; i <= 3; ++i) {
    Json row = Json::array();
    for (std::uint64_t a = 0; a < 4; ++a) row.push_back(sign_action(i, a));
    signs["M" + std::to_string(i)] = row;
  }
  put("sign_table.json", signs);

  const ClassificationReport r = classify_all({});
  Json nonvanishing = Json::array();
  for (const auto& e : r.entries)
    if (e.nonvanishing) nonvanishing.push_back({{"M", to_json(e.m)}, {"phi", to_json(e.phi)}});
  Json ns = Json::array();
  for (const auto& n : example_n()) ns.push_back(to_json(n));
  put("genus3_classification.json", {{"total", r.entries.size()},
                                     {"nonvanishing_count", r.nonvanishing},
                                     {"nonvanishing", nonvanishing},
                                     {"example_M", to_json(example_m())},
                                     {"example_N", ns},
                                     {"example_phi", to_json(symmetrize(example_m(), sym))}});
  return written;
}

}  // namespace siegel
