#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "siegel/jobs.hpp"
#include "siegel/quotients.hpp"

using namespace siegel;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kConfig = 2;

int emit(const Json& report, const std::string& out) {
  if (out.empty()) {
    std::cout << report.dump(2) << '\n';
  } else {
    write_json(report, out);
    if (report.contains("checks"))
      for (const auto& c : report["checks"])
        std::cout << c["status"].get<std::string>() << "  " << c["name"].get<std::string>() << '\n';
    if (report.contains("jobs"))
      for (const auto& [name, sub] : report["jobs"].items())
        std::cout << (report_passed(sub) ? "pass" : "fail") << "  " << name << '\n';
    std::cout << "report written to " << out << '\n';
  }
  if (!report.contains("passed")) return kPass;
  return report_passed(report) ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification driver for theta constants, congruence quotients and Siegel modular forms"};
  app.fallthrough();
  app.require_subcommand(0, 1);

  JobConfig cfg;
  std::string out;
  app.add_option("--job", cfg.job, "registered job: transformation, riemann, quotients, gmodule, fricke, fibers, "
                                   "classify, r16, q-invariance, census, all");
  app.add_option("--seed", cfg.seed, "seed of the mt19937_64 sampler")->capture_default_str();
  app.add_option("--tol", cfg.tol, "truncation tolerance of the theta series")->capture_default_str();
  app.add_option("--samples", cfg.samples, "sample count (0: job default)");
  app.add_option("--out", out, "write the JSON report (or goldens) here instead of stdout");
  app.add_option("--genus", cfg.genus, "genus (0: job default)");

  auto* goldens = app.add_subcommand("goldens", "write canonical JSON golden files into --out DIR");

  auto* theta_cmd = app.add_subcommand("theta", "theta constants");
  auto* theta_eval = theta_cmd->add_subcommand("eval", "evaluate theta[m](tau, 0)");
  std::string characteristic, tau_text, input_text;
  theta_eval->add_option("--char", characteristic, "characteristic m'|m'', e.g. 01|11");
  theta_eval->add_option("--tau", tau_text, "tau as JSON rows of numbers or [re, im]; random from --seed if absent");
  theta_eval->add_option("--input", input_text, "JSON object {characteristic, tau, z, tol} (overrides the other options)");
  theta_cmd->require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "theta transformation formula");
  verify->add_subcommand("transformation", "random words in Sp(2g, Z) at random tau");
  verify->require_subcommand(1);

  auto* quotient = app.add_subcommand("quotient", "finite quotients of congruence subgroups");
  std::string ambient = "Gamma0(2)", kernel = "Gamma^2(2,4)";
  bool list_elements = false;
  auto* q_enum = quotient->add_subcommand("enumerate", "BFS enumeration of ambient/kernel");
  auto* q_struct = quotient->add_subcommand("structure", "structure report of ambient/kernel");
  auto* q_match = quotient->add_subcommand("match", "subgroups matched by phi for H = <M1, M2, tM1, tM2>");
  for (auto* sub : {q_enum, q_struct}) {
    sub->add_option("--ambient", ambient, "ambient group, e.g. Gamma0(2)")->capture_default_str();
    sub->add_option("--kernel", kernel, "normal subgroup, e.g. Gamma^2(2,4)")->capture_default_str();
  }
  q_enum->add_flag("--list", list_elements, "list every element with its generator word");
  quotient->require_subcommand(1);

  auto* genus2 = app.add_subcommand("genus2", "genus-2 second-order theta constants");
  auto* g2_verify = genus2->add_subcommand("verify", "run one genus-2 check");
  std::string check;
  g2_verify->add_option("--check", check, "signs, gmodule, fricke or fibers")
      ->required()
      ->check(CLI::IsMember({"signs", "gmodule", "fricke", "fibers"}));
  genus2->require_subcommand(1);

  auto* genus3 = app.add_subcommand("genus3", "genus-3 forms");
  auto* g3_classify = genus3->add_subcommand("classify", "classify the 378 symmetrized gradient forms");
  auto* g3_r16 = genus3->add_subcommand("r16", "the degree-16 relation");
  auto* g3_q = genus3->add_subcommand("q-invariance", "invariance of q = prod f_a");
  genus3->require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kConfig;
  }

  try {
    auto run = [&](const std::string& job) {
      cfg.job = job;
      return emit(run_job(cfg), out);
    };
    if (*goldens) {
      if (out.empty()) throw ConfigError("goldens needs --out DIR");
      for (const auto& path : emit_goldens(out)) std::cout << path << '\n';
      return kPass;
    }
    if (*theta_eval) {
      Json input = input_text.empty() ? Json::object() : Json::parse(input_text);
      if (!input.is_object()) throw ConfigError("--input must be a JSON object");
      if (input.contains("characteristic")) characteristic = input["characteristic"].get<std::string>();
      if (input.contains("tol")) cfg.tol = input["tol"].get<double>();
      if (characteristic.empty()) throw ConfigError("theta eval needs a characteristic");
      const ThetaCharacteristic m = ThetaCharacteristic::parse(characteristic);
      SiegelPoint tau = SiegelPoint::imaginary_identity(m.genus());
      if (input.contains("tau")) {
        tau = siegel_point_from_json(input["tau"]);
      } else if (!tau_text.empty()) {
        tau = siegel_point_from_json(Json::parse(tau_text));
      } else {
        Rng rng(cfg.seed);
        tau = random_point(m.genus(), rng);
      }
      if (tau.genus() != m.genus()) throw ConfigError("characteristic and tau have different genus");
      CVector z = CVector::Zero(static_cast<Eigen::Index>(m.genus()));
      if (input.contains("z")) {
        const Json& zs = input["z"];
        if (!zs.is_array() || zs.size() != m.genus()) throw ConfigError("z must have one entry per genus");
        for (std::size_t i = 0; i < m.genus(); ++i)
          z(static_cast<Eigen::Index>(i)) = zs[i].is_number() ? Complex(zs[i].get<double>(), 0.0)
                                                              : Complex(zs[i].at(0).get<double>(), zs[i].at(1).get<double>());
      }
      const ThetaValue v = theta(m, tau, z, cfg.tol);
      Json rows = Json::array();
      for (Eigen::Index i = 0; i < tau.tau().rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index j = 0; j < tau.tau().cols(); ++j) row.push_back(to_json(tau.tau()(i, j)));
        rows.push_back(row);
      }
      return emit({{"characteristic", m.to_string()},
                   {"tau", rows},
                   {"value", to_json(v.value)},
                   {"radius", v.radius},
                   {"tail_bound", v.tail_bound},
                   {"terms", v.terms}},
                  out);
    }
    if (*verify) return run("transformation");
    if (*q_enum) return emit(quotient_job(ambient, kernel, cfg.genus ? cfg.genus : 2, list_elements), out);
    if (*q_struct) return emit(structure_job(ambient, kernel, cfg.genus ? cfg.genus : 2), out);
    if (*q_match) return emit(match_job(), out);
    if (*g2_verify) {
      if (check == "signs") {
        cfg.job = "signs";
        return emit(signs_job(cfg), out);
      }
      return run(check);
    }
    if (*g3_classify) return run("classify");
    if (*g3_r16) return run("r16");
    if (*g3_q) return run("q-invariance");
    if (cfg.job.empty()) {
      std::cerr << "nothing to do: pass --job NAME or a subcommand (see --help)\n";
      return kConfig;
    }
    return emit(run_job(cfg), out);
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kConfig;
  } catch (const Json::exception& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kConfig;
  } catch (const OutputError& e) {
    std::cerr << "output error: " << e.what() << '\n';
    return kConfig;
  } catch (const QuotientConfigError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFail;
  }
}
