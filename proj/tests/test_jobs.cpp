#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "doctest.h"
#include "siegel/jobs.hpp"
#include "siegel/parallel.hpp"

using namespace siegel;

namespace {

Json run(const std::string& job, std::uint64_t seed = 1, int samples = 0, std::size_t genus = 0) {
  JobConfig cfg;
  cfg.job = job;
  cfg.seed = seed;
  cfg.samples = samples;
  cfg.genus = genus;
  return run_job(cfg);
}

Json read(const std::filesystem::path& p) {
  std::ifstream in(p);
  return Json::parse(in);
}

std::filesystem::path temp_dir(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / ("siegel-test-" + name);
  std::filesystem::remove_all(dir);
  return dir;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("registered jobs") {
    const auto& names = job_names();
    for (const char* n : {"transformation", "riemann", "quotients", "gmodule", "fricke", "fibers", "classify", "r16",
                          "q-invariance", "census", "all"})
      CHECK(std::find(names.begin(), names.end(), n) != names.end());
    CHECK_THROWS_AS(run("nope"), ConfigError);
    CHECK_THROWS_AS(run("classify", 1, 0, 2), ConfigError);
    CHECK_THROWS_AS(run("quotients", 1, 0, 3), ConfigError);
  }

  TEST_CASE("report layout") {
    const Json r = run("census");
    CHECK(r["schema"] == kReportSchema);
    CHECK(r["job"] == "census");
    CHECK(r["prng"]["algorithm"] == "mt19937_64");
    CHECK(r["prng"]["reference_output_10000"] == Rng::kReferenceOutput10000);
    CHECK(r["passed"] == true);
    CHECK(report_passed(r));
    CHECK(r["artifacts"]["g3"]["even"] == 36);
    CHECK(r["artifacts"]["g4"]["odd"] == 120);
    for (const auto& c : r["checks"]) {
      CHECK(c.contains("measured"));
      CHECK(c.contains("threshold"));
      CHECK(c["status"] == "pass");
    }
  }

  TEST_CASE("reports are deterministic") {
    CHECK(run("fibers", 3).dump() == run("fibers", 3).dump());
    CHECK(run("transformation", 3, 5).dump() == run("transformation", 3, 5).dump());
    CHECK(run("transformation", 3, 5).dump() != run("transformation", 4, 5).dump());
  }

  TEST_CASE("quotient artifacts") {
    const Json r = run("quotients");
    CHECK(report_passed(r));
    CHECK(r["artifacts"]["index_96"] == 96);
    CHECK(r["artifacts"]["f2cubed"] == 8);
    CHECK(r["artifacts"]["genus3_quotient"] == 64);
    const Json q = quotient_job("Gamma0(2)", "Gamma^2(2,4)", 2, true);
    CHECK(q["order"] == 96);
    CHECK_THROWS_AS(quotient_job("Gamma7", "Gamma(2,4)", 2, false), std::invalid_argument);
  }

  TEST_CASE("classification job") {
    const Json r = run("classify", 1, 1);
    CHECK(report_passed(r));
    CHECK(r["artifacts"]["nonvanishing_count"] == 42);
  }

  TEST_CASE("golden files") {
    const auto dir = temp_dir("goldens");
    const auto paths = emit_goldens(dir.string());
    CHECK(paths.size() == 5);
    const auto again = temp_dir("goldens-again");
    emit_goldens(again.string());
    for (const char* f : {"census.json", "group_orders.json", "monomial_matrices.json", "sign_table.json",
                          "genus3_classification.json"}) {
      CAPTURE(f);
      REQUIRE(std::filesystem::exists(dir / f));
      CHECK(read(dir / f) == read(again / f));
    }
    const std::string text = read(dir / "genus3_classification.json").dump();
    for (const char* c : {"001|001", "001|011", "001|101", "001|111"}) CHECK(text.find(c) != std::string::npos);
    const Json signs = read(dir / "sign_table.json");
    CHECK(signs.dump().find("-1") != std::string::npos);
    std::filesystem::remove_all(dir);
    std::filesystem::remove_all(again);
  }

  TEST_CASE("output errors") {
    CHECK_THROWS_AS(write_json(Json::object(), "/nonexistent-dir/x/report.json"), OutputError);
    CHECK_THROWS_AS(emit_goldens("/proc/siegel-goldens"), OutputError);
  }

  TEST_CASE("Siegel points from JSON") {
    const SiegelPoint tau = siegel_point_from_json(Json::parse("[[[0,1],0.5],[0.5,[0,2]]]"));
    CHECK(tau.tau()(0, 1) == Complex(0.5, 0));
    CHECK(tau.tau()(1, 1) == Complex(0, 2));
    CHECK_THROWS(siegel_point_from_json(Json::parse("[[1]]")));
    CHECK_THROWS(siegel_point_from_json(Json::parse("[[[0,1],0.5],[0.4,[0,2]]]")));
  }

  TEST_CASE("parallel loop") {
    ::setenv("SIEGEL_THREADS", "3", 1);
    CHECK(thread_count() == 3);
    std::vector<std::atomic<int>> hits(100);
    parallel_for(hits.size(), [&](std::size_t i) { ++hits[i]; });
    for (const auto& h : hits) CHECK(h.load() == 1);
    CHECK_THROWS_AS(parallel_for(10, [](std::size_t i) {
                      if (i == 7) throw std::runtime_error("boom");
                    }),
                    std::runtime_error);
    ::setenv("SIEGEL_THREADS", "zero", 1);
    CHECK(thread_count() == 1);
    ::unsetenv("SIEGEL_THREADS");
    CHECK(thread_count() == 1);
  }
}
