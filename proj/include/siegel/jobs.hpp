#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "siegel/json_io.hpp"

namespace siegel {

/// Unknown job, unsupported genus or other invalid configuration (exit code 2).
struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct JobConfig {
  std::string job;
  std::uint64_t seed = 1;
  double tol = kDefaultTolerance;  // truncation tolerance of the theta engine
  int samples = 0;                 // 0 selects the job's default
  std::size_t genus = 0;           // 0 selects the job's default
};

inline constexpr const char* kReportSchema = "siegel-report/1";

/// transformation, riemann, quotients, gmodule, fricke, fibers, classify, r16, q-invariance, census, all.
const std::vector<std::string>& job_names();

/// Runs a registered job. The report has "checks" (name, status, measured, threshold) and
/// "passed"; it contains no timings, so it is reproducible for fixed configuration.
Json run_job(const JobConfig& config);

/// The genus-2 sign table and integer-weight subring checks (also part of "gmodule").
Json signs_job(const JobConfig& config);

/// Ambient/kernel quotient summary: order, modulus, generators, optionally every element word.
Json quotient_job(const std::string& ambient, const std::string& kernel, std::size_t genus, bool list_elements);
/// structure_report of ambient/kernel.
Json structure_job(const std::string& ambient, const std::string& kernel, std::size_t genus);
/// The matched pair (Γ, Γ′) for H = ⟨M₁, M₂, ᵗM₁, ᵗM₂⟩ in genus 2.
Json match_job();

bool report_passed(const Json& report);

/// Writes the canonical golden files into `directory` and returns their paths.
std::vector<std::string> emit_goldens(const std::string& directory);

}  // namespace siegel
