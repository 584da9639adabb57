#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bolkit/catalog.hpp"
#include "bolkit/report.hpp"

namespace bolkit {

struct SuiteConfig {
  std::uint64_t seed = kDefaultSeed;
  int samples = 200;
  /// Replaces the default tolerance of every toleranced numerical check.
  std::optional<double> tol;
  /// Catalog used for lookups; the built-in one when null.
  const Catalog* catalog = nullptr;

  const Catalog& cat() const { return catalog ? *catalog : Catalog::builtin(); }
  double tol_or(double fallback) const { return tol.value_or(fallback); }
};

const std::vector<std::string>& suite_ids();
bool has_suite(const std::string& id);

/// Throws LookupError for unknown ids.
std::vector<VerificationReport> run_suite(const std::string& id, const SuiteConfig& cfg);

// Building blocks of the suites, also used by the acceptance harness.
std::vector<VerificationReport> algebra_reports(const LieAlgebra& alg);
std::vector<VerificationReport> triple_system_reports(const SuiteConfig& cfg);
std::vector<VerificationReport> semisimple_family_reports(const SuiteConfig& cfg);
std::vector<VerificationReport> semidirect_family_reports(const SuiteConfig& cfg);
std::vector<VerificationReport> grading_ledger_reports(const SuiteConfig& cfg);
std::vector<VerificationReport> isomorphism_reports(const SuiteConfig& cfg);
std::vector<VerificationReport> scan_reports(const SuiteConfig& cfg, int n_samples = 1000);
std::vector<VerificationReport> exponential_reports(const SuiteConfig& cfg, int n_samples = 100);
std::vector<VerificationReport> global_loop_reports(const SuiteConfig& cfg);
std::vector<VerificationReport> local_loop_reports(const SuiteConfig& cfg);
std::vector<VerificationReport> intersection_reports(const SuiteConfig& cfg);
std::vector<VerificationReport> conjugacy_reports(const SuiteConfig& cfg);
std::vector<VerificationReport> divergence_reports(const SuiteConfig& cfg);
std::vector<VerificationReport> nonbol_reports(const SuiteConfig& cfg);

/// Checks for a single catalog entry or loop: algebras, triple systems,
/// stabilisers, families, and the loop ids "L0", "scheerer",
/// "pseudo-euclidean", "nonbol". Throws LookupError for unknown targets.
std::vector<VerificationReport> verify_target(const std::string& id, const SuiteConfig& cfg);

}  // namespace bolkit
