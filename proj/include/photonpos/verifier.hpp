#pragma once

// Expected-outcome suites: every identity claim is run through the operator
// algebra and reported with its status, the expected status, and a witness
// when a zero-test finds a violation. Deterministic given (seed, tolerance,
// sample plan): every condition derives its own point stream from the global
// seed and its identifier.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "photonpos/catalog.hpp"

namespace photonpos {

enum class Status { kPass, kFail, kVacuousPass };
enum class Expectation { kPass, kFail, kInformational };

std::string to_string(Status s);
std::string to_string(Expectation e);

struct ConditionReport {
  std::string suite;
  std::string representation;
  std::string condition;
  Status status = Status::kPass;
  Expectation expected = Expectation::kPass;
  std::optional<Witness> witness;
  double tolerance = 1e-9;
  int samples = 64;
  std::uint64_t seed = 0;
  std::string note;

  bool matches_expectation() const;
};

struct SuiteReport {
  std::string name;
  std::string representation;
  std::vector<ConditionReport> conditions;
};

struct VerifierConfig {
  std::uint64_t seed = 0;
  int samples = 64;
  double tolerance = 1e-9;
  double shell_min = 0.5;
  double shell_max = 2.0;
  double axis_margin = 0.1;
};

struct ReportFilter {
  std::string suite = "all";
  std::string representation = "all";
  std::string op = "all";  // pryce | hawton; applies to position conditions
};

struct ReportDocument {
  VerifierConfig config;
  std::vector<SuiteReport> suites;
  bool success = true;
};

struct InnerProductEstimate {
  Complex value;
  double std_error = 0.0;
  int samples = 0;
};

// Monte Carlo estimate of sum_i integral conj(f_i) g_i d^3p over a Gaussian
// importance sampler. Rejects wavefunctions without Gaussian damping.
InnerProductEstimate inner_product(const WaveFn& f, const WaveFn& g,
                                   std::uint64_t seed, int n_samples);

std::vector<ConditionReport> check_lie_algebra(const Representation& rep,
                                               const VerifierConfig& cfg);
std::vector<ConditionReport> check_helicity(const OperatorCatalog& cat,
                                            const VerifierConfig& cfg);
std::vector<ConditionReport> check_pauli_lubanski(const OperatorCatalog& cat,
                                                  const Representation& rep,
                                                  const VerifierConfig& cfg);
std::vector<ConditionReport> check_position_conditions(
    const std::string& op_label, const std::array<LinOp, 3>& x,
    const Representation& rep, const OperatorCatalog& cat,
    const VerifierConfig& cfg);
std::vector<ConditionReport> check_rotation_witness(const OperatorCatalog& cat,
                                                    const VerifierConfig& cfg);
std::vector<ConditionReport> check_subspace_invariance(
    const OperatorCatalog& cat, const VerifierConfig& cfg);
std::vector<ConditionReport> check_hawton_identities(
    const OperatorCatalog& cat, const std::string& rep_name,
    const VerifierConfig& cfg);
std::vector<ConditionReport> check_adjoints(const OperatorCatalog& cat,
                                            const VerifierConfig& cfg);
std::vector<ConditionReport> check_engine_oracle(const OperatorCatalog& cat,
                                                 const VerifierConfig& cfg);

// The operator pool that randomized property checks draw from; spans every
// operator family.
std::vector<NamedOperator> property_pool(const OperatorCatalog& cat);

ReportDocument full_report(const VerifierConfig& cfg,
                           const ReportFilter& filter = {});

}  // namespace photonpos
