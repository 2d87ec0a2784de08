#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hypgamma/closedform.hpp"
#include "hypgamma/squeeze.hpp"

namespace hypgamma::verify {

struct ClaimResult {
  std::string suite;
  std::string claim;
  bool pass = false;
  // Max residual for identity claims, min margin for strict inequalities.
  double worst = 0.0;
  std::string detail;
};

struct Options {
  int digits = 15;
  long n_max = 2000;   // bracket index for containment / ordering claims
  long chain_n = 500;  // monotone-chain range
  int samples = 1000;
  unsigned long long seed = 20260809ull;
  std::optional<double> r_override;
  std::optional<long> n_override;
  Exec exec = Exec::parallel;
};

// Registered suite names, in execution order.
std::vector<std::string> suite_names();

// Runs one suite; throws DomainError for an unknown name.
std::vector<ClaimResult> run_suite(const std::string& name, const Options& options);

}  // namespace hypgamma::verify
