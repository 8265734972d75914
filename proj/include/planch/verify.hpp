#pragma once

#include <optional>
#include <string>
#include <vector>

#include "planch/polycheck.hpp"
#include "planch/workspace.hpp"

namespace planch {

struct SuiteCase {
  std::string name;
  bool pass = false;
  std::string detail;  // counterexample or short note; empty when passing
};

struct SuiteResult {
  std::string suite;
  std::vector<SuiteCase> cases;

  bool all_pass() const;
  int passed() const;
};

// Optional overrides for a suite run. Without them each suite runs at its
// documented desk-scale parameters. `theta` restricts the suite's theta grid
// to the single given value; `n_max` replaces the documented size cap.
struct SuiteOptions {
  std::optional<Rat> theta;
  std::optional<int> n_max;
};

SuiteResult run_stanley(Workspace& ws, const SuiteOptions& opt = {});
SuiteResult run_jack_closed_form(Workspace& ws, const SuiteOptions& opt = {});
SuiteResult run_polynomiality(Workspace& ws, const SuiteOptions& opt = {});
SuiteResult run_growth_vs_jack(Workspace& ws, const SuiteOptions& opt = {});
SuiteResult run_kerov_identities(Workspace& ws, const SuiteOptions& opt = {});
SuiteResult run_del_identity(Workspace& ws, const SuiteOptions& opt = {});
SuiteResult run_duality(Workspace& ws, const SuiteOptions& opt = {});

// Additional suites used by the acceptance harness and exposed for
// completeness: structural identities on contents and Frobenius coordinates,
// sampler statistics, and the dual-route dimension checks.
SuiteResult run_structural(Workspace& ws, const SuiteOptions& opt = {});
SuiteResult run_sampler_stats(Workspace& ws, const SuiteOptions& opt = {});
SuiteResult run_combinatorial_core(Workspace& ws, const SuiteOptions& opt = {});

// Exhaustive polynomiality sweep over every observable family at every theta
// in {1/2, 1, 2}. The plain-content families (content products and
// content/shifted-Schur hybrids) are polynomial in n only at theta = 1, so
// this sweep fails by construction away from theta = 1; run_polynomiality is
// the theorem-scoped suite. Kept separate so the exhaustive accounting stays
// available to the acceptance harness.
SuiteResult run_polynomiality_all_theta(Workspace& ws,
                                        const SuiteOptions& opt = {});

// The value series behind run_polynomiality, one report per observable and
// theta pair, for table export.
std::vector<PolyReport> polynomiality_reports(Workspace& ws,
                                              const SuiteOptions& opt = {});

// Names accepted by run_suite, the seven primary ones first.
std::vector<std::string> suite_names();

// Dispatch by suite name; throws usage_error for an unknown name.
SuiteResult run_suite(const std::string& name, Workspace& ws,
                      const SuiteOptions& opt = {});

}  // namespace planch
