// Acceptance gate: one line per criterion, each backed by the corresponding
// verification suite at its documented desk-scale parameters. Exit status is
// nonzero when any criterion fails. Criterion 3 runs the full theta sweep
// over every observable family; the content-built families are not
// polynomial in n away from theta = 1, so the sweep reports their failures
// with the witnessing average sequences rather than hiding them.

#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "planch/verify.hpp"

using namespace planch;

namespace {

struct Gate {
  int failed = 0;

  void criterion(int k, const std::string& what, const SuiteResult& res) {
    bool ok = res.all_pass();
    if (!ok) ++failed;
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << k << ". " << what << " ("
              << res.passed() << "/" << res.cases.size() << " cases)\n";
  }
};

std::string family_of(const std::string& case_name) {
  return case_name.substr(0, case_name.find(' '));
}

}  // namespace

int main() {
  Workspace ws;
  SuiteOptions full;
  Gate gate;

  gate.criterion(1, "falling-factorial averages match the binomial closed form",
                 run_stanley(ws, full));
  gate.criterion(2,
                 "deformed falling-factorial averages match the weighted "
                 "closed form",
                 run_jack_closed_form(ws, full));

  SuiteResult sweep = run_polynomiality_all_theta(ws, full);
  gate.criterion(3,
                 "order-(D+1) average differences vanish for every observable "
                 "family at theta in {1/2, 1, 2}",
                 sweep);
  std::map<std::string, std::pair<int, int>> families;
  const SuiteCase* first_fail = nullptr;
  for (const SuiteCase& c : sweep.cases) {
    auto& [pass, total] = families[family_of(c.name)];
    ++total;
    if (c.pass) {
      ++pass;
    } else if (!first_fail) {
      first_fail = &c;
    }
  }
  for (const auto& [family, counts] : families) {
    std::cout << "       " << family << ": " << counts.first << "/"
              << counts.second << "\n";
  }
  if (first_fail) {
    std::cout << "       first failure: " << first_fail->name << ": "
              << first_fail->detail << "\n";
  }

  gate.criterion(4, "growth-chain marginals equal the direct deformed measures",
                 run_growth_vs_jack(ws, full));
  gate.criterion(5,
                 "transition weights form a probability vector, reproduce the "
                 "corner moments, and satisfy the ratio identity",
                 run_kerov_identities(ws, full));
  gate.criterion(6,
                 "difference-operator expansion holds pointwise with exact "
                 "series coefficients",
                 run_del_identity(ws, full));
  gate.criterion(7,
                 "corner, row, and half-shift factorizations of the "
                 "characteristic ratio hold",
                 run_structural(ws, full));
  gate.criterion(8, "transposing diagrams inverts the deformation parameter",
                 run_duality(ws, full));
  gate.criterion(9,
                 "seeded sampler frequencies track the exact measure within "
                 "1/100",
                 run_sampler_stats(ws, full));
  gate.criterion(10,
                 "dimension routes agree and their squares sum to factorials",
                 run_combinatorial_core(ws, full));

  if (gate.failed != 0) {
    std::cout << gate.failed << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}
