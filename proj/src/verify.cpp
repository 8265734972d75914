#include "planch/verify.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>

#include "planch/measures.hpp"
#include "planch/polycheck.hpp"

namespace planch {

bool SuiteResult::all_pass() const {
  return std::all_of(cases.begin(), cases.end(),
                     [](const SuiteCase& c) { return c.pass; });
}

int SuiteResult::passed() const {
  return static_cast<int>(std::count_if(
      cases.begin(), cases.end(), [](const SuiteCase& c) { return c.pass; }));
}

namespace {

std::string par(const Partition& la) { return "(" + la.str() + ")"; }

Rat rq(long num, long den) { return make_rat(Int(num), Int(den)); }

std::vector<Rat> theta_grid(const SuiteOptions& opt, std::vector<Rat> dflt) {
  if (opt.theta) return {*opt.theta};
  return dflt;
}

int cap(const SuiteOptions& opt, int dflt) { return opt.n_max.value_or(dflt); }

std::string join_rats(const std::vector<Rat>& values) {
  std::string out;
  for (size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += rat_str(values[i]);
  }
  return out;
}

// Rational test points r/1009 with 1009 coprime to r. Every pole of the
// evaluated products lies on a grid with denominator at most 2 whenever theta
// does, so these points can never collide with one.
class PointSource {
 public:
  explicit PointSource(std::uint64_t seed) : gen_(seed) {}

  Rat next() {
    while (true) {
      const long r =
          static_cast<long>(gen_() % 100001) - 50000;
      if (r % 1009 == 0) continue;
      return rq(r, 1009);
    }
  }

 private:
  std::mt19937_64 gen_;
};

std::string table_mismatch(const MeasureTable& a, const MeasureTable& b) {
  for (const auto& [la, w] : a.weights) {
    auto it = b.weights.find(la);
    if (it == b.weights.end()) {
      return "lambda=" + par(la) + " missing from " +
             provenance_str(b.provenance);
    }
    if (!(it->second == w)) {
      return "lambda=" + par(la) + " " + provenance_str(a.provenance) + "=" +
             rat_str(w) + " " + provenance_str(b.provenance) + "=" +
             rat_str(it->second);
    }
  }
  return "support sizes differ";
}

bool tables_equal(const MeasureTable& a, const MeasureTable& b,
                  std::string* detail) {
  if (a.weights == b.weights) return true;
  if (detail) *detail = table_mismatch(a, b);
  return false;
}

struct PolyFamilyCase {
  std::string family;
  Observable obs;
};

// Products of content power sums: the evaluation map applied to p_rho.
std::vector<PolyFamilyCase> content_product_cases() {
  std::vector<PolyFamilyCase> out;
  for (int m = 1; m <= 5; ++m) {
    for (const auto& rho : partitions_of(m)) {
      if (rho.size() + rho.length() <= 6) {
        out.push_back(
            {"content-product", Observable::content_g(SymFunc::power(rho))});
      }
    }
  }
  return out;
}

// Mixed products: a content product times a shifted-coordinate power sum.
std::vector<PolyFamilyCase> hybrid_cases() {
  std::vector<PolyFamilyCase> out;
  for (int mr = 1; mr <= 4; ++mr) {
    for (const auto& rho : partitions_of(mr)) {
      const int dr = rho.size() + rho.length();
      if (dr > 5) continue;
      for (int ms = 1; ms <= 4; ++ms) {
        for (const auto& sigma : partitions_of(ms)) {
          const int ds = sigma.size() + sigma.length();
          if (dr + ds > 6) continue;
          out.push_back({"content-times-shifted",
                         Observable::product(
                             {Observable::content_g(SymFunc::power(rho)),
                              Observable::h_psi(SymFunc::power(sigma))})});
        }
      }
    }
  }
  return out;
}

std::vector<PolyFamilyCase> h_product_cases() {
  std::vector<PolyFamilyCase> out;
  for (int m = 2; m <= 6; ++m) {
    for (const auto& rho : partitions_of(m)) {
      if (rho.part(rho.length()) >= 2 && rho.size() - rho.length() <= 3) {
        out.push_back({"h-product", Observable::h_prod(rho)});
      }
    }
  }
  return out;
}

std::vector<PolyFamilyCase> frak_cases() {
  std::vector<PolyFamilyCase> out;
  for (int m = 1; m <= 5; ++m) {
    out.push_back({"corner-power", Observable::frak_p(m)});
  }
  return out;
}

void run_poly_case(SuiteResult& res, Workspace& ws, const PolyFamilyCase& fc,
                   const Rat& theta, const SuiteOptions& opt) {
  const int degree = fc.obs.degree_bound();
  const int n_max = opt.n_max ? *opt.n_max : degree + 3;
  PolyReport report = check_polynomiality(fc.obs, theta, ws, n_max, degree);
  std::string detail;
  if (!report.verdict) {
    detail = "order-" + std::to_string(degree + 1) +
             " differences do not vanish; values(n=0.." +
             std::to_string(n_max) + ")=" + join_rats(report.values);
  }
  res.cases.push_back({fc.family + " " + fc.obs.spec_str() +
                           " theta=" + rat_str(theta) +
                           " D=" + std::to_string(degree),
                       report.verdict, detail});
}

// The theorem-scoped grid: content-built families at theta = 1, the
// corner-coordinate families across the theta grid.
template <typename Fn>
void for_each_scoped_poly_case(const SuiteOptions& opt, Fn&& fn) {
  if (!opt.theta || *opt.theta == 1) {
    for (const auto& fc : content_product_cases()) fn(fc, Rat(1));
    for (const auto& fc : hybrid_cases()) fn(fc, Rat(1));
  }
  for (const Rat& theta : theta_grid(opt, {rq(1, 2), Rat(1), Rat(2)})) {
    for (const auto& fc : h_product_cases()) fn(fc, theta);
    for (const auto& fc : frak_cases()) fn(fc, theta);
  }
}

}  // namespace

SuiteResult run_stanley(Workspace& ws, const SuiteOptions& opt) {
  SuiteResult res{"stanley", {}};
  const int n_max = cap(opt, 8);
  for (int m = 0; m <= 4; ++m) {
    for (const auto& mu : partitions_of(m)) {
      std::string detail;
      const bool ok = verify_stanley_closed_form(mu, n_max, ws, &detail);
      res.cases.push_back(
          {"mu=" + par(mu) + " n<=" + std::to_string(n_max), ok, detail});
    }
  }
  return res;
}

SuiteResult run_jack_closed_form(Workspace& ws, const SuiteOptions& opt) {
  SuiteResult res{"jack-closed-form", {}};
  const int n_max = cap(opt, 7);
  for (const Rat& theta : theta_grid(opt, {rq(1, 2), Rat(1), Rat(2), rq(3, 5)})) {
    for (int m = 0; m <= 3; ++m) {
      for (const auto& mu : partitions_of(m)) {
        std::string detail;
        const bool ok = verify_jack_closed_form(mu, theta, n_max, ws, &detail);
        res.cases.push_back({"theta=" + rat_str(theta) + " mu=" + par(mu) +
                                 " n<=" + std::to_string(n_max),
                             ok, detail});
      }
    }
  }
  return res;
}

SuiteResult run_polynomiality(Workspace& ws, const SuiteOptions& opt) {
  SuiteResult res{"polynomiality", {}};
  // The content-built families are polynomial in n at theta = 1; away from 1
  // their averages leave the polynomial algebra, so the deformed part of this
  // suite covers the families built from corner coordinates.
  for_each_scoped_poly_case(opt, [&](const PolyFamilyCase& fc, const Rat& theta) {
    run_poly_case(res, ws, fc, theta, opt);
  });
  return res;
}

std::vector<PolyReport> polynomiality_reports(Workspace& ws,
                                              const SuiteOptions& opt) {
  std::vector<PolyReport> out;
  for_each_scoped_poly_case(opt, [&](const PolyFamilyCase& fc, const Rat& theta) {
    const int degree = fc.obs.degree_bound();
    const int n_max = opt.n_max ? *opt.n_max : degree + 3;
    out.push_back(check_polynomiality(fc.obs, theta, ws, n_max, degree));
  });
  return out;
}

SuiteResult run_polynomiality_all_theta(Workspace& ws,
                                        const SuiteOptions& opt) {
  SuiteResult res{"polynomiality-all-theta", {}};
  std::vector<PolyFamilyCase> cases;
  for (auto& fc : content_product_cases()) cases.push_back(std::move(fc));
  for (auto& fc : hybrid_cases()) cases.push_back(std::move(fc));
  for (auto& fc : h_product_cases()) cases.push_back(std::move(fc));
  for (auto& fc : frak_cases()) cases.push_back(std::move(fc));
  for (const Rat& theta : theta_grid(opt, {rq(1, 2), Rat(1), Rat(2)})) {
    for (const auto& fc : cases) {
      run_poly_case(res, ws, fc, theta, opt);
    }
  }
  return res;
}

SuiteResult run_growth_vs_jack(Workspace& ws, const SuiteOptions& opt) {
  SuiteResult res{"growth-vs-jack", {}};
  const int n_cap = cap(opt, 6);
  for (const Rat& theta :
       theta_grid(opt, {rq(1, 3), rq(1, 2), Rat(1), Rat(2), Rat(3)})) {
    bool ok = true;
    std::string detail;
    for (int n = 0; n <= n_cap && ok; ++n) {
      ok = tables_equal(ws.measure(n, theta, Provenance::growth),
                        ws.measure(n, theta, Provenance::jack_direct), &detail);
      if (!ok) detail = "n=" + std::to_string(n) + " " + detail;
    }
    res.cases.push_back({"growth == jack: theta=" + rat_str(theta) + " n<=" +
                             std::to_string(n_cap),
                         ok, detail});
  }
  if (!opt.theta || *opt.theta == 1) {
    const int n_cap1 = cap(opt, 8);
    bool ok = true;
    std::string detail;
    for (int n = 0; n <= n_cap1 && ok; ++n) {
      const auto& exact = ws.measure(n, Rat(1), Provenance::plancherel);
      ok = tables_equal(ws.measure(n, Rat(1), Provenance::growth), exact,
                        &detail) &&
           tables_equal(ws.measure(n, Rat(1), Provenance::jack_direct), exact,
                        &detail);
      if (!ok) detail = "n=" + std::to_string(n) + " " + detail;
    }
    res.cases.push_back(
        {"both routes at theta=1 equal dim^2/n!: n<=" + std::to_string(n_cap1),
         ok, detail});
  }
  return res;
}

SuiteResult run_kerov_identities(Workspace& ws, const SuiteOptions& opt) {
  SuiteResult res{"kerov-identities", {}};
  const int cap_rows = cap(opt, 8);
  const int cap_fund = cap(opt, 6);

  for (const Rat& theta :
       theta_grid(opt, {rq(1, 3), rq(1, 2), Rat(1), Rat(2), Rat(3)})) {
    bool ok = true;
    std::string detail;
    for (int n = 0; n <= cap_rows && ok; ++n) {
      for (const auto& la : partitions_of(n)) {
        const GrowthKernel& kernel = ws.kernel(la, theta);
        Rat sum = 0;
        for (const auto& [nu, w] : kernel.targets) {
          sum += w;
          if (!(w > 0)) {
            ok = false;
            detail = "lambda=" + par(la) + " weight " + rat_str(w) +
                     " at nu=" + par(nu) + " not positive";
            break;
          }
        }
        if (ok && !(sum == 1)) {
          ok = false;
          detail = "lambda=" + par(la) + " row sum " + rat_str(sum);
        }
        if (!ok) break;
      }
    }
    res.cases.push_back({"rows positive, sum 1: theta=" + rat_str(theta) +
                             " |lambda|<=" + std::to_string(cap_rows),
                         ok, detail});
  }

  for (const Rat& theta :
       theta_grid(opt, {rq(1, 3), rq(1, 2), Rat(1), Rat(2), Rat(3)})) {
    bool ok = true;
    std::string detail;
    for (int n = 0; n <= cap_fund && ok; ++n) {
      for (const auto& la : partitions_of(n)) {
        const GrowthKernel& kernel = ws.kernel(la, theta);
        const KerovCoords coords = kerov_coords(la, theta);
        const std::vector<Rat> h = h_series(la, theta, 8);
        for (int m = 0; m <= 8; ++m) {
          Rat moment = 0;
          for (size_t i = 0; i < kernel.targets.size(); ++i) {
            moment += kernel.targets[i].second * pow_rat(coords.X[i], m);
          }
          if (!(moment == h[m])) {
            ok = false;
            detail = "lambda=" + par(la) + " m=" + std::to_string(m) +
                     " moment=" + rat_str(moment) + " h=" + rat_str(h[m]);
            break;
          }
        }
        if (!ok) break;
      }
    }
    res.cases.push_back({"kernel moments equal h_m, m<=8: theta=" +
                             rat_str(theta) + " |lambda|<=" +
                             std::to_string(cap_fund),
                         ok, detail});
  }

  for (const Rat& theta : theta_grid(opt, {rq(1, 2), Rat(1), Rat(2)})) {
    bool ok = true;
    std::string detail;
    PointSource points(20260816u);
    for (int n = 0; n <= cap_fund && ok; ++n) {
      for (const auto& la : partitions_of(n)) {
        for (int k = 0; k < 20; ++k) {
          const Rat u = points.next();
          const Rat lhs = hh_eval(la, theta, u) * phi_eval(la, theta, u);
          const Rat rhs = phi_eval(la, theta, u - theta);
          if (!(lhs == rhs)) {
            ok = false;
            detail = "lambda=" + par(la) + " u=" + rat_str(u) + " lhs=" +
                     rat_str(lhs) + " rhs=" + rat_str(rhs);
            break;
          }
        }
        if (!ok) break;
      }
    }
    res.cases.push_back({"ratio of Phi shifts: theta=" + rat_str(theta) +
                             " |lambda|<=" + std::to_string(cap_fund) +
                             ", 20 points each",
                         ok, detail});
  }
  return res;
}

SuiteResult run_del_identity(Workspace& ws, const SuiteOptions& opt) {
  SuiteResult res{"del-identity", {}};
  const int n_cap = cap(opt, 5);
  std::vector<Partition> rhos;
  for (int m = 2; m <= 6; ++m) {
    for (const auto& rho : partitions_of(m)) {
      if (rho.part(rho.length()) >= 2) rhos.push_back(rho);
    }
  }
  for (const Rat& theta : theta_grid(opt, {Rat(1), rq(1, 2), Rat(2)})) {
    const ACoeffTable table = a_coefficients(theta, 8);
    {
      const Rat one(1);
      const std::vector<Rat> expect2{theta};
      const std::vector<Rat> expect3{theta * (one - theta), 2 * theta};
      const bool ok = table.a[0] == std::vector<Rat>{one} &&
                      table.a[1].empty() && table.a[2] == expect2 &&
                      table.a[3] == expect3;
      res.cases.push_back(
          {"a0=1 a1=0 a2=theta a3=2*theta*x+theta*(1-theta): theta=" +
               rat_str(theta),
           ok, ok ? "" : "series expansion deviates from the first four terms"});
    }
    {
      bool ok = true;
      std::string detail;
      for (int s = 2; s <= 8 && ok; ++s) {
        const auto& a = table.a[s];
        if (static_cast<int>(a.size()) != s - 1 ||
            !(a[s - 2] == Rat(s - 1) * theta)) {
          ok = false;
          detail = "s=" + std::to_string(s) + " leading coefficient";
          break;
        }
        if (s >= 3 &&
            !(a[s - 3] == Rat(binom(s - 1, 2)) * theta * (Rat(1) - theta))) {
          ok = false;
          detail = "s=" + std::to_string(s) + " subleading coefficient";
        }
      }
      res.cases.push_back(
          {"a_s = (s-1)theta x^{s-2} + C(s-1,2)theta(1-theta) x^{s-3} + ..., "
           "s<=8: theta=" + rat_str(theta),
           ok, detail});
    }
    for (const auto& rho : rhos) {
      std::string counterexample;
      const bool ok = check_del_expansion(rho, theta, n_cap, ws, &counterexample);
      res.cases.push_back({"del expansion rho=" + par(rho) +
                               " theta=" + rat_str(theta) + " n<=" +
                               std::to_string(n_cap),
                           ok, counterexample});
    }
  }
  return res;
}

SuiteResult run_duality(Workspace& ws, const SuiteOptions& opt) {
  SuiteResult res{"duality", {}};
  const int n_cap = cap(opt, 6);
  for (const Rat& theta : theta_grid(opt, {rq(1, 2), Rat(2), rq(1, 3), Rat(3)})) {
    const Rat inverse = Rat(1) / theta;
    bool ok = true;
    std::string detail;
    for (int n = 0; n <= n_cap && ok; ++n) {
      const auto& direct = ws.measure(n, theta, Provenance::jack_direct);
      const auto& flipped = ws.measure(n, inverse, Provenance::jack_direct);
      for (const auto& [la, w] : flipped.weights) {
        const Rat& wt = direct.weights.at(la.transpose());
        if (!(wt == w)) {
          ok = false;
          detail = "n=" + std::to_string(n) + " lambda=" + par(la) +
                   ": M_theta(lambda')=" + rat_str(wt) +
                   " M_{1/theta}(lambda)=" + rat_str(w);
          break;
        }
      }
    }
    res.cases.push_back({"transpose swaps theta and 1/theta: theta=" +
                             rat_str(theta) + " n<=" + std::to_string(n_cap),
                         ok, detail});
  }
  return res;
}

SuiteResult run_structural(Workspace& ws, const SuiteOptions& opt) {
  (void)ws;
  SuiteResult res{"structural", {}};
  const int size_cap = cap(opt, 8);
  const Rat half = rq(1, 2);

  {
    // p_m on Frobenius coordinates against the content power sums:
    // p_m = sum_k 2^{-2k} C(m, 2k+1) hat-p_{m-1-2k}.
    bool ok = true;
    std::string detail;
    for (int n = 0; n <= size_cap && ok; ++n) {
      for (const auto& la : partitions_of(n)) {
        const Frobenius fr = frobenius(la);
        for (int m = 1; m <= 8; ++m) {
          Rat lhs = 0;
          for (size_t i = 0; i < fr.a.size(); ++i) {
            lhs += pow_rat(fr.a[i], m) - pow_rat(-fr.b[i], m);
          }
          Rat rhs = 0;
          for (int k = 0; 2 * k + 1 <= m; ++k) {
            rhs += make_rat(binom(m, 2 * k + 1), Int(1) << (2 * k)) *
                   content_power_eval(la, m - 1 - 2 * k);
          }
          if (!(lhs == rhs)) {
            ok = false;
            detail = "lambda=" + par(la) + " m=" + std::to_string(m) +
                     " lhs=" + rat_str(lhs) + " rhs=" + rat_str(rhs);
            break;
          }
        }
        if (!ok) break;
      }
    }
    res.cases.push_back({"super power sums match content expansion, m<=8, "
                         "|lambda|<=" + std::to_string(size_cap),
                         ok, detail});
  }

  {
    // Phi(u - 1/2) as a product over Frobenius coordinates.
    bool ok = true;
    std::string detail;
    PointSource points(777001u);
    for (int n = 0; n <= size_cap && ok; ++n) {
      for (const auto& la : partitions_of(n)) {
        const Frobenius fr = frobenius(la);
        for (int k = 0; k < 10; ++k) {
          const Rat u = points.next();
          const Rat lhs = phi_eval(la, Rat(1), u - half);
          Rat rhs = 1;
          for (size_t i = 0; i < fr.a.size(); ++i) {
            rhs *= (u + fr.b[i]) / (u - fr.a[i]);
          }
          if (!(lhs == rhs)) {
            ok = false;
            detail = "lambda=" + par(la) + " u=" + rat_str(u);
            break;
          }
        }
        if (!ok) break;
      }
    }
    res.cases.push_back({"Phi factors over Frobenius coordinates, |lambda|<=" +
                             std::to_string(size_cap),
                         ok, detail});
  }

  {
    // Phi(u - 1/2) as a telescoping product over box contents.
    bool ok = true;
    std::string detail;
    PointSource points(777002u);
    for (int n = 0; n <= size_cap && ok; ++n) {
      for (const auto& la : partitions_of(n)) {
        const std::vector<int> contents = la.contents();
        for (int k = 0; k < 10; ++k) {
          const Rat u = points.next();
          const Rat lhs = phi_eval(la, Rat(1), u - half);
          Rat rhs = 1;
          for (int c : contents) {
            rhs *= (u - c + half) / (u - c - half);
          }
          if (!(lhs == rhs)) {
            ok = false;
            detail = "lambda=" + par(la) + " u=" + rat_str(u);
            break;
          }
        }
        if (!ok) break;
      }
    }
    res.cases.push_back({"Phi telescopes over box contents, |lambda|<=" +
                             std::to_string(size_cap),
                         ok, detail});
  }
  return res;
}

SuiteResult run_sampler_stats(Workspace& ws, const SuiteOptions& opt) {
  SuiteResult res{"sampler-stats", {}};
  const int n = cap(opt, 6);
  const int trajectories = 100000;
  const std::uint64_t seed = 1;
  const Rat tolerance = rq(1, 100);
  for (const Rat& theta : theta_grid(opt, {Rat(1), Rat(2)})) {
    const auto& exact = ws.measure(n, theta, default_provenance(theta));
    std::map<Partition, int> counts;
    for (int t = 0; t < trajectories; ++t) {
      counts[sample_trajectory(n, theta, seed, t, ws).back()] += 1;
    }
    bool ok = true;
    std::string detail;
    for (const auto& [la, w] : exact.weights) {
      const int c = counts.count(la) ? counts.at(la) : 0;
      Rat diff = make_rat(Int(c), Int(trajectories)) - w;
      if (diff < 0) diff = -diff;
      if (!(diff < tolerance)) {
        ok = false;
        detail = "lambda=" + par(la) + " empirical " +
                 rat_str(make_rat(Int(c), Int(trajectories))) + " exact " +
                 rat_str(w);
        break;
      }
    }
    res.cases.push_back({"empirical within 1/100 of exact: theta=" +
                             rat_str(theta) + " n=" + std::to_string(n) + " " +
                             std::to_string(trajectories) + " trajectories",
                         ok, detail});

    bool same = true;
    for (int t = 0; t < 200 && same; ++t) {
      same = sample_trajectory(n, theta, seed, t, ws) ==
             sample_trajectory(n, theta, seed, t, ws);
    }
    res.cases.push_back(
        {"repeat run reproduces paths: theta=" + rat_str(theta), same,
         same ? "" : "same seed and index produced different paths"});
  }
  return res;
}

SuiteResult run_combinatorial_core(Workspace& ws, const SuiteOptions& opt) {
  (void)ws;
  SuiteResult res{"combinatorial-core", {}};
  const int n_cap = cap(opt, 12);
  bool ok = true;
  std::string detail;
  for (int n = 0; n <= n_cap && ok; ++n) {
    Int sum = 0;
    for (const auto& la : partitions_of(n)) {
      const Int d = dim_standard(la);  // cross-checks its two routes
      sum += d * d;
    }
    if (sum != factorial(n)) {
      ok = false;
      detail = "n=" + std::to_string(n) + " sum of squares " + sum.get_str();
    }
  }
  res.cases.push_back({"dimension routes agree and sum of dim^2 equals n!, "
                       "n<=" + std::to_string(n_cap),
                       ok, detail});
  return res;
}

std::vector<std::string> suite_names() {
  return {"stanley",     "jack-closed-form", "polynomiality",
          "growth-vs-jack", "kerov-identities", "del-identity",
          "duality"};
}

SuiteResult run_suite(const std::string& name, Workspace& ws,
                      const SuiteOptions& opt) {
  if (name == "stanley") return run_stanley(ws, opt);
  if (name == "jack-closed-form") return run_jack_closed_form(ws, opt);
  if (name == "polynomiality") return run_polynomiality(ws, opt);
  if (name == "growth-vs-jack") return run_growth_vs_jack(ws, opt);
  if (name == "kerov-identities") return run_kerov_identities(ws, opt);
  if (name == "del-identity") return run_del_identity(ws, opt);
  if (name == "duality") return run_duality(ws, opt);
  if (name == "structural") return run_structural(ws, opt);
  if (name == "sampler-stats") return run_sampler_stats(ws, opt);
  if (name == "combinatorial-core") return run_combinatorial_core(ws, opt);
  if (name == "polynomiality-all-theta") {
    return run_polynomiality_all_theta(ws, opt);
  }
  std::string known;
  for (const auto& s : suite_names()) {
    if (!known.empty()) known += ", ";
    known += s;
  }
  throw usage_error("unknown suite '" + name + "' (expected one of: " + known +
                    ")");
}

}  // namespace planch
