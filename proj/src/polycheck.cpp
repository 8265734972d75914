#include "planch/polycheck.hpp"

#include <stdexcept>

namespace planch {

Rat Poly1::eval_at(int n) const {
  Rat sum = 0;
  for (size_t k = 0; k < coeffs.size(); ++k) {
    sum += coeffs[k] * Rat(binom(n, static_cast<int>(k)));
  }
  return sum;
}

std::string Poly1::str() const {
  if (coeffs.empty()) return "0";
  std::string out;
  bool first = true;
  for (size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] == 0) continue;
    if (!first) out += " + ";
    out += rat_str(coeffs[k]) + "*C(n," + std::to_string(k) + ")";
    first = false;
  }
  return first ? "0" : out;
}

PolyReport finite_difference_check(std::vector<Rat> values,
                                   int claimed_degree) {
  if (claimed_degree < 0) {
    throw usage_error("finite_difference_check: degree must be >= 0");
  }
  if (values.size() < static_cast<size_t>(claimed_degree) + 2) {
    throw bound_error("finite_difference_check: need at least " +
                      std::to_string(claimed_degree + 2) + " values, got " +
                      std::to_string(values.size()));
  }
  PolyReport report;
  report.claimed_degree = claimed_degree;
  report.n_max = static_cast<int>(values.size()) - 1;
  report.values = std::move(values);

  // Difference table row by row; row k holds the order-k forward differences.
  std::vector<Rat> row = report.values;
  report.interpolant.coeffs.push_back(row[0]);
  for (int k = 1; k <= claimed_degree; ++k) {
    for (size_t i = 0; i + 1 < row.size(); ++i) row[i] = row[i + 1] - row[i];
    row.pop_back();
    report.interpolant.coeffs.push_back(row[0]);
  }
  for (size_t i = 0; i + 1 < row.size(); ++i) row[i] = row[i + 1] - row[i];
  row.pop_back();
  report.verdict = true;
  for (const Rat& d : row) {
    if (d != 0) {
      report.verdict = false;
      break;
    }
  }

  if (report.verdict) {
    for (int n = 0; n <= report.n_max; ++n) {
      if (report.interpolant.eval_at(n) != report.values[n]) {
        throw std::logic_error(
            "finite_difference_check: interpolant mismatch despite vanishing "
            "differences");
      }
    }
  }
  return report;
}

PolyReport check_polynomiality(const Observable& obs, const Rat& theta,
                               Workspace& ws, int n_max, int claimed_degree) {
  int degree = claimed_degree >= 0 ? claimed_degree : obs.degree_bound();
  if (n_max < 0) n_max = degree + 4;
  if (n_max < degree + 1) {
    throw bound_error("check_polynomiality: n_max must be at least degree+1");
  }
  Provenance source = default_provenance(theta);
  std::vector<Rat> values;
  values.reserve(n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    values.push_back(average(obs, n, theta, source, ws));
  }
  PolyReport report = finite_difference_check(std::move(values), degree);
  report.spec = obs.spec_str();
  report.theta = theta;
  return report;
}

Rat poly_eval(const std::vector<Rat>& poly, const Rat& x) {
  Rat sum = 0;
  for (size_t k = poly.size(); k-- > 0;) sum = sum * x + poly[k];
  return sum;
}

namespace {

std::vector<Rat> poly_add(const std::vector<Rat>& f, const std::vector<Rat>& g) {
  std::vector<Rat> out(std::max(f.size(), g.size()), Rat(0));
  for (size_t i = 0; i < f.size(); ++i) out[i] += f[i];
  for (size_t i = 0; i < g.size(); ++i) out[i] += g[i];
  return out;
}

std::vector<Rat> poly_mul(const std::vector<Rat>& f, const std::vector<Rat>& g) {
  if (f.empty() || g.empty()) return {};
  std::vector<Rat> out(f.size() + g.size() - 1, Rat(0));
  for (size_t i = 0; i < f.size(); ++i) {
    for (size_t j = 0; j < g.size(); ++j) out[i + j] += f[i] * g[j];
  }
  return out;
}

std::vector<Rat> poly_scale(std::vector<Rat> f, const Rat& c) {
  for (Rat& v : f) v *= c;
  return f;
}

}  // namespace

ACoeffTable a_coefficients(const Rat& theta, int s_max) {
  if (s_max < 0) throw usage_error("a_coefficients: order must be >= 0");
  ACoeffTable table;
  table.theta = theta;
  table.a.resize(s_max + 1);
  table.a[0] = {Rat(1)};
  if (s_max >= 1) table.a[1] = {};  // zero polynomial

  // The ratio minus 1 equals theta / ((u-x-1)(u-x+theta)). Expanding each
  // linear factor as a geometric series in 1/u gives
  //   a_s = theta * hc_{s-2}   for s >= 2,
  // where hc_k is the complete homogeneous sum of degree k in the two roots
  // x+1 and x-theta, satisfying hc_k = e1*hc_{k-1} - e2*hc_{k-2}.
  std::vector<Rat> e1 = {Rat(1) - theta, Rat(2)};               // (x+1)+(x-theta)
  std::vector<Rat> e2 = {-theta, Rat(1) - theta, Rat(1)};      // (x+1)*(x-theta)
  std::vector<Rat> prev = {};       // hc_{-1}
  std::vector<Rat> cur = {Rat(1)};  // hc_0
  for (int s = 2; s <= s_max; ++s) {
    table.a[s] = poly_scale(cur, theta);
    std::vector<Rat> next =
        poly_add(poly_mul(e1, cur), poly_scale(poly_mul(e2, prev), Rat(-1)));
    prev = std::move(cur);
    cur = std::move(next);
  }
  return table;
}

namespace {

Rat h_prod_from_series(const std::vector<Rat>& h, const Partition& rho) {
  Rat prod = 1;
  for (int r : rho.parts()) prod *= h[r];
  return prod;
}

// Partitions of k with all parts >= 2 (the h and a index sets).
std::vector<Partition> partitions_no_ones(int k) {
  std::vector<Partition> out;
  for (const Partition& p : partitions_of(k)) {
    if (p.empty() || p.part(p.length()) >= 2) out.push_back(p);
  }
  return out;
}

}  // namespace

bool check_del_expansion(const Partition& rho, const Rat& theta, int n_max,
                         Workspace& ws, std::string* counterexample) {
  for (int r : rho.parts()) {
    if (r < 2) throw usage_error("check_del_expansion: parts must be >= 2");
  }
  const int weight = rho.size();
  ACoeffTable acoeff = a_coefficients(theta, weight);

  // Collect the pairs (sigma, tau) contributing to the expansion, with their
  // monomial structure constants c^rho and the linearized polynomial
  // a_sigma = prod_i a_{sigma_i}.
  struct Term {
    std::vector<Rat> a_sigma;  // polynomial in x
    Partition tau;
    Rat c;
  };
  std::vector<Term> terms;
  for (int k = 0; k <= weight; ++k) {
    for (const Partition& sigma : partitions_no_ones(k)) {
      std::vector<Rat> a_sigma = {Rat(1)};
      for (int s : sigma.parts()) a_sigma = poly_mul(a_sigma, acoeff.a[s]);
      if (a_sigma.empty()) continue;
      for (const Partition& tau : partitions_no_ones(weight - k)) {
        auto constants = monomial_product_constants(sigma, tau);
        auto it = constants.find(rho);
        if (it == constants.end() || it->second == 0) continue;
        terms.push_back(Term{a_sigma, tau, Rat(it->second)});
      }
    }
  }

  for (int n = 0; n <= n_max; ++n) {
    for (const Partition& la : partitions_of(n)) {
      // Left side: (1 + del) h_rho at la, i.e. the kernel-weighted sum of
      // h_rho over the diagrams covering la.
      const GrowthKernel& kernel = ws.kernel(la, theta);
      Rat lhs = 0;
      int top = rho.empty() ? 0 : rho.part(1);
      for (const auto& [target, p] : kernel.targets) {
        lhs += p * h_prod_from_series(h_series(target, theta, top), rho);
      }

      std::vector<Rat> h = h_series(la, theta, weight);
      Rat rhs = 0;
      for (const Term& term : terms) {
        Rat mapped = 0;  // <a_sigma(x)>^ at la: x^m goes to h_m(la)
        for (size_t m = 0; m < term.a_sigma.size(); ++m) {
          mapped += term.a_sigma[m] * h[m];
        }
        rhs += term.c * mapped * h_prod_from_series(h, term.tau);
      }

      if (lhs != rhs) {
        if (counterexample) {
          *counterexample = "rho=(" + rho.str() + ") theta=" + rat_str(theta) +
                            " lambda=(" + la.str() + ") lhs=" + rat_str(lhs) +
                            " rhs=" + rat_str(rhs);
        }
        return false;
      }
    }
  }
  return true;
}

bool verify_stanley_closed_form(const Partition& mu, int n_max, Workspace& ws,
                                std::string* counterexample) {
  Observable obs = Observable::f_mu(mu);
  Rat dim_mu(dim_standard(mu));
  for (int n = 0; n <= n_max; ++n) {
    Rat lhs = average(obs, n, Rat(1), Provenance::plancherel, ws);
    Rat rhs = Rat(binom(n, mu.size())) * dim_mu;
    if (lhs != rhs) {
      if (counterexample) {
        *counterexample = "mu=(" + mu.str() + ") n=" + std::to_string(n) +
                          " lhs=" + rat_str(lhs) + " rhs=" + rat_str(rhs);
      }
      return false;
    }
  }
  return true;
}

bool verify_jack_closed_form(const Partition& mu, const Rat& theta, int n_max,
                             Workspace& ws, std::string* counterexample) {
  Observable obs = Observable::f_mu_jack(mu);
  int m = mu.size();
  JackTable& jt = ws.jack(theta, std::max(n_max, m));
  Rat scale = pow_rat(theta, m) * jt.dim_theta_prime(mu);
  for (int n = 0; n <= n_max; ++n) {
    Rat lhs = average(obs, n, theta, Provenance::jack_direct, ws);
    Rat rhs = Rat(binom(n, m)) * scale;
    if (lhs != rhs) {
      if (counterexample) {
        *counterexample = "mu=(" + mu.str() + ") theta=" + rat_str(theta) +
                          " n=" + std::to_string(n) + " lhs=" + rat_str(lhs) +
                          " rhs=" + rat_str(rhs);
      }
      return false;
    }
  }
  return true;
}

}  // namespace planch
