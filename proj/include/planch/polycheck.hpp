#pragma once

#include <string>
#include <vector>

#include "planch/measures.hpp"

namespace planch {

// Polynomial in one integer variable, stored in the binomial basis:
// value(n) = sum_k coeffs[k] * C(n, k).
struct Poly1 {
  std::vector<Rat> coeffs;
  Rat eval_at(int n) const;
  std::string str() const;
};

struct PolyReport {
  std::string spec;  // observable rendering
  Rat theta = 1;
  int claimed_degree = 0;  // D used for the difference test
  int n_max = 0;
  std::vector<Rat> values;  // averages for n = 0..n_max
  bool verdict = false;     // all order-(D+1) forward differences vanish
  Poly1 interpolant;        // reproduces the whole sequence when verdict holds
};

// Forward-difference test on an explicit sequence; values[i] is the value at
// n = i. Requires values.size() >= claimed_degree + 2.
PolyReport finite_difference_check(std::vector<Rat> values, int claimed_degree);

// Averages obs for n = 0..n_max and runs the difference test. Defaults:
// claimed_degree is the observable's degree bound, n_max is that bound + 4
// (four independent vanishing differences).
PolyReport check_polynomiality(const Observable& obs, const Rat& theta,
                               Workspace& ws, int n_max = -1,
                               int claimed_degree = -1);

struct ACoeffTable {
  Rat theta = 1;
  // a[s] is the coefficient polynomial of u^{-s}, constant term first.
  std::vector<std::vector<Rat>> a;
};

Rat poly_eval(const std::vector<Rat>& poly, const Rat& x);

// Coefficients a_s(x) of the expansion
//   (u-x)(u-x+theta-1) / ((u-x-1)(u-x+theta)) = sum_s a_s(x) u^{-s},
// computed from the exact geometric series of
//   theta / ((u-x-1)(u-x+theta));
// a_0 = 1 and a_1 = 0 always.
ACoeffTable a_coefficients(const Rat& theta, int s_max);

// Pointwise sweep of the product rule for del on the h basis: for every la
// with |la| <= n_max checks
//   sum_nu pi(la,nu) h_rho(nu)
//     == sum over sigma, tau with |sigma|+|tau| = |rho| of
//        c^rho_{sigma,tau} * <a_sigma(x)>^(la) * h_tau(la),
// where <x^m>^ = h_m applied coefficientwise and c are the monomial structure
// constants. rho must have all parts >= 2. Returns false on the first
// mismatch, describing it in *counterexample when provided.
bool check_del_expansion(const Partition& rho, const Rat& theta, int n_max,
                         Workspace& ws, std::string* counterexample = nullptr);

// <F_mu>_n == C(n,|mu|) * dim(mu) under the Plancherel measure, n = 0..n_max.
bool verify_stanley_closed_form(const Partition& mu, int n_max, Workspace& ws,
                                std::string* counterexample = nullptr);

// <F_mu>_{n;theta} == theta^|mu| * C(n,|mu|) * dim_theta'(mu) under the
// deformed measure, n = 0..n_max.
bool verify_jack_closed_form(const Partition& mu, const Rat& theta, int n_max,
                             Workspace& ws,
                             std::string* counterexample = nullptr);

}  // namespace planch
