#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "planch/partition.hpp"
#include "planch/symfunc.hpp"

namespace planch {

class Workspace;

// Corner coordinates of a diagram at deformation parameter theta.
// X holds the inner-corner values, Y the outer-corner values; they strictly
// interlace x1 > y1 > x2 > ... > y_{d-1} > x_d and sum(X) == sum(Y).
struct KerovCoords {
  std::vector<Rat> X;
  std::vector<Rat> Y;
};

KerovCoords kerov_coords(const Partition& la, const Rat& theta);

// prod_i (u + theta*i) / (u - la_i + theta*i) over the rows of la.
// Throws pole_error when u hits la_i - theta*i.
Rat phi_eval(const Partition& la, const Rat& theta, const Rat& u);

// u * prod_j (u - y_j) / prod_i (u - x_i). Throws pole_error when u is
// one of the x_i. Equals phi_eval(la, theta, u - theta) / phi_eval(la, theta, u).
Rat hh_eval(const Partition& la, const Rat& theta, const Rat& u);

// Coefficients (h_0, ..., h_max_order) of the expansion of hh in powers of
// 1/u; h_0 = 1 and h_1 = 0 identically.
std::vector<Rat> h_series(const Partition& la, const Rat& theta, int max_order);

// sum(x_i^m) - sum(y_j^m), the super power sum of the corner coordinates.
Rat frak_p_eval(const Partition& la, const Rat& theta, int m);

// sum of c(box)^r over the boxes of la; r = 0 gives |la|.
Rat content_power_eval(const Partition& la, int r);

// An evaluatable function on Young diagrams carrying a certified upper bound
// for its filtration degree. Immutable value type; copies share structure.
class Observable {
 public:
  static Observable one();
  static Observable pstar(int m);
  static Observable superp(int m);
  static Observable content_g(const SymFunc& phi);
  static Observable h_psi(const SymFunc& psi);
  static Observable f_mu(const Partition& mu);
  static Observable f_mu_jack(const Partition& mu);
  static Observable h_coeff(int m);
  static Observable h_prod(const Partition& rho);
  static Observable frak_p(int m);
  static Observable product(std::vector<Observable> factors);
  static Observable linear(std::vector<std::pair<Rat, Observable>> terms);
  static Observable del(Observable inner);

  // Valid upper bound for the filtration degree; products add bounds,
  // linear combinations take the max, del subtracts 1 (floored at 0).
  int degree_bound() const;

  // True when evaluation depends on theta.
  bool theta_sensitive() const;

  // Canonical rendering in the CLI observable mini-language.
  std::string spec_str() const;

  Rat eval(const Partition& la, const Rat& theta, Workspace& ws) const;

 private:
  struct Node;
  explicit Observable(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

}  // namespace planch
