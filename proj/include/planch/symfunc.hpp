#pragma once

#include <map>
#include <string>

#include "planch/partition.hpp"

namespace planch {

enum class Basis { monomial, power_sum };

// Sparse symmetric function over Rat in a fixed basis. Zero coefficients are
// never stored; map order is the canonical partition order, which keeps all
// serializations deterministic.
struct SymFunc {
  Basis basis = Basis::monomial;
  std::map<Partition, Rat> terms;

  static SymFunc zero(Basis b) { return SymFunc{b, {}}; }
  static SymFunc one(Basis b) { return SymFunc{b, {{Partition(), Rat(1)}}}; }
  static SymFunc monomial(const Partition& la) {
    return SymFunc{Basis::monomial, {{la, Rat(1)}}};
  }
  static SymFunc power(const Partition& rho) {
    return SymFunc{Basis::power_sum, {{rho, Rat(1)}}};
  }

  bool is_zero() const { return terms.empty(); }
  int degree() const;  // max |la| over the support; 0 for the zero function

  void add_term(const Partition& la, const Rat& c);
  SymFunc& operator+=(const SymFunc& o);  // same basis required
  SymFunc scaled(const Rat& c) const;
  std::string str() const;
};

// Exact basis change; both directions, any degree up to the configured cap
// (throws bound_error beyond it).
SymFunc to_basis(const SymFunc& f, Basis target);

// Product; both factors in the same basis, result in that basis.
SymFunc multiply(const SymFunc& f, const SymFunc& g);

// z_rho = prod_i i^{m_i} m_i!  over multiplicities m_i of rho.
Int z_of(const Partition& rho);

// Deformed Hall pairing: (p_la, p_mu) = delta z_la theta^{-len(la)}.
Rat inner_product_jack(const SymFunc& f, const SymFunc& g, const Rat& theta);

// Coefficients of m_sigma * m_tau on the monomial basis, computed directly by
// expanding both factors in |sigma|+|tau| variables and re-extracting. The
// coefficients are nonnegative integers.
std::map<Partition, Int> monomial_product_constants(const Partition& sigma,
                                                    const Partition& tau);

}  // namespace planch
