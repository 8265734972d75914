#pragma once

#include <map>

#include "planch/symfunc.hpp"

namespace planch {

struct JackEntry {
  SymFunc on_monomial;  // P_la, monic in m_la, lower-order terms below la
  SymFunc on_power;     // same function on the power-sum basis
  Rat norm;             // (P_la, P_la); Q_la = P_la / norm
};

// Which linear extension of dominance drives the orthogonalization. Both
// orders must produce the same table; the alternate order exists so tests can
// assert that independence.
enum class GramOrder { canonical, conjugate };

// Per-degree orthogonalization of the monomial basis under the deformed Hall
// pairing. Building degree d requires only degree-d data, so tables extend
// incrementally.
class JackTable {
 public:
  JackTable(const Rat& theta, int max_degree,
            GramOrder order = GramOrder::canonical);

  const Rat& theta() const { return theta_; }
  int max_degree() const { return max_degree_; }
  void extend(int new_max_degree);

  const JackEntry& entry(const Partition& la) const;

  // Weighted path counts: dim is paired against Q, the primed variant
  // against P. Both are strictly positive for theta > 0.
  Rat dim_theta(const Partition& la) const;
  Rat dim_theta_prime(const Partition& la) const;
  Rat dim_theta_skew(const Partition& mu, const Partition& la) const;
  Rat dim_theta_prime_skew(const Partition& mu, const Partition& la) const;

  // One-box branching weight; nu must cover mu.
  Rat pieri_kappa(const Partition& mu, const Partition& nu) const;

 private:
  void build_degree(int d);
  Rat theta_;
  int max_degree_ = -1;
  GramOrder order_;
  std::map<Partition, JackEntry> entries_;
};

}  // namespace planch
