#include "planch/jack.hpp"

#include <algorithm>

namespace planch {

namespace {

// Ascending linear extension of dominance. The canonical choice reverses the
// enumeration order. The conjugate choice sorts by ascending conjugates:
// enumeration order descends in dominance and conjugation reverses dominance,
// so conjugate-early means original dominance-small. A different extension in
// general (it permutes incomparable pairs), yet it must yield the same table.
std::vector<Partition> gram_order(int d, GramOrder order) {
  std::vector<Partition> list = partitions_of(d);
  if (order == GramOrder::canonical) {
    std::reverse(list.begin(), list.end());
  } else {
    std::sort(list.begin(), list.end(), [](const Partition& a, const Partition& b) {
      return a.transpose() < b.transpose();
    });
  }
  return list;
}

Partition with_ones(const Partition& la, int k) {
  std::vector<int> parts = la.parts();
  parts.insert(parts.end(), k, 1);
  return Partition(std::move(parts));
}

}  // namespace

JackTable::JackTable(const Rat& theta, int max_degree, GramOrder order)
    : theta_(theta), order_(order) {
  if (theta <= 0) throw std::domain_error("theta must be positive");
  extend(max_degree);
}

void JackTable::extend(int new_max_degree) {
  for (int d = max_degree_ + 1; d <= new_max_degree; ++d) build_degree(d);
  max_degree_ = std::max(max_degree_, new_max_degree);
}

void JackTable::build_degree(int d) {
  std::vector<const JackEntry*> done;
  for (const Partition& la : gram_order(d, order_)) {
    SymFunc pm = SymFunc::monomial(la);
    SymFunc pp = to_basis(pm, Basis::power_sum);
    for (const JackEntry* prev : done) {
      Rat c = inner_product_jack(pp, prev->on_power, theta_) / prev->norm;
      if (c == 0) continue;
      pm += prev->on_monomial.scaled(-c);
      pp += prev->on_power.scaled(-c);
    }
    Rat norm = inner_product_jack(pp, pp, theta_);
    if (norm <= 0) throw std::logic_error("non-positive norm in orthogonalization");
    auto it = entries_.emplace(la, JackEntry{std::move(pm), std::move(pp), norm}).first;
    done.push_back(&it->second);
  }
}

const JackEntry& JackTable::entry(const Partition& la) const {
  if (la.size() > max_degree_)
    throw bound_error("degree " + std::to_string(la.size()) +
                      " above table bound " + std::to_string(max_degree_));
  return entries_.at(la);
}

Rat JackTable::dim_theta(const Partition& la) const {
  return dim_theta_prime(la) / entry(la).norm;
}

Rat JackTable::dim_theta_prime(const Partition& la) const {
  const JackEntry& e = entry(la);
  // (p_1^n, P_la) picks the p_{1^n} coefficient, weighted by n!/theta^n.
  auto it = e.on_power.terms.find(with_ones(Partition(), la.size()));
  if (it == e.on_power.terms.end()) return Rat(0);
  return it->second * Rat(factorial(la.size())) * pow_rat(theta_, -la.size());
}

Rat JackTable::dim_theta_skew(const Partition& mu, const Partition& la) const {
  return dim_theta_prime_skew(mu, la) * entry(mu).norm / entry(la).norm;
}

Rat JackTable::dim_theta_prime_skew(const Partition& mu,
                                    const Partition& la) const {
  // (p_1^{n-m} P_mu, Q_la) * norm_la = (p_1^{n-m} P_mu, P_la); dividing by
  // norm_mu instead pairs Q_mu against P_la, which is the primed variant.
  const JackEntry& em = entry(mu);
  const JackEntry& el = entry(la);
  const int extra = la.size() - mu.size();
  if (extra < 0 || !la.contains(mu)) return Rat(0);
  SymFunc shifted = SymFunc::zero(Basis::power_sum);
  for (const auto& [rho, c] : em.on_power.terms)
    shifted.terms.emplace(with_ones(rho, extra), c);
  return inner_product_jack(shifted, el.on_power, theta_) / em.norm;
}

Rat JackTable::pieri_kappa(const Partition& mu, const Partition& nu) const {
  if (nu.size() != mu.size() + 1 || !nu.contains(mu))
    throw std::invalid_argument("pieri weight needs a one-box extension");
  const JackEntry& em = entry(mu);
  const JackEntry& en = entry(nu);
  SymFunc shifted = SymFunc::zero(Basis::power_sum);
  for (const auto& [rho, c] : em.on_power.terms)
    shifted.terms.emplace(with_ones(rho, 1), c);
  return inner_product_jack(shifted, en.on_power, theta_) / en.norm;
}

}  // namespace planch
