#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "planch/jack.hpp"

using namespace planch;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

Rat rq(long num, long den) { return make_rat(Int(num), Int(den)); }

// Sum over all one-box chains empty -> la of the product of branching
// weights, independent of the skew machinery.
Rat weighted_chains(const JackTable& table, const Partition& la) {
  if (la.empty()) return 1;
  Rat total = 0;
  for (const auto& mu : la.removable()) {
    total += weighted_chains(table, mu) * table.pieri_kappa(mu, la);
  }
  return total;
}

}  // namespace

TEST_CASE("small expansions in the monomial basis") {
  for (const Rat& theta : {rq(1, 2), Rat(2), rq(3, 5)}) {
    JackTable table(theta, 3);
    {
      const SymFunc& p1 = table.entry(P({1})).on_monomial;
      REQUIRE(p1.terms.size() == 1);
      CHECK(p1.terms.at(P({1})) == 1);
    }
    {
      const SymFunc& p2 = table.entry(P({2})).on_monomial;
      REQUIRE(p2.terms.size() == 2);
      CHECK(p2.terms.at(P({2})) == 1);
      CHECK(p2.terms.at(P({1, 1})) == 2 * theta / (1 + theta));
    }
    {
      const SymFunc& p11 = table.entry(P({1, 1})).on_monomial;
      REQUIRE(p11.terms.size() == 1);
      CHECK(p11.terms.at(P({1, 1})) == 1);
    }
    {
      const SymFunc& p21 = table.entry(P({2, 1})).on_monomial;
      REQUIRE(p21.terms.size() == 2);
      CHECK(p21.terms.at(P({2, 1})) == 1);
      CHECK(p21.terms.at(P({1, 1, 1})) == 6 * theta / (2 * theta + 1));
    }
  }
}

TEST_CASE("monic and dominance-triangular") {
  const Rat theta = rq(5, 3);
  JackTable table(theta, 6);
  for (int n = 0; n <= 6; ++n) {
    for (const auto& la : partitions_of(n)) {
      const SymFunc& f = table.entry(la).on_monomial;
      CHECK(f.terms.at(la) == 1);
      for (const auto& [mu, c] : f.terms) {
        CHECK(mu.size() == n);
        CHECK(dominates(la, mu));
        CHECK(c != 0);
      }
    }
  }
}

TEST_CASE("orthogonality and positive norms") {
  for (const Rat& theta : {rq(1, 2), Rat(1), Rat(2), rq(3, 5)}) {
    JackTable table(theta, 6);
    for (int n = 0; n <= 6; ++n) {
      const auto all = partitions_of(n);
      for (const auto& la : all) {
        const JackEntry& el = table.entry(la);
        CHECK(el.norm > 0);
        CHECK(inner_product_jack(el.on_power, el.on_power, theta) == el.norm);
        for (const auto& mu : all) {
          if (mu == la) continue;
          CHECK(inner_product_jack(el.on_power,
                                   table.entry(mu).on_power, theta) == 0);
        }
      }
    }
  }
}

TEST_CASE("power and monomial forms agree") {
  const Rat theta = rq(2, 3);
  JackTable table(theta, 5);
  for (int n = 0; n <= 5; ++n) {
    for (const auto& la : partitions_of(n)) {
      const JackEntry& e = table.entry(la);
      CHECK(to_basis(e.on_monomial, Basis::power_sum).terms ==
            e.on_power.terms);
    }
  }
}

TEST_CASE("orthogonalization order does not matter") {
  const Rat theta = rq(2, 3);
  JackTable a(theta, 6, GramOrder::canonical);
  JackTable b(theta, 6, GramOrder::conjugate);
  for (int n = 0; n <= 6; ++n) {
    for (const auto& la : partitions_of(n)) {
      CHECK(a.entry(la).on_monomial.terms == b.entry(la).on_monomial.terms);
      CHECK(a.entry(la).norm == b.entry(la).norm);
    }
  }
}

TEST_CASE("specialization at theta = 1 is the classical table") {
  JackTable table(Rat(1), 7);
  for (int n = 0; n <= 7; ++n) {
    for (const auto& la : partitions_of(n)) {
      CHECK(table.dim_theta(la) == dim_standard(la));
      CHECK(table.dim_theta_prime(la) == dim_standard(la));
      CHECK(table.entry(la).norm == 1);
    }
  }
}

TEST_CASE("weighted dimensions") {
  for (const Rat& theta : {rq(1, 2), Rat(2), rq(7, 3)}) {
    JackTable table(theta, 6);
    CHECK(table.dim_theta(P({1})) == 1);
    CHECK(table.dim_theta_prime(P({1})) == 1 / theta);
    for (int n = 0; n <= 6; ++n) {
      for (const auto& la : partitions_of(n)) {
        const Rat dim = table.dim_theta(la);
        const Rat dim_prime = table.dim_theta_prime(la);
        CHECK(dim > 0);
        CHECK(dim_prime > 0);
        CHECK(dim_prime == dim * table.entry(la).norm);
      }
    }
  }
}

TEST_CASE("branching weights multiply along paths") {
  for (const Rat& theta : {rq(1, 2), Rat(2)}) {
    JackTable table(theta, 5);
    for (int n = 0; n <= 5; ++n) {
      for (const auto& la : partitions_of(n)) {
        CHECK(weighted_chains(table, la) == table.dim_theta(la));
      }
    }
  }
}

TEST_CASE("skew variants") {
  const Rat theta = rq(1, 2);
  JackTable table(theta, 6);
  for (int n = 0; n <= 6; ++n) {
    for (const auto& la : partitions_of(n)) {
      CHECK(table.dim_theta_skew(Partition(), la) == table.dim_theta(la));
      CHECK(table.dim_theta_skew(la, la) == 1);
      CHECK(table.dim_theta_prime_skew(Partition(), la) ==
            table.dim_theta_prime(la));
      CHECK(table.dim_theta_prime_skew(la, la) == 1);
    }
  }
  CHECK(table.dim_theta_skew(P({2}), P({1, 1})) == 0);
  CHECK(table.dim_theta_prime_skew(P({3}), P({2, 2})) == 0);

  // One-box skews are the branching weights, up to the P/Q normalization.
  for (int n = 0; n <= 5; ++n) {
    for (const auto& mu : partitions_of(n)) {
      for (const auto& nu : mu.addable()) {
        const Rat kappa = table.pieri_kappa(mu, nu);
        CHECK(table.dim_theta_skew(mu, nu) == kappa);
        CHECK(table.dim_theta_prime_skew(mu, nu) ==
              kappa * table.entry(nu).norm / table.entry(mu).norm);
      }
    }
  }
}

TEST_CASE("tables extend in place") {
  const Rat theta = rq(3, 4);
  JackTable grown(theta, 2);
  CHECK(grown.max_degree() == 2);
  grown.extend(5);
  CHECK(grown.max_degree() == 5);
  grown.extend(3);  // no-op
  CHECK(grown.max_degree() == 5);
  JackTable fresh(theta, 5);
  for (int n = 0; n <= 5; ++n) {
    for (const auto& la : partitions_of(n)) {
      CHECK(grown.entry(la).on_monomial.terms ==
            fresh.entry(la).on_monomial.terms);
      CHECK(grown.entry(la).norm == fresh.entry(la).norm);
    }
  }
  CHECK_THROWS_AS(fresh.entry(P({6})), bound_error);
}
