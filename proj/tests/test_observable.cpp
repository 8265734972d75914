#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "planch/obs_parse.hpp"
#include "planch/observable.hpp"
#include "planch/workspace.hpp"

using namespace planch;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

Rat rq(int num, int den) { return make_rat(num, den); }

// Truncated product of two coefficient vectors, degree cap inclusive.
std::vector<Rat> poly_mul(const std::vector<Rat>& a, const std::vector<Rat>& b,
                          int cap) {
  std::vector<Rat> out(cap + 1, Rat(0));
  for (size_t i = 0; i < a.size() && static_cast<int>(i) <= cap; ++i) {
    for (size_t j = 0; j < b.size() && static_cast<int>(i + j) <= cap; ++j) {
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

// prod (1 - r*t) over the roots, truncated.
std::vector<Rat> poly_from_roots(const std::vector<Rat>& roots, int cap) {
  std::vector<Rat> out{Rat(1)};
  for (const Rat& r : roots) {
    out = poly_mul(out, {Rat(1), -r}, cap);
  }
  out.resize(cap + 1, Rat(0));
  return out;
}

}  // namespace

TEST_CASE("corner coordinates of small diagrams") {
  const std::vector<Rat> thetas{rq(1, 2), Rat(1), Rat(2), rq(7, 3)};
  for (const Rat& t : thetas) {
    KerovCoords e = kerov_coords(Partition(), t);
    CHECK(e.X == std::vector<Rat>{Rat(0)});
    CHECK(e.Y.empty());

    KerovCoords one = kerov_coords(P({1}), t);
    CHECK(one.X == std::vector<Rat>{Rat(1), -t});
    CHECK(one.Y == std::vector<Rat>{Rat(1) - t});

    KerovCoords row = kerov_coords(P({2}), t);
    CHECK(row.X == std::vector<Rat>{Rat(2), -t});
    CHECK(row.Y == std::vector<Rat>{Rat(2) - t});

    KerovCoords col = kerov_coords(P({1, 1}), t);
    CHECK(col.X == std::vector<Rat>{Rat(1), -2 * t});
    CHECK(col.Y == std::vector<Rat>{Rat(1) - 2 * t});

    // Two runs: the 3,3 block and the final 1.
    KerovCoords hook = kerov_coords(P({3, 3, 1}), t);
    CHECK(hook.X == std::vector<Rat>{Rat(3), Rat(1) - 2 * t, -3 * t});
    CHECK(hook.Y == std::vector<Rat>{Rat(3) - 2 * t, Rat(1) - 3 * t});
  }

  KerovCoords half = kerov_coords(P({3, 3, 1}), rq(1, 2));
  CHECK(half.X == std::vector<Rat>{Rat(3), Rat(0), rq(-3, 2)});
  CHECK(half.Y == std::vector<Rat>{Rat(2), rq(-1, 2)});

  CHECK_THROWS_AS(kerov_coords(P({2, 1}), Rat(0)), usage_error);
  CHECK_THROWS_AS(kerov_coords(P({2, 1}), Rat(-1)), usage_error);
}

TEST_CASE("corner coordinates interlace and balance") {
  const std::vector<Rat> thetas{rq(1, 2), Rat(1), Rat(2), Rat(3)};
  for (int n = 0; n <= 8; ++n) {
    for (const Partition& la : partitions_of(n)) {
      for (const Rat& t : thetas) {
        KerovCoords kc = kerov_coords(la, t);
        REQUIRE(kc.X.size() == kc.Y.size() + 1);
        Rat balance = 0;
        for (const Rat& x : kc.X) balance += x;
        for (const Rat& y : kc.Y) balance -= y;
        CHECK(balance == 0);
        for (size_t k = 0; k + 1 < kc.X.size(); ++k) {
          CHECK(kc.X[k] > kc.Y[k]);
          CHECK(kc.Y[k] > kc.X[k + 1]);
        }
      }
    }
  }
}

TEST_CASE("characteristic ratio evaluates and flags poles") {
  CHECK(phi_eval(P({2, 1}), Rat(1), Rat(10)) == rq(4, 3));
  for (const Rat& u : {Rat(3), rq(-7, 2), Rat(100)}) {
    CHECK(phi_eval(Partition(), rq(5, 3), u) == 1);
  }

  // Poles sit at la_i - theta*i, one per row.
  CHECK_THROWS_AS(phi_eval(P({2, 1}), Rat(1), Rat(1)), pole_error);
  CHECK_THROWS_AS(phi_eval(P({2, 1}), Rat(1), Rat(-1)), pole_error);
  CHECK_THROWS_AS(phi_eval(P({3, 1}), rq(1, 2), rq(5, 2)), pole_error);

  CHECK(hh_eval(P({1}), Rat(1), Rat(3)) == rq(9, 8));
  CHECK_THROWS_AS(hh_eval(P({2, 1}), Rat(1), Rat(2)), pole_error);
  CHECK_THROWS_AS(hh_eval(P({2, 1}), Rat(1), Rat(0)), pole_error);
}

TEST_CASE("corner ratio matches the shifted row ratio") {
  // Both sides are rational in u with poles on a half-integer grid for
  // these thetas, so denominator-7 sample points are always safe.
  const std::vector<Rat> thetas{rq(1, 2), Rat(1), Rat(2)};
  const std::vector<Rat> points{rq(100, 7), rq(-45, 7), rq(33, 7)};
  for (int n = 0; n <= 6; ++n) {
    for (const Partition& la : partitions_of(n)) {
      for (const Rat& t : thetas) {
        for (const Rat& u : points) {
          CHECK(hh_eval(la, t, u) ==
                phi_eval(la, t, u - t) / phi_eval(la, t, u));
        }
      }
    }
  }
}

TEST_CASE("h series solves the corner product identity") {
  const int cap = 8;
  const std::vector<Rat> thetas{rq(1, 2), Rat(1), Rat(2)};
  for (int n = 0; n <= 6; ++n) {
    for (const Partition& la : partitions_of(n)) {
      for (const Rat& t : thetas) {
        KerovCoords kc = kerov_coords(la, t);
        std::vector<Rat> h = h_series(la, t, cap);
        REQUIRE(static_cast<int>(h.size()) == cap + 1);
        CHECK(h[0] == 1);
        CHECK(h[1] == 0);
        std::vector<Rat> lhs = poly_mul(h, poly_from_roots(kc.X, cap), cap);
        std::vector<Rat> rhs = poly_from_roots(kc.Y, cap);
        CHECK(lhs == rhs);
      }
    }
  }

  std::vector<Rat> empty = h_series(Partition(), rq(3, 4), 5);
  CHECK(empty == std::vector<Rat>{Rat(1), Rat(0), Rat(0), Rat(0), Rat(0), Rat(0)});
  CHECK_THROWS_AS(h_series(P({1}), Rat(1), -1), usage_error);

  // The coefficient observables read the same series.
  Workspace ws;
  for (const Rat& t : thetas) {
    std::vector<Rat> h = h_series(P({3, 1}), t, 6);
    for (int m = 0; m <= 6; ++m) {
      CHECK(Observable::h_coeff(m).eval(P({3, 1}), t, ws) == h[m]);
    }
    CHECK(Observable::h_prod(P({4, 2, 2})).eval(P({3, 1}), t, ws) ==
          h[4] * h[2] * h[2]);
    CHECK(Observable::h_prod(Partition()).eval(P({3, 1}), t, ws) == 1);
  }
}

TEST_CASE("corner power sums") {
  const std::vector<Rat> thetas{rq(1, 2), Rat(2), Rat(3)};
  for (const Rat& t : thetas) {
    CHECK(frak_p_eval(P({1}), t, 2) == 2 * t);
  }
  // First power vanishes by balance; second is 2*theta*|la| exactly.
  for (int n = 0; n <= 8; ++n) {
    for (const Partition& la : partitions_of(n)) {
      for (const Rat& t : thetas) {
        CHECK(frak_p_eval(la, t, 1) == 0);
        CHECK(frak_p_eval(la, t, 2) == 2 * t * Rat(n));
      }
    }
  }
  CHECK_THROWS_AS(frak_p_eval(P({1}), Rat(1), 0), usage_error);

  Workspace ws;
  CHECK(Observable::frak_p(2).eval(P({4, 2, 1}), rq(5, 3), ws) ==
        frak_p_eval(P({4, 2, 1}), rq(5, 3), 2));
}

TEST_CASE("content power sums") {
  CHECK(content_power_eval(P({2, 1}), 2) == 2);
  CHECK(content_power_eval(P({3, 3, 1}), 1) == 1);
  CHECK(content_power_eval(P({3, 3, 1}), 0) == 7);
  CHECK(content_power_eval(Partition(), 3) == 0);
  CHECK_THROWS_AS(content_power_eval(P({1}), -1), usage_error);

  // Transposing negates every content.
  for (int n = 0; n <= 7; ++n) {
    for (const Partition& la : partitions_of(n)) {
      for (int r = 0; r <= 5; ++r) {
        Rat sign = (r % 2 == 0) ? Rat(1) : Rat(-1);
        CHECK(content_power_eval(la.transpose(), r) ==
              sign * content_power_eval(la, r));
      }
    }
  }
}

TEST_CASE("shifted and super power sums") {
  Workspace ws;
  CHECK(Observable::pstar(2).eval(P({2, 1}), Rat(1), ws) == -3);

  const std::vector<Rat> thetas{rq(1, 2), Rat(1), Rat(2)};
  for (int n = 0; n <= 6; ++n) {
    for (const Partition& la : partitions_of(n)) {
      for (const Rat& t : thetas) {
        CHECK(Observable::pstar(1).eval(la, t, ws) == Rat(n));
      }
      CHECK(Observable::superp(1).eval(la, Rat(1), ws) == Rat(n));
      // Transposition flips the sign of the even super power sums.
      for (int m = 1; m <= 6; ++m) {
        Rat sign = (m % 2 == 0) ? Rat(-1) : Rat(1);
        CHECK(Observable::superp(m).eval(la.transpose(), Rat(1), ws) ==
              sign * Observable::superp(m).eval(la, Rat(1), ws));
      }
    }
  }

  CHECK_THROWS_AS(Observable::pstar(0), usage_error);
  CHECK_THROWS_AS(Observable::superp(0), usage_error);
}

TEST_CASE("falling factorial observables") {
  Workspace ws;
  CHECK(Observable::f_mu(P({2})).eval(P({2, 1}), Rat(1), ws) == 3);
  CHECK(Observable::f_mu(P({2})).eval(P({1, 1, 1}), Rat(1), ws) == 0);
  CHECK(Observable::f_mu(P({3, 1})).eval(P({2, 1}), Rat(1), ws) == 0);
  for (int n = 0; n <= 5; ++n) {
    for (const Partition& la : partitions_of(n)) {
      CHECK(Observable::one().eval(la, rq(3, 2), ws) == 1);
      CHECK(Observable::f_mu(P({1})).eval(la, Rat(1), ws) == Rat(n));
      // The deformed variant degenerates to the standard one at theta = 1.
      for (const Partition& mu : partitions_of(std::min(n, 3))) {
        CHECK(Observable::f_mu_jack(mu).eval(la, Rat(1), ws) ==
              Observable::f_mu(mu).eval(la, Rat(1), ws));
      }
    }
  }
}

TEST_CASE("shifted argument symmetric observable") {
  Workspace ws;
  SymFunc p1 = SymFunc::power(P({1}));
  CHECK(Observable::h_psi(p1).eval(P({2, 1}), Rat(1), ws) == 6);
  // p_1 at the points la_i + n - i depends on n alone.
  for (int n = 0; n <= 6; ++n) {
    for (const Partition& la : partitions_of(n)) {
      CHECK(Observable::h_psi(p1).eval(la, rq(1, 2), ws) ==
            Rat(n) + Rat(Int(n) * Int(n - 1)) / 2);
    }
  }
}

TEST_CASE("degree bounds and theta sensitivity") {
  CHECK(Observable::pstar(4).degree_bound() == 4);
  CHECK(Observable::superp(3).degree_bound() == 3);
  CHECK(Observable::content_g(SymFunc::power(P({2, 1}))).degree_bound() == 5);
  CHECK(Observable::h_psi(SymFunc::power(P({3}))).degree_bound() == 4);
  CHECK(Observable::f_mu(P({2, 2})).degree_bound() == 4);
  CHECK(Observable::f_mu_jack(P({3})).degree_bound() == 3);
  CHECK(Observable::h_coeff(0).degree_bound() == 0);
  CHECK(Observable::h_coeff(1).degree_bound() == 0);
  CHECK(Observable::h_coeff(5).degree_bound() == 4);
  CHECK(Observable::h_prod(P({4, 2})).degree_bound() == 4);
  CHECK(Observable::frak_p(1).degree_bound() == 0);
  CHECK(Observable::frak_p(3).degree_bound() == 2);
  CHECK(Observable::product({Observable::pstar(2), Observable::frak_p(3)})
            .degree_bound() == 4);
  CHECK(Observable::linear({{Rat(5), Observable::pstar(2)},
                            {Rat(-1), Observable::frak_p(4)}})
            .degree_bound() == 3);
  CHECK(Observable::del(Observable::h_coeff(4)).degree_bound() == 2);
  CHECK(Observable::del(Observable::one()).degree_bound() == 0);

  CHECK(Observable::pstar(2).theta_sensitive());
  CHECK_FALSE(Observable::superp(2).theta_sensitive());
  CHECK_FALSE(Observable::content_g(SymFunc::power(P({1}))).theta_sensitive());
  CHECK_FALSE(Observable::f_mu(P({2})).theta_sensitive());
  CHECK(Observable::f_mu_jack(P({2})).theta_sensitive());
  CHECK(Observable::h_prod(P({2})).theta_sensitive());
  CHECK(Observable::del(Observable::one()).theta_sensitive());
  CHECK_FALSE(
      Observable::product({Observable::one(), Observable::superp(2)})
          .theta_sensitive());
  CHECK(Observable::linear({{Rat(1), Observable::superp(2)},
                            {Rat(2), Observable::frak_p(2)}})
            .theta_sensitive());

  CHECK_THROWS_AS(Observable::h_coeff(-1), usage_error);
  CHECK_THROWS_AS(Observable::h_prod(P({2, 1})), usage_error);
  CHECK_THROWS_AS(Observable::frak_p(0), usage_error);
}

TEST_CASE("rendering round trips through the parser") {
  Workspace ws;
  std::vector<Observable> samples{
      Observable::one(),
      Observable::pstar(3),
      Observable::superp(2),
      Observable::content_g(SymFunc::power(P({2}))),
      Observable::h_psi(SymFunc::power(P({1, 1}))),
      Observable::f_mu(P({2, 1})),
      Observable::f_mu_jack(P({2})),
      Observable::h_coeff(4),
      Observable::h_prod(P({3, 2})),
      Observable::frak_p(2),
      Observable::product({Observable::pstar(1), Observable::frak_p(2)}),
      Observable::linear({{rq(-2, 3), Observable::pstar(2)},
                          {Rat(1), Observable::h_coeff(2)}}),
  };
  const std::vector<Partition> diagrams{Partition(), P({1}), P({2, 1}),
                                        P({3, 3, 1})};
  for (const Observable& obs : samples) {
    Observable back = parse_observable(obs.spec_str());
    CHECK(back.degree_bound() == obs.degree_bound());
    for (const Partition& la : diagrams) {
      for (const Rat& t : {rq(1, 2), Rat(2)}) {
        CHECK(back.eval(la, t, ws) == obs.eval(la, t, ws));
      }
    }
  }
}

TEST_CASE("difference operator") {
  Workspace ws;
  for (const Rat& t : {rq(1, 2), Rat(1), Rat(2), rq(7, 3)}) {
    CHECK(Observable::del(Observable::h_coeff(2)).eval(Partition(), t, ws) ==
          t);
  }
  // Kernel rows sum to one, so constants difference to zero; |la| steps by
  // exactly one box.
  Observable dzero = Observable::del(Observable::one());
  Observable dsize = Observable::del(Observable::f_mu(P({1})));
  for (int n = 0; n <= 5; ++n) {
    for (const Partition& la : partitions_of(n)) {
      for (const Rat& t : {rq(1, 2), Rat(2)}) {
        CHECK(dzero.eval(la, t, ws) == 0);
        CHECK(dsize.eval(la, t, ws) == 1);
      }
    }
  }
}
