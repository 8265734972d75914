#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace planch {

// All arithmetic in this library is exact. Int is an arbitrary-precision
// integer, Rat an arbitrary-precision rational kept in lowest terms with a
// positive denominator.
using Int = mpz_class;
using Rat = mpq_class;

// Raised when a query exceeds a configured table bound.
struct bound_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when an evaluation point hits a pole.
struct pole_error : std::domain_error {
  using std::domain_error::domain_error;
};

// Raised on malformed user-facing input (CLI arguments, observable specs,
// partition strings).
struct usage_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Accepts "p", "-p", "p/q"; the result is reduced. Rejects q == 0 and any
// other malformed input.
Rat parse_rat(const std::string& s);

// Lowest terms; integers print without a denominator ("3", "-2", "5/4").
std::string rat_str(const Rat& r);

Rat make_rat(const Int& num, const Int& den);

Int factorial(int n);
Int falling(int n, int m);  // n(n-1)...(n-m+1); 1 when m == 0
Int binom(int n, int k);    // 0 outside 0 <= k <= n

Rat pow_rat(const Rat& base, int e);  // e < 0 requires base != 0

}  // namespace planch
