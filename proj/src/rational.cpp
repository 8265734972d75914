#include "planch/rational.hpp"

#include <cctype>

namespace planch {

Rat parse_rat(const std::string& s) {
  // Validate by hand: mpq_set_str is lenient about whitespace and bases.
  auto bad = [&]() -> Rat {
    throw usage_error("malformed rational '" + s + "'");
  };
  std::size_t i = 0;
  auto digits = [&](std::size_t from) {
    std::size_t j = from;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    return j;
  };
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  std::size_t num_end = digits(i);
  if (num_end == i) return bad();
  std::size_t k = num_end;
  if (k < s.size()) {
    if (s[k] != '/') return bad();
    std::size_t den_end = digits(k + 1);
    if (den_end == k + 1 || den_end != s.size()) return bad();
  }
  Rat r;
  if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0) return bad();
  if (r.get_den() == 0) throw usage_error("zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

std::string rat_str(const Rat& r) { return r.get_str(); }

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::domain_error("make_rat: zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Int factorial(int n) {
  if (n < 0) throw std::domain_error("factorial of negative");
  Int r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Int falling(int n, int m) {
  if (m < 0) throw std::domain_error("falling factorial with negative length");
  Int r = 1;
  for (int i = 0; i < m; ++i) r *= Int(n - i);
  return r;
}

Int binom(int n, int k) {
  if (k < 0 || k > n || n < 0) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

Rat pow_rat(const Rat& base, int e) {
  if (e == 0) return Rat(1);
  if (base == 0 && e < 0) throw std::domain_error("pow_rat: zero base, negative exponent");
  Rat acc(1);
  Rat b = base;
  int k = e < 0 ? -e : e;
  while (k > 0) {
    if (k & 1) acc *= b;
    b *= b;
    k >>= 1;
  }
  if (e < 0) acc = 1 / acc;
  return acc;
}

}  // namespace planch
