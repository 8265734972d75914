#include "planch/symfunc.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <vector>

namespace planch {

int SymFunc::degree() const {
  int d = 0;
  for (const auto& [la, c] : terms) d = std::max(d, la.size());
  return d;
}

void SymFunc::add_term(const Partition& la, const Rat& c) {
  if (c == 0) return;
  auto [it, fresh] = terms.emplace(la, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

SymFunc& SymFunc::operator+=(const SymFunc& o) {
  if (basis != o.basis) throw std::logic_error("basis mismatch in +=");
  for (const auto& [la, c] : o.terms) add_term(la, c);
  return *this;
}

SymFunc SymFunc::scaled(const Rat& c) const {
  SymFunc out{basis, {}};
  if (c == 0) return out;
  for (const auto& [la, v] : terms) out.terms.emplace(la, v * c);
  return out;
}

std::string SymFunc::str() const {
  std::ostringstream os;
  const char* tag = basis == Basis::monomial ? "m" : "p";
  bool first = true;
  for (const auto& [la, c] : terms) {
    if (!first) os << " + ";
    first = false;
    os << rat_str(c) << "*" << tag << "(" << la.str() << ")";
  }
  if (first) os << "0";
  return os.str();
}

Int z_of(const Partition& rho) {
  Int z = 1;
  int run_val = 0, run_len = 0;
  auto flush = [&]() {
    for (int i = 1; i <= run_len; ++i) z *= Int(run_val) * Int(i);
  };
  for (int p : rho.parts()) {
    if (p == run_val) {
      ++run_len;
    } else {
      flush();
      run_val = p;
      run_len = 1;
    }
  }
  flush();
  return z;
}

namespace {

constexpr int kMaxBasisDegree = 40;

// Multiply a monomial-basis expansion (integer coefficients) by p_r.
// m_la * p_r = sum_mu c_mu m_mu where c_mu counts the positions i of mu with
// mu_i >= r whose removal-and-reinsertion recovers la.
std::map<Partition, Int> mono_times_p(const std::map<Partition, Int>& f,
                                      int r) {
  std::map<Partition, Int> out;
  for (const auto& [la, coeff] : f) {
    // Candidate products: bump one part value v of la (or v = 0) to v + r.
    std::vector<int> values{0};
    for (int p : la.parts())
      if (values.back() != p) values.push_back(p);
    for (int v : values) {
      std::vector<int> parts = la.parts();
      if (v == 0) {
        parts.push_back(r);
      } else {
        auto it = std::find(parts.begin(), parts.end(), v);
        *it += r;
      }
      std::sort(parts.begin(), parts.end(), std::greater<>());
      Partition mu(std::move(parts));
      // Count positions of mu that map back onto la.
      Int count = 0;
      for (int i = 1; i <= mu.length(); ++i) {
        if (mu.part(i) < r) break;
        std::vector<int> back;
        back.reserve(mu.length());
        for (int k = 1; k <= mu.length(); ++k) {
          if (k == i) {
            if (mu.part(k) - r > 0) back.push_back(mu.part(k) - r);
          } else {
            back.push_back(mu.part(k));
          }
        }
        std::sort(back.begin(), back.end(), std::greater<>());
        if (back == la.parts()) ++count;
      }
      if (count != 0) out[mu] += coeff * count;
    }
  }
  return out;
}

struct DegreeTable {
  std::vector<Partition> parts;              // canonical order
  std::map<Partition, int> index;
  std::vector<std::vector<Rat>> p_in_m;      // row rho: p_rho on the m basis
  std::vector<std::vector<Rat>> m_in_p;      // row la: m_la on the p basis
};

// Exact inverse by Gauss-Jordan; the matrix is invertible because the p->m
// transition is triangular with nonzero diagonal in a refinement order.
std::vector<std::vector<Rat>> invert(std::vector<std::vector<Rat>> a) {
  const std::size_t n = a.size();
  std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw std::logic_error("singular basis-change matrix");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    Rat d = a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] /= d;
      inv[col][j] /= d;
    }
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col] == 0) continue;
      Rat f = a[row][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[row][j] -= f * a[col][j];
        inv[row][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

const DegreeTable& degree_table(int d) {
  static std::map<int, DegreeTable> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(d);
  if (it != cache.end()) return it->second;
  if (d < 0 || d > kMaxBasisDegree)
    throw bound_error("basis-change degree " + std::to_string(d) +
                      " above configured bound " +
                      std::to_string(kMaxBasisDegree));
  DegreeTable t;
  t.parts = partitions_of(d);
  const std::size_t n = t.parts.size();
  for (std::size_t i = 0; i < n; ++i) t.index.emplace(t.parts[i], (int)i);
  t.p_in_m.assign(n, {});
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i) {
    std::map<Partition, Int> exp{{Partition(), Int(1)}};
    for (int r : t.parts[i].parts()) exp = mono_times_p(exp, r);
    t.p_in_m[i].assign(n, Rat(0));
    for (const auto& [la, c] : exp) {
      std::size_t j = t.index.at(la);
      t.p_in_m[i][j] = Rat(c);
      a[j][i] = Rat(c);  // transposed: column i holds p_i on the m basis
    }
  }
  // Solve for each m_la: coefficients x with sum_rho x_rho p_rho = m_la,
  // i.e. A x = e_la with A[j][i] = coeff of m_j in p_i.
  std::vector<std::vector<Rat>> ainv = invert(std::move(a));
  t.m_in_p.assign(n, std::vector<Rat>(n, Rat(0)));
  for (std::size_t la = 0; la < n; ++la)
    for (std::size_t rho = 0; rho < n; ++rho) t.m_in_p[la][rho] = ainv[rho][la];
  return cache.emplace(d, std::move(t)).first->second;
}

}  // namespace

SymFunc to_basis(const SymFunc& f, Basis target) {
  if (f.basis == target) return f;
  SymFunc out{target, {}};
  for (const auto& [la, c] : f.terms) {
    const DegreeTable& t = degree_table(la.size());
    const std::size_t i = t.index.at(la);
    const auto& row = (target == Basis::monomial) ? t.p_in_m[i] : t.m_in_p[i];
    for (std::size_t j = 0; j < row.size(); ++j)
      if (row[j] != 0) out.add_term(t.parts[j], c * row[j]);
  }
  return out;
}

namespace {

Partition concat(const Partition& a, const Partition& b) {
  std::vector<int> parts;
  parts.reserve(a.length() + b.length());
  std::merge(a.parts().begin(), a.parts().end(), b.parts().begin(),
             b.parts().end(), std::back_inserter(parts), std::greater<>());
  return Partition(std::move(parts));
}

}  // namespace

SymFunc multiply(const SymFunc& f, const SymFunc& g) {
  if (f.basis != g.basis) throw std::logic_error("basis mismatch in multiply");
  if (f.basis == Basis::power_sum) {
    SymFunc out = SymFunc::zero(Basis::power_sum);
    for (const auto& [la, c] : f.terms)
      for (const auto& [mu, d] : g.terms) out.add_term(concat(la, mu), c * d);
    return out;
  }
  SymFunc prod = multiply(to_basis(f, Basis::power_sum),
                          to_basis(g, Basis::power_sum));
  return to_basis(prod, Basis::monomial);
}

Rat inner_product_jack(const SymFunc& f, const SymFunc& g, const Rat& theta) {
  if (theta <= 0) throw std::domain_error("theta must be positive");
  const SymFunc fp = to_basis(f, Basis::power_sum);
  const SymFunc gp = to_basis(g, Basis::power_sum);
  const auto *small = &fp.terms, *large = &gp.terms;
  if (small->size() > large->size()) std::swap(small, large);
  Rat acc(0);
  for (const auto& [rho, c] : *small) {
    auto it = large->find(rho);
    if (it == large->end()) continue;
    acc += c * it->second * Rat(z_of(rho)) * pow_rat(theta, -rho.length());
  }
  return acc;
}

std::map<Partition, Int> monomial_product_constants(const Partition& sigma,
                                                    const Partition& tau) {
  const int k = std::max(1, sigma.size() + tau.size());
  auto perms_of = [k](const Partition& la) {
    std::vector<int> v(k, 0);
    std::copy(la.parts().begin(), la.parts().end(), v.begin());
    std::sort(v.begin(), v.end());
    std::vector<std::vector<int>> out;
    do {
      out.push_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
  };
  const auto pa = perms_of(sigma);
  const auto pb = perms_of(tau);
  std::map<Partition, Int> out;
  std::vector<int> sum(k);
  for (const auto& alpha : pa) {
    for (const auto& beta : pb) {
      bool sorted = true;
      for (int i = 0; i < k; ++i) {
        sum[i] = alpha[i] + beta[i];
        if (i > 0 && sum[i] > sum[i - 1]) {
          sorted = false;
          break;
        }
      }
      if (!sorted) continue;  // only the representative exponent counts
      std::vector<int> parts;
      for (int v : sum)
        if (v > 0) parts.push_back(v);
      ++out[Partition(std::move(parts))];
    }
  }
  return out;
}

}  // namespace planch
