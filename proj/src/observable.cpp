#include "planch/observable.hpp"

#include <algorithm>
#include <stdexcept>
#include <variant>

#include "planch/workspace.hpp"

namespace planch {

KerovCoords kerov_coords(const Partition& la, const Rat& theta) {
  if (!(theta > 0)) {
    throw usage_error("kerov_coords: theta must be positive");
  }
  // Walk the border from the top right: each run of equal row lengths
  // contributes one inner corner at its top and one outer corner at its
  // bottom; the final inner corner sits on the row axis.
  KerovCoords kc;
  const auto& parts = la.parts();
  size_t i = 0;
  Int rows = 0;
  while (i < parts.size()) {
    size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    kc.X.push_back(Rat(parts[i]) - theta * Rat(rows));
    rows += Int(j - i);
    kc.Y.push_back(Rat(parts[i]) - theta * Rat(rows));
    i = j;
  }
  kc.X.push_back(-theta * Rat(rows));

  Rat balance = 0;
  for (const Rat& x : kc.X) balance += x;
  for (const Rat& y : kc.Y) balance -= y;
  bool interlaced = true;
  for (size_t k = 0; k + 1 < kc.X.size(); ++k) {
    if (!(kc.X[k] > kc.Y[k] && kc.Y[k] > kc.X[k + 1])) interlaced = false;
  }
  if (balance != 0 || !interlaced) {
    throw std::logic_error("kerov_coords: corner invariants violated for " +
                           la.str());
  }
  return kc;
}

Rat phi_eval(const Partition& la, const Rat& theta, const Rat& u) {
  Rat result = 1;
  const auto& parts = la.parts();
  for (size_t i = 0; i < parts.size(); ++i) {
    Rat ti = theta * Rat(Int(i + 1));
    Rat den = u - Rat(parts[i]) + ti;
    if (den == 0) {
      throw pole_error("characteristic function pole at u = " + rat_str(u) +
                       " (row " + std::to_string(i + 1) + ")");
    }
    result *= (u + ti) / den;
  }
  return result;
}

Rat hh_eval(const Partition& la, const Rat& theta, const Rat& u) {
  KerovCoords kc = kerov_coords(la, theta);
  Rat num = u;
  for (const Rat& y : kc.Y) num *= u - y;
  Rat den = 1;
  for (const Rat& x : kc.X) {
    if (u == x) {
      throw pole_error("corner generating function pole at u = " + rat_str(u));
    }
    den *= u - x;
  }
  return num / den;
}

Rat frak_p_eval(const Partition& la, const Rat& theta, int m) {
  if (m < 1) throw usage_error("frak_p_eval: order must be >= 1");
  KerovCoords kc = kerov_coords(la, theta);
  Rat sum = 0;
  for (const Rat& x : kc.X) sum += pow_rat(x, m);
  for (const Rat& y : kc.Y) sum -= pow_rat(y, m);
  return sum;
}

std::vector<Rat> h_series(const Partition& la, const Rat& theta,
                          int max_order) {
  if (max_order < 0) throw usage_error("h_series: order must be >= 0");
  KerovCoords kc = kerov_coords(la, theta);
  // Power sums of the corner multiset, then Newton's recursion
  // m*h_m = sum_k p_k h_{m-k} to exponentiate the log series exactly.
  std::vector<Rat> p(max_order + 1, Rat(0));
  for (int k = 1; k <= max_order; ++k) {
    for (const Rat& x : kc.X) p[k] += pow_rat(x, k);
    for (const Rat& y : kc.Y) p[k] -= pow_rat(y, k);
  }
  std::vector<Rat> h(max_order + 1, Rat(0));
  h[0] = 1;
  for (int m = 1; m <= max_order; ++m) {
    Rat acc = 0;
    for (int k = 1; k <= m; ++k) acc += p[k] * h[m - k];
    h[m] = acc / Rat(Int(m));
  }
  return h;
}

Rat content_power_eval(const Partition& la, int r) {
  if (r < 0) throw usage_error("content_power_eval: exponent must be >= 0");
  Rat sum = 0;
  for (int c : la.contents()) {
    Int power;
    mpz_pow_ui(power.get_mpz_t(), Int(c).get_mpz_t(), r);
    sum += Rat(power);
  }
  return sum;
}

namespace {

struct PStarNode {
  int m;
};
struct SuperPNode {
  int m;
};
struct ContentGNode {
  SymFunc phi;  // power-sum basis
};
struct HPsiNode {
  SymFunc psi;  // power-sum basis
};
struct FMuNode {
  Partition mu;
};
struct FMuJackNode {
  Partition mu;
};
struct HCoeffNode {
  int m;
};
struct HProdNode {
  Partition rho;  // all parts >= 2
};
struct FrakPNode {
  int m;
};
struct ProductNode {
  std::vector<Observable> factors;
};
struct LinearNode {
  std::vector<std::pair<Rat, Observable>> terms;
};
struct DelNode {
  Observable inner;
};

// Evaluate a power-sum basis symmetric function on a finite value multiset.
Rat eval_powersum_at(const SymFunc& f, const std::vector<Rat>& values) {
  Rat total = 0;
  for (const auto& [rho, coeff] : f.terms) {
    Rat term = coeff;
    for (int r : rho.parts()) {
      Rat psum = 0;
      for (const Rat& v : values) psum += pow_rat(v, r);
      term *= psum;
    }
    total += term;
  }
  return total;
}

int powersum_degree_bound(const SymFunc& f) {
  int bound = 0;
  for (const auto& [rho, coeff] : f.terms) {
    bound = std::max(bound, rho.size() + rho.length());
  }
  return bound;
}

std::string powersum_spec(const SymFunc& f) {
  // Single p_rho with coefficient 1 renders in the mini-language; anything
  // else falls back to the generic SymFunc rendering.
  if (f.terms.size() == 1 && f.terms.begin()->second == 1) {
    return "p(" + f.terms.begin()->first.str() + ")";
  }
  return "[" + f.str() + "]";
}

}  // namespace

struct Observable::Node {
  std::variant<PStarNode, SuperPNode, ContentGNode, HPsiNode, FMuNode,
               FMuJackNode, HCoeffNode, HProdNode, FrakPNode, ProductNode,
               LinearNode, DelNode>
      v;
};

Observable::Observable(std::shared_ptr<const Node> node)
    : node_(std::move(node)) {}

Observable Observable::one() { return f_mu(Partition()); }

Observable Observable::pstar(int m) {
  if (m < 1) throw usage_error("pstar: order must be >= 1");
  auto n = std::make_shared<Node>();
  n->v = PStarNode{m};
  return Observable(n);
}

Observable Observable::superp(int m) {
  if (m < 1) throw usage_error("superp: order must be >= 1");
  auto n = std::make_shared<Node>();
  n->v = SuperPNode{m};
  return Observable(n);
}

Observable Observable::content_g(const SymFunc& phi) {
  auto n = std::make_shared<Node>();
  n->v = ContentGNode{to_basis(phi, Basis::power_sum)};
  return Observable(n);
}

Observable Observable::h_psi(const SymFunc& psi) {
  auto n = std::make_shared<Node>();
  n->v = HPsiNode{to_basis(psi, Basis::power_sum)};
  return Observable(n);
}

Observable Observable::f_mu(const Partition& mu) {
  auto n = std::make_shared<Node>();
  n->v = FMuNode{mu};
  return Observable(n);
}

Observable Observable::f_mu_jack(const Partition& mu) {
  auto n = std::make_shared<Node>();
  n->v = FMuJackNode{mu};
  return Observable(n);
}

Observable Observable::h_coeff(int m) {
  if (m < 0) throw usage_error("h_coeff: order must be >= 0");
  auto n = std::make_shared<Node>();
  n->v = HCoeffNode{m};
  return Observable(n);
}

Observable Observable::h_prod(const Partition& rho) {
  for (int r : rho.parts()) {
    if (r < 2) throw usage_error("h_prod: parts must be >= 2");
  }
  auto n = std::make_shared<Node>();
  n->v = HProdNode{rho};
  return Observable(n);
}

Observable Observable::frak_p(int m) {
  if (m < 1) throw usage_error("frak_p: order must be >= 1");
  auto n = std::make_shared<Node>();
  n->v = FrakPNode{m};
  return Observable(n);
}

Observable Observable::product(std::vector<Observable> factors) {
  auto n = std::make_shared<Node>();
  n->v = ProductNode{std::move(factors)};
  return Observable(n);
}

Observable Observable::linear(std::vector<std::pair<Rat, Observable>> terms) {
  auto n = std::make_shared<Node>();
  n->v = LinearNode{std::move(terms)};
  return Observable(n);
}

Observable Observable::del(Observable inner) {
  auto n = std::make_shared<Node>();
  n->v = DelNode{std::move(inner)};
  return Observable(n);
}

int Observable::degree_bound() const {
  struct Visitor {
    int operator()(const PStarNode& n) const { return n.m; }
    int operator()(const SuperPNode& n) const { return n.m; }
    int operator()(const ContentGNode& n) const {
      return powersum_degree_bound(n.phi);
    }
    int operator()(const HPsiNode& n) const {
      return powersum_degree_bound(n.psi);
    }
    int operator()(const FMuNode& n) const { return n.mu.size(); }
    int operator()(const FMuJackNode& n) const { return n.mu.size(); }
    int operator()(const HCoeffNode& n) const {
      return n.m >= 2 ? n.m - 1 : 0;
    }
    int operator()(const HProdNode& n) const {
      return n.rho.size() - n.rho.length();
    }
    int operator()(const FrakPNode& n) const { return n.m >= 2 ? n.m - 1 : 0; }
    int operator()(const ProductNode& n) const {
      int sum = 0;
      for (const auto& f : n.factors) sum += f.degree_bound();
      return sum;
    }
    int operator()(const LinearNode& n) const {
      int best = 0;
      for (const auto& [c, f] : n.terms) best = std::max(best, f.degree_bound());
      return best;
    }
    int operator()(const DelNode& n) const {
      return std::max(n.inner.degree_bound() - 1, 0);
    }
  };
  return std::visit(Visitor{}, node_->v);
}

bool Observable::theta_sensitive() const {
  struct Visitor {
    bool operator()(const PStarNode&) const { return true; }
    bool operator()(const SuperPNode&) const { return false; }
    bool operator()(const ContentGNode&) const { return false; }
    bool operator()(const HPsiNode&) const { return false; }
    bool operator()(const FMuNode&) const { return false; }
    bool operator()(const FMuJackNode&) const { return true; }
    bool operator()(const HCoeffNode&) const { return true; }
    bool operator()(const HProdNode&) const { return true; }
    bool operator()(const FrakPNode&) const { return true; }
    bool operator()(const ProductNode& n) const {
      for (const auto& f : n.factors) {
        if (f.theta_sensitive()) return true;
      }
      return false;
    }
    bool operator()(const LinearNode& n) const {
      for (const auto& [c, f] : n.terms) {
        if (f.theta_sensitive()) return true;
      }
      return false;
    }
    bool operator()(const DelNode&) const { return true; }
  };
  return std::visit(Visitor{}, node_->v);
}

std::string Observable::spec_str() const {
  struct Visitor {
    std::string operator()(const PStarNode& n) const {
      return "pstar:" + std::to_string(n.m);
    }
    std::string operator()(const SuperPNode& n) const {
      return "superp:" + std::to_string(n.m);
    }
    std::string operator()(const ContentGNode& n) const {
      return "content:" + powersum_spec(n.phi);
    }
    std::string operator()(const HPsiNode& n) const {
      return "hpsi:" + powersum_spec(n.psi);
    }
    std::string operator()(const FMuNode& n) const {
      return "fmu:" + n.mu.str();
    }
    std::string operator()(const FMuJackNode& n) const {
      return "fmujack:" + n.mu.str();
    }
    std::string operator()(const HCoeffNode& n) const {
      return "h:" + std::to_string(n.m);
    }
    std::string operator()(const HProdNode& n) const {
      return "hrho:" + n.rho.str();
    }
    std::string operator()(const FrakPNode& n) const {
      return "frak:" + std::to_string(n.m);
    }
    std::string operator()(const ProductNode& n) const {
      if (n.factors.empty()) return "1";
      std::string out;
      for (size_t i = 0; i < n.factors.size(); ++i) {
        if (i) out += "*";
        out += n.factors[i].spec_str();
      }
      return out;
    }
    std::string operator()(const LinearNode& n) const {
      if (n.terms.empty()) return "0";
      std::string out;
      for (size_t i = 0; i < n.terms.size(); ++i) {
        if (i) out += " + ";
        const auto& [c, f] = n.terms[i];
        if (c == 1) {
          out += f.spec_str();
        } else {
          out += rat_str(c) + "*" + f.spec_str();
        }
      }
      return out;
    }
    std::string operator()(const DelNode& n) const {
      return "del(" + n.inner.spec_str() + ")";
    }
  };
  return std::visit(Visitor{}, node_->v);
}

Rat Observable::eval(const Partition& la, const Rat& theta,
                     Workspace& ws) const {
  struct Visitor {
    const Partition& la;
    const Rat& theta;
    Workspace& ws;

    Rat operator()(const PStarNode& n) const {
      Rat sum = 0;
      const auto& parts = la.parts();
      for (size_t i = 0; i < parts.size(); ++i) {
        Rat ti = theta * Rat(Int(i + 1));
        sum += pow_rat(Rat(parts[i]) - ti, n.m) - pow_rat(-ti, n.m);
      }
      return sum;
    }
    Rat operator()(const SuperPNode& n) const {
      Frobenius fr = frobenius(la);
      Rat sum = 0;
      for (const Rat& a : fr.a) sum += pow_rat(a, n.m);
      for (const Rat& b : fr.b) sum -= pow_rat(-b, n.m);
      return sum;
    }
    Rat operator()(const ContentGNode& n) const {
      Rat total = 0;
      for (const auto& [rho, coeff] : n.phi.terms) {
        Rat term = coeff;
        for (int r : rho.parts()) term *= content_power_eval(la, r);
        total += term;
      }
      return total;
    }
    Rat operator()(const HPsiNode& n) const {
      int size = la.size();
      std::vector<Rat> values;
      values.reserve(size);
      for (int i = 1; i <= size; ++i) {
        values.push_back(Rat(Int(la.part(i) + size - i)));
      }
      return eval_powersum_at(n.psi, values);
    }
    Rat operator()(const FMuNode& n) const {
      if (la.size() < n.mu.size() || !la.contains(n.mu)) return 0;
      Rat val(falling(la.size(), n.mu.size()));
      return val * Rat(dim_skew(n.mu, la)) / Rat(dim_standard(la));
    }
    Rat operator()(const FMuJackNode& n) const {
      if (la.size() < n.mu.size() || !la.contains(n.mu)) return 0;
      JackTable& jt = ws.jack(theta, la.size());
      Rat val(falling(la.size(), n.mu.size()));
      return val * jt.dim_theta_skew(n.mu, la) / jt.dim_theta(la);
    }
    Rat operator()(const HCoeffNode& n) const {
      return h_series(la, theta, n.m)[n.m];
    }
    Rat operator()(const HProdNode& n) const {
      if (n.rho.empty()) return 1;
      std::vector<Rat> h = h_series(la, theta, n.rho.part(1));
      Rat prod = 1;
      for (int r : n.rho.parts()) prod *= h[r];
      return prod;
    }
    Rat operator()(const FrakPNode& n) const {
      return frak_p_eval(la, theta, n.m);
    }
    Rat operator()(const ProductNode& n) const {
      Rat prod = 1;
      for (const auto& f : n.factors) {
        prod *= f.eval(la, theta, ws);
        if (prod == 0) break;
      }
      return prod;
    }
    Rat operator()(const LinearNode& n) const {
      Rat sum = 0;
      for (const auto& [c, f] : n.terms) sum += c * f.eval(la, theta, ws);
      return sum;
    }
    Rat operator()(const DelNode& n) const {
      const GrowthKernel& k = ws.kernel(la, theta);
      Rat sum = -n.inner.eval(la, theta, ws);
      for (const auto& [target, weight] : k.targets) {
        sum += weight * n.inner.eval(target, theta, ws);
      }
      return sum;
    }
  };
  return std::visit(Visitor{la, theta, ws}, node_->v);
}

}  // namespace planch
