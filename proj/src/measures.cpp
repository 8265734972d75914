#include "planch/measures.hpp"

#include <random>
#include <stdexcept>

namespace planch {

namespace {

void validate_table(const MeasureTable& mt, const char* what) {
  Rat total = 0;
  for (const auto& [la, w] : mt.weights) {
    if (!(w > 0)) {
      throw std::logic_error(std::string(what) +
                             ": nonpositive weight at " + la.str());
    }
    total += w;
  }
  if (total != 1) {
    throw std::logic_error(std::string(what) + ": weights sum to " +
                           rat_str(total) + " at n=" + std::to_string(mt.n));
  }
  if (mt.weights.size() != partitions_of(mt.n).size()) {
    throw std::logic_error(std::string(what) + ": support is not all of Y_n");
  }
}

}  // namespace

MeasureTable plancherel(int n) {
  MeasureTable mt;
  mt.n = n;
  mt.theta = 1;
  mt.provenance = Provenance::plancherel;
  Rat nfact(factorial(n));
  for (const Partition& la : partitions_of(n)) {
    Int d = dim_standard(la);
    mt.weights[la] = Rat(d * d) / nfact;
  }
  validate_table(mt, "plancherel");
  return mt;
}

MeasureTable jack_plancherel_direct(int n, const Rat& theta, Workspace& ws) {
  MeasureTable mt;
  mt.n = n;
  mt.theta = theta;
  mt.provenance = Provenance::jack_direct;
  JackTable& jt = ws.jack(theta, n);
  Rat scale = pow_rat(theta, n) / Rat(factorial(n));
  for (const Partition& la : partitions_of(n)) {
    mt.weights[la] = scale * jt.dim_theta(la) * jt.dim_theta_prime(la);
  }
  validate_table(mt, "jack_plancherel_direct");
  return mt;
}

MeasureTable growth_marginal(int n, const Rat& theta, Workspace& ws) {
  std::map<Partition, Rat> level;
  level[Partition()] = 1;
  for (int k = 0; k < n; ++k) {
    std::map<Partition, Rat> next;
    for (const auto& [la, w] : level) {
      const GrowthKernel& kernel = ws.kernel(la, theta);
      for (const auto& [target, p] : kernel.targets) {
        next[target] += w * p;
      }
    }
    level = std::move(next);
  }
  MeasureTable mt;
  mt.n = n;
  mt.theta = theta;
  mt.provenance = Provenance::growth;
  mt.weights = std::move(level);
  validate_table(mt, "growth_marginal");
  return mt;
}

GrowthKernel make_growth_kernel(const Partition& la, const Rat& theta) {
  KerovCoords kc = kerov_coords(la, theta);
  std::vector<Partition> boxes = la.addable();
  if (boxes.size() != kc.X.size()) {
    throw std::logic_error("make_growth_kernel: corner/box count mismatch");
  }
  GrowthKernel kernel;
  kernel.source = la;
  Rat total = 0;
  for (size_t i = 0; i < kc.X.size(); ++i) {
    Rat num = 1;
    for (const Rat& y : kc.Y) num *= kc.X[i] - y;
    Rat den = 1;
    for (size_t l = 0; l < kc.X.size(); ++l) {
      if (l != i) den *= kc.X[i] - kc.X[l];
    }
    Rat p = num / den;
    if (!(p > 0)) {
      throw std::logic_error("make_growth_kernel: nonpositive weight at " +
                             la.str());
    }
    total += p;
    kernel.targets.emplace_back(boxes[i], p);
  }
  if (total != 1) {
    throw std::logic_error("make_growth_kernel: row sum " + rat_str(total) +
                           " at " + la.str());
  }
  return kernel;
}

Rat average(const Observable& obs, int n, const Rat& theta, Provenance source,
            Workspace& ws) {
  const MeasureTable& mt = ws.measure(n, theta, source);
  Rat sum = 0;
  for (const auto& [la, w] : mt.weights) {
    sum += w * obs.eval(la, theta, ws);
  }
  return sum;
}

Provenance default_provenance(const Rat& theta) {
  return theta == 1 ? Provenance::plancherel : Provenance::growth;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace

std::vector<Partition> sample_trajectory(int n, const Rat& theta,
                                         std::uint64_t seed,
                                         std::uint64_t trajectory_index,
                                         Workspace& ws) {
  if (n < 0) throw usage_error("sample_trajectory: n must be >= 0");
  std::mt19937_64 rng(splitmix64(seed ^ splitmix64(trajectory_index)));
  // 2^64 as exact denominator of the uniform draws.
  Rat two64 = Rat(Int(1) << 64);
  std::vector<Partition> path;
  path.reserve(n + 1);
  Partition la;
  path.push_back(la);
  for (int step = 0; step < n; ++step) {
    const GrowthKernel& kernel = ws.kernel(la, theta);
    Rat u = Rat(Int(rng())) / two64;
    Rat acc = 0;
    const Partition* chosen = &kernel.targets.back().first;
    for (const auto& [target, p] : kernel.targets) {
      acc += p;
      if (u < acc) {
        chosen = &target;
        break;
      }
    }
    la = *chosen;
    path.push_back(la);
  }
  return path;
}

Observable del_operator(const Observable& obs) { return Observable::del(obs); }

// Workspace cache accessors for kernels and measures live here with the
// machinery that builds them.

const GrowthKernel& Workspace::kernel(const Partition& la, const Rat& theta) {
  auto key = std::make_pair(rat_str(theta), la);
  auto it = kernels_.find(key);
  if (it == kernels_.end()) {
    it = kernels_.emplace(key, make_growth_kernel(la, theta)).first;
  }
  return it->second;
}

const MeasureTable& Workspace::measure(int n, const Rat& theta,
                                       Provenance source) {
  // The plancherel table does not depend on theta; collapse its key.
  std::string tkey =
      source == Provenance::plancherel ? std::string("1") : rat_str(theta);
  auto key = std::make_tuple(n, tkey, static_cast<int>(source));
  auto it = measures_.find(key);
  if (it == measures_.end()) {
    MeasureTable mt;
    switch (source) {
      case Provenance::plancherel:
        mt = plancherel(n);
        break;
      case Provenance::jack_direct:
        mt = jack_plancherel_direct(n, theta, *this);
        break;
      case Provenance::growth:
        mt = growth_marginal(n, theta, *this);
        break;
    }
    it = measures_.emplace(key, std::move(mt)).first;
  }
  return it->second;
}

}  // namespace planch
