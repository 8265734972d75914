#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "planch/jack.hpp"

namespace planch {

// Transition probabilities out of one diagram; targets are aligned with
// Partition::addable (top row first), sum to 1 and are strictly positive.
struct GrowthKernel {
  Partition source;
  std::vector<std::pair<Partition, Rat>> targets;
};

enum class Provenance { plancherel, jack_direct, growth };
std::string provenance_str(Provenance p);

// Exact probability distribution on the diagrams of size n.
struct MeasureTable {
  int n = 0;
  Rat theta = 1;
  Provenance provenance = Provenance::plancherel;
  std::map<Partition, Rat> weights;
};

// Session-scoped caches. Everything cached here is immutable once built;
// callers share one workspace across a run for reuse, not for correctness.
class Workspace {
 public:
  JackTable& jack(const Rat& theta, int min_degree);
  const GrowthKernel& kernel(const Partition& la, const Rat& theta);
  const MeasureTable& measure(int n, const Rat& theta, Provenance source);

 private:
  std::map<std::string, JackTable> jacks_;
  std::map<std::pair<std::string, Partition>, GrowthKernel> kernels_;
  std::map<std::tuple<int, std::string, int>, MeasureTable> measures_;
};

}  // namespace planch
