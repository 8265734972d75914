#include "planch/workspace.hpp"

namespace planch {

std::string provenance_str(Provenance p) {
  switch (p) {
    case Provenance::plancherel:
      return "plancherel";
    case Provenance::jack_direct:
      return "jack";
    case Provenance::growth:
      return "growth";
  }
  return "?";
}

JackTable& Workspace::jack(const Rat& theta, int min_degree) {
  auto it = jacks_.find(rat_str(theta));
  if (it == jacks_.end()) {
    it = jacks_.emplace(rat_str(theta), JackTable(theta, min_degree)).first;
  } else {
    it->second.extend(min_degree);
  }
  return it->second;
}

// Workspace::kernel and Workspace::measure live with the growth machinery
// in measures.cpp.

}  // namespace planch
