#pragma once

#include <cstdint>
#include <vector>

#include "planch/observable.hpp"
#include "planch/workspace.hpp"

namespace planch {

// Weight (dim la)^2 / n! on the partitions of n.
MeasureTable plancherel(int n);

// Weight theta^n * dim_theta(la) * dim_theta'(la) / n!, from the Jack tables.
MeasureTable jack_plancherel_direct(int n, const Rat& theta, Workspace& ws);

// Level-n marginal of the growth chain driven by the corner kernel,
// by exact forward recursion from the empty diagram.
MeasureTable growth_marginal(int n, const Rat& theta, Workspace& ws);

// Transition probabilities pi_i out of la, one per addable box, aligned with
// Partition::addable. Weights are checked to be positive with exact sum 1.
GrowthKernel make_growth_kernel(const Partition& la, const Rat& theta);

// Exact expectation of obs over the level-n measure of the given provenance.
Rat average(const Observable& obs, int n, const Rat& theta, Provenance source,
            Workspace& ws);

// Measure used for plain averages: plancherel at theta == 1, the growth
// marginal otherwise (the two constructions agree where they overlap; the
// growth route avoids Jack tables).
Provenance default_provenance(const Rat& theta);

// One monotone path empty -> ... -> la_n sampled from the growth chain.
// Deterministic per (seed, trajectory_index); distinct indices give
// independent substreams.
std::vector<Partition> sample_trajectory(int n, const Rat& theta,
                                         std::uint64_t seed,
                                         std::uint64_t trajectory_index,
                                         Workspace& ws);

// (del F)(la) = -F(la) + sum_nu pi(la, nu) F(nu); degree bound drops by 1.
Observable del_operator(const Observable& obs);

}  // namespace planch
