#pragma once

#include <optional>
#include <span>
#include <vector>

#include "polymer/geometry.hpp"
#include "polymer/rng.hpp"
#include "polymer/sampler2d.hpp"
#include "polymer/sampler3d.hpp"
#include "polymer/stats.hpp"

namespace polymer {

// Rejection oracles. These are deliberately independent of the growth
// samplers: positions come from a direct tree walk and validity from
// brute-force pairwise checks only.

// Uniform labeled tree + uniform angles; accept iff no overlap, in which
// case the tangency graph is the drawn tree almost surely.
// Acceptance for unit radii: (n-1)! / n^{n-2}.
std::optional<Polymer2D> rejection_sample_2d(int n, std::span<const double> radii, Rng& rng);

// Uniform spanning tree of G + uniform angles; accept iff every G-edge
// distance is at least its required length. Acceptance: mu(G) / #trees.
// spanning_trees must come from enumerate_spanning_trees(graph).
std::optional<Polymer2D> rejection_sample_gpolymer(
    const WeightedGraph& graph, const std::vector<std::vector<int>>& spanning_trees, Rng& rng);

// Uniform labeled tree + uniform unit sphere directions per edge; accept
// iff all pairwise distances are >= 1. Acceptance: n / 2^{n-1}.
std::optional<Polymer3D> rejection_sample_3d(int n, Rng& rng);

// Monte Carlo P(|sum of n iid uniform unit steps| <= 1); target 1/(n+1).
TrialReport walk_return_probability(int n, long long trials, std::uint64_t seed);

// Exact closed form for the n = 2 walk: P(cos(delta) <= -1/2) = 1/3.
double walk_return_closed_form_n2();

// Mean x-extent of b_vector_law (or the full 3D sampler) across ns, fitted
// as a log-log slope.
double diameter_scaling(std::span<const int> ns, int samples_per_n, std::uint64_t seed,
                        bool full_sampler);

struct TypeVolumeReport {
  long long gamma = 0;
  long long safe_trees = 0;
  bool exact_match = false;
  TrialReport acceptance;  // rejection acceptance of the interval graph
};

// Checks gamma_product(xs) == mu_safe_trees(interval_graph(xs)) and the
// Monte Carlo volume of the interval-graph polymer space.
TypeVolumeReport type_volume_check(std::span<const double> xs, long long trials,
                                   std::uint64_t seed);

}  // namespace polymer
