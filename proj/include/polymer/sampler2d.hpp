#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "polymer/geometry.hpp"
#include "polymer/rng.hpp"

namespace polymer {

// Final sampled planar configuration. tree_parent is rooted at `root`
// (parent[root] = -1); tangency_edges are the tight contacts.
struct Polymer2D {
  int n = 0;
  std::vector<double> radii;  // empty for general G-polymers
  std::vector<Vec2> positions;
  int root = 0;
  std::vector<int> tree_parent;
  std::vector<std::pair<int, int>> tangency_edges;
  std::uint64_t seed = 0;
};

// One cycle-forming contact event during growth.
struct CycleEvent {
  double t_star = 0.0;
  int pair_edge = -1;            // target-graph edge index of the new contact
  std::vector<int> cycle_edges;  // target edge indices: tree path + pair_edge
};

struct RateCandidate {
  int edge = -1;  // removable cycle edge (target edge index)
  double rate = 0.0;
};

// Live state of the incremental sampler: a tight spanning tree over the
// placed prefix, with the growing vertex's incident contact lengths
// affine in t (required = base + coeff * t, t in [0,1]).
class GrowthState {
 public:
  // Disk polymers pass radii so a contact i-k grows as r_i + t * r_k;
  // plain G-polymers grow incident edges from zero, t * r_ik.
  GrowthState(const WeightedGraph& target, int first_vertex, std::span<const double> radii = {});

  // Start growing vertex k from a uniformly chosen placed neighbor and
  // uniform angle, then run events until t = 1.
  void add_vertex(int k, Rng& rng);

  // Smallest t* in (t, 1] at which a non-tree constrained gap vanishes.
  std::optional<CycleEvent> detect_next_event() const;

  // Signed gap-opening rate for each cycle edge under the tree that
  // results from removing it.
  std::vector<RateCandidate> candidate_rates(const CycleEvent& event) const;

  // Pick a positive-rate candidate proportionally and adopt its tree.
  void break_cycle(const CycleEvent& event, Rng& rng);

  const std::vector<int>& placed() const { return placed_; }
  const RootedTree& tree() const { return tree_; }
  const AngleAssignment& angles() const { return angles_; }
  double t() const { return t_; }
  int growing_vertex() const { return growing_; }

  std::vector<Vec2> positions() const;
  // Tight tree edges as vertex pairs.
  std::vector<std::pair<int, int>> tree_edges() const;

  // test hooks
  void begin_growth(int k, int neighbor, double theta);
  void advance(double t);
  void finish_growth();
  double required_length(int edge, double t) const;

 private:
  struct Affine {
    Vec2 a, b;  // position(t) = a + b * t
  };
  std::vector<Affine> affine_positions() const;
  void rebuild_lengths();
  void check_consistency() const;

  const WeightedGraph* target_;
  std::vector<int> placed_;
  std::vector<char> is_placed_;
  RootedTree tree_;
  AngleAssignment angles_;
  LengthFunction lengths_;          // keyed by child vertex
  std::vector<double> req_base_;    // per target edge
  std::vector<double> req_coeff_;   // nonzero only on edges at growing_
  std::vector<double> radii_;       // empty in G-polymer mode
  int growing_ = -1;
  double t_ = 1.0;
};

// Uniform branched polymer of n disks with the given radii; disk 0 at the
// origin, grown one disk at a time.
Polymer2D sample_polymer_2d(int n, std::span<const double> radii, Rng& rng, std::uint64_t seed = 0);

// Uniform G-polymer for a connected graph with required edge lengths.
// order[0] is placed at the origin; every prefix must induce a connected
// subgraph.
Polymer2D sample_gpolymer(const WeightedGraph& graph, std::span<const int> order, Rng& rng,
                          std::uint64_t seed = 0);

// Limit law for geometrically shrinking radii: uniform parent in the
// placed prefix and uniform angle, overlaps permitted.
Polymer2D sample_crossing_inductive_tree(int n, Rng& rng, std::uint64_t seed = 0);

}  // namespace polymer
