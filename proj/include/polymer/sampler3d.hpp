#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "polymer/geometry.hpp"
#include "polymer/rng.hpp"

namespace polymer {

struct LabeledTree {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // labels 0..n-1
};

// Prufer bijection: first code entry is the neighbor of the least-labeled
// leaf, which is then deleted, and so on. seq has length n-2.
std::vector<int> prufer_encode(const LabeledTree& tree);
LabeledTree prufer_decode(std::span<const int> seq, int n);

// Uniform over the n^{n-2} labeled trees.
LabeledTree sample_labeled_tree(int n, Rng& rng);

// x-axis projections: iid uniform [0,1] edge weights, x_i = root-path sum.
struct ProjectionVector {
  std::vector<double> x;  // per vertex; x[0] = 0
  std::vector<double> u;  // per tree edge, aligned with tree.edges
  std::vector<double> sorted() const;
};
ProjectionVector project_x(const LabeledTree& tree, Rng& rng);

struct Polymer3D {
  int n = 0;
  std::vector<Vec3> positions;
  int root = 0;  // uniformly re-rooted; its center is at the origin
  std::vector<int> tree_parent;
  std::vector<std::pair<int, int>> tangency_edges;
  std::vector<double> beta;  // optional, flattened upper-triangular
  std::uint64_t seed = 0;
};

// Anisotropic contact norm: dx^2 + beta_ij (dy^2 + dz^2); >= 1 everywhere,
// = 1 on the tangency tree.
double spheroid_norm2(const Vec3& a, const Vec3& b, double beta);

// Uniform 3D branched polymer via the projection pipeline:
// uniform labeled tree -> x-projections -> planar interval-graph polymer
// in the yz-plane -> assembly, then a uniform root translated to the origin.
Polymer3D sample_polymer_3d(int n, Rng& rng, std::span<const double> beta = {},
                            std::uint64_t seed = 0);

// Flattened pair weights beta_ij = 1 / (axes_i * axes_j) for per-label
// spheroid yz-axes.
std::vector<double> beta_from_axes(std::span<const double> axes);

// Sorted root-path lengths of a uniform labeled tree with U[0,1] edge
// weights: the reference law for 3D x-projections.
std::vector<double> b_vector_law(int n, Rng& rng);

}  // namespace polymer
