#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace polymer {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

// |gap| below this counts as a tight contact.
inline constexpr double kGapTol = 1e-9;
// Resolution of event parameters in t.
inline constexpr double kEventTol = 1e-12;

struct StructuralError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Vec2 {
  double x = 0.0, y = 0.0;

  Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  double dot(Vec2 o) const { return x * o.x + y * o.y; }
  double norm2() const { return x * x + y * y; }
  double norm() const { return std::sqrt(norm2()); }
};

struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;
};

inline double reduce_angle(double a) {
  a = std::fmod(a, kTwoPi);
  if (a < 0) a += kTwoPi;
  return a;
}

// Spanning tree rooted at `root`; edges are directed away from the root,
// so each tree edge is keyed by its child vertex. Vertices are 0-based
// internally (vertex 0 is the paper-level vertex 1).
struct RootedTree {
  int n = 0;
  int root = 0;
  std::vector<int> parent;  // parent[v]; parent[root] == -1

  RootedTree() = default;
  RootedTree(int n_, int root_) : n(n_), root(root_), parent(n_, -1) {}

  // Depth-ordered vertex list (parents before children). Throws on cycles
  // or vertices not reachable from the root.
  std::vector<int> topo_order() const;
};

// One absolute angle per tree edge (keyed by child), ccw from +x axis.
struct AngleAssignment {
  std::vector<double> theta;  // theta[child]; unused at root
};

// Tree-edge lengths L_e(t) = base_e + coeff_e * t, keyed by child.
struct LengthFunction {
  std::vector<double> base;
  std::vector<double> coeff;

  double length(int child, double t) const { return base[child] + coeff[child] * t; }
};

struct GraphEdge {
  int u = 0, v = 0;       // u < v
  double length = 1.0;    // required contact length r_ij
  double beta = 1.0;      // spheroid weight (3D); 1 = sphere
};

// Simple undirected graph with required contact lengths.
struct WeightedGraph {
  int n = 0;
  std::vector<GraphEdge> edges;

  int add_edge(int u, int v, double length = 1.0, double beta = 1.0);
  int find_edge(int u, int v) const;  // -1 if absent
  std::vector<std::vector<int>> adjacency() const;  // neighbor vertex lists
  bool connected() const;

  // Disk polymer target: K_n with r_ij = r_i + r_j.
  static WeightedGraph complete_disks(std::span<const double> radii);
  static WeightedGraph complete(int n, double length = 1.0);
  static WeightedGraph cycle(int m, double length = 1.0);
  static WeightedGraph complete_bipartite(int m, int n, double length = 1.0);
};

// Positions from the tree by kinematic composition; root at the origin.
std::vector<Vec2> forward_positions(const RootedTree& tree, const AngleAssignment& angles,
                                    const LengthFunction& lengths, double t);

// Per-edge gap(i,j) = rho(i,j) - scale_ij * r_ij, aligned with graph.edges.
// scale may be empty (all 1).
std::vector<double> constraint_gaps(std::span<const Vec2> positions, const WeightedGraph& graph,
                                    std::span<const double> scale = {});

// Rebuild a rooted tree + absolute angles from a set of tight edges and
// current positions. tight_edges must form a spanning tree of the vertices
// reachable from root; vertices not spanned cause a structural error when
// n_expected is positive and unmatched.
struct OrientedTree {
  RootedTree tree;
  AngleAssignment angles;
};
OrientedTree reroot_and_orient(int n, std::span<const std::pair<int, int>> tight_edges, int root,
                               std::span<const Vec2> positions);

}  // namespace polymer
