#include "polymer/geometry.hpp"

#include <algorithm>
#include <numeric>

namespace polymer {

std::vector<int> RootedTree::topo_order() const {
  std::vector<int> order;
  order.reserve(n);
  std::vector<int> depth(n, -1);
  depth[root] = 0;
  // resolve each vertex by walking to the first known ancestor
  std::vector<int> chain;
  for (int v = 0; v < n; ++v) {
    if (depth[v] >= 0) continue;
    chain.clear();
    int u = v;
    while (u != -1 && depth[u] < 0) {
      chain.push_back(u);
      u = parent[u];
      if ((int)chain.size() > n) throw StructuralError("parent pointers contain a cycle");
    }
    if (u == -1) throw StructuralError("vertex not connected to root");
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) depth[*it] = depth[parent[*it]] + 1;
  }
  order.resize(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return depth[a] < depth[b]; });
  return order;
}

int WeightedGraph::add_edge(int u, int v, double length, double beta) {
  if (u == v) throw StructuralError("self-loop");
  if (u > v) std::swap(u, v);
  edges.push_back({u, v, length, beta});
  return (int)edges.size() - 1;
}

int WeightedGraph::find_edge(int u, int v) const {
  if (u > v) std::swap(u, v);
  for (int e = 0; e < (int)edges.size(); ++e)
    if (edges[e].u == u && edges[e].v == v) return e;
  return -1;
}

std::vector<std::vector<int>> WeightedGraph::adjacency() const {
  std::vector<std::vector<int>> adj(n);
  for (const auto& e : edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  return adj;
}

bool WeightedGraph::connected() const {
  if (n == 0) return true;
  auto adj = adjacency();
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int w : adj[u])
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
  }
  return count == n;
}

WeightedGraph WeightedGraph::complete_disks(std::span<const double> radii) {
  WeightedGraph g;
  g.n = (int)radii.size();
  for (int i = 0; i < g.n; ++i)
    for (int j = i + 1; j < g.n; ++j) g.add_edge(i, j, radii[i] + radii[j]);
  return g;
}

WeightedGraph WeightedGraph::complete(int n, double length) {
  WeightedGraph g;
  g.n = n;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j, length);
  return g;
}

WeightedGraph WeightedGraph::cycle(int m, double length) {
  WeightedGraph g;
  g.n = m;
  for (int i = 0; i < m; ++i) g.add_edge(i, (i + 1) % m, length);
  return g;
}

WeightedGraph WeightedGraph::complete_bipartite(int m, int n, double length) {
  WeightedGraph g;
  g.n = m + n;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) g.add_edge(i, m + j, length);
  return g;
}

std::vector<Vec2> forward_positions(const RootedTree& tree, const AngleAssignment& angles,
                                    const LengthFunction& lengths, double t) {
  if ((int)angles.theta.size() < tree.n || (int)lengths.base.size() < tree.n)
    throw StructuralError("missing angle or length for a tree edge");
  std::vector<Vec2> pos(tree.n);
  for (int v : tree.topo_order()) {
    if (v == tree.root) {
      pos[v] = {0.0, 0.0};
      continue;
    }
    double L = lengths.length(v, t);
    pos[v] = pos[tree.parent[v]] + Vec2{std::cos(angles.theta[v]), std::sin(angles.theta[v])} * L;
  }
  return pos;
}

std::vector<double> constraint_gaps(std::span<const Vec2> positions, const WeightedGraph& graph,
                                    std::span<const double> scale) {
  std::vector<double> gaps(graph.edges.size());
  for (size_t e = 0; e < graph.edges.size(); ++e) {
    const auto& ed = graph.edges[e];
    double req = ed.length * (scale.empty() ? 1.0 : scale[e]);
    gaps[e] = (positions[ed.v] - positions[ed.u]).norm() - req;
  }
  return gaps;
}

OrientedTree reroot_and_orient(int n, std::span<const std::pair<int, int>> tight_edges, int root,
                               std::span<const Vec2> positions) {
  if ((int)tight_edges.size() != n - 1)
    throw StructuralError("tight edges do not form a spanning tree (wrong count)");
  std::vector<std::vector<int>> adj(n);
  for (const auto& [a, b] : tight_edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  OrientedTree out;
  out.tree = RootedTree(n, root);
  out.angles.theta.assign(n, 0.0);
  std::vector<char> seen(n, 0);
  std::vector<int> stack{root};
  seen[root] = 1;
  int count = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int w : adj[u]) {
      if (seen[w]) continue;
      seen[w] = 1;
      ++count;
      out.tree.parent[w] = u;
      Vec2 d = positions[w] - positions[u];
      out.angles.theta[w] = reduce_angle(std::atan2(d.y, d.x));
      stack.push_back(w);
    }
  }
  if (count != n) throw StructuralError("tight edges contain a cycle or are disconnected");
  return out;
}

}  // namespace polymer
