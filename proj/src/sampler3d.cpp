#include "polymer/sampler3d.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "polymer/invariants.hpp"
#include "polymer/sampler2d.hpp"

namespace polymer {

std::vector<int> prufer_encode(const LabeledTree& tree) {
  const int n = tree.n;
  if ((int)tree.edges.size() != n - 1) throw StructuralError("not a tree");
  if (n <= 2) return {};
  std::vector<std::set<int>> adj(n);
  for (auto [a, b] : tree.edges) {
    adj[a].insert(b);
    adj[b].insert(a);
  }
  std::set<int> leaves;
  for (int v = 0; v < n; ++v)
    if (adj[v].size() == 1) leaves.insert(v);
  std::vector<int> code;
  for (int step = 0; step < n - 2; ++step) {
    int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    int parent = *adj[leaf].begin();
    code.push_back(parent);
    adj[parent].erase(leaf);
    adj[leaf].clear();
    if (adj[parent].size() == 1) leaves.insert(parent);
  }
  return code;
}

LabeledTree prufer_decode(std::span<const int> seq, int n) {
  if (n < 1) throw DomainError("n must be positive");
  if ((int)seq.size() != std::max(0, n - 2)) throw DomainError("code length must be n-2");
  for (int s : seq)
    if (s < 0 || s >= n) throw DomainError("code entry out of range");
  LabeledTree tree;
  tree.n = n;
  if (n == 1) return tree;
  std::vector<int> degree(n, 1);
  for (int s : seq) ++degree[s];
  std::set<int> leaves;
  for (int v = 0; v < n; ++v)
    if (degree[v] == 1) leaves.insert(v);
  for (int s : seq) {
    int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    tree.edges.push_back({std::min(leaf, s), std::max(leaf, s)});
    if (--degree[s] == 1) leaves.insert(s);
  }
  int a = *leaves.begin();
  int b = *std::next(leaves.begin());
  tree.edges.push_back({std::min(a, b), std::max(a, b)});
  return tree;
}

LabeledTree sample_labeled_tree(int n, Rng& rng) {
  if (n < 2) throw DomainError("need n >= 2");
  std::vector<int> code(std::max(0, n - 2));
  for (int& s : code) s = rng.uniform_int(0, n - 1);
  return prufer_decode(code, n);
}

ProjectionVector project_x(const LabeledTree& tree, Rng& rng) {
  ProjectionVector pv;
  pv.u.resize(tree.edges.size());
  for (double& u : pv.u) u = rng.uniform();
  pv.x.assign(tree.n, 0.0);
  std::vector<std::vector<std::pair<int, double>>> adj(tree.n);
  for (size_t e = 0; e < tree.edges.size(); ++e) {
    auto [a, b] = tree.edges[e];
    adj[a].push_back({b, pv.u[e]});
    adj[b].push_back({a, pv.u[e]});
  }
  std::vector<char> seen(tree.n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (auto [w, u] : adj[v]) {
      if (seen[w]) continue;
      seen[w] = 1;
      pv.x[w] = pv.x[v] + u;
      stack.push_back(w);
    }
  }
  return pv;
}

std::vector<double> ProjectionVector::sorted() const {
  std::vector<double> s = x;
  std::sort(s.begin(), s.end());
  return s;
}

double spheroid_norm2(const Vec3& a, const Vec3& b, double beta) {
  double dx = a.x - b.x, dy = a.y - b.y, dz = a.z - b.z;
  return dx * dx + beta * (dy * dy + dz * dz);
}

std::vector<double> beta_from_axes(std::span<const double> axes) {
  const int n = (int)axes.size();
  std::vector<double> beta;
  beta.reserve(n * (n - 1) / 2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) beta.push_back(1.0 / (axes[i] * axes[j]));
  return beta;
}

std::vector<double> b_vector_law(int n, Rng& rng) {
  if (n < 1) throw DomainError("n must be positive");
  if (n == 1) return {0.0};
  auto tree = sample_labeled_tree(n, rng);
  return project_x(tree, rng).sorted();
}

Polymer3D sample_polymer_3d(int n, Rng& rng, std::span<const double> beta, std::uint64_t seed) {
  if (n < 1) throw DomainError("n must be positive");
  Polymer3D p;
  p.n = n;
  p.beta.assign(beta.begin(), beta.end());
  p.seed = seed;
  if (n == 1) {
    p.positions = {{0.0, 0.0, 0.0}};
    p.tree_parent = {-1};
    return p;
  }
  // x-projections; redraw in the measure-zero case of an exactly-unit gap
  ProjectionVector pv;
  for (;;) {
    auto tree = sample_labeled_tree(n, rng);
    pv = project_x(tree, rng);
    bool degenerate = false;
    for (int i = 0; i < n && !degenerate; ++i)
      for (int j = i + 1; j < n; ++j)
        if (std::abs(std::abs(pv.x[i] - pv.x[j]) - 1.0) < 1e-12 || pv.x[i] == pv.x[j]) {
          degenerate = true;
          break;
        }
    if (!degenerate) break;
  }
  WeightedGraph h = interval_graph(pv.x, beta);
  // ascending-x order; vertex 0 has the minimum projection (root paths sum
  // nonnegative weights), and sorted-consecutive vertices are H-adjacent,
  // so every prefix is connected
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return pv.x[a] < pv.x[b]; });
  Polymer2D yz = sample_gpolymer(h, order, rng, seed);

  p.positions.resize(n);
  for (int v = 0; v < n; ++v) p.positions[v] = {pv.x[v], yz.positions[v].x, yz.positions[v].y};
  p.tangency_edges = yz.tangency_edges;

  // Uniform re-rooting. The pipeline always makes vertex 0 the x-minimum
  // (its root paths sum nonnegative weights), so the chosen sphere is
  // relabeled as vertex 0 before translating it to the origin; without the
  // transposition the output would stay confined to the leftmost-root
  // slice of the configuration space and the labels would not be
  // exchangeable.
  int chosen = rng.uniform_int(0, n - 1);
  if (chosen != 0) {
    std::swap(p.positions[0], p.positions[chosen]);
    for (auto& [a, b] : p.tangency_edges) {
      a = a == 0 ? chosen : (a == chosen ? 0 : a);
      b = b == 0 ? chosen : (b == chosen ? 0 : b);
    }
    if (!p.beta.empty()) {
      auto idx = [n](int i, int j) {
        if (i > j) std::swap(i, j);
        return i * (2 * n - i - 1) / 2 + (j - i - 1);
      };
      for (int v = 1; v < n; ++v)
        if (v != chosen) std::swap(p.beta[idx(0, v)], p.beta[idx(chosen, v)]);
    }
  }
  p.root = 0;
  Vec3 origin = p.positions[p.root];
  for (auto& v : p.positions) {
    v.x -= origin.x;
    v.y -= origin.y;
    v.z -= origin.z;
  }
  // combinatorial reroot of the tangency tree at the chosen root
  std::vector<std::vector<int>> adj(n);
  for (auto [a, b] : p.tangency_edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  p.tree_parent.assign(n, -1);
  std::vector<char> seen(n, 0);
  std::vector<int> stack{p.root};
  seen[p.root] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v]) {
      if (seen[w]) continue;
      seen[w] = 1;
      p.tree_parent[w] = v;
      stack.push_back(w);
    }
  }
  return p;
}

}  // namespace polymer
