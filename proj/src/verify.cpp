#include "polymer/verify.hpp"

#include <algorithm>
#include <cmath>

#include "polymer/invariants.hpp"

namespace polymer {

namespace {

// Positions for a labeled tree with given edge lengths and angles, vertex 0
// at the origin. Plain walk, shared with nothing in the samplers.
std::vector<Vec2> tree_walk_positions(int n, const std::vector<std::pair<int, int>>& edges,
                                      const std::vector<double>& lengths,
                                      const std::vector<double>& angles) {
  std::vector<std::vector<std::pair<int, int>>> adj(n);  // (neighbor, edge idx)
  for (int e = 0; e < (int)edges.size(); ++e) {
    adj[edges[e].first].push_back({edges[e].second, e});
    adj[edges[e].second].push_back({edges[e].first, e});
  }
  std::vector<Vec2> pos(n);
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (auto [w, e] : adj[v]) {
      if (seen[w]) continue;
      seen[w] = 1;
      double a = angles[e];
      // angle was drawn for the edge as listed; flip when walking v->w
      // against the listed direction
      if (edges[e].first != v) a += kPi;
      pos[w] = pos[v] + Vec2{std::cos(a), std::sin(a)} * lengths[e];
      stack.push_back(w);
    }
  }
  return pos;
}

Polymer2D make_polymer(int n, std::span<const double> radii, std::vector<Vec2> positions,
                       const std::vector<std::pair<int, int>>& edges) {
  Polymer2D p;
  p.n = n;
  p.radii.assign(radii.begin(), radii.end());
  p.positions = std::move(positions);
  p.tangency_edges = edges;
  p.tree_parent.assign(n, -1);
  std::vector<std::vector<int>> adj(n);
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<int> stack{0};
  std::vector<char> seen(n, 0);
  seen[0] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        p.tree_parent[w] = v;
        stack.push_back(w);
      }
  }
  return p;
}

}  // namespace

std::optional<Polymer2D> rejection_sample_2d(int n, std::span<const double> radii, Rng& rng) {
  LabeledTree tree = n >= 2 ? sample_labeled_tree(n, rng) : LabeledTree{1, {}};
  std::vector<double> lengths(tree.edges.size()), angles(tree.edges.size());
  for (size_t e = 0; e < tree.edges.size(); ++e) {
    lengths[e] = radii[tree.edges[e].first] + radii[tree.edges[e].second];
    angles[e] = rng.angle();
  }
  auto pos = tree_walk_positions(n, tree.edges, lengths, angles);
  // brute-force overlap check over every pair
  std::vector<std::vector<char>> in_tree(n, std::vector<char>(n, 0));
  for (auto [a, b] : tree.edges) in_tree[a][b] = in_tree[b][a] = 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (in_tree[i][j]) continue;
      if ((pos[j] - pos[i]).norm() < radii[i] + radii[j]) return std::nullopt;
    }
  return make_polymer(n, radii, std::move(pos), tree.edges);
}

std::optional<Polymer2D> rejection_sample_gpolymer(
    const WeightedGraph& graph, const std::vector<std::vector<int>>& spanning_trees, Rng& rng) {
  const auto& tree_idx = spanning_trees[rng.uniform_int(0, (int)spanning_trees.size() - 1)];
  std::vector<std::pair<int, int>> edges;
  std::vector<double> lengths, angles;
  for (int e : tree_idx) {
    edges.push_back({graph.edges[e].u, graph.edges[e].v});
    lengths.push_back(graph.edges[e].length);
    angles.push_back(rng.angle());
  }
  auto pos = tree_walk_positions(graph.n, edges, lengths, angles);
  std::vector<char> in_tree(graph.edges.size(), 0);
  for (int e : tree_idx) in_tree[e] = 1;
  for (size_t e = 0; e < graph.edges.size(); ++e) {
    if (in_tree[e]) continue;
    const auto& ed = graph.edges[e];
    if ((pos[ed.v] - pos[ed.u]).norm() < ed.length) return std::nullopt;
  }
  return make_polymer(graph.n, {}, std::move(pos), edges);
}

std::optional<Polymer3D> rejection_sample_3d(int n, Rng& rng) {
  LabeledTree tree = n >= 2 ? sample_labeled_tree(n, rng) : LabeledTree{1, {}};
  // unit sphere directions: uniform cos(polar) and azimuth
  std::vector<Vec3> step(tree.edges.size());
  for (auto& s : step) {
    double z = rng.uniform(-1.0, 1.0);
    double phi = rng.angle();
    double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    s = {z, r * std::cos(phi), r * std::sin(phi)};
  }
  std::vector<std::vector<std::pair<int, int>>> adj(n);
  for (int e = 0; e < (int)tree.edges.size(); ++e) {
    adj[tree.edges[e].first].push_back({tree.edges[e].second, e});
    adj[tree.edges[e].second].push_back({tree.edges[e].first, e});
  }
  std::vector<Vec3> pos(n);
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (auto [w, e] : adj[v]) {
      if (seen[w]) continue;
      seen[w] = 1;
      double sign = tree.edges[e].first == v ? 1.0 : -1.0;
      pos[w] = {pos[v].x + sign * step[e].x, pos[v].y + sign * step[e].y,
                pos[v].z + sign * step[e].z};
      stack.push_back(w);
    }
  }
  std::vector<std::vector<char>> in_tree(n, std::vector<char>(n, 0));
  for (auto [a, b] : tree.edges) in_tree[a][b] = in_tree[b][a] = 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (in_tree[i][j]) continue;
      double dx = pos[i].x - pos[j].x, dy = pos[i].y - pos[j].y, dz = pos[i].z - pos[j].z;
      if (dx * dx + dy * dy + dz * dz < 1.0) return std::nullopt;
    }
  Polymer3D p;
  p.n = n;
  p.positions = std::move(pos);
  p.tangency_edges = tree.edges;
  p.tree_parent.assign(n, -1);
  std::vector<int> st{0};
  std::vector<char> sn(n, 0);
  sn[0] = 1;
  std::vector<std::vector<int>> a2(n);
  for (auto [a, b] : tree.edges) {
    a2[a].push_back(b);
    a2[b].push_back(a);
  }
  while (!st.empty()) {
    int v = st.back();
    st.pop_back();
    for (int w : a2[v])
      if (!sn[w]) {
        sn[w] = 1;
        p.tree_parent[w] = v;
        st.push_back(w);
      }
  }
  return p;
}

TrialReport walk_return_probability(int n, long long trials, std::uint64_t seed) {
  if (n < 2) throw DomainError("walk length must be at least 2");
  return run_trials(trials, seed, 1.0 / (n + 1), [n](Rng& rng) {
    double x = 0.0, y = 0.0;
    for (int i = 0; i < n; ++i) {
      double a = rng.angle();
      x += std::cos(a);
      y += std::sin(a);
    }
    return x * x + y * y <= 1.0;
  });
}

double walk_return_closed_form_n2() {
  // |e^{i a} + e^{i b}|^2 = 2 + 2 cos(a - b) <= 1  <=>  cos(delta) <= -1/2
  double delta = kTwoPi - 2.0 * std::acos(-0.5);
  return delta / kTwoPi;
}

double diameter_scaling(std::span<const int> ns, int samples_per_n, std::uint64_t seed,
                        bool full_sampler) {
  std::vector<double> xs, means;
  std::uint64_t stream = 0;
  for (int n : ns) {
    double total = 0.0;
    for (int s = 0; s < samples_per_n; ++s) {
      Rng rng = Rng::stream(seed, stream++);
      if (full_sampler) {
        auto p = sample_polymer_3d(n, rng);
        double lo = p.positions[0].x, hi = lo;
        for (const auto& v : p.positions) {
          lo = std::min(lo, v.x);
          hi = std::max(hi, v.x);
        }
        total += hi - lo;
      } else {
        auto b = b_vector_law(n, rng);
        total += b.back();
      }
    }
    xs.push_back((double)n);
    means.push_back(total / samples_per_n);
  }
  return log_log_slope(xs, means);
}

TypeVolumeReport type_volume_check(std::span<const double> xs, long long trials,
                                   std::uint64_t seed) {
  TypeVolumeReport r;
  r.gamma = gamma_product(xs);
  WeightedGraph h = interval_graph(xs);
  r.safe_trees = mu_safe_trees(h).value;
  r.exact_match = (r.gamma == r.safe_trees);
  auto trees = enumerate_spanning_trees(h);
  double target = (double)r.gamma / (double)trees.size();
  r.acceptance = run_trials(trials, seed, target, [&](Rng& rng) {
    return rejection_sample_gpolymer(h, trees, rng).has_value();
  });
  return r;
}

}  // namespace polymer
