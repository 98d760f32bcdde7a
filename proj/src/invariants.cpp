#include "polymer/invariants.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <numeric>
#include <string>

namespace polymer {

namespace {

using boost::multiprecision::cpp_rational;

struct Dsu {
  std::vector<int> p;
  explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    p[a] = b;
    return true;
  }
};

}  // namespace

EdgeOrder identity_order(const WeightedGraph& g) {
  EdgeOrder o(g.edges.size());
  std::iota(o.begin(), o.end(), 0);
  return o;
}

std::vector<std::vector<int>> enumerate_spanning_trees(const WeightedGraph& g) {
  if (!g.connected()) throw DomainError("graph is disconnected");
  const int m = (int)g.edges.size();
  const int k = g.n - 1;
  std::vector<std::vector<int>> trees;
  std::vector<int> pick;
  // combinations of k edge indices, connectivity-checked
  auto rec = [&](auto&& self, int start) -> void {
    if ((int)pick.size() == k) {
      Dsu d(g.n);
      for (int e : pick)
        if (!d.unite(g.edges[e].u, g.edges[e].v)) return;
      trees.push_back(pick);
      return;
    }
    int need = k - (int)pick.size();
    for (int e = start; e <= m - need; ++e) {
      pick.push_back(e);
      self(self, e + 1);
      pick.pop_back();
    }
  };
  if (k == 0)
    trees.push_back({});
  else
    rec(rec, 0);
  return trees;
}

namespace {

// Edge indices of the tree path between u and v.
std::vector<int> tree_path_edges(const WeightedGraph& g, const std::vector<int>& tree, int u,
                                 int v) {
  std::vector<std::vector<std::pair<int, int>>> adj(g.n);  // (neighbor, edge idx)
  for (int e : tree) {
    adj[g.edges[e].u].push_back({g.edges[e].v, e});
    adj[g.edges[e].v].push_back({g.edges[e].u, e});
  }
  std::vector<int> via_edge(g.n, -1), from(g.n, -1);
  std::vector<int> stack{u};
  from[u] = u;
  while (!stack.empty()) {
    int a = stack.back();
    stack.pop_back();
    if (a == v) break;
    for (auto [b, e] : adj[a])
      if (from[b] < 0) {
        from[b] = a;
        via_edge[b] = e;
        stack.push_back(b);
      }
  }
  std::vector<int> path;
  for (int a = v; a != u; a = from[a]) path.push_back(via_edge[a]);
  return path;
}

bool tree_is_safe(const WeightedGraph& g, const std::vector<int>& tree,
                  const std::vector<int>& rank) {
  std::vector<char> in_tree(g.edges.size(), 0);
  for (int e : tree) in_tree[e] = 1;
  for (int e = 0; e < (int)g.edges.size(); ++e) {
    if (in_tree[e]) continue;
    auto cycle = tree_path_edges(g, tree, g.edges[e].u, g.edges[e].v);
    int min_rank = rank[e];
    for (int ce : cycle) min_rank = std::min(min_rank, rank[ce]);
    if (min_rank == rank[e]) return false;  // e is bad
  }
  return true;
}

}  // namespace

MuValue mu_safe_trees(const WeightedGraph& g, const EdgeOrder& order) {
  std::vector<int> rank(g.edges.size());
  for (int r = 0; r < (int)order.size(); ++r) rank[order[r]] = r;
  long long count = 0;
  for (const auto& tree : enumerate_spanning_trees(g))
    if (tree_is_safe(g, tree, rank)) ++count;
  return {count, MuMethod::safe_trees, count};
}

MuValue mu_safe_trees(const WeightedGraph& g) { return mu_safe_trees(g, identity_order(g)); }

MuValue mu_subgraph_sum(const WeightedGraph& g) {
  const int m = (int)g.edges.size();
  if (m > 24) throw DomainError("too many edges for subgraph enumeration; use safe-trees or tutte");
  if (!g.connected()) throw DomainError("graph is disconnected");
  long long sum = 0;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    Dsu d(g.n);
    int comps = g.n;
    for (int e = 0; e < m; ++e)
      if (mask & (1u << e))
        if (d.unite(g.edges[e].u, g.edges[e].v)) --comps;
    if (comps != 1) continue;  // only connected spanning subgraphs count
    sum += (std::popcount(mask) % 2 == 0) ? 1 : -1;
  }
  return {std::llabs(sum), MuMethod::subgraph_sum, sum};
}

namespace {

// Multigraph for deletion-contraction, vertices 0..n-1, parallel edges kept.
struct MultiGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // u <= v; u == v is a loop

  std::string key() const {
    // relabel by first appearance in the sorted edge list
    auto sorted = edges;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> label(n, -1);
    int next = 0;
    for (auto& [u, v] : sorted) {
      if (label[u] < 0) label[u] = next++;
      if (label[v] < 0) label[v] = next++;
      u = label[u];
      v = label[v];
      if (u > v) std::swap(u, v);
    }
    std::sort(sorted.begin(), sorted.end());
    std::string k;
    for (auto [u, v] : sorted) {
      k += std::to_string(u);
      k += ',';
      k += std::to_string(v);
      k += ';';
    }
    return k;
  }
};

bool is_bridge(const MultiGraph& g, int skip) {
  auto [u, v] = g.edges[skip];
  Dsu d(g.n);
  for (int e = 0; e < (int)g.edges.size(); ++e)
    if (e != skip) d.unite(g.edges[e].first, g.edges[e].second);
  return d.find(u) != d.find(v);
}

MultiGraph contract(const MultiGraph& g, int e) {
  auto [a, b] = g.edges[e];  // merge b into a
  MultiGraph out;
  out.n = g.n;
  for (int i = 0; i < (int)g.edges.size(); ++i) {
    if (i == e) continue;
    auto [u, v] = g.edges[i];
    if (u == b) u = a;
    if (v == b) v = a;
    if (u > v) std::swap(u, v);
    out.edges.push_back({u, v});
  }
  return out;
}

// T_G(1,0): loops zero a branch (y = 0), bridges carry factor x = 1.
long long tutte_10(const MultiGraph& g, std::map<std::string, long long>& memo) {
  for (auto [u, v] : g.edges)
    if (u == v) return 0;
  if (g.edges.empty()) return 1;
  auto k = g.key();
  if (auto it = memo.find(k); it != memo.end()) return it->second;
  long long result;
  if (is_bridge(g, 0)) {
    result = tutte_10(contract(g, 0), memo);
  } else {
    MultiGraph del = g;
    del.edges.erase(del.edges.begin());
    result = tutte_10(del, memo) + tutte_10(contract(g, 0), memo);
  }
  memo[k] = result;
  return result;
}

}  // namespace

MuValue tutte_mu(const WeightedGraph& g) {
  if (!g.connected()) throw DomainError("graph is disconnected");
  MultiGraph mg;
  mg.n = g.n;
  for (const auto& e : g.edges) mg.edges.push_back({e.u, e.v});
  std::map<std::string, long long> memo;
  long long v = tutte_10(mg, memo);
  return {v, MuMethod::tutte, v};
}

namespace {

// Dense truncated power series in k variables with exact rational
// coefficients; degree in variable i capped at caps[i].
struct Series {
  std::vector<int> caps;
  std::vector<int> stride;
  std::vector<cpp_rational> c;

  explicit Series(std::vector<int> caps_) : caps(std::move(caps_)) {
    stride.resize(caps.size());
    int sz = 1;
    for (size_t i = 0; i < caps.size(); ++i) {
      stride[i] = sz;
      sz *= caps[i] + 1;
    }
    c.assign(sz, 0);
  }

  int index(std::span<const int> deg) const {
    int idx = 0;
    for (size_t i = 0; i < caps.size(); ++i) idx += deg[i] * stride[i];
    return idx;
  }

  std::vector<int> degrees(int idx) const {
    std::vector<int> d(caps.size());
    for (size_t i = 0; i < caps.size(); ++i) {
      d[i] = idx / stride[i] % (caps[i] + 1);
    }
    return d;
  }

  Series operator*(const Series& o) const {
    Series out(caps);
    for (int ia = 0; ia < (int)c.size(); ++ia) {
      if (c[ia] == 0) continue;
      auto da = degrees(ia);
      for (int ib = 0; ib < (int)o.c.size(); ++ib) {
        if (o.c[ib] == 0) continue;
        auto db = o.degrees(ib);
        bool fits = true;
        int idx = 0;
        for (size_t i = 0; i < caps.size(); ++i) {
          int d = da[i] + db[i];
          if (d > caps[i]) {
            fits = false;
            break;
          }
          idx += d * stride[i];
        }
        if (fits) out.c[idx] += c[ia] * o.c[ib];
      }
    }
    return out;
  }
};

}  // namespace

BigInt mu_kpartite(std::span<const int> sizes) {
  const int k = (int)sizes.size();
  if (k < 1) throw DomainError("need at least one part");
  int total = 0;
  for (int s : sizes) {
    if (s < 1) throw DomainError("part sizes must be positive");
    total += s;
  }
  if (total > 14) throw DomainError("k-partite series capacity exceeded");
  std::vector<int> caps(sizes.begin(), sizes.end());
  // B = sum_i (e^{x_i} - 1), so 1 - k + sum e^{x_i} = 1 + B
  Series b(caps);
  for (int i = 0; i < k; ++i) {
    BigInt fact = 1;
    std::vector<int> deg(k, 0);
    for (int d = 1; d <= caps[i]; ++d) {
      fact *= d;
      deg[i] = d;
      b.c[b.index(deg)] += cpp_rational(1, fact);
    }
  }
  // log(1 + B) = sum_{j>=1} (-1)^{j+1} B^j / j, truncated at total degree
  Series log_series(caps);
  Series power = b;
  for (int j = 1; j <= total; ++j) {
    if (j > 1) power = power * b;
    cpp_rational factor(j % 2 == 1 ? 1 : -1, j);
    for (size_t i = 0; i < log_series.c.size(); ++i) log_series.c[i] += factor * power.c[i];
  }
  // H = log(1 + B) - sum_i x_i; the subtraction only touches degree-1 terms,
  // which do not affect the top coefficient we extract (total >= 2 there).
  cpp_rational coeff = log_series.c[log_series.index(caps)];
  if (total == 1) coeff -= 1;  // single vertex: H's linear term
  BigInt scale = 1;
  for (int s : sizes)
    for (int d = 2; d <= s; ++d) scale *= d;
  cpp_rational mu = coeff * scale;
  BigInt num = boost::multiprecision::numerator(mu);
  BigInt den = boost::multiprecision::denominator(mu);
  if (den != 1) throw DomainError("k-partite coefficient is not an integer");
  return num < 0 ? BigInt(-num) : num;
}

BigInt mu_bipartite(int m, int n) {
  if (m < 1 || n < 1) throw DomainError("bipartite part sizes must be positive");
  const int parts[2] = {m, n};
  return mu_kpartite(parts);
}

long long gamma_product(std::span<const double> xs) {
  if (xs.empty()) throw DomainError("empty projection vector");
  if (xs[0] != 0.0) throw DomainError("projection vector must start at 0");
  for (size_t j = 1; j < xs.size(); ++j)
    if (xs[j] < xs[j - 1]) throw DomainError("projection vector must be sorted");
  long long prod = 1;
  for (size_t j = 1; j < xs.size(); ++j) {
    long long gamma = 0;
    for (size_t i = 0; i < j; ++i)
      if (xs[j] - xs[i] <= 1.0) ++gamma;
    if (gamma == 0) throw DomainError("gap > 1: interval graph disconnected");
    prod *= gamma;
  }
  return prod;
}

WeightedGraph interval_graph(std::span<const double> xs, std::span<const double> beta) {
  const int n = (int)xs.size();
  WeightedGraph g;
  g.n = n;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (xs[i] == xs[j]) throw DomainError("duplicate projection values");
      double dx = xs[j] - xs[i];
      if (std::abs(dx) > 1.0) continue;
      double bij = 1.0;
      if (!beta.empty()) bij = beta[i * n - i * (i + 1) / 2 + (j - i - 1)];
      g.add_edge(i, j, std::sqrt((1.0 - dx * dx) / bij), bij);
    }
  return g;
}

}  // namespace polymer
