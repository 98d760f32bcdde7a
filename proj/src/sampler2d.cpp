#include "polymer/sampler2d.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace polymer {

namespace {

constexpr int kMaxEventsPerGrowth = 100000;

}  // namespace

GrowthState::GrowthState(const WeightedGraph& target, int first_vertex,
                         std::span<const double> radii)
    : target_(&target),
      is_placed_(target.n, 0),
      tree_(target.n, first_vertex),
      req_base_(target.edges.size()),
      req_coeff_(target.edges.size(), 0.0) {
  angles_.theta.assign(target.n, 0.0);
  lengths_.base.assign(target.n, 0.0);
  lengths_.coeff.assign(target.n, 0.0);
  radii_.assign(radii.begin(), radii.end());
  for (size_t e = 0; e < target.edges.size(); ++e) req_base_[e] = target.edges[e].length;
  placed_.push_back(first_vertex);
  is_placed_[first_vertex] = 1;
}

double GrowthState::required_length(int edge, double t) const {
  return req_base_[edge] + req_coeff_[edge] * t;
}

void GrowthState::rebuild_lengths() {
  for (int v : placed_) {
    if (v == tree_.root) continue;
    int e = target_->find_edge(tree_.parent[v], v);
    if (e < 0) throw StructuralError("tree edge missing from target graph");
    lengths_.base[v] = req_base_[e];
    lengths_.coeff[v] = req_coeff_[e];
  }
}

std::vector<GrowthState::Affine> GrowthState::affine_positions() const {
  std::vector<Affine> pos(target_->n);
  // children lists over the placed set, then a BFS from the root
  std::vector<std::vector<int>> children(target_->n);
  for (int v : placed_)
    if (v != tree_.root) children[tree_.parent[v]].push_back(v);
  std::vector<int> stack{tree_.root};
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v : children[u]) {
      Vec2 dir{std::cos(angles_.theta[v]), std::sin(angles_.theta[v])};
      pos[v].a = pos[u].a + dir * lengths_.base[v];
      pos[v].b = pos[u].b + dir * lengths_.coeff[v];
      stack.push_back(v);
    }
  }
  return pos;
}

std::vector<Vec2> GrowthState::positions() const {
  auto aff = affine_positions();
  std::vector<Vec2> out(target_->n);
  for (int v : placed_) out[v] = aff[v].a + aff[v].b * t_;
  return out;
}

std::vector<std::pair<int, int>> GrowthState::tree_edges() const {
  std::vector<std::pair<int, int>> out;
  for (int v : placed_)
    if (v != tree_.root) out.push_back({tree_.parent[v], v});
  return out;
}

void GrowthState::begin_growth(int k, int neighbor, double theta) {
  if (is_placed_[k]) throw StructuralError("vertex already placed");
  if (!is_placed_[neighbor]) throw StructuralError("growth neighbor not placed");
  placed_.push_back(k);
  is_placed_[k] = 1;
  growing_ = k;
  t_ = 0.0;
  double rk = radii_.empty() ? 0.0 : radii_[k];
  for (size_t e = 0; e < target_->edges.size(); ++e) {
    const auto& ed = target_->edges[e];
    if (ed.u != k && ed.v != k) continue;
    int other = ed.u == k ? ed.v : ed.u;
    if (!is_placed_[other]) continue;
    if (radii_.empty()) {
      req_base_[e] = 0.0;
      req_coeff_[e] = ed.length;
    } else {
      req_base_[e] = ed.length - rk;  // the other disk's radius
      req_coeff_[e] = rk;
    }
  }
  tree_.parent[k] = neighbor;
  angles_.theta[k] = reduce_angle(theta);
  rebuild_lengths();
}

void GrowthState::advance(double t) {
  if (t < t_ || t > 1.0) throw StructuralError("advance outside [t, 1]");
  t_ = t;
}

void GrowthState::finish_growth() {
  t_ = 1.0;
  for (size_t e = 0; e < target_->edges.size(); ++e) {
    req_base_[e] += req_coeff_[e];
    req_coeff_[e] = 0.0;
  }
  rebuild_lengths();
  growing_ = -1;
}

void GrowthState::check_consistency() const {
  auto pos = positions();
  std::vector<char> in_tree(target_->edges.size(), 0);
  for (int v : placed_)
    if (v != tree_.root) in_tree[target_->find_edge(tree_.parent[v], v)] = 1;
  for (size_t e = 0; e < target_->edges.size(); ++e) {
    const auto& ed = target_->edges[e];
    if (in_tree[e] || !is_placed_[ed.u] || !is_placed_[ed.v]) continue;
    double gap = (pos[ed.v] - pos[ed.u]).norm() - required_length((int)e, t_);
    if (gap < -kGapTol) throw StructuralError("constraint gap negative beyond tolerance");
  }
}

std::optional<CycleEvent> GrowthState::detect_next_event() const {
  check_consistency();
  auto aff = affine_positions();
  std::vector<char> in_tree(target_->edges.size(), 0);
  for (int v : placed_)
    if (v != tree_.root) in_tree[target_->find_edge(tree_.parent[v], v)] = 1;

  double best_t = std::numeric_limits<double>::infinity();
  int best_edge = -1;
  const double t_lo = t_ - 1e-15;
  for (size_t e = 0; e < target_->edges.size(); ++e) {
    const auto& ed = target_->edges[e];
    if (in_tree[e] || !is_placed_[ed.u] || !is_placed_[ed.v]) continue;
    Vec2 da = aff[ed.v].a - aff[ed.u].a;
    Vec2 db = aff[ed.v].b - aff[ed.u].b;
    double c = req_base_[e], d = req_coeff_[e];
    // gap vanishes where q(t) = |da + db t|^2 - (c + d t)^2 crosses zero
    double qa = db.norm2() - d * d;
    double qb = 2.0 * (da.dot(db) - c * d);
    double qc = da.norm2() - c * c;
    double roots[2];
    int nroots = 0;
    if (qa == 0.0) {
      if (qb != 0.0) roots[nroots++] = -qc / qb;
    } else {
      double disc = qb * qb - 4.0 * qa * qc;
      if (disc >= 0.0) {
        double sq = std::sqrt(disc);
        double qq = -0.5 * (qb + (qb >= 0 ? sq : -sq));
        if (qa != 0.0) roots[nroots++] = qq / qa;
        if (qq != 0.0) roots[nroots++] = qc / qq;
      }
    }
    for (int r = 0; r < nroots; ++r) {
      double tr = roots[r];
      if (!(tr >= t_lo && tr <= 1.0)) continue;
      double dq = 2.0 * qa * tr + qb;
      if (dq >= 0.0) continue;  // gap opening or grazing, not a closing contact
      if (tr < best_t - kEventTol ||
          (tr < best_t + kEventTol &&
           (best_edge < 0 ||
            std::pair{ed.u, ed.v} <
                std::pair{target_->edges[best_edge].u, target_->edges[best_edge].v}))) {
        if (tr < best_t) best_t = tr;
        best_edge = (int)e;
      }
    }
  }
  if (best_edge < 0) return std::nullopt;

  CycleEvent ev;
  ev.t_star = std::max(best_t, t_);
  ev.pair_edge = best_edge;
  // tree path between the endpoints: climb to the common ancestor
  int i = target_->edges[best_edge].u, j = target_->edges[best_edge].v;
  std::vector<char> mark(target_->n, 0);
  for (int v = i; v != -1; v = tree_.parent[v]) mark[v] = 1;
  int meet = j;
  while (!mark[meet]) meet = tree_.parent[meet];
  for (int v = i; v != meet; v = tree_.parent[v])
    ev.cycle_edges.push_back(target_->find_edge(tree_.parent[v], v));
  for (int v = j; v != meet; v = tree_.parent[v])
    ev.cycle_edges.push_back(target_->find_edge(tree_.parent[v], v));
  ev.cycle_edges.push_back(best_edge);
  return ev;
}

std::vector<RateCandidate> GrowthState::candidate_rates(const CycleEvent& event) const {
  auto pos = positions();
  // tight edge set = tree + the new pair
  std::vector<int> tight;
  for (int v : placed_)
    if (v != tree_.root) tight.push_back(target_->find_edge(tree_.parent[v], v));
  tight.push_back(event.pair_edge);

  std::vector<RateCandidate> out;
  for (int removed : event.cycle_edges) {
    // candidate tree T' = tight - removed, rooted as before
    std::vector<std::vector<std::pair<int, int>>> adj(target_->n);
    for (int e : tight) {
      if (e == removed) continue;
      adj[target_->edges[e].u].push_back({target_->edges[e].v, e});
      adj[target_->edges[e].v].push_back({target_->edges[e].u, e});
    }
    // vertex velocities under T' at fixed angles
    std::vector<Vec2> vel(target_->n);
    std::vector<char> seen(target_->n, 0);
    std::vector<int> stack{tree_.root};
    seen[tree_.root] = 1;
    int count = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (auto [w, e] : adj[u]) {
        if (seen[w]) continue;
        seen[w] = 1;
        ++count;
        Vec2 d = pos[w] - pos[u];
        double len = d.norm();
        Vec2 dir = len > 0 ? d * (1.0 / len) : Vec2{1.0, 0.0};
        vel[w] = vel[u] + dir * req_coeff_[e];
        stack.push_back(w);
      }
    }
    if (count != (int)placed_.size())
      throw StructuralError("candidate tree does not span the placed vertices");
    const auto& ed = target_->edges[removed];
    Vec2 d = pos[ed.v] - pos[ed.u];
    double len = d.norm();
    Vec2 u_hat = len > 0 ? d * (1.0 / len) : Vec2{1.0, 0.0};
    double rate = u_hat.dot(vel[ed.v] - vel[ed.u]) - req_coeff_[removed];
    out.push_back({removed, rate});
  }
  return out;
}

void GrowthState::break_cycle(const CycleEvent& event, Rng& rng) {
  auto rates = candidate_rates(event);
  // The stratum volume gained by candidate tree T' per unit growth is the
  // kinematic gap-opening rate times the removed edge's contact length:
  // expressing the angle volume form of T' in boundary coordinates leaves
  // a Jacobian proportional to that length.
  std::vector<double> weights(rates.size(), 0.0);
  double total = 0.0;
  for (size_t i = 0; i < rates.size(); ++i) {
    if (rates[i].rate <= 0.0) continue;
    weights[i] = rates[i].rate * required_length(rates[i].edge, t_);
    total += weights[i];
  }
  if (total <= 0.0)
    throw DomainError("geometric inconsistency: no candidate tree with increasing volume");
  double x = rng.uniform() * total;
  int chosen = -1;
  for (size_t i = 0; i < rates.size(); ++i) {
    if (weights[i] <= 0.0) continue;
    x -= weights[i];
    chosen = rates[i].edge;
    if (x <= 0.0) break;
  }
  // adopt T' = tight - chosen
  auto pos = positions();
  std::vector<std::pair<int, int>> tight;
  for (int v : placed_)
    if (v != tree_.root) {
      int e = target_->find_edge(tree_.parent[v], v);
      if (e != chosen) tight.push_back({tree_.parent[v], v});
    }
  if (event.pair_edge != chosen)
    tight.push_back({target_->edges[event.pair_edge].u, target_->edges[event.pair_edge].v});

  // re-orient over the placed set only
  std::vector<std::vector<int>> adj(target_->n);
  for (auto [a, b] : tight) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<char> seen(target_->n, 0);
  std::vector<int> stack{tree_.root};
  seen[tree_.root] = 1;
  int count = 1;
  for (int v : placed_) tree_.parent[v] = -1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int w : adj[u]) {
      if (seen[w]) continue;
      seen[w] = 1;
      ++count;
      tree_.parent[w] = u;
      Vec2 d = pos[w] - pos[u];
      angles_.theta[w] = reduce_angle(std::atan2(d.y, d.x));
      stack.push_back(w);
    }
  }
  if (count != (int)placed_.size())
    throw StructuralError("cycle break produced a disconnected tree");
  rebuild_lengths();
}

void GrowthState::add_vertex(int k, Rng& rng) {
  std::vector<int> neighbors;
  for (const auto& e : target_->edges) {
    if (e.u == k && is_placed_[e.v]) neighbors.push_back(e.v);
    if (e.v == k && is_placed_[e.u]) neighbors.push_back(e.u);
  }
  if (neighbors.empty()) throw DomainError("vertex has no placed neighbor (bad growth order)");
  int j = neighbors[rng.uniform_int(0, (int)neighbors.size() - 1)];
  begin_growth(k, j, rng.angle());
  for (int events = 0;; ++events) {
    if (events > kMaxEventsPerGrowth) throw StructuralError("event cascade did not terminate");
    auto ev = detect_next_event();
    if (!ev || ev->t_star >= 1.0 - 1e-15) break;
    t_ = ev->t_star;
    break_cycle(*ev, rng);
  }
  finish_growth();
}

namespace {

Polymer2D finalize(const GrowthState& state, const WeightedGraph& target,
                   std::span<const double> radii, std::uint64_t seed) {
  Polymer2D p;
  p.n = target.n;
  p.radii.assign(radii.begin(), radii.end());
  p.positions = state.positions();
  p.root = state.tree().root;
  p.tree_parent = state.tree().parent;
  auto gaps = constraint_gaps(p.positions, target);
  for (size_t e = 0; e < target.edges.size(); ++e)
    if (std::abs(gaps[e]) <= kGapTol)
      p.tangency_edges.push_back({target.edges[e].u, target.edges[e].v});
  p.seed = seed;
  return p;
}

}  // namespace

Polymer2D sample_polymer_2d(int n, std::span<const double> radii, Rng& rng, std::uint64_t seed) {
  if (n < 1 || (int)radii.size() != n) throw DomainError("need one positive radius per disk");
  for (double r : radii)
    if (!(r > 0)) throw DomainError("radii must be positive");
  WeightedGraph target = WeightedGraph::complete_disks(radii);
  if (n == 1) {
    Polymer2D p;
    p.n = 1;
    p.radii.assign(radii.begin(), radii.end());
    p.positions = {{0.0, 0.0}};
    p.tree_parent = {-1};
    p.seed = seed;
    return p;
  }
  GrowthState state(target, 0, radii);
  for (int k = 1; k < n; ++k) state.add_vertex(k, rng);
  return finalize(state, target, radii, seed);
}

Polymer2D sample_gpolymer(const WeightedGraph& graph, std::span<const int> order, Rng& rng,
                          std::uint64_t seed) {
  if ((int)order.size() != graph.n) throw DomainError("order must list every vertex once");
  GrowthState state(graph, order[0]);
  for (size_t i = 1; i < order.size(); ++i) state.add_vertex(order[i], rng);
  return finalize(state, graph, {}, seed);
}

Polymer2D sample_crossing_inductive_tree(int n, Rng& rng, std::uint64_t seed) {
  if (n < 1) throw DomainError("n must be positive");
  Polymer2D p;
  p.n = n;
  p.radii.assign(n, 1.0);
  p.positions.assign(n, {0.0, 0.0});
  p.tree_parent.assign(n, -1);
  p.seed = seed;
  for (int k = 1; k < n; ++k) {
    int parent = rng.uniform_int(0, k - 1);
    double theta = rng.angle();
    p.tree_parent[k] = parent;
    p.positions[k] = p.positions[parent] + Vec2{std::cos(theta), std::sin(theta)} * 2.0;
    p.tangency_edges.push_back({parent, k});
  }
  return p;
}

}  // namespace polymer
