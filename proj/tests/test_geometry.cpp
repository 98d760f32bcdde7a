#include <doctest.h>

#include <cmath>

#include "polymer/geometry.hpp"
#include "polymer/rng.hpp"

using namespace polymer;

namespace {

RootedTree path_tree(int n) {
  RootedTree t(n, 0);
  for (int v = 1; v < n; ++v) t.parent[v] = v - 1;
  return t;
}

}  // namespace

TEST_CASE("forward_positions: single edge along the x-axis") {
  RootedTree t = path_tree(2);
  AngleAssignment a{{0.0, 0.0}};
  LengthFunction len{{0.0, 2.0}, {0.0, 0.0}};
  auto pos = forward_positions(t, a, len, 0.7);
  CHECK(pos[0].x == doctest::Approx(0.0));
  CHECK(pos[1].x == doctest::Approx(2.0));
  CHECK(pos[1].y == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("forward_positions: collinear chain") {
  RootedTree t = path_tree(3);
  AngleAssignment a{{0.0, kPi / 2, kPi / 2}};
  LengthFunction len{{0.0, 2.0, 2.0}, {0.0, 0.0, 0.0}};
  auto pos = forward_positions(t, a, len, 0.0);
  CHECK(pos[2].x == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(pos[2].y == doctest::Approx(4.0));
}

TEST_CASE("forward_positions: linear growth in t") {
  RootedTree t = path_tree(2);
  AngleAssignment a{{0.0, 0.0}};
  LengthFunction len{{0.0, 1.0}, {0.0, 1.0}};
  auto pos = forward_positions(t, a, len, 0.5);
  CHECK(pos[1].x == doctest::Approx(1.5));
}

TEST_CASE("forward_positions: missing angle is a structural error") {
  RootedTree t = path_tree(3);
  AngleAssignment a{{0.0}};  // too short
  LengthFunction len{{0.0, 1.0, 1.0}, {0.0, 0.0, 0.0}};
  CHECK_THROWS_AS(forward_positions(t, a, len, 0.0), StructuralError);
}

TEST_CASE("forward_positions equals direct vector summation along root paths") {
  Rng rng(11);
  for (int rep = 0; rep < 20; ++rep) {
    int n = 2 + rng.uniform_int(0, 8);
    RootedTree t(n, 0);
    AngleAssignment a{std::vector<double>(n, 0.0)};
    LengthFunction len{std::vector<double>(n, 0.0), std::vector<double>(n, 0.0)};
    for (int v = 1; v < n; ++v) {
      t.parent[v] = rng.uniform_int(0, v - 1);
      a.theta[v] = rng.angle();
      len.base[v] = rng.uniform(0.1, 3.0);
      len.coeff[v] = rng.uniform(0.0, 1.0);
    }
    double tt = rng.uniform();
    auto pos = forward_positions(t, a, len, tt);
    for (int v = 1; v < n; ++v) {
      Vec2 sum{0, 0};
      for (int u = v; u != 0; u = t.parent[u])
        sum = sum + Vec2{std::cos(a.theta[u]), std::sin(a.theta[u])} * len.length(u, tt);
      CHECK(pos[v].x == doctest::Approx(sum.x).epsilon(1e-12));
      CHECK(pos[v].y == doctest::Approx(sum.y).epsilon(1e-12));
    }
  }
}

TEST_CASE("constraint_gaps: tangent, separated, overlapping unit disks") {
  WeightedGraph g;
  g.n = 2;
  g.add_edge(0, 1, 2.0);
  std::vector<Vec2> tangent{{0, 0}, {2, 0}};
  std::vector<Vec2> apart{{0, 0}, {3, 0}};
  std::vector<Vec2> overlap{{0, 0}, {1, 0}};
  CHECK(constraint_gaps(tangent, g)[0] == doctest::Approx(0.0));
  CHECK(constraint_gaps(apart, g)[0] == doctest::Approx(1.0));
  CHECK(constraint_gaps(overlap, g)[0] == doctest::Approx(-1.0));
}

TEST_CASE("constraint_gaps is rigid-motion invariant") {
  Rng rng(5);
  WeightedGraph g;
  g.n = 4;
  g.add_edge(0, 1, 1.3);
  g.add_edge(1, 2, 0.8);
  g.add_edge(0, 3, 2.1);
  std::vector<Vec2> pos{{0, 0}, {1.1, 0.4}, {2.0, -0.3}, {0.5, 1.9}};
  auto base = constraint_gaps(pos, g);
  double phi = rng.angle();
  Vec2 shift{rng.uniform(-5, 5), rng.uniform(-5, 5)};
  std::vector<Vec2> moved;
  for (auto p : pos)
    moved.push_back(Vec2{p.x * std::cos(phi) - p.y * std::sin(phi),
                         p.x * std::sin(phi) + p.y * std::cos(phi)} +
                    shift);
  auto rotated = constraint_gaps(moved, g);
  for (size_t e = 0; e < base.size(); ++e)
    CHECK(rotated[e] == doctest::Approx(base[e]).epsilon(1e-12));
}

TEST_CASE("reroot_and_orient: simple cases") {
  std::vector<Vec2> pos{{0, 0}, {0, 2}};
  std::vector<std::pair<int, int>> edges{{0, 1}};
  auto ot = reroot_and_orient(2, edges, 0, pos);
  CHECK(ot.tree.parent[1] == 0);
  CHECK(ot.angles.theta[1] == doctest::Approx(kPi / 2));

  std::vector<Vec2> pos3{{0, 0}, {1, 0}, {2, 0}};
  std::vector<std::pair<int, int>> path{{0, 1}, {1, 2}};
  auto ot3 = reroot_and_orient(3, path, 0, pos3);
  CHECK(ot3.tree.parent[1] == 0);
  CHECK(ot3.tree.parent[2] == 1);
}

TEST_CASE("reroot_and_orient: rerooting a star at a leaf flips one edge by pi") {
  std::vector<Vec2> pos{{0, 0}, {1, 0}, {0, 1}, {-1, 0}};
  std::vector<std::pair<int, int>> star{{0, 1}, {0, 2}, {0, 3}};
  auto from_center = reroot_and_orient(4, star, 0, pos);
  auto from_leaf = reroot_and_orient(4, star, 1, pos);
  CHECK(from_leaf.tree.parent[0] == 1);
  double flipped = reduce_angle(from_center.angles.theta[1] + kPi);
  CHECK(from_leaf.angles.theta[0] == doctest::Approx(flipped));
}

TEST_CASE("reroot_and_orient rejects cyclic or disconnected edge sets") {
  std::vector<Vec2> pos{{0, 0}, {1, 0}, {0, 1}, {5, 5}};
  std::vector<std::pair<int, int>> cyclic{{0, 1}, {1, 2}, {2, 0}};
  CHECK_THROWS_AS(reroot_and_orient(4, cyclic, 0, pos), StructuralError);
}

TEST_CASE("reroot then forward reproduces positions") {
  Rng rng(23);
  for (int rep = 0; rep < 10; ++rep) {
    int n = 3 + rng.uniform_int(0, 5);
    std::vector<Vec2> pos(n);
    std::vector<std::pair<int, int>> edges;
    pos[0] = {0, 0};
    for (int v = 1; v < n; ++v) {
      int p = rng.uniform_int(0, v - 1);
      double a = rng.angle();
      pos[v] = pos[p] + Vec2{std::cos(a), std::sin(a)} * rng.uniform(0.5, 2.0);
      edges.push_back({p, v});
    }
    int root = rng.uniform_int(0, n - 1);
    auto ot = reroot_and_orient(n, edges, root, pos);
    LengthFunction len{std::vector<double>(n, 0.0), std::vector<double>(n, 0.0)};
    for (int v = 0; v < n; ++v)
      if (v != root) len.base[v] = (pos[v] - pos[ot.tree.parent[v]]).norm();
    auto rebuilt = forward_positions(ot.tree, ot.angles, len, 0.0);
    for (int v = 0; v < n; ++v) {
      CHECK(rebuilt[v].x + pos[root].x == doctest::Approx(pos[v].x).epsilon(1e-9));
      CHECK(rebuilt[v].y + pos[root].y == doctest::Approx(pos[v].y).epsilon(1e-9));
    }
  }
}
