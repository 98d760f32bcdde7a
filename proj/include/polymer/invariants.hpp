#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <span>
#include <vector>

#include "polymer/geometry.hpp"

namespace polymer {

using BigInt = boost::multiprecision::cpp_int;

enum class MuMethod { safe_trees, subgraph_sum, tutte };

// mu(G): planar G-polymer configuration volume over (2pi)^{n-1}.
struct MuValue {
  long long value = 0;       // |signed_sum|
  MuMethod method = MuMethod::safe_trees;
  long long signed_sum = 0;  // raw alternating sum (subgraph_sum only; else +-value)
};

// Total order on the edge indices of a WeightedGraph; rank = position.
using EdgeOrder = std::vector<int>;

EdgeOrder identity_order(const WeightedGraph& g);

// All spanning trees as sets of edge indices. Throws DomainError if
// disconnected.
std::vector<std::vector<int>> enumerate_spanning_trees(const WeightedGraph& g);

// Count spanning trees T with no "bad" non-tree edge: e in G\T is bad if
// its rank is the lowest among all edges of the cycle formed by adding e
// to T. The count is independent of the order.
MuValue mu_safe_trees(const WeightedGraph& g, const EdgeOrder& order);
MuValue mu_safe_trees(const WeightedGraph& g);

// Alternating sum (-1)^{|E(H)|} over connected spanning subgraphs H.
// Capacity-limited to 24 edges.
MuValue mu_subgraph_sum(const WeightedGraph& g);

// Deletion-contraction evaluation of the Tutte polynomial at the
// zero-external-activity point, T_G(1,0).
MuValue tutte_mu(const WeightedGraph& g);

// mu(K_{m,n}) via exact rational series expansion of
// H(x,y) = -x - y + log(e^x + e^y - 1).
BigInt mu_bipartite(int m, int n);

// Complete k-partite generalization, H = -sum x_i + log(1 - k + sum e^{x_i}).
BigInt mu_kpartite(std::span<const int> sizes);

// mu of the unit-interval graph on sorted centers xs (xs[0] = 0):
// product over j >= 1 of #{i < j : xs[j] - xs[i] <= 1}.
// Throws DomainError if some gamma(j) = 0 (disconnected interval graph).
long long gamma_product(std::span<const double> xs);

// Unit-interval graph on centers xs: edge {i,j} iff |x_i - x_j| <= 1,
// with contact length sqrt((1 - dx^2) / beta_ij). beta optional per pair
// (flattened upper-triangular by (i,j), i<j), default 1.
WeightedGraph interval_graph(std::span<const double> xs, std::span<const double> beta = {});

}  // namespace polymer
