#pragma once

#include <iosfwd>
#include <string>

#include "polymer/geometry.hpp"
#include "polymer/sampler2d.hpp"
#include "polymer/sampler3d.hpp"
#include "polymer/stats.hpp"

namespace polymer {

// JSON schemas (1-indexed vertices; parent 0 marks the root):
//   Polymer2D: {n, radii, positions [[x,y]...], tree_parent, tangency_edges,
//               seed}
//   Polymer3D: {n, positions [[x,y,z]...], tree_parent, tangency_edges,
//               beta?, root, seed}
std::string to_json(const Polymer2D& p);
std::string to_json(const Polymer3D& p);
std::string to_json(const TrialReport& r);
Polymer2D polymer2d_from_json(const std::string& text);
Polymer3D polymer3d_from_json(const std::string& text);

std::string to_csv(const Polymer2D& p);
std::string to_csv(const Polymer3D& p);

// Edge-list text, one "i j [r_ij] [beta_ij]" per line, 1-indexed.
WeightedGraph parse_graph(std::istream& in);
WeightedGraph parse_graph_file(const std::string& path);

// SVG figures: circles + tree edges in 2D; two projection panels
// (x-axis and yz-plane) in 3D.
std::string render_svg(const Polymer2D& p);
std::string render_svg(const Polymer3D& p);

}  // namespace polymer
