#include "polymer/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace polymer {

using nlohmann::json;

namespace {

json edges_to_json(const std::vector<std::pair<int, int>>& edges) {
  json out = json::array();
  for (auto [a, b] : edges) out.push_back({a + 1, b + 1});
  return out;
}

std::vector<std::pair<int, int>> edges_from_json(const json& j) {
  std::vector<std::pair<int, int>> out;
  for (const auto& e : j) out.push_back({(int)e[0] - 1, (int)e[1] - 1});
  return out;
}

json parents_to_json(const std::vector<int>& parent) {
  json out = json::array();
  for (int p : parent) out.push_back(p + 1);  // root maps to 0
  return out;
}

std::vector<int> parents_from_json(const json& j) {
  std::vector<int> out;
  for (const auto& p : j) out.push_back((int)p - 1);
  return out;
}

}  // namespace

std::string to_json(const Polymer2D& p) {
  json j;
  j["n"] = p.n;
  j["radii"] = p.radii;
  json pos = json::array();
  for (const auto& v : p.positions) pos.push_back({v.x, v.y});
  j["positions"] = pos;
  j["tree_parent"] = parents_to_json(p.tree_parent);
  j["tangency_edges"] = edges_to_json(p.tangency_edges);
  j["seed"] = p.seed;
  return j.dump();
}

Polymer2D polymer2d_from_json(const std::string& text) {
  json j = json::parse(text);
  Polymer2D p;
  p.n = j.at("n");
  p.radii = j.at("radii").get<std::vector<double>>();
  for (const auto& v : j.at("positions")) p.positions.push_back({v[0], v[1]});
  p.tree_parent = parents_from_json(j.at("tree_parent"));
  p.tangency_edges = edges_from_json(j.at("tangency_edges"));
  p.seed = j.at("seed");
  for (int v = 0; v < p.n; ++v)
    if (p.tree_parent[v] < 0) p.root = v;
  return p;
}

std::string to_json(const Polymer3D& p) {
  json j;
  j["n"] = p.n;
  json pos = json::array();
  for (const auto& v : p.positions) pos.push_back({v.x, v.y, v.z});
  j["positions"] = pos;
  j["tree_parent"] = parents_to_json(p.tree_parent);
  j["tangency_edges"] = edges_to_json(p.tangency_edges);
  if (!p.beta.empty()) j["beta"] = p.beta;
  j["root"] = p.root + 1;
  j["seed"] = p.seed;
  return j.dump();
}

Polymer3D polymer3d_from_json(const std::string& text) {
  json j = json::parse(text);
  Polymer3D p;
  p.n = j.at("n");
  for (const auto& v : j.at("positions")) p.positions.push_back({v[0], v[1], v[2]});
  p.tree_parent = parents_from_json(j.at("tree_parent"));
  p.tangency_edges = edges_from_json(j.at("tangency_edges"));
  if (j.contains("beta")) p.beta = j.at("beta").get<std::vector<double>>();
  p.root = (int)j.at("root") - 1;
  p.seed = j.at("seed");
  return p;
}

std::string to_json(const TrialReport& r) {
  json j;
  j["trials"] = r.trials;
  j["successes"] = r.successes;
  j["estimate"] = r.estimate;
  j["stderr"] = r.stderr_;
  if (r.has_target) {
    j["target"] = r.target;
    j["z"] = r.z;
  } else {
    j["target"] = nullptr;
  }
  return j.dump();
}

std::string to_csv(const Polymer2D& p) {
  std::ostringstream out;
  out << "vertex,x,y,radius,parent\n";
  out.precision(17);
  for (int v = 0; v < p.n; ++v)
    out << v + 1 << ',' << p.positions[v].x << ',' << p.positions[v].y << ','
        << (v < (int)p.radii.size() ? p.radii[v] : 0.0) << ',' << p.tree_parent[v] + 1 << '\n';
  return out.str();
}

std::string to_csv(const Polymer3D& p) {
  std::ostringstream out;
  out << "vertex,x,y,z,parent\n";
  out.precision(17);
  for (int v = 0; v < p.n; ++v)
    out << v + 1 << ',' << p.positions[v].x << ',' << p.positions[v].y << ','
        << p.positions[v].z << ',' << p.tree_parent[v] + 1 << '\n';
  return out.str();
}

WeightedGraph parse_graph(std::istream& in) {
  WeightedGraph g;
  std::string line;
  int max_vertex = 0;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    int i, j;
    if (!(ls >> i >> j)) continue;
    if (i < 1 || j < 1) throw DomainError("graph file: vertices are 1-indexed");
    double r = 1.0, beta = 1.0;
    ls >> r >> beta;
    if (!(r > 0) || !(beta > 0)) throw DomainError("graph file: lengths and beta must be positive");
    max_vertex = std::max({max_vertex, i, j});
    g.edges.push_back({std::min(i, j) - 1, std::max(i, j) - 1, r, beta});
  }
  g.n = max_vertex;
  return g;
}

WeightedGraph parse_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open graph file: " + path);
  return parse_graph(in);
}

namespace {

struct Box {
  double x0 = 0, y0 = 0, x1 = 0, y1 = 0;
  void grow(double x, double y, double pad) {
    x0 = std::min(x0, x - pad);
    y0 = std::min(y0, y - pad);
    x1 = std::max(x1, x + pad);
    y1 = std::max(y1, y + pad);
  }
};

void svg_open(std::ostringstream& out, const Box& b) {
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << b.x0 << ' ' << b.y0 << ' '
      << b.x1 - b.x0 << ' ' << b.y1 - b.y0 << "\">\n";
}

}  // namespace

std::string render_svg(const Polymer2D& p) {
  Box box;
  for (int v = 0; v < p.n; ++v) {
    double r = v < (int)p.radii.size() && p.radii[v] > 0 ? p.radii[v] : 0.5;
    box.grow(p.positions[v].x, p.positions[v].y, r * 1.1);
  }
  std::ostringstream out;
  svg_open(out, box);
  for (int v = 0; v < p.n; ++v)
    if (p.tree_parent[v] >= 0) {
      const auto& a = p.positions[v];
      const auto& b = p.positions[p.tree_parent[v]];
      out << "<line x1=\"" << a.x << "\" y1=\"" << a.y << "\" x2=\"" << b.x << "\" y2=\"" << b.y
          << "\" stroke=\"#444\" stroke-width=\"0.05\"/>\n";
    }
  for (int v = 0; v < p.n; ++v) {
    double r = v < (int)p.radii.size() && p.radii[v] > 0 ? p.radii[v] : 0.5;
    out << "<circle cx=\"" << p.positions[v].x << "\" cy=\"" << p.positions[v].y << "\" r=\"" << r
        << "\" fill=\"#9ec7e8\" fill-opacity=\"0.8\" stroke=\"#225\" stroke-width=\"0.03\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string render_svg(const Polymer3D& p) {
  // two panels: x-axis projection (ticks on a line) and yz-plane (circles)
  Box xbox, yzbox;
  for (const auto& v : p.positions) {
    xbox.grow(v.x, 0.0, 0.6);
    yzbox.grow(v.y, v.z, 0.6);
  }
  double shift = yzbox.x0 - xbox.x1 + (xbox.x1 - xbox.x0) + 2.0;  // panel offset
  Box all = yzbox;
  all.grow(xbox.x0 - shift, xbox.y0, 0.0);
  all.grow(xbox.x1 - shift, xbox.y1, 0.0);
  std::ostringstream out;
  svg_open(out, all);
  out << "<line x1=\"" << xbox.x0 - shift << "\" y1=\"0\" x2=\"" << xbox.x1 - shift
      << "\" y2=\"0\" stroke=\"#999\" stroke-width=\"0.02\"/>\n";
  for (const auto& v : p.positions)
    out << "<circle class=\"xproj\" cx=\"" << v.x - shift
        << "\" cy=\"0\" r=\"0.08\" fill=\"#c33\"/>\n";
  for (int v = 0; v < p.n; ++v)
    if (p.tree_parent[v] >= 0) {
      const auto& a = p.positions[v];
      const auto& b = p.positions[p.tree_parent[v]];
      out << "<line x1=\"" << a.y << "\" y1=\"" << a.z << "\" x2=\"" << b.y << "\" y2=\"" << b.z
          << "\" stroke=\"#444\" stroke-width=\"0.04\"/>\n";
    }
  for (const auto& v : p.positions)
    out << "<circle class=\"yzproj\" cx=\"" << v.y << "\" cy=\"" << v.z
        << "\" r=\"0.5\" fill=\"#9ec7e8\" fill-opacity=\"0.7\" stroke=\"#225\" "
           "stroke-width=\"0.03\"/>\n";
  out << "</svg>\n";
  return out.str();
}

}  // namespace polymer
