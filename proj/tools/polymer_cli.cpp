#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "polymer/invariants.hpp"
#include "polymer/io.hpp"
#include "polymer/rng.hpp"
#include "polymer/sampler2d.hpp"
#include "polymer/sampler3d.hpp"
#include "polymer/verify.hpp"

using namespace polymer;

namespace {

std::uint64_t pick_seed(std::uint64_t seed, bool seed_given) {
  if (seed_given) return seed;
  std::random_device rd;
  std::uint64_t s = ((std::uint64_t)rd() << 32) ^ rd();
  std::cerr << "seed: " << s << "\n";
  return s;
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw DomainError("cannot write " + path);
  out << text;
}

// family specs: Kn:5, Cn:7, Kmn:3,4; otherwise a graph file path
WeightedGraph graph_from_spec(const std::string& spec) {
  auto colon = spec.find(':');
  if (spec.rfind("Kmn:", 0) == 0) {
    auto comma = spec.find(',', colon);
    int m = std::stoi(spec.substr(colon + 1, comma - colon - 1));
    int n = std::stoi(spec.substr(comma + 1));
    return WeightedGraph::complete_bipartite(m, n);
  }
  if (spec.rfind("Kn:", 0) == 0) return WeightedGraph::complete(std::stoi(spec.substr(colon + 1)));
  if (spec.rfind("Cn:", 0) == 0) return WeightedGraph::cycle(std::stoi(spec.substr(colon + 1)));
  return parse_graph_file(spec);
}

void print_report(const std::string& name, const TrialReport& r, bool& all_ok) {
  bool ok = !r.has_target || std::abs(r.z) <= 3.0;
  all_ok = all_ok && ok;
  std::printf("%-28s estimate %.6f  stderr %.6f", name.c_str(), r.estimate, r.stderr_);
  if (r.has_target) std::printf("  target %.6f  z %+.2f  [%s]", r.target, r.z, ok ? "ok" : "FAIL");
  std::printf("\n");
}

int run_verify(const std::string& suite, int n, long long trials, std::uint64_t seed, bool quick) {
  if (quick) trials = std::min(trials, (long long)100000);
  bool ok = true;
  auto want = [&](const std::string& s) { return suite == "all" || suite == s; };
  bool known = false;
  if (want("walk")) {
    known = true;
    for (int steps : suite == "all" ? std::vector<int>{2, 3, 4, 5, 6} : std::vector<int>{n})
      print_report("walk n=" + std::to_string(steps),
                   walk_return_probability(steps, trials, seed), ok);
  }
  if (want("accept2d")) {
    known = true;
    for (int size : suite == "all" ? std::vector<int>{3, 4} : std::vector<int>{n}) {
      std::vector<double> radii(size, 1.0);
      double target = 1.0;
      for (int i = 2; i < size; ++i) target *= i;          // (n-1)!
      for (int i = 0; i < size - 2; ++i) target /= size;   // n^{n-2}
      auto r = run_trials(trials, seed, target, [&](Rng& rng) {
        return rejection_sample_2d(size, radii, rng).has_value();
      });
      print_report("accept2d n=" + std::to_string(size), r, ok);
    }
  }
  if (want("acceptg")) {
    known = true;
    for (auto [name, graph] : {std::pair{std::string("C4"), WeightedGraph::cycle(4)},
                               std::pair{std::string("K3"), WeightedGraph::complete(3)}}) {
      auto trees = enumerate_spanning_trees(graph);
      double target = (double)mu_safe_trees(graph).value / (double)trees.size();
      auto r = run_trials(trials, seed, target, [&](Rng& rng) {
        return rejection_sample_gpolymer(graph, trees, rng).has_value();
      });
      print_report("acceptg " + name, r, ok);
    }
  }
  if (want("accept3d")) {
    known = true;
    for (int size : suite == "all" ? std::vector<int>{3, 4} : std::vector<int>{n}) {
      double target = (double)size / std::pow(2.0, size - 1);
      auto r = run_trials(trials, seed, target, [&](Rng& rng) {
        return rejection_sample_3d(size, rng).has_value();
      });
      print_report("accept3d n=" + std::to_string(size), r, ok);
    }
  }
  if (want("diameter")) {
    known = true;
    std::vector<int> ns{50, 100, 200, 400, 800};
    double slope = diameter_scaling(ns, quick ? 300 : 2000, seed, false);
    bool s_ok = slope >= 0.4 && slope <= 0.6;
    ok = ok && s_ok;
    std::printf("%-28s slope %.3f  band [0.40, 0.60]  [%s]\n", "diameter b-vector", slope,
                s_ok ? "ok" : "FAIL");
  }
  if (!known) {
    std::cerr << "unknown suite: " << suite
              << " (expected walk|accept2d|acceptg|accept3d|diameter|all)\n";
    return 2;
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact sampling of branched polymers and the mu(G) invariant"};
  app.require_subcommand(1);

  // sample2d
  auto* s2 = app.add_subcommand("sample2d", "Sample a uniform planar branched polymer");
  int n2 = 10;
  std::vector<double> radii_opt;
  std::string graph_file, out_path, svg_path, format = "json";
  std::uint64_t seed = 0;
  bool seed_given = false;
  s2->add_option("--n", n2, "number of disks");
  s2->add_option("--radii", radii_opt, "per-disk radii (default: all 1)");
  s2->add_option("--graph", graph_file, "edge-list file: sample a G-polymer instead of disks");
  s2->add_option("--seed", seed, "RNG seed")->each([&](const std::string&) { seed_given = true; });
  s2->add_option("--out", out_path, "output path (default stdout)");
  s2->add_option("--svg", svg_path, "also write an SVG figure")->expected(0, 1);
  s2->add_option("--format", format, "json or csv");

  // sample3d
  auto* s3 = app.add_subcommand("sample3d", "Sample a uniform 3D branched polymer");
  int n3 = 10;
  std::vector<double> axes;
  s3->add_option("--n", n3, "number of spheres");
  s3->add_option("--axes", axes, "per-label spheroid yz-axes (sets pair weights beta)");
  s3->add_option("--seed", seed, "RNG seed")->each([&](const std::string&) { seed_given = true; });
  s3->add_option("--out", out_path, "output path (default stdout)");
  s3->add_option("--svg", svg_path, "also write an SVG figure")->expected(0, 1);
  s3->add_option("--format", format, "json or csv");

  // mu
  auto* mu = app.add_subcommand("mu", "Compute mu(G) with method cross-check");
  std::string mu_spec;
  mu->add_option("spec", mu_spec, "graph file or family spec (Kn:5, Cn:7, Kmn:3,4)")->required();

  // verify
  auto* ver = app.add_subcommand("verify", "Run a verification suite");
  std::string suite;
  int vn = 3;
  long long trials = 1000000;
  bool quick = false;
  ver->add_option("suite", suite, "walk|accept2d|acceptg|accept3d|diameter|all")->required();
  ver->add_option("--n", vn, "order parameter for the suite");
  ver->add_option("--trials", trials, "Monte Carlo trials");
  ver->add_option("--seed", seed, "RNG seed")->each([&](const std::string&) { seed_given = true; });
  ver->add_flag("--quick", quick, "reduced trial counts");

  CLI11_PARSE(app, argc, argv);

  try {
    if (s2->parsed()) {
      std::uint64_t s = pick_seed(seed, seed_given);
      Rng rng(s);
      Polymer2D p;
      if (!graph_file.empty()) {
        WeightedGraph g = parse_graph_file(graph_file);
        std::vector<int> order(g.n);
        for (int i = 0; i < g.n; ++i) order[i] = i;
        p = sample_gpolymer(g, order, rng, s);
      } else {
        std::vector<double> radii = radii_opt;
        if (radii.empty()) radii.assign(n2, 1.0);
        if ((int)radii.size() != n2) throw DomainError("--radii must list n values");
        p = sample_polymer_2d(n2, radii, rng, s);
      }
      write_output(format == "csv" ? to_csv(p) : to_json(p), out_path);
      if (s2->count("--svg")) write_output(render_svg(p), svg_path.empty() ? "polymer.svg" : svg_path);
    } else if (s3->parsed()) {
      std::uint64_t s = pick_seed(seed, seed_given);
      Rng rng(s);
      std::vector<double> beta;
      if (!axes.empty()) {
        if ((int)axes.size() != n3) throw DomainError("--axes must list n values");
        beta = beta_from_axes(axes);
      }
      Polymer3D p = sample_polymer_3d(n3, rng, beta, s);
      write_output(format == "csv" ? to_csv(p) : to_json(p), out_path);
      if (s3->count("--svg")) write_output(render_svg(p), svg_path.empty() ? "polymer.svg" : svg_path);
    } else if (mu->parsed()) {
      // bipartite family also gets the generating-function route
      if (mu_spec.rfind("Kmn:", 0) == 0) {
        auto g = graph_from_spec(mu_spec);
        auto colon = mu_spec.find(':');
        auto comma = mu_spec.find(',');
        int m = std::stoi(mu_spec.substr(colon + 1, comma - colon - 1));
        int nn = std::stoi(mu_spec.substr(comma + 1));
        auto st = mu_safe_trees(g);
        auto gf = mu_bipartite(m, nn);
        std::cout << gf << "\n";
        std::cout << "  safe-trees " << st.value << ", series " << gf
                  << (BigInt(st.value) == gf ? "  (agree)" : "  (DISAGREE)") << "\n";
        return BigInt(st.value) == gf ? 0 : 1;
      }
      auto g = graph_from_spec(mu_spec);
      auto st = mu_safe_trees(g);
      auto tu = tutte_mu(g);
      std::cout << st.value << "\n";
      std::cout << "  safe-trees " << st.value << ", tutte " << tu.value;
      if (g.edges.size() <= 24) {
        auto ss = mu_subgraph_sum(g);
        std::cout << ", subgraph-sum " << ss.value << " (signed " << ss.signed_sum << ")";
        if (ss.value != st.value) {
          std::cout << "  (DISAGREE)\n";
          return 1;
        }
      }
      std::cout << (tu.value == st.value ? "  (agree)" : "  (DISAGREE)") << "\n";
      return tu.value == st.value ? 0 : 1;
    } else if (ver->parsed()) {
      std::uint64_t s = pick_seed(seed, seed_given);
      return run_verify(suite, vn, trials, s, quick);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
