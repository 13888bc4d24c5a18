#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "planarity/driver.hpp"
#include "planarity/io.hpp"
#include "planarity/oracle.hpp"

using namespace planarity;

namespace {

struct LoadedGraph {
  EdgeListData file;
  std::vector<Edge> simple;   // loops removed, order kept
  std::vector<int> to_file;   // internal edge id -> file edge id
  std::vector<int> loops;     // file edge ids of loops
};

EdgeListData parse_graph_input(const std::string& path) {
  if (path == "-") return parse_edge_list(std::cin);
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return parse_edge_list(in);
}

LoadedGraph load_graph(const std::string& path) {
  LoadedGraph lg;
  lg.file = parse_graph_input(path);
  for (int i = 0; i < static_cast<int>(lg.file.edges.size()); ++i) {
    const Edge& e = lg.file.edges[i];
    if (e.u == e.v) {
      lg.loops.push_back(i);
    } else {
      lg.to_file.push_back(i);
      lg.simple.push_back(e);
    }
  }
  if (lg.loops.size() == 1)
    std::cerr << "1 loop ignored\n";
  else if (lg.loops.size() > 1)
    std::cerr << lg.loops.size() << " loops ignored\n";
  return lg;
}

// back to file edge ids; loops come back as two adjacent half-edges
RotationSystem file_rotation(const LoadedGraph& lg, const RotationSystem& internal) {
  std::vector<std::vector<int>> lists(lg.file.n);
  for (int v = 0; v < lg.file.n; ++v)
    for (const int h : internal.at(v)) lists[v].push_back(2 * lg.to_file[h >> 1] + (h & 1));
  for (const int e : lg.loops) {
    const int v = lg.file.edges[e].u;
    lists[v].push_back(2 * e);
    lists[v].push_back(2 * e + 1);
  }
  return RotationSystem::from_lists(lists);
}

int file_faces(const LoadedGraph& lg, const RotationSystem& rot) {
  std::vector<char> touched(lg.file.n, 0);
  for (const Edge& e : lg.file.edges) touched[e.u] = touched[e.v] = 1;
  int isolated = 0;
  for (int v = 0; v < lg.file.n; ++v)
    if (!touched[v]) ++isolated;
  return count_face_orbits(static_cast<int>(lg.file.edges.size()), rot) + isolated;
}

int cmd_test(const std::string& path, bool json, bool trace) {
  const LoadedGraph lg = load_graph(path);
  const Graph g(lg.file.n, lg.simple);
  const AnalysisResult res = analyze(g, trace);
  if (trace) std::cout << res.trace;
  if (json)
    std::cout << nlohmann::json{{"planar", res.planar}}.dump() << '\n';
  else
    std::cout << (res.planar ? "planar" : "not planar") << '\n';
  return 0;
}

int cmd_embed(const std::string& path, bool json) {
  const LoadedGraph lg = load_graph(path);
  const Graph g(lg.file.n, lg.simple);
  const AnalysisResult res = analyze(g);
  if (!res.planar) {
    if (json)
      std::cout << nlohmann::json{{"planar", false}}.dump() << '\n';
    else
      std::cout << "not planar\n";
    return 0;
  }
  const RotationSystem rot = file_rotation(lg, res.rot);
  if (json) {
    nlohmann::json jrot = nlohmann::json::array();
    for (int v = 0; v < lg.file.n; ++v) {
      nlohmann::json list = nlohmann::json::array();
      for (const int h : rot.at(v)) {
        const Edge& ed = lg.file.edges[h >> 1];
        const int w = (h & 1) ? ed.u : ed.v;
        list.push_back({w + 1, (h >> 1) + 1});
      }
      jrot.push_back(std::move(list));
    }
    nlohmann::json jlam = nlohmann::json::object();
    for (int e = 0; e < static_cast<int>(lg.simple.size()); ++e)
      if (res.lambda[e] != 0) jlam[std::to_string(lg.to_file[e] + 1)] = res.lambda[e];
    std::cout << nlohmann::json{{"planar", true},
                                {"rotation", std::move(jrot)},
                                {"faces", file_faces(lg, rot)},
                                {"lambda", std::move(jlam)}}
                     .dump()
              << '\n';
  } else {
    write_rotation(std::cout, lg.file.n, lg.file.edges, rot);
  }
  return 0;
}

int cmd_certify(const std::string& gpath, const std::string& rpath) {
  if (gpath == "-" && rpath == "-") throw ParseError("only one input may be stdin");
  const EdgeListData gd = parse_graph_input(gpath);
  RotationSystem rot;
  if (rpath == "-") {
    rot = parse_rotation(std::cin, gd.n, gd.edges);
  } else {
    std::ifstream in(rpath);
    if (!in) throw ParseError("cannot open '" + rpath + "'");
    rot = parse_rotation(in, gd.n, gd.edges);
  }
  if (!rotation_structure_ok(gd.n, gd.edges, rot)) {
    std::cerr << "rotation does not match graph\n";
    return 2;
  }
  std::cout << (certify_rotation(gd.n, gd.edges, rot) ? "certified" : "not certified") << '\n';
  return 0;
}

int cmd_gen(const GenSpec& spec, const std::string& out_path) {
  const Graph g = generate(spec);
  if (out_path.empty() || out_path == "-") {
    write_edge_list(std::cout, g.num_vertices(), g.edges());
  } else {
    std::ofstream out(out_path);
    if (!out) throw ParseError("cannot open '" + out_path + "'");
    write_edge_list(out, g.num_vertices(), g.edges());
  }
  return 0;
}

int cmd_bench(const std::string& kind, const std::vector<int>& sizes, int reps,
              std::uint64_t seed) {
  std::cout << "n\tm\tms\teps\n";
  for (const int n : sizes) {
    const Graph g =
        kind == "random" ? gen_random_connected(n, 2 * n, seed) : gen_triangulation(n, seed);
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
      const auto t0 = std::chrono::steady_clock::now();
      const AnalysisResult res = analyze(g);
      const auto t1 = std::chrono::steady_clock::now();
      (void)res;
      best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    const double eps = g.num_edges() / std::max(best, 1e-3) * 1000.0;
    std::cout << n << '\t' << g.num_edges() << '\t' << std::fixed << std::setprecision(3) << best
              << '\t' << std::setprecision(0) << eps << '\n';
    std::cout.unsetf(std::ios::fixed);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"planarity verdict, combinatorial embedding and certification"};
  app.require_subcommand(1);

  std::string in_path = "-";
  bool json = false, trace = false;
  auto* sub_test = app.add_subcommand("test", "planarity verdict for an edge list");
  sub_test->add_option("file", in_path, "edge list file, '-' for stdin");
  sub_test->add_flag("--json", json, "emit a JSON object");
  sub_test->add_flag("--trace", trace, "print the per-vertex constraint steps");

  std::string embed_path = "-";
  bool embed_json = false;
  auto* sub_embed = app.add_subcommand("embed", "rotation system for a planar graph");
  sub_embed->add_option("file", embed_path, "edge list file, '-' for stdin");
  sub_embed->add_flag("--json", embed_json, "emit a JSON object");

  std::string cert_graph, cert_rot;
  auto* sub_certify = app.add_subcommand("certify", "check a rotation against the face count");
  sub_certify->add_option("graph", cert_graph, "edge list file")->required();
  sub_certify->add_option("rotation", cert_rot, "rotation file, '-' for stdin")->required();

  GenSpec spec;
  std::string gen_out;
  auto* sub_gen = app.add_subcommand("gen", "write a generated edge list");
  sub_gen
      ->add_option("--kind", spec.kind, "complete | bipartite | subdivide | triangulation | random")
      ->required();
  sub_gen->add_option("--n", spec.n, "vertex count");
  sub_gen->add_option("--a", spec.a, "left side size (bipartite)");
  sub_gen->add_option("--b", spec.b, "right side size (bipartite)");
  sub_gen->add_option("--m", spec.m, "edge count (random)");
  sub_gen->add_option("--k", spec.k, "inner vertices per edge (subdivide)");
  sub_gen->add_option("--base", spec.base, "subdivision base: k4 | k5 | k33");
  sub_gen->add_option("--seed", spec.seed, "generator seed");
  sub_gen->add_option("-o,--output", gen_out, "output file (default stdout)");

  std::string bench_kind = "triangulation";
  std::vector<int> bench_sizes = {100000, 200000, 400000, 800000};
  int bench_reps = 2;
  std::uint64_t bench_seed = 1;
  auto* sub_bench = app.add_subcommand("bench", "timing table for the full pipeline");
  sub_bench->add_option("--kind", bench_kind, "triangulation | random");
  sub_bench->add_option("--sizes", bench_sizes, "vertex counts");
  sub_bench->add_option("--reps", bench_reps, "repetitions per size (best kept)");
  sub_bench->add_option("--seed", bench_seed, "generator seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (sub_test->parsed()) return cmd_test(in_path, json, trace);
    if (sub_embed->parsed()) return cmd_embed(embed_path, embed_json);
    if (sub_certify->parsed()) return cmd_certify(cert_graph, cert_rot);
    if (sub_gen->parsed()) return cmd_gen(spec, gen_out);
    if (sub_bench->parsed()) return cmd_bench(bench_kind, bench_sizes, bench_reps, bench_seed);
  } catch (const GraphError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
