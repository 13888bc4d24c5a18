#pragma once

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "planarity/driver.hpp"
#include "planarity/io.hpp"
#include "planarity/lrtest.hpp"
#include "planarity/oracle.hpp"

namespace testutil {

using namespace planarity;

// 10 vertices, 17 edges, planar, connected; the edge order pins the search
// tree, the precedence order and therefore the whole trace.
inline Graph g_sample() {
  const std::vector<Edge> edges = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {4, 1},
                                   {3, 5}, {5, 6}, {6, 2}, {6, 7}, {7, 8}, {8, 5},
                                   {8, 6}, {7, 9}, {9, 5}, {9, 6}, {5, 2}};
  return Graph(10, edges);
}

// edge id by 1-based endpoints, either direction; -1 if absent
inline EdgeId eid(const Graph& g, int u1, int v1) {
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    if ((ed.u == u1 - 1 && ed.v == v1 - 1) || (ed.u == v1 - 1 && ed.v == u1 - 1)) return e;
  }
  return -1;
}

inline std::vector<EdgeId> out_edges(const Graph& g, const TremauxData& t, Vertex v) {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < g.num_edges(); ++e)
    if (t.tail[e] == v) out.push_back(e);
  return out;
}

// Literal recursive evaluators for the return points, kept naive on purpose
// so they share nothing with the linear passes they check.
inline Vertex ref_low(const Graph& g, const TremauxData& t, EdgeId e) {
  if (t.kind[e] == EdgeKind::Back) return t.head[e];
  Vertex best = t.tail[e];
  for (EdgeId f : out_edges(g, t, t.head[e])) {
    const Vertex c = ref_low(g, t, f);
    if (t.depth[c] < t.depth[best]) best = c;
  }
  return best;
}

inline Vertex ref_low2(const Graph& g, const TremauxData& t, EdgeId e) {
  if (t.kind[e] == EdgeKind::Back) return -1;
  const Vertex l = ref_low(g, t, e);
  Vertex best = -1;
  for (EdgeId f : out_edges(g, t, t.head[e])) {
    const Vertex c = ref_low(g, t, f) == l ? ref_low2(g, t, f) : ref_low(g, t, f);
    if (c >= 0 && (best < 0 || t.depth[c] < t.depth[best])) best = c;
  }
  return best;
}

inline Vertex ref_vlow(const Graph& g, const TremauxData& t, Vertex v) {
  Vertex best = v;
  for (EdgeId f : out_edges(g, t, v)) {
    const Vertex c = ref_low(g, t, f);
    if (t.depth[c] < t.depth[best]) best = c;
  }
  return best;
}

inline bool connected(const Graph& g) { return num_components(connected_components(g)) == 1; }

// every connected simple graph on n labeled vertices, by edge subset
inline std::vector<Graph> all_connected_graphs(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  std::vector<Graph> out;
  for (unsigned mask = 0; mask < (1u << pairs.size()); ++mask) {
    std::vector<Edge> edges;
    for (size_t i = 0; i < pairs.size(); ++i)
      if (mask >> i & 1) edges.push_back({pairs[i].first, pairs[i].second});
    Graph g(n, std::move(edges));
    if (connected(g)) out.push_back(std::move(g));
  }
  return out;
}

inline std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct CmdResult {
  int status = -1;
  std::string out;
};

// run through the shell, capture stdout; redirect stderr in the command text
inline CmdResult run_cmd(const std::string& cmd) {
  CmdResult r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
  const int st = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

}  // namespace testutil
