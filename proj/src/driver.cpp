#include "planarity/driver.hpp"

#include "planarity/lrtest.hpp"

namespace planarity {

AnalysisResult analyze(const Graph& g, bool want_trace) {
  const int n = g.num_vertices();
  const int m = g.num_edges();
  AnalysisResult res;
  res.lambda.assign(m, 0);
  res.lambda_hat.assign(m, 0);
  res.rot.off.assign(n + 1, 0);

  if (m > 0) {
    // probe connectivity with the tree walk itself; fall through on a miss
    TremauxData t;
    bool connected = true;
    try {
      t = run_dfs(g);
    } catch (const NotConnectedError&) {
      connected = false;
    }
    if (connected) {
      const SortedAdjacency adj = tt_sort(g, t);
      TraceHook hook;
      if (want_trace)
        hook = [&res, &t](const VertexStep& s) {
          res.trace += "v=" + std::to_string(s.v + 1) + ": CS((" +
                       std::to_string(t.tail[s.enter] + 1) + ',' +
                       std::to_string(t.head[s.enter] + 1) + ")) = " + s.merged + '\n';
          if (s.deletion) res.trace += "  -> " + s.after_deletion + " (deletion)\n";
        };
      LrOutcome lr = test_planarity(g, t, adj, hook);
      if (!lr.planar) return res;
      EmbedResult emb = build_rotation(g, t, adj, lr);
      res.lambda = std::move(lr.lambda);
      res.lambda_hat = std::move(emb.lambda_hat);
      res.rot = std::move(emb.rot);
      res.faces = count_face_orbits(m, res.rot);
      res.planar = true;
      return res;
    }
  }

  const std::vector<int> comp = connected_components(g);
  const int nc = num_components(comp);

  for (Vertex v = 0; v < n; ++v) res.rot.off[v + 1] = res.rot.off[v] + g.degree(v);
  res.rot.flat.resize(2 * m);

  std::vector<int> local_id(n, -1);
  std::vector<std::vector<Vertex>> verts(nc);
  for (Vertex v = 0; v < n; ++v) {
    local_id[v] = static_cast<int>(verts[comp[v]].size());
    verts[comp[v]].push_back(v);
  }
  std::vector<std::vector<EdgeId>> edge_ids(nc);
  for (EdgeId e = 0; e < m; ++e) edge_ids[comp[g.edge(e).u]].push_back(e);

  for (int c = 0; c < nc; ++c) {
    if (edge_ids[c].empty()) {  // isolated vertex: trivially embedded
      res.faces += 1;
      continue;
    }
    std::vector<Edge> local_edges;
    local_edges.reserve(edge_ids[c].size());
    for (EdgeId e : edge_ids[c])
      local_edges.push_back({local_id[g.edge(e).u], local_id[g.edge(e).v]});
    const Graph sub(static_cast<int>(verts[c].size()), local_edges);

    const TremauxData t = run_dfs(sub);
    const SortedAdjacency adj = tt_sort(sub, t);

    TraceHook hook;
    if (want_trace) {
      if (nc > 1) res.trace += "# component " + std::to_string(c + 1) + '\n';
      hook = [&res, &t](const VertexStep& s) {
        res.trace += "v=" + std::to_string(s.v + 1) + ": CS((" +
                     std::to_string(t.tail[s.enter] + 1) + ',' +
                     std::to_string(t.head[s.enter] + 1) + ")) = " + s.merged + '\n';
        if (s.deletion) res.trace += "  -> " + s.after_deletion + " (deletion)\n";
      };
    }
    const LrOutcome lr = test_planarity(sub, t, adj, hook);
    if (!lr.planar) return res;

    const EmbedResult emb = build_rotation(sub, t, adj, lr);
    for (size_t i = 0; i < edge_ids[c].size(); ++i) {
      res.lambda[edge_ids[c][i]] = lr.lambda[i];
      res.lambda_hat[edge_ids[c][i]] = emb.lambda_hat[i];
    }
    for (size_t i = 0; i < verts[c].size(); ++i) {
      int at = res.rot.off[verts[c][i]];
      for (const int h : emb.rot.at(static_cast<Vertex>(i)))
        res.rot.flat[at++] = 2 * edge_ids[c][h >> 1] + (h & 1);
    }
    res.faces += count_face_orbits(static_cast<int>(local_edges.size()), emb.rot);
  }
  res.planar = true;
  return res;
}

}  // namespace planarity
