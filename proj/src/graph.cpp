#include "planarity/graph.hpp"

namespace planarity {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n_ < 1) throw VertexOutOfRangeError("graph needs at least one vertex");
  inc_off_.assign(n_ + 1, 0);
  for (EdgeId e = 0; e < static_cast<EdgeId>(edges_.size()); ++e) {
    const Edge& ed = edges_[e];
    if (ed.u < 0 || ed.u >= n_ || ed.v < 0 || ed.v >= n_)
      throw VertexOutOfRangeError("edge " + std::to_string(e) + " endpoint out of range");
    if (ed.u == ed.v)
      throw LoopEdgeError("edge " + std::to_string(e) + " is a loop at vertex " +
                          std::to_string(ed.u));
    ++inc_off_[ed.u + 1];
    ++inc_off_[ed.v + 1];
  }
  for (Vertex v = 0; v < n_; ++v) inc_off_[v + 1] += inc_off_[v];
  inc_flat_.resize(inc_off_[n_]);
  std::vector<int> cur(inc_off_.begin(), inc_off_.end() - 1);
  for (EdgeId e = 0; e < static_cast<EdgeId>(edges_.size()); ++e) {
    const Edge& ed = edges_[e];
    inc_flat_[cur[ed.u]++] = {e, ed.v};
    inc_flat_[cur[ed.v]++] = {e, ed.u};
  }
}

std::vector<int> connected_components(const Graph& g) {
  std::vector<int> comp(g.num_vertices(), -1);
  std::vector<Vertex> stack;
  int c = 0;
  for (Vertex s = 0; s < g.num_vertices(); ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = c;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (const auto& [e, w] : g.incident(v)) {
        (void)e;
        if (comp[w] < 0) {
          comp[w] = c;
          stack.push_back(w);
        }
      }
    }
    ++c;
  }
  return comp;
}

int num_components(const std::vector<int>& comp) {
  int c = 0;
  for (int x : comp) c = x >= c ? x + 1 : c;
  return c;
}

}  // namespace planarity
