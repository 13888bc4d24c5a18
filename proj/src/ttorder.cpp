#include "planarity/ttorder.hpp"

namespace planarity {

SortedAdjacency tt_sort(const Graph& g, const TremauxData& t) {
  const int n = g.num_vertices();
  const int m = g.num_edges();
  SortedAdjacency adj;
  adj.key.assign(m, 0);

  // counting sort over all edges at once: keys are bounded by 2n+1, and edge
  // ids within a key rise, so the keyed sequence is a stable sort of every
  // adjacency simultaneously (incidence order at a vertex = edge id order)
  std::vector<int> kcnt(2 * n + 3, 0);
  for (EdgeId e = 0; e < m; ++e) {
    const int k = 2 * t.lowd[e] + (t.cls[e] == EdgeClass::Thick ? 1 : 0);
    adj.key[e] = k;
    ++kcnt[k + 1];
  }
  for (size_t k = 1; k < kcnt.size(); ++k) kcnt[k] += kcnt[k - 1];

  // the keyed intermediate carries the finished record plus its tail, so the
  // second scatter consumes one sequential stream instead of chasing edge ids
  struct KeyedRec {
    OutRec r;
    Vertex tail;
  };
  std::vector<KeyedRec> tmp(m);
  {
    std::vector<int> cur(kcnt.begin(), kcnt.end() - 1);
    for (EdgeId e = 0; e < m; ++e) {
      const int flip = g.edge(e).u == t.tail[e] ? 0 : 2;
      tmp[cur[adj.key[e]]++] = {{e, adj.key[e] << 2 | flip | (t.kind[e] == EdgeKind::Back ? 1 : 0),
                                 t.head[e], t.init_anchor[e]},
                                t.tail[e]};
    }
  }

  // scatter the keyed sequence into per-tail slices, preserving its order
  adj.out.off.assign(n + 1, 0);
  for (EdgeId e = 0; e < m; ++e) ++adj.out.off[t.tail[e] + 1];
  for (Vertex v = 0; v < n; ++v) adj.out.off[v + 1] += adj.out.off[v];
  adj.out.recs.resize(m);
  {
    std::vector<int> cur(adj.out.off.begin(), adj.out.off.end() - 1);
    for (const KeyedRec& kr : tmp) adj.out.recs[cur[kr.tail]++] = kr.r;
  }
  return adj;
}

}  // namespace planarity
