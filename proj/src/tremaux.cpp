#include "planarity/tremaux.hpp"

#include <cassert>

namespace planarity {

TremauxData run_dfs(const Graph& g, Vertex root) {
  const int n = g.num_vertices();
  const int m = g.num_edges();
  if (root < 0 || root >= n) throw VertexOutOfRangeError("dfs root out of range");

  TremauxData t;
  t.root = root;
  t.parent.assign(n, -1);
  t.parent_edge.assign(n, -1);
  t.depth.assign(n, -1);
  t.preorder.reserve(n);
  t.cls.assign(m, EdgeClass::Thin);

  // One 16-byte slot per edge so a scattered touch costs one line.  The slot
  // lives two lives: the walk fills {tail, head, anchor, depth(head)}, and
  // once those are streamed out to the column arrays the return-point pass
  // reuses the same fields as {low, lowd, low2, low2d}.
  struct Rec {
    Vertex s0;
    int s1;
    Vertex s2;
    int s3;
  };
  std::vector<Rec> rec(m);
  std::vector<char> edge_done(m, 0);
  std::vector<int> cursor(n, 0);
  std::vector<EdgeId> active_child(n, -1);  // tree edge currently open below v
  std::vector<int> pdepth;                  // depth per preorder slot
  pdepth.reserve(n);
  std::vector<Vertex> stack;

  t.depth[root] = 0;
  t.preorder.push_back(root);
  pdepth.push_back(0);
  stack.push_back(root);
  while (!stack.empty()) {
    Vertex v = stack.back();
    const auto inc = g.incident(v);
    bool descended = false;
    while (cursor[v] < inc.size()) {
      auto [e, w] = inc[cursor[v]];
      ++cursor[v];
      if (edge_done[e]) continue;
      edge_done[e] = 1;
      if (t.depth[w] < 0) {
        rec[e] = {v, w, -1, 0};
        t.parent[w] = v;
        t.parent_edge[w] = e;
        t.depth[w] = t.depth[v] + 1;
        t.preorder.push_back(w);
        pdepth.push_back(t.depth[w]);
        active_child[v] = e;
        stack.push_back(w);
        descended = true;
        break;
      }
      // w was reached earlier and the edge was never walked from its side, so
      // w is still open, i.e. a proper ancestor of v: orient the edge down.
      assert(active_child[w] >= 0);
      rec[e] = {v, w, active_child[w], t.depth[w]};
    }
    if (!descended) stack.pop_back();
  }

  for (Vertex v = 0; v < n; ++v)
    if (t.depth[v] < 0)
      throw NotConnectedError("vertex " + std::to_string(v + 1) + " unreachable from dfs root");

  // flat out-lists grouped by tail (order within a vertex is irrelevant here)
  std::vector<int> ooff(n + 1, 0);
  for (EdgeId e = 0; e < m; ++e) ++ooff[rec[e].s0 + 1];
  for (Vertex v = 0; v < n; ++v) ooff[v + 1] += ooff[v];
  std::vector<EdgeId> oflat(m);
  {
    std::vector<int> cur(ooff.begin(), ooff.end() - 1);
    for (EdgeId e = 0; e < m; ++e) oflat[cur[rec[e].s0]++] = e;
  }

  // stream the walk facts out, then retire tail/anchor: back-edge slots turn
  // into their final {low, lowd, none, none} right away, tree-edge slots keep
  // head until their tail's visit below overwrites them in place
  t.kind.resize(m);
  t.tail.resize(m);
  t.head.resize(m);
  t.init_anchor.resize(m);
  for (EdgeId e = 0; e < m; ++e) {
    Rec& r = rec[e];
    t.kind[e] = r.s2 < 0 ? EdgeKind::Tree : EdgeKind::Back;
    t.tail[e] = r.s0;
    t.head[e] = r.s1;
    t.init_anchor[e] = r.s2;
    if (r.s2 >= 0) r = {r.s1, r.s3, -1, -1};
  }

  // Children are discovered after their parent, so reverse discovery order
  // sees every subtree before the edge entering it.  The tail of every edge
  // handled here is v itself, so the return-behaviour classification falls
  // out of the same pass at no extra cost.
  struct VL {
    Vertex v;
    int d;
  };
  std::vector<VL> vl(n);
  for (int i = n - 1; i >= 0; --i) {
    const Vertex v = t.preorder[i];
    const int dv = pdepth[i];
    Vertex lo = v;
    int lod = dv;
    for (int j = ooff[v]; j < ooff[v + 1]; ++j) {
      const EdgeId e = oflat[j];
      Rec& r = rec[e];
      if (t.kind[e] == EdgeKind::Tree) {
        const Vertex w = r.s1;  // head, still intact for an unprocessed tree edge
        const VL sub = vl[w];
        Vertex elow;
        int elowd;
        if (sub.d < dv) {
          elow = sub.v;
          elowd = sub.d;
        } else {
          elow = v;
          elowd = dv;
        }
        Vertex l2 = -1;
        int l2d = 0;
        for (int jj = ooff[w]; jj < ooff[w + 1]; ++jj) {
          const Rec& rg = rec[oflat[jj]];
          Vertex cand;
          int candd;
          if (rg.s0 == elow) {
            cand = rg.s2;
            candd = rg.s3;
          } else {
            cand = rg.s0;
            candd = rg.s1;
          }
          if (cand >= 0 && (l2 < 0 || candd < l2d)) {
            l2 = cand;
            l2d = candd;
          }
        }
        r = {elow, elowd, l2, l2 < 0 ? -1 : l2d};
        if (elowd >= dv)
          t.cls[e] = EdgeClass::Block;
        else if (l2 >= 0 && l2d < dv)
          t.cls[e] = EdgeClass::Thick;
      }
      // back edges return below their tail with a bare attachment: Thin as
      // initialized
      if (r.s1 < lod) {
        lo = r.s0;
        lod = r.s1;
      }
    }
    vl[v] = {lo, lod};
  }

  t.low.resize(m);
  t.low2.resize(m);
  t.lowd.resize(m);
  for (EdgeId e = 0; e < m; ++e) {
    const Rec& r = rec[e];
    t.low[e] = r.s0;
    t.low2[e] = r.s2;
    t.lowd[e] = r.s1;
  }
  t.vlow.resize(n);
  t.vlowd.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    t.vlow[v] = vl[v].v;
    t.vlowd[v] = vl[v].d;
  }

  return t;
}

}  // namespace planarity
