#include "planarity/embed.hpp"

#include <numeric>

namespace planarity {

std::vector<std::vector<int>> RotationSystem::lists() const {
  std::vector<std::vector<int>> ls(num_vertices());
  for (int v = 0; v < num_vertices(); ++v) ls[v].assign(at(v).begin(), at(v).end());
  return ls;
}

RotationSystem RotationSystem::from_lists(const std::vector<std::vector<int>>& ls) {
  RotationSystem rot;
  rot.off.assign(ls.size() + 1, 0);
  for (size_t v = 0; v < ls.size(); ++v)
    rot.off[v + 1] = rot.off[v] + static_cast<int>(ls[v].size());
  rot.flat.reserve(rot.off.back());
  for (const auto& l : ls) rot.flat.insert(rot.flat.end(), l.begin(), l.end());
  return rot;
}

// permutation check: every rotation entry sits at its own origin, once
bool rotation_structure_ok(int n, const std::vector<Edge>& edges, const RotationSystem& rot) {
  const int m = static_cast<int>(edges.size());
  if (rot.num_vertices() != n) return false;
  for (const Edge& e : edges)
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) return false;
  std::vector<char> seen(2 * m, 0);
  long long total = 0;
  for (int v = 0; v < n; ++v) {
    for (int h : rot.at(v)) {
      if (h < 0 || h >= 2 * m) return false;
      const Edge& e = edges[h >> 1];
      if (((h & 1) ? e.v : e.u) != v) return false;
      if (seen[h]++) return false;
      ++total;
    }
  }
  return total == 2 * m;
}

EmbedResult build_rotation(const Graph& g, const TremauxData& t, const SortedAdjacency& adj,
                           const LrOutcome& lr) {
  const int n = g.num_vertices();
  const int m = g.num_edges();
  EmbedResult res;
  res.lambda_hat.assign(m, 0);
  std::vector<signed char> neg(m);  // byte-wide shadow: denser under random reads
  for (EdgeId e = 0; e < m; ++e) {
    int s;
    if (t.kind[e] == EdgeKind::Back) {
      s = lr.lambda[e];
    } else {
      const EdgeId ref = lr.ref_edge[e];
      s = ref < 0 ? +1 : lr.lambda[ref];
    }
    res.lambda_hat[e] = s;
    neg[e] = s < 0 ? 1 : 0;
  }

  // Final outgoing order at each vertex: sign -1 edges reversed, then sign +1
  // edges, flattened into one stream so the walks below never leave it.  An
  // entry is the tail halfedge plus whichever companion its kind needs: the
  // far endpoint for tree edges, the bucket key (anchor and side) for back
  // edges.
  std::vector<signed char> neg_at(m);
  for (int i = 0; i < m; ++i) neg_at[i] = neg[adj.out.recs[i].e];
  struct OrdRec {
    int half;  // tail halfedge: edge id << 1, stored-orientation bit 0
    int back;
    int aux;  // head for tree edges, anchor << 1 | side for back edges
  };
  const auto make_ord = [](const OutRec& r, int side) -> OrdRec {
    const int half = 2 * r.e | ((r.kb >> 1) & 1);
    if (r.kb & 1) return {half, 1, static_cast<int>(r.anchor) << 1 | side};
    return {half, 0, r.head};
  };
  const std::vector<int>& ord_off = adj.out.off;  // reordering permutes within slices
  std::vector<OrdRec> ord(m);
  for (Vertex v = 0; v < n; ++v) {
    int at = ord_off[v];
    const int lo = ord_off[v], hi = ord_off[v + 1];
    for (int i = hi - 1; i >= lo; --i)
      if (neg_at[i]) ord[at++] = make_ord(adj.out.recs[i], 0);
    for (int i = lo; i < hi; ++i)
      if (!neg_at[i]) ord[at++] = make_ord(adj.out.recs[i], 1);
  }

  // Bucket the back edges by anchor and side; the encounter order must come
  // from a walk of the reordered lists, so nested returns stack correctly at
  // their heads.  The walk also pins each vertex's entry halfedge.
  struct EncRec {
    int h1;  // head halfedge, ready to place
    int as;  // anchor << 1 | side
  };
  std::vector<EncRec> enc;
  enc.reserve(m);
  std::vector<int> parent_half(n, -1);
  struct Frame {
    Vertex v;
    int i;
  };
  std::vector<Frame> stack;
  stack.push_back({t.root, ord_off[t.root]});
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.i >= ord_off[f.v + 1]) {
      stack.pop_back();
      continue;
    }
    const OrdRec r = ord[f.i];
    ++f.i;
    if (!r.back) {
      parent_half[r.aux] = r.half ^ 1;
      stack.push_back({r.aux, ord_off[r.aux]});
    } else {
      enc.push_back({r.half ^ 1, r.aux});
    }
  }

  // counting sort of the encountered back edges into per-anchor, per-side
  // slots; the two sides of one anchor share a record
  struct C2 {
    int c[2];
  };
  std::vector<C2> cnt(m + 1, {{0, 0}});
  for (const EncRec& x : enc) ++cnt[(x.as >> 1) + 1].c[x.as & 1];
  for (EdgeId e = 0; e < m; ++e) {
    cnt[e + 1].c[0] += cnt[e].c[0];
    cnt[e + 1].c[1] += cnt[e].c[1];
  }
  std::vector<int> slot[2];
  slot[0].resize(cnt[m].c[0]);
  slot[1].resize(cnt[m].c[1]);
  {
    std::vector<C2> fill(cnt.begin(), cnt.end() - 1);
    for (const EncRec& x : enc) {
      const int s = x.as & 1;
      slot[s][fill[x.as >> 1].c[s]++] = x.h1;
    }
  }

  res.rot.off.assign(n + 1, 0);
  for (Vertex v = 0; v < n; ++v) res.rot.off[v + 1] = res.rot.off[v] + g.degree(v);
  res.rot.flat.resize(2 * m);
  int* flat = res.rot.flat.data();
  for (Vertex v = 0; v < n; ++v) {
    int at = res.rot.off[v];
    if (v != t.root) flat[at++] = parent_half[v];
    for (int i = ord_off[v]; i < ord_off[v + 1]; ++i) {
      const int e = ord[i].half >> 1;
      for (int j = cnt[e + 1].c[0] - 1; j >= cnt[e].c[0]; --j) flat[at++] = slot[0][j];
      flat[at++] = ord[i].half;
      for (int j = cnt[e + 1].c[1] - 1; j >= cnt[e].c[1]; --j) flat[at++] = slot[1][j];
    }
  }
  return res;
}

// face-walk table: nxt[h] = entry after h in the rotation at h's own vertex,
// so one orbit step (into the face on the left) is h = nxt[h ^ 1]
static std::vector<int> rotation_successors(int H, const RotationSystem& rot) {
  std::vector<int> nxt(H, -1);
  for (int v = 0, n = rot.num_vertices(); v < n; ++v) {
    const int lo = rot.off[v], hi = rot.off[v + 1];
    for (int i = lo; i < hi; ++i) nxt[rot.flat[i]] = rot.flat[i + 1 == hi ? lo : i + 1];
  }
  return nxt;
}

std::vector<int> face_sizes(int num_edges, const RotationSystem& rot) {
  const int H = 2 * num_edges;
  const std::vector<int> nxt = rotation_successors(H, rot);
  std::vector<char> seen(H, 0);
  std::vector<int> sizes;
  for (int h0 = 0; h0 < H; ++h0) {
    if (seen[h0]) continue;
    int len = 0;
    int h = h0;
    do {
      seen[h] = 1;
      ++len;
      h = nxt[h ^ 1];
    } while (h != h0);
    sizes.push_back(len);
  }
  return sizes;
}

int count_face_orbits(int num_edges, const RotationSystem& rot) {
  return static_cast<int>(face_sizes(num_edges, rot).size());
}

bool rotation_matches(const Graph& g, const RotationSystem& rot) {
  return rotation_structure_ok(g.num_vertices(), g.edges(), rot);
}

bool certify_rotation(int n, const std::vector<Edge>& edges, const RotationSystem& rot) {
  if (!rotation_structure_ok(n, edges, rot)) return false;
  const int m = static_cast<int>(edges.size());

  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (const Edge& e : edges) parent[find(e.u)] = find(e.v);

  std::vector<long long> nv(n, 0), me(n, 0), fo(n, 0);
  for (int v = 0; v < n; ++v) ++nv[find(v)];
  for (const Edge& e : edges) ++me[find(e.u)];

  const int H = 2 * m;
  const std::vector<int> nxt = rotation_successors(H, rot);
  std::vector<char> seen(H, 0);
  for (int h0 = 0; h0 < H; ++h0) {
    if (seen[h0]) continue;
    ++fo[find((h0 & 1) ? edges[h0 >> 1].v : edges[h0 >> 1].u)];
    int h = h0;
    do {
      seen[h] = 1;
      h = nxt[h ^ 1];
    } while (h != h0);
  }

  for (int v = 0; v < n; ++v) {
    if (find(v) != v) continue;
    const long long faces = fo[v] + (me[v] == 0 ? 1 : 0);
    if (nv[v] - me[v] + faces != 2) return false;
  }
  return true;
}

bool certify(const Graph& g, const RotationSystem& rot) {
  return certify_rotation(g.num_vertices(), g.edges(), rot);
}

int trace_faces(const Graph& g, const RotationSystem& rot) {
  int edgeless = 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    if (g.degree(v) == 0) ++edgeless;
  return count_face_orbits(g.num_edges(), rot) + edgeless;
}

}  // namespace planarity
