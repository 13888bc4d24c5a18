#include "planarity/oracle.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <unordered_set>

namespace planarity {

namespace {

constexpr long long kWorkGuard = 10'000'000;

// Rotation enumeration for one component: the first half-edge of every vertex
// is pinned (rotations are counted up to cyclic shifts), the rest odometer
// through their permutations.
bool component_embeddable(const Graph& g, const std::vector<Vertex>& verts,
                          const std::vector<int>& origin) {
  const int m = g.num_edges();
  long long m_c = 0;
  std::vector<std::vector<int>> rot(g.num_vertices());
  for (Vertex v : verts) {
    auto& l = rot[v];
    for (const auto& [e, w] : g.incident(v)) l.push_back(g.edge(e).u == v ? 2 * e : 2 * e + 1);
    m_c += static_cast<long long>(l.size());
    if (l.size() > 2) std::sort(l.begin() + 1, l.end());
  }
  m_c /= 2;
  if (m_c == 0) return true;

  std::vector<int> pos(2 * m, -1), seen(2 * m, 0);
  int epoch = 0;
  const long long target = 2 - static_cast<long long>(verts.size()) + m_c;

  auto advance = [&]() {
    for (Vertex v : verts) {
      auto& l = rot[v];
      if (l.size() > 2 && std::next_permutation(l.begin() + 1, l.end())) return true;
    }
    return false;
  };

  do {
    for (Vertex v : verts)
      for (int i = 0; i < static_cast<int>(rot[v].size()); ++i) pos[rot[v][i]] = i;
    ++epoch;
    long long orbits = 0;
    for (Vertex v : verts) {
      for (int h0 : rot[v]) {
        if (seen[h0] == epoch) continue;
        ++orbits;
        int h = h0;
        do {
          seen[h] = epoch;
          const int tw = h ^ 1;
          const auto& l = rot[origin[tw]];
          h = l[(pos[tw] + 1) % l.size()];
        } while (h != h0);
      }
    }
    if (orbits == target) return true;
  } while (advance());
  return false;
}

}  // namespace

bool brute_planar(const Graph& g) {
  const int n = g.num_vertices();
  const int m = g.num_edges();
  long long work = 1;
  for (Vertex v = 0; v < n; ++v)
    for (int i = 2; i <= g.degree(v) - 1; ++i) {
      work *= i;
      if (work > kWorkGuard) throw TooLargeError("rotation search space beyond guard");
    }

  std::vector<int> origin(2 * m);
  for (EdgeId e = 0; e < m; ++e) {
    origin[2 * e] = g.edge(e).u;
    origin[2 * e + 1] = g.edge(e).v;
  }
  const std::vector<int> comp = connected_components(g);
  const int nc = num_components(comp);
  std::vector<std::vector<Vertex>> members(nc);
  for (Vertex v = 0; v < n; ++v) members[comp[v]].push_back(v);
  for (const auto& verts : members)
    if (!component_embeddable(g, verts, origin)) return false;
  return true;
}

bool check_strong_fcoloring(const Graph& g, const TremauxData& t,
                            const std::vector<int>& lambda) {
  const int m = g.num_edges();

  auto in_subtree = [&t](Vertex w, Vertex v) {
    while (w >= 0 && t.depth[w] >= t.depth[v]) {
      if (w == v) return true;
      w = t.parent[w];
    }
    return false;
  };
  auto low_of = [&](EdgeId e) {
    if (t.kind[e] == EdgeKind::Back) return t.head[e];
    Vertex best = t.tail[e];
    for (EdgeId f = 0; f < m; ++f)
      if (t.kind[f] == EdgeKind::Back && in_subtree(t.tail[f], t.head[e]) &&
          t.depth[t.head[f]] < t.depth[best])
        best = t.head[f];
    return best;
  };
  auto fringe = [&](EdgeId e) {
    std::vector<EdgeId> out;
    if (t.kind[e] == EdgeKind::Back) {
      out.push_back(e);
      return out;
    }
    for (EdgeId f = 0; f < m; ++f)
      if (t.kind[f] == EdgeKind::Back && in_subtree(t.tail[f], t.head[e]) &&
          t.depth[t.head[f]] < t.depth[t.tail[e]])
        out.push_back(f);
    return out;
  };
  auto interlaced = [&](EdgeId e1, EdgeId e2) {
    std::vector<EdgeId> out;
    const int cut = t.depth[low_of(e2)];
    for (EdgeId f : fringe(e1))
      if (t.depth[t.head[f]] > cut) out.push_back(f);
    return out;
  };
  auto mono = [&lambda](const std::vector<EdgeId>& s) {
    for (EdgeId f : s)
      if (lambda[f] != lambda[s.front()]) return false;
    return true;
  };

  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    std::vector<EdgeId> out;
    for (EdgeId e = 0; e < m; ++e)
      if (t.tail[e] == v) out.push_back(e);
    for (size_t i = 0; i < out.size(); ++i)
      for (size_t j = i + 1; j < out.size(); ++j) {
        const auto s12 = interlaced(out[i], out[j]);
        const auto s21 = interlaced(out[j], out[i]);
        if (!mono(s12) || !mono(s21)) return false;
        if (!s12.empty() && !s21.empty() && lambda[s12.front()] == lambda[s21.front()])
          return false;
      }
    // every back edge reaching the subtree's shallowest return agrees
    Vertex u = v;
    for (EdgeId f = 0; f < m; ++f)
      if (t.kind[f] == EdgeKind::Back && in_subtree(t.tail[f], v) &&
          t.depth[t.head[f]] < t.depth[u])
        u = t.head[f];
    std::vector<EdgeId> bundle;
    for (EdgeId f = 0; f < m; ++f)
      if (t.kind[f] == EdgeKind::Back && in_subtree(t.tail[f], v) && t.head[f] == u)
        bundle.push_back(f);
    if (!mono(bundle)) return false;
  }
  return true;
}

namespace {
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }
}  // namespace

Graph gen_complete(int n) {
  if (n < 1) throw InvalidSpecError("complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Graph(n, edges);
}

Graph gen_complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) throw InvalidSpecError("bipartite graph needs a, b >= 1");
  std::vector<Edge> edges;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) edges.push_back({u, a + v});
  return Graph(a + b, edges);
}

Graph gen_subdivide(const Graph& base, int k) {
  if (k < 0) throw InvalidSpecError("subdivision needs k >= 0");
  const int n = base.num_vertices();
  const int m = base.num_edges();
  std::vector<Edge> edges;
  for (EdgeId e = 0; e < m; ++e) {
    const Edge be = base.edge(e);
    if (k == 0) {
      edges.push_back(be);
      continue;
    }
    int prev = be.u;
    for (int j = 0; j < k; ++j) {
      const int w = n + e * k + j;
      edges.push_back({prev, w});
      prev = w;
    }
    edges.push_back({prev, be.v});
  }
  return Graph(n + m * k, edges);
}

Graph gen_triangulation(int n, std::uint64_t seed) {
  if (n < 3) throw InvalidSpecError("triangulation needs n >= 3");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges = {{0, 1}, {1, 2}, {0, 2}};
  std::vector<std::array<int, 3>> faces = {{0, 1, 2}, {0, 1, 2}};
  for (int v = 3; v < n; ++v) {
    const size_t idx = draw(rng, faces.size());
    const auto [a, b, c] = faces[idx];
    faces[idx] = faces.back();
    faces.pop_back();
    edges.push_back({v, a});
    edges.push_back({v, b});
    edges.push_back({v, c});
    faces.push_back({a, b, v});
    faces.push_back({b, c, v});
    faces.push_back({a, c, v});
  }
  return Graph(n, edges);
}

Graph gen_random_connected(int n, int m, std::uint64_t seed) {
  if (n < 1) throw InvalidSpecError("random graph needs n >= 1");
  const long long max_m = static_cast<long long>(n) * (n - 1) / 2;
  if (m < n - 1 || m > max_m) throw InvalidSpecError("edge count infeasible for connected simple graph");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  if (n >= 2) {
    // uniform labeled tree decoded from a random sequence
    std::vector<int> seq(n - 2);
    for (int& s : seq) s = static_cast<int>(draw(rng, n));
    std::vector<int> deg(n, 1);
    for (int s : seq) ++deg[s];
    int ptr = 0;
    while (deg[ptr] != 1) ++ptr;
    int leaf = ptr;
    for (int s : seq) {
      edges.push_back({leaf, s});
      if (--deg[s] == 1 && s < ptr) {
        leaf = s;
      } else {
        ++ptr;
        while (deg[ptr] != 1) ++ptr;
        leaf = ptr;
      }
    }
    edges.push_back({leaf, n - 1});
  }
  std::unordered_set<long long> present;
  auto key = [n](int u, int v) {
    return static_cast<long long>(std::min(u, v)) * n + std::max(u, v);
  };
  for (const Edge& e : edges) present.insert(key(e.u, e.v));
  while (static_cast<int>(edges.size()) < m) {
    const int u = static_cast<int>(draw(rng, n));
    const int v = static_cast<int>(draw(rng, n));
    if (u == v || present.count(key(u, v))) continue;
    present.insert(key(u, v));
    edges.push_back({u, v});
  }
  return Graph(n, edges);
}

Graph generate(const GenSpec& spec) {
  if (spec.kind == "complete") return gen_complete(spec.n);
  if (spec.kind == "bipartite") return gen_complete_bipartite(spec.a, spec.b);
  if (spec.kind == "triangulation") return gen_triangulation(spec.n, spec.seed);
  if (spec.kind == "random") return gen_random_connected(spec.n, spec.m, spec.seed);
  if (spec.kind == "subdivide") {
    Graph base = spec.base == "k5"    ? gen_complete(5)
                 : spec.base == "k4"  ? gen_complete(4)
                 : spec.base == "k33" ? gen_complete_bipartite(3, 3)
                                      : throw InvalidSpecError("unknown subdivision base");
    return gen_subdivide(base, spec.k);
  }
  throw InvalidSpecError("unknown generator kind");
}

}  // namespace planarity
