#include "planarity/lrtest.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace planarity {

void SignedForest::relate(int a, int b, int opposite) {
  auto [ra, pa] = find(a);
  auto [rb, pb] = find(b);
  if (ra == rb) {
    if ((pa ^ pb) != opposite) throw std::logic_error("constraint forest contradiction");
    return;
  }
  int par = pa ^ pb ^ opposite;  // parity between the two roots, symmetric
  if (rank_[ra] > rank_[rb]) std::swap(ra, rb);
  link_[ra] = rb << 1 | par;
  if (rank_[ra] == rank_[rb]) ++rank_[rb];
}

std::pair<int, int> SignedForest::find(int a) {
  int root = a, par = 0;
  while (link_[root] >= 0) {
    par ^= link_[root] & 1;
    root = link_[root] >> 1;
  }
  int cur = a, cp = par;
  while (link_[cur] >= 0) {
    int next = link_[cur] >> 1;
    int np = cp ^ (link_[cur] & 1);
    link_[cur] = root << 1 | cp;
    cur = next;
    cp = np;
  }
  return {root, par};
}

ConstraintStacks::ConstraintStacks(const Graph& g, const TremauxData& t,
                                   const SortedAdjacency& adj)
    : t_(t), ent_(g.num_edges()), forest_(g.num_edges()) {
  for (EdgeId e = 0; e < g.num_edges(); ++e) ent_[e] = {-1, adj.key[e]};
}

// Stacks are threaded top-to-bottom through the below links; an entry is the
// bottom of its stack exactly when its link is unset.
void ConstraintStacks::concat(EntryStack& dst, const EntryStack& src) {
  if (src.empty()) return;
  if (dst.empty()) {
    dst = src;
    return;
  }
  ent_[src.bottom].below = dst.top;
  dst.top = src.top;
}

void ConstraintStacks::pop(EntryStack& s) {
  if (s.top == s.bottom) {
    s.top = s.bottom = -1;
  } else {
    s.top = ent_[s.top].below;
  }
}

ConstraintStacks::System ConstraintStacks::singleton(EdgeId back_edge) {
  System cs(1);
  cs[0].side[0].top = cs[0].side[0].bottom = back_edge;
  return cs;
}

bool ConstraintStacks::merge(System& acc, System&& in, int a, int b) {
  if (in.empty()) return true;
  if (acc.empty()) {
    acc = std::move(in);
    return true;
  }

  // Every accumulated bundle returning strictly below b now interlaces the
  // incoming edge: collapse those pairs onto a single side.
  const size_t k = acc.size();
  size_t jj = k;
  while (jj > 0) {
    const StackPair& pr = acc[jj - 1];
    if (std::max(top_depth(pr.side[0]), top_depth(pr.side[1])) <= b) break;
    --jj;
  }
  const bool fused = jj < k;
  if (fused) {
    StackPair& fp = acc[jj];
    const bool deep0 = top_depth(fp.side[0]) > b;
    const bool deep1 = top_depth(fp.side[1]) > b;
    if (deep0 && deep1) return false;
    if (deep1) std::swap(fp.side[0], fp.side[1]);
    for (size_t i = jj + 1; i < k; ++i) {
      StackPair& pr = acc[i];
      if (!pr.side[0].empty() && !pr.side[1].empty()) return false;
      concat(fp.side[0], pr.side[0].empty() ? pr.side[1] : pr.side[0]);
    }
    acc.resize(jj + 1);
  }

  // Entries returning exactly at the vertex's own shallowest level extend the
  // bottom bundle; everything deeper must hold together on one side.
  const size_t p = in.size();
  size_t q0 = 0;
  {
    StackPair& bp = in[0];
    if (!bp.side[0].empty() && !bp.side[1].empty()) return false;
    EntryStack& content = bp.side[0].empty() ? bp.side[1] : bp.side[0];
    if (!content.empty() && low_depth(content.bottom) == a) {
      StackPair& dst = acc[0];
      concat(dst.side[0].empty() ? dst.side[1] : dst.side[0], content);
      q0 = 1;
    }
  }
  if (fused) {
    StackPair& fp = acc[jj];
    for (size_t i = q0; i < p; ++i) {
      StackPair& pr = in[i];
      if (!pr.side[0].empty() && !pr.side[1].empty()) return false;
      const bool was_empty = fp.side[1].empty();
      concat(fp.side[1], pr.side[0].empty() ? pr.side[1] : pr.side[0]);
      if (was_empty && !fp.side[1].empty() && !fp.side[0].empty())
        forest_.relate(fp.side[0].top, fp.side[1].bottom, 1);
    }
  } else {
    StackPair np;
    for (size_t i = q0; i < p; ++i) {
      StackPair& pr = in[i];
      if (!pr.side[0].empty() && !pr.side[1].empty()) return false;
      concat(np.side[0], pr.side[0].empty() ? pr.side[1] : pr.side[0]);
    }
    if (!np.side[0].empty()) acc.push_back(np);
  }
  return true;
}

bool ConstraintStacks::remove_level(System& cs, int u_depth) {
  bool popped = false;
  while (!cs.empty()) {
    StackPair& pr = cs.back();
    for (EntryStack& st : pr.side) {
      while (!st.empty() && low_depth(st.top) == u_depth) {
        EdgeId e = st.top;
        if (ent_[e].below >= 0) forest_.relate(e, ent_[e].below, 0);
        pop(st);
        popped = true;
      }
    }
    // boundaries between pairs need not be strict: keep draining
    if (pr.side[0].empty() && pr.side[1].empty()) {
      cs.pop_back();
    } else {
      break;
    }
  }
  return popped;
}

EdgeId ConstraintStacks::top_witness(const System& cs) const {
  if (cs.empty()) return -1;
  const StackPair& pr = cs.back();
  const EdgeId c0 = pr.side[0].top, c1 = pr.side[1].top;
  if (c0 < 0) return c1;
  if (c1 < 0) return c0;
  return low_depth(c1) > low_depth(c0) ? c1 : c0;
}

std::string ConstraintStacks::stack_text(const EntryStack& s) const {
  if (s.empty()) return "-";
  std::string out;
  for (EdgeId e = s.top;; e = ent_[e].below) {
    if (e != s.top) out += ',';
    out += '(' + std::to_string(t_.tail[e] + 1) + ',' + std::to_string(t_.head[e] + 1) + ')';
    if (e == s.bottom) break;
  }
  return out;
}

std::string ConstraintStacks::render(const System& cs) const {
  if (cs.empty()) return "empty";
  std::string out;
  for (size_t i = 0; i < cs.size(); ++i) {
    if (i) out += ", ";
    const StackPair& pr = cs[i];
    const EntryStack& first = pr.side[0].empty() ? pr.side[1] : pr.side[0];
    const EntryStack& second = &first == &pr.side[0] ? pr.side[1] : pr.side[0];
    out += '[' + stack_text(first) + '|' + stack_text(second) + ']';
  }
  return out;
}

LrOutcome test_planarity(const Graph& g, const TremauxData& t, const SortedAdjacency& adj,
                         const TraceHook& hook) {
  const int m = g.num_edges();
  ConstraintStacks cs(g, t, adj);
  // One stored system per vertex (for the tree edge entering it).  A child's
  // buffer is dead once merged into its parent, so buffers cycle through a
  // pool instead of hitting the allocator at every vertex.
  std::vector<ConstraintStacks::System> store(g.num_vertices());
  std::vector<ConstraintStacks::System> pool;
  ConstraintStacks::System single;
  const auto recycle = [&pool](ConstraintStacks::System&& dead) {
    if (dead.capacity() > 0 && pool.size() < 64) pool.push_back(std::move(dead));
  };
  LrOutcome out;
  out.lambda.assign(m, 0);
  out.ref_edge.assign(m, -1);

  struct Frame {
    Vertex v;
    int i;
  };
  std::vector<Frame> stack;
  stack.push_back({t.root, adj.out.off[t.root]});
  while (!stack.empty()) {
    Frame& f = stack.back();
    const Vertex v = f.v;
    if (f.i < adj.out.off[v + 1]) {
      const OutRec& r = adj.out.recs[f.i];
      ++f.i;
      if (!(r.kb & 1)) stack.push_back({r.head, adj.out.off[r.head]});
      continue;
    }
    stack.pop_back();
    if (stack.empty()) break;  // root: nothing above to constrain

    EdgeId enter = t.parent_edge[v];
    ConstraintStacks::System acc;
    const int a = t.vlowd[v];
    const int lo = adj.out.off[v], hi = adj.out.off[v + 1];
    for (int i = lo; i < hi; ++i) {
      const OutRec oi = adj.out.recs[i];
      ConstraintStacks::System* in;
      if (oi.kb & 1) {
        single.resize(1);
        single[0] = {};
        single[0].side[0].top = single[0].side[0].bottom = oi.e;
        in = &single;
      } else {
        in = &store[oi.head];
      }
      if (in->empty()) continue;
      if (acc.empty()) {
        if (in == &single) {
          // seed from a recycled buffer; copying one element is free
          if (!pool.empty()) {
            acc = std::move(pool.back());
            pool.pop_back();
            acc.clear();
          }
          acc.push_back(single[0]);
        } else {
          acc = std::move(*in);  // steal the child's storage outright
        }
        continue;
      }
      // the sort key encodes the return depth in its upper bits
      if (!cs.merge(acc, std::move(*in), a, oi.kb >> 3)) return out;  // not planar
      if (in != &single) recycle(std::move(*in));
    }
    std::string merged_txt;
    if (hook) merged_txt = cs.render(acc);
    const bool deleted = cs.remove_level(acc, t.depth[v] - 1);
    if (hook) {
      VertexStep step;
      step.v = v;
      step.enter = enter;
      step.merged = std::move(merged_txt);
      step.deletion = deleted;
      if (deleted) step.after_deletion = cs.render(acc);
      hook(step);
    }
    out.ref_edge[enter] = cs.top_witness(acc);
    store[v] = std::move(acc);
  }

  out.planar = true;
  for (EdgeId e = 0; e < m; ++e)
    if (t.kind[e] == EdgeKind::Back) out.lambda[e] = cs.forest().find(e).second ? -1 : +1;
  return out;
}

std::string trace_text(const Graph& g, const TremauxData& t, const SortedAdjacency& adj) {
  std::string out;
  auto hook = [&out, &t](const VertexStep& s) {
    out += "v=" + std::to_string(s.v + 1) + ": CS((" + std::to_string(t.tail[s.enter] + 1) +
           ',' + std::to_string(t.head[s.enter] + 1) + ")) = " + s.merged + '\n';
    if (s.deletion) out += "  -> " + s.after_deletion + " (deletion)\n";
  };
  test_planarity(g, t, adj, hook);
  return out;
}

}  // namespace planarity
