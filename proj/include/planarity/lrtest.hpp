#pragma once

#include <functional>
#include <string>

#include "planarity/ttorder.hpp"

namespace planarity {

// Union-find over back-edge ids where every link carries a sign: members of a
// class are forced equal or forced opposite to their root.  Structural checks
// in the caller fire before any contradicting link could be recorded, so a
// contradiction here is an internal error.
class SignedForest {
 public:
  explicit SignedForest(int n) : link_(n, -1), rank_(n, 0) {}

  void relate(int a, int b, int opposite);  // opposite: 0 or 1
  std::pair<int, int> find(int a);          // (root, parity vs root)
  bool related(int a, int b) { return find(a).first == find(b).first; }

 private:
  // -1 for a root, else parent<<1 | parity-to-parent: one word per hop
  std::vector<int> link_;
  std::vector<unsigned char> rank_;
};

struct EntryStack {
  EdgeId top = -1;
  EdgeId bottom = -1;
  bool empty() const { return top < 0; }
};

// two mutually opposed bundles of back edges
struct StackPair {
  EntryStack side[2];
};

// Fringe bookkeeping for a partially processed subtree: a stack of stack
// pairs, shallow returns at the bottom, plus the sign forest fed by it.
// Entries are back-edge ids; each lives in exactly one stack at a time, so
// the "below me" link is a single global array.
class ConstraintStacks {
 public:
  using System = std::vector<StackPair>;  // [0] is the bottom pair

  ConstraintStacks(const Graph& g, const TremauxData& t, const SortedAdjacency& adj);

  System singleton(EdgeId back_edge);

  // Fold the fringe system of the next outgoing edge into the accumulator.
  // a and b are the depths of the shallowest return of the vertex and of the
  // incoming edge.  False: a one-sidedness check failed (not planar).
  bool merge(System& acc, System&& in, int a, int b);

  // Pop every entry returning exactly at u_depth; true if anything popped.
  bool remove_level(System& cs, int u_depth);

  // surviving entry with the deepest return, -1 for an empty system
  EdgeId top_witness(const System& cs) const;

  // pairs bottom to top, stacks printed top first, "-" for an empty side
  std::string render(const System& cs) const;

  SignedForest& forest() { return forest_; }

 private:
  // per-edge working record: the "below me" link and the sort key, side by
  // side because the pop loops always consult both for the same edge
  struct Ent {
    EdgeId below;
    int key;  // upper bits hold the edge's shallowest return depth
  };

  int low_depth(EdgeId e) const { return ent_[e].key >> 1; }
  int top_depth(const EntryStack& s) const { return s.empty() ? -1 : low_depth(s.top); }
  void concat(EntryStack& dst, const EntryStack& src);
  void pop(EntryStack& s);
  std::string stack_text(const EntryStack& s) const;

  const TremauxData& t_;
  std::vector<Ent> ent_;
  SignedForest forest_;
};

struct VertexStep {
  Vertex v;                   // vertex whose outgoing edges were folded
  EdgeId enter;               // tree edge into v
  std::string merged;         // system after all folds
  bool deletion;              // whether the removal pass popped anything
  std::string after_deletion; // system after removal, when deletion is true
};
using TraceHook = std::function<void(const VertexStep&)>;

struct LrOutcome {
  bool planar = false;
  std::vector<int> lambda;       // per edge: +1/-1 for back edges, 0 otherwise
  std::vector<EdgeId> ref_edge;  // per tree edge: witness back edge or -1
};

// Verdict pass over one connected component.  The hook, when set, fires after
// each vertex step in backtrack order of the precedence-steered DFS.
LrOutcome test_planarity(const Graph& g, const TremauxData& t, const SortedAdjacency& adj,
                         const TraceHook& hook = {});

// Full text of the per-vertex steps, one "v=..: CS((u,v)) = .." line each,
// with an indented "-> .. (deletion)" line whenever the removal pass popped.
std::string trace_text(const Graph& g, const TremauxData& t, const SortedAdjacency& adj);

}  // namespace planarity
