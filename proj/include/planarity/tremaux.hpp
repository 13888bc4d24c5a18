#pragma once

#include "planarity/graph.hpp"

namespace planarity {

enum class EdgeKind : unsigned char { Tree, Back };

// by return behaviour of the subtree hanging on the edge
enum class EdgeClass : unsigned char { Block, Thin, Thick };

// Rooted DFS orientation of a connected graph.  Tree edges point away from
// the root; every other edge joins a vertex to a proper ancestor and points
// down at it.  Carries the return-point data (low / low2) and the per-edge
// classification derived from it.
struct TremauxData {
  Vertex root = 0;

  std::vector<Vertex> parent;       // per vertex, -1 at root
  std::vector<EdgeId> parent_edge;  // per vertex, -1 at root
  std::vector<int> depth;           // per vertex
  std::vector<Vertex> preorder;     // vertices in discovery order

  std::vector<EdgeKind> kind;  // per edge
  std::vector<Vertex> tail;    // per edge, oriented tail -> head
  std::vector<Vertex> head;
  std::vector<Vertex> low;   // per edge: shallowest return vertex (head for back edges)
  std::vector<Vertex> low2;  // per edge: second attachment point of the subtree below, -1 if none
  std::vector<Vertex> vlow;  // per vertex: shallowest of v and its outgoing lows
  std::vector<int> lowd;     // per edge: depth of low, kept beside it to spare the lookup
  std::vector<int> vlowd;    // per vertex: depth of vlow
  std::vector<EdgeClass> cls;       // per edge
  std::vector<EdgeId> init_anchor;  // per back edge: first tree edge of the path head -> tail; -1 otherwise

  // strictly shallower, i.e. closer to the root
  bool above(Vertex a, Vertex b) const { return depth[a] < depth[b]; }
};

// throws NotConnectedError if some vertex is unreachable from root
TremauxData run_dfs(const Graph& g, Vertex root = 0);

}  // namespace planarity
