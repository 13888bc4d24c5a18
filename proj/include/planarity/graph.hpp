#pragma once

#include <iterator>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace planarity {

using Vertex = int;
using EdgeId = int;

// Read-only view of one vertex's slice of a flat adjacency array.
template <class T>
struct Span {
  const T* ptr = nullptr;
  int len = 0;

  const T* begin() const { return ptr; }
  const T* end() const { return ptr + len; }
  std::reverse_iterator<const T*> rbegin() const { return std::reverse_iterator<const T*>(end()); }
  std::reverse_iterator<const T*> rend() const { return std::reverse_iterator<const T*>(begin()); }
  int size() const { return len; }
  bool empty() const { return len == 0; }
  const T& operator[](int i) const { return ptr[i]; }
};

struct Edge {
  Vertex u = -1;
  Vertex v = -1;
};

struct GraphError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// construction-time rejects
struct LoopEdgeError : GraphError {
  using GraphError::GraphError;
};
struct VertexOutOfRangeError : GraphError {
  using GraphError::GraphError;
};

// raised by passes that need one component
struct NotConnectedError : GraphError {
  using GraphError::GraphError;
};

// exhaustive search refused (bound would be exceeded)
struct TooLargeError : GraphError {
  using GraphError::GraphError;
};

// bad generator parameters
struct InvalidSpecError : GraphError {
  using GraphError::GraphError;
};

// malformed input text
struct ParseError : GraphError {
  using GraphError::GraphError;
};

// Undirected multigraph with stable edge ids (= insertion position) and
// per-vertex incidence kept in insertion order.  Parallel edges are fine,
// loops are rejected; callers that accept loops strip them first.
// Incidence lives in one flat array sliced by offsets, so whole-graph scans
// stay sequential in memory.
class Graph {
 public:
  Graph(int n, std::vector<Edge> edges);

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  const std::vector<Edge>& edges() const { return edges_; }

  Vertex other(EdgeId e, Vertex at) const {
    const Edge& ed = edges_[e];
    return ed.u == at ? ed.v : ed.u;
  }

  // (edge id, other endpoint) pairs in insertion order
  Span<std::pair<EdgeId, Vertex>> incident(Vertex v) const {
    return {inc_flat_.data() + inc_off_[v], inc_off_[v + 1] - inc_off_[v]};
  }

  int degree(Vertex v) const { return inc_off_[v + 1] - inc_off_[v]; }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> inc_off_;
  std::vector<std::pair<EdgeId, Vertex>> inc_flat_;
};

// component id per vertex, numbered 0..C-1 in order of first appearance
std::vector<int> connected_components(const Graph& g);

int num_components(const std::vector<int>& comp);

}  // namespace planarity
