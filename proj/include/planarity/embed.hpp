#pragma once

#include "planarity/lrtest.hpp"

namespace planarity {

// at(v) lists the half-edges leaving v in counterclockwise order, all
// vertices sharing one flat buffer.  Half-edge 2e sits at edge(e).u,
// half-edge 2e+1 at edge(e).v.
struct RotationSystem {
  std::vector<int> off;   // n+1 slice bounds into flat
  std::vector<int> flat;  // half-edge ids, grouped by vertex
  int num_vertices() const { return off.empty() ? 0 : static_cast<int>(off.size()) - 1; }
  Span<int> at(Vertex v) const { return {flat.data() + off[v], off[v + 1] - off[v]}; }
  std::vector<std::vector<int>> lists() const;
  static RotationSystem from_lists(const std::vector<std::vector<int>>& ls);
  friend bool operator==(const RotationSystem&, const RotationSystem&) = default;
};

struct EmbedResult {
  RotationSystem rot;
  std::vector<int> lambda_hat;  // per edge: side resolved via the witness edge
};

// Combinatorial embedding of a connected graph from a passing verdict run.
EmbedResult build_rotation(const Graph& g, const TremauxData& t, const SortedAdjacency& adj,
                           const LrOutcome& lr);

// Orbits of (twin then rotation-successor), i.e. the faces of the embedding.
int count_face_orbits(int num_edges, const RotationSystem& rot);
std::vector<int> face_sizes(int num_edges, const RotationSystem& rot);

// every rotation list is a permutation of the half-edges at its vertex
bool rotation_structure_ok(int n, const std::vector<Edge>& edges, const RotationSystem& rot);
bool rotation_matches(const Graph& g, const RotationSystem& rot);

// Genus-zero certificate: structural validity plus, per connected component,
// vertices - edges + faces = 2 (isolated vertices count one face).
bool certify(const Graph& g, const RotationSystem& rot);
bool certify_rotation(int n, const std::vector<Edge>& edges, const RotationSystem& rot);

// Face count as summed over components; a component without edges has one.
int trace_faces(const Graph& g, const RotationSystem& rot);

}  // namespace planarity
