#pragma once

#include <iosfwd>

#include "planarity/embed.hpp"

namespace planarity {

// Edge list text: '#' starts a comment, blank lines are skipped, the first
// data line is "n m", then m lines "u v" with 1-based endpoints.  Self-loops
// are legal here and are the caller's business.
struct EdgeListData {
  int n = 0;
  std::vector<Edge> edges;
};

EdgeListData parse_edge_list(std::istream& in);  // throws ParseError
void write_edge_list(std::ostream& out, int n, const std::vector<Edge>& edges);

// Rotation text: one line per vertex, "v: w1/e1 w2/e2 ...", entries in
// counterclockwise order, edge ids 1-based by position in the edge list.
// A self-loop shows up twice in its vertex's list.
RotationSystem parse_rotation(std::istream& in, int n, const std::vector<Edge>& edges);
void write_rotation(std::ostream& out, int n, const std::vector<Edge>& edges,
                    const RotationSystem& rot);

}  // namespace planarity
