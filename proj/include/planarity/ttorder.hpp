#pragma once

#include "planarity/tremaux.hpp"

namespace planarity {

// One fixed linear extension of the edge precedence: outgoing edges sorted by
// 2*depth(low) with thick edges half a step later, ties kept in incidence
// order.  The same extension steers both the verdict pass and the embedding,
// so it is computed once and passed around.
// Flat per-vertex lists: out[v] views the slice of one shared array.
// One record per outgoing edge: everything a walk step consults, in the
// stream it walks, so the hot loops never chase edge ids to other arrays.
struct OutRec {
  EdgeId e;
  int kb;         // sort key << 2, stored-orientation bit 1, back-edge flag bit 0
  Vertex head;    // far endpoint of the edge
  EdgeId anchor;  // first tree edge under the return point; -1 for tree edges
};

struct OutLists {
  std::vector<int> off;      // n+1 slice bounds into recs
  std::vector<OutRec> recs;  // all outgoing edges grouped by tail
  Span<OutRec> operator[](Vertex v) const {
    return {recs.data() + off[v], off[v + 1] - off[v]};
  }
};

struct SortedAdjacency {
  OutLists out;          // per vertex, outgoing edges in order
  std::vector<int> key;  // per edge: 2*depth(low(e)) + (thick ? 1 : 0)
};

SortedAdjacency tt_sort(const Graph& g, const TremauxData& t);

}  // namespace planarity
