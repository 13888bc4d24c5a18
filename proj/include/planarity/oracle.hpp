#pragma once

#include <cstdint>
#include <string>

#include "planarity/tremaux.hpp"

namespace planarity {

// Exhaustive reference verdict: tries rotation systems per component and
// accepts when one satisfies the genus-zero face count.  Throws TooLargeError
// when the whole-graph search space exceeds the work guard.
bool brute_planar(const Graph& g);

// Literal check of the coloring conditions on a verdict witness: for every
// ordered pair of co-tail edges both interlace sets are monochromatic and
// mutually opposed when both occupied, and every vertex's shallowest-return
// bundle is monochromatic.
bool check_strong_fcoloring(const Graph& g, const TremauxData& t, const std::vector<int>& lambda);

Graph gen_complete(int n);
Graph gen_complete_bipartite(int a, int b);
// every edge of base becomes a path with k inner vertices appended after base's
Graph gen_subdivide(const Graph& base, int k);
// maximal planar graph grown by repeated face splits; n >= 3, so 3n-6 edges
Graph gen_triangulation(int n, std::uint64_t seed);
// uniform labeled spanning tree plus distinct random extra edges
Graph gen_random_connected(int n, int m, std::uint64_t seed);

struct GenSpec {
  std::string kind;  // complete | bipartite | subdivide | triangulation | random
  int n = 0;
  int a = 0;
  int b = 0;
  int m = 0;
  int k = 0;
  std::string base;  // subdivide: k5 | k33 | k4
  std::uint64_t seed = 0;
};
Graph generate(const GenSpec& spec);  // throws InvalidSpecError

}  // namespace planarity
