#pragma once

#include "planarity/embed.hpp"

namespace planarity {

struct AnalysisResult {
  bool planar = false;
  RotationSystem rot;           // whole graph; meaningful only when planar
  std::vector<int> lambda;      // per edge: side of each non-tree edge, else 0
  std::vector<int> lambda_hat;  // per edge: resolved side, 0 when not planar
  int faces = 0;                // summed per component, isolated vertices count one
  std::string trace;            // filled when requested
};

// Full pipeline over an arbitrary graph, one component at a time.  Stops at
// the first failing component.  With several components a traced run prefixes
// each component's section with "# component K" and renumbers its vertices.
AnalysisResult analyze(const Graph& g, bool want_trace = false);

}  // namespace planarity
