#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gradlpa/algebra.hpp"
#include "gradlpa/graph.hpp"

namespace gradlpa {

// Where a summand of the representation comes from: a sink, or a cycle with
// its chosen base vertex, together with the paths that index its rows.
struct Provenance {
  std::optional<VertexId> sink;
  std::optional<CycleDescriptor> cycle;
  VertexId target;  // the sink, or the cycle's base vertex
  std::vector<PathEnd> paths;
};

struct RepresentationReport {
  DirectSumAlgebra sum;
  std::vector<Provenance> provenance;
};

// Graded matricial representation of L_K(g) for a finite no-exit graph: one
// M_k(K) summand per sink (in vertex order), then one M_n(K[x^m, x^-m])
// summand per cycle (in find_cycles order). Shifts are raw path lengths.
// Cycle base vertices default to the smallest vertex id on the cycle.
RepresentationReport represent(const DirectedGraph& g);

// As represent, with base vertices chosen per cycle. Keys name a cycle by
// any vertex on it; values must lie on the same cycle.
RepresentationReport represent_at(const DirectedGraph& g,
                                  const std::map<VertexId, VertexId>& base_choice);

// One line per path: `<source> --(<length>)--> <target>`.
std::string provenance_text(const RepresentationReport& report);

}  // namespace gradlpa
