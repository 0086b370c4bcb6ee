#pragma once

#include <cstddef>
#include <set>
#include <vector>

#include "gradlpa/algebra.hpp"
#include "gradlpa/graph.hpp"
#include "gradlpa/realization.hpp"

namespace gradlpa {

// e A e for e the sum of the diagonal units e_ii, i in `indices` (0-based).
// Indices are taken in increasing order; duplicates are rejected.
ShiftedMatrixAlgebra corner_by_indices(const ShiftedMatrixAlgebra& a,
                                       const std::vector<std::size_t>& indices);

// Graded corner of L_K(g) cut out by the idempotent sum of `vertices`. A
// vertex corresponds to the diagonal units of the paths it sources, so each
// summand of represent(g) keeps exactly those rows; emptied summands drop
// out. Throws Error(ZeroCorner) if nothing survives.
DirectSumAlgebra corner_by_vertices(const DirectedGraph& g,
                                    const std::set<VertexId>& vertices);

Verdict corner_realizable(const DirectedGraph& g, const std::set<VertexId>& vertices);

}  // namespace gradlpa
