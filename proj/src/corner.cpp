#include "gradlpa/corner.hpp"

#include <algorithm>

#include "gradlpa/error.hpp"
#include "gradlpa/representation.hpp"

namespace gradlpa {

ShiftedMatrixAlgebra corner_by_indices(const ShiftedMatrixAlgebra& a,
                                       const std::vector<std::size_t>& indices) {
  if (indices.empty())
    throw Error(ErrorKind::EmptyIndexSet, "corner needs at least one index");
  std::vector<std::size_t> sorted = indices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw Error(ErrorKind::InvalidArgument, "repeated corner index");
  if (sorted.back() >= a.size())
    throw Error(ErrorKind::IndexOutOfRange,
                "index " + std::to_string(sorted.back() + 1) + " exceeds n = " +
                    std::to_string(a.size()));
  std::vector<Shift> shifts;
  shifts.reserve(sorted.size());
  for (std::size_t i : sorted) shifts.push_back(a.shifts[i]);
  return {a.base, std::move(shifts)};
}

DirectSumAlgebra corner_by_vertices(const DirectedGraph& g,
                                    const std::set<VertexId>& vertices) {
  if (vertices.empty())
    throw Error(ErrorKind::EmptyIndexSet, "corner needs at least one vertex");
  for (const auto& v : vertices) g.index_of(v);
  const RepresentationReport report = represent(g);
  std::vector<ShiftedMatrixAlgebra> kept;
  for (std::size_t s = 0; s < report.provenance.size(); ++s) {
    std::vector<std::size_t> rows;
    const auto& paths = report.provenance[s].paths;
    for (std::size_t i = 0; i < paths.size(); ++i)
      if (vertices.count(paths[i].source)) rows.push_back(i);
    if (!rows.empty()) kept.push_back(corner_by_indices(report.sum.summands[s], rows));
  }
  if (kept.empty())
    throw Error(ErrorKind::ZeroCorner, "no path has its source in the vertex set");
  return DirectSumAlgebra(std::move(kept));
}

Verdict corner_realizable(const DirectedGraph& g, const std::set<VertexId>& vertices) {
  return is_realizable_sum(corner_by_vertices(g, vertices));
}

}  // namespace gradlpa
