#include "gradlpa/representation.hpp"

#include <sstream>

#include "gradlpa/error.hpp"

namespace gradlpa {

RepresentationReport represent_at(const DirectedGraph& g,
                                  const std::map<VertexId, VertexId>& base_choice) {
  if (g.vertex_count() == 0)
    throw Error(ErrorKind::EmptyGraph, "graph has no vertices");
  if (!is_no_exit(g))
    throw Error(ErrorKind::NotNoExit,
                "graph is not no-exit: a vertex on a cycle emits more than one edge");

  const auto cycles = find_cycles(g);
  std::vector<VertexId> bases;
  bases.reserve(cycles.size());
  for (const auto& c : cycles) bases.push_back(c.vertices.front());

  for (const auto& [key, chosen] : base_choice) {
    g.index_of(key);
    std::size_t which = cycles.size();
    for (std::size_t i = 0; i < cycles.size(); ++i)
      if (cycles[i].contains(key)) which = i;
    if (which == cycles.size())
      throw Error(ErrorKind::VertexNotOnCycle, "vertex '" + key + "' is not on a cycle");
    if (!cycles[which].contains(chosen))
      throw Error(ErrorKind::VertexNotOnCycle,
                  "vertex '" + chosen + "' is not on the cycle through '" + key + "'");
    bases[which] = chosen;
  }

  std::vector<ShiftedMatrixAlgebra> summands;
  RepresentationReport report;
  auto add = [&](GradedBase base, Provenance prov) {
    std::vector<Shift> shifts;
    shifts.reserve(prov.paths.size());
    for (const auto& p : prov.paths) shifts.push_back(p.length);
    summands.emplace_back(base, std::move(shifts));
    report.provenance.push_back(std::move(prov));
  };

  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (!g.out_edges(v).empty()) continue;
    const VertexId& sink = g.vertices()[v];
    add(GradedBase::trivial(), {sink, std::nullopt, sink, paths_to_sink(g, sink)});
  }
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    add(GradedBase::laurent(static_cast<Shift>(cycles[i].length)),
        {std::nullopt, cycles[i], bases[i], paths_to_cycle_vertex(g, cycles[i], bases[i])});
  }
  report.sum = DirectSumAlgebra(std::move(summands));
  return report;
}

RepresentationReport represent(const DirectedGraph& g) { return represent_at(g, {}); }

std::string provenance_text(const RepresentationReport& report) {
  std::ostringstream os;
  for (std::size_t i = 0; i < report.provenance.size(); ++i) {
    const auto& p = report.provenance[i];
    os << "# summand " << i + 1 << ": " << to_string(report.sum.summands[i]);
    if (p.sink)
      os << " from sink " << *p.sink;
    else
      os << " from cycle of length " << p.cycle->length << " at base " << p.target;
    os << '\n';
    for (const auto& path : p.paths)
      os << path.source << " --(" << path.length << ")--> " << p.target << '\n';
  }
  return os.str();
}

}  // namespace gradlpa
