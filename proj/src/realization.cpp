#include "gradlpa/realization.hpp"

#include "gradlpa/error.hpp"

namespace gradlpa {

namespace {

std::string vertex(Shift layer, std::size_t j) {
  return "v" + std::to_string(layer) + "_" + std::to_string(j);
}

std::string verdict_message(const Verdict& v) {
  std::string msg = "not realizable as a Leavitt path algebra";
  for (const auto& f : v.failures)
    msg += "; summand " + std::to_string(f.summand + 1) + ": " + f.reason;
  return msg;
}

// First index where the multiplicities violate the realizability condition,
// if any. `levels` is sorted by offset and sparse.
std::optional<RealizationFailure> first_violation(const CanonicalForm& form) {
  if (const auto* t = std::get_if<TrivialForm>(&form)) {
    const std::size_t l0 = t->multiplicity(0);
    if (l0 != 1) {
      return RealizationFailure{0, 0, l0,
                                "l_0 = " + std::to_string(l0) +
                                    " but a graph has exactly one trivial path to its sink"};
    }
    // levels hold only nonzero offsets; a gap shows up as a jump
    Shift expected = 0;
    for (const auto& l : t->levels) {
      if (l.offset != expected) break;
      ++expected;
    }
    if (expected <= t->top) {
      return RealizationFailure{
          0, expected, 0,
          "l_" + std::to_string(expected) + " = 0: no shift at offset " +
              std::to_string(expected) + ", a gap in the lengths of paths to the sink"};
    }
    return std::nullopt;
  }
  const auto& c = std::get<CyclicForm>(form);
  Shift expected = 0;
  for (const auto& l : c.levels) {
    if (l.offset != expected) break;
    ++expected;
  }
  if (expected < c.period) {
    return RealizationFailure{
        0, expected, 0,
        "l_" + std::to_string(expected) + " = 0: residue class " +
            std::to_string(expected) + " mod " + std::to_string(c.period) +
            " is empty, but every residue is the length of a path along the cycle"};
  }
  return std::nullopt;
}

}  // namespace

Verdict is_realizable(const ShiftedMatrixAlgebra& a) {
  Verdict v;
  if (auto f = first_violation(canonical_form(a))) {
    v.realizable = false;
    v.failures.push_back(std::move(*f));
  }
  return v;
}

Verdict is_realizable_sum(const DirectSumAlgebra& r) {
  Verdict v;
  for (std::size_t i = 0; i < r.summands.size(); ++i) {
    if (auto f = first_violation(canonical_form(r.summands[i]))) {
      f->summand = i;
      v.realizable = false;
      v.failures.push_back(std::move(*f));
    }
  }
  return v;
}

DirectedGraph synthesize(const ShiftedMatrixAlgebra& a) {
  const Verdict verdict = is_realizable(a);
  if (!verdict) throw Error(ErrorKind::NotRealizable, verdict_message(verdict));

  GraphBuilder b;
  const CanonicalForm form = canonical_form(a);
  if (const auto* t = std::get_if<TrivialForm>(&form)) {
    // layer i: l_i vertices, each with an edge to the first vertex of layer i-1
    b.add_vertex(vertex(0, 1));
    for (const auto& level : t->levels) {
      if (level.offset == 0) continue;
      for (std::size_t j = 1; j <= level.count; ++j)
        b.add_edge(vertex(level.offset, j), vertex(level.offset - 1, 1));
    }
    return b.build();
  }

  // cycle v0 .. v_{m-1} with v_{i+1} -> v_i and v0 -> v_{m-1}; l_i - 1 extra
  // leaves into v_{i-1} (into v_{m-1} for i = 0)
  const auto& c = std::get<CyclicForm>(form);
  const Shift m = c.period;
  auto cyc = [](Shift i) { return "v" + std::to_string(i); };
  for (Shift i = 0; i < m; ++i) b.add_vertex(cyc(i));
  for (Shift i = 0; i + 1 < m; ++i) b.add_edge(cyc(i + 1), cyc(i));
  b.add_edge(cyc(0), cyc(m - 1));
  for (const auto& level : c.levels) {
    const Shift into = level.offset == 0 ? m - 1 : level.offset - 1;
    for (std::size_t j = 1; j < level.count; ++j)
      b.add_edge(vertex(level.offset, j), cyc(into));
  }
  return b.build();
}

DirectedGraph synthesize_sum(const DirectSumAlgebra& r) {
  const Verdict verdict = is_realizable_sum(r);
  if (!verdict) throw Error(ErrorKind::NotRealizable, verdict_message(verdict));
  std::vector<VertexId> vertices;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < r.summands.size(); ++i) {
    const std::string prefix = "s" + std::to_string(i + 1) + "_";
    const DirectedGraph part = synthesize(r.summands[i]);
    for (const auto& v : part.vertices()) vertices.push_back(prefix + v);
    for (const auto& e : part.edges())
      edges.push_back({prefix + e.id, prefix + e.source, prefix + e.range});
  }
  return {std::move(vertices), std::move(edges)};
}

}  // namespace gradlpa
