#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gradlpa/algebra.hpp"
#include "gradlpa/graph.hpp"

namespace gradlpa {

// One summand that cannot be realized and the first multiplicity that breaks
// the condition.
struct RealizationFailure {
  std::size_t summand = 0;  // 0-based position in the direct sum
  Shift index = 0;          // offending i in l_i
  std::size_t multiplicity = 0;
  std::string reason;
};

struct Verdict {
  bool realizable = true;
  std::vector<RealizationFailure> failures;

  explicit operator bool() const noexcept { return realizable; }
};

// Over K: representatives must have l_0 = 1 and l_i >= 1 for i = 1..k.
// Over K[x^m, x^-m]: every l_i >= 1.
Verdict is_realizable(const ShiftedMatrixAlgebra& a);
Verdict is_realizable_sum(const DirectSumAlgebra& r);

// Witness graph whose representation is graded isomorphic to `a`: a layered
// tree into a single sink over K, a comet over K[x^m, x^-m]. Vertex ids
// follow v<i>_<j> for layer/leaf vertices and v<i> for cycle vertices.
// Throws Error(NotRealizable).
DirectedGraph synthesize(const ShiftedMatrixAlgebra& a);

// Disjoint union of per-summand witnesses; vertex and edge ids of summand i
// carry the prefix s<i>_ (1-based). Throws Error(NotRealizable).
DirectedGraph synthesize_sum(const DirectSumAlgebra& r);

}  // namespace gradlpa
