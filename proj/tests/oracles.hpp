#pragma once

// Reference implementations used only by the tests. Each one follows the
// textbook definition directly and shares no code path with the library
// routine it checks.

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "gradlpa/algebra.hpp"
#include "gradlpa/graded_matrix.hpp"
#include "gradlpa/graph.hpp"

namespace oracle {

using gradlpa::Shift;

// Multiset of (source, length) over every path of length <= max_length that
// ends at `target`, built by extending explicit edge sequences backwards.
// Paths whose edge sequence contains a full traversal of `avoid` (any
// rotation of its edges, contiguously) are dropped when `avoid` is given.
std::vector<std::pair<std::string, std::int64_t>> naive_paths(
    const gradlpa::DirectedGraph& g, const std::string& target, std::size_t max_length,
    const gradlpa::CycleDescriptor* avoid = nullptr);

// Sorted copy of (source, length) pairs from the library's PathEnd list.
std::vector<std::pair<std::string, std::int64_t>> as_pairs(
    const std::vector<gradlpa::PathEnd>& paths);

// Start of the least rotation by comparing all rotations; smallest index wins.
std::size_t brute_least_rotation(const std::vector<std::size_t>& s);

// Dense (k; l_0..l_k) by subtract-min / sort / count.
std::pair<Shift, std::vector<std::size_t>> brute_trivial_form(std::vector<Shift> shifts);
// Dense l_0..l_{m-1} of residues, least rotation by exhaustive comparison.
std::vector<std::size_t> brute_cyclic_form(const std::vector<Shift>& shifts, Shift m);

// Random finite no-exit multigraph with up to `max_vertices` vertices:
// disjoint cycles plus a DAG of tree vertices whose edges point into
// cycles or earlier tree vertices. Vertex names are shuffled.
gradlpa::DirectedGraph random_no_exit_graph(std::mt19937_64& rng, std::size_t max_vertices);
// Arbitrary random multigraph (loops and parallel edges allowed).
gradlpa::DirectedGraph random_graph(std::mt19937_64& rng, std::size_t max_vertices,
                                    std::size_t max_edges);

gradlpa::GradedBase random_base(std::mt19937_64& rng, Shift max_period);
std::vector<Shift> random_shifts(std::mt19937_64& rng, std::size_t n, Shift lo, Shift hi);
gradlpa::Step random_step(std::mt19937_64& rng, std::size_t n, const gradlpa::GradedBase& base);
gradlpa::GradedMatrix random_matrix(std::mt19937_64& rng, const gradlpa::GradedBase& base,
                                    const std::vector<Shift>& shifts);

// Dense canonical vectors of an algebra via the brute-force routines.
std::vector<std::size_t> brute_dense_form(const gradlpa::ShiftedMatrixAlgebra& a);

// Builds M_n(base)(l_0(0), l_1(1), ...).
gradlpa::ShiftedMatrixAlgebra from_multiplicities(const gradlpa::GradedBase& base,
                                                  const std::vector<std::size_t>& mults);

}  // namespace oracle
