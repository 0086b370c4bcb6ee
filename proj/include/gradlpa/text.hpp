#pragma once

#include <string>
#include <string_view>

#include "gradlpa/algebra.hpp"
#include "gradlpa/graph.hpp"

namespace gradlpa {

// Graph format, one statement per line, '#' starts a comment:
//   vertex <id>
//   <src> -> <dst> [<edge-id>]
// Vertices used by edges are declared implicitly. Missing edge ids become
// e<k>, k being the edge's position in the file.
DirectedGraph parse_graph(std::string_view text);
// Prints every vertex, then every edge with its id; parse_graph inverts it.
std::string print_graph(const DirectedGraph& g);
// `digraph { "a" -> "b"; }`, ids quoted when they are not plain identifiers.
std::string to_dot(const DirectedGraph& g);

// Algebra expressions, whitespace-insensitive:
//   sum       := summand ( "(+)" summand )*
//   summand   := "M" nat "(" base ")" "(" shiftlist ")"
//   base      := "K" | "K[x^" nat "]"
//   shiftlist := item ("," item)*      item := int | nat "(" int ")"
// d(γ) stands for d copies of γ.
DirectSumAlgebra parse_algebra(std::string_view text);
// A single summand; throws if the expression is a proper direct sum.
ShiftedMatrixAlgebra parse_matrix_algebra(std::string_view text);

// Certificates, one step per line with 1-based indices:
//   P <π(1)> <π(2)> ... <π(n)>
//   G <delta>
//   E <index> <delta>
IsoCertificate parse_certificate(std::string_view text);
std::string print_certificate(const IsoCertificate& cert);

}  // namespace gradlpa
