#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace gradlpa {

using VertexId = std::string;
using EdgeId = std::string;

struct Edge {
  EdgeId id;
  VertexId source;
  VertexId range;

  bool operator==(const Edge&) const = default;
};

// Finite directed multigraph. Loops and parallel edges are allowed; vertices
// and edges keep their insertion order. Immutable once constructed.
class DirectedGraph {
 public:
  DirectedGraph() = default;

  // Throws Error(InvalidArgument) on duplicate ids and Error(UnknownVertex)
  // when an edge endpoint is not listed in `vertices`.
  DirectedGraph(std::vector<VertexId> vertices, std::vector<Edge> edges);

  const std::vector<VertexId>& vertices() const noexcept { return vertices_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  bool has_vertex(const VertexId& v) const;
  // Position of `v` in vertices(); throws Error(UnknownVertex).
  std::size_t index_of(const VertexId& v) const;

  // Edge positions (into edges()) leaving / entering the vertex at `index`.
  const std::vector<std::size_t>& out_edges(std::size_t index) const {
    return out_[index];
  }
  const std::vector<std::size_t>& in_edges(std::size_t index) const {
    return in_[index];
  }
  std::size_t out_degree(const VertexId& v) const {
    return out_[index_of(v)].size();
  }
  std::size_t source_index(std::size_t edge) const { return edge_src_[edge]; }
  std::size_t range_index(std::size_t edge) const { return edge_dst_[edge]; }

  bool operator==(const DirectedGraph& other) const {
    return vertices_ == other.vertices_ && edges_ == other.edges_;
  }

 private:
  std::vector<VertexId> vertices_;
  std::vector<Edge> edges_;
  std::unordered_map<VertexId, std::size_t> vertex_index_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<std::vector<std::size_t>> in_;
  std::vector<std::size_t> edge_src_;
  std::vector<std::size_t> edge_dst_;
};

// Incremental construction helper. Vertices referenced by add_edge are
// declared on first use.
class GraphBuilder {
 public:
  GraphBuilder& add_vertex(const VertexId& v);
  GraphBuilder& add_edge(const VertexId& source, const VertexId& range);
  GraphBuilder& add_edge(const EdgeId& id, const VertexId& source,
                         const VertexId& range);
  DirectedGraph build() const;

 private:
  void touch(const VertexId& v);

  std::vector<VertexId> vertices_;
  std::unordered_map<VertexId, bool> seen_;
  std::vector<Edge> edges_;
};

// A closed path whose edges have pairwise distinct sources. Starts at the
// lexicographically smallest vertex id on the cycle; edges[i] runs from
// vertices[i] to vertices[(i + 1) % length].
struct CycleDescriptor {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;
  std::size_t length = 0;

  bool contains(const VertexId& v) const;
  bool operator==(const CycleDescriptor&) const = default;
};

struct PathEnd {
  VertexId source;
  std::int64_t length = 0;

  bool operator==(const PathEnd&) const = default;
};

// Path lengths as a multiset: length -> number of paths.
using PathLengthMultiset = std::vector<std::pair<std::int64_t, std::size_t>>;
PathLengthMultiset length_multiset(const std::vector<PathEnd>& paths);

struct Component {
  std::vector<VertexId> vertices;
  std::size_t cycle_count = 0;
  bool comet = false;
};

struct GraphClassification {
  bool finite = true;
  bool acyclic = true;
  bool no_exit = true;
  bool all_comets = false;
  std::vector<VertexId> sinks;
  std::vector<VertexId> regular;
  std::vector<CycleDescriptor> cycles;
  // Set when cycle enumeration hit its limit; `cycles` is then partial.
  bool cycles_truncated = false;
  std::vector<Component> components;
};

inline constexpr std::size_t kDefaultCycleLimit = 10'000;

GraphClassification classify(const DirectedGraph& g);

bool is_no_exit(const DirectedGraph& g);

// Every cycle once, sorted by starting vertex id then edge sequence. Linear
// time on no-exit graphs; otherwise enumerates elementary circuits and throws
// Error(CycleLimitExceeded) past `limit` cycles.
std::vector<CycleDescriptor> find_cycles(const DirectedGraph& g,
                                         std::size_t limit = kDefaultCycleLimit);

// All paths ending at `sink`, including the trivial one, ordered by length
// then source id.
std::vector<PathEnd> paths_to_sink(const DirectedGraph& g, const VertexId& sink);

// All paths ending at `base` that do not contain the cycle `c`, i.e. that
// visit `base` only at their end. Same ordering as paths_to_sink.
std::vector<PathEnd> paths_to_cycle_vertex(const DirectedGraph& g,
                                           const CycleDescriptor& c,
                                           const VertexId& base);

// L_n: v1 -> v2 -> ... -> vn.
DirectedGraph build_line(std::size_t n);
// C_n: L_n plus a loop at vn.
DirectedGraph build_cycle_tail(std::size_t n);

}  // namespace gradlpa
