#include "gradlpa/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <utility>

#include "gradlpa/error.hpp"

namespace gradlpa {

DirectedGraph::DirectedGraph(std::vector<VertexId> vertices,
                             std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  vertex_index_.reserve(vertices_.size());
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (!vertex_index_.emplace(vertices_[i], i).second)
      throw Error(ErrorKind::InvalidArgument,
                  "duplicate vertex id '" + vertices_[i] + "'");
  }
  out_.resize(vertices_.size());
  in_.resize(vertices_.size());
  edge_src_.reserve(edges_.size());
  edge_dst_.reserve(edges_.size());
  std::unordered_map<EdgeId, bool> edge_ids;
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const Edge& edge = edges_[e];
    if (!edge_ids.emplace(edge.id, true).second)
      throw Error(ErrorKind::InvalidArgument,
                  "duplicate edge id '" + edge.id + "'");
    const std::size_t s = index_of(edge.source);
    const std::size_t r = index_of(edge.range);
    edge_src_.push_back(s);
    edge_dst_.push_back(r);
    out_[s].push_back(e);
    in_[r].push_back(e);
  }
}

bool DirectedGraph::has_vertex(const VertexId& v) const {
  return vertex_index_.count(v) != 0;
}

std::size_t DirectedGraph::index_of(const VertexId& v) const {
  auto it = vertex_index_.find(v);
  if (it == vertex_index_.end())
    throw Error(ErrorKind::UnknownVertex, "unknown vertex '" + v + "'");
  return it->second;
}

void GraphBuilder::touch(const VertexId& v) {
  if (seen_.emplace(v, true).second) vertices_.push_back(v);
}

GraphBuilder& GraphBuilder::add_vertex(const VertexId& v) {
  touch(v);
  return *this;
}

GraphBuilder& GraphBuilder::add_edge(const VertexId& source,
                                     const VertexId& range) {
  return add_edge("e" + std::to_string(edges_.size() + 1), source, range);
}

GraphBuilder& GraphBuilder::add_edge(const EdgeId& id, const VertexId& source,
                                     const VertexId& range) {
  touch(source);
  touch(range);
  edges_.push_back({id, source, range});
  return *this;
}

DirectedGraph GraphBuilder::build() const { return {vertices_, edges_}; }

bool CycleDescriptor::contains(const VertexId& v) const {
  return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

PathLengthMultiset length_multiset(const std::vector<PathEnd>& paths) {
  std::map<std::int64_t, std::size_t> counts;
  for (const auto& p : paths) ++counts[p.length];
  return {counts.begin(), counts.end()};
}

namespace {

// Tarjan's algorithm, iterative. Returns the component id of every vertex.
std::vector<std::size_t> strongly_connected(const DirectedGraph& g,
                                            std::size_t& count) {
  const std::size_t n = g.vertex_count();
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, kUnset), low(n, 0), comp(n, kUnset);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::pair<std::size_t, std::size_t>> frames;  // vertex, next out
  std::size_t next_index = 0;
  count = 0;

  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != kUnset) continue;
    frames.emplace_back(root, 0);
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      auto& [v, pos] = frames.back();
      const auto& outs = g.out_edges(v);
      if (pos < outs.size()) {
        const std::size_t w = g.range_index(outs[pos++]);
        if (index[w] == kUnset) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      const std::size_t done = v;
      frames.pop_back();
      if (!frames.empty()) {
        const std::size_t parent = frames.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
      if (low[done] == index[done]) {
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = count;
        } while (w != done);
        ++count;
      }
    }
  }
  return comp;
}

struct SccInfo {
  std::vector<std::size_t> comp;
  std::size_t count = 0;
  std::vector<std::vector<std::size_t>> members;
  std::vector<std::size_t> internal_edges;

  bool nontrivial(std::size_t c) const {
    return members[c].size() > 1 || internal_edges[c] > 0;
  }
};

SccInfo scc_info(const DirectedGraph& g) {
  SccInfo info;
  info.comp = strongly_connected(g, info.count);
  info.members.resize(info.count);
  info.internal_edges.assign(info.count, 0);
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    info.members[info.comp[v]].push_back(v);
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const std::size_t c = info.comp[g.source_index(e)];
    if (c == info.comp[g.range_index(e)]) ++info.internal_edges[c];
  }
  return info;
}

bool no_exit_from(const DirectedGraph& g, const SccInfo& info) {
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (info.nontrivial(info.comp[v]) && g.out_edges(v).size() != 1)
      return false;
  }
  return true;
}

CycleDescriptor make_cycle(const DirectedGraph& g,
                           const std::vector<std::size_t>& edge_path) {
  CycleDescriptor c;
  c.length = edge_path.size();
  // rotate so the cycle starts at its smallest vertex id
  std::size_t best = 0;
  for (std::size_t i = 1; i < edge_path.size(); ++i) {
    if (g.vertices()[g.source_index(edge_path[i])] <
        g.vertices()[g.source_index(edge_path[best])])
      best = i;
  }
  for (std::size_t i = 0; i < edge_path.size(); ++i) {
    const std::size_t e = edge_path[(best + i) % edge_path.size()];
    c.vertices.push_back(g.vertices()[g.source_index(e)]);
    c.edges.push_back(g.edges()[e].id);
  }
  return c;
}

// Elementary circuits of one strongly connected component. Each circuit is
// found exactly once, from its smallest vertex id.
void enumerate_circuits(const DirectedGraph& g, const SccInfo& info,
                        std::size_t comp, std::size_t limit,
                        std::vector<CycleDescriptor>& out) {
  std::vector<std::size_t> order = info.members[comp];
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return g.vertices()[a] < g.vertices()[b];
  });
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> rank(n, static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = i;

  std::size_t budget = 50 * limit + 1'000'000;
  std::vector<bool> on_path(n, false), reaches(n, false);
  std::vector<std::size_t> edge_path;
  std::vector<std::pair<std::size_t, std::size_t>> frames;

  for (std::size_t si = 0; si < order.size(); ++si) {
    const std::size_t s = order[si];
    // vertices of rank >= si that can reach s without dropping below it
    std::fill(reaches.begin(), reaches.end(), false);
    std::vector<std::size_t> work{s};
    reaches[s] = true;
    while (!work.empty()) {
      const std::size_t v = work.back();
      work.pop_back();
      for (std::size_t e : g.in_edges(v)) {
        const std::size_t u = g.source_index(e);
        if (info.comp[u] == comp && rank[u] >= si && !reaches[u]) {
          reaches[u] = true;
          work.push_back(u);
        }
      }
    }
    frames.assign(1, {s, 0});
    on_path[s] = true;
    while (!frames.empty()) {
      if (budget-- == 0)
        throw Error(ErrorKind::CycleLimitExceeded,
                    "cycle enumeration exceeded its search budget");
      auto& [v, pos] = frames.back();
      const auto& outs = g.out_edges(v);
      if (pos == outs.size()) {
        on_path[v] = false;
        frames.pop_back();
        if (!edge_path.empty()) edge_path.pop_back();
        continue;
      }
      const std::size_t e = outs[pos++];
      const std::size_t w = g.range_index(e);
      if (w == s) {
        edge_path.push_back(e);
        if (out.size() >= limit)
          throw Error(ErrorKind::CycleLimitExceeded,
                      "more than " + std::to_string(limit) + " cycles");
        out.push_back(make_cycle(g, edge_path));
        edge_path.pop_back();
      } else if (reaches[w] && !on_path[w]) {
        on_path[w] = true;
        edge_path.push_back(e);
        frames.emplace_back(w, 0);
      }
    }
    on_path[s] = false;
  }
}

std::vector<CycleDescriptor> cycles_from(const DirectedGraph& g,
                                         const SccInfo& info,
                                         std::size_t limit) {
  std::vector<CycleDescriptor> cycles;
  for (std::size_t c = 0; c < info.count; ++c) {
    if (!info.nontrivial(c)) continue;
    if (info.internal_edges[c] == info.members[c].size()) {
      // strongly connected with |E| = |V|: a single cycle
      std::vector<std::size_t> edge_path;
      const std::size_t start = info.members[c].front();
      std::size_t v = start;
      do {
        std::size_t next_edge = 0;
        for (std::size_t e : g.out_edges(v)) {
          if (info.comp[g.range_index(e)] == c) {
            next_edge = e;
            break;
          }
        }
        edge_path.push_back(next_edge);
        v = g.range_index(next_edge);
      } while (v != start);
      if (cycles.size() >= limit)
        throw Error(ErrorKind::CycleLimitExceeded,
                    "more than " + std::to_string(limit) + " cycles");
      cycles.push_back(make_cycle(g, edge_path));
    } else {
      enumerate_circuits(g, info, c, limit, cycles);
    }
  }
  std::sort(cycles.begin(), cycles.end(),
            [](const CycleDescriptor& a, const CycleDescriptor& b) {
              return std::tie(a.vertices, a.edges) < std::tie(b.vertices, b.edges);
            });
  return cycles;
}

void require_no_exit(const DirectedGraph& g) {
  if (!is_no_exit(g))
    throw Error(ErrorKind::NotNoExit,
                "graph is not no-exit: a vertex on a cycle emits more than one edge");
}

void sort_paths(std::vector<PathEnd>& paths) {
  std::sort(paths.begin(), paths.end(), [](const PathEnd& a, const PathEnd& b) {
    return std::tie(a.length, a.source) < std::tie(b.length, b.source);
  });
}

// Reverse depth-first walk from `target`. Vertices equal to `stop` are never
// re-entered; the caller guarantees the walk terminates.
std::vector<PathEnd> reverse_paths(const DirectedGraph& g, std::size_t target,
                                   std::size_t stop) {
  std::vector<PathEnd> paths;
  std::vector<std::pair<std::size_t, std::int64_t>> work{{target, 0}};
  while (!work.empty()) {
    const auto [v, len] = work.back();
    work.pop_back();
    paths.push_back({g.vertices()[v], len});
    for (std::size_t e : g.in_edges(v)) {
      const std::size_t u = g.source_index(e);
      if (u != stop) work.emplace_back(u, len + 1);
    }
  }
  sort_paths(paths);
  return paths;
}

}  // namespace

bool is_no_exit(const DirectedGraph& g) { return no_exit_from(g, scc_info(g)); }

std::vector<CycleDescriptor> find_cycles(const DirectedGraph& g,
                                         std::size_t limit) {
  return cycles_from(g, scc_info(g), limit);
}

GraphClassification classify(const DirectedGraph& g) {
  GraphClassification out;
  const SccInfo info = scc_info(g);
  out.no_exit = no_exit_from(g, info);
  out.acyclic = true;
  for (std::size_t c = 0; c < info.count; ++c)
    if (info.nontrivial(c)) out.acyclic = false;

  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (g.out_edges(v).empty())
      out.sinks.push_back(g.vertices()[v]);
    else
      out.regular.push_back(g.vertices()[v]);
  }

  try {
    out.cycles = cycles_from(g, info, kDefaultCycleLimit);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::CycleLimitExceeded) throw;
    out.cycles_truncated = true;
  }

  // weakly connected components
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t e = 0; e < g.edge_count(); ++e)
    parent[find(g.source_index(e))] = find(g.range_index(e));

  std::map<std::size_t, std::size_t> slot;
  std::vector<std::size_t> comp_of(n);
  for (std::size_t v = 0; v < n; ++v) {
    auto [it, fresh] = slot.emplace(find(v), out.components.size());
    if (fresh) out.components.emplace_back();
    comp_of[v] = it->second;
    out.components[it->second].vertices.push_back(g.vertices()[v]);
  }

  std::vector<bool> on_cycle(n, false);
  for (const auto& c : out.cycles) {
    const std::size_t first = g.index_of(c.vertices.front());
    ++out.components[comp_of[first]].cycle_count;
    for (const auto& v : c.vertices) on_cycle[g.index_of(v)] = true;
  }
  // Comet: one cycle and every vertex has a path into it.
  std::vector<bool> reaches = on_cycle;
  std::vector<std::size_t> work;
  for (std::size_t v = 0; v < n; ++v)
    if (on_cycle[v]) work.push_back(v);
  while (!work.empty()) {
    const std::size_t v = work.back();
    work.pop_back();
    for (std::size_t e : g.in_edges(v)) {
      const std::size_t u = g.source_index(e);
      if (!reaches[u]) {
        reaches[u] = true;
        work.push_back(u);
      }
    }
  }
  for (auto& comp : out.components) {
    if (out.cycles_truncated) break;
    comp.comet = comp.cycle_count == 1 &&
                 std::all_of(comp.vertices.begin(), comp.vertices.end(),
                             [&](const VertexId& v) { return reaches[g.index_of(v)]; });
  }
  out.all_comets = !out.components.empty() && !out.cycles_truncated &&
                   std::all_of(out.components.begin(), out.components.end(),
                               [](const Component& c) { return c.comet; });
  return out;
}

std::vector<PathEnd> paths_to_sink(const DirectedGraph& g, const VertexId& sink) {
  const std::size_t s = g.index_of(sink);
  require_no_exit(g);
  if (!g.out_edges(s).empty())
    throw Error(ErrorKind::NotASink, "vertex '" + sink + "' emits edges");
  // no cycle of a no-exit graph connects to a sink, so the walk is finite
  return reverse_paths(g, s, static_cast<std::size_t>(-1));
}

std::vector<PathEnd> paths_to_cycle_vertex(const DirectedGraph& g,
                                           const CycleDescriptor& c,
                                           const VertexId& base) {
  require_no_exit(g);
  if (!c.contains(base))
    throw Error(ErrorKind::VertexNotOnCycle,
                "vertex '" + base + "' does not lie on the given cycle");
  if (c.length == 0 || c.vertices.size() != c.length || c.edges.size() != c.length)
    throw Error(ErrorKind::InvalidArgument, "malformed cycle descriptor");
  for (std::size_t i = 0; i < c.length; ++i) {
    const std::size_t s = g.index_of(c.vertices[i]);
    const std::size_t r = g.index_of(c.vertices[(i + 1) % c.length]);
    const auto& outs = g.out_edges(s);
    const bool found = std::any_of(outs.begin(), outs.end(), [&](std::size_t e) {
      return g.edges()[e].id == c.edges[i] && g.range_index(e) == r;
    });
    if (!found)
      throw Error(ErrorKind::InvalidArgument,
                  "cycle edge '" + c.edges[i] + "' is not an edge of the graph");
  }
  const std::size_t b = g.index_of(base);
  return reverse_paths(g, b, b);
}

DirectedGraph build_line(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "line needs n >= 1");
  GraphBuilder b;
  b.add_vertex("v1");
  for (std::size_t i = 1; i < n; ++i)
    b.add_edge("v" + std::to_string(i), "v" + std::to_string(i + 1));
  return b.build();
}

DirectedGraph build_cycle_tail(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "cycle tail needs n >= 1");
  GraphBuilder b;
  b.add_vertex("v1");
  for (std::size_t i = 1; i < n; ++i)
    b.add_edge("v" + std::to_string(i), "v" + std::to_string(i + 1));
  b.add_edge("v" + std::to_string(n), "v" + std::to_string(n));
  return b.build();
}

}  // namespace gradlpa
