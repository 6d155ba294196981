#pragma once

// Finite simple graphs, edge-labeled multigraphs, and chordality testing.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cliquetree {

using VertexId = std::size_t;

// Sorted vector of distinct vertex ids.  All set-valued data in this
// library uses this representation so that equality is structural.
using VertexSet = std::vector<VertexId>;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Set algebra on sorted vectors.
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_intersect(const VertexSet& a, const VertexSet& b);
VertexSet set_minus(const VertexSet& a, const VertexSet& b);
bool set_contains(const VertexSet& s, VertexId v);
bool is_subset(const VertexSet& a, const VertexSet& b);
void sort_unique(VertexSet& s);

struct Graph {
  std::size_t n = 0;
  std::vector<VertexSet> adj;       // sorted neighbor lists, no loops
  std::vector<std::string> names;   // display names, defaults to decimal ids

  // Throws DomainError on loops or out-of-range endpoints; parallel pairs
  // collapse to one edge.
  static Graph from_edges(std::size_t n,
                          const std::vector<std::pair<VertexId, VertexId>>& edges,
                          std::vector<std::string> names = {});

  bool adjacent(VertexId u, VertexId v) const;
  std::size_t degree(VertexId v) const { return adj[v].size(); }
  std::size_t edge_count() const;
  // Edges as u < v pairs in lexicographic order.
  std::vector<std::pair<VertexId, VertexId>> edges() const;
  bool connected() const;
  const std::string& name(VertexId v) const { return names[v]; }
  std::optional<VertexId> vertex_by_name(const std::string& name) const;
};

Graph induced_subgraph(const Graph& g, const VertexSet& keep);

// Edge-list text format: one edge per line as two whitespace-separated
// vertex names, '#' starts a comment, blank lines are skipped.  Vertex ids
// are assigned in order of first appearance.  Loops are rejected; a
// repeated edge is dropped with a note appended to *warnings.
Graph parse_graph(std::istream& in, std::vector<std::string>* warnings = nullptr);
Graph parse_graph(const std::string& text, std::vector<std::string>* warnings = nullptr);

// Multigraph with distinct edge labels; parallel edges and loops allowed.
// Labels survive contraction, which is what downstream code keys on.
struct Multigraph {
  struct Edge {
    VertexId u = 0, v = 0;    // u <= v
    std::size_t label = 0;
  };

  std::size_t n = 0;
  std::vector<Edge> edges;

  static Multigraph with_fresh_labels(
      std::size_t n, const std::vector<std::pair<VertexId, VertexId>>& endpoints);

  // Loops never help connectivity; they are skipped here.
  bool connected_ignoring_loops() const;
};

// Quotient of g by a partition block list.  parts must be disjoint sets of
// valid vertices; vertices not covered by any part become singleton blocks.
// Block i of parts maps to vertex i; leftover vertices follow in id order.
// Every edge survives with its label, possibly as a loop.
Multigraph contract(const Multigraph& g, const std::vector<VertexSet>& parts);

// Elimination order: order[i] is eliminated at step i, and validity means
// the later neighbors of each vertex form a complete set.
struct Peo {
  std::vector<VertexId> order;
};

struct PeoViolation {
  VertexId vertex;        // eliminated vertex
  VertexId later_a, later_b;  // nonadjacent later neighbors
};

std::optional<PeoViolation> check_peo(const Graph& g, const Peo& peo);

// Chordless cycle on >= 4 distinct vertices; consecutive entries adjacent,
// wrapping around, and no other pair adjacent.
struct Cycle {
  std::vector<VertexId> vertices;
};

struct ChordalityResult {
  std::optional<Peo> peo;       // set iff chordal
  std::optional<Cycle> witness; // set iff not chordal
  bool chordal() const { return peo.has_value(); }
};

// Maximum cardinality search; requires a connected nonempty graph.
ChordalityResult is_chordal(const Graph& g);

// For a cycle of length >= 4 in a chordal graph, returns a chord joining
// two vertices at distance exactly two along the cycle, so the chord cuts
// off a triangle.  Throws DomainError if the cycle is malformed, chordless,
// or admits no such chord (then g was not chordal).
std::pair<VertexId, VertexId> find_two_chord(const Graph& g, const Cycle& cycle);

}  // namespace cliquetree
