#pragma once

// Maximal cliques of a chordal graph, the clique graph with intersection
// labels, and the lattice of clique families together with the per-family
// auxiliary graphs used to factor clique trees.

#include <cstddef>
#include <optional>
#include <vector>

#include "cliquetree/graph.hpp"

namespace cliquetree {

struct CliqueGraphEdge {
  std::size_t a = 0, b = 0;  // clique indices, a < b
  VertexSet label;           // cliques[a] ∩ cliques[b], nonempty
};

struct CliqueGraph {
  std::vector<VertexSet> cliques;  // maximal cliques in lexicographic order
  std::vector<CliqueGraphEdge> edges;  // lexicographic by (a, b)
  std::vector<std::vector<std::size_t>> containing;  // vertex -> clique indices

  std::size_t clique_count() const { return cliques.size(); }
  std::size_t vertex_count() const { return containing.size(); }
  std::optional<std::size_t> edge_index(std::size_t a, std::size_t b) const;
  std::optional<std::size_t> clique_index(const VertexSet& members) const;
};

// Maximal cliques from an elimination order: the candidate at v is v plus
// its later neighbors, and every maximal clique arises this way.
std::vector<VertexSet> enumerate_cliques(const Graph& g, const Peo& peo);

// Requires a connected chordal graph; throws DomainError otherwise.
CliqueGraph build_clique_graph(const Graph& g);

// A family is the set of cliques containing some complete vertex set (its
// generator); the intersection of the members is the largest generator.
struct CliqueFamily {
  std::vector<std::size_t> members;  // sorted clique indices
  VertexSet max_generator;           // intersection of all members
};

// Per-family edge split of the induced clique-graph edges.
//
//  r_edges: label generates a strictly smaller family than this one
//  s_edges: label equals the family's largest generator
//
// The members fall into equivalence classes, the components of the r-edge
// graph; contracting the s-edges by those classes gives the multigraph b,
// whose edge labels are clique-graph edge indices.  b is complete as a
// graph (possibly with parallel edges and loops).
struct FamilyGraphs {
  std::size_t family = 0;
  std::vector<std::size_t> r_edges;  // clique-graph edge indices, sorted
  std::vector<std::size_t> s_edges;
  std::vector<std::vector<std::size_t>> classes;  // partition of members
  Multigraph b;
};

struct FamilyLattice {
  std::vector<CliqueFamily> families;  // sorted by (size, members)
  std::vector<FamilyGraphs> graphs;    // aligned with families

  std::size_t size() const { return families.size(); }
  std::optional<std::size_t> find(const std::vector<std::size_t>& members) const;
};

// Family generated by a complete set: all cliques containing it.  Throws
// DomainError when no clique contains the set (then it was not complete).
CliqueFamily family_of(const CliqueGraph& cg, const VertexSet& generator);

// Closure of the vertex families and the full family under intersection of
// member sets, keeping the nonempty ones.  Every family of a complete set
// appears in the result.
FamilyLattice enumerate_families(const CliqueGraph& cg);

// Maps each clique-graph edge to the family generated by its label; every
// edge of the clique graph lands in exactly one family's s_edges.
std::vector<std::size_t> edge_partition(const CliqueGraph& cg, const FamilyLattice& lattice);

// All complete vertex sets of g including the empty set, in (size, members)
// order.  Exponential in general; gated to small graphs.
std::vector<VertexSet> complete_sets(const Graph& g, std::size_t gate = 20);

// Generators of a family: complete sets whose family equals it.
std::vector<VertexSet> generators_of(const CliqueGraph& cg, const FamilyLattice& lattice,
                                     std::size_t family, const Graph& g);

}  // namespace cliquetree
