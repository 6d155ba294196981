#pragma once

// Minimal vertex separators of a chordal graph, read off the family
// lattice, plus a brute-force oracle and the reduced clique graph.

#include <cstddef>
#include <vector>

#include "cliquetree/clique_lattice.hpp"
#include "cliquetree/clique_trees.hpp"
#include "cliquetree/graph.hpp"

namespace cliquetree {

// Separators in (size, members) order.  A set counts as a minimal
// separator when it separates some vertex pair and no proper subset
// separates that same pair.
using SeparatorList = std::vector<VertexSet>;

// Largest generators of the families whose contracted graph has at least
// two classes, skipping the empty set.
SeparatorList minimal_separators_lattice(const FamilyLattice& lattice);

// Exhaustive check over all vertex subsets and nonadjacent pairs; gated
// because the subset scan is exponential.
SeparatorList minimal_separators_oracle(const Graph& g, std::size_t gate = 12);

// Edges K1K2 of the clique graph whose label K1 ∩ K2 separates K1 from K2
// in the underlying graph.  Such a label is always a minimal separator, so
// the given list acts as a necessary-condition filter; the converse fails,
// since a label can separate some other part of the graph while this clique
// pair stays connected around it.  Equals the union of all clique trees.
std::vector<std::size_t> reduced_clique_graph(const CliqueGraph& cg,
                                              const SeparatorList& separators);

struct CliqueTreeUnion {
  std::vector<std::size_t> union_edges;  // sorted clique-graph edge indices
  // For each enumerated tree, the sorted set of its edge labels as vertex
  // sets; identical across trees.
  std::vector<std::vector<VertexSet>> per_tree_labels;
};

// Materializes every clique tree; intended for small graphs and tests.
CliqueTreeUnion clique_tree_union(const CliqueGraph& cg, const FamilyLattice& lattice);

}  // namespace cliquetree
