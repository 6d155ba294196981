#pragma once

// Shared helpers for the tests: small graph builders, exhaustive and random
// chordal corpora, and slow independent oracles to check the library
// against.  Nothing here reuses the code paths under test: chordality goes
// through greedy simplicial elimination, spanning trees through subset
// enumeration, and the independent-set polynomial through direct summation.

#include <cstddef>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "cliquetree/clique_lattice.hpp"
#include "cliquetree/clique_trees.hpp"
#include "cliquetree/graph.hpp"
#include "cliquetree/shearer.hpp"

namespace cliquetree::testing {

// Graph with vertices named "0".."n-1".
Graph make_graph(std::size_t n,
                 const std::vector<std::pair<std::size_t, std::size_t>>& edges);

Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
// Vertex 0 adjacent to each of 1..leaves.
Graph star_graph(std::size_t leaves);

// Chordality by repeatedly deleting a simplicial vertex; succeeds on all n
// vertices iff the graph is chordal.
bool chordal_by_elimination(const Graph& g);

// Every connected graph on exactly n labeled vertices.
std::vector<Graph> exhaustive_connected(std::size_t n);

// Every connected chordal graph with 1..max_n labeled vertices, filtered
// with chordal_by_elimination.
std::vector<Graph> exhaustive_connected_chordal(std::size_t max_n);

// Connected chordal graph grown by joining each new vertex to a random
// nonempty complete subset of the current graph.
Graph random_chordal(std::size_t n, std::mt19937_64& rng);

// All spanning trees as sorted label lists, by trying every subset of the
// non-loop edges; result sorted lexicographically.  Needs at most 20
// non-loop edges.
std::vector<std::vector<std::size_t>> spanning_trees_by_subsets(const Multigraph& m);

// Clique-tree test straight from the definition: t is a spanning tree of
// the clique graph and each vertex's cliques induce a connected subgraph.
bool clique_tree_by_definition(const CliqueGraph& cg, const CliqueTree& t);

// Independent-set polynomial restricted to the vertices in mask, summed
// term by term over explicit subsets.
Rational isp_by_subsets(const Graph& g, const std::vector<Rational>& p,
                        std::uint32_t mask);

}  // namespace cliquetree::testing
