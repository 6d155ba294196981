#include "cliquetree/separators.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace cliquetree {

namespace {

bool size_lex_less(const VertexSet& a, const VertexSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace

SeparatorList minimal_separators_lattice(const FamilyLattice& lattice) {
  SeparatorList out;
  for (std::size_t f = 0; f < lattice.size(); ++f) {
    if (lattice.graphs[f].classes.size() < 2) continue;
    const VertexSet& delta = lattice.families[f].max_generator;
    if (delta.empty()) continue;
    out.push_back(delta);
  }
  // Distinct families have distinct largest generators, but the guard is
  // cheap and keeps the output a set.
  std::sort(out.begin(), out.end(), size_lex_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

// Reachability with the masked vertices removed.
bool separates(const std::vector<std::uint64_t>& adj, VertexId u, VertexId v,
               std::uint64_t removed) {
  std::uint64_t seen = std::uint64_t{1} << u;
  std::uint64_t frontier = seen;
  while (frontier) {
    std::uint64_t next = 0;
    std::uint64_t scan = frontier;
    while (scan) {
      int w = std::countr_zero(scan);
      scan &= scan - 1;
      next |= adj[w];
    }
    next &= ~removed & ~seen;
    if (next & (std::uint64_t{1} << v)) return false;
    seen |= next;
    frontier = next;
  }
  return true;
}

}  // namespace

SeparatorList minimal_separators_oracle(const Graph& g, std::size_t gate) {
  if (gate > 24) throw DomainError("oracle gate beyond the supported range");
  if (g.n > gate) throw DomainError("graph too large for the separator oracle");

  std::vector<std::uint64_t> adj(g.n, 0);
  for (VertexId v = 0; v < g.n; ++v)
    for (VertexId u : g.adj[v]) adj[v] |= std::uint64_t{1} << u;

  SeparatorList out;
  const std::uint64_t all = (g.n == 64) ? ~std::uint64_t{0}
                                        : (std::uint64_t{1} << g.n) - 1;
  for (VertexId u = 0; u < g.n; ++u) {
    for (VertexId v = u + 1; v < g.n; ++v) {
      if (g.adjacent(u, v)) continue;
      const std::uint64_t candidates = all & ~(std::uint64_t{1} << u) &
                                       ~(std::uint64_t{1} << v);
      // Every subset of the other vertices, tested for separating u from v
      // minimally with respect to this pair.
      for (std::uint64_t s = candidates;; s = (s - 1) & candidates) {
        if (separates(adj, u, v, s)) {
          bool minimal = true;
          for (std::uint64_t rest = s; rest && minimal; rest &= rest - 1) {
            std::uint64_t without = s & ~(rest & (~rest + 1));
            minimal = !separates(adj, u, v, without);
          }
          if (minimal) {
            VertexSet sep;
            for (std::uint64_t rest = s; rest; rest &= rest - 1)
              sep.push_back(static_cast<VertexId>(std::countr_zero(rest)));
            out.push_back(std::move(sep));
          }
        }
        if (s == 0) break;
      }
    }
  }
  std::sort(out.begin(), out.end(), size_lex_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::size_t> reduced_clique_graph(const CliqueGraph& cg,
                                              const SeparatorList& separators) {
  // Every edge of the underlying graph lies inside a maximal clique, so the
  // adjacency can be rebuilt from the clique list alone.
  std::size_t n = cg.vertex_count();
  std::vector<VertexSet> adj(n);
  for (const VertexSet& k : cg.cliques)
    for (std::size_t i = 0; i < k.size(); ++i)
      for (std::size_t j = i + 1; j < k.size(); ++j) {
        adj[k[i]].push_back(k[j]);
        adj[k[j]].push_back(k[i]);
      }
  for (auto& nb : adj) sort_unique(nb);

  std::vector<std::size_t> out;
  std::vector<char> blocked(n), seen(n), target(n);
  for (std::size_t e = 0; e < cg.edges.size(); ++e) {
    const CliqueGraphEdge& edge = cg.edges[e];
    // A label that separates its endpoint cliques is always a minimal
    // separator, so list membership is a cheap necessary condition.  It is
    // not sufficient: the label may be a minimal separator elsewhere in the
    // graph while this clique pair stays connected around it.
    if (std::find(separators.begin(), separators.end(), edge.label) ==
        separators.end())
      continue;
    std::fill(blocked.begin(), blocked.end(), 0);
    std::fill(seen.begin(), seen.end(), 0);
    std::fill(target.begin(), target.end(), 0);
    for (VertexId v : edge.label) blocked[v] = 1;
    for (VertexId v : cg.cliques[edge.b])
      if (!blocked[v]) target[v] = 1;
    std::vector<VertexId> stack;
    for (VertexId v : cg.cliques[edge.a])
      if (!blocked[v]) {
        seen[v] = 1;
        stack.push_back(v);
      }
    bool reached = false;
    while (!stack.empty() && !reached) {
      VertexId v = stack.back();
      stack.pop_back();
      if (target[v]) {
        reached = true;
        break;
      }
      for (VertexId u : adj[v])
        if (!blocked[u] && !seen[u]) {
          seen[u] = 1;
          stack.push_back(u);
        }
    }
    if (!reached) out.push_back(e);
  }
  return out;
}

CliqueTreeUnion clique_tree_union(const CliqueGraph& cg, const FamilyLattice& lattice) {
  CliqueTreeUnion out;
  CliqueTreeEnumerator trees(cg, lattice);
  while (auto t = trees.next()) {
    std::vector<VertexSet> labels;
    labels.reserve(t->edges.size());
    for (std::size_t e : t->edges) labels.push_back(cg.edges[e].label);
    std::sort(labels.begin(), labels.end(), size_lex_less);
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    out.per_tree_labels.push_back(std::move(labels));
    out.union_edges.insert(out.union_edges.end(), t->edges.begin(), t->edges.end());
  }
  sort_unique(out.union_edges);
  return out;
}

}  // namespace cliquetree
