#include "support.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace cliquetree::testing {
namespace {

std::vector<std::string> decimal_names(std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
  return names;
}

}  // namespace

Graph make_graph(std::size_t n,
                 const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  std::vector<std::pair<VertexId, VertexId>> es(edges.begin(), edges.end());
  return Graph::from_edges(n, es, decimal_names(n));
}

Graph path_graph(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return make_graph(n, edges);
}

Graph cycle_graph(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(n - 1, 0);
  return make_graph(n, edges);
}

Graph complete_graph(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return make_graph(n, edges);
}

Graph star_graph(std::size_t leaves) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return make_graph(leaves + 1, edges);
}

bool chordal_by_elimination(const Graph& g) {
  std::vector<std::vector<char>> adj(g.n, std::vector<char>(g.n, 0));
  for (VertexId v = 0; v < g.n; ++v)
    for (VertexId w : g.adj[v]) adj[v][w] = 1;
  std::vector<char> alive(g.n, 1);

  for (std::size_t step = 0; step < g.n; ++step) {
    bool found = false;
    for (VertexId v = 0; v < g.n && !found; ++v) {
      if (!alive[v]) continue;
      bool simplicial = true;
      for (VertexId a = 0; a < g.n && simplicial; ++a) {
        if (!alive[a] || !adj[v][a]) continue;
        for (VertexId b = a + 1; b < g.n && simplicial; ++b)
          if (alive[b] && adj[v][b] && !adj[a][b]) simplicial = false;
      }
      if (simplicial) {
        alive[v] = 0;
        found = true;
      }
    }
    if (!found) return false;
  }
  return true;
}

std::vector<Graph> exhaustive_connected(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  if (pairs.size() > 20) throw std::invalid_argument("graph too large to exhaust");

  std::vector<Graph> out;
  for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if ((mask >> k) & 1) edges.push_back(pairs[k]);

    // Own connectivity check so the corpus does not lean on the library.
    std::vector<std::vector<std::size_t>> adj(n);
    for (auto [a, b] : edges) {
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
    std::vector<char> seen(n, 0);
    std::vector<std::size_t> stack = {0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t w : adj[v])
        if (!seen[w]) {
          seen[w] = 1;
          ++reached;
          stack.push_back(w);
        }
    }
    if (reached != n) continue;
    out.push_back(make_graph(n, edges));
  }
  return out;
}

std::vector<Graph> exhaustive_connected_chordal(std::size_t max_n) {
  std::vector<Graph> out;
  for (std::size_t n = 1; n <= max_n; ++n)
    for (Graph& g : exhaustive_connected(n))
      if (chordal_by_elimination(g)) out.push_back(std::move(g));
  return out;
}

Graph random_chordal(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  for (std::size_t k = 1; k < n; ++k) {
    std::size_t r = std::uniform_int_distribution<std::size_t>(0, k - 1)(rng);
    // Grow a complete set around r from its neighborhood.
    std::vector<std::size_t> base = {r};
    std::vector<std::size_t> candidates;
    for (std::size_t u = 0; u < k; ++u)
      if (adj[r][u]) candidates.push_back(u);
    std::shuffle(candidates.begin(), candidates.end(), rng);
    for (std::size_t u : candidates) {
      bool complete = true;
      for (std::size_t b : base)
        if (!adj[u][b]) {
          complete = false;
          break;
        }
      if (complete && std::uniform_int_distribution<int>(0, 1)(rng)) base.push_back(u);
    }
    for (std::size_t b : base) {
      adj[k][b] = adj[b][k] = 1;
      edges.emplace_back(b, k);
    }
  }
  return make_graph(n, edges);
}

std::vector<std::vector<std::size_t>> spanning_trees_by_subsets(const Multigraph& m) {
  std::vector<std::size_t> usable;  // indices into m.edges
  for (std::size_t e = 0; e < m.edges.size(); ++e)
    if (m.edges[e].u != m.edges[e].v) usable.push_back(e);
  if (usable.size() > 20) throw std::invalid_argument("multigraph too large to exhaust");

  std::vector<std::vector<std::size_t>> out;
  if (m.n == 0) return out;
  const std::size_t want = m.n - 1;

  for (std::uint32_t mask = 0; mask < (1u << usable.size()); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != want) continue;
    std::vector<std::size_t> parent(m.n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    bool acyclic = true;
    for (std::size_t k = 0; k < usable.size() && acyclic; ++k) {
      if (!((mask >> k) & 1)) continue;
      const auto& e = m.edges[usable[k]];
      std::size_t a = find(e.u), b = find(e.v);
      if (a == b)
        acyclic = false;
      else
        parent[a] = b;
    }
    if (!acyclic) continue;
    // want edges and no cycle over n vertices means spanning.
    std::vector<std::size_t> labels;
    for (std::size_t k = 0; k < usable.size(); ++k)
      if ((mask >> k) & 1) labels.push_back(m.edges[usable[k]].label);
    std::sort(labels.begin(), labels.end());
    out.push_back(std::move(labels));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool clique_tree_by_definition(const CliqueGraph& cg, const CliqueTree& t) {
  const std::size_t k = cg.clique_count();
  if (t.edges.size() + 1 != k) return false;

  std::vector<std::vector<std::size_t>> adj(k);
  for (std::size_t e : t.edges) {
    if (e >= cg.edges.size()) return false;
    adj[cg.edges[e].a].push_back(cg.edges[e].b);
    adj[cg.edges[e].b].push_back(cg.edges[e].a);
  }

  auto connected_within = [&](const std::vector<std::size_t>& keep) {
    if (keep.empty()) return false;
    std::vector<char> in(k, 0), seen(k, 0);
    for (std::size_t c : keep) in[c] = 1;
    std::vector<std::size_t> stack = {keep[0]};
    seen[keep[0]] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
      std::size_t c = stack.back();
      stack.pop_back();
      for (std::size_t d : adj[c])
        if (in[d] && !seen[d]) {
          seen[d] = 1;
          ++reached;
          stack.push_back(d);
        }
    }
    return reached == keep.size();
  };

  std::vector<std::size_t> all(k);
  std::iota(all.begin(), all.end(), 0);
  if (!connected_within(all)) return false;  // k-1 edges + connected = tree

  for (VertexId v = 0; v < cg.vertex_count(); ++v)
    if (!connected_within(cg.containing[v])) return false;
  return true;
}

Rational isp_by_subsets(const Graph& g, const std::vector<Rational>& p,
                        std::uint32_t mask) {
  Rational sum = 0;
  for (std::uint32_t s = mask;; s = (s - 1) & mask) {
    bool independent = true;
    for (VertexId u = 0; u < g.n && independent; ++u) {
      if (!((s >> u) & 1)) continue;
      for (VertexId v = u + 1; v < g.n && independent; ++v)
        if (((s >> v) & 1) && g.adjacent(u, v)) independent = false;
    }
    if (independent) {
      Rational term = 1;
      for (VertexId v = 0; v < g.n; ++v)
        if ((s >> v) & 1) term *= -p[v];
      sum += term;
    }
    if (s == 0) break;
  }
  return sum;
}

}  // namespace cliquetree::testing
