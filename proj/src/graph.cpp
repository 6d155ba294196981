#include "cliquetree/graph.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <iterator>
#include <map>
#include <sstream>

namespace cliquetree {

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_intersect(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_minus(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool set_contains(const VertexSet& s, VertexId v) {
  return std::binary_search(s.begin(), s.end(), v);
}

bool is_subset(const VertexSet& a, const VertexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

void sort_unique(VertexSet& s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
}

Graph Graph::from_edges(std::size_t n,
                        const std::vector<std::pair<VertexId, VertexId>>& edges,
                        std::vector<std::string> names) {
  Graph g;
  g.n = n;
  g.adj.assign(n, {});
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw DomainError("edge endpoint out of range");
    if (u == v) throw DomainError("loop edge not allowed in a simple graph");
    g.adj[u].push_back(v);
    g.adj[v].push_back(u);
  }
  for (auto& nb : g.adj) sort_unique(nb);
  if (names.empty()) {
    g.names.reserve(n);
    for (std::size_t v = 0; v < n; ++v) g.names.push_back(std::to_string(v));
  } else {
    if (names.size() != n) throw DomainError("name list does not match vertex count");
    g.names = std::move(names);
  }
  return g;
}

bool Graph::adjacent(VertexId u, VertexId v) const {
  if (u >= n || v >= n || u == v) return false;
  return set_contains(adj[u], v);
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& nb : adj) twice += nb.size();
  return twice / 2;
}

std::vector<std::pair<VertexId, VertexId>> Graph::edges() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v : adj[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

bool Graph::connected() const {
  if (n == 0) return true;
  std::vector<bool> seen(n, false);
  std::deque<VertexId> queue{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    for (VertexId u : adj[v])
      if (!seen[u]) {
        seen[u] = true;
        ++reached;
        queue.push_back(u);
      }
  }
  return reached == n;
}

std::optional<VertexId> Graph::vertex_by_name(const std::string& name) const {
  for (VertexId v = 0; v < n; ++v)
    if (names[v] == name) return v;
  return std::nullopt;
}

Graph induced_subgraph(const Graph& g, const VertexSet& keep) {
  std::vector<std::size_t> to_new(g.n, g.n);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] >= g.n) throw DomainError("vertex out of range");
    to_new[keep[i]] = i;
  }
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::vector<std::string> names;
  names.reserve(keep.size());
  for (VertexId v : keep) names.push_back(g.names[v]);
  for (VertexId v : keep)
    for (VertexId u : g.adj[v])
      if (u > v && to_new[u] != g.n) edges.emplace_back(to_new[v], to_new[u]);
  return Graph::from_edges(keep.size(), edges, std::move(names));
}

Graph parse_graph(std::istream& in, std::vector<std::string>* warnings) {
  std::map<std::string, VertexId> ids;
  std::vector<std::string> names;
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::map<std::pair<VertexId, VertexId>, bool> seen;

  auto intern = [&](const std::string& token) {
    auto it = ids.find(token);
    if (it != ids.end()) return it->second;
    VertexId v = names.size();
    ids.emplace(token, v);
    names.push_back(token);
    return v;
  };

  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream row(line);
    std::string a, b, extra;
    if (!(row >> a)) continue;
    if (!(row >> b) || (row >> extra))
      throw ParseError("line " + std::to_string(lineno) +
                       ": expected exactly two vertex names");
    if (a == b)
      throw ParseError("line " + std::to_string(lineno) + ": loop edge '" + a +
                       " " + b + "'");
    VertexId u = intern(a), v = intern(b);
    auto key = std::minmax(u, v);
    if (seen.emplace(key, true).second) {
      edges.emplace_back(u, v);
    } else if (warnings) {
      warnings->push_back("line " + std::to_string(lineno) +
                          ": duplicate edge '" + a + " " + b + "' ignored");
    }
  }
  std::size_t n = names.size();  // read before the move below
  return Graph::from_edges(n, edges, std::move(names));
}

Graph parse_graph(const std::string& text, std::vector<std::string>* warnings) {
  std::istringstream in(text);
  return parse_graph(in, warnings);
}

Multigraph Multigraph::with_fresh_labels(
    std::size_t n, const std::vector<std::pair<VertexId, VertexId>>& endpoints) {
  Multigraph g;
  g.n = n;
  g.edges.reserve(endpoints.size());
  for (std::size_t i = 0; i < endpoints.size(); ++i) {
    auto [u, v] = endpoints[i];
    if (u >= n || v >= n) throw DomainError("edge endpoint out of range");
    g.edges.push_back({std::min(u, v), std::max(u, v), i});
  }
  return g;
}

bool Multigraph::connected_ignoring_loops() const {
  if (n == 0) return true;
  std::vector<std::vector<VertexId>> adj(n);
  for (const auto& e : edges)
    if (e.u != e.v) {
      adj[e.u].push_back(e.v);
      adj[e.v].push_back(e.u);
    }
  std::vector<bool> seen(n, false);
  std::deque<VertexId> queue{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    for (VertexId u : adj[v])
      if (!seen[u]) {
        seen[u] = true;
        ++reached;
        queue.push_back(u);
      }
  }
  return reached == n;
}

Multigraph contract(const Multigraph& g, const std::vector<VertexSet>& parts) {
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> block(g.n, kUnset);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].empty()) throw DomainError("empty part in contraction");
    for (VertexId v : parts[i]) {
      if (v >= g.n) throw DomainError("part vertex out of range");
      if (block[v] != kUnset) throw DomainError("parts are not disjoint");
      block[v] = i;
    }
  }
  std::size_t next = parts.size();
  for (VertexId v = 0; v < g.n; ++v)
    if (block[v] == kUnset) block[v] = next++;

  Multigraph out;
  out.n = next;
  out.edges.reserve(g.edges.size());
  for (const auto& e : g.edges) {
    VertexId u = block[e.u], v = block[e.v];
    out.edges.push_back({std::min(u, v), std::max(u, v), e.label});
  }
  return out;
}

std::optional<PeoViolation> check_peo(const Graph& g, const Peo& peo) {
  if (peo.order.size() != g.n) throw DomainError("order does not cover the graph");
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> pos(g.n, kUnset);
  for (std::size_t i = 0; i < peo.order.size(); ++i) {
    VertexId v = peo.order[i];
    if (v >= g.n || pos[v] != kUnset) throw DomainError("order is not a permutation");
    pos[v] = i;
  }
  for (VertexId v : peo.order) {
    VertexSet later;
    for (VertexId u : g.adj[v])
      if (pos[u] > pos[v]) later.push_back(u);
    for (std::size_t i = 0; i < later.size(); ++i)
      for (std::size_t j = i + 1; j < later.size(); ++j)
        if (!g.adjacent(later[i], later[j]))
          return PeoViolation{v, later[i], later[j]};
  }
  return std::nullopt;
}

namespace {

// Maximum cardinality search; ties broken toward the lowest id.  Visiting
// order reversed is an elimination order, valid exactly when g is chordal.
std::vector<VertexId> mcs_visit_order(const Graph& g) {
  std::vector<std::size_t> weight(g.n, 0);
  std::vector<bool> visited(g.n, false);
  std::vector<VertexId> out;
  out.reserve(g.n);
  for (std::size_t step = 0; step < g.n; ++step) {
    VertexId best = g.n;
    for (VertexId v = 0; v < g.n; ++v)
      if (!visited[v] && (best == g.n || weight[v] > weight[best])) best = v;
    visited[best] = true;
    out.push_back(best);
    for (VertexId u : g.adj[best])
      if (!visited[u]) ++weight[u];
  }
  return out;
}

// Finds a chordless cycle of length >= 4 in a graph known not to be
// chordal.  For each vertex v with nonadjacent neighbors x, y, a shortest
// x-y path outside N[v] (keeping x, y) closes into an induced cycle
// through v; such a configuration exists whenever a hole does.
Cycle find_hole(const Graph& g) {
  for (VertexId v = 0; v < g.n; ++v) {
    for (std::size_t i = 0; i < g.adj[v].size(); ++i) {
      for (std::size_t j = i + 1; j < g.adj[v].size(); ++j) {
        VertexId x = g.adj[v][i], y = g.adj[v][j];
        if (g.adjacent(x, y)) continue;
        std::vector<bool> blocked(g.n, false);
        blocked[v] = true;
        for (VertexId u : g.adj[v]) blocked[u] = true;
        blocked[x] = blocked[y] = false;

        constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
        std::vector<std::size_t> parent(g.n, kUnset);
        std::deque<VertexId> queue{x};
        parent[x] = x;
        while (!queue.empty() && parent[y] == kUnset) {
          VertexId w = queue.front();
          queue.pop_front();
          for (VertexId u : g.adj[w])
            if (!blocked[u] && parent[u] == kUnset) {
              parent[u] = w;
              queue.push_back(u);
            }
        }
        if (parent[y] == kUnset) continue;
        std::vector<VertexId> path{y};
        while (path.back() != x) path.push_back(parent[path.back()]);
        std::reverse(path.begin(), path.end());
        Cycle hole;
        hole.vertices.push_back(v);
        hole.vertices.insert(hole.vertices.end(), path.begin(), path.end());
        return hole;
      }
    }
  }
  throw std::logic_error("hole search failed on a non-chordal graph");
}

}  // namespace

ChordalityResult is_chordal(const Graph& g) {
  if (g.n == 0) throw DomainError("empty graph");
  if (!g.connected()) throw DomainError("graph is not connected");
  Peo peo{mcs_visit_order(g)};
  std::reverse(peo.order.begin(), peo.order.end());
  ChordalityResult result;
  if (!check_peo(g, peo)) {
    result.peo = std::move(peo);
  } else {
    result.witness = find_hole(g);
  }
  return result;
}

std::pair<VertexId, VertexId> find_two_chord(const Graph& g, const Cycle& cycle) {
  const auto& c = cycle.vertices;
  const std::size_t k = c.size();
  if (k < 4) throw DomainError("cycle has fewer than four vertices");
  {
    VertexSet distinct(c.begin(), c.end());
    sort_unique(distinct);
    if (distinct.size() != k) throw DomainError("cycle repeats a vertex");
  }
  for (std::size_t i = 0; i < k; ++i)
    if (!g.adjacent(c[i], c[(i + 1) % k]))
      throw DomainError("consecutive cycle vertices are not adjacent");

  bool any_chord = false;
  for (std::size_t i = 0; i < k; ++i) {
    VertexId a = c[i], b = c[(i + 2) % k];
    if (g.adjacent(a, b)) return {a, b};
  }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 2; j < k; ++j) {
      if (i == 0 && j == k - 1) continue;
      if (g.adjacent(c[i], c[j])) any_chord = true;
    }
  if (!any_chord) throw DomainError("cycle is chordless");
  throw DomainError("cycle has chords but none at distance two; graph is not chordal");
}

}  // namespace cliquetree
