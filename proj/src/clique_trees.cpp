#include "cliquetree/clique_trees.hpp"

#include <algorithm>
#include <deque>
#include <iterator>

namespace cliquetree {

namespace {

struct Dsu {
  std::vector<std::size_t> parent;
  std::size_t components;
  explicit Dsu(std::size_t n) : parent(n), components(n) {
    for (std::size_t i = 0; i < n; ++i) parent[i] = i;
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    --components;
    return true;
  }
};

void enumerate_trees(const std::vector<Multigraph::Edge>& edges, std::size_t next,
                     const Dsu& dsu, std::vector<std::size_t>& chosen,
                     const std::function<void(const std::vector<std::size_t>&)>& visit) {
  if (dsu.components == 1) {
    visit(chosen);
    return;
  }
  // Prune: the remaining edges must be able to connect what is left.
  Dsu probe = dsu;
  for (std::size_t i = next; i < edges.size(); ++i) probe.unite(edges[i].u, edges[i].v);
  if (probe.components != 1) return;

  const auto& e = edges[next];
  Dsu with = dsu;
  if (with.unite(e.u, e.v)) {
    chosen.push_back(e.label);
    enumerate_trees(edges, next + 1, with, chosen, visit);
    chosen.pop_back();
  }
  enumerate_trees(edges, next + 1, dsu, chosen, visit);
}

}  // namespace

void for_each_spanning_tree(const Multigraph& g,
                            const std::function<void(const std::vector<std::size_t>&)>& visit) {
  if (!g.connected_ignoring_loops()) throw DomainError("multigraph is disconnected");
  if (g.n <= 1) {
    visit({});
    return;
  }
  std::vector<Multigraph::Edge> edges;
  for (const auto& e : g.edges)
    if (e.u != e.v) edges.push_back(e);
  std::vector<std::size_t> chosen;
  enumerate_trees(edges, 0, Dsu(g.n), chosen, visit);
}

std::vector<LabeledSpanningTree> spanning_trees(const Multigraph& g) {
  std::vector<LabeledSpanningTree> out;
  for_each_spanning_tree(g, [&out](const std::vector<std::size_t>& labels) {
    LabeledSpanningTree t;
    t.edge_labels = labels;
    std::sort(t.edge_labels.begin(), t.edge_labels.end());
    out.push_back(std::move(t));
  });
  std::sort(out.begin(), out.end(), [](const LabeledSpanningTree& a, const LabeledSpanningTree& b) {
    return a.edge_labels < b.edge_labels;
  });
  return out;
}

namespace {

// Fraction-free Gaussian elimination; every division is exact on integer
// input, so the value is computed without rationals.
BigInt det_bareiss(std::vector<std::vector<BigInt>> m) {
  const std::size_t sz = m.size();
  if (sz == 0) return 1;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < sz; ++k) {
    if (m[k][k] == 0) {
      std::size_t pivot = k + 1;
      while (pivot < sz && m[pivot][k] == 0) ++pivot;
      if (pivot == sz) return 0;
      std::swap(m[k], m[pivot]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < sz; ++i)
      for (std::size_t j = k + 1; j < sz; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[sz - 1][sz - 1];
}

}  // namespace

BigInt count_spanning_trees(const Multigraph& g) {
  if (g.n == 0) return 1;
  if (!g.connected_ignoring_loops()) return 0;
  if (g.n == 1) return 1;
  // Any cofactor of the Laplacian counts the spanning trees.
  std::vector<std::vector<BigInt>> minor(g.n - 1, std::vector<BigInt>(g.n - 1, 0));
  for (const auto& e : g.edges) {
    if (e.u == e.v) continue;
    if (e.u < g.n - 1) minor[e.u][e.u] += 1;
    if (e.v < g.n - 1) minor[e.v][e.v] += 1;
    if (e.u < g.n - 1 && e.v < g.n - 1) {
      minor[e.u][e.v] -= 1;
      minor[e.v][e.u] -= 1;
    }
  }
  return det_bareiss(std::move(minor));
}

BigInt count_clique_trees(const CliqueGraph& cg, const FamilyLattice& lattice) {
  (void)cg;
  BigInt total = 1;
  for (const auto& fg : lattice.graphs) total *= count_spanning_trees(fg.b);
  return total;
}

CliqueTree assemble(const FamilyLattice& lattice, const FamilyChoice& choice) {
  if (choice.trees.size() != lattice.size())
    throw DomainError("choice does not cover every family");
  CliqueTree t;
  for (std::size_t f = 0; f < lattice.size(); ++f) {
    const auto& picked = choice.trees[f].edge_labels;
    if (picked.size() + 1 != lattice.graphs[f].classes.size())
      throw DomainError("family tree has the wrong number of edges");
    t.edges.insert(t.edges.end(), picked.begin(), picked.end());
  }
  std::sort(t.edges.begin(), t.edges.end());
  return t;
}

std::variant<FamilyChoice, DecomposeViolation> decompose(const CliqueGraph& cg,
                                                         const FamilyLattice& lattice,
                                                         const CliqueTree& t) {
  for (std::size_t e : t.edges)
    if (e >= cg.edges.size()) throw DomainError("edge index out of range");

  std::vector<std::size_t> part = edge_partition(cg, lattice);
  std::vector<std::vector<std::size_t>> bucket(lattice.size());
  {
    std::vector<std::size_t> edges = t.edges;
    sort_unique(edges);
    for (std::size_t e : edges) bucket[part[e]].push_back(e);
  }

  FamilyChoice choice;
  choice.trees.resize(lattice.size());
  for (std::size_t f = 0; f < lattice.size(); ++f) {
    const auto& fg = lattice.graphs[f];
    std::vector<std::size_t> class_of(cg.clique_count(), 0);
    for (std::size_t c = 0; c < fg.classes.size(); ++c)
      for (std::size_t k : fg.classes[c]) class_of[k] = c;

    Dsu dsu(fg.classes.size());
    for (std::size_t e : bucket[f]) {
      std::size_t u = class_of[cg.edges[e].a], v = class_of[cg.edges[e].b];
      if (u == v || !dsu.unite(u, v))
        return DecomposeViolation{f, "chosen edges close a cycle among the classes"};
    }
    if (dsu.components != 1)
      return DecomposeViolation{f, "chosen edges leave the classes disconnected"};
    choice.trees[f].edge_labels = bucket[f];
  }
  return choice;
}

CliqueTreeEnumerator::CliqueTreeEnumerator(const CliqueGraph& cg, const FamilyLattice& lattice)
    : lattice_(&lattice) {
  (void)cg;
  local_.reserve(lattice.size());
  for (const auto& fg : lattice.graphs) local_.push_back(spanning_trees(fg.b));
  index_.assign(lattice.size(), 0);
}

std::optional<CliqueTree> CliqueTreeEnumerator::next() {
  if (done_) return std::nullopt;
  if (!fresh_) {
    // Odometer step: the last family moves fastest.
    std::size_t f = index_.size();
    while (f > 0) {
      --f;
      if (++index_[f] < local_[f].size()) break;
      index_[f] = 0;
      if (f == 0) done_ = true;
    }
    if (index_.empty()) done_ = true;
    if (done_) return std::nullopt;
  }
  fresh_ = false;
  return assemble(*lattice_, current_choice());
}

BigInt CliqueTreeEnumerator::total() const {
  BigInt total = 1;
  for (const auto& trees : local_) total *= trees.size();
  return total;
}

FamilyChoice CliqueTreeEnumerator::current_choice() const {
  FamilyChoice choice;
  choice.trees.reserve(index_.size());
  for (std::size_t f = 0; f < index_.size(); ++f)
    choice.trees.push_back(local_[f][index_[f]]);
  return choice;
}

namespace {

// Spanning-tree test shared by the validators; fills adjacency over clique
// indices on success.
bool spanning_tree_adjacency(const CliqueGraph& cg, const CliqueTree& t,
                             std::vector<std::vector<std::pair<std::size_t, std::size_t>>>* adj,
                             Verdict* verdict) {
  const std::size_t k = cg.clique_count();
  std::vector<std::size_t> edges = t.edges;
  sort_unique(edges);
  for (std::size_t e : edges)
    if (e >= cg.edges.size()) {
      *verdict = Verdict::fail("not-spanning-tree", "unknown clique-graph edge index", {e});
      return false;
    }
  if (edges.size() != t.edges.size()) {
    *verdict = Verdict::fail("not-spanning-tree", "repeated edge");
    return false;
  }
  if (edges.size() + 1 != k) {
    *verdict = Verdict::fail("not-spanning-tree",
                             "edge count differs from clique count minus one");
    return false;
  }
  Dsu dsu(k);
  for (std::size_t e : edges)
    if (!dsu.unite(cg.edges[e].a, cg.edges[e].b)) {
      *verdict = Verdict::fail("not-spanning-tree", "edges close a cycle", {e});
      return false;
    }
  if (adj) {
    adj->assign(k, {});
    for (std::size_t e : edges) {
      (*adj)[cg.edges[e].a].emplace_back(cg.edges[e].b, e);
      (*adj)[cg.edges[e].b].emplace_back(cg.edges[e].a, e);
    }
  }
  return true;
}

}  // namespace

Verdict validate_definition(const CliqueGraph& cg, const CliqueTree& t) {
  Verdict verdict;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj;
  if (!spanning_tree_adjacency(cg, t, &adj, &verdict)) return verdict;

  for (VertexId v = 0; v < cg.vertex_count(); ++v) {
    const auto& holders = cg.containing[v];
    std::vector<bool> in_family(cg.clique_count(), false);
    for (std::size_t k : holders) in_family[k] = true;
    std::vector<bool> seen(cg.clique_count(), false);
    std::deque<std::size_t> queue{holders.front()};
    seen[holders.front()] = true;
    std::size_t reached = 1;
    while (!queue.empty()) {
      std::size_t k = queue.front();
      queue.pop_front();
      for (auto [nb, e] : adj[k])
        if (in_family[nb] && !seen[nb]) {
          seen[nb] = true;
          ++reached;
          queue.push_back(nb);
        }
    }
    if (reached != holders.size())
      return Verdict::fail("vertex-subtree-disconnected",
                           "cliques containing vertex '" + std::to_string(v) +
                               "' do not span a subtree",
                           {v});
  }
  return Verdict::ok();
}

Verdict validate_cip(const CliqueGraph& cg, const CliqueTree& t) {
  Verdict verdict;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj;
  if (!spanning_tree_adjacency(cg, t, &adj, &verdict)) return verdict;

  const std::size_t k = cg.clique_count();
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  for (std::size_t a = 0; a < k; ++a) {
    // One breadth-first pass gives the tree paths from a to everything.
    std::vector<std::size_t> parent(k, kUnset);
    std::deque<std::size_t> queue{a};
    parent[a] = a;
    while (!queue.empty()) {
      std::size_t x = queue.front();
      queue.pop_front();
      for (auto [nb, e] : adj[x])
        if (parent[nb] == kUnset) {
          parent[nb] = x;
          queue.push_back(nb);
        }
    }
    for (std::size_t b = a + 1; b < k; ++b) {
      VertexSet label = set_intersect(cg.cliques[a], cg.cliques[b]);
      if (label.empty()) continue;
      for (std::size_t x = parent[b]; x != a; x = parent[x])
        if (!is_subset(label, cg.cliques[x]))
          return Verdict::fail("path-clique-misses-intersection",
                               "a clique between two others on the tree path drops part "
                               "of their intersection",
                               {a, b, x});
    }
  }
  return Verdict::ok();
}

RipOrder rip_ordering(const CliqueGraph& cg, const CliqueTree& t, std::size_t root) {
  if (root >= cg.clique_count()) throw DomainError("root index out of range");
  Verdict verdict;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj;
  if (!spanning_tree_adjacency(cg, t, &adj, &verdict))
    throw DomainError("not a spanning tree: " + verdict.detail);

  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  RipOrder out;
  std::vector<std::size_t> pos(cg.clique_count(), kUnset);
  std::deque<std::pair<std::size_t, std::size_t>> queue{{root, kUnset}};
  pos[root] = 0;
  while (!queue.empty()) {
    auto [k, parent_pos] = queue.front();
    queue.pop_front();
    pos[k] = out.order.size();
    out.order.push_back(k);
    out.parent_pos.push_back(parent_pos);
    for (auto [nb, e] : adj[k])
      if (pos[nb] == kUnset) {
        pos[nb] = 0;  // mark enqueued; final position assigned on dequeue
        queue.push_back({nb, pos[k]});
      }
  }
  return out;
}

Verdict validate_rip(const CliqueGraph& cg, const std::vector<std::size_t>& order) {
  const std::size_t k = cg.clique_count();
  if (order.size() != k) throw DomainError("order does not cover the cliques");
  {
    std::vector<std::size_t> sorted = order;
    sort_unique(sorted);
    if (sorted.size() != k || sorted.back() != k - 1)
      throw DomainError("order is not a permutation of the cliques");
  }
  VertexSet covered = cg.cliques[order[0]];
  for (std::size_t i = 1; i < k; ++i) {
    VertexSet inter = set_intersect(cg.cliques[order[i]], covered);
    if (inter.empty())
      return Verdict::fail("rip-disconnected-prefix",
                           "clique at position " + std::to_string(i) +
                               " is disjoint from all earlier cliques",
                           {i});
    bool witnessed = false;
    for (std::size_t j = 0; j < i && !witnessed; ++j)
      witnessed = is_subset(inter, cg.cliques[order[j]]);
    if (!witnessed)
      return Verdict::fail("rip-no-witness",
                           "no earlier clique contains the running intersection at "
                           "position " + std::to_string(i),
                           {i});
    covered = set_union(covered, cg.cliques[order[i]]);
  }
  return Verdict::ok();
}

Verdict validate_rip_tree(const CliqueGraph& cg, const CliqueTree& t) {
  Verdict verdict;
  if (!spanning_tree_adjacency(cg, t, nullptr, &verdict)) return verdict;

  // In a breadth-first enumeration of a tree, the parent is the only
  // earlier neighbor, so it must be the witness if any clique is.
  for (std::size_t root = 0; root < cg.clique_count(); ++root) {
    RipOrder rip = rip_ordering(cg, t, root);
    VertexSet covered = cg.cliques[rip.order[0]];
    bool pass = true;
    for (std::size_t i = 1; i < rip.order.size() && pass; ++i) {
      VertexSet inter = set_intersect(cg.cliques[rip.order[i]], covered);
      pass = !inter.empty() &&
             is_subset(inter, cg.cliques[rip.order[rip.parent_pos[i]]]);
      if (pass) covered = set_union(covered, cg.cliques[rip.order[i]]);
    }
    if (pass)
      return Verdict{true, "", "breadth-first enumeration from clique " +
                                   std::to_string(root) +
                                   " realizes the running intersection property",
                     {root}};
  }
  return Verdict::fail("rip-no-root",
                       "no root makes the breadth-first enumeration satisfy the "
                       "running intersection property");
}

Verdict validate_local_max_weight(const CliqueGraph& cg, const FamilyLattice& lattice,
                                  const CliqueTree& t) {
  Verdict verdict;
  if (!spanning_tree_adjacency(cg, t, nullptr, &verdict)) return verdict;

  for (std::size_t f = 0; f < lattice.size(); ++f) {
    const auto& members = lattice.families[f].members;
    std::vector<bool> in_family(cg.clique_count(), false);
    std::vector<std::size_t> pos_of(cg.clique_count(), 0);
    for (std::size_t i = 0; i < members.size(); ++i) {
      in_family[members[i]] = true;
      pos_of[members[i]] = i;
    }

    std::vector<std::size_t> induced;
    for (std::size_t e : t.edges)
      if (in_family[cg.edges[e].a] && in_family[cg.edges[e].b]) induced.push_back(e);

    if (induced.size() + 1 != members.size())
      return Verdict::fail("family-restriction-not-spanning",
                           "the tree restricted to a family is not a spanning tree of "
                           "the family's clique graph",
                           {f});
    Dsu dsu(members.size());
    std::size_t weight = 0;
    for (std::size_t e : induced) {
      if (!dsu.unite(pos_of[cg.edges[e].a], pos_of[cg.edges[e].b]))
        return Verdict::fail("family-restriction-not-spanning",
                             "the tree restricted to a family is not a spanning tree "
                             "of the family's clique graph",
                             {f});
      weight += cg.edges[e].label.size();
    }

    // Greedy forest over all internal edges, heaviest label first, reaches
    // the maximum spanning tree weight of the family's clique graph.
    std::vector<std::size_t> internal;
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j)
        if (auto e = cg.edge_index(members[i], members[j])) internal.push_back(*e);
    std::sort(internal.begin(), internal.end(), [&cg](std::size_t a, std::size_t b) {
      if (cg.edges[a].label.size() != cg.edges[b].label.size())
        return cg.edges[a].label.size() > cg.edges[b].label.size();
      return a < b;
    });
    Dsu greedy(members.size());
    std::size_t best = 0;
    for (std::size_t e : internal)
      if (greedy.unite(pos_of[cg.edges[e].a], pos_of[cg.edges[e].b]))
        best += cg.edges[e].label.size();

    if (weight != best)
      return Verdict::fail("family-restriction-not-heaviest",
                           "the tree restricted to a family weighs less than a "
                           "heaviest spanning tree of the family's clique graph",
                           {f});
  }
  return Verdict::ok();
}

}  // namespace cliquetree
