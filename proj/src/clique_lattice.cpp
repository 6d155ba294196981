#include "cliquetree/clique_lattice.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>

namespace cliquetree {

namespace {

bool family_less(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

std::vector<std::size_t> member_intersect(const std::vector<std::size_t>& a,
                                          const std::vector<std::size_t>& b) {
  std::vector<std::size_t> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

std::optional<std::size_t> CliqueGraph::edge_index(std::size_t a, std::size_t b) const {
  if (a > b) std::swap(a, b);
  auto key = std::make_pair(a, b);
  auto it = std::lower_bound(edges.begin(), edges.end(), key,
                             [](const CliqueGraphEdge& e, const std::pair<std::size_t, std::size_t>& k) {
                               return std::make_pair(e.a, e.b) < k;
                             });
  if (it == edges.end() || it->a != a || it->b != b) return std::nullopt;
  return static_cast<std::size_t>(it - edges.begin());
}

std::optional<std::size_t> CliqueGraph::clique_index(const VertexSet& members) const {
  auto it = std::lower_bound(cliques.begin(), cliques.end(), members);
  if (it == cliques.end() || *it != members) return std::nullopt;
  return static_cast<std::size_t>(it - cliques.begin());
}

std::vector<VertexSet> enumerate_cliques(const Graph& g, const Peo& peo) {
  std::vector<std::size_t> pos(g.n);
  for (std::size_t i = 0; i < peo.order.size(); ++i) pos[peo.order[i]] = i;

  // Candidate at v: v plus its later neighbors.  Each maximal clique is the
  // candidate of its earliest-eliminated member, so filtering candidates
  // that sit inside another one leaves exactly the maximal cliques.
  std::vector<VertexSet> candidates;
  candidates.reserve(g.n);
  for (VertexId v : peo.order) {
    VertexSet c{v};
    for (VertexId u : g.adj[v])
      if (pos[u] > pos[v]) c.push_back(u);
    std::sort(c.begin(), c.end());
    candidates.push_back(std::move(c));
  }
  std::vector<VertexSet> out;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < candidates.size() && maximal; ++j)
      if (j != i && candidates[i].size() < candidates[j].size() &&
          is_subset(candidates[i], candidates[j]))
        maximal = false;
    if (maximal) out.push_back(candidates[i]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

CliqueGraph build_clique_graph(const Graph& g) {
  ChordalityResult chordal = is_chordal(g);
  if (!chordal.chordal()) throw DomainError("graph is not chordal");

  CliqueGraph cg;
  cg.cliques = enumerate_cliques(g, *chordal.peo);
  cg.containing.assign(g.n, {});
  for (std::size_t k = 0; k < cg.cliques.size(); ++k)
    for (VertexId v : cg.cliques[k]) cg.containing[v].push_back(k);
  for (std::size_t a = 0; a < cg.cliques.size(); ++a)
    for (std::size_t b = a + 1; b < cg.cliques.size(); ++b) {
      VertexSet label = set_intersect(cg.cliques[a], cg.cliques[b]);
      if (!label.empty()) cg.edges.push_back({a, b, std::move(label)});
    }
  return cg;
}

CliqueFamily family_of(const CliqueGraph& cg, const VertexSet& generator) {
  CliqueFamily fam;
  for (std::size_t k = 0; k < cg.cliques.size(); ++k)
    if (is_subset(generator, cg.cliques[k])) fam.members.push_back(k);
  if (fam.members.empty())
    throw DomainError("no clique contains the set, so it is not complete");
  fam.max_generator = cg.cliques[fam.members.front()];
  for (std::size_t i = 1; i < fam.members.size(); ++i)
    fam.max_generator = set_intersect(fam.max_generator, cg.cliques[fam.members[i]]);
  return fam;
}

namespace {

struct Dsu {
  std::vector<std::size_t> parent;
  explicit Dsu(std::size_t n) : parent(n) {
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
    return true;
  }
};

FamilyGraphs build_family_graphs(const CliqueGraph& cg, const CliqueFamily& fam,
                                 std::size_t family_index) {
  FamilyGraphs fg;
  fg.family = family_index;
  const auto& m = fam.members;
  std::vector<std::size_t> pos_of(cg.clique_count(), 0);
  for (std::size_t i = 0; i < m.size(); ++i) pos_of[m[i]] = i;

  Dsu dsu(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      auto e = cg.edge_index(m[i], m[j]);
      if (!e) continue;
      // Every member contains the largest generator, so the label of an
      // internal edge contains it too; equality is the s-edge criterion.
      if (cg.edges[*e].label == fam.max_generator) {
        fg.s_edges.push_back(*e);
      } else {
        fg.r_edges.push_back(*e);
        dsu.unite(i, j);
      }
    }

  std::vector<std::vector<std::size_t>> classes(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) classes[dsu.find(i)].push_back(m[i]);
  for (auto& c : classes)
    if (!c.empty()) fg.classes.push_back(std::move(c));
  std::sort(fg.classes.begin(), fg.classes.end());

  std::vector<std::size_t> class_of(cg.clique_count(), 0);
  for (std::size_t c = 0; c < fg.classes.size(); ++c)
    for (std::size_t k : fg.classes[c]) class_of[k] = c;

  fg.b.n = fg.classes.size();
  for (std::size_t e : fg.s_edges) {
    VertexId u = class_of[cg.edges[e].a], v = class_of[cg.edges[e].b];
    fg.b.edges.push_back({std::min(u, v), std::max(u, v), e});
  }
  return fg;
}

}  // namespace

FamilyLattice enumerate_families(const CliqueGraph& cg) {
  std::vector<std::vector<std::size_t>> sets;
  auto add = [&sets](std::vector<std::size_t> s) {
    if (s.empty()) return;
    if (std::find(sets.begin(), sets.end(), s) == sets.end()) sets.push_back(std::move(s));
  };

  std::vector<std::size_t> full(cg.clique_count());
  for (std::size_t k = 0; k < full.size(); ++k) full[k] = k;
  add(full);
  for (const auto& fams : cg.containing) add(fams);

  // Close under pairwise intersection; each new set is intersected against
  // everything found before it.
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) add(member_intersect(sets[i], sets[j]));

  std::sort(sets.begin(), sets.end(), family_less);

  FamilyLattice lattice;
  lattice.families.reserve(sets.size());
  for (auto& members : sets) {
    CliqueFamily fam;
    fam.max_generator = cg.cliques[members.front()];
    for (std::size_t i = 1; i < members.size(); ++i)
      fam.max_generator = set_intersect(fam.max_generator, cg.cliques[members[i]]);
    fam.members = std::move(members);
    lattice.families.push_back(std::move(fam));
  }
  lattice.graphs.reserve(lattice.families.size());
  for (std::size_t f = 0; f < lattice.families.size(); ++f)
    lattice.graphs.push_back(build_family_graphs(cg, lattice.families[f], f));
  return lattice;
}

std::optional<std::size_t> FamilyLattice::find(const std::vector<std::size_t>& members) const {
  auto it = std::lower_bound(families.begin(), families.end(), members,
                             [](const CliqueFamily& f, const std::vector<std::size_t>& m) {
                               return family_less(f.members, m);
                             });
  if (it == families.end() || it->members != members) return std::nullopt;
  return static_cast<std::size_t>(it - families.begin());
}

std::vector<std::size_t> edge_partition(const CliqueGraph& cg, const FamilyLattice& lattice) {
  std::vector<std::size_t> out;
  out.reserve(cg.edges.size());
  for (const auto& e : cg.edges) {
    std::vector<std::size_t> members = cg.containing[e.label.front()];
    for (std::size_t i = 1; i < e.label.size(); ++i)
      members = member_intersect(members, cg.containing[e.label[i]]);
    auto f = lattice.find(members);
    if (!f) throw std::logic_error("family of an edge label is missing from the lattice");
    out.push_back(*f);
  }
  return out;
}

namespace {

void extend_complete(const Graph& g, VertexSet& prefix, VertexId start,
                     std::vector<VertexSet>& out) {
  for (VertexId v = start; v < g.n; ++v) {
    bool ok = true;
    for (VertexId u : prefix)
      if (!g.adjacent(u, v)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    prefix.push_back(v);
    out.push_back(prefix);
    extend_complete(g, prefix, v + 1, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<VertexSet> complete_sets(const Graph& g, std::size_t gate) {
  if (g.n > gate) throw DomainError("graph too large for complete-set enumeration");
  std::vector<VertexSet> out{{}};
  VertexSet prefix;
  extend_complete(g, prefix, 0, out);
  std::stable_sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

std::vector<VertexSet> generators_of(const CliqueGraph& cg, const FamilyLattice& lattice,
                                     std::size_t family, const Graph& g) {
  if (family >= lattice.size()) throw DomainError("family index out of range");
  std::vector<VertexSet> out;
  for (const VertexSet& c : complete_sets(g))
    if (family_of(cg, c).members == lattice.families[family].members) out.push_back(c);
  return out;
}

}  // namespace cliquetree
