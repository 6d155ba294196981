// Acceptance gate: ten exact, oracle- and property-based criteria, each
// printing one PASS/FAIL line.  The process exits nonzero if any fails.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "cliquetree/clique_lattice.hpp"
#include "cliquetree/clique_trees.hpp"
#include "cliquetree/graph.hpp"
#include "cliquetree/separators.hpp"
#include "cliquetree/shearer.hpp"
#include "support.hpp"

using namespace cliquetree;
using cliquetree::testing::clique_tree_by_definition;
using cliquetree::testing::exhaustive_connected_chordal;
using cliquetree::testing::make_graph;
using cliquetree::testing::random_chordal;

namespace {

struct Ctx {
  Graph g;
  CliqueGraph cg;
  FamilyLattice lattice;
};

Ctx ctx(Graph g) {
  CliqueGraph cg = build_clique_graph(g);
  FamilyLattice lattice = enumerate_families(cg);
  return {std::move(g), std::move(cg), std::move(lattice)};
}

Multigraph cg_multigraph(const CliqueGraph& cg) {
  Multigraph m;
  m.n = cg.clique_count();
  for (std::size_t e = 0; e < cg.edges.size(); ++e)
    m.edges.push_back({cg.edges[e].a, cg.edges[e].b, e});
  return m;
}

// Shared corpus for criteria 2, 3 and 5: every connected chordal graph
// with at most 6 vertices plus 200 random ones with at most 8.
std::vector<Graph> validator_corpus() {
  std::vector<Graph> corpus = exhaustive_connected_chordal(6);
  std::mt19937_64 rng(0x5eed0001);
  for (int i = 0; i < 200; ++i)
    corpus.push_back(random_chordal(2 + rng() % 7, rng));
  return corpus;
}

std::vector<Rational> random_open_box(std::size_t n, std::mt19937_64& rng,
                                      long denominator) {
  std::vector<Rational> out;
  for (std::size_t i = 0; i < n; ++i) {
    long k = std::uniform_int_distribution<long>(1, denominator - 1)(rng);
    out.emplace_back(k, denominator);
  }
  return out;
}

bool criterion1() {
  // Triangle with a pendant vertex: two cliques sharing one vertex.  All
  // three families, their generator sets, and the maximal generators.
  Graph g = make_graph(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
  Ctx c = ctx(std::move(g));
  if (c.cg.cliques != std::vector<VertexSet>{{0, 1, 2}, {2, 3}}) return false;
  if (c.lattice.size() != 3) return false;

  auto members = [&](std::size_t f) { return c.lattice.families[f].members; };
  auto delta = [&](std::size_t f) { return c.lattice.families[f].max_generator; };
  if (members(0) != std::vector<std::size_t>{0} || delta(0) != VertexSet{0, 1, 2})
    return false;
  if (members(1) != std::vector<std::size_t>{1} || delta(1) != VertexSet{2, 3})
    return false;
  if (members(2) != std::vector<std::size_t>{0, 1} || delta(2) != VertexSet{2})
    return false;

  using Sets = std::vector<VertexSet>;
  if (generators_of(c.cg, c.lattice, 0, c.g) !=
      Sets{{0}, {1}, {0, 1}, {0, 2}, {1, 2}, {0, 1, 2}})
    return false;
  if (generators_of(c.cg, c.lattice, 1, c.g) != Sets{{3}, {2, 3}}) return false;
  if (generators_of(c.cg, c.lattice, 2, c.g) != Sets{{}, {2}}) return false;
  return true;
}

bool criterion2(const std::vector<Graph>& corpus) {
  for (const Graph& g : corpus) {
    Ctx c = ctx(g);
    for (const auto& st : spanning_trees(cg_multigraph(c.cg))) {
      CliqueTree t{st.edge_labels};
      bool def = validate_definition(c.cg, t).pass;
      bool cip = validate_cip(c.cg, t).pass;
      bool rip = validate_rip_tree(c.cg, t).pass;
      bool maxw = validate_local_max_weight(c.cg, c.lattice, t).pass;
      bool oracle = clique_tree_by_definition(c.cg, t);
      if (def != cip || def != rip || def != maxw || def != oracle) return false;
    }
  }
  return true;
}

bool criterion3(const std::vector<Graph>& corpus) {
  for (const Graph& g : corpus) {
    Ctx c = ctx(g);

    std::set<std::vector<std::size_t>> emitted;
    CliqueTreeEnumerator trees(c.cg, c.lattice);
    while (auto t = trees.next()) {
      if (!emitted.insert(t->edges).second) return false;  // duplicate emission
      auto d = decompose(c.cg, c.lattice, *t);
      auto* choice = std::get_if<FamilyChoice>(&d);
      if (!choice) return false;
      if (!(assemble(c.lattice, *choice) == *t)) return false;
    }

    std::size_t passing = 0;
    for (const auto& st : spanning_trees(cg_multigraph(c.cg))) {
      CliqueTree t{st.edge_labels};
      if (validate_definition(c.cg, t).pass) {
        ++passing;
        if (!emitted.count(t.edges)) return false;
      }
    }
    BigInt counted = count_clique_trees(c.cg, c.lattice);
    if (counted != emitted.size() || passing != emitted.size()) return false;
  }
  return true;
}

bool criterion4() {
  const long expected[] = {1, 3, 16, 125, 1296, 16807};
  for (std::size_t n = 2; n <= 7; ++n) {
    std::vector<std::pair<VertexId, VertexId>> endpoints;
    for (VertexId i = 0; i < n; ++i)
      for (VertexId j = i + 1; j < n; ++j) endpoints.emplace_back(i, j);
    if (count_spanning_trees(Multigraph::with_fresh_labels(n, endpoints)) !=
        expected[n - 2])
      return false;
  }
  return true;
}

bool criterion5(const std::vector<Graph>& corpus) {
  for (const Graph& g : corpus) {
    Ctx c = ctx(g);
    SeparatorList lattice_route = minimal_separators_lattice(c.lattice);
    if (lattice_route != minimal_separators_oracle(c.g)) return false;

    CliqueTreeUnion u = clique_tree_union(c.cg, c.lattice);
    if (u.union_edges != reduced_clique_graph(c.cg, lattice_route)) return false;

    std::set<VertexSet> separators(lattice_route.begin(), lattice_route.end());
    for (const auto& labels : u.per_tree_labels) {
      if (std::set<VertexSet>(labels.begin(), labels.end()) != separators)
        return false;
    }
  }
  return true;
}

bool criterion6() {
  std::mt19937_64 rng(0x5eed0006);
  for (int trial = 0; trial < 100; ++trial) {
    Graph g = random_chordal(2 + trial % 8, rng);  // up to 9 vertices
    TreeOrder o = default_tree_order(g);
    std::vector<Rational> c = random_open_box(g.n, rng, 16);
    std::vector<Rational> p = marginals_from_coupling<Rational>(g, o, c).marginals;

    JointLaw<Rational> law = exact_block_factor_law<Rational>(g, o, c, 16);
    LawReport exact = verify_shearer_law<Rational>(law, g, p, 0.0);
    if (!exact.all_pass()) return false;
    if (exact.avoidance.max_deviation != 0.0 || exact.marginals.max_deviation != 0.0 ||
        exact.independence.max_deviation != 0.0 ||
        exact.one_dependence.max_deviation != 0.0)
      return false;

    JointLaw<double> rough =
        exact_block_factor_law<double>(g, o, as_numbers<double>(c), 16);
    LawReport loose =
        verify_shearer_law<double>(rough, g, as_numbers<double>(p), 1e-12);
    if (!loose.all_pass()) return false;
  }
  return true;
}

bool criterion7() {
  std::mt19937_64 rng(0x5eed0007);
  int vectors = 0;
  while (vectors < 1000) {
    Graph g = random_chordal(2 + rng() % 7, rng);
    Ctx c = ctx(g);
    CliqueTreeEnumerator trees(c.cg, c.lattice);
    auto first_tree = trees.next();
    if (!first_tree) return false;
    CliqueTree second_tree = *first_tree;
    while (auto t = trees.next()) second_tree = *t;

    TreeOrder first = build_tree_order(c.cg, *first_tree, 0);
    std::vector<std::size_t> reversed(c.g.n);
    for (std::size_t v = 0; v < c.g.n; ++v) reversed[v] = c.g.n - 1 - v;
    TreeOrder second =
        build_tree_order(c.cg, second_tree, c.cg.clique_count() - 1, reversed);

    for (int k = 0; k < 20 && vectors < 1000; ++k, ++vectors) {
      std::vector<Rational> coupling = random_open_box(c.g.n, rng, 8);
      std::vector<Rational> p =
          marginals_from_coupling<Rational>(c.g, first, coupling).marginals;

      auto back = coupling_from_marginals<Rational>(c.g, first, p);
      if (!back.ok()) return false;
      std::vector<Rational> p2 =
          marginals_from_coupling<Rational>(c.g, first, back.coupling).marginals;
      for (std::size_t v = 0; v < c.g.n; ++v) {
        Rational diff = p2[v] - p[v];
        if (diff < 0) diff = -diff;
        if (diff > Rational(1, 10000000000LL)) return false;  // 1e-10, met exactly
      }

      RegionResult a = shearer_region_membership(c.g, first, p);
      RegionResult b = shearer_region_membership(c.g, second, p);
      if (a.verdict != b.verdict) return false;
      if (a.verdict != RegionVerdict::StrictInterior) return false;
    }
  }
  return true;
}

bool criterion8() {
  std::mt19937_64 rng(0x5eed0008);
  for (int trial = 0; trial < 1000; ++trial) {
    Graph g = random_chordal(2 + trial % 7, rng);  // up to 8 vertices
    TreeOrder o = default_tree_order(g);
    std::vector<Rational> p;
    switch (trial % 4) {
      case 0:  // arbitrary corner-to-corner box points
        for (std::size_t v = 0; v < g.n; ++v)
          p.emplace_back(std::uniform_int_distribution<long>(0, 32)(rng), 32);
        break;
      case 1: {  // interior by construction
        std::vector<Rational> c = random_open_box(g.n, rng, 8);
        p = marginals_from_coupling<Rational>(g, o, c).marginals;
        break;
      }
      case 2: {  // boundary by construction: one coupling value of one
        std::vector<Rational> c = random_open_box(g.n, rng, 8);
        c[rng() % g.n] = 1;
        p = marginals_from_coupling<Rational>(g, o, c).marginals;
        break;
      }
      default: {  // straddle: nudge a boundary point either way
        std::vector<Rational> c = random_open_box(g.n, rng, 8);
        c[rng() % g.n] = 1;
        p = marginals_from_coupling<Rational>(g, o, c).marginals;
        std::size_t v = rng() % g.n;
        Rational nudge(1, 128);
        if (rng() % 2) {
          p[v] = p[v] + nudge > 1 ? Rational(1) : p[v] + nudge;
        } else {
          p[v] = p[v] < nudge ? Rational(0) : p[v] - nudge;
        }
        break;
      }
    }
    if (shearer_region_membership(g, o, p).verdict !=
        shearer_region_oracle(g, p).verdict)
      return false;
  }
  return true;
}

bool criterion9() {
  Graph g = make_graph(5, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}});
  TreeOrder o = default_tree_order(g);
  std::vector<Rational> c = {Rational(1, 3), Rational(1, 2), Rational(2, 5),
                             Rational(1, 4), Rational(3, 5)};
  JointLaw<Rational> law = exact_block_factor_law<Rational>(g, o, c);

  const std::size_t kSamples = 1000000;
  BlockFactorSampler sampler(g, o, c, 0x5eed0009);
  std::vector<std::size_t> hits(law.prob.size(), 0);
  for (std::size_t s = 0; s < kSamples; ++s) {
    std::vector<std::uint8_t> x = sampler.next();
    std::uint32_t mask = 0;
    for (VertexId v = 0; v < g.n; ++v) {
      if (!x[v]) continue;
      mask |= 1u << v;
      for (VertexId w : g.adj[v])
        if (x[w]) return false;  // support must stay independent
    }
    ++hits[mask];
  }

  for (std::size_t mask = 0; mask < law.prob.size(); ++mask) {
    double q = to_double(law.prob[mask]);
    double freq = double(hits[mask]) / double(kSamples);
    double se = std::sqrt(q * (1.0 - q) / double(kSamples));
    if (q == 0.0) {
      if (hits[mask] != 0) return false;
    } else if (std::abs(freq - q) > 4.0 * se) {
      return false;
    }
  }
  return true;
}

bool criterion10() {
  std::mt19937_64 rng(0x5eed000a);
  std::vector<Graph> probes = {
      make_graph(4, {{0, 1}, {0, 2}, {0, 3}}),  // star: three parallel choices
      make_graph(5, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}}),
      random_chordal(8, rng)};
  for (const Graph& g : probes) {
    Ctx c = ctx(g);
    CliqueTreeEnumerator trees(c.cg, c.lattice);

    // Retained state: one tree list per family, one index per family.
    if (trees.local_trees().size() != c.lattice.size()) return false;
    if (trees.choice_indices().size() != c.lattice.size()) return false;
    std::size_t stored = 0;
    for (std::size_t f = 0; f < c.lattice.size(); ++f) {
      BigInt local = count_spanning_trees(c.lattice.graphs[f].b);
      if (BigInt(trees.local_trees()[f].size()) != local) return false;
      stored += trees.local_trees()[f].size();
    }

    std::vector<std::size_t> previous;
    bool first = true;
    std::size_t emitted = 0;
    while (auto t = trees.next()) {
      ++emitted;
      // Same lists, same index width: nothing accumulates per emission.
      if (trees.local_trees().size() != c.lattice.size()) return false;
      std::size_t still = 0;
      for (const auto& list : trees.local_trees()) still += list.size();
      if (still != stored) return false;
      if (trees.choice_indices().size() != c.lattice.size()) return false;

      // The indices march in odometer order and determine the tree.
      if (!first && !(previous < trees.choice_indices())) return false;
      previous = trees.choice_indices();
      first = false;
      for (std::size_t f = 0; f < c.lattice.size(); ++f)
        if (trees.choice_indices()[f] >= trees.local_trees()[f].size()) return false;
      if (!(assemble(c.lattice, trees.current_choice()) == *t)) return false;
    }
    if (BigInt(emitted) != trees.total()) return false;
  }
  return true;
}

}  // namespace

int main() {
  std::vector<Graph> corpus = validator_corpus();

  struct Row {
    int number;
    std::string description;
    bool pass;
  };
  std::vector<Row> rows;
  auto record = [&](int number, const std::string& description, bool pass) {
    rows.push_back({number, description, pass});
    std::printf("%s criterion %d: %s\n", pass ? "PASS" : "FAIL", number,
                description.c_str());
    std::fflush(stdout);
  };

  record(1, "two-clique example: families, generators, maximal generators (exact)",
         criterion1());
  record(2,
         "four validators agree on every clique-graph spanning tree over the "
         "corpus (zero disagreements)",
         criterion2(corpus));
  record(3,
         "enumeration = count = definition-passing trees, decompose/assemble "
         "identity (exact integers)",
         criterion3(corpus));
  record(4, "complete-graph spanning tree counts n=2..7 match n^(n-2) (exact)",
         criterion4());
  record(5,
         "separators: lattice route = oracle, tree union = reduced clique graph, "
         "tree labels = separators (exact)",
         criterion5(corpus));
  record(6,
         "block-factor law passes all four checks on 100 random graphs (rational: "
         "zero deviation; float: 1e-12)",
         criterion6());
  record(7,
         "correspondence round-trip within 1e-10 on 1000 in-region vectors; "
         "verdicts order-independent",
         criterion7());
  record(8,
         "region membership matches the sign oracle on 1000 pairs incl. "
         "boundary-straddling (exact)",
         criterion8());
  record(9,
         "one million seeded samples within 4 standard errors of the exact law; "
         "supports always independent",
         criterion9());
  record(10,
         "enumerator retains exactly the per-family tree lists plus one index per "
         "family (structural)",
         criterion10());

  bool all = true;
  for (const Row& r : rows) all = all && r.pass;
  std::printf("%s\n", all ? "acceptance: all criteria passed"
                          : "acceptance: at least one criterion failed");
  return all ? 0 : 1;
}
