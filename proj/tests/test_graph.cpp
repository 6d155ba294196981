#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "doctest.h"

#include "cliquetree/graph.hpp"
#include "support.hpp"

using namespace cliquetree;
using cliquetree::testing::chordal_by_elimination;
using cliquetree::testing::complete_graph;
using cliquetree::testing::cycle_graph;
using cliquetree::testing::exhaustive_connected;
using cliquetree::testing::make_graph;
using cliquetree::testing::path_graph;
using cliquetree::testing::random_chordal;
using cliquetree::testing::star_graph;

TEST_CASE("set algebra on sorted vectors") {
  VertexSet a = {1, 3, 5};
  VertexSet b = {3, 4, 5};
  CHECK(set_union(a, b) == VertexSet{1, 3, 4, 5});
  CHECK(set_intersect(a, b) == VertexSet{3, 5});
  CHECK(set_minus(a, b) == VertexSet{1});
  CHECK(set_intersect(a, VertexSet{}) == VertexSet{});
  CHECK(set_contains(a, 3));
  CHECK_FALSE(set_contains(a, 2));
  CHECK(is_subset(VertexSet{3, 5}, a));
  CHECK(is_subset(VertexSet{}, a));
  CHECK_FALSE(is_subset(b, a));
  VertexSet c = {5, 1, 3, 1};
  sort_unique(c);
  CHECK(c == VertexSet{1, 3, 5});
}

TEST_CASE("from_edges rejects loops and collapses parallel edges") {
  CHECK_THROWS_AS(Graph::from_edges(2, {{0, 0}}), DomainError);
  CHECK_THROWS_AS(Graph::from_edges(2, {{0, 2}}), DomainError);
  Graph g = Graph::from_edges(3, {{0, 1}, {1, 0}, {1, 2}});
  CHECK(g.edge_count() == 2);
  CHECK(g.adjacent(0, 1));
  CHECK(g.adjacent(1, 2));
  CHECK_FALSE(g.adjacent(0, 2));
  CHECK(g.edges() == std::vector<std::pair<VertexId, VertexId>>{{0, 1}, {1, 2}});
  CHECK(g.names == std::vector<std::string>{"0", "1", "2"});
}

TEST_CASE("connectivity") {
  CHECK(path_graph(4).connected());
  Graph split = Graph::from_edges(4, {{0, 1}, {2, 3}});
  CHECK_FALSE(split.connected());
}

TEST_CASE("induced subgraphs keep names and adjacency") {
  Graph g = path_graph(4);
  Graph h = induced_subgraph(g, {0, 1, 3});
  CHECK(h.n == 3);
  CHECK(h.adjacent(0, 1));
  CHECK_FALSE(h.adjacent(1, 2));
  CHECK(h.names == std::vector<std::string>{"0", "1", "3"});
}

TEST_CASE("edge-list parsing") {
  std::vector<std::string> warnings;
  Graph g = parse_graph("# triangle plus a tail\na b\nb c\nc a\n\nc d # tail\na b\n",
                        &warnings);
  CHECK(g.n == 4);
  CHECK(g.names == std::vector<std::string>{"a", "b", "c", "d"});
  CHECK(g.edge_count() == 4);
  REQUIRE(warnings.size() == 1);
  CHECK(warnings[0].find("duplicate") != std::string::npos);
  CHECK(g.vertex_by_name("c") == VertexId{2});
  CHECK_FALSE(g.vertex_by_name("x").has_value());

  CHECK_THROWS_AS(parse_graph("a a\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("a\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("a b c\n"), ParseError);
}

TEST_CASE("multigraph contraction keeps labels and loops") {
  Multigraph m = Multigraph::with_fresh_labels(4, {{0, 1}, {1, 2}, {2, 3}, {0, 1}});
  REQUIRE(m.edges.size() == 4);
  CHECK(m.connected_ignoring_loops());

  Multigraph q = contract(m, {{0, 1}});
  CHECK(q.n == 3);  // block {0,1}, then 2 and 3 as singletons
  REQUIRE(q.edges.size() == 4);
  std::multiset<std::size_t> labels;
  std::size_t loops = 0;
  for (const auto& e : q.edges) {
    labels.insert(e.label);
    if (e.u == e.v) ++loops;
  }
  CHECK(labels == std::multiset<std::size_t>{0, 1, 2, 3});
  CHECK(loops == 2);  // both parallel 0-1 edges became loops at the block

  Multigraph loop_only = contract(Multigraph::with_fresh_labels(2, {{0, 1}}), {{0, 1}});
  CHECK(loop_only.n == 1);
  CHECK(loop_only.connected_ignoring_loops());
  Multigraph split = Multigraph::with_fresh_labels(3, {{0, 1}});
  CHECK_FALSE(split.connected_ignoring_loops());
}

TEST_CASE("elimination order checking") {
  Graph path = path_graph(3);
  CHECK_FALSE(check_peo(path, Peo{{0, 1, 2}}).has_value());
  CHECK_FALSE(check_peo(path, Peo{{2, 1, 0}}).has_value());

  Graph star = star_graph(2);
  auto bad = check_peo(star, Peo{{0, 1, 2}});
  REQUIRE(bad.has_value());
  CHECK(bad->vertex == 0);
  CHECK_FALSE(star.adjacent(bad->later_a, bad->later_b));

  CHECK_FALSE(check_peo(star, Peo{{1, 2, 0}}).has_value());
}

namespace {

// Direct shape check: distinct vertices, >= 4 of them, consecutive pairs
// adjacent around the cycle and nothing else.
void require_chordless_cycle(const Graph& g, const Cycle& c) {
  const auto& vs = c.vertices;
  REQUIRE(vs.size() >= 4);
  std::set<VertexId> distinct(vs.begin(), vs.end());
  REQUIRE(distinct.size() == vs.size());
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      bool consecutive = (j == i + 1) || (i == 0 && j == vs.size() - 1);
      CHECK(g.adjacent(vs[i], vs[j]) == consecutive);
    }
  }
}

}  // namespace

TEST_CASE("chordality agrees with greedy simplicial elimination on all small graphs") {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const Graph& g : exhaustive_connected(n)) {
      ChordalityResult r = is_chordal(g);
      bool expected = chordal_by_elimination(g);
      REQUIRE(r.chordal() == expected);
      if (r.chordal()) {
        REQUIRE(r.peo->order.size() == g.n);
        VertexSet sorted = r.peo->order;
        std::sort(sorted.begin(), sorted.end());
        for (VertexId v = 0; v < g.n; ++v) REQUIRE(sorted[v] == v);
        REQUIRE_FALSE(check_peo(g, *r.peo).has_value());
      } else {
        require_chordless_cycle(g, *r.witness);
      }
    }
  }
}

TEST_CASE("chordality is deterministic") {
  Graph g = make_graph(5, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}});
  ChordalityResult a = is_chordal(g);
  ChordalityResult b = is_chordal(g);
  REQUIRE(a.chordal());
  CHECK(a.peo->order == b.peo->order);
}

TEST_CASE("chordality rejects empty and disconnected graphs") {
  CHECK_THROWS_AS(is_chordal(Graph{}), DomainError);
  CHECK_THROWS_AS(is_chordal(Graph::from_edges(4, {{0, 1}, {2, 3}})), DomainError);
}

TEST_CASE("random chordal generator emits connected chordal graphs") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    Graph g = random_chordal(2 + i % 8, rng);
    CHECK(g.connected());
    CHECK(chordal_by_elimination(g));
    CHECK(is_chordal(g).chordal());
  }
}

TEST_CASE("two-chord search cuts a triangle off a cycle") {
  // 4-cycle plus one chord: the chord is the unique answer.
  Graph g = make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}});
  Cycle c{{0, 1, 2, 3}};
  auto [x, y] = find_two_chord(g, c);
  CHECK(std::minmax(x, y) == std::minmax<VertexId>(0, 2));

  // Fan: any returned chord joins cycle positions two apart.
  Graph fan = make_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4},
                             {5, 0}, {5, 1}, {5, 2}, {5, 3}, {5, 4}});
  Cycle ring{{0, 1, 2, 3, 4, 5}};
  auto [a, b] = find_two_chord(fan, ring);
  CHECK(fan.adjacent(a, b));
  auto pos = [&](VertexId v) {
    return std::find(ring.vertices.begin(), ring.vertices.end(), v) -
           ring.vertices.begin();
  };
  long gap = std::abs(pos(a) - pos(b));
  CHECK((gap == 2 || gap == long(ring.vertices.size()) - 2));

  CHECK_THROWS_AS(find_two_chord(cycle_graph(4), Cycle{{0, 1, 2, 3}}), DomainError);
  CHECK_THROWS_AS(find_two_chord(g, Cycle{{0, 1, 2}}), DomainError);
  CHECK_THROWS_AS(find_two_chord(g, Cycle{{0, 1, 0, 1}}), DomainError);
}
