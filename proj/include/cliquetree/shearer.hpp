#pragma once

// Tree orders on the vertices of a chordal graph, the correspondence
// between marginal and coupling probability vectors, block-factor sampling
// of 1-dependent Bernoulli fields, exact joint laws, and verification of
// the field's defining properties.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <type_traits>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cliquetree/clique_lattice.hpp"
#include "cliquetree/clique_trees.hpp"
#include "cliquetree/graph.hpp"

namespace cliquetree {

using Rational = boost::multiprecision::cpp_rational;

// Accepts "a/b", integers, and decimals like "0.25" or ".5".
Rational parse_rational(const std::string& text);
std::string format_rational(const Rational& value);

// Lines "vertexName value" with '#' comments and blank lines skipped;
// every vertex of g must get exactly one value, and values must lie in
// [0,1].  Throws ParseError otherwise.
std::vector<Rational> parse_probability_file(std::istream& in, const Graph& g);

inline double to_double(double x) { return x; }
inline double to_double(const Rational& x) { return x.convert_to<double>(); }

template <class Num>
std::vector<Num> as_numbers(const std::vector<Rational>& xs) {
  std::vector<Num> out;
  out.reserve(xs.size());
  for (const Rational& x : xs) {
    if constexpr (std::is_same_v<Num, Rational>) out.push_back(x);
    else out.push_back(to_double(x));
  }
  return out;
}

// Partial order on vertices where elements above any common element form a
// chain, stored as a dense relation.  Orders built from a rooted clique
// tree anchor each vertex at the clique of its subtree nearest the root
// and compare anchors by strict descent, breaking equal anchors with a
// caller-supplied total order.
struct TreeOrder {
  std::size_t n = 0;
  std::vector<std::vector<bool>> leq;  // leq[v][w] means v precedes-or-equals w
  std::vector<VertexId> linear_extension;
  std::optional<std::size_t> root_clique;
  std::vector<std::size_t> anchor;  // vertex -> clique index; empty if hand-built

  bool preceq(VertexId v, VertexId w) const { return leq[v][w]; }
  bool strictly_less(VertexId v, VertexId w) const { return v != w && leq[v][w]; }
  bool comparable(VertexId v, VertexId w) const { return leq[v][w] || leq[w][v]; }

  // Wraps a relation and computes a compatible total order; the relation
  // is taken as given and only verify_tree_order judges it.
  static TreeOrder from_relation(std::size_t n, std::vector<std::vector<bool>> leq);
};

// tie_rank must be empty (vertex ids) or a permutation assigning each
// vertex its rank among equal anchors.  Throws DomainError when t is not a
// clique tree or the arguments are malformed.
TreeOrder build_tree_order(const CliqueGraph& cg, const CliqueTree& t,
                           std::size_t root_clique,
                           const std::vector<std::size_t>& tie_rank = {});

// Order from the first clique tree of g, rooted at clique 0, ties by id.
TreeOrder default_tree_order(const Graph& g);

// Checks reflexivity, antisymmetry, transitivity, the chain condition on
// elements above a common element, comparability of every edge, and the
// chain-edge condition (w before u before v with vw an edge forces uv).
// The failing pair or triple is reported in the verdict indices.
Verdict verify_tree_order(const Graph& g, const TreeOrder& o);

VertexSet lesser_neighbours(const Graph& g, const TreeOrder& o, VertexId v);
VertexSet downward_set(const TreeOrder& o, VertexId v);
VertexSet max_elements(const TreeOrder& o, const VertexSet& w);
// Lesser neighbours of the set: union of each member's lesser neighbours,
// minus the set itself.
VertexSet lesser_boundary(const Graph& g, const TreeOrder& o, const VertexSet& w);

// Sum over independent sets W of prod_{w in W} (-p_w), by explicit
// enumeration of the independent sets.  Num is double or Rational.
template <class Num>
Num independent_set_polynomial(const Graph& g, const std::vector<Num>& p,
                               std::size_t gate = 20);

// Same sum over independent subsets of the given vertex set.
template <class Num>
Num independent_set_polynomial_over(const Graph& g, const std::vector<Num>& p,
                                    const VertexSet& subset, std::size_t gate = 20);

template <class Num>
struct CouplingFailure {
  VertexId vertex = 0;
  Num value{};  // offending coupling value; unset when division_by_zero
  bool division_by_zero = false;
};

template <class Num>
struct CouplingOutcome {
  std::vector<Num> coupling;
  std::optional<CouplingFailure<Num>> failure;
  bool ok() const { return !failure.has_value(); }
};

// Solves p_v = c_v * prod_{w in N-(v)} (1 - c_w) for c along the linear
// extension.  Succeeds iff every solved c_v lands in [0,1] and no zero
// denominator meets a nonzero p_v; a zero over zero solves to c_v = 0.
template <class Num>
CouplingOutcome<Num> coupling_from_marginals(const Graph& g, const TreeOrder& o,
                                             const std::vector<Num>& p);

template <class Num>
struct MarginalOutcome {
  std::vector<Num> marginals;
  bool strict = false;  // every c_v < 1
};

// The forward direction of the correspondence; total on c in [0,1]^V.
template <class Num>
MarginalOutcome<Num> marginals_from_coupling(const Graph& g, const TreeOrder& o,
                                             const std::vector<Num>& c);

// Draws X_v = Y_v * prod_{w in N-(v)} (1 - Y_w) with independent
// Bernoulli(c_v) variables Y.  Stream discipline: a std::mt19937_64 seeded
// once, one 64-bit draw per vertex per sample in linear-extension order;
// Y_v = 1 iff the draw falls below floor(c_v * 2^64), with c_v = 1 always
// firing.  The support of X is an independent set of g in every sample.
class BlockFactorSampler {
 public:
  BlockFactorSampler(const Graph& g, const TreeOrder& o, const std::vector<Rational>& c,
                     std::uint64_t seed);

  // X indexed by vertex id.
  std::vector<std::uint8_t> next();

 private:
  std::mt19937_64 gen_;
  std::vector<VertexId> order_;
  std::vector<std::uint64_t> threshold_;   // by position in order_
  std::vector<std::uint8_t> always_;       // by position; c_v = 1
  std::vector<std::uint32_t> lesser_mask_; // by vertex id
  std::vector<std::uint8_t> y_;
};

// Joint law over {0,1}^V indexed by vertex-id bitmask (bit v = X_v).
template <class Num>
struct JointLaw {
  std::size_t n = 0;
  std::vector<Num> prob;  // 2^n entries
};

// Exhausts the 2^n assignments of Y and accumulates their product weights
// onto the induced X; exact when Num is Rational.
template <class Num>
JointLaw<Num> exact_block_factor_law(const Graph& g, const TreeOrder& o,
                                     const std::vector<Num>& c, std::size_t gate = 16);

struct CheckResult {
  bool pass = true;
  double max_deviation = 0.0;
  std::string detail;
};

struct LawReport {
  CheckResult avoidance;       // P(X zero on W) equals the polynomial, all W
  CheckResult marginals;       // P(X_v = 1) = p_v
  CheckResult independence;    // P(X_u = X_v = 1) = 0 on edges
  CheckResult one_dependence;  // far-apart subfields are independent
  bool all_pass() const {
    return avoidance.pass && marginals.pass && independence.pass && one_dependence.pass;
  }
};

// With tol = 0 every comparison must hold exactly; otherwise absolute
// deviations up to tol pass.  Throws DomainError on dimension mismatch.
template <class Num>
LawReport verify_shearer_law(const JointLaw<Num>& law, const Graph& g,
                             const std::vector<Num>& p, double tol);

enum class RegionVerdict { StrictInterior, Boundary, Outside };

std::string to_string(RegionVerdict v);

struct RegionResult {
  RegionVerdict verdict = RegionVerdict::Outside;
  std::vector<Rational> coupling;  // certificate; empty on Outside and for the oracle
  std::optional<CouplingFailure<Rational>> failure;  // Outside, solver path
  std::optional<VertexSet> negative_subset;          // Outside, oracle path
};

// Solver path: run the correspondence; strict interior iff all c_v < 1,
// boundary iff it succeeds with some c_v = 1.  Requires p in [0,1]^V.
RegionResult shearer_region_membership(const Graph& g, const TreeOrder& o,
                                       const std::vector<Rational>& p);
RegionResult shearer_region_membership(const Graph& g, const std::vector<Rational>& p);

// Oracle path: sign of the independent-set polynomial on every nonempty
// subset, scanned in increasing bitmask order.
RegionResult shearer_region_oracle(const Graph& g, const std::vector<Rational>& p,
                                   std::size_t gate = 16);

// prod_{v in W} (1 - c_v), a positive lower bound on the probability that
// X vanishes on W.  Requires strict interior; throws DomainError otherwise.
Rational lll_lower_bound(const Graph& g, const TreeOrder& o,
                         const std::vector<Rational>& p, const VertexSet& w);

}  // namespace cliquetree
