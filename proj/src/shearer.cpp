#include "cliquetree/shearer.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <deque>
#include <numeric>
#include <sstream>

namespace cliquetree {

namespace {

using boost::multiprecision::cpp_int;

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::size_t begin = text.find_first_not_of(" \t");
  std::size_t end = text.find_last_not_of(" \t");
  if (begin == std::string::npos) throw ParseError("empty number");
  std::string s = text.substr(begin, end - begin + 1);

  bool negative = false;
  if (s[0] == '+' || s[0] == '-') {
    negative = s[0] == '-';
    s.erase(0, 1);
  }
  Rational value;
  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw ParseError("malformed rational '" + text + "'");
    cpp_int d(den);
    if (d == 0) throw ParseError("zero denominator in '" + text + "'");
    value = Rational(cpp_int(num), d);
  } else {
    auto dot = s.find('.');
    std::string ip = dot == std::string::npos ? s : s.substr(0, dot);
    std::string fp = dot == std::string::npos ? "" : s.substr(dot + 1);
    if (ip.empty() && fp.empty()) throw ParseError("malformed number '" + text + "'");
    if (!ip.empty() && !all_digits(ip)) throw ParseError("malformed number '" + text + "'");
    if (!fp.empty() && !all_digits(fp)) throw ParseError("malformed number '" + text + "'");
    cpp_int num = ip.empty() ? cpp_int(0) : cpp_int(ip);
    cpp_int den = 1;
    for (char ch : fp) {
      num = num * 10 + (ch - '0');
      den *= 10;
    }
    value = Rational(num, den);
  }
  return negative ? Rational(-value) : value;
}

std::string format_rational(const Rational& value) {
  std::string num = numerator(value).str();
  if (denominator(value) == 1) return num;
  return num + "/" + denominator(value).str();
}

std::vector<Rational> parse_probability_file(std::istream& in, const Graph& g) {
  std::vector<Rational> values(g.n, 0);
  std::vector<bool> seen(g.n, false);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream row(line);
    std::string name, value, extra;
    if (!(row >> name)) continue;
    if (!(row >> value) || (row >> extra))
      throw ParseError("line " + std::to_string(lineno) +
                       ": expected 'vertexName value'");
    auto v = g.vertex_by_name(name);
    if (!v)
      throw ParseError("line " + std::to_string(lineno) + ": unknown vertex '" +
                       name + "'");
    if (seen[*v])
      throw ParseError("line " + std::to_string(lineno) + ": vertex '" + name +
                       "' assigned twice");
    Rational x = parse_rational(value);
    if (x < 0 || x > 1)
      throw ParseError("line " + std::to_string(lineno) + ": value outside [0,1]");
    values[*v] = x;
    seen[*v] = true;
  }
  for (VertexId v = 0; v < g.n; ++v)
    if (!seen[v]) throw ParseError("vertex '" + g.names[v] + "' has no value");
  return values;
}

TreeOrder TreeOrder::from_relation(std::size_t n, std::vector<std::vector<bool>> leq) {
  TreeOrder o;
  o.n = n;
  o.leq = std::move(leq);
  std::vector<bool> placed(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    VertexId pick = n;
    for (VertexId v = 0; v < n && pick == n; ++v) {
      if (placed[v]) continue;
      bool ready = true;
      for (VertexId w = 0; w < n && ready; ++w)
        if (!placed[w] && w != v && o.leq[w][v] && !o.leq[v][w]) ready = false;
      if (ready) pick = v;
    }
    if (pick == n) {
      // Cyclic relation; fall back to id order and let verification fail.
      for (VertexId v = 0; v < n; ++v)
        if (!placed[v]) {
          pick = v;
          break;
        }
    }
    placed[pick] = true;
    o.linear_extension.push_back(pick);
  }
  return o;
}

TreeOrder build_tree_order(const CliqueGraph& cg, const CliqueTree& t,
                           std::size_t root_clique,
                           const std::vector<std::size_t>& tie_rank) {
  const std::size_t k = cg.clique_count();
  const std::size_t n = cg.vertex_count();
  if (root_clique >= k) throw DomainError("root clique out of range");
  if (Verdict v = validate_definition(cg, t); !v.pass)
    throw DomainError("not a clique tree: " + v.detail);

  std::vector<std::size_t> tie(n);
  if (tie_rank.empty()) {
    std::iota(tie.begin(), tie.end(), 0);
  } else {
    if (tie_rank.size() != n) throw DomainError("tie-break order has the wrong size");
    std::vector<std::size_t> sorted = tie_rank;
    sort_unique(sorted);
    if (sorted.size() != n || sorted.back() != n - 1)
      throw DomainError("tie-break order is not a permutation");
    tie = tie_rank;
  }

  std::vector<std::vector<std::size_t>> adj(k);
  for (std::size_t e : t.edges) {
    adj[cg.edges[e].a].push_back(cg.edges[e].b);
    adj[cg.edges[e].b].push_back(cg.edges[e].a);
  }
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> parent(k, kUnset), depth(k, 0);
  std::deque<std::size_t> queue{root_clique};
  parent[root_clique] = root_clique;
  while (!queue.empty()) {
    std::size_t x = queue.front();
    queue.pop_front();
    for (std::size_t y : adj[x])
      if (parent[y] == kUnset) {
        parent[y] = x;
        depth[y] = depth[x] + 1;
        queue.push_back(y);
      }
  }

  TreeOrder o;
  o.n = n;
  o.root_clique = root_clique;
  o.anchor.assign(n, 0);
  for (VertexId v = 0; v < n; ++v) {
    // The subtree of cliques holding v has a unique node nearest the root.
    std::size_t best = cg.containing[v].front();
    for (std::size_t c : cg.containing[v])
      if (depth[c] < depth[best]) best = c;
    o.anchor[v] = best;
  }

  // is_above[x][y]: x lies on the path from y to the root (inclusive).
  std::vector<std::vector<bool>> is_above(k, std::vector<bool>(k, false));
  for (std::size_t y = 0; y < k; ++y) {
    std::size_t x = y;
    while (true) {
      is_above[x][y] = true;
      if (x == root_clique) break;
      x = parent[x];
    }
  }

  o.leq.assign(n, std::vector<bool>(n, false));
  for (VertexId v = 0; v < n; ++v)
    for (VertexId w = 0; w < n; ++w) {
      if (v == w)
        o.leq[v][w] = true;
      else if (o.anchor[v] == o.anchor[w])
        o.leq[v][w] = tie[v] < tie[w];
      else
        o.leq[v][w] = is_above[o.anchor[w]][o.anchor[v]];
    }

  o.linear_extension.resize(n);
  std::iota(o.linear_extension.begin(), o.linear_extension.end(), 0);
  std::sort(o.linear_extension.begin(), o.linear_extension.end(),
            [&](VertexId a, VertexId b) {
              if (depth[o.anchor[a]] != depth[o.anchor[b]])
                return depth[o.anchor[a]] > depth[o.anchor[b]];
              if (tie[a] != tie[b]) return tie[a] < tie[b];
              return a < b;
            });
  return o;
}

TreeOrder default_tree_order(const Graph& g) {
  CliqueGraph cg = build_clique_graph(g);
  FamilyLattice lattice = enumerate_families(cg);
  CliqueTreeEnumerator trees(cg, lattice);
  auto t = trees.next();
  if (!t) throw std::logic_error("a chordal graph has at least one clique tree");
  return build_tree_order(cg, *t, 0);
}

Verdict verify_tree_order(const Graph& g, const TreeOrder& o) {
  const std::size_t n = g.n;
  if (o.n != n) throw DomainError("order and graph sizes differ");
  if (o.leq.size() != n) throw DomainError("malformed order relation");
  for (const auto& row : o.leq)
    if (row.size() != n) throw DomainError("malformed order relation");

  for (VertexId v = 0; v < n; ++v)
    if (!o.leq[v][v])
      return Verdict::fail("order-not-reflexive", "relation misses a diagonal entry", {v});
  for (VertexId v = 0; v < n; ++v)
    for (VertexId w = v + 1; w < n; ++w)
      if (o.leq[v][w] && o.leq[w][v])
        return Verdict::fail("order-not-antisymmetric",
                             "two distinct vertices precede each other", {v, w});
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = 0; v < n; ++v) {
      if (!o.leq[u][v]) continue;
      for (VertexId w = 0; w < n; ++w)
        if (o.leq[v][w] && !o.leq[u][w])
          return Verdict::fail("order-not-transitive", "relation is not transitive",
                               {u, v, w});
    }

  {
    if (o.linear_extension.size() != n)
      throw DomainError("malformed linear extension");
    std::vector<std::size_t> pos(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      VertexId v = o.linear_extension[i];
      if (v >= n || pos[v] != n) throw DomainError("malformed linear extension");
      pos[v] = i;
    }
    for (VertexId v = 0; v < n; ++v)
      for (VertexId w = 0; w < n; ++w)
        if (o.strictly_less(v, w) && pos[v] > pos[w])
          return Verdict::fail("extension-incompatible",
                               "linear extension contradicts the order", {v, w});
  }

  for (VertexId w = 0; w < n; ++w)
    for (VertexId u = 0; u < n; ++u) {
      if (!o.leq[w][u]) continue;
      for (VertexId v = u + 1; v < n; ++v)
        if (v != u && o.leq[w][v] && !o.comparable(u, v))
          return Verdict::fail("above-common-not-chain",
                               "two incomparable vertices share a lower bound",
                               {w, u, v});
    }

  for (auto [u, v] : g.edges())
    if (!o.comparable(u, v))
      return Verdict::fail("edge-incomparable", "adjacent vertices are incomparable",
                           {u, v});

  for (VertexId w = 0; w < n; ++w)
    for (VertexId u = 0; u < n; ++u) {
      if (u == w || !o.leq[w][u]) continue;
      for (VertexId v = 0; v < n; ++v) {
        if (v == u || v == w) continue;
        if (o.leq[u][v] && g.adjacent(v, w) && !g.adjacent(u, v))
          return Verdict::fail("chain-edge-missing",
                               "an edge skips over the middle of a chain", {w, u, v});
      }
    }
  return Verdict::ok();
}

VertexSet lesser_neighbours(const Graph& g, const TreeOrder& o, VertexId v) {
  if (v >= g.n) throw DomainError("vertex out of range");
  VertexSet out;
  for (VertexId w : g.adj[v])
    if (o.strictly_less(w, v)) out.push_back(w);
  return out;
}

VertexSet downward_set(const TreeOrder& o, VertexId v) {
  if (v >= o.n) throw DomainError("vertex out of range");
  VertexSet out;
  for (VertexId w = 0; w < o.n; ++w)
    if (o.leq[w][v]) out.push_back(w);
  return out;
}

VertexSet max_elements(const TreeOrder& o, const VertexSet& w) {
  VertexSet out;
  for (VertexId v : w) {
    bool maximal = true;
    for (VertexId u : w)
      if (u != v && o.leq[v][u]) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(v);
  }
  return out;
}

VertexSet lesser_boundary(const Graph& g, const TreeOrder& o, const VertexSet& w) {
  VertexSet out;
  for (VertexId v : w)
    for (VertexId u : g.adj[v])
      if (o.strictly_less(u, v)) out.push_back(u);
  sort_unique(out);
  return set_minus(out, w);
}

namespace {

// Adjacency bitmasks for the exponential enumerations; only graphs that
// pass the size gates get here.
std::vector<std::uint32_t> adjacency_masks(const Graph& g) {
  std::vector<std::uint32_t> adj(g.n, 0);
  for (VertexId v = 0; v < g.n; ++v)
    for (VertexId u : g.adj[v]) adj[v] |= std::uint32_t{1} << u;
  return adj;
}

template <class Num>
Num isp_over_mask(const std::vector<std::uint32_t>& adj, const std::vector<Num>& p,
                  std::uint32_t allowed) {
  if (!allowed) return Num(1);
  const int v = std::countr_zero(allowed);
  const std::uint32_t rest = allowed & (allowed - 1);
  return isp_over_mask(adj, p, rest) -
         p[v] * isp_over_mask(adj, p, rest & ~adj[v]);
}

std::uint32_t mask_of(const VertexSet& s, std::size_t n) {
  std::uint32_t mask = 0;
  for (VertexId v : s) {
    if (v >= n) throw DomainError("vertex out of range");
    mask |= std::uint32_t{1} << v;
  }
  return mask;
}

VertexSet mask_vertices(std::uint32_t mask) {
  VertexSet out;
  while (mask) {
    out.push_back(static_cast<VertexId>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return out;
}

void check_isp_gate(const Graph& g, const std::vector<std::size_t>& sizes,
                    std::size_t gate) {
  (void)sizes;
  if (gate > 25) throw DomainError("gate beyond the supported range");
  if (g.n > gate) throw DomainError("graph too large for subset enumeration");
}

}  // namespace

template <class Num>
Num independent_set_polynomial_over(const Graph& g, const std::vector<Num>& p,
                                    const VertexSet& subset, std::size_t gate) {
  check_isp_gate(g, {}, gate);
  if (p.size() != g.n) throw DomainError("probability vector size mismatch");
  return isp_over_mask(adjacency_masks(g), p, mask_of(subset, g.n));
}

template <class Num>
Num independent_set_polynomial(const Graph& g, const std::vector<Num>& p,
                               std::size_t gate) {
  VertexSet all(g.n);
  std::iota(all.begin(), all.end(), 0);
  return independent_set_polynomial_over(g, p, all, gate);
}

template <class Num>
CouplingOutcome<Num> coupling_from_marginals(const Graph& g, const TreeOrder& o,
                                             const std::vector<Num>& p) {
  if (o.n != g.n || p.size() != g.n)
    throw DomainError("order or probability vector size mismatch");
  CouplingOutcome<Num> out;
  out.coupling.assign(g.n, Num(0));
  for (VertexId v : o.linear_extension) {
    Num denom(1);
    for (VertexId w : g.adj[v])
      if (o.strictly_less(w, v)) denom *= Num(1) - out.coupling[w];
    if (denom == Num(0)) {
      if (p[v] == Num(0)) continue;  // 0/0: any value works, take 0
      out.failure = CouplingFailure<Num>{v, Num(0), true};
      out.coupling.clear();
      return out;
    }
    Num c = p[v] / denom;
    if (c < Num(0) || c > Num(1)) {
      out.failure = CouplingFailure<Num>{v, c, false};
      out.coupling.clear();
      return out;
    }
    out.coupling[v] = c;
  }
  return out;
}

template <class Num>
MarginalOutcome<Num> marginals_from_coupling(const Graph& g, const TreeOrder& o,
                                             const std::vector<Num>& c) {
  if (o.n != g.n || c.size() != g.n)
    throw DomainError("order or coupling vector size mismatch");
  for (const Num& x : c)
    if (x < Num(0) || x > Num(1)) throw DomainError("coupling value outside [0,1]");
  MarginalOutcome<Num> out;
  out.strict = std::all_of(c.begin(), c.end(), [](const Num& x) { return x < Num(1); });
  out.marginals.assign(g.n, Num(0));
  for (VertexId v = 0; v < g.n; ++v) {
    Num m = c[v];
    for (VertexId w : g.adj[v])
      if (o.strictly_less(w, v)) m *= Num(1) - c[w];
    out.marginals[v] = m;
  }
  return out;
}

BlockFactorSampler::BlockFactorSampler(const Graph& g, const TreeOrder& o,
                                       const std::vector<Rational>& c,
                                       std::uint64_t seed)
    : gen_(seed) {
  if (o.n != g.n || c.size() != g.n)
    throw DomainError("order or coupling vector size mismatch");
  if (g.n > 32) throw DomainError("sampler supports at most 32 vertices");
  for (const Rational& x : c)
    if (x < 0 || x > 1) throw DomainError("coupling value outside [0,1]");

  order_ = o.linear_extension;
  threshold_.assign(g.n, 0);
  always_.assign(g.n, 0);
  for (std::size_t i = 0; i < g.n; ++i) {
    const Rational& x = c[order_[i]];
    if (x == 1) {
      always_[i] = 1;
    } else {
      using boost::multiprecision::cpp_int;
      cpp_int scaled = (cpp_int(numerator(x)) << 64) / cpp_int(denominator(x));
      threshold_[i] = scaled.convert_to<std::uint64_t>();
    }
  }
  lesser_mask_.assign(g.n, 0);
  for (VertexId v = 0; v < g.n; ++v)
    for (VertexId w : g.adj[v])
      if (o.strictly_less(w, v)) lesser_mask_[v] |= std::uint32_t{1} << w;
  y_.assign(g.n, 0);
}

std::vector<std::uint8_t> BlockFactorSampler::next() {
  const std::size_t n = order_.size();
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t draw = gen_();
    y_[order_[i]] = always_[i] || draw < threshold_[i];
  }
  std::uint32_t ymask = 0;
  for (VertexId v = 0; v < n; ++v)
    if (y_[v]) ymask |= std::uint32_t{1} << v;
  std::vector<std::uint8_t> x(n, 0);
  for (VertexId v = 0; v < n; ++v)
    x[v] = ((ymask >> v) & 1) && !(ymask & lesser_mask_[v]);
  return x;
}

template <class Num>
JointLaw<Num> exact_block_factor_law(const Graph& g, const TreeOrder& o,
                                     const std::vector<Num>& c, std::size_t gate) {
  if (o.n != g.n || c.size() != g.n)
    throw DomainError("order or coupling vector size mismatch");
  if (gate > 25) throw DomainError("gate beyond the supported range");
  if (g.n > gate) throw DomainError("graph too large for the exact law");
  for (const Num& x : c)
    if (x < Num(0) || x > Num(1)) throw DomainError("coupling value outside [0,1]");

  std::vector<std::uint32_t> lesser(g.n, 0);
  for (VertexId v = 0; v < g.n; ++v)
    for (VertexId w : g.adj[v])
      if (o.strictly_less(w, v)) lesser[v] |= std::uint32_t{1} << w;

  JointLaw<Num> law;
  law.n = g.n;
  law.prob.assign(std::size_t{1} << g.n, Num(0));
  const std::uint32_t full = (std::uint32_t{1} << g.n) - 1;
  for (std::uint32_t y = 0;; ++y) {
    Num weight(1);
    for (VertexId v = 0; v < g.n; ++v)
      weight *= ((y >> v) & 1) ? c[v] : Num(1) - c[v];
    std::uint32_t x = 0;
    for (VertexId v = 0; v < g.n; ++v)
      if (((y >> v) & 1) && !(y & lesser[v])) x |= std::uint32_t{1} << v;
    law.prob[x] += weight;
    if (y == full) break;
  }
  return law;
}

namespace {

std::string mask_names(const Graph& g, std::uint32_t mask) {
  std::string out = "{";
  bool first = true;
  for (VertexId v : mask_vertices(mask)) {
    if (!first) out += ",";
    out += g.names[v];
    first = false;
  }
  return out + "}";
}

// Packs the bits of m lying in set_mask into a dense index.
std::uint32_t pack_bits(std::uint32_t m, std::uint32_t set_mask) {
  std::uint32_t out = 0;
  int k = 0;
  for (std::uint32_t scan = set_mask; scan; scan &= scan - 1) {
    if (m & (scan & ~(scan - 1))) out |= std::uint32_t{1} << k;
    ++k;
  }
  return out;
}

template <class Num>
struct Comparator {
  double tol;
  bool equal(const Num& a, const Num& b, double* dev) const {
    Num diff = a < b ? b - a : a - b;
    double d = to_double(diff);
    if (dev && d > *dev) *dev = d;
    if (tol == 0.0) return diff == Num(0);
    return d <= tol;
  }
};

}  // namespace

template <class Num>
LawReport verify_shearer_law(const JointLaw<Num>& law, const Graph& g,
                             const std::vector<Num>& p, double tol) {
  const std::size_t n = g.n;
  if (law.n != n || law.prob.size() != (std::size_t{1} << n) || p.size() != n)
    throw DomainError("dimension mismatch");
  if (n > 25) throw DomainError("graph too large for law verification");

  LawReport report;
  Comparator<Num> cmp{tol};
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  const std::vector<std::uint32_t> adj = adjacency_masks(g);

  {
    // zeta[S] = P(X inside S); avoidance of W is then zeta[complement of W].
    std::vector<Num> zeta = law.prob;
    for (VertexId v = 0; v < n; ++v)
      for (std::uint32_t s = 0;; ++s) {
        if ((s >> v) & 1) zeta[s] += zeta[s ^ (std::uint32_t{1} << v)];
        if (s == full) break;
      }
    for (std::uint32_t w = 0;; ++w) {
      Num avoid = zeta[full & ~w];
      Num poly = isp_over_mask(adj, p, w);
      if (!cmp.equal(avoid, poly, &report.avoidance.max_deviation) &&
          report.avoidance.pass) {
        report.avoidance.pass = false;
        report.avoidance.detail = "avoidance mismatch on " + mask_names(g, w);
      }
      if (w == full) break;
    }
  }

  for (VertexId v = 0; v < n; ++v) {
    Num marginal(0);
    for (std::uint32_t m = 0;; ++m) {
      if ((m >> v) & 1) marginal += law.prob[m];
      if (m == full) break;
    }
    if (!cmp.equal(marginal, p[v], &report.marginals.max_deviation) &&
        report.marginals.pass) {
      report.marginals.pass = false;
      report.marginals.detail = "marginal mismatch at '" + g.names[v] + "'";
    }
  }

  for (auto [u, v] : g.edges()) {
    Num both(0);
    const std::uint32_t pair = (std::uint32_t{1} << u) | (std::uint32_t{1} << v);
    for (std::uint32_t m = 0;; ++m) {
      if ((m & pair) == pair) both += law.prob[m];
      if (m == full) break;
    }
    if (!cmp.equal(both, Num(0), &report.independence.max_deviation) &&
        report.independence.pass) {
      report.independence.pass = false;
      report.independence.detail =
          "both endpoints of edge " + g.names[u] + "-" + g.names[v] + " fire";
    }
  }

  {
    // Distance matrix for the far-set computation.
    std::vector<std::vector<std::size_t>> dist(n, std::vector<std::size_t>(n, n + 1));
    for (VertexId s = 0; s < n; ++s) {
      std::deque<VertexId> queue{s};
      dist[s][s] = 0;
      while (!queue.empty()) {
        VertexId x = queue.front();
        queue.pop_front();
        for (VertexId y : g.adj[x])
          if (dist[s][y] > dist[s][x] + 1) {
            dist[s][y] = dist[s][x] + 1;
            queue.push_back(y);
          }
      }
    }
    // Checking each U against its entire far set covers every pair at
    // distance > 1: any qualifying W sits inside the far set, and product
    // structure survives marginalization.
    for (std::uint32_t u_mask = 1; u_mask <= full; ++u_mask) {
      std::uint32_t far = 0;
      for (VertexId v = 0; v < n; ++v) {
        bool distant = true;
        for (VertexId u : mask_vertices(u_mask))
          if (dist[v][u] <= 1) {
            distant = false;
            break;
          }
        if (distant) far |= std::uint32_t{1} << v;
      }
      if (!far) continue;
      const std::uint32_t a_count = std::uint32_t{1} << std::popcount(u_mask);
      const std::uint32_t b_count = std::uint32_t{1} << std::popcount(far);
      std::vector<Num> joint(std::size_t{a_count} * b_count, Num(0));
      std::vector<Num> marg_a(a_count, Num(0)), marg_b(b_count, Num(0));
      for (std::uint32_t m = 0;; ++m) {
        std::uint32_t a = pack_bits(m, u_mask), b = pack_bits(m, far);
        joint[std::size_t{a} * b_count + b] += law.prob[m];
        marg_a[a] += law.prob[m];
        marg_b[b] += law.prob[m];
        if (m == full) break;
      }
      for (std::uint32_t a = 0; a < a_count; ++a)
        for (std::uint32_t b = 0; b < b_count; ++b) {
          Num product = marg_a[a] * marg_b[b];
          if (!cmp.equal(joint[std::size_t{a} * b_count + b], product,
                         &report.one_dependence.max_deviation) &&
              report.one_dependence.pass) {
            report.one_dependence.pass = false;
            report.one_dependence.detail = "joint law over " + mask_names(g, u_mask) +
                                           " and " + mask_names(g, far) +
                                           " does not factorize";
          }
        }
    }
  }
  return report;
}

std::string to_string(RegionVerdict v) {
  switch (v) {
    case RegionVerdict::StrictInterior: return "strict-interior";
    case RegionVerdict::Boundary: return "boundary";
    case RegionVerdict::Outside: return "outside";
  }
  return "outside";
}

namespace {

void check_probability_box(const std::vector<Rational>& p) {
  for (const Rational& x : p)
    if (x < 0 || x > 1) throw DomainError("marginal outside [0,1]");
}

}  // namespace

RegionResult shearer_region_membership(const Graph& g, const TreeOrder& o,
                                       const std::vector<Rational>& p) {
  if (p.size() != g.n) throw DomainError("probability vector size mismatch");
  check_probability_box(p);
  RegionResult result;
  auto solved = coupling_from_marginals<Rational>(g, o, p);
  if (!solved.ok()) {
    result.verdict = RegionVerdict::Outside;
    result.failure = solved.failure;
    return result;
  }
  result.coupling = std::move(solved.coupling);
  result.verdict = std::any_of(result.coupling.begin(), result.coupling.end(),
                               [](const Rational& c) { return c == 1; })
                       ? RegionVerdict::Boundary
                       : RegionVerdict::StrictInterior;
  return result;
}

RegionResult shearer_region_membership(const Graph& g, const std::vector<Rational>& p) {
  return shearer_region_membership(g, default_tree_order(g), p);
}

RegionResult shearer_region_oracle(const Graph& g, const std::vector<Rational>& p,
                                   std::size_t gate) {
  if (p.size() != g.n) throw DomainError("probability vector size mismatch");
  check_probability_box(p);
  check_isp_gate(g, {}, gate);

  const std::vector<std::uint32_t> adj = adjacency_masks(g);
  const std::uint32_t full = (std::uint32_t{1} << g.n) - 1;
  RegionResult result;
  bool zero_seen = false;
  for (std::uint32_t w = 1; w <= full; ++w) {
    Rational value = isp_over_mask(adj, p, w);
    if (value < 0) {
      result.verdict = RegionVerdict::Outside;
      result.negative_subset = mask_vertices(w);
      return result;
    }
    if (value == 0) zero_seen = true;
  }
  result.verdict = zero_seen ? RegionVerdict::Boundary : RegionVerdict::StrictInterior;
  return result;
}

Rational lll_lower_bound(const Graph& g, const TreeOrder& o,
                         const std::vector<Rational>& p, const VertexSet& w) {
  if (p.size() != g.n) throw DomainError("probability vector size mismatch");
  check_probability_box(p);
  auto solved = coupling_from_marginals<Rational>(g, o, p);
  if (!solved.ok())
    throw DomainError("marginals are outside the admissible region");
  for (const Rational& c : solved.coupling)
    if (c == 1)
      throw DomainError("marginals sit on the region boundary; the bound needs "
                        "the strict interior");
  Rational bound = 1;
  for (VertexId v : w) {
    if (v >= g.n) throw DomainError("vertex out of range");
    bound *= 1 - solved.coupling[v];
  }
  return bound;
}

template Rational independent_set_polynomial<Rational>(const Graph&,
                                                       const std::vector<Rational>&,
                                                       std::size_t);
template double independent_set_polynomial<double>(const Graph&,
                                                   const std::vector<double>&,
                                                   std::size_t);
template Rational independent_set_polynomial_over<Rational>(const Graph&,
                                                            const std::vector<Rational>&,
                                                            const VertexSet&, std::size_t);
template double independent_set_polynomial_over<double>(const Graph&,
                                                        const std::vector<double>&,
                                                        const VertexSet&, std::size_t);
template CouplingOutcome<Rational> coupling_from_marginals<Rational>(
    const Graph&, const TreeOrder&, const std::vector<Rational>&);
template CouplingOutcome<double> coupling_from_marginals<double>(
    const Graph&, const TreeOrder&, const std::vector<double>&);
template MarginalOutcome<Rational> marginals_from_coupling<Rational>(
    const Graph&, const TreeOrder&, const std::vector<Rational>&);
template MarginalOutcome<double> marginals_from_coupling<double>(
    const Graph&, const TreeOrder&, const std::vector<double>&);
template JointLaw<Rational> exact_block_factor_law<Rational>(const Graph&,
                                                             const TreeOrder&,
                                                             const std::vector<Rational>&,
                                                             std::size_t);
template JointLaw<double> exact_block_factor_law<double>(const Graph&, const TreeOrder&,
                                                         const std::vector<double>&,
                                                         std::size_t);
template LawReport verify_shearer_law<Rational>(const JointLaw<Rational>&, const Graph&,
                                                const std::vector<Rational>&, double);
template LawReport verify_shearer_law<double>(const JointLaw<double>&, const Graph&,
                                              const std::vector<double>&, double);

}  // namespace cliquetree
