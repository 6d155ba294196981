#include "cliquetree/cli.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cliquetree/clique_lattice.hpp"
#include "cliquetree/clique_trees.hpp"
#include "cliquetree/graph.hpp"
#include "cliquetree/separators.hpp"
#include "cliquetree/shearer.hpp"

namespace cliquetree {
namespace {

using nlohmann::json;

constexpr const char* kVersion = "1.0.0";

struct Io {
  std::ostream& out;
  std::ostream& err;
  bool json_mode = false;
};

json new_doc() {
  json doc;
  doc["version"] = kVersion;
  return doc;
}

void emit(const Io& io, const json& doc) { io.out << doc.dump(2) << "\n"; }

json names_of(const Graph& g, const VertexSet& s) {
  json a = json::array();
  for (VertexId v : s) a.push_back(g.names[v]);
  return a;
}

std::string join_names(const Graph& g, const VertexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += g.names[s[i]];
  }
  return out + "}";
}

std::string format_double(double x) {
  std::ostringstream s;
  s.precision(17);
  s << x;
  return s.str();
}

Graph load_graph(const std::string& path, std::ostream& err) {
  std::vector<std::string> warnings;
  Graph g;
  if (path == "-") {
    g = parse_graph(std::cin, &warnings);
  } else {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    g = parse_graph(in, &warnings);
  }
  for (const auto& w : warnings) err << "warning: " << w << "\n";
  if (g.n == 0) throw DomainError("empty graph");
  return g;
}

struct Pipeline {
  Graph g;
  CliqueGraph cg;
  FamilyLattice lattice;
};

Pipeline make_pipeline(Graph g) {
  ChordalityResult ch = is_chordal(g);
  if (!ch.chordal()) {
    std::string cycle;
    for (VertexId v : ch.witness->vertices) cycle += " " + g.names[v];
    throw DomainError("graph is not chordal; chordless cycle:" + cycle);
  }
  Pipeline p{std::move(g), {}, {}};
  p.cg = build_clique_graph(p.g);
  p.lattice = enumerate_families(p.cg);
  return p;
}

std::vector<Rational> load_values(const std::string& path, const Graph& g) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return parse_probability_file(in, g);
}

TreeOrder make_order(const Pipeline& p, std::size_t root) {
  CliqueTreeEnumerator trees(p.cg, p.lattice);
  auto t = trees.next();
  if (!t) throw std::logic_error("a chordal graph has at least one clique tree");
  return build_tree_order(p.cg, *t, root);
}

json verdict_json(const Verdict& v) {
  json doc;
  doc["pass"] = v.pass;
  doc["code"] = v.code;
  doc["detail"] = v.detail;
  doc["indices"] = v.indices;
  return doc;
}

void print_verdict(const Io& io, const std::string& name, const Verdict& v) {
  io.out << name << ": " << (v.pass ? "PASS" : "FAIL");
  if (!v.code.empty()) io.out << " " << v.code;
  if (!v.indices.empty()) {
    io.out << " [";
    for (std::size_t i = 0; i < v.indices.size(); ++i)
      io.out << (i ? " " : "") << v.indices[i];
    io.out << "]";
  }
  if (!v.pass && !v.detail.empty()) io.out << " (" << v.detail << ")";
  io.out << "\n";
}

int cmd_check_chordal(const Graph& g, const Io& io) {
  ChordalityResult ch = is_chordal(g);
  if (io.json_mode) {
    json doc = new_doc();
    doc["chordal"] = ch.chordal();
    if (ch.chordal())
      doc["elimination_order"] = names_of(g, ch.peo->order);
    else
      doc["witness_cycle"] = names_of(g, ch.witness->vertices);
    emit(io, doc);
  } else if (ch.chordal()) {
    io.out << "chordal\nelimination order:";
    for (VertexId v : ch.peo->order) io.out << " " << g.names[v];
    io.out << "\n";
  } else {
    io.out << "not chordal\nchordless cycle:";
    for (VertexId v : ch.witness->vertices) io.out << " " << g.names[v];
    io.out << "\n";
  }
  return ch.chordal() ? 0 : 3;
}

int cmd_cliques(const Pipeline& p, const Io& io) {
  if (io.json_mode) {
    json doc = new_doc();
    json cliques = json::array();
    for (const auto& k : p.cg.cliques) cliques.push_back(names_of(p.g, k));
    doc["cliques"] = cliques;
    emit(io, doc);
  } else {
    for (std::size_t k = 0; k < p.cg.clique_count(); ++k)
      io.out << "clique " << k << ": " << join_names(p.g, p.cg.cliques[k]) << "\n";
  }
  return 0;
}

json clique_graph_edges_json(const Pipeline& p) {
  json edges = json::array();
  for (std::size_t e = 0; e < p.cg.edges.size(); ++e) {
    json row;
    row["index"] = e;
    row["a"] = p.cg.edges[e].a;
    row["b"] = p.cg.edges[e].b;
    row["label"] = names_of(p.g, p.cg.edges[e].label);
    edges.push_back(row);
  }
  return edges;
}

int cmd_clique_graph(const Pipeline& p, const Io& io) {
  if (io.json_mode) {
    json doc = new_doc();
    json cliques = json::array();
    for (const auto& k : p.cg.cliques) cliques.push_back(names_of(p.g, k));
    doc["cliques"] = cliques;
    doc["edges"] = clique_graph_edges_json(p);
    emit(io, doc);
  } else {
    for (std::size_t k = 0; k < p.cg.clique_count(); ++k)
      io.out << "clique " << k << ": " << join_names(p.g, p.cg.cliques[k]) << "\n";
    for (std::size_t e = 0; e < p.cg.edges.size(); ++e)
      io.out << "edge " << e << ": " << p.cg.edges[e].a << "-" << p.cg.edges[e].b
             << " label " << join_names(p.g, p.cg.edges[e].label) << "\n";
  }
  return 0;
}

int cmd_families(const Pipeline& p, const Io& io) {
  if (io.json_mode) {
    json doc = new_doc();
    json fams = json::array();
    for (std::size_t f = 0; f < p.lattice.size(); ++f) {
      const auto& fam = p.lattice.families[f];
      const auto& fg = p.lattice.graphs[f];
      json row;
      row["index"] = f;
      row["members"] = fam.members;
      row["max_generator"] = names_of(p.g, fam.max_generator);
      row["r_edges"] = fg.r_edges;
      row["s_edges"] = fg.s_edges;
      row["classes"] = fg.classes;
      json b;
      b["vertex_count"] = fg.b.n;
      json bedges = json::array();
      for (const auto& e : fg.b.edges) {
        json be;
        be["u"] = e.u;
        be["v"] = e.v;
        be["label"] = e.label;
        bedges.push_back(be);
      }
      b["edges"] = bedges;
      row["b"] = b;
      fams.push_back(row);
    }
    doc["families"] = fams;
    emit(io, doc);
  } else {
    for (std::size_t f = 0; f < p.lattice.size(); ++f) {
      const auto& fam = p.lattice.families[f];
      const auto& fg = p.lattice.graphs[f];
      io.out << "family " << f << ": members";
      for (std::size_t k : fam.members) io.out << " K" << k;
      io.out << " | generator " << join_names(p.g, fam.max_generator) << " | classes";
      for (const auto& c : fg.classes) {
        io.out << " [";
        for (std::size_t i = 0; i < c.size(); ++i) io.out << (i ? " " : "") << "K" << c[i];
        io.out << "]";
      }
      io.out << " | b: " << fg.b.n << " vertices, " << fg.b.edges.size() << " edges\n";
    }
  }
  return 0;
}

int cmd_partition(const Pipeline& p, const Io& io) {
  std::vector<std::size_t> part = edge_partition(p.cg, p.lattice);
  if (io.json_mode) {
    json doc = new_doc();
    json edges = json::array();
    for (std::size_t e = 0; e < p.cg.edges.size(); ++e) {
      json row;
      row["index"] = e;
      row["a"] = p.cg.edges[e].a;
      row["b"] = p.cg.edges[e].b;
      row["label"] = names_of(p.g, p.cg.edges[e].label);
      row["family"] = part[e];
      edges.push_back(row);
    }
    doc["edges"] = edges;
    emit(io, doc);
  } else {
    for (std::size_t e = 0; e < p.cg.edges.size(); ++e)
      io.out << "edge " << e << ": " << p.cg.edges[e].a << "-" << p.cg.edges[e].b
             << " label " << join_names(p.g, p.cg.edges[e].label) << " -> family "
             << part[e] << "\n";
  }
  return 0;
}

int cmd_count_trees(const Pipeline& p, const Io& io) {
  BigInt count = count_clique_trees(p.cg, p.lattice);
  if (io.json_mode) {
    json doc = new_doc();
    doc["count"] = count.str();
    json per = json::array();
    for (const auto& fg : p.lattice.graphs)
      per.push_back(count_spanning_trees(fg.b).str());
    doc["per_family"] = per;
    emit(io, doc);
  } else {
    io.out << count.str() << "\n";
  }
  return 0;
}

int cmd_enum_trees(const Pipeline& p, std::size_t limit, const Io& io) {
  CliqueTreeEnumerator trees(p.cg, p.lattice);
  json items = json::array();
  std::size_t emitted = 0;
  while (limit == 0 || emitted < limit) {
    auto t = trees.next();
    if (!t) break;
    if (io.json_mode) {
      json row;
      json edges = json::array();
      for (std::size_t e : t->edges)
        edges.push_back(json::array({p.cg.edges[e].a, p.cg.edges[e].b}));
      row["edges"] = edges;
      row["choice"] = trees.choice_indices();
      items.push_back(row);
    } else {
      io.out << "tree " << emitted << ":";
      for (std::size_t e : t->edges)
        io.out << " (" << p.cg.edges[e].a << "," << p.cg.edges[e].b << ")";
      io.out << "\n";
    }
    ++emitted;
  }
  if (io.json_mode) {
    json doc = new_doc();
    doc["trees"] = items;
    doc["total"] = trees.total().str();
    doc["emitted"] = emitted;
    emit(io, doc);
  }
  return 0;
}

// A tree document is {"edges": [[a,b], ...]}; enum-trees output wraps a
// list of them under "trees", and a single document may sit under "tree".
std::vector<json> tree_documents(const json& file) {
  std::vector<json> docs;
  if (file.is_object() && file.contains("trees")) {
    if (!file["trees"].is_array()) throw ParseError("'trees' is not a list");
    for (const auto& t : file["trees"]) docs.push_back(t);
  } else if (file.is_object() && file.contains("tree")) {
    docs.push_back(file["tree"]);
  } else if (file.is_object() && file.contains("edges")) {
    docs.push_back(file);
  } else {
    throw ParseError("no tree found in the file");
  }
  return docs;
}

// Resolves a tree document against the clique graph; structural problems
// (unknown clique index, no such clique-graph edge) come back as a failed
// verdict rather than an error, since they mean the tree does not validate.
bool tree_from_document(const Pipeline& p, const json& doc, CliqueTree* t,
                        Verdict* verdict) {
  if (!doc.is_object() || !doc.contains("edges") || !doc["edges"].is_array())
    throw ParseError("tree document lacks an 'edges' list");
  t->edges.clear();
  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() ||
        !e[1].is_number_unsigned())
      throw ParseError("tree edge is not a pair of clique indices");
    std::size_t a = e[0], b = e[1];
    if (a >= p.cg.clique_count() || b >= p.cg.clique_count()) {
      *verdict = Verdict::fail("unknown-clique", "edge names a clique index outside "
                               "the clique graph", {a, b});
      return false;
    }
    auto idx = p.cg.edge_index(a, b);
    if (!idx) {
      *verdict = Verdict::fail("not-an-edge",
                               "named cliques are disjoint, so the pair is not a "
                               "clique-graph edge",
                               {a, b});
      return false;
    }
    t->edges.push_back(*idx);
  }
  std::sort(t->edges.begin(), t->edges.end());
  return true;
}

int cmd_validate_tree(const Pipeline& p, const std::string& tree_path,
                      const std::string& criterion, const Io& io) {
  std::ifstream in(tree_path);
  if (!in) throw ParseError("cannot open '" + tree_path + "'");
  json file;
  try {
    file = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError("tree file: " + std::string(e.what()));
  }

  const bool all = criterion == "all";
  bool every_tree_passed = true;
  json results = json::array();

  std::size_t index = 0;
  for (const json& doc : tree_documents(file)) {
    CliqueTree t;
    Verdict structure;
    json row;
    row["tree"] = index;
    json verdicts;
    bool tree_pass = true;
    if (!tree_from_document(p, doc, &t, &structure)) {
      verdicts["structure"] = verdict_json(structure);
      tree_pass = false;
      if (!io.json_mode) print_verdict(io, "tree " + std::to_string(index) + " structure",
                                       structure);
    } else {
      auto run = [&](const std::string& name, Verdict v) {
        verdicts[name] = verdict_json(v);
        tree_pass = tree_pass && v.pass;
        if (!io.json_mode)
          print_verdict(io, "tree " + std::to_string(index) + " " + name, v);
      };
      if (all || criterion == "def") run("def", validate_definition(p.cg, t));
      if (all || criterion == "cip") run("cip", validate_cip(p.cg, t));
      if (all || criterion == "rip") run("rip", validate_rip_tree(p.cg, t));
      if (all || criterion == "maxw")
        run("maxw", validate_local_max_weight(p.cg, p.lattice, t));
    }
    row["verdicts"] = verdicts;
    row["pass"] = tree_pass;
    results.push_back(row);
    every_tree_passed = every_tree_passed && tree_pass;
    ++index;
  }

  if (io.json_mode) {
    json out = new_doc();
    out["results"] = results;
    out["pass"] = every_tree_passed;
    emit(io, out);
  } else {
    io.out << (every_tree_passed ? "pass" : "fail") << "\n";
  }
  return every_tree_passed ? 0 : 1;
}

int cmd_separators(const Pipeline& p, bool oracle, std::size_t gate, const Io& io) {
  SeparatorList lattice_route = minimal_separators_lattice(p.lattice);
  bool agree = true;
  SeparatorList oracle_route;
  if (oracle) {
    oracle_route = minimal_separators_oracle(p.g, gate);
    agree = lattice_route == oracle_route;
  }
  if (io.json_mode) {
    json doc = new_doc();
    json seps = json::array();
    for (const auto& s : lattice_route) seps.push_back(names_of(p.g, s));
    doc["separators"] = seps;
    if (oracle) {
      json orc = json::array();
      for (const auto& s : oracle_route) orc.push_back(names_of(p.g, s));
      doc["oracle"] = orc;
      doc["agree"] = agree;
    }
    emit(io, doc);
  } else {
    for (const auto& s : lattice_route)
      io.out << "separator: " << join_names(p.g, s) << "\n";
    if (oracle) {
      for (const auto& s : oracle_route)
        io.out << "oracle: " << join_names(p.g, s) << "\n";
      io.out << "agree: " << (agree ? "yes" : "no") << "\n";
    }
  }
  return agree ? 0 : 1;
}

int cmd_reduced_graph(const Pipeline& p, const Io& io) {
  SeparatorList seps = minimal_separators_lattice(p.lattice);
  std::vector<std::size_t> edges = reduced_clique_graph(p.cg, seps);
  if (io.json_mode) {
    json doc = new_doc();
    json rows = json::array();
    for (std::size_t e : edges) {
      json row;
      row["index"] = e;
      row["a"] = p.cg.edges[e].a;
      row["b"] = p.cg.edges[e].b;
      row["label"] = names_of(p.g, p.cg.edges[e].label);
      rows.push_back(row);
    }
    doc["edges"] = rows;
    emit(io, doc);
  } else {
    for (std::size_t e : edges)
      io.out << "edge " << e << ": " << p.cg.edges[e].a << "-" << p.cg.edges[e].b
             << " label " << join_names(p.g, p.cg.edges[e].label) << "\n";
  }
  return 0;
}

json rational_map(const Graph& g, const std::vector<Rational>& values) {
  json doc;
  for (VertexId v = 0; v < g.n; ++v) doc[g.names[v]] = format_rational(values[v]);
  return doc;
}

std::string coupling_failure_message(const Graph& g, const CouplingFailure<Rational>& f) {
  if (f.division_by_zero)
    return "not in the admissible region: vertex '" + g.names[f.vertex] +
           "' has positive marginal over a zero product";
  return "not in the admissible region: vertex '" + g.names[f.vertex] +
         "' solves to coupling value " + format_rational(f.value);
}

int cmd_region(const Pipeline& p, const std::string& prob_path, std::size_t root,
               const Io& io) {
  std::vector<Rational> prob = load_values(prob_path, p.g);
  RegionResult r = shearer_region_membership(p.g, make_order(p, root), prob);
  if (io.json_mode) {
    json doc = new_doc();
    doc["verdict"] = to_string(r.verdict);
    if (!r.coupling.empty()) doc["coupling"] = rational_map(p.g, r.coupling);
    if (r.failure) {
      json f;
      f["vertex"] = p.g.names[r.failure->vertex];
      f["division_by_zero"] = r.failure->division_by_zero;
      if (!r.failure->division_by_zero) f["value"] = format_rational(r.failure->value);
      doc["not_in_region"] = f;
    }
    emit(io, doc);
  } else {
    io.out << "verdict: " << to_string(r.verdict) << "\n";
    for (std::size_t v = 0; v < r.coupling.size(); ++v)
      io.out << p.g.names[v] << " " << format_rational(r.coupling[v]) << "\n";
    if (r.failure) io.out << coupling_failure_message(p.g, *r.failure) << "\n";
  }
  return r.verdict == RegionVerdict::Outside ? 3 : 0;
}

int cmd_c_from_p(const Pipeline& p, const std::string& prob_path, std::size_t root,
                 const Io& io) {
  std::vector<Rational> prob = load_values(prob_path, p.g);
  auto solved = coupling_from_marginals<Rational>(p.g, make_order(p, root), prob);
  if (!solved.ok()) throw DomainError(coupling_failure_message(p.g, *solved.failure));
  if (io.json_mode) {
    json doc = new_doc();
    doc["coupling"] = rational_map(p.g, solved.coupling);
    emit(io, doc);
  } else {
    for (VertexId v = 0; v < p.g.n; ++v)
      io.out << p.g.names[v] << " " << format_rational(solved.coupling[v]) << "\n";
  }
  return 0;
}

int cmd_p_from_c(const Pipeline& p, const std::string& coupling_path, std::size_t root,
                 const Io& io) {
  std::vector<Rational> coupling = load_values(coupling_path, p.g);
  auto result = marginals_from_coupling<Rational>(p.g, make_order(p, root), coupling);
  if (io.json_mode) {
    json doc = new_doc();
    doc["marginals"] = rational_map(p.g, result.marginals);
    doc["strict"] = result.strict;
    emit(io, doc);
  } else {
    io.out << "# strict: " << (result.strict ? "true" : "false") << "\n";
    for (VertexId v = 0; v < p.g.n; ++v)
      io.out << p.g.names[v] << " " << format_rational(result.marginals[v]) << "\n";
  }
  return 0;
}

int cmd_sample(const Pipeline& p, const std::string& coupling_path, std::size_t root,
               std::uint64_t seed, std::size_t samples, const Io& io) {
  std::vector<Rational> coupling = load_values(coupling_path, p.g);
  TreeOrder order = make_order(p, root);
  BlockFactorSampler sampler(p.g, order, coupling, seed);
  json rows = json::array();
  if (!io.json_mode) {
    io.out << "# order:";
    for (VertexId v : order.linear_extension) io.out << " " << p.g.names[v];
    io.out << "\n";
  }
  for (std::size_t s = 0; s < samples; ++s) {
    std::vector<std::uint8_t> x = sampler.next();
    std::string bits;
    bits.reserve(p.g.n);
    for (VertexId v : order.linear_extension) bits += x[v] ? '1' : '0';
    if (io.json_mode)
      rows.push_back(bits);
    else
      io.out << bits << "\n";
  }
  if (io.json_mode) {
    json doc = new_doc();
    json order_names = json::array();
    for (VertexId v : order.linear_extension) order_names.push_back(p.g.names[v]);
    doc["order"] = order_names;
    doc["samples"] = rows;
    emit(io, doc);
  }
  return 0;
}

template <class Num>
json law_map(const Graph& g, const TreeOrder& order, const JointLaw<Num>& law) {
  json doc;
  for (std::uint32_t mask = 0; mask < law.prob.size(); ++mask) {
    std::string bits;
    bits.reserve(g.n);
    for (VertexId v : order.linear_extension) bits += ((mask >> v) & 1) ? '1' : '0';
    if constexpr (std::is_same_v<Num, Rational>)
      doc[bits] = format_rational(law.prob[mask]);
    else
      doc[bits] = format_double(law.prob[mask]);
  }
  return doc;
}

int cmd_exact_law(const Pipeline& p, const std::string& coupling_path, std::size_t root,
                  bool float_mode, std::size_t gate, const Io& io) {
  std::vector<Rational> coupling = load_values(coupling_path, p.g);
  TreeOrder order = make_order(p, root);
  json law;
  if (float_mode)
    law = law_map(p.g, order,
                  exact_block_factor_law<double>(p.g, order, as_numbers<double>(coupling),
                                                 gate));
  else
    law = law_map(p.g, order,
                  exact_block_factor_law<Rational>(p.g, order, coupling, gate));
  if (io.json_mode) {
    json doc = new_doc();
    json order_names = json::array();
    for (VertexId v : order.linear_extension) order_names.push_back(p.g.names[v]);
    doc["order"] = order_names;
    doc["law"] = law;
    emit(io, doc);
  } else {
    io.out << "# order:";
    for (VertexId v : order.linear_extension) io.out << " " << p.g.names[v];
    io.out << "\n";
    for (const auto& [bits, value] : law.items())
      io.out << bits << " " << value.get<std::string>() << "\n";
  }
  return 0;
}

json check_json(const CheckResult& c) {
  json doc;
  doc["pass"] = c.pass;
  doc["max_deviation"] = c.max_deviation;
  doc["detail"] = c.detail;
  return doc;
}

void print_check(const Io& io, const std::string& name, const CheckResult& c) {
  io.out << name << ": " << (c.pass ? "PASS" : "FAIL") << " (max deviation "
         << format_double(c.max_deviation) << ")";
  if (!c.pass && !c.detail.empty()) io.out << " " << c.detail;
  io.out << "\n";
}

int cmd_verify(const Pipeline& p, const std::string& prob_path,
               const std::string& coupling_path, std::size_t root, bool float_mode,
               std::size_t gate, const Io& io) {
  TreeOrder order = make_order(p, root);
  std::vector<Rational> coupling, prob;
  if (!coupling_path.empty()) {
    coupling = load_values(coupling_path, p.g);
    prob = marginals_from_coupling<Rational>(p.g, order, coupling).marginals;
  } else {
    prob = load_values(prob_path, p.g);
    auto solved = coupling_from_marginals<Rational>(p.g, order, prob);
    if (!solved.ok()) throw DomainError(coupling_failure_message(p.g, *solved.failure));
    coupling = std::move(solved.coupling);
  }

  LawReport report;
  if (float_mode) {
    auto law = exact_block_factor_law<double>(p.g, order, as_numbers<double>(coupling),
                                              gate);
    report = verify_shearer_law<double>(law, p.g, as_numbers<double>(prob), 1e-12);
  } else {
    auto law = exact_block_factor_law<Rational>(p.g, order, coupling, gate);
    report = verify_shearer_law<Rational>(law, p.g, prob, 0.0);
  }

  if (io.json_mode) {
    json doc = new_doc();
    doc["avoidance"] = check_json(report.avoidance);
    doc["marginals"] = check_json(report.marginals);
    doc["independence"] = check_json(report.independence);
    doc["one_dependence"] = check_json(report.one_dependence);
    doc["pass"] = report.all_pass();
    emit(io, doc);
  } else {
    print_check(io, "avoidance", report.avoidance);
    print_check(io, "marginals", report.marginals);
    print_check(io, "independence", report.independence);
    print_check(io, "one_dependence", report.one_dependence);
    io.out << (report.all_pass() ? "pass" : "fail") << "\n";
  }
  return report.all_pass() ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"clique trees, clique families, and 1-dependent fields on chordal graphs"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string input = "-";
  std::string format = "human";
  app.add_option("--input,-i", input, "edge-list file, '-' for stdin");
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"human", "json"}));

  auto* chordal_cmd = app.add_subcommand("check-chordal",
                                         "test chordality, print an elimination order "
                                         "or a chordless cycle");
  auto* cliques_cmd = app.add_subcommand("cliques", "list the maximal cliques");
  auto* cgraph_cmd = app.add_subcommand("clique-graph",
                                        "cliques plus intersection-labeled edges");
  auto* families_cmd = app.add_subcommand("families",
                                          "clique families with their class "
                                          "partitions and contracted multigraphs");
  auto* partition_cmd = app.add_subcommand("partition",
                                           "assign each clique-graph edge to the "
                                           "family its label generates");
  auto* count_cmd = app.add_subcommand("count-trees", "count the clique trees exactly");

  auto* enum_cmd = app.add_subcommand("enum-trees", "enumerate the clique trees");
  std::size_t limit = 0;
  enum_cmd->add_option("--limit", limit, "stop after this many trees (0 = all)");

  auto* validate_cmd = app.add_subcommand("validate-tree",
                                          "check a tree file against the graph");
  std::string tree_path, criterion = "all";
  validate_cmd->add_option("--tree", tree_path, "tree JSON file")->required();
  validate_cmd->add_option("--criterion", criterion, "which check to run")
      ->check(CLI::IsMember({"def", "cip", "rip", "maxw", "all"}));

  auto* sep_cmd = app.add_subcommand("separators", "minimal vertex separators");
  bool oracle = false;
  std::size_t sep_gate = 12;
  sep_cmd->add_flag("--oracle", oracle, "also run the brute-force oracle and compare");
  sep_cmd->add_option("--gate", sep_gate, "oracle size gate");

  auto* reduced_cmd = app.add_subcommand("reduced-graph",
                                         "clique-graph edges whose label separates "
                                         "the two cliques; the union of all clique "
                                         "trees");

  auto* shearer_cmd = app.add_subcommand("shearer",
                                         "tree orders, the p/c correspondence, and "
                                         "1-dependent block-factor fields");
  shearer_cmd->require_subcommand(1);
  std::string prob_path, coupling_path;
  std::size_t order_root = 0;
  std::uint64_t seed = 0;
  std::size_t samples = 1;
  bool float_mode = false;
  std::size_t law_gate = 16;

  auto* region_cmd = shearer_cmd->add_subcommand("region",
                                                 "classify p against the admissible "
                                                 "region");
  region_cmd->add_option("--prob", prob_path, "marginal file")->required();
  region_cmd->add_option("--order-root", order_root, "root clique for the tree order");

  auto* cfromp_cmd = shearer_cmd->add_subcommand("c-from-p",
                                                 "solve the correspondence for the "
                                                 "coupling vector");
  cfromp_cmd->add_option("--prob", prob_path, "marginal file")->required();
  cfromp_cmd->add_option("--order-root", order_root, "root clique for the tree order");

  auto* pfromc_cmd = shearer_cmd->add_subcommand("p-from-c",
                                                 "marginals induced by a coupling "
                                                 "vector");
  pfromc_cmd->add_option("--coupling", coupling_path, "coupling file")->required();
  pfromc_cmd->add_option("--order-root", order_root, "root clique for the tree order");

  auto* sample_cmd = shearer_cmd->add_subcommand("sample", "draw block-factor samples");
  sample_cmd->add_option("--coupling", coupling_path, "coupling file")->required();
  sample_cmd->add_option("--order-root", order_root, "root clique for the tree order");
  sample_cmd->add_option("--seed", seed, "generator seed");
  sample_cmd->add_option("--samples", samples, "number of samples");

  auto* law_cmd = shearer_cmd->add_subcommand("exact-law",
                                              "exact joint law of the block factor");
  law_cmd->add_option("--coupling", coupling_path, "coupling file")->required();
  law_cmd->add_option("--order-root", order_root, "root clique for the tree order");
  law_cmd->add_flag("--float", float_mode, "double precision instead of rationals");
  law_cmd->add_option("--gate", law_gate, "size gate for the 2^n enumeration");

  auto* verify_cmd = shearer_cmd->add_subcommand("verify",
                                                 "check the four defining properties "
                                                 "of the block-factor law");
  verify_cmd->add_option("--prob", prob_path, "marginal file");
  verify_cmd->add_option("--coupling", coupling_path, "coupling file");
  verify_cmd->add_option("--order-root", order_root, "root clique for the tree order");
  verify_cmd->add_flag("--float", float_mode, "double precision instead of rationals");
  verify_cmd->add_option("--gate", law_gate, "size gate for the 2^n enumeration");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  Io io{out, err, format == "json"};
  try {
    if (chordal_cmd->parsed()) return cmd_check_chordal(load_graph(input, err), io);

    Pipeline p = make_pipeline(load_graph(input, err));
    if (cliques_cmd->parsed()) return cmd_cliques(p, io);
    if (cgraph_cmd->parsed()) return cmd_clique_graph(p, io);
    if (families_cmd->parsed()) return cmd_families(p, io);
    if (partition_cmd->parsed()) return cmd_partition(p, io);
    if (count_cmd->parsed()) return cmd_count_trees(p, io);
    if (enum_cmd->parsed()) return cmd_enum_trees(p, limit, io);
    if (validate_cmd->parsed()) return cmd_validate_tree(p, tree_path, criterion, io);
    if (sep_cmd->parsed()) return cmd_separators(p, oracle, sep_gate, io);
    if (reduced_cmd->parsed()) return cmd_reduced_graph(p, io);
    if (shearer_cmd->parsed()) {
      if (region_cmd->parsed()) return cmd_region(p, prob_path, order_root, io);
      if (cfromp_cmd->parsed()) return cmd_c_from_p(p, prob_path, order_root, io);
      if (pfromc_cmd->parsed()) return cmd_p_from_c(p, coupling_path, order_root, io);
      if (sample_cmd->parsed())
        return cmd_sample(p, coupling_path, order_root, seed, samples, io);
      if (law_cmd->parsed())
        return cmd_exact_law(p, coupling_path, order_root, float_mode, law_gate, io);
      if (verify_cmd->parsed()) {
        if (prob_path.empty() == coupling_path.empty()) {
          err << "error: verify needs exactly one of --prob or --coupling\n";
          return 2;
        }
        return cmd_verify(p, prob_path, coupling_path, order_root, float_mode, law_gate,
                          io);
      }
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }
  err << "error: no subcommand\n";
  return 2;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run_cli(args, out, err);
}

}  // namespace cliquetree
