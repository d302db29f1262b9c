#pragma once

// JSON documents: graphs, signed graphs, networks and certificates. Angles
// travel as "num/den" strings. emit() output is canonical, so
// emit(parse(emit(d))) == emit(d).

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "circsign/errors.hpp"
#include "circsign/graph.hpp"
#include "circsign/nsp.hpp"
#include "circsign/relalg.hpp"
#include "circsign/sigma.hpp"
#include "circsign/signed_graph.hpp"

namespace circsign {

using Document = std::variant<Graph, SignedGraph, Network, Certificate>;

namespace io {

using nlohmann::json;

namespace detail {

inline const json& field(const json& obj, const char* name) {
  const auto it = obj.find(name);
  if (it == obj.end()) throw ParseError(std::string("missing field \"") + name + "\"");
  return *it;
}

inline int int_field(const json& j, const std::string& where) {
  if (!j.is_number_integer()) throw ParseError(where + ": expected an integer");
  const auto v = j.get<std::int64_t>();
  if (v < 0 || v > 1'000'000) throw ValidationError(where + ": out of range");
  return static_cast<int>(v);
}

inline const json& array_field(const json& obj, const char* name) {
  const json& a = field(obj, name);
  if (!a.is_array()) throw ParseError(std::string("field \"") + name + "\": expected an array");
  return a;
}

/// Runs a module constructor, reporting its failure as a ValidationError.
template <class F>
auto validated(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ValidationError&) {
    throw;
  } catch (const Error& e) {
    throw ValidationError(e.what());
  }
}

inline std::vector<Edge> read_pairs(const json& edges, int width, std::vector<int>* labels) {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const json& e = edges[i];
    const std::string where = "edges[" + std::to_string(i) + "]";
    if (!e.is_array() || static_cast<int>(e.size()) != width) {
      throw ParseError(where + ": expected " + std::to_string(width) + " integers");
    }
    const int u = int_field(e[0], where);
    const int v = int_field(e[1], where);
    if (u == v) throw ValidationError(where + ": loop at " + std::to_string(u));
    out.emplace_back(u, v);
    if (labels) labels->push_back(int_field(e[2], where));
  }
  return out;
}

inline Graph read_graph(const json& j) {
  const int n = int_field(field(j, "n"), "n");
  const auto edges = read_pairs(array_field(j, "edges"), 2, nullptr);
  return validated([&] { return Graph(n, edges); });
}

inline SignedGraph read_signed(const json& j) {
  const int n = int_field(field(j, "n"), "n");
  std::vector<int> raw;
  const auto edges = read_pairs(array_field(j, "edges"), 3, &raw);
  return validated([&] {
    Graph g(n, edges);
    if (g.size() != edges.size()) throw ValidationError("repeated edge");
    Labelling labels(g.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (raw[i] > 1) throw ValidationError("labels must be 0 or 1");
      labels[static_cast<std::size_t>(g.edge_index(edges[i].u, edges[i].v))] =
          static_cast<std::uint8_t>(raw[i]);
    }
    return SignedGraph(std::move(g), std::move(labels));
  });
}

inline Network read_network(const json& j) {
  const RelationAlgebra& ra = ra_56_65();
  const int n = int_field(field(j, "vars"), "vars");
  Network net(ra, n);
  if (!j.contains("constraints")) return net;
  const json& cs = array_field(j, "constraints");
  for (std::size_t i = 0; i < cs.size(); ++i) {
    const json& c = cs[i];
    const std::string where = "constraints[" + std::to_string(i) + "]";
    if (!c.is_object()) throw ParseError(where + ": expected an object");
    const int x = int_field(field(c, "x"), where + ".x");
    const int y = int_field(field(c, "y"), where + ".y");
    if (x >= n || y >= n) throw ValidationError(where + ": variable out of range");
    const json& atoms = field(c, "atoms");
    if (!atoms.is_array()) throw ParseError(where + ".atoms: expected an array");
    AtomSet set;
    for (const json& a : atoms) {
      if (!a.is_string()) throw ParseError(where + ".atoms: expected atom names");
      const auto atom = ra.atom_named(a.get<std::string>());
      if (!atom) throw ValidationError(where + ": unknown atom \"" + a.get<std::string>() + "\"");
      set |= AtomSet::of(*atom);
    }
    net.restrict(ra, x, y, set);
  }
  return net;
}

inline CirclePoint read_point(const json& j, const std::string& where) {
  if (!j.is_object()) throw ParseError(where + ": expected an object");
  const json& a = field(j, "angle");
  if (!a.is_string()) throw ParseError(where + ".angle: expected a \"num/den\" string");
  CirclePoint p(RationalAngle::parse(a.get<std::string>()));
  const int parity = int_field(field(j, "parity"), where + ".parity");
  if (parity != p.parity) throw ValidationError(where + ": parity does not match the angle");
  return p;
}

inline Certificate read_certificate(const json& j) {
  Certificate cert;
  const json& pts = array_field(j, "assignment");
  for (std::size_t i = 0; i < pts.size(); ++i) {
    cert.assignment.push_back(read_point(pts[i], "assignment[" + std::to_string(i) + "]"));
  }
  const json& blocks = array_field(j, "merged");
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const std::string where = "merged[" + std::to_string(b) + "]";
    if (!blocks[b].is_array()) throw ParseError(where + ": expected an array");
    std::vector<int> block;
    for (const json& v : blocks[b]) block.push_back(int_field(v, where));
    cert.merged.push_back(std::move(block));
  }
  return cert;
}

}  // namespace detail

inline json point_json(const CirclePoint& p) {
  return {{"angle", p.angle.str()}, {"parity", p.parity}};
}

inline json angles_json(const std::vector<RationalAngle>& angles) {
  json out = json::array();
  for (const auto& a : angles) out.push_back(a.str());
  return out;
}

inline json to_json(const Graph& g) {
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"kind", "graph"}, {"n", g.order()}, {"edges", edges}};
}

inline json to_json(const SignedGraph& sg) {
  json edges = json::array();
  const auto& es = sg.graph.edges();
  for (std::size_t i = 0; i < es.size(); ++i) edges.push_back({es[i].u, es[i].v, sg.labels[i]});
  return {{"kind", "signed-graph"}, {"n", sg.graph.order()}, {"edges", edges}};
}

/// Lists every pair x <= y whose constraint is not the full atom set.
inline json to_json(const Network& net) {
  const RelationAlgebra& ra = ra_56_65();
  json cs = json::array();
  for (int x = 0; x < net.vars(); ++x) {
    for (int y = x; y < net.vars(); ++y) {
      const AtomSet a = net.at(x, y);
      if (a == ra.top()) continue;
      json names = json::array();
      for (Atom t = 0; t < ra.atom_count(); ++t)
        if (a.contains(t)) names.push_back(ra.atom_names()[t]);
      cs.push_back({{"x", x}, {"y", y}, {"atoms", names}});
    }
  }
  return {{"kind", "network"}, {"vars", net.vars()}, {"constraints", cs}};
}

inline json to_json(const Certificate& cert) {
  json pts = json::array();
  for (const auto& p : cert.assignment) pts.push_back(point_json(p));
  return {{"kind", "certificate"}, {"assignment", pts}, {"merged", cert.merged}};
}

inline Document from_json(const json& j) {
  if (!j.is_object()) throw ParseError("document must be a JSON object");
  std::string kind;
  if (const auto it = j.find("kind"); it != j.end()) {
    if (!it->is_string()) throw ParseError("field \"kind\": expected a string");
    kind = it->get<std::string>();
  } else if (j.contains("vars")) {
    kind = "network";
  } else {
    throw ParseError("missing field \"kind\"");
  }
  if (kind == "graph") return detail::read_graph(j);
  if (kind == "signed-graph") return detail::read_signed(j);
  if (kind == "network") return detail::read_network(j);
  if (kind == "certificate") return detail::read_certificate(j);
  throw ParseError("unknown document kind \"" + kind + "\"");
}

/// Parses one document. Syntax errors carry the byte offset reported by the
/// JSON reader.
inline Document parse(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what());
  }
  return from_json(j);
}

template <class T>
T parse_as(std::string_view text) {
  Document d = parse(text);
  if (auto* v = std::get_if<T>(&d)) return std::move(*v);
  throw ValidationError("document has the wrong kind");
}

inline std::string emit(const Document& d) {
  return std::visit([](const auto& v) { return to_json(v).dump(); }, d);
}

}  // namespace io
}  // namespace circsign
