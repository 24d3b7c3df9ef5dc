#include "lombardi/document.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"
#include "lombardi/error.hpp"

namespace lombardi {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

json parse_text(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const std::size_t upto = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(upto), '\n');
    const auto last_break = text.substr(0, upto).rfind('\n');
    const auto column = last_break == std::string_view::npos ? upto + 1 : upto - last_break;
    fail("line " + std::to_string(line) + ", column " + std::to_string(column) + ": malformed JSON");
  }
}

const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) fail(where + ": expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) fail(where + ": missing field '" + key + "'");
  return *it;
}

const json& array_field(const json& obj, const char* key, const std::string& where) {
  const json& a = field(obj, key, where);
  if (!a.is_array()) fail(where + ": '" + key + "' must be an array");
  return a;
}

double number(const json& j, const std::string& where) {
  if (!j.is_number()) fail(where + ": expected a number");
  return j.get<double>();
}

int integer(const json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where + ": expected an integer");
  return j.get<int>();
}

std::string id_of(const json& j, const std::string& where) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  fail(where + ": vertex ids must be strings or integers");
}

class NameIndex {
 public:
  explicit NameIndex(const std::vector<std::string>& names) {
    for (int i = 0; i < static_cast<int>(names.size()); ++i) {
      if (!index_.emplace(names[i], i).second) fail("duplicate vertex id '" + names[i] + "'");
    }
  }

  VertexId at(const json& j, const std::string& where) const {
    const std::string id = id_of(j, where);
    const auto it = index_.find(id);
    if (it == index_.end()) fail(where + ": unknown vertex '" + id + "'");
    return it->second;
  }

 private:
  std::map<std::string, VertexId> index_;
};

std::pair<const json&, const json&> pair_of(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) fail(where + ": expected a pair");
  return {j[0], j[1]};
}

template <class F>
auto guarded(F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    fail(e.what());
  }
}

OrbitRef parse_ref(const json& j, const std::string& where) {
  if (!j.is_string()) fail(where + ": orbit references look like \"3+\"");
  const std::string s = j.get<std::string>();
  if (s.size() < 2 || (s.back() != '+' && s.back() != '-') ||
      !std::all_of(s.begin(), s.end() - 1, [](char c) { return c >= '0' && c <= '9'; })) {
    fail(where + ": bad orbit reference '" + s + "'");
  }
  return {std::stoi(s.substr(0, s.size() - 1)), s.back() == '+'};
}

}  // namespace

GraphDocument parse_graph_document(std::string_view text) {
  const json doc = parse_text(text);
  return guarded([&] {
    std::vector<std::string> names;
    for (const json& v : array_field(doc, "vertices", "graph")) names.push_back(id_of(v, "vertices"));
    const NameIndex index(names);
    std::vector<Edge> edges;
    for (const json& e : array_field(doc, "edges", "graph")) {
      const auto [a, b] = pair_of(e, "edges");
      edges.push_back({index.at(a, "edges"), index.at(b, "edges")});
    }
    GraphDocument out{RotationGraph(static_cast<int>(names.size()), std::move(edges), names), {}, {}};
    if (const auto it = doc.find("rotation"); it != doc.end()) {
      if (!it->is_object()) fail("rotation: expected an object keyed by vertex id");
      for (const auto& [key, list] : it->items()) {
        const VertexId v = index.at(json(key), "rotation");
        if (!list.is_array()) fail("rotation of '" + key + "': expected an array");
        std::vector<VertexId> ccw;
        for (const json& w : list) ccw.push_back(index.at(w, "rotation of '" + key + "'"));
        out.graph.set_rotation(v, std::move(ccw));
      }
    }
    if (const auto it = doc.find("tree_edges"); it != doc.end()) {
      if (!it->is_array()) fail("tree_edges: expected an array");
      std::vector<EdgeId> tree;
      for (const json& e : *it) {
        const auto [a, b] = pair_of(e, "tree_edges");
        const auto id = out.graph.edge_between(index.at(a, "tree_edges"), index.at(b, "tree_edges"));
        if (!id) fail("tree_edges: " + id_of(a, "") + "-" + id_of(b, "") + " is not an edge");
        tree.push_back(*id);
      }
      out.tree_edges = std::move(tree);
    }
    if (const auto it = doc.find("root"); it != doc.end()) out.root = index.at(*it, "root");
    return out;
  });
}

RotationGraph load_graph(std::string_view text) { return parse_graph_document(text).graph; }

std::string graph_to_json(const RotationGraph& g) {
  json doc;
  doc["vertices"] = g.names();
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({g.name(e.u), g.name(e.v)});
  doc["edges"] = std::move(edges);
  if (g.rotation_specified()) {
    json rot = json::object();
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      json ccw = json::array();
      for (VertexId w : g.rotation(v)) ccw.push_back(g.name(w));
      rot[g.name(v)] = std::move(ccw);
    }
    doc["rotation"] = std::move(rot);
  }
  return doc.dump(2) + "\n";
}

SpiroSpec parse_spiro_spec(std::string_view text) {
  const json doc = parse_text(text);
  SpiroSpec spec = guarded([&] {
    SpiroSpec s;
    s.symmetry = integer(field(doc, "symmetry", "spec"), "symmetry");
    for (const json& c : array_field(doc, "circles", "spec")) {
      SpiroCircle circle;
      if (const auto it = c.find("phase"); it != c.end()) {
        const double phase = number(*it, "phase");
        if (phase != 0.0 && phase != 0.5) fail("phase must be 0 or 0.5 (a half step)");
        circle.half_step = phase == 0.5;
      }
      if (const auto it = c.find("radius"); it != c.end()) circle.radius = number(*it, "radius");
      s.circles.push_back(circle);
    }
    for (const json& o : array_field(doc, "orbits", "spec")) {
      const auto [fc, fo] = pair_of(field(o, "from", "orbit"), "orbit from");
      const auto [tc, to] = pair_of(field(o, "to", "orbit"), "orbit to");
      s.orbits.push_back({{integer(fc, "orbit"), integer(fo, "orbit")},
                          {integer(tc, "orbit"), integer(to, "orbit")}});
    }
    s.order.resize(s.circles.size());
    const json& order = field(doc, "order", "spec");
    auto read_list = [&](int c, const json& list) {
      if (c < 0 || c >= static_cast<int>(s.order.size())) fail("order: no circle " + std::to_string(c));
      if (!list.is_array()) fail("order: expected arrays of orbit references");
      for (const json& r : list) s.order[c].push_back(parse_ref(r, "order"));
    };
    if (order.is_array()) {
      for (int c = 0; c < static_cast<int>(order.size()); ++c) read_list(c, order[c]);
    } else if (order.is_object()) {
      for (const auto& [key, list] : order.items()) {
        if (key.empty() || !std::all_of(key.begin(), key.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
          fail("order: keys are circle indices");
        }
        read_list(std::stoi(key), list);
      }
    } else {
      fail("order: expected an array or an object");
    }
    return s;
  });
  expand_spiro(spec);
  return spec;
}

std::string drawing_to_json(const Drawing& d) {
  json doc;
  json vertices = json::array();
  for (VertexId v = 0; v < d.vertex_count(); ++v) {
    json jv;
    jv["id"] = d.names[v];
    jv["x"] = d.positions[v].x;
    jv["y"] = d.positions[v].y;
    jv["base"] = d.frames[v].base.angle();
    jv["degree"] = d.frames[v].degree;
    vertices.push_back(std::move(jv));
  }
  json edges = json::array();
  for (const DrawnEdge& e : d.edges) {
    json je;
    je["u"] = d.names[e.u];
    je["v"] = d.names[e.v];
    je["bulge"] = e.arc.bulge();
    if (e.slot_u >= 0 || e.slot_v >= 0) je["slots"] = {e.slot_u, e.slot_v};
    if (e.factor >= 0) je["factor"] = e.factor;
    edges.push_back(std::move(je));
  }
  doc["vertices"] = std::move(vertices);
  doc["edges"] = std::move(edges);
  if (d.host) doc["host"] = {{"x", d.host->center.x}, {"y", d.host->center.y}, {"r", d.host->radius}};
  return doc.dump(2) + "\n";
}

Drawing parse_drawing(std::string_view text) {
  const json doc = parse_text(text);
  return guarded([&] {
    Drawing d;
    for (const json& v : array_field(doc, "vertices", "drawing")) {
      d.names.push_back(id_of(field(v, "id", "vertex"), "vertex"));
      d.positions.push_back({number(field(v, "x", "vertex"), "x"), number(field(v, "y", "vertex"), "y")});
      VertexFrame f;
      if (const auto it = v.find("base"); it != v.end()) f.base = Direction(number(*it, "base"));
      if (const auto it = v.find("degree"); it != v.end()) f.degree = integer(*it, "degree");
      d.frames.push_back(f);
    }
    const NameIndex index(d.names);
    for (const json& e : array_field(doc, "edges", "drawing")) {
      DrawnEdge de;
      de.u = index.at(field(e, "u", "edge"), "edge");
      de.v = index.at(field(e, "v", "edge"), "edge");
      if (de.u == de.v) fail("edge: loop at '" + d.names[de.u] + "'");
      de.arc = Arc(d.positions[de.u], d.positions[de.v], number(field(e, "bulge", "edge"), "bulge"));
      if (const auto it = e.find("slots"); it != e.end()) {
        const auto [a, b] = pair_of(*it, "slots");
        de.slot_u = integer(a, "slots");
        de.slot_v = integer(b, "slots");
      }
      if (const auto it = e.find("factor"); it != e.end()) de.factor = integer(*it, "factor");
      d.edges.push_back(de);
    }
    if (const auto it = doc.find("host"); it != doc.end()) {
      d.host = Circle({number(field(*it, "x", "host"), "x"), number(field(*it, "y", "host"), "y")},
                      number(field(*it, "r", "host"), "r"));
    }
    return d;
  });
}

std::string report_to_json(const VerificationReport& r, const Drawing& d, double angle_tol) {
  json doc;
  doc["clean"] = r.clean(angle_tol);
  doc["angle_tolerance"] = angle_tol;
  doc["max_deviation"] = r.max_deviation;
  doc["worst_vertex"] = r.worst_vertex >= 0 ? json(d.names[r.worst_vertex]) : json(nullptr);
  doc["deviation"] = r.deviation;
  doc["endpoint_mismatch"] = r.endpoint_mismatch;
  json inc = json::array();
  for (const IncidenceViolation& v : r.incidence) {
    const DrawnEdge& e = d.edges[v.edge];
    inc.push_back({{"edge", {d.names[e.u], d.names[e.v]}}, {"vertex", d.names[v.vertex]}, {"distance", v.distance}});
  }
  doc["incidence"] = std::move(inc);
  doc["crossings"] = r.crossing_count;
  doc["grazing"] = r.grazing_count;
  doc["planar"] = r.planar;
  if (r.cocircularity) doc["cocircularity"] = *r.cocircularity;
  return doc.dump(2) + "\n";
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace lombardi
