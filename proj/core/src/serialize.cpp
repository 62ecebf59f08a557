#include "zz/serialize.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <set>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "zz/error.hpp"

namespace zz {

using Json = nlohmann::ordered_json;

namespace {

// ---------------------------------------------------------------- text utils

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

bool is_comment_or_blank(std::string_view line) {
  for (char c : line) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '#';
  }
  return true;
}

bool canonical_integer(std::string_view t) {
  if (t == "0") return true;
  std::size_t i = 0;
  if (!t.empty() && t[0] == '-') i = 1;
  if (i >= t.size() || t[i] < '1' || t[i] > '9') return false;
  return std::all_of(t.begin() + static_cast<std::ptrdiff_t>(i), t.end(),
                     [](char c) { return c >= '0' && c <= '9'; });
}

VertexId parse_token(std::string_view t, std::size_t line_no) {
  if (!canonical_integer(t)) return VertexId(std::string(t));
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (ec != std::errc() || ptr != t.data() + t.size())
    throw FormatError((line_no ? "line " + std::to_string(line_no) + ": " : std::string()) +
                      "integer out of range: " + std::string(t));
  return VertexId(value);
}

std::string edge_list_token(const VertexId& id) {
  if (id.is_integer()) return std::to_string(id.as_integer());
  if (id.is_pair())
    throw FormatError("edge list cannot hold pair id " + id.to_string());
  const auto& s = id.as_string();
  if (s.empty()) throw FormatError("edge list cannot hold an empty string id");
  if (s[0] == '#') throw FormatError("edge list cannot hold id starting with '#': " + s);
  for (char c : s)
    if (std::isspace(static_cast<unsigned char>(c)))
      throw FormatError("edge list cannot hold id with whitespace: \"" + s + "\"");
  if (canonical_integer(s))
    throw FormatError("edge list cannot hold string id \"" + s +
                      "\" that reads as an integer");
  return s;
}

// ---------------------------------------------------------------- JSON utils

// Objects are expanded one key per line; arrays one element per line, each
// element compact.
void pretty(const Json& j, std::string& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
  const std::string close(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    if (j.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    bool first = true;
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (!first) out += ",\n";
      first = false;
      out += pad;
      out += Json(it.key()).dump();
      out += ": ";
      pretty(it.value(), out, indent + 2);
    }
    out += "\n" + close + "}";
  } else if (j.is_array()) {
    if (j.empty()) {
      out += "[]";
      return;
    }
    out += "[\n";
    bool first = true;
    for (const auto& e : j) {
      if (!first) out += ",\n";
      first = false;
      out += pad + e.dump();
    }
    out += "\n" + close + "]";
  } else {
    out += j.dump();
  }
}

std::string document(const Json& j) {
  std::string out;
  pretty(j, out, 0);
  out += "\n";
  return out;
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::exception& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
}

Json id_to_json(const VertexId& id) {
  if (id.is_integer()) return id.as_integer();
  if (id.is_string()) return id.as_string();
  return Json::array({id_to_json(id.first()), id_to_json(id.second())});
}

VertexId id_from_json(const Json& j) {
  if (j.is_number_integer()) return VertexId(j.get<std::int64_t>());
  if (j.is_number_unsigned()) {
    auto u = j.get<std::uint64_t>();
    if (u > static_cast<std::uint64_t>(INT64_MAX))
      throw FormatError("vertex id out of range: " + j.dump());
    return VertexId(static_cast<std::int64_t>(u));
  }
  if (j.is_string()) return VertexId(j.get<std::string>());
  if (j.is_array() && j.size() == 2)
    return VertexId::pair(id_from_json(j[0]), id_from_json(j[1]));
  throw FormatError("not a vertex id: " + j.dump());
}

const Json& field(const Json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) throw FormatError(std::string("missing field \"") + key + "\"");
  return *it;
}

std::size_t index_in(const Graph& g, const Json& j, const char* what) {
  auto id = id_from_json(j);
  auto v = g.find(id);
  if (!v) throw FormatError(std::string(what) + " " + id.to_string() + " is not a vertex");
  return *v;
}

Json graph_to_json(const Graph& g) {
  Json j = Json::object();
  Json vs = Json::array();
  for (const auto& id : g.vertices()) vs.push_back(id_to_json(id));
  Json es = Json::array();
  for (const auto& e : g.edges())
    es.push_back(Json::array({id_to_json(g.id(e.u)), id_to_json(g.id(e.v))}));
  j["vertices"] = std::move(vs);
  j["edges"] = std::move(es);
  return j;
}

Graph graph_from_json(const Json& j) {
  if (!j.is_object()) throw FormatError("graph document must be an object");
  const auto& vs = field(j, "vertices");
  const auto& es = field(j, "edges");
  if (!vs.is_array() || !es.is_array())
    throw FormatError("\"vertices\" and \"edges\" must be arrays");
  std::vector<VertexId> ids;
  ids.reserve(vs.size());
  for (const auto& v : vs) ids.push_back(id_from_json(v));
  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(es.size());
  for (const auto& e : es) {
    if (!e.is_array() || e.size() != 2)
      throw FormatError("edge must be a two-element array: " + e.dump());
    edges.emplace_back(id_from_json(e[0]), id_from_json(e[1]));
  }
  return Graph::from_ids(std::move(ids), edges);
}

Graph graph_ref(const Json& j, const GraphResolver& resolve) {
  if (j.is_string()) {
    if (!resolve) throw FormatError("graph path reference without a resolver");
    return resolve(j.get<std::string>());
  }
  return graph_from_json(j);
}

// Embedded or referenced graph, reconciled with one supplied by the caller.
Graph pick_graph(const Json& doc, const char* key, const std::optional<Graph>& given,
                 const GraphResolver& resolve) {
  auto it = doc.find(key);
  if (it == doc.end() || it->is_null()) {
    if (!given) throw FormatError(std::string("missing field \"") + key + "\"");
    return *given;
  }
  auto g = graph_ref(*it, resolve);
  if (given && !(*given == g))
    throw LabelingError(std::string("\"") + key + "\" differs from the supplied graph");
  return g;
}

Json labeling_map_json(const HLabeling& a) {
  const auto& g = a.base();
  Json map = Json::array();
  for (std::size_t d = 0; d < g.dart_count(); ++d) {
    auto dart = g.dart(d);
    Json entry = Json::object();
    entry["vertex"] = id_to_json(g.id(dart.vertex));
    entry["edge"] = Json::array({id_to_json(g.id(dart.vertex)), id_to_json(g.id(dart.other))});
    entry["label"] = id_to_json(a.label_id(d));
    map.push_back(std::move(entry));
  }
  return map;
}

HLabeling labeling_from_map(const Json& map, const Graph& base, const Graph& labels) {
  if (!map.is_array()) throw FormatError("labeling \"map\" must be an array");
  const std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> table(base.dart_count(), none);
  for (const auto& entry : map) {
    if (!entry.is_object()) throw FormatError("labeling entry must be an object");
    auto v = index_in(base, field(entry, "vertex"), "labeling vertex");
    const auto& edge = field(entry, "edge");
    if (!edge.is_array() || edge.size() != 2)
      throw FormatError("labeling edge must be a two-element array");
    auto a = index_in(base, edge[0], "labeling edge endpoint");
    auto b = index_in(base, edge[1], "labeling edge endpoint");
    if (v != a && v != b)
      throw LabelingError("labeling entry vertex " + base.id(v).to_string() +
                          " is not an endpoint of its edge");
    auto other = v == a ? b : a;
    auto d = base.dart_index(v, other);
    if (!d)
      throw LabelingError("labeling entry {" + base.id(a).to_string() + "," +
                          base.id(b).to_string() + "} is not an edge");
    if (table[*d] != none)
      throw LabelingError("dart (" + base.id(v).to_string() + ", {" +
                          base.id(a).to_string() + "," + base.id(b).to_string() +
                          "}) labeled twice");
    table[*d] = index_in(labels, field(entry, "label"), "label");
  }
  for (std::size_t d = 0; d < table.size(); ++d)
    if (table[d] == none) {
      auto dart = base.dart(d);
      throw LabelingError("dart (" + base.id(dart.vertex).to_string() + ", {" +
                          base.id(dart.vertex).to_string() + "," +
                          base.id(dart.other).to_string() + "}) has no label");
    }
  return HLabeling(base, labels, std::move(table));
}

Json edge_ids(const Graph& g, const Edge& e) {
  return Json::array({id_to_json(g.id(e.u)), id_to_json(g.id(e.v))});
}

Json optional_real(const std::optional<double>& x) {
  return x ? Json(round_real(*x)) : Json(nullptr);
}

Json rational_json(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

VertexId parse_atom(std::string_view token) { return parse_token(token, 0); }

// ---------------------------------------------------------------- reals

double round_real(double x) {
  if (!std::isfinite(x)) return x;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;
}

std::string format_real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", round_real(x));
  return buf;
}

// ---------------------------------------------------------------- graphs

const char* to_string(GraphFormat f) {
  switch (f) {
    case GraphFormat::json:
      return "json";
    case GraphFormat::edge_list:
      return "edgelist";
    default:
      return "dot";
  }
}

GraphFormat parse_graph_format(std::string_view name) {
  if (name == "json") return GraphFormat::json;
  if (name == "edgelist" || name == "edge-list") return GraphFormat::edge_list;
  if (name == "dot") return GraphFormat::dot;
  throw FormatError("unknown graph format: " + std::string(name));
}

GraphFormat detect_graph_format(std::string_view text) {
  auto i = text.find_first_not_of(" \t\r\n");
  if (i == std::string_view::npos) return GraphFormat::edge_list;
  auto rest = text.substr(i);
  if (rest[0] == '{') return GraphFormat::json;
  if (rest.starts_with("graph") || rest.starts_with("strict")) return GraphFormat::dot;
  return GraphFormat::edge_list;
}

std::string write_graph_json(const Graph& g) { return document(graph_to_json(g)); }

Graph read_graph_json(std::string_view text) { return graph_from_json(parse_json(text)); }

std::string write_edge_list(const Graph& g) {
  if (has_isolated_vertices(g))
    throw FormatError("edge list cannot hold isolated vertices");
  std::string out;
  for (const auto& e : g.edges()) {
    out += edge_list_token(g.id(e.u));
    out += ' ';
    out += edge_list_token(g.id(e.v));
    out += '\n';
  }
  return out;
}

Graph read_edge_list(std::string_view text) {
  std::vector<VertexId> ids;
  std::set<VertexId> seen;
  std::vector<std::pair<VertexId, VertexId>> edges;
  auto lines = split_lines(text);
  for (std::size_t k = 0; k < lines.size(); ++k) {
    if (is_comment_or_blank(lines[k])) continue;
    auto t = tokens(lines[k]);
    if (t.size() != 2)
      throw FormatError("line " + std::to_string(k + 1) + ": expected two tokens, got " +
                        std::to_string(t.size()));
    auto a = parse_token(t[0], k + 1);
    auto b = parse_token(t[1], k + 1);
    for (const auto& id : {a, b})
      if (seen.insert(id).second) ids.push_back(id);
    edges.emplace_back(std::move(a), std::move(b));
  }
  return Graph::from_ids(std::move(ids), edges);
}

std::string write_dot(const Graph& g) {
  std::string out = "graph G {\n";
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    out += "  n" + std::to_string(v) + " [label=\"" + dot_escape(g.id(v).to_string()) +
           "\", id=\"" + dot_escape(id_to_json(g.id(v)).dump()) + "\"];\n";
  }
  for (const auto& e : g.edges())
    out += "  n" + std::to_string(e.u) + " -- n" + std::to_string(e.v) + ";\n";
  out += "}\n";
  return out;
}

namespace {

std::size_t dot_node(std::string_view t, std::size_t line_no) {
  if (t.size() < 2 || t[0] != 'n')
    throw FormatError("DOT line " + std::to_string(line_no) + ": bad node name");
  std::size_t k = 0;
  auto [ptr, ec] = std::from_chars(t.data() + 1, t.data() + t.size(), k);
  if (ec != std::errc() || ptr != t.data() + t.size())
    throw FormatError("DOT line " + std::to_string(line_no) + ": bad node name");
  return k;
}

// Value of attribute `key="..."` with DOT escapes undone.
std::optional<std::string> dot_attribute(std::string_view line, std::string_view key) {
  std::string pattern = std::string(key) + "=\"";
  std::size_t pos = 0;
  while ((pos = line.find(pattern, pos)) != std::string_view::npos) {
    if (pos == 0 || line[pos - 1] == '[' || line[pos - 1] == ' ' || line[pos - 1] == ',') break;
    ++pos;
  }
  if (pos == std::string_view::npos) return std::nullopt;
  std::string value;
  for (std::size_t i = pos + pattern.size(); i < line.size(); ++i) {
    char c = line[i];
    if (c == '\\' && i + 1 < line.size()) {
      value += line[++i];
    } else if (c == '"') {
      return value;
    } else {
      value += c;
    }
  }
  return std::nullopt;
}

}  // namespace

Graph read_dot(std::string_view text) {
  auto lines = split_lines(text);
  std::vector<std::optional<VertexId>> nodes;
  std::vector<Edge> edges;
  bool opened = false, closed = false;
  for (std::size_t k = 0; k < lines.size(); ++k) {
    auto t = tokens(lines[k]);
    if (t.empty()) continue;
    const auto line_no = k + 1;
    if (closed) throw FormatError("DOT line " + std::to_string(line_no) + ": text after '}'");
    if (!opened) {
      if (t[0] != "graph" || t.back() != "{")
        throw FormatError("DOT must start with an undirected graph block");
      opened = true;
      continue;
    }
    if (t.size() == 1 && t[0] == "}") {
      closed = true;
      continue;
    }
    if (t.size() == 3 && t[1] == "--" && t[2].ends_with(';')) {
      auto a = dot_node(t[0], line_no);
      auto b = dot_node(t[2].substr(0, t[2].size() - 1), line_no);
      edges.push_back({a, b});
      continue;
    }
    auto id = dot_attribute(lines[k], "id");
    if (!id) throw FormatError("DOT line " + std::to_string(line_no) + ": unsupported statement");
    auto k_node = dot_node(t[0], line_no);
    if (k_node >= nodes.size()) nodes.resize(k_node + 1);
    if (nodes[k_node]) throw FormatError("DOT node n" + std::to_string(k_node) + " declared twice");
    nodes[k_node] = id_from_json(parse_json(*id));
  }
  if (!closed) throw FormatError("DOT graph block is not closed");
  std::vector<VertexId> ids;
  ids.reserve(nodes.size());
  for (std::size_t v = 0; v < nodes.size(); ++v) {
    if (!nodes[v]) throw FormatError("DOT node n" + std::to_string(v) + " is not declared");
    ids.push_back(*nodes[v]);
  }
  for (const auto& e : edges)
    if (e.u >= ids.size() || e.v >= ids.size())
      throw FormatError("DOT edge refers to an undeclared node");
  return Graph(std::move(ids), std::move(edges));
}

std::string write_graph(const Graph& g, GraphFormat f) {
  switch (f) {
    case GraphFormat::json:
      return write_graph_json(g);
    case GraphFormat::edge_list:
      return write_edge_list(g);
    default:
      return write_dot(g);
  }
}

Graph read_graph(std::string_view text) {
  switch (detect_graph_format(text)) {
    case GraphFormat::json:
      return read_graph_json(text);
    case GraphFormat::edge_list:
      return read_edge_list(text);
    default:
      return read_dot(text);
  }
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot read " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return read_graph(text);
}

// ---------------------------------------------------------------- labelings

std::string write_labeling_json(const HLabeling& a) {
  Json j = Json::object();
  j["base"] = graph_to_json(a.base());
  j["labels"] = graph_to_json(a.labels());
  j["map"] = labeling_map_json(a);
  return document(j);
}

HLabeling read_labeling_json(std::string_view text, const std::optional<Graph>& base,
                             const std::optional<Graph>& labels,
                             const GraphResolver& resolve) {
  auto doc = parse_json(text);
  if (!doc.is_object()) throw FormatError("labeling document must be an object");
  auto g = pick_graph(doc, "base", base, resolve);
  auto h = pick_graph(doc, "labels", labels, resolve);
  return labeling_from_map(field(doc, "map"), g, h);
}

// ---------------------------------------------------------------- products

std::string write_product_json(const ZigZagGraph& z) {
  Json j = graph_to_json(z.product());
  j["base"] = graph_to_json(z.base());
  j["labels"] = graph_to_json(z.labels());
  Json lab = Json::object();
  lab["map"] = labeling_map_json(z.labeling());
  j["labeling"] = std::move(lab);
  Json tags = Json::array();
  const auto& p = z.product();
  for (std::size_t k = 0; k < p.edge_count(); ++k) {
    const auto& t = z.edge_tags()[k];
    Json tag = Json::object();
    tag["edge"] = edge_ids(z.base(), z.base().edges()[t.base_edge]);
    tag["eps1"] = edge_ids(z.labels(), t.first);
    tag["eps2"] = edge_ids(z.labels(), t.second);
    tags.push_back(std::move(tag));
  }
  j["edge_tags"] = std::move(tags);
  return document(j);
}

ZigZagGraph read_product_json(std::string_view text, const GraphResolver& resolve) {
  auto doc = parse_json(text);
  if (!doc.is_object()) throw FormatError("product document must be an object");
  auto g = graph_ref(field(doc, "base"), resolve);
  auto h = graph_ref(field(doc, "labels"), resolve);
  const auto& lab = field(doc, "labeling");
  const Json& map = lab.is_object() ? field(lab, "map") : lab;
  ZigZagGraph z(labeling_from_map(map, g, h));

  if (!(graph_from_json(doc) == z.product()))
    throw FormatError("product vertices or edges disagree with base, labels and labeling");
  const auto& tags = field(doc, "edge_tags");
  if (!tags.is_array() || tags.size() != z.product().edge_count())
    throw FormatError("product needs one edge tag per edge");
  for (std::size_t k = 0; k < tags.size(); ++k) {
    const auto& t = z.edge_tags()[k];
    if (tags[k] != Json{{"edge", edge_ids(g, g.edges()[t.base_edge])},
                        {"eps1", edge_ids(h, t.first)},
                        {"eps2", edge_ids(h, t.second)}})
      throw FormatError("edge tag " + std::to_string(k) + " disagrees with the product");
  }
  return z;
}

// ---------------------------------------------------------------- vertex maps

std::string write_vertex_map_json(const VertexMap& m) {
  Json j = Json::object();
  j["from"] = graph_to_json(m.domain());
  j["to"] = graph_to_json(m.codomain());
  Json map = Json::array();
  for (std::size_t v = 0; v < m.domain().vertex_count(); ++v)
    map.push_back(Json::array({id_to_json(m.domain().id(v)), id_to_json(m.image_id(v))}));
  j["map"] = std::move(map);
  return document(j);
}

VertexMap read_vertex_map(std::string_view text, const std::optional<Graph>& from,
                          const std::optional<Graph>& to, const GraphResolver& resolve) {
  std::vector<std::pair<VertexId, VertexId>> pairs;
  if (detect_graph_format(text) == GraphFormat::json) {
    auto doc = parse_json(text);
    auto domain = pick_graph(doc, "from", from, resolve);
    auto codomain = pick_graph(doc, "to", to, resolve);
    const auto& map = field(doc, "map");
    if (!map.is_array()) throw FormatError("vertex map \"map\" must be an array");
    for (const auto& e : map) {
      if (!e.is_array() || e.size() != 2)
        throw FormatError("vertex map entry must be a two-element array");
      pairs.emplace_back(id_from_json(e[0]), id_from_json(e[1]));
    }
    return VertexMap::from_pairs(std::move(domain), std::move(codomain), pairs);
  }
  if (!from || !to) throw FormatError("text vertex map needs both graphs supplied");
  auto lines = split_lines(text);
  for (std::size_t k = 0; k < lines.size(); ++k) {
    if (is_comment_or_blank(lines[k])) continue;
    auto t = tokens(lines[k]);
    if (t.size() != 2)
      throw FormatError("line " + std::to_string(k + 1) + ": expected two tokens");
    pairs.emplace_back(parse_token(t[0], k + 1), parse_token(t[1], k + 1));
  }
  return VertexMap::from_pairs(*from, *to, pairs);
}

// ---------------------------------------------------------------- chains

std::vector<VertexSubset> read_chain(std::string_view text, const Graph& g) {
  std::vector<VertexSubset> chain;
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '[') {
    auto doc = parse_json(text);
    for (const auto& set : doc) {
      if (!set.is_array()) throw FormatError("chain member must be an array of ids");
      std::vector<VertexId> ids;
      for (const auto& v : set) ids.push_back(id_from_json(v));
      chain.push_back(VertexSubset::from_ids(g, ids));
    }
    return chain;
  }
  auto lines = split_lines(text);
  for (std::size_t k = 0; k < lines.size(); ++k) {
    if (is_comment_or_blank(lines[k])) continue;
    std::vector<VertexId> ids;
    for (auto t : tokens(lines[k])) ids.push_back(parse_token(t, k + 1));
    chain.push_back(VertexSubset::from_ids(g, ids));
  }
  return chain;
}

std::string write_chain_json(const Graph& g, const std::vector<VertexSubset>& chain) {
  Json j = Json::array();
  for (const auto& f : chain) {
    Json set = Json::array();
    for (auto v : f.members()) set.push_back(id_to_json(g.id(v)));
    j.push_back(std::move(set));
  }
  return document(j);
}

// ---------------------------------------------------------------- reports

std::string write_spectrum_json(const SpectrumReport& r) {
  Json j = Json::object();
  j["operator"] = to_string(r.kind);
  Json values = Json::array();
  for (double x : r.eigenvalues) values.push_back(round_real(x));
  j["eigenvalues"] = std::move(values);
  j["rho"] = round_real(r.rho);
  if (r.lambda2) j["lambda2"] = round_real(*r.lambda2);
  if (r.gap) j["gap"] = round_real(*r.gap);
  return document(j);
}

SpectrumReport read_spectrum_json(std::string_view text) {
  auto doc = parse_json(text);
  if (!doc.is_object()) throw FormatError("spectrum document must be an object");
  SpectrumReport r;
  auto kind = field(doc, "operator").get<std::string>();
  if (kind == to_string(OperatorKind::adjacency))
    r.kind = OperatorKind::adjacency;
  else if (kind == to_string(OperatorKind::normalized_laplacian))
    r.kind = OperatorKind::normalized_laplacian;
  else
    throw FormatError("unknown operator: " + kind);
  try {
    r.eigenvalues = field(doc, "eigenvalues").get<std::vector<double>>();
    r.rho = field(doc, "rho").get<double>();
    if (doc.contains("lambda2")) r.lambda2 = doc["lambda2"].get<double>();
    if (doc.contains("gap")) r.gap = doc["gap"].get<double>();
  } catch (const Json::exception& e) {
    throw FormatError(std::string("bad spectrum field: ") + e.what());
  }
  return r;
}

std::string write_tower_report_json(const TowerReport& r) {
  Json j = Json::object();
  j["valency"] = r.valency;
  j["truncated"] = r.truncated;
  j["all_passed"] = r.all_passed();
  Json levels = Json::array();
  for (const auto& l : r.levels) {
    Json e = Json::object();
    e["level"] = l.index;
    e["vertices"] = l.vertices;
    e["edges"] = l.edges;
    e["rho"] = optional_real(l.rho);
    e["lambda2"] = optional_real(l.lambda2);
    e["gap"] = optional_real(l.gap);
    e["cover_index"] = l.cover_index ? Json(*l.cover_index) : Json(nullptr);
    levels.push_back(std::move(e));
  }
  j["levels"] = std::move(levels);
  Json pairs = Json::array();
  for (const auto& p : r.pairs) {
    Json e = Json::object();
    e["from"] = p.from;
    e["to"] = p.to;
    e["cover"] = to_string(p.cover);
    e["labeling"] = to_string(p.labeling);
    e["edge_count"] = to_string(p.edge_count);
    e["scaling"] = to_string(p.scaling);
    e["containment"] = to_string(p.containment);
    e["gap_scaling"] = to_string(p.gap_scaling);
    pairs.push_back(std::move(e));
  }
  j["pairs"] = std::move(pairs);
  return document(j);
}

std::string write_folner_report_json(const FolnerReport& r) {
  Json j = Json::object();
  j["max_label_degree"] = r.max_label_degree;
  j["bound_holds"] = r.bound_holds;
  j["product_ratios_non_increasing"] = r.product_ratios_non_increasing;
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    Json x = Json::object();
    x["size"] = e.size;
    x["boundary"] = e.boundary;
    x["ratio"] = rational_json(e.ratio);
    x["product_size"] = e.product_size;
    x["product_boundary"] = e.product_boundary;
    x["product_ratio"] = e.product_ratio ? rational_json(*e.product_ratio) : Json(nullptr);
    x["bound_holds"] = e.bound_holds;
    entries.push_back(std::move(x));
  }
  j["entries"] = std::move(entries);
  return document(j);
}

}  // namespace zz
