#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zz/graph.hpp"
#include "zz/labeling.hpp"
#include "zz/spectral.hpp"
#include "zz/subgraph.hpp"
#include "zz/tower.hpp"
#include "zz/vertex_map.hpp"
#include "zz/zigzag.hpp"

namespace zz {

/// Real number at 12 significant digits, "%.12g" style.
std::string format_real(double x);
/// x rounded to 12 significant digits; -0 becomes 0.
double round_real(double x);

/// Integer when written canonically (`0`, `-?[1-9][0-9]*`), string
/// otherwise. Throws FormatError for an integer outside int64.
VertexId parse_atom(std::string_view token);

enum class GraphFormat { json, edge_list, dot };

const char* to_string(GraphFormat f);
/// Accepts "json", "edgelist", "edge-list" and "dot".
GraphFormat parse_graph_format(std::string_view name);

/// JSON when the first non-blank character is '{', DOT when the text starts
/// with "graph" or "strict", edge list otherwise.
GraphFormat detect_graph_format(std::string_view text);

/// `{"vertices": [...], "edges": [[u, v], ...]}` in canonical order; ids are
/// integers, strings or two-element arrays.
std::string write_graph_json(const Graph& g);
Graph read_graph_json(std::string_view text);

/// One edge per line; `#` lines are comments. A token is an integer when it
/// is written canonically (`0`, `-?[1-9][0-9]*`), a string otherwise. Throws
/// FormatError for graphs the format cannot hold: isolated vertices, pair
/// ids and strings that are empty, contain blanks, start with '#' or read
/// back as integers.
std::string write_edge_list(const Graph& g);
Graph read_edge_list(std::string_view text);

/// `graph G { ... }` with nodes `n<k> [label="...", id="<json>"];` and edges
/// `n<a> -- n<b>;`. The reader accepts this layout only.
std::string write_dot(const Graph& g);
Graph read_dot(std::string_view text);

std::string write_graph(const Graph& g, GraphFormat f);
Graph read_graph(std::string_view text);

/// Loads a graph given by path inside a document. The default reads the
/// file and autodetects the format.
using GraphResolver = std::function<Graph(const std::string& path)>;
Graph read_graph_file(const std::string& path);

/// `{"base": graph, "labels": graph, "map": [{vertex, edge, label}, ...]}`
/// with entries in dart order.
std::string write_labeling_json(const HLabeling& a);
/// `base` and `labels` may be embedded graphs, path strings or absent; an
/// absent one must be supplied. A supplied graph must equal an embedded one.
/// Every dart needs exactly one entry.
HLabeling read_labeling_json(std::string_view text,
                             const std::optional<Graph>& base = std::nullopt,
                             const std::optional<Graph>& labels = std::nullopt,
                             const GraphResolver& resolve = read_graph_file);

/// Graph JSON of the product plus `base`, `labels`, `labeling` and
/// `edge_tags` (`{edge, eps1, eps2}` per product edge, all as ids).
std::string write_product_json(const ZigZagGraph& z);
/// Rebuilds the product from base, labels and labeling and throws
/// FormatError unless vertices, edges and tags agree with the document.
ZigZagGraph read_product_json(std::string_view text,
                              const GraphResolver& resolve = read_graph_file);

/// `{"from": graph, "to": graph, "map": [[src, dst], ...]}`.
std::string write_vertex_map_json(const VertexMap& m);
/// JSON as above, or text with one `src dst` pair per line. Graphs given
/// as arguments take the place of absent `from` / `to`.
VertexMap read_vertex_map(std::string_view text,
                          const std::optional<Graph>& from = std::nullopt,
                          const std::optional<Graph>& to = std::nullopt,
                          const GraphResolver& resolve = read_graph_file);

/// JSON array of id arrays, or one whitespace-separated subset per line.
std::vector<VertexSubset> read_chain(std::string_view text, const Graph& g);
std::string write_chain_json(const Graph& g, const std::vector<VertexSubset>& chain);

/// `{operator, eigenvalues, rho, lambda2?, gap?}`, reals at 12 digits.
std::string write_spectrum_json(const SpectrumReport& r);
SpectrumReport read_spectrum_json(std::string_view text);

std::string write_tower_report_json(const TowerReport& r);
std::string write_folner_report_json(const FolnerReport& r);

}  // namespace zz
