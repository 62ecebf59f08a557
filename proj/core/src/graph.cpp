#include "zz/graph.hpp"

#include <algorithm>
#include <numeric>

#include "zz/error.hpp"

namespace zz {

Graph::Graph() : data_(std::make_shared<const Data>()) {}

Graph::Graph(std::vector<VertexId> vertices, std::vector<Edge> edges) {
  const std::size_t n = vertices.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  if (!std::is_sorted(vertices.begin(), vertices.end())) {
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return vertices[a] < vertices[b];
    });
  }
  std::vector<std::size_t> rank(n);
  for (std::size_t r = 0; r < n; ++r) rank[order[r]] = r;

  auto data = std::make_shared<Data>();
  data->ids.reserve(n);
  for (std::size_t r = 0; r < n; ++r) {
    data->ids.push_back(std::move(vertices[order[r]]));
    if (r > 0 && data->ids[r - 1] == data->ids[r])
      throw GraphError("duplicate vertex id " + data->ids[r].to_string());
  }

  for (auto& e : edges) {
    if (e.u >= n || e.v >= n)
      throw GraphError("edge endpoint index out of range");
    if (e.u == e.v)
      throw GraphError("loop at vertex " + data->ids[rank[e.u]].to_string());
    e = Edge::normalized(rank[e.u], rank[e.v]);
  }
  std::sort(edges.begin(), edges.end());
  for (std::size_t k = 1; k < edges.size(); ++k) {
    if (edges[k] == edges[k - 1])
      throw GraphError("multiple edges between " +
                       data->ids[edges[k].u].to_string() + " and " +
                       data->ids[edges[k].v].to_string());
  }

  std::vector<std::size_t> deg(n, 0);
  for (const auto& e : edges) {
    ++deg[e.u];
    ++deg[e.v];
  }
  data->offsets.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v)
    data->offsets[v + 1] = data->offsets[v] + deg[v];
  data->targets.resize(2 * edges.size());
  data->sources.resize(2 * edges.size());
  data->dart_edges.resize(2 * edges.size());
  std::vector<std::size_t> fill(data->offsets.begin(), data->offsets.end() - 1);
  // Edges are sorted by (u, v), so emitting in order keeps each row sorted:
  // a row's entries from edges where it is the larger endpoint come first
  // (smaller neighbours), then those where it is the smaller endpoint.
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const auto& e = edges[k];
    data->targets[fill[e.v]] = e.u;
    data->dart_edges[fill[e.v]] = k;
    data->sources[fill[e.v]++] = e.v;
  }
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const auto& e = edges[k];
    data->targets[fill[e.u]] = e.v;
    data->dart_edges[fill[e.u]] = k;
    data->sources[fill[e.u]++] = e.u;
  }
  data->edges = std::move(edges);
  data_ = std::move(data);
}

Graph Graph::from_ids(std::vector<VertexId> vertices,
                      const std::vector<std::pair<VertexId, VertexId>>& edges) {
  std::vector<std::size_t> order(vertices.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return vertices[a] < vertices[b];
  });
  auto lookup = [&](const VertexId& id) {
    auto it = std::lower_bound(
        order.begin(), order.end(), id,
        [&](std::size_t k, const VertexId& x) { return vertices[k] < x; });
    if (it == order.end() || !(vertices[*it] == id))
      throw GraphError("edge endpoint " + id.to_string() + " is not a vertex");
    return *it;
  };
  std::vector<Edge> idx;
  idx.reserve(edges.size());
  for (const auto& [a, b] : edges) idx.push_back({lookup(a), lookup(b)});
  return Graph(std::move(vertices), std::move(idx));
}

std::optional<std::size_t> Graph::find(const VertexId& id) const {
  const auto& ids = data_->ids;
  auto it = std::lower_bound(ids.begin(), ids.end(), id);
  if (it == ids.end() || !(*it == id)) return std::nullopt;
  return static_cast<std::size_t>(it - ids.begin());
}

std::size_t Graph::index_of(const VertexId& id) const {
  auto v = find(id);
  if (!v) throw GraphError("unknown vertex " + id.to_string());
  return *v;
}

std::optional<std::size_t> Graph::dart_index(std::size_t vertex,
                                             std::size_t other) const {
  auto row = neighbors(vertex);
  auto it = std::lower_bound(row.begin(), row.end(), other);
  if (it == row.end() || *it != other) return std::nullopt;
  return data_->offsets[vertex] + static_cast<std::size_t>(it - row.begin());
}

bool Graph::adjacent(std::size_t a, std::size_t b) const {
  return dart_index(a, b).has_value();
}

std::optional<std::size_t> Graph::edge_index(std::size_t a,
                                             std::size_t b) const {
  auto d = dart_index(a, b);
  if (!d) return std::nullopt;
  return data_->dart_edges[*d];
}

bool Graph::operator==(const Graph& other) const {
  if (data_ == other.data_) return true;
  return data_->ids == other.data_->ids && data_->edges == other.data_->edges;
}

std::vector<Dart> darts(const Graph& g) {
  std::vector<Dart> out;
  out.reserve(g.dart_count());
  for (std::size_t d = 0; d < g.dart_count(); ++d) out.push_back(g.dart(d));
  return out;
}

std::optional<std::size_t> regular_degree(const Graph& g) {
  if (g.empty()) return std::nullopt;
  const std::size_t d = g.degree(0);
  for (std::size_t v = 1; v < g.vertex_count(); ++v)
    if (g.degree(v) != d) return std::nullopt;
  return d;
}

std::size_t max_degree(const Graph& g) {
  std::size_t best = 0;
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    best = std::max(best, g.degree(v));
  return best;
}

bool has_isolated_vertices(const Graph& g) {
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) == 0) return true;
  return false;
}

bool is_connected(const Graph& g) {
  if (g.empty()) return true;
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    for (auto w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == g.vertex_count();
}

}  // namespace zz
