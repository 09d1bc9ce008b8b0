// Copyright 2026 The ergcert Authors
// SPDX-License-Identifier: Apache-2.0

#include "core/graph_io.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "core/error.hpp"

namespace ergc {

std::optional<ExportFormat> parse_export_format(std::string_view name) {
  if (name == "dimacs")
    return ExportFormat::Dimacs;
  if (name == "edges")
    return ExportFormat::Edges;
  return std::nullopt;
}

void write_graph(std::ostream& out, const Graph& g, ExportFormat format) {
  if (format == ExportFormat::Dimacs)
    out << "p edge " << g.order() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) {
    if (format == ExportFormat::Dimacs)
      out << "e " << u + 1 << ' ' << v + 1 << '\n';
    else
      out << u << ' ' << v << '\n';
  }
}

std::string graph_to_string(const Graph& g, ExportFormat format) {
  std::ostringstream out;
  write_graph(out, g, format);
  return out.str();
}

Graph read_dimacs(std::istream& in) {
  std::string line;
  std::optional<std::size_t> order;
  std::size_t declared_edges = 0;
  std::vector<Edge> edges;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == 'c')
      continue;
    std::istringstream fields(line);
    std::string tag;
    fields >> tag;
    if (tag == "p") {
      std::string kind;
      std::size_t n = 0;
      if (order || !(fields >> kind >> n >> declared_edges) || kind != "edge")
        throw Error(ErrorCode::Parse, "bad problem line " + std::to_string(lineno));
      order = n;
    } else if (tag == "e") {
      std::uint64_t u = 0, v = 0;
      if (!order || !(fields >> u >> v) || u == 0 || v == 0 || u > *order || v > *order)
        throw Error(ErrorCode::Parse, "bad edge line " + std::to_string(lineno));
      edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
    } else {
      throw Error(ErrorCode::Parse, "unknown line " + std::to_string(lineno));
    }
  }
  if (!order)
    throw Error(ErrorCode::Parse, "missing problem line");
  if (edges.size() != declared_edges)
    throw Error(ErrorCode::Parse, "edge count does not match the problem line");
  return Graph::from_edges(*order, edges);
}

Graph read_edge_list(std::istream& in, std::optional<std::size_t> order) {
  std::vector<Edge> edges;
  std::size_t max_vertex = 0;
  std::uint64_t u = 0, v = 0;
  while (in >> u >> v) {
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    max_vertex = std::max<std::size_t>(max_vertex, std::max(u, v));
  }
  if (!in.eof())
    throw Error(ErrorCode::Parse, "malformed edge list");
  return Graph::from_edges(order.value_or(edges.empty() ? 0 : max_vertex + 1), edges);
}

} // namespace ergc
