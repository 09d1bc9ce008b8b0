// Copyright 2026 The ergcert Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef ERGCERT_CORE_GRAPH_IO_HPP
#define ERGCERT_CORE_GRAPH_IO_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "core/graph.hpp"

namespace ergc {

enum class ExportFormat {
  Dimacs, // "p edge N M" then "e i j", 1-based, i < j
  Edges,  // "i j", 0-based, i < j
};

std::optional<ExportFormat> parse_export_format(std::string_view name);

/// Edges in lexicographic order of (i, j).
void write_graph(std::ostream& out, const Graph& g, ExportFormat format);
std::string graph_to_string(const Graph& g, ExportFormat format);

/// Throws Parse on malformed input.
Graph read_dimacs(std::istream& in);
/// Vertex count is max index + 1 unless given.
Graph read_edge_list(std::istream& in, std::optional<std::size_t> order = std::nullopt);

} // namespace ergc

#endif
