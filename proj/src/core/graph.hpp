// Copyright 2026 The ergcert Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef ERGCERT_CORE_GRAPH_HPP
#define ERGCERT_CORE_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace ergc {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

// Above this order the bit rows are not materialised and intersections
// fall back to sorted-list merging.
inline constexpr std::size_t kBitRowLimit = 32768;

namespace kernels {

std::uint32_t intersect_count_bits(std::span<const std::uint64_t> a,
                                   std::span<const std::uint64_t> b) noexcept;

std::uint32_t intersect_count_sorted(std::span<const Vertex> a,
                                     std::span<const Vertex> b) noexcept;

} // namespace kernels

/// Simple undirected graph, immutable after construction. Keeps sorted
/// neighbour lists and, for orders up to kBitRowLimit, one bit row per
/// vertex for word-parallel intersection.
class Graph {
public:
  /// Throws EmptyGraph for n = 0, InvalidArgument on loops, out-of-range
  /// endpoints, duplicate entries or asymmetric lists.
  static Graph from_adjacency(std::vector<std::vector<Vertex>> lists);

  /// Edges are undirected; duplicates (in either orientation) are rejected.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t order() const noexcept { return lists_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }
  bool has_bit_rows() const noexcept { return !rows_.empty(); }

  std::span<const Vertex> neighbours(Vertex v) const;
  std::uint32_t degree(Vertex v) const;
  bool adjacent(Vertex u, Vertex v) const;

  /// |N(u) ∩ N(v)|. Throws SameVertex for u == v.
  std::uint32_t common_neighbours(Vertex u, Vertex v) const;

  /// For each neighbour u of v, |N(u) ∩ N(v)|; sorted ascending.
  std::vector<std::uint32_t> neighbourhood_degree_multiset(Vertex v) const;

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph& x, const Graph& y) { return x.lists_ == y.lists_; }

private:
  explicit Graph(std::vector<std::vector<Vertex>> lists);

  void check_vertex(Vertex v) const;
  std::span<const std::uint64_t> row(Vertex v) const noexcept {
    return {rows_.data() + std::size_t{v} * words_, words_};
  }

  std::vector<std::vector<Vertex>> lists_;
  std::vector<std::uint64_t> rows_;
  std::size_t words_ = 0;
  std::size_t edge_count_ = 0;
};

struct Regularity {
  std::optional<std::uint32_t> degree;
  /// Two vertices of different degree when not regular.
  std::optional<Edge> witness;

  bool regular() const noexcept { return degree.has_value(); }
};

Regularity is_regular(const Graph& g);

} // namespace ergc

#endif
