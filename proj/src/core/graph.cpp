// Copyright 2026 The ergcert Authors
// SPDX-License-Identifier: Apache-2.0

#include "core/graph.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "core/error.hpp"

namespace ergc {

namespace kernels {

std::uint32_t intersect_count_bits(std::span<const std::uint64_t> a,
                                   std::span<const std::uint64_t> b) noexcept {
  std::uint32_t count = 0;
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i)
    count += static_cast<std::uint32_t>(std::popcount(a[i] & b[i]));
  return count;
}

std::uint32_t intersect_count_sorted(std::span<const Vertex> a,
                                     std::span<const Vertex> b) noexcept {
  std::uint32_t count = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

} // namespace kernels

Graph::Graph(std::vector<std::vector<Vertex>> lists) : lists_(std::move(lists)) {
  const std::size_t n = lists_.size();
  if (n == 0)
    throw Error(ErrorCode::EmptyGraph, "graph must have at least one vertex");
  std::size_t degree_sum = 0;
  for (std::size_t v = 0; v < n; ++v) {
    auto& list = lists_[v];
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end())
      throw Error(ErrorCode::InvalidArgument, "multiple edge at vertex " + std::to_string(v));
    for (Vertex w : list) {
      if (w >= n)
        throw Error(ErrorCode::InvalidArgument, "neighbour " + std::to_string(w) + " out of range");
      if (w == v)
        throw Error(ErrorCode::InvalidArgument, "loop at vertex " + std::to_string(v));
    }
    degree_sum += list.size();
  }
  for (std::size_t v = 0; v < n; ++v) {
    for (Vertex w : lists_[v]) {
      if (!std::binary_search(lists_[w].begin(), lists_[w].end(), static_cast<Vertex>(v))) {
        throw Error(ErrorCode::InvalidArgument, "asymmetric adjacency between " +
                                                    std::to_string(v) + " and " +
                                                    std::to_string(w));
      }
    }
  }
  edge_count_ = degree_sum / 2;

  if (n <= kBitRowLimit) {
    words_ = (n + 63) / 64;
    rows_.assign(n * words_, 0);
    for (std::size_t v = 0; v < n; ++v) {
      for (Vertex w : lists_[v])
        rows_[v * words_ + w / 64] |= std::uint64_t{1} << (w % 64);
    }
  }
}

Graph Graph::from_adjacency(std::vector<std::vector<Vertex>> lists) {
  return Graph(std::move(lists));
}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  std::vector<std::vector<Vertex>> lists(n);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n)
      throw Error(ErrorCode::InvalidArgument, "edge endpoint out of range");
    lists[u].push_back(v);
    lists[v].push_back(u);
  }
  return Graph(std::move(lists));
}

void Graph::check_vertex(Vertex v) const {
  if (v >= lists_.size()) {
    throw Error(ErrorCode::IndexOutOfRange,
                "vertex " + std::to_string(v) + " outside graph of order " +
                    std::to_string(lists_.size()));
  }
}

std::span<const Vertex> Graph::neighbours(Vertex v) const {
  check_vertex(v);
  return lists_[v];
}

std::uint32_t Graph::degree(Vertex v) const {
  check_vertex(v);
  return static_cast<std::uint32_t>(lists_[v].size());
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  if (has_bit_rows())
    return (rows_[std::size_t{u} * words_ + v / 64] >> (v % 64)) & 1U;
  return std::binary_search(lists_[u].begin(), lists_[u].end(), v);
}

std::uint32_t Graph::common_neighbours(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v)
    throw Error(ErrorCode::SameVertex, "common neighbours of a vertex with itself");
  // Pick whichever kernel touches fewer words.
  if (has_bit_rows() && words_ <= lists_[u].size() + lists_[v].size())
    return kernels::intersect_count_bits(row(u), row(v));
  return kernels::intersect_count_sorted(lists_[u], lists_[v]);
}

std::vector<std::uint32_t> Graph::neighbourhood_degree_multiset(Vertex v) const {
  check_vertex(v);
  std::vector<std::uint32_t> out;
  out.reserve(lists_[v].size());
  for (Vertex u : lists_[v])
    out.push_back(common_neighbours(u, v));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < lists_.size(); ++u) {
    for (Vertex w : lists_[u]) {
      if (u < w)
        out.emplace_back(u, w);
    }
  }
  return out;
}

Regularity is_regular(const Graph& g) {
  const std::uint32_t k = g.degree(0);
  for (Vertex v = 1; v < g.order(); ++v) {
    if (g.degree(v) != k)
      return {std::nullopt, Edge{0, v}};
  }
  return {k, std::nullopt};
}

} // namespace ergc
