// Copyright 2026 The ergcert Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef ERGCERT_CORE_CERTIFY_HPP
#define ERGCERT_CORE_CERTIFY_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "core/construction.hpp"
#include "core/cyclotomy.hpp"
#include "core/graph.hpp"

namespace ergc {

struct ErgParams {
  std::uint64_t n = 0;
  std::uint32_t k = 0;
  std::uint32_t lambda = 0;

  friend bool operator==(const ErgParams&, const ErgParams&) = default;
};

struct EdgeRegularity {
  std::optional<ErgParams> params;
  /// Empty when edge-regular.
  std::string reason;
  /// Two vertices of different degree, or an edge whose common-neighbour
  /// count deviates from that of the first edge.
  std::optional<Edge> witness;

  bool ok() const noexcept { return params.has_value(); }
};

/// Regularity plus a constant lambda over every edge.
EdgeRegularity check_edge_regular(const Graph& g);

struct SrgParams {
  std::uint64_t n = 0;
  std::uint32_t k = 0;
  std::uint32_t lambda = 0;
  std::uint32_t mu = 0;
  double theta1 = 0.0;
  double theta2 = 0.0;
};

/// (N-k-1)mu = k(k-lambda-1) exactly; lambda-mu = theta1+theta2 and
/// mu-k = theta1*theta2 to the given tolerance.
bool srg_relations_hold(const SrgParams& srg, double tolerance = 1e-9);

/// Restricted eigenvalues k > theta1 >= theta2 from
/// x^2 - (lambda-mu)x - (k-mu) = 0.
std::pair<double, double> srg_eigenvalues(std::uint32_t k, std::uint32_t lambda, std::uint32_t mu);

/// Parameters forced on an SRG with a 1-regular clique of order s + 1.
SrgParams srg_clique_parameters(std::uint32_t s, std::uint32_t t);

inline constexpr std::size_t kExhaustiveMuLimit = 2000;

enum class SrgScan {
  Auto,           // exhaustive up to kExhaustiveMuLimit vertices, else FromVertexZero
  Exhaustive,     // every non-adjacent pair
  FromVertexZero, // pairs (0, v); sufficient for vertex-transitive graphs
};

std::string_view to_string(SrgScan scan) noexcept;

enum class SrgVerdictKind { Srg, NotSrg, Complete };

std::string_view to_string(SrgVerdictKind kind) noexcept;

struct MuWitness {
  Vertex u = 0;
  Vertex v = 0;
  std::uint32_t mu = 0;

  friend bool operator==(const MuWitness&, const MuWitness&) = default;
};

struct SrgVerdict {
  SrgVerdictKind kind = SrgVerdictKind::Complete;
  /// Distinct common-neighbour counts over the scanned non-adjacent pairs.
  std::vector<std::uint32_t> mu_values;
  /// Lexicographically first scanned pair for each value of mu_values.
  std::vector<MuWitness> witnesses;
  std::optional<SrgParams> params;
  SrgScan strategy = SrgScan::Exhaustive;
};

/// Throws NotEdgeRegular.
SrgVerdict check_strongly_regular(const Graph& g, SrgScan scan = SrgScan::Auto);

/// The cells C_f = { (z, v, f) }, ordered by field index of f.
std::vector<std::vector<Vertex>> canonical_spread(const GroupParams& gp);

struct CliqueReport {
  std::vector<Vertex> clique;
  std::size_t order = 0;
  std::optional<std::uint32_t> nexus;
  /// Two outside vertices meeting the clique in different numbers of
  /// vertices (vertex, count), when the count is not constant.
  std::optional<std::pair<std::pair<Vertex, std::uint32_t>, std::pair<Vertex, std::uint32_t>>>
      nonconstant;

  bool regular() const noexcept { return nexus.has_value() && *nexus > 0; }
};

/// Throws NotAClique, NoOutsideVertices, InvalidArgument for |C| < 2.
CliqueReport clique_nexus(const Graph& g, std::span<const Vertex> clique);

/// Predicted degrees inside a vertex neighbourhood: 2^m l - 1 copies of 2^m l - 2, and for each
/// nonzero g, |S_{g,pi}| copies of
///   sum_{h != g} c(pi(h-g) - pi(g), pi(h) - pi(g)).
/// Sorted ascending. Throws BadCongruence unless ctx.n() = 2^m - 1.
std::vector<std::uint32_t> predicted_local_valencies(const GroupParams& gp, const Bijection& pi,
                                                     const CyclotomicContext& ctx);

/// Common neighbours of (0,0,0) and (0,g,rho):
///   2 + sum_{h != g} c(pi(h) - 1, pi(h+g) - 1).
/// Throws HypothesisViolated when pi(g) = 1 (mod 2^m - 1).
std::uint64_t predicted_mu_witness(const GroupParams& gp, const Bijection& pi,
                                   const CyclotomicContext& ctx, BitVector g);

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational make(std::int64_t num, std::int64_t den);
  double to_double() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }
  std::string to_string() const;

  friend bool operator==(const Rational&, const Rational&) = default;
};

struct QuotientMatrix {
  std::vector<std::vector<Vertex>> cells;
  std::vector<std::vector<Rational>> entries;
  bool equitable = false;
};

/// Throws NotAPartition.
QuotientMatrix quotient_matrix(const Graph& g, const std::vector<std::vector<Vertex>>& partition);

/// Closed-form eigenvalues of a 2 x 2 quotient matrix, larger first.
/// Throws InvalidArgument for other sizes or complex eigenvalues.
std::pair<double, double> eigenvalues_2x2(const QuotientMatrix& b);

} // namespace ergc

#endif
