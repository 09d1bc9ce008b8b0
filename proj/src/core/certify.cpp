// Copyright 2026 The ergcert Authors
// SPDX-License-Identifier: Apache-2.0

#include "core/certify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <string>
#include <tuple>

#include "core/error.hpp"

namespace ergc {

EdgeRegularity check_edge_regular(const Graph& g) {
  EdgeRegularity out;
  const Regularity reg = is_regular(g);
  if (!reg.regular()) {
    out.reason = "not regular";
    out.witness = reg.witness;
    return out;
  }
  if (*reg.degree == 0) {
    out.reason = "no edges";
    return out;
  }
  std::optional<std::uint32_t> lambda;
  std::optional<Edge> first;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex w : g.neighbours(u)) {
      if (w <= u)
        continue;
      const std::uint32_t count = g.common_neighbours(u, w);
      if (!lambda) {
        lambda = count;
        first = Edge{u, w};
      } else if (count != *lambda) {
        out.reason = "edge (" + std::to_string(u) + "," + std::to_string(w) + ") has " +
                     std::to_string(count) + " common neighbours, edge (" +
                     std::to_string(first->first) + "," + std::to_string(first->second) +
                     ") has " + std::to_string(*lambda);
        out.witness = Edge{u, w};
        return out;
      }
    }
  }
  out.params = ErgParams{g.order(), *reg.degree, *lambda};
  return out;
}

std::pair<double, double> srg_eigenvalues(std::uint32_t k, std::uint32_t lambda, std::uint32_t mu) {
  const double d = static_cast<double>(lambda) - static_cast<double>(mu);
  const double disc = d * d + 4.0 * (static_cast<double>(k) - static_cast<double>(mu));
  const double root = std::sqrt(std::max(disc, 0.0));
  return {(d + root) / 2.0, (d - root) / 2.0};
}

bool srg_relations_hold(const SrgParams& srg, double tolerance) {
  const auto n = static_cast<std::int64_t>(srg.n);
  const std::int64_t k = srg.k, lambda = srg.lambda, mu = srg.mu;
  if ((n - k - 1) * mu != k * (k - lambda - 1))
    return false;
  if (std::abs(static_cast<double>(lambda - mu) - (srg.theta1 + srg.theta2)) > tolerance)
    return false;
  return std::abs(static_cast<double>(mu - k) - srg.theta1 * srg.theta2) <= tolerance;
}

SrgParams srg_clique_parameters(std::uint32_t s, std::uint32_t t) {
  if (s == 0 || t == 0)
    throw Error(ErrorCode::InvalidArgument, "s and t must be positive");
  SrgParams out;
  out.n = std::uint64_t{s + 1} * (std::uint64_t{s} * t + 1);
  out.k = s * (t + 1);
  out.lambda = s - 1;
  out.mu = t + 1;
  out.theta1 = static_cast<double>(s) - 1.0;
  out.theta2 = -static_cast<double>(t) - 1.0;
  return out;
}

std::string_view to_string(SrgScan scan) noexcept {
  switch (scan) {
  case SrgScan::Auto: return "auto";
  case SrgScan::Exhaustive: return "exhaustive";
  case SrgScan::FromVertexZero: return "from-vertex-0";
  }
  return "auto";
}

std::string_view to_string(SrgVerdictKind kind) noexcept {
  switch (kind) {
  case SrgVerdictKind::Srg: return "SRG";
  case SrgVerdictKind::NotSrg: return "NotSRG";
  case SrgVerdictKind::Complete: return "Complete";
  }
  return "Complete";
}

SrgVerdict check_strongly_regular(const Graph& g, SrgScan scan) {
  const EdgeRegularity er = check_edge_regular(g);
  if (!er.ok())
    throw Error(ErrorCode::NotEdgeRegular, "graph is not edge-regular: " + er.reason);

  if (scan == SrgScan::Auto)
    scan = g.order() <= kExhaustiveMuLimit ? SrgScan::Exhaustive : SrgScan::FromVertexZero;

  SrgVerdict out;
  out.strategy = scan;
  std::map<std::uint32_t, MuWitness> first_seen;
  const Vertex last_u = scan == SrgScan::Exhaustive ? static_cast<Vertex>(g.order()) : 1;
  for (Vertex u = 0; u < last_u; ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (g.adjacent(u, v))
        continue;
      const std::uint32_t mu = g.common_neighbours(u, v);
      first_seen.try_emplace(mu, MuWitness{u, v, mu});
    }
  }
  for (const auto& [mu, witness] : first_seen) {
    out.mu_values.push_back(mu);
    out.witnesses.push_back(witness);
  }

  if (first_seen.empty()) {
    out.kind = SrgVerdictKind::Complete;
  } else if (first_seen.size() > 1) {
    out.kind = SrgVerdictKind::NotSrg;
  } else {
    out.kind = SrgVerdictKind::Srg;
    SrgParams params;
    params.n = er.params->n;
    params.k = er.params->k;
    params.lambda = er.params->lambda;
    params.mu = out.mu_values.front();
    std::tie(params.theta1, params.theta2) = srg_eigenvalues(params.k, params.lambda, params.mu);
    out.params = params;
  }
  return out;
}

std::vector<std::vector<Vertex>> canonical_spread(const GroupParams& gp) {
  const std::uint32_t q = gp.q();
  const std::uint32_t block = gp.l() * gp.two_m();
  std::vector<std::vector<Vertex>> cells(q);
  for (std::uint32_t f = 0; f < q; ++f) {
    cells[f].reserve(block);
    for (std::uint32_t g = 0; g < block; ++g)
      cells[f].push_back(g * q + f);
  }
  return cells;
}

CliqueReport clique_nexus(const Graph& g, std::span<const Vertex> clique) {
  if (clique.size() < 2)
    throw Error(ErrorCode::InvalidArgument, "clique needs at least two vertices");
  std::vector<std::uint32_t> hits(g.order(), 0);
  std::vector<bool> inside(g.order(), false);
  for (Vertex c : clique) {
    if (c >= g.order())
      throw Error(ErrorCode::IndexOutOfRange, "clique vertex out of range");
    if (inside[c])
      throw Error(ErrorCode::InvalidArgument, "clique lists a vertex twice");
    inside[c] = true;
  }
  for (std::size_t i = 0; i < clique.size(); ++i) {
    for (std::size_t j = i + 1; j < clique.size(); ++j) {
      if (!g.adjacent(clique[i], clique[j])) {
        throw Error(ErrorCode::NotAClique, "vertices " + std::to_string(clique[i]) + " and " +
                                               std::to_string(clique[j]) + " are not adjacent");
      }
    }
  }
  if (clique.size() == g.order())
    throw Error(ErrorCode::NoOutsideVertices, "clique covers every vertex");

  for (Vertex c : clique) {
    for (Vertex w : g.neighbours(c))
      ++hits[w];
  }

  CliqueReport out;
  out.clique.assign(clique.begin(), clique.end());
  out.order = clique.size();
  std::optional<std::pair<Vertex, std::uint32_t>> reference;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (inside[v])
      continue;
    if (!reference) {
      reference = {v, hits[v]};
    } else if (hits[v] != reference->second) {
      out.nonconstant = {{*reference, {v, hits[v]}}};
      return out;
    }
  }
  out.nexus = reference->second;
  return out;
}

std::vector<std::uint32_t> predicted_local_valencies(const GroupParams& gp, const Bijection& pi,
                                                     const CyclotomicContext& ctx) {
  const std::uint32_t n = gp.n();
  if (ctx.n() != n || ctx.field().q() != gp.q()) {
    throw Error(ErrorCode::BadCongruence,
                "cyclotomic context must have n = 2^m - 1 = " + std::to_string(n));
  }
  std::vector<std::uint32_t> out;
  const std::uint32_t clique_order = gp.two_m() * gp.l();
  out.assign(clique_order - 1, clique_order - 2);
  for (BitVector g = 1; g <= n; ++g) {
    const std::int64_t pg = pi(g);
    std::uint64_t sum = 0;
    for (BitVector h = 1; h <= n; ++h) {
      if (h == g)
        continue;
      sum += ctx.cyclotomic_number_mod(std::int64_t{pi(h ^ g)} - pg, std::int64_t{pi(h)} - pg);
    }
    out.insert(out.end(), ctx.class_size(), static_cast<std::uint32_t>(sum));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t predicted_mu_witness(const GroupParams& gp, const Bijection& pi,
                                   const CyclotomicContext& ctx, BitVector g) {
  const std::uint32_t n = gp.n();
  if (ctx.n() != n || ctx.field().q() != gp.q()) {
    throw Error(ErrorCode::BadCongruence,
                "cyclotomic context must have n = 2^m - 1 = " + std::to_string(n));
  }
  if (pi(g) % n == 1 % n) {
    throw Error(ErrorCode::HypothesisViolated,
                "pi(" + std::to_string(g) + ") = 1, so (0,g,rho) is adjacent to the identity");
  }
  std::uint64_t total = 2;
  for (BitVector h = 1; h <= n; ++h) {
    if (h == g)
      continue;
    total += ctx.cyclotomic_number_mod(std::int64_t{pi(h)} - 1, std::int64_t{pi(h ^ g)} - 1);
  }
  return total;
}

Rational Rational::make(std::int64_t num, std::int64_t den) {
  if (den == 0)
    throw Error(ErrorCode::InvalidArgument, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t d = std::gcd(num < 0 ? -num : num, den);
  return {num / d, den / d};
}

std::string Rational::to_string() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

QuotientMatrix quotient_matrix(const Graph& g, const std::vector<std::vector<Vertex>>& partition) {
  constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);
  std::vector<std::size_t> cell_of(g.order(), kUnassigned);
  for (std::size_t i = 0; i < partition.size(); ++i) {
    if (partition[i].empty())
      throw Error(ErrorCode::NotAPartition, "empty cell " + std::to_string(i));
    for (Vertex v : partition[i]) {
      if (v >= g.order() || cell_of[v] != kUnassigned)
        throw Error(ErrorCode::NotAPartition, "vertex " + std::to_string(v) + " misplaced");
      cell_of[v] = i;
    }
  }
  if (std::find(cell_of.begin(), cell_of.end(), kUnassigned) != cell_of.end())
    throw Error(ErrorCode::NotAPartition, "partition does not cover every vertex");

  const std::size_t s = partition.size();
  QuotientMatrix out;
  out.cells = partition;
  out.equitable = true;
  std::vector<std::vector<std::int64_t>> sums(s, std::vector<std::int64_t>(s, 0));
  std::vector<std::int64_t> counts(s);
  for (std::size_t i = 0; i < s; ++i) {
    std::vector<std::int64_t> reference;
    for (Vertex x : partition[i]) {
      std::fill(counts.begin(), counts.end(), 0);
      for (Vertex w : g.neighbours(x))
        ++counts[cell_of[w]];
      for (std::size_t j = 0; j < s; ++j)
        sums[i][j] += counts[j];
      if (reference.empty())
        reference = counts;
      else if (counts != reference)
        out.equitable = false;
    }
  }
  out.entries.assign(s, std::vector<Rational>(s));
  for (std::size_t i = 0; i < s; ++i) {
    const auto size = static_cast<std::int64_t>(partition[i].size());
    for (std::size_t j = 0; j < s; ++j)
      out.entries[i][j] = Rational::make(sums[i][j], size);
  }
  return out;
}

std::pair<double, double> eigenvalues_2x2(const QuotientMatrix& b) {
  if (b.entries.size() != 2 || b.entries[0].size() != 2 || b.entries[1].size() != 2)
    throw Error(ErrorCode::InvalidArgument, "expected a 2 x 2 quotient matrix");
  const double a11 = b.entries[0][0].to_double(), a12 = b.entries[0][1].to_double();
  const double a21 = b.entries[1][0].to_double(), a22 = b.entries[1][1].to_double();
  const double trace = a11 + a22;
  const double det = a11 * a22 - a12 * a21;
  const double disc = trace * trace - 4.0 * det;
  if (disc < -1e-12)
    throw Error(ErrorCode::InvalidArgument, "complex eigenvalues");
  const double root = std::sqrt(std::max(disc, 0.0));
  return {(trace + root) / 2.0, (trace - root) / 2.0};
}

} // namespace ergc
