// Copyright 2026 The ergcert Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cmath>

#include "core/certificate.hpp"
#include "core/certify.hpp"
#include "core/construction.hpp"
#include "core/cyclotomy.hpp"
#include "json.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace ergc;

namespace {

Graph to_graph(const oracle::Matrix& adj) {
  std::vector<std::vector<Vertex>> lists(adj.size());
  for (std::size_t u = 0; u < adj.size(); ++u) {
    for (std::size_t v = 0; v < adj.size(); ++v) {
      if (adj[u][v])
        lists[u].push_back(static_cast<Vertex>(v));
    }
  }
  return Graph::from_adjacency(std::move(lists));
}

struct Instance {
  GroupParams gp;
  Bijection pi;
  Graph g;
};

Instance make(std::uint32_t l, std::uint32_t m, std::uint64_t q, const Bijection& pi) {
  GroupParams gp(l, m, Field::create_of_order(q));
  auto g = build_cayley_graph(gp, generating_set(gp, pi));
  return {std::move(gp), pi, std::move(g)};
}

} // namespace

TEST_CASE("edge-regularity of classical graphs") {
  auto er = check_edge_regular(to_graph(oracle::petersen()));
  REQUIRE(er.ok());
  CHECK(*er.params == ErgParams{10, 3, 0});
  CHECK(*check_edge_regular(to_graph(oracle::complete(5))).params == ErgParams{5, 4, 3});
  CHECK(*check_edge_regular(to_graph(oracle::cycle(5))).params == ErgParams{5, 2, 0});
  CHECK_FALSE(check_edge_regular(to_graph(oracle::star(4))).ok());
  CHECK_FALSE(check_edge_regular(to_graph(oracle::path(4))).ok());
  CHECK_FALSE(check_edge_regular(Graph::from_adjacency({{}, {}})).ok());
}

TEST_CASE("strong regularity of classical graphs") {
  const auto pet = check_strongly_regular(to_graph(oracle::petersen()));
  CHECK(pet.kind == SrgVerdictKind::Srg);
  REQUIRE(pet.params.has_value());
  CHECK(pet.params->mu == 1);
  CHECK(pet.params->theta1 == doctest::Approx(1.0));
  CHECK(pet.params->theta2 == doctest::Approx(-2.0));
  CHECK(check_strongly_regular(to_graph(oracle::complete(5))).kind == SrgVerdictKind::Complete);
  const auto c5 = check_strongly_regular(to_graph(oracle::cycle(5)));
  CHECK(c5.kind == SrgVerdictKind::Srg);
  CHECK(c5.params->mu == 1);
  CHECK_ERROR(check_strongly_regular(to_graph(oracle::star(3))), ErrorCode::NotEdgeRegular);
  CHECK(to_string(SrgVerdictKind::NotSrg) == "NotSRG");
}

TEST_CASE("the 28-vertex instance") {
  const auto x = make(1, 2, 7, Bijection::identity(2));
  const auto er = check_edge_regular(x.g);
  REQUIRE(er.ok());
  CHECK(*er.params == ErgParams{28, 9, 2});

  const auto verdict = check_strongly_regular(x.g, SrgScan::Exhaustive);
  CHECK(verdict.kind == SrgVerdictKind::NotSrg);
  CHECK(std::count(verdict.mu_values.begin(), verdict.mu_values.end(), 2u) == 1);
  for (const auto& w : verdict.witnesses) {
    CHECK_FALSE(x.g.adjacent(w.u, w.v));
    CHECK(x.g.common_neighbours(w.u, w.v) == w.mu);
  }
  // Identity against (0, g, rho) with pi(g) = 0.
  const auto v = x.gp.encode({0, 1, x.gp.field().rho()});
  CHECK_FALSE(x.g.adjacent(0, v));
  CHECK(x.g.common_neighbours(0, v) == 2);

  const auto from_zero = check_strongly_regular(x.g, SrgScan::FromVertexZero);
  CHECK(from_zero.mu_values == verdict.mu_values);
  CHECK(from_zero.strategy == SrgScan::FromVertexZero);
  CHECK(check_strongly_regular(x.g).strategy == SrgScan::Exhaustive);
}

TEST_CASE("spread and nexus") {
  const auto x = make(1, 2, 7, Bijection::identity(2));
  const auto spread = canonical_spread(x.gp);
  REQUIRE(spread.size() == 7);
  std::vector<bool> covered(28, false);
  for (const auto& cell : spread) {
    const auto report = clique_nexus(x.g, cell);
    CHECK(report.order == 4);
    CHECK(report.nexus == 1u);
    CHECK(report.regular());
    for (Vertex v : cell)
      covered[v] = true;
  }
  CHECK(std::all_of(covered.begin(), covered.end(), [](bool b) { return b; }));

  // A single edge of a clique is not regular: its other two clique
  // vertices see both ends, other vertices see fewer.
  const Vertex pair[] = {spread[0][0], spread[0][1]};
  const auto edge = clique_nexus(x.g, pair);
  CHECK_FALSE(edge.nexus.has_value());
  CHECK(edge.nonconstant.has_value());

  const Vertex one[] = {0};
  CHECK_ERROR(clique_nexus(x.g, one), ErrorCode::InvalidArgument);
  const auto far = x.gp.encode({0, 1, x.gp.field().rho()});
  const Vertex not_clique[] = {0, far};
  CHECK_ERROR(clique_nexus(x.g, not_clique), ErrorCode::NotAClique);
  const auto k4 = to_graph(oracle::complete(4));
  const Vertex all[] = {0, 1, 2, 3};
  CHECK_ERROR(clique_nexus(k4, all), ErrorCode::NoOutsideVertices);
}

TEST_CASE("quotient matrix of the spread partition") {
  const auto x = make(1, 2, 7, Bijection::identity(2));
  const auto cell = canonical_spread(x.gp)[0];
  std::vector<Vertex> rest;
  for (Vertex v = 0; v < 28; ++v) {
    if (std::find(cell.begin(), cell.end(), v) == cell.end())
      rest.push_back(v);
  }
  const auto b = quotient_matrix(x.g, {cell, rest});
  CHECK(b.equitable);
  CHECK(b.entries[0][0] == Rational::make(3, 1));
  CHECK(b.entries[0][1] == Rational::make(6, 1));
  CHECK(b.entries[1][0] == Rational::make(1, 1));
  CHECK(b.entries[1][1] == Rational::make(8, 1));
  const auto [hi, lo] = eigenvalues_2x2(b);
  CHECK(hi == doctest::Approx(9.0).epsilon(1e-12));
  CHECK(lo == doctest::Approx(2.0).epsilon(1e-12));

  CHECK_ERROR(quotient_matrix(x.g, {cell}), ErrorCode::NotAPartition);
  CHECK_ERROR(quotient_matrix(x.g, {cell, cell}), ErrorCode::NotAPartition);
  // An unequitable partition reports averaged entries.
  const auto uneven = quotient_matrix(x.g, {{0}, [] {
                                              std::vector<Vertex> r;
                                              for (Vertex v = 1; v < 28; ++v)
                                                r.push_back(v);
                                              return r;
                                            }()});
  CHECK_FALSE(uneven.equitable);
  CHECK(uneven.entries[1][0] == Rational::make(9, 27));
}

TEST_CASE("rationals") {
  CHECK(Rational::make(6, -4) == Rational{-3, 2});
  CHECK(Rational::make(0, 5) == Rational{0, 1});
  CHECK(Rational::make(9, 3).to_string() == "3");
  CHECK(Rational::make(1, 3).to_string() == "1/3");
  CHECK_ERROR(Rational::make(1, 0), ErrorCode::InvalidArgument);
}

TEST_CASE("SRG parameters from a regular clique") {
  const auto p = srg_clique_parameters(3, 2);
  CHECK(p.n == 28);
  CHECK(p.k == 9);
  CHECK(p.lambda == 2);
  CHECK(p.mu == 3);
  CHECK((p.n - p.k - 1) * p.mu == p.k * (p.k - p.lambda - 1));
  const auto q = srg_clique_parameters(1, 1);
  CHECK(q.n == 4);
  CHECK(q.k == 2);
  CHECK(q.lambda == 0);
  CHECK(q.mu == 2);
  CHECK_ERROR(srg_clique_parameters(0, 1), ErrorCode::InvalidArgument);
  CHECK(srg_relations_hold(p));
  auto broken = p;
  broken.mu = 4;
  CHECK_FALSE(srg_relations_hold(broken));
  const auto [t1, t2] = srg_eigenvalues(3, 0, 1);
  CHECK(t1 == doctest::Approx(1.0));
  CHECK(t2 == doctest::Approx(-2.0));
}

TEST_CASE("local valency predictions") {
  const auto f = Field::create(7, 1);
  CyclotomicContext ctx(f, 3);
  const auto x1 = make(1, 2, 7, Bijection::identity(2));
  CHECK(predicted_local_valencies(x1.gp, x1.pi, ctx) == std::vector<std::uint32_t>(9, 2));
  // l = 2: the 7 vertices of S_0 see 6 others, the 6 of S_{g,pi} see 2.
  const auto x2 = make(2, 2, 7, Bijection::identity(2));
  std::vector<std::uint32_t> expected(6, 2);
  expected.insert(expected.end(), 7, 6);
  CHECK(predicted_local_valencies(x2.gp, x2.pi, ctx) == expected);
  CHECK(x2.g.neighbourhood_degree_multiset(0) == expected);
  CHECK_FALSE(check_edge_regular(x2.g).ok());
}

TEST_CASE("property: predicted local valencies match measured neighbourhoods") {
  struct Case {
    std::uint32_t l, m;
    std::uint64_t q;
    Bijection pi;
  };
  const std::vector<Case> cases{
      {1, 2, 13, Bijection::identity(2)},   {2, 2, 19, Bijection::parse(2, "2,0,1")},
      {3, 2, 13, Bijection::identity(2)},   {1, 3, 29, Bijection::of_variant(Variant::Psi1)},
      {2, 3, 43, Bijection::of_variant(Variant::Psi2)}, {1, 3, 29, Bijection::identity(3)},
      {1, 1, 5, Bijection::identity(1)},    {2, 2, 25, Bijection::identity(2)}};
  for (const auto& c : cases) {
    const auto x = make(c.l, c.m, c.q, c.pi);
    CyclotomicContext ctx(x.gp.field_ptr(), x.gp.n());
    const auto predicted = predicted_local_valencies(x.gp, x.pi, ctx);
    for (Vertex v : sample_vertices(x.g.order(), 10))
      CHECK(x.g.neighbourhood_degree_multiset(v) == predicted);
  }
}

TEST_CASE("mu predictions at witnesses (0, g, rho)") {
  const auto x = make(1, 2, 7, Bijection::identity(2));
  CyclotomicContext ctx(x.gp.field_ptr(), 3);
  CHECK(predicted_mu_witness(x.gp, x.pi, ctx, 1) == 2);
  CHECK_ERROR(predicted_mu_witness(x.gp, x.pi, ctx, 2), ErrorCode::HypothesisViolated);

  // Under (x2,x1,x0) storage Psi1 sends (1,0,0) to 1, so (0,(1,0,0),rho)
  // is itself a neighbour of the identity and cannot serve as a witness.
  const auto y = make(1, 3, 29, Bijection::of_variant(Variant::Psi1));
  CyclotomicContext ctx7(y.gp.field_ptr(), 7);
  CHECK_ERROR(predicted_mu_witness(y.gp, y.pi, ctx7, 4), ErrorCode::HypothesisViolated);
  CHECK(y.g.adjacent(0, y.gp.encode({0, 4, y.gp.field().rho()})));

  for (const auto& [l, m, q, pi] :
       {std::tuple{1u, 2u, 7ULL, Bijection::identity(2)}, {1u, 2u, 13ULL, Bijection::identity(2)},
        {2u, 2u, 19ULL, Bijection::parse(2, "1,2,0")}, {3u, 2u, 7ULL, Bijection::identity(2)},
        {1u, 3u, 29ULL, Bijection::of_variant(Variant::Psi1)},
        {1u, 3u, 43ULL, Bijection::of_variant(Variant::Psi2)},
        {2u, 3u, 71ULL, Bijection::of_variant(Variant::Psi2)}}) {
    const auto z = make(l, m, q, pi);
    CyclotomicContext c(z.gp.field_ptr(), z.gp.n());
    for (BitVector g = 1; g <= z.gp.n(); ++g) {
      const Vertex v = z.gp.encode({0, g, z.gp.field().rho()});
      if (z.pi(g) % z.gp.n() == 1 % z.gp.n()) {
        CHECK(z.g.adjacent(0, v));
        continue;
      }
      CHECK(predicted_mu_witness(z.gp, z.pi, c, g) == z.g.common_neighbours(0, v));
    }
  }
}

TEST_CASE("certificates") {
  const auto x = make(1, 2, 7, Bijection::identity(2));
  const auto cert = assemble_certificate(x.gp, x.pi, Variant::None, x.g);
  CHECK(cert.passed());
  CHECK(cert.first_failure() == nullptr);
  CHECK(cert.n == 28);
  CHECK(cert.k == 9u);
  CHECK(cert.lambda == 2u);
  CHECK(cert.spread.count == 7);
  CHECK(cert.spread.order == 4);
  CHECK(cert.spread.nexus == 1u);
  REQUIRE(cert.srg.has_value());
  CHECK(cert.srg->kind == SrgVerdictKind::NotSrg);

  const auto doc = nlohmann::json::parse(to_json(cert));
  CHECK(doc["N"] == 28);
  CHECK(doc["k"] == 9);
  CHECK(doc["lambda"] == 2);
  CHECK(doc["rho"] == 3);
  CHECK(doc["variant"].is_null());
  CHECK(doc["pi"] == nlohmann::json::array({0, 1, 2}));
  CHECK(doc["srg"]["verdict"] == "NotSRG");
  CHECK(doc["spread"]["nexus"] == 1);
  for (const auto& check : doc["checks"])
    CHECK(check["pass"] == true);

  const auto bad = make(2, 2, 7, Bijection::identity(2));
  const auto failed = assemble_certificate(bad.gp, bad.pi, Variant::None, bad.g);
  CHECK_FALSE(failed.passed());
  REQUIRE(failed.first_failure() != nullptr);
  CHECK(failed.first_failure()->name == "edge_regular");
  CHECK(nlohmann::json::parse(to_json(failed))["srg"]["verdict"] == "Unchecked");

  const auto y = make(1, 3, 29, Bijection::of_variant(Variant::Psi1));
  const auto cert3 =
      assemble_certificate(y.gp, y.pi, Variant::Psi1, y.g, {SrgScan::FromVertexZero, 10});
  CHECK(cert3.passed());
  CHECK(nlohmann::json::parse(to_json(cert3))["variant"] == "psi1");
}

TEST_CASE("sampled vertices") {
  CHECK(sample_vertices(28, 10).size() == 10);
  CHECK(sample_vertices(28, 10).front() == 0);
  CHECK(sample_vertices(5, 10).size() == 5);
}
