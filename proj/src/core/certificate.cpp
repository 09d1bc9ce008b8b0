// Copyright 2026 The ergcert Authors
// SPDX-License-Identifier: Apache-2.0

#include "core/certificate.hpp"

#include <cmath>
#include <sstream>

#include "core/cyclotomy.hpp"
#include "core/error.hpp"
#include "json.hpp"

namespace ergc {

bool Certificate::passed() const noexcept { return !checks.empty() && first_failure() == nullptr; }

const Check* Certificate::first_failure() const noexcept {
  for (const auto& c : checks) {
    if (!c.pass)
      return &c;
  }
  return nullptr;
}

std::vector<Vertex> sample_vertices(std::size_t order, std::size_t count) {
  std::vector<Vertex> out;
  if (count >= order) {
    for (std::size_t v = 0; v < order; ++v)
      out.push_back(static_cast<Vertex>(v));
    return out;
  }
  for (std::size_t i = 0; i < count; ++i)
    out.push_back(static_cast<Vertex>(i * order / count));
  return out;
}

namespace {

std::string join(const std::vector<std::uint32_t>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i)
      out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

std::string params_string(std::uint64_t n, std::uint64_t k, std::uint64_t lambda) {
  return "(" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(lambda) + ")";
}

struct MuComparison {
  BitVector g = 0;
  std::uint64_t predicted = 0;
  std::uint32_t measured = 0;
};

} // namespace

Certificate assemble_certificate(const GroupParams& gp, const Bijection& pi, Variant variant,
                                 const Graph& g, const CertifyOptions& options) {
  Certificate cert;
  const Field& field = gp.field();
  cert.m = gp.m();
  cert.l = gp.l();
  cert.p = field.p();
  cert.a = field.a();
  cert.q = field.q();
  cert.modulus = field.spec().modulus();
  cert.rho = field.rho().value;
  cert.pi = pi.table();
  cert.variant = variant;
  cert.n = g.order();

  const std::uint32_t clique_order = gp.two_m() * gp.l();
  const std::uint64_t expected_k = clique_order - 2 + gp.q();
  const std::uint64_t expected_lambda = clique_order - 2;

  // Edge-regularity.
  if (auto reg = is_regular(g); reg.regular())
    cert.k = *reg.degree;
  const EdgeRegularity er = check_edge_regular(g);
  cert.edge_regular = er.ok();
  if (er.ok()) {
    cert.lambda = er.params->lambda;
    cert.checks.push_back({"edge_regular", true,
                           params_string(er.params->n, er.params->k, er.params->lambda)});
  } else {
    cert.checks.push_back({"edge_regular", false, er.reason});
  }

  // Predicted parameters.
  {
    const std::string expected = params_string(gp.order(), expected_k, expected_lambda);
    const bool pass = er.ok() && er.params->n == gp.order() && er.params->k == expected_k &&
                      er.params->lambda == expected_lambda;
    cert.checks.push_back({"parameters", pass,
                           "expected " + expected + (er.ok() ? ", measured " +
                               params_string(er.params->n, er.params->k, er.params->lambda)
                                                             : ", graph not edge-regular")});
  }

  // Spread of cliques C_f.
  {
    const auto cells = canonical_spread(gp);
    cert.spread.count = cells.size();
    cert.spread.order = cells.empty() ? 0 : cells.front().size();
    std::string detail;
    bool pass = cells.size() == gp.q();
    std::optional<std::uint32_t> nexus;
    bool constant = true;
    for (std::size_t f = 0; f < cells.size() && detail.empty(); ++f) {
      try {
        const CliqueReport report = clique_nexus(g, cells[f]);
        if (!report.nexus) {
          detail = "cell " + std::to_string(f) + " meets outside vertices unevenly";
          constant = false;
        } else if (!nexus) {
          nexus = report.nexus;
        } else if (*nexus != *report.nexus) {
          detail = "cells have different nexus values";
          constant = false;
        }
      } catch (const Error& e) {
        detail = "cell " + std::to_string(f) + ": " + e.what();
        constant = false;
      }
    }
    if (constant)
      cert.spread.nexus = nexus;
    pass = pass && constant && nexus == 1U && cert.spread.order == clique_order;
    if (detail.empty()) {
      detail = std::to_string(cert.spread.count) + " cliques of order " +
               std::to_string(cert.spread.order) + ", nexus " +
               (nexus ? std::to_string(*nexus) : std::string("none"));
    }
    cert.checks.push_back({"spread", pass, detail});
  }

  // Quotient matrix of {C_0, rest}.
  {
    const auto cells = canonical_spread(gp);
    std::vector<Vertex> rest;
    for (std::size_t f = 1; f < cells.size(); ++f)
      rest.insert(rest.end(), cells[f].begin(), cells[f].end());
    bool pass = false;
    std::string detail;
    if (!cert.k) {
      detail = "graph not regular";
    } else {
      const QuotientMatrix b = quotient_matrix(g, {cells.front(), rest});
      const std::int64_t k = *cert.k;
      const std::int64_t s = clique_order - 1;
      const bool shape = b.entries[0][0] == Rational::make(s, 1) &&
                         b.entries[0][1] == Rational::make(k - s, 1) &&
                         b.entries[1][0] == Rational::make(1, 1) &&
                         b.entries[1][1] == Rational::make(k - 1, 1);
      const auto [top, bottom] = eigenvalues_2x2(b);
      const bool eigen = std::abs(top - static_cast<double>(k)) <= 1e-9 &&
                         std::abs(bottom - static_cast<double>(s - 1)) <= 1e-9;
      pass = b.equitable && shape && eigen;
      std::ostringstream os;
      os << "B=[[" << b.entries[0][0].to_string() << "," << b.entries[0][1].to_string() << "],["
         << b.entries[1][0].to_string() << "," << b.entries[1][1].to_string() << "]]"
         << (b.equitable ? " equitable" : " not equitable") << ", eigenvalues " << top << ","
         << bottom;
      detail = os.str();
    }
    cert.checks.push_back({"quotient_matrix", pass, detail});
  }

  // Local valencies and mu witnesses against the cyclotomic formulas.
  std::optional<CyclotomicContext> ctx;
  std::string ctx_error;
  try {
    ctx.emplace(gp.field_ptr(), gp.n());
  } catch (const Error& e) {
    ctx_error = e.what();
  }

  {
    bool pass = false;
    std::string detail;
    if (!ctx) {
      detail = ctx_error;
    } else {
      const auto predicted = predicted_local_valencies(gp, pi, *ctx);
      pass = true;
      const auto samples = sample_vertices(g.order(), options.valency_samples);
      for (Vertex v : samples) {
        if (g.neighbourhood_degree_multiset(v) != predicted) {
          pass = false;
          detail = "vertex " + std::to_string(v) + " differs from prediction";
          break;
        }
      }
      if (pass) {
        std::vector<std::uint32_t> distinct = predicted;
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        detail = std::to_string(samples.size()) + " sampled vertices match predicted values {" +
                 join(distinct) + "}";
      }
    }
    cert.checks.push_back({"local_valencies", pass, detail});
  }

  std::vector<MuComparison> mu_comparisons;
  {
    bool pass = false;
    std::string detail;
    if (!ctx) {
      detail = ctx_error;
    } else {
      pass = true;
      for (BitVector h = 1; h <= gp.n(); ++h) {
        if (pi(h) % gp.n() == 1 % gp.n())
          continue;
        const Vertex w = gp.encode({0, h, field.rho()});
        MuComparison cmp{h, predicted_mu_witness(gp, pi, *ctx, h), g.common_neighbours(0, w)};
        pass = pass && cmp.predicted == cmp.measured;
        if (!detail.empty())
          detail += "; ";
        detail += "g=" + std::to_string(h) + " predicted " + std::to_string(cmp.predicted) +
                  " measured " + std::to_string(cmp.measured);
        mu_comparisons.push_back(cmp);
      }
      if (mu_comparisons.empty())
        detail = "no admissible witness";
    }
    cert.checks.push_back({"mu_witness", pass, detail});
  }

  // Strong regularity.
  if (er.ok()) {
    cert.srg = check_strongly_regular(g, options.scan);
    const SrgVerdict& v = *cert.srg;
    std::string detail = std::string(to_string(v.kind)) + " via " +
                         std::string(to_string(v.strategy)) + " scan, mu values {" +
                         join(v.mu_values) + "}";
    cert.checks.push_back({"not_strongly_regular", v.kind == SrgVerdictKind::NotSrg, detail});
  } else {
    cert.checks.push_back({"not_strongly_regular", false, "graph not edge-regular"});
  }

  // An SRG with a 1-regular clique of order s+1 would have mu = t+1 with
  // t = k/s - 1; a witnessed mu different from t+1 rules that out.
  {
    bool pass = false;
    std::string detail;
    const std::uint64_t s = clique_order - 1;
    if (!er.ok()) {
      detail = "graph not edge-regular";
    } else if (s == 0 || er.params->k % s != 0 || er.params->k / s < 2) {
      pass = true;
      detail = "k = " + std::to_string(er.params->k) + " admits no integer t with k = s(t+1), s = " +
               std::to_string(s);
    } else {
      const std::uint64_t t = er.params->k / s - 1;
      const SrgParams forced =
          srg_clique_parameters(static_cast<std::uint32_t>(s), static_cast<std::uint32_t>(t));
      detail = "t = " + std::to_string(t) + " forces mu = " + std::to_string(forced.mu) +
               " and N = " + std::to_string(forced.n);
      if (forced.n != er.params->n)
        pass = true;
      for (const auto& cmp : mu_comparisons) {
        if (cmp.measured != forced.mu) {
          pass = true;
          detail += "; witness g=" + std::to_string(cmp.g) + " has mu = " +
                    std::to_string(cmp.measured);
          break;
        }
      }
    }
    cert.checks.push_back({"srg_parameter_contradiction", pass, detail});
  }

  // A non-SRG edge-regular graph with a regular clique has one of order >= 4.
  {
    const bool applies = cert.srg && cert.srg->kind == SrgVerdictKind::NotSrg &&
                         cert.spread.nexus && *cert.spread.nexus > 0;
    if (applies) {
      cert.checks.push_back({"clique_order_bound", cert.spread.order >= 4,
                             "regular clique order " + std::to_string(cert.spread.order)});
    } else {
      cert.checks.push_back({"clique_order_bound", true, "not applicable"});
    }
  }

  return cert;
}

std::string to_json(const Certificate& cert) {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["m"] = cert.m;
  doc["l"] = cert.l;
  doc["p"] = cert.p;
  doc["a"] = cert.a;
  doc["q"] = cert.q;
  doc["modulus"] = cert.modulus;
  doc["rho"] = cert.rho;
  doc["pi"] = cert.pi;
  doc["variant"] = cert.variant == Variant::None ? ordered_json(nullptr)
                                                 : ordered_json(std::string(to_string(cert.variant)));
  doc["N"] = cert.n;
  doc["k"] = cert.k ? ordered_json(*cert.k) : ordered_json(nullptr);
  doc["lambda"] = cert.lambda ? ordered_json(*cert.lambda) : ordered_json(nullptr);
  doc["edge_regular"] = cert.edge_regular;

  ordered_json spread;
  spread["count"] = cert.spread.count;
  spread["order"] = cert.spread.order;
  spread["nexus"] = cert.spread.nexus ? ordered_json(*cert.spread.nexus) : ordered_json(nullptr);
  doc["spread"] = spread;

  ordered_json srg;
  if (cert.srg) {
    srg["verdict"] = std::string(to_string(cert.srg->kind));
    srg["mu_values"] = cert.srg->mu_values;
    ordered_json witnesses = ordered_json::array();
    for (const auto& w : cert.srg->witnesses)
      witnesses.push_back(ordered_json{{"u", w.u}, {"v", w.v}, {"mu", w.mu}});
    srg["witnesses"] = witnesses;
    srg["strategy"] = std::string(to_string(cert.srg->strategy));
  } else {
    srg["verdict"] = "Unchecked";
    srg["mu_values"] = ordered_json::array();
    srg["witnesses"] = ordered_json::array();
  }
  doc["srg"] = srg;

  ordered_json checks = ordered_json::array();
  for (const auto& c : cert.checks)
    checks.push_back(ordered_json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  doc["checks"] = checks;
  return doc.dump(2) + "\n";
}

} // namespace ergc
