// Copyright 2026 The ergcert Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef ERGCERT_CORE_CERTIFICATE_HPP
#define ERGCERT_CORE_CERTIFICATE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "core/certify.hpp"
#include "core/construction.hpp"
#include "core/graph.hpp"

namespace ergc {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SpreadSummary {
  std::uint64_t count = 0;
  std::uint64_t order = 0;
  std::optional<std::uint32_t> nexus;
};

struct Certificate {
  std::uint32_t m = 0;
  std::uint32_t l = 0;
  std::uint32_t p = 0;
  std::uint32_t a = 0;
  std::uint64_t q = 0;
  std::vector<std::uint32_t> modulus;
  std::uint32_t rho = 0;
  std::vector<std::uint32_t> pi;
  Variant variant = Variant::None;

  std::uint64_t n = 0;
  std::optional<std::uint32_t> k;
  std::optional<std::uint32_t> lambda;
  bool edge_regular = false;
  SpreadSummary spread;
  std::optional<SrgVerdict> srg;
  std::vector<Check> checks;

  bool passed() const noexcept;
  /// nullptr when every check passed.
  const Check* first_failure() const noexcept;
};

struct CertifyOptions {
  SrgScan scan = SrgScan::Auto;
  std::size_t valency_samples = 10;
};

/// Vertex 0 plus evenly strided vertices, `count` in total (or all of them).
std::vector<Vertex> sample_vertices(std::size_t order, std::size_t count);

/// Runs every check on a graph built from (gp, pi). Failures are recorded
/// in the returned certificate, never thrown.
Certificate assemble_certificate(const GroupParams& gp, const Bijection& pi, Variant variant,
                                 const Graph& g, const CertifyOptions& options = {});

/// Single JSON document with a fixed key order.
std::string to_json(const Certificate& cert);

} // namespace ergc

#endif
