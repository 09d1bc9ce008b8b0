// Copyright 2026 The ergcert Authors
// SPDX-License-Identifier: Apache-2.0

#include "ergcert/ergcert.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <memory>
#include <new>
#include <sstream>
#include <string>

#include "core/certificate.hpp"
#include "core/construction.hpp"
#include "core/cyclotomy.hpp"
#include "core/error.hpp"
#include "core/fields.hpp"
#include "core/graph_io.hpp"
#include "core/numtheory.hpp"
#include "core/search.hpp"

struct ergc_field {
  std::shared_ptr<const ergc::Field> field;
};

struct ergc_cyclo {
  ergc::CyclotomicContext ctx;
};

struct ergc_params {
  ergc::GroupParams group;
  ergc::Bijection pi;
  ergc::Variant variant;
};

struct ergc_graph {
  ergc::Graph graph;
};

struct ergc_certificate {
  ergc::Certificate cert;
};

namespace {

thread_local std::string last_error;

ergc_status map_code(ergc::ErrorCode code) {
  using ergc::ErrorCode;
  switch (code) {
  case ErrorCode::InvalidArgument: return ERGC_E_INVALID_ARGUMENT;
  case ErrorCode::NotPrime: return ERGC_E_NOT_PRIME;
  case ErrorCode::ExponentZero: return ERGC_E_EXPONENT_ZERO;
  case ErrorCode::NotPrimePower: return ERGC_E_NOT_PRIME_POWER;
  case ErrorCode::FieldTooLarge: return ERGC_E_FIELD_TOO_LARGE;
  case ErrorCode::ZeroHasNoLog: return ERGC_E_ZERO_HAS_NO_LOG;
  case ErrorCode::IndexOutOfRange: return ERGC_E_INDEX_OUT_OF_RANGE;
  case ErrorCode::BadCongruence: return ERGC_E_BAD_CONGRUENCE;
  case ErrorCode::WrongN: return ERGC_E_WRONG_N;
  case ErrorCode::NotCoprime: return ERGC_E_NOT_COPRIME;
  case ErrorCode::ZeroVector: return ERGC_E_ZERO_VECTOR;
  case ErrorCode::NotABijection: return ERGC_E_NOT_A_BIJECTION;
  case ErrorCode::AsymmetricGeneratingSet: return ERGC_E_ASYMMETRIC;
  case ErrorCode::SameVertex: return ERGC_E_SAME_VERTEX;
  case ErrorCode::EmptyGraph: return ERGC_E_EMPTY_GRAPH;
  case ErrorCode::NotEdgeRegular: return ERGC_E_NOT_EDGE_REGULAR;
  case ErrorCode::NotAClique: return ERGC_E_NOT_A_CLIQUE;
  case ErrorCode::NoOutsideVertices: return ERGC_E_NO_OUTSIDE_VERTICES;
  case ErrorCode::HypothesisViolated: return ERGC_E_HYPOTHESIS_VIOLATED;
  case ErrorCode::NotAPartition: return ERGC_E_NOT_A_PARTITION;
  case ErrorCode::Io: return ERGC_E_IO;
  case ErrorCode::Parse: return ERGC_E_PARSE;
  }
  return ERGC_E_INTERNAL;
}

ergc_status fail(ergc_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs body, translating exceptions into status codes.
template <class Body>
ergc_status guarded(Body&& body) noexcept {
  try {
    last_error.clear();
    return body();
  } catch (const ergc::Error& e) {
    return fail(map_code(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(ERGC_E_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(ERGC_E_INTERNAL, e.what());
  } catch (...) {
    return fail(ERGC_E_INTERNAL, "unknown error");
  }
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out)
    throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

ergc::Variant to_variant(ergc_variant v) {
  switch (v) {
  case ERGC_VARIANT_NONE: return ergc::Variant::None;
  case ERGC_VARIANT_PSI1: return ergc::Variant::Psi1;
  case ERGC_VARIANT_PSI2: return ergc::Variant::Psi2;
  }
  throw ergc::Error(ergc::ErrorCode::InvalidArgument, "unknown variant");
}

ergc::SrgScan to_scan(ergc_srg_scan s) {
  switch (s) {
  case ERGC_SCAN_AUTO: return ergc::SrgScan::Auto;
  case ERGC_SCAN_EXHAUSTIVE: return ergc::SrgScan::Exhaustive;
  case ERGC_SCAN_FROM_VERTEX_ZERO: return ergc::SrgScan::FromVertexZero;
  }
  throw ergc::Error(ergc::ErrorCode::InvalidArgument, "unknown scan strategy");
}

ergc::ExportFormat to_format(ergc_format f) {
  switch (f) {
  case ERGC_FORMAT_DIMACS: return ergc::ExportFormat::Dimacs;
  case ERGC_FORMAT_EDGES: return ergc::ExportFormat::Edges;
  }
  throw ergc::Error(ergc::ErrorCode::InvalidArgument, "unknown export format");
}

#define ERGC_REQUIRE(cond, msg)                                                                    \
  do {                                                                                             \
    if (!(cond))                                                                                   \
      return fail(ERGC_E_INVALID_ARGUMENT, msg);                                                   \
  } while (0)

std::shared_ptr<const ergc::Field> field_from_spec(const ergc_params_spec& spec) {
  using ergc::Error;
  using ergc::ErrorCode;
  if (spec.q != 0) {
    auto field = ergc::Field::create_of_order(spec.q);
    if ((spec.p != 0 && spec.p != field->p()) || (spec.a != 0 && spec.a != field->a()))
      throw Error(ErrorCode::InvalidArgument, "q disagrees with p and a");
    return field;
  }
  if (spec.p == 0)
    throw Error(ErrorCode::InvalidArgument, "give q, or p and a");
  return ergc::Field::create(spec.p, spec.a == 0 ? 1 : spec.a);
}

std::uint32_t derive_l(const std::shared_ptr<const ergc::Field>& field, std::uint32_t m,
                       ergc::Variant variant) {
  using ergc::Error;
  using ergc::ErrorCode;
  if (m == 2) {
    ergc::CyclotomicContext ctx(field, 3);
    const auto c = ctx.cyclotomic_number(1, 2);
    if (c % 2 == 0)
      throw Error(ErrorCode::HypothesisViolated,
                  "c^3_q(1,2) = " + std::to_string(c) + " is even; give l explicitly");
    return static_cast<std::uint32_t>((c + 1) / 2);
  }
  if (m == 3 && variant != ergc::Variant::None) {
    ergc::CyclotomicContext ctx(field, 7);
    const auto c = ctx.cyclotomic_number(1, variant == ergc::Variant::Psi1 ? 5 : 3);
    if (c % 4 != 1)
      throw Error(ErrorCode::HypothesisViolated,
                  "c = " + std::to_string(c) + " is not 1 mod 4; give l explicitly");
    return static_cast<std::uint32_t>((3 * c + 1) / 4);
  }
  throw Error(ErrorCode::InvalidArgument, "l is required");
}

} // namespace

extern "C" {

const char* ergc_version(void) { return "0.1.0"; }

const char* ergc_status_string(ergc_status status) {
  switch (status) {
  case ERGC_OK: return "ok";
  case ERGC_E_INVALID_ARGUMENT: return "invalid argument";
  case ERGC_E_NOT_PRIME: return "not prime";
  case ERGC_E_EXPONENT_ZERO: return "exponent zero";
  case ERGC_E_NOT_PRIME_POWER: return "not a prime power";
  case ERGC_E_FIELD_TOO_LARGE: return "field too large";
  case ERGC_E_ZERO_HAS_NO_LOG: return "zero has no logarithm";
  case ERGC_E_INDEX_OUT_OF_RANGE: return "index out of range";
  case ERGC_E_BAD_CONGRUENCE: return "bad congruence";
  case ERGC_E_WRONG_N: return "wrong n";
  case ERGC_E_NOT_COPRIME: return "not coprime";
  case ERGC_E_ZERO_VECTOR: return "zero vector";
  case ERGC_E_NOT_A_BIJECTION: return "not a bijection";
  case ERGC_E_ASYMMETRIC: return "asymmetric generating set";
  case ERGC_E_SAME_VERTEX: return "same vertex";
  case ERGC_E_EMPTY_GRAPH: return "empty graph";
  case ERGC_E_NOT_EDGE_REGULAR: return "not edge-regular";
  case ERGC_E_NOT_A_CLIQUE: return "not a clique";
  case ERGC_E_NO_OUTSIDE_VERTICES: return "no outside vertices";
  case ERGC_E_HYPOTHESIS_VIOLATED: return "hypothesis violated";
  case ERGC_E_NOT_A_PARTITION: return "not a partition";
  case ERGC_E_IO: return "i/o error";
  case ERGC_E_PARSE: return "parse error";
  case ERGC_E_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* ergc_last_error(void) { return last_error.c_str(); }

void ergc_string_free(char* s) { std::free(s); }

// ---- fields

ergc_status ergc_field_create(uint32_t p, uint32_t a, ergc_field** out) {
  ERGC_REQUIRE(out, "null output");
  return guarded([&] {
    *out = new ergc_field{ergc::Field::create(p, a)};
    return ERGC_OK;
  });
}

ergc_status ergc_field_create_order(uint64_t q, ergc_field** out) {
  ERGC_REQUIRE(out, "null output");
  return guarded([&] {
    *out = new ergc_field{ergc::Field::create_of_order(q)};
    return ERGC_OK;
  });
}

void ergc_field_destroy(ergc_field* field) { delete field; }

uint32_t ergc_field_order(const ergc_field* field) { return field ? field->field->q() : 0; }

uint32_t ergc_field_rho(const ergc_field* field) { return field ? field->field->rho().value : 0; }

ergc_status ergc_field_dlog(const ergc_field* field, uint32_t x, uint32_t* out) {
  ERGC_REQUIRE(field && out, "null argument");
  return guarded([&] {
    *out = field->field->dlog(field->field->spec().element(x));
    return ERGC_OK;
  });
}

ergc_status ergc_field_mul(const ergc_field* field, uint32_t x, uint32_t y, uint32_t* out) {
  ERGC_REQUIRE(field && out, "null argument");
  return guarded([&] {
    const auto& spec = field->field->spec();
    *out = field->field->mul(spec.element(x), spec.element(y)).value;
    return ERGC_OK;
  });
}

// ---- cyclotomy

ergc_status ergc_cyclo_create(const ergc_field* field, uint32_t n, ergc_cyclo** out) {
  ERGC_REQUIRE(field && out, "null argument");
  return guarded([&] {
    *out = new ergc_cyclo{ergc::CyclotomicContext(field->field, n)};
    return ERGC_OK;
  });
}

void ergc_cyclo_destroy(ergc_cyclo* ctx) { delete ctx; }

ergc_status ergc_cyclo_class_index(const ergc_cyclo* ctx, uint32_t x, uint32_t* out) {
  ERGC_REQUIRE(ctx && out, "null argument");
  return guarded([&] {
    *out = ctx->ctx.class_index(ctx->ctx.field().spec().element(x));
    return ERGC_OK;
  });
}

ergc_status ergc_cyclo_number(const ergc_cyclo* ctx, uint32_t a, uint32_t b, uint64_t* out) {
  ERGC_REQUIRE(ctx && out, "null argument");
  return guarded([&] {
    *out = ctx->ctx.cyclotomic_number(a, b);
    return ERGC_OK;
  });
}

ergc_status ergc_cyclo_table_text(const ergc_cyclo* ctx, char** out) {
  ERGC_REQUIRE(ctx && out, "null argument");
  return guarded([&] {
    std::ostringstream text;
    for (const auto& row : ctx->ctx.table()) {
      for (std::size_t b = 0; b < row.size(); ++b)
        text << (b ? " " : "") << row[b];
      text << '\n';
    }
    *out = duplicate(text.str());
    return ERGC_OK;
  });
}

// ---- number theory and searches

ergc_status ergc_multiplicative_order(uint64_t x, uint64_t modulus, uint64_t* out) {
  ERGC_REQUIRE(out, "null output");
  return guarded([&] {
    *out = ergc::multiplicative_order(x, modulus);
    return ERGC_OK;
  });
}

ergc_status ergc_corollary_orders(uint64_t p, uint64_t* n, uint64_t* e) {
  ERGC_REQUIRE(n && e, "null output");
  return guarded([&] {
    const auto orders = ergc::corollary_orders(p);
    *n = orders.n;
    *e = orders.e;
    return ERGC_OK;
  });
}

ergc_status ergc_search_text(uint32_t m, uint64_t q_max, unsigned flags, char** out) {
  ERGC_REQUIRE(out, "null output");
  ERGC_REQUIRE(m == 2 || m == 3, "search supports m = 2 and m = 3");
  ERGC_REQUIRE(q_max <= ergc::kMaxFieldOrder, "q_max exceeds the supported field size");
  return guarded([&] {
    std::string text;
    const bool report = (flags & ERGC_SEARCH_REPORT) != 0;
    if (m == 2) {
      const auto result = ergc::search_m2(q_max);
      if (report) {
        for (const auto& s : result.scanned)
          text += ergc::format_scan(s) + '\n';
      }
      for (const auto& r : result.records)
        text += ergc::format_record(r) + '\n';
    } else {
      const auto result = ergc::search_m3(q_max, (flags & ERGC_SEARCH_ALL_GENERATORS) != 0);
      if (report) {
        for (const auto& s : result.scanned)
          text += ergc::format_scan(s) + '\n';
      }
      for (const auto& r : result.records)
        text += ergc::format_record(r) + '\n';
    }
    *out = duplicate(text);
    return ERGC_OK;
  });
}

// ---- construction

ergc_status ergc_params_create(const ergc_params_spec* spec, ergc_params** out) {
  ERGC_REQUIRE(spec && out, "null argument");
  return guarded([&] {
    using ergc::Error;
    using ergc::ErrorCode;
    if (spec->m == 0 || spec->m > ergc::kMaxM)
      throw Error(ErrorCode::InvalidArgument, "m must lie in 1.." + std::to_string(ergc::kMaxM));
    const ergc::Variant variant = to_variant(spec->variant);
    if (variant != ergc::Variant::None && spec->m != 3)
      throw Error(ErrorCode::InvalidArgument, "a variant requires m = 3");

    auto field = field_from_spec(*spec);
    const std::uint32_t n = (1U << spec->m) - 1;
    if ((field->q() - 1) % (2 * n) != 0) {
      throw Error(ErrorCode::BadCongruence,
                  "q = " + std::to_string(field->q()) + " is not 1 mod " + std::to_string(2 * n) +
                      "; S(pi) would not be symmetric");
    }

    std::optional<ergc::Bijection> pi;
    if (spec->pi != nullptr && spec->pi_len > 0) {
      pi = ergc::Bijection::from_table(
          spec->m, std::vector<std::uint32_t>(spec->pi, spec->pi + spec->pi_len));
      if (variant != ergc::Variant::None &&
          pi->table() != ergc::Bijection::of_variant(variant).table())
        throw Error(ErrorCode::InvalidArgument, "pi disagrees with the variant");
    } else if (variant != ergc::Variant::None) {
      pi = ergc::Bijection::of_variant(variant);
    } else {
      pi = ergc::Bijection::identity(spec->m);
    }

    const std::uint32_t l = spec->l != 0 ? spec->l : derive_l(field, spec->m, variant);
    *out = new ergc_params{ergc::GroupParams(l, spec->m, field), *pi, variant};
    return ERGC_OK;
  });
}

void ergc_params_destroy(ergc_params* params) { delete params; }

uint32_t ergc_params_l(const ergc_params* params) { return params ? params->group.l() : 0; }

uint64_t ergc_params_order(const ergc_params* params) {
  return params ? params->group.order() : 0;
}

ergc_status ergc_params_encode(const ergc_params* params, uint32_t z, uint32_t v, uint32_t f,
                               uint32_t* out) {
  ERGC_REQUIRE(params && out, "null argument");
  return guarded([&] {
    const auto& gp = params->group;
    if (z >= gp.l() || v >= gp.two_m())
      throw ergc::Error(ergc::ErrorCode::IndexOutOfRange, "group element out of range");
    *out = gp.encode({z, v, gp.field().spec().element(f)});
    return ERGC_OK;
  });
}

ergc_status ergc_graph_build(const ergc_params* params, ergc_graph** out) {
  ERGC_REQUIRE(params && out, "null argument");
  return guarded([&] {
    const auto s = ergc::generating_set(params->group, params->pi);
    *out = new ergc_graph{ergc::build_cayley_graph(params->group, s)};
    return ERGC_OK;
  });
}

void ergc_graph_destroy(ergc_graph* graph) { delete graph; }

uint64_t ergc_graph_order(const ergc_graph* graph) { return graph ? graph->graph.order() : 0; }

uint64_t ergc_graph_edge_count(const ergc_graph* graph) {
  return graph ? graph->graph.edge_count() : 0;
}

ergc_status ergc_graph_degree(const ergc_graph* graph, uint32_t v, uint32_t* out) {
  ERGC_REQUIRE(graph && out, "null argument");
  return guarded([&] {
    *out = graph->graph.degree(v);
    return ERGC_OK;
  });
}

ergc_status ergc_graph_common_neighbours(const ergc_graph* graph, uint32_t u, uint32_t v,
                                         uint32_t* out) {
  ERGC_REQUIRE(graph && out, "null argument");
  return guarded([&] {
    *out = graph->graph.common_neighbours(u, v);
    return ERGC_OK;
  });
}

ergc_status ergc_graph_export_text(const ergc_graph* graph, ergc_format format, char** out) {
  ERGC_REQUIRE(graph && out, "null argument");
  return guarded([&] {
    *out = duplicate(ergc::graph_to_string(graph->graph, to_format(format)));
    return ERGC_OK;
  });
}

ergc_status ergc_graph_export_file(const ergc_graph* graph, ergc_format format, const char* path) {
  ERGC_REQUIRE(graph && path, "null argument");
  return guarded([&] {
    std::ofstream file(path, std::ios::binary);
    if (!file)
      throw ergc::Error(ergc::ErrorCode::Io, std::string("cannot open ") + path);
    ergc::write_graph(file, graph->graph, to_format(format));
    file.close();
    if (!file)
      throw ergc::Error(ergc::ErrorCode::Io, std::string("failed writing ") + path);
    return ERGC_OK;
  });
}

// ---- certification

ergc_status ergc_certify(const ergc_params* params, const ergc_graph* graph, ergc_srg_scan scan,
                         ergc_certificate** out) {
  ERGC_REQUIRE(params && graph && out, "null argument");
  return guarded([&] {
    if (graph->graph.order() != params->group.order())
      throw ergc::Error(ergc::ErrorCode::InvalidArgument, "graph was not built from these params");
    ergc::CertifyOptions options;
    options.scan = to_scan(scan);
    *out = new ergc_certificate{ergc::assemble_certificate(params->group, params->pi,
                                                           params->variant, graph->graph, options)};
    return ERGC_OK;
  });
}

void ergc_certificate_destroy(ergc_certificate* cert) { delete cert; }

int ergc_certificate_passed(const ergc_certificate* cert) {
  return cert && cert->cert.passed() ? 1 : 0;
}

const char* ergc_certificate_first_failure(const ergc_certificate* cert) {
  if (!cert)
    return nullptr;
  const auto* check = cert->cert.first_failure();
  return check ? check->name.c_str() : nullptr;
}

ergc_status ergc_certificate_json(const ergc_certificate* cert, char** out) {
  ERGC_REQUIRE(cert && out, "null argument");
  return guarded([&] {
    *out = duplicate(ergc::to_json(cert->cert));
    return ERGC_OK;
  });
}

} // extern "C"
