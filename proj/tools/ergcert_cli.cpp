// Copyright 2026 The ergcert Authors
// SPDX-License-Identifier: Apache-2.0

// Command-line front end. Talks to the library only through ergcert.h.
//
//   ergcert search   --m 2 --q-max 200
//   ergcert build    --m 2 --l 1 --q 7 --pi 0,1,2
//   ergcert certify  --m 2 --l 1 --q 7 --pi 0,1,2 --out cert.json
//   ergcert export   --m 2 --l 1 --q 7 --format dimacs --out x1.dimacs
//   ergcert cyclotab --q 7 --n 3
//
// Exit codes: 0 success or PASS, 1 failing certificate, 2 usage or
// parameter error.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ergcert/ergcert.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct CommandConfig {
  std::uint32_t m = 0;
  std::uint32_t l = 0;
  std::uint64_t q = 0;
  std::uint32_t p = 0;
  std::uint32_t a = 0;
  std::string pi;
  std::string variant;
  std::uint64_t q_max = 0;
  std::uint32_t n = 0;
  std::string out;
  std::string format = "dimacs";
  std::string scan = "auto";
  bool report = false;
  bool all_generators = false;
};

struct ParamError {
  std::string message;
};

struct FreeString {
  void operator()(char* s) const { ergc_string_free(s); }
};
using OwnedString = std::unique_ptr<char, FreeString>;

struct ParamsDeleter {
  void operator()(ergc_params* p) const { ergc_params_destroy(p); }
};
struct GraphDeleter {
  void operator()(ergc_graph* g) const { ergc_graph_destroy(g); }
};
struct CertDeleter {
  void operator()(ergc_certificate* c) const { ergc_certificate_destroy(c); }
};
struct FieldDeleter {
  void operator()(ergc_field* f) const { ergc_field_destroy(f); }
};
struct CycloDeleter {
  void operator()(ergc_cyclo* c) const { ergc_cyclo_destroy(c); }
};

void check(ergc_status status) {
  if (status != ERGC_OK)
    throw ParamError{std::string(ergc_status_string(status)) + ": " + ergc_last_error()};
}

std::vector<std::uint32_t> parse_pi(const std::string& text) {
  std::vector<std::uint32_t> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const std::string token = text.substr(start, comma - start);
    if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos)
      throw ParamError{"bad --pi entry '" + token + "'"};
    out.push_back(static_cast<std::uint32_t>(std::stoul(token)));
    if (comma == std::string::npos)
      break;
    start = comma + 1;
  }
  return out;
}

std::unique_ptr<ergc_params, ParamsDeleter> make_params(const CommandConfig& cfg) {
  if (cfg.m == 0)
    throw ParamError{"--m is required"};
  if (!cfg.variant.empty() && cfg.m != 3)
    throw ParamError{"--variant is only valid with --m 3"};
  std::vector<std::uint32_t> pi;
  if (!cfg.pi.empty())
    pi = parse_pi(cfg.pi);

  ergc_params_spec spec{};
  spec.m = cfg.m;
  spec.l = cfg.l;
  spec.q = cfg.q;
  spec.p = cfg.p;
  spec.a = cfg.a;
  spec.pi = pi.empty() ? nullptr : pi.data();
  spec.pi_len = pi.size();
  spec.variant = cfg.variant == "psi1"   ? ERGC_VARIANT_PSI1
                 : cfg.variant == "psi2" ? ERGC_VARIANT_PSI2
                                         : ERGC_VARIANT_NONE;
  ergc_params* raw = nullptr;
  check(ergc_params_create(&spec, &raw));
  return std::unique_ptr<ergc_params, ParamsDeleter>(raw);
}

std::unique_ptr<ergc_graph, GraphDeleter> make_graph(const ergc_params* params) {
  ergc_graph* raw = nullptr;
  check(ergc_graph_build(params, &raw));
  return std::unique_ptr<ergc_graph, GraphDeleter>(raw);
}

void write_text(const std::string& path, const char* text) {
  if (path.empty()) {
    std::fputs(text, stdout);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  file << text;
  if (!file)
    throw ParamError{"cannot write " + path};
}

int run_search(const CommandConfig& cfg) {
  if (cfg.m != 2 && cfg.m != 3)
    throw ParamError{"search needs --m 2 or --m 3"};
  unsigned flags = 0;
  if (cfg.report)
    flags |= ERGC_SEARCH_REPORT;
  if (cfg.all_generators)
    flags |= ERGC_SEARCH_ALL_GENERATORS;
  char* raw = nullptr;
  check(ergc_search_text(cfg.m, cfg.q_max, flags, &raw));
  OwnedString text(raw);
  write_text(cfg.out, text.get());
  return kExitPass;
}

int run_build(const CommandConfig& cfg) {
  auto params = make_params(cfg);
  auto graph = make_graph(params.get());
  std::uint32_t k = 0;
  check(ergc_graph_degree(graph.get(), 0, &k));
  std::printf("N=%llu M=%llu k=%u l=%u\n",
              static_cast<unsigned long long>(ergc_graph_order(graph.get())),
              static_cast<unsigned long long>(ergc_graph_edge_count(graph.get())), k,
              ergc_params_l(params.get()));
  return kExitPass;
}

int run_certify(const CommandConfig& cfg) {
  auto params = make_params(cfg);
  auto graph = make_graph(params.get());
  const std::map<std::string, ergc_srg_scan> scans{{"auto", ERGC_SCAN_AUTO},
                                                   {"exhaustive", ERGC_SCAN_EXHAUSTIVE},
                                                   {"vertex0", ERGC_SCAN_FROM_VERTEX_ZERO}};
  ergc_certificate* raw_cert = nullptr;
  check(ergc_certify(params.get(), graph.get(), scans.at(cfg.scan), &raw_cert));
  std::unique_ptr<ergc_certificate, CertDeleter> cert(raw_cert);

  char* raw_json = nullptr;
  check(ergc_certificate_json(cert.get(), &raw_json));
  OwnedString json(raw_json);
  write_text(cfg.out, json.get());

  const bool passed = ergc_certificate_passed(cert.get()) != 0;
  const std::string summary =
      passed ? "PASS" : std::string("FAIL ") + ergc_certificate_first_failure(cert.get());
  // Keep stdout valid JSON when the certificate goes there.
  std::fprintf(cfg.out.empty() ? stderr : stdout, "%s\n", summary.c_str());
  return passed ? kExitPass : kExitFail;
}

int run_export(const CommandConfig& cfg) {
  auto params = make_params(cfg);
  auto graph = make_graph(params.get());
  const ergc_format format = cfg.format == "edges" ? ERGC_FORMAT_EDGES : ERGC_FORMAT_DIMACS;
  if (cfg.out.empty()) {
    char* raw = nullptr;
    check(ergc_graph_export_text(graph.get(), format, &raw));
    OwnedString text(raw);
    std::fputs(text.get(), stdout);
  } else {
    check(ergc_graph_export_file(graph.get(), format, cfg.out.c_str()));
  }
  return kExitPass;
}

int run_cyclotab(const CommandConfig& cfg) {
  if (cfg.n == 0)
    throw ParamError{"--n is required"};
  ergc_field* raw_field = nullptr;
  if (cfg.q != 0)
    check(ergc_field_create_order(cfg.q, &raw_field));
  else if (cfg.p != 0)
    check(ergc_field_create(cfg.p, cfg.a == 0 ? 1 : cfg.a, &raw_field));
  else
    throw ParamError{"give --q, or --p and --a"};
  std::unique_ptr<ergc_field, FieldDeleter> field(raw_field);

  ergc_cyclo* raw_ctx = nullptr;
  check(ergc_cyclo_create(field.get(), cfg.n, &raw_ctx));
  std::unique_ptr<ergc_cyclo, CycloDeleter> ctx(raw_ctx);
  char* raw = nullptr;
  check(ergc_cyclo_table_text(ctx.get(), &raw));
  OwnedString text(raw);
  write_text(cfg.out, text.get());
  return kExitPass;
}

void add_field_options(CLI::App* sub, CommandConfig& cfg) {
  sub->add_option("--q", cfg.q, "Field order (a prime power)");
  sub->add_option("--p", cfg.p, "Field characteristic");
  sub->add_option("--a", cfg.a, "Field exponent");
}

void add_construction_options(CLI::App* sub, CommandConfig& cfg) {
  sub->add_option("--m", cfg.m, "Dimension of the Z_2^m factor")->required();
  sub->add_option("--l", cfg.l, "Order of the Z_l factor (derived from c when omitted)");
  add_field_options(sub, cfg);
  sub->add_option("--pi", cfg.pi, "Bijection as a comma list over vectors 1..2^m-1");
  sub->add_option("--variant", cfg.variant, "psi1 or psi2 (m = 3 only)")
      ->check(CLI::IsMember({"psi1", "psi2"}));
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Edge-regular Cayley graphs with regular cliques: search, build, certify"};
  app.require_subcommand(1);
  CommandConfig cfg;

  auto* search = app.add_subcommand("search", "Scan prime powers for admissible parameters");
  search->add_option("--m", cfg.m, "2 or 3")->required();
  search->add_option("--q-max", cfg.q_max, "Largest field order to scan")->required();
  search->add_flag("--report", cfg.report, "Also print every computed cyclotomic number");
  search->add_flag("--all-generators", cfg.all_generators,
                   "m = 3: try every relabelling of the primitive element");
  search->add_option("--out", cfg.out, "Output file (default stdout)");

  auto* build = app.add_subcommand("build", "Build the Cayley graph and print its size");
  add_construction_options(build, cfg);

  auto* certify = app.add_subcommand("certify", "Build, verify and write a JSON certificate");
  add_construction_options(certify, cfg);
  certify->add_option("--out", cfg.out, "Certificate path (default stdout)");
  certify->add_option("--scan", cfg.scan, "Non-adjacent pair scan: auto, exhaustive, vertex0")
      ->check(CLI::IsMember({"auto", "exhaustive", "vertex0"}));

  auto* exporter = app.add_subcommand("export", "Write the graph as DIMACS or an edge list");
  add_construction_options(exporter, cfg);
  exporter->add_option("--format", cfg.format, "dimacs or edges")
      ->check(CLI::IsMember({"dimacs", "edges"}));
  exporter->add_option("--out", cfg.out, "Output file (default stdout)");

  auto* cyclotab = app.add_subcommand("cyclotab", "Print the n x n cyclotomic number table");
  add_field_options(cyclotab, cfg);
  cyclotab->add_option("--n", cfg.n, "Order of the cyclotomic classes")->required();
  cyclotab->add_option("--out", cfg.out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*search)
      return run_search(cfg);
    if (*build)
      return run_build(cfg);
    if (*certify)
      return run_certify(cfg);
    if (*exporter)
      return run_export(cfg);
    if (*cyclotab)
      return run_cyclotab(cfg);
  } catch (const ParamError& e) {
    std::fprintf(stderr, "error: %s\n", e.message.c_str());
    return kExitUsage;
  }
  return kExitUsage;
}
