// Copyright 2026 The ergcert Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef ERGCERT_CORE_SEARCH_HPP
#define ERGCERT_CORE_SEARCH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "core/certify.hpp"
#include "core/construction.hpp"
#include "core/fields.hpp"

namespace ergc {

/// A field q = 1 (mod 6) with c = c^3_q(1,2) odd, and the edge-regular
/// parameters (4lq, 4l-2+q, 4l-2) for l = (c+1)/2.
struct SearchRecordM2 {
  std::uint32_t p = 0;
  std::uint32_t a = 0;
  std::uint64_t q = 0;
  std::uint64_t ord2_n = 0;      // order of 2 mod p
  std::uint64_t exp_order_e = 0; // order of p mod 3n
  std::uint64_t c = 0;
  std::uint64_t l = 0;
  ErgParams params;
  bool hypotheses_hold = false; // e > 1 and a != 0 (mod e)
};

struct ScanM2 {
  std::uint32_t p = 0;
  std::uint32_t a = 0;
  std::uint64_t q = 0;
  std::uint64_t c = 0;
};

struct SearchM2Result {
  std::vector<ScanM2> scanned;
  std::vector<SearchRecordM2> records;
};

/// Every prime power q <= q_max with q = 1 (mod 6), ascending. Throws
/// std::logic_error if the sufficient parity condition holds for some q
/// whose computed c is even.
SearchM2Result search_m2(std::uint64_t q_max);

/// A field q = 1 (mod 14) and generator rho for which the variant's
/// number c (c^7_q(1,5) for psi1, c^7_q(1,3) for psi2) is 1 (mod 4);
/// parameters (8lq, 8l-2+q, 8l-2) with l = (3c+1)/4.
struct SearchRecordM3 {
  std::uint32_t p = 0;
  std::uint32_t a = 0;
  std::uint64_t q = 0;
  FieldElement rho;
  std::uint64_t rho_exponent = 1; // rho = pinned^rho_exponent
  std::uint64_t c15 = 0;
  std::uint64_t c13 = 0;
  Variant variant = Variant::Psi1;
  std::uint64_t c = 0;
  std::uint64_t l = 0;
  ErgParams params;
};

struct ScanM3 {
  std::uint32_t p = 0;
  std::uint32_t a = 0;
  std::uint64_t q = 0;
  FieldElement rho;
  std::uint64_t rho_exponent = 1;
  std::uint64_t c15 = 0;
  std::uint64_t c13 = 0;
};

struct SearchM3Result {
  std::vector<ScanM3> scanned;
  std::vector<SearchRecordM3> records;
};

/// Scans q = 1 (mod 14), q <= q_max, ascending. By default only the
/// pinned primitive element; with all_generators, one generator per
/// relabelling of the seven classes (rho^k for the least admissible k in
/// each unit residue class mod 7).
SearchM3Result search_m3(std::uint64_t q_max, bool all_generators = false);

std::string format_record(const SearchRecordM2& r);
std::string format_record(const SearchRecordM3& r);
std::string format_scan(const ScanM2& s);
std::string format_scan(const ScanM3& s);

} // namespace ergc

#endif
