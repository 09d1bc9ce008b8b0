// Copyright 2026 The ergcert Authors
// SPDX-License-Identifier: Apache-2.0

#include "core/search.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "core/cyclotomy.hpp"
#include "core/numtheory.hpp"

namespace ergc {

SearchM2Result search_m2(std::uint64_t q_max) {
  SearchM2Result out;
  for (const auto& pp : prime_powers_up_to(q_max)) {
    if (pp.q % 6 != 1)
      continue;
    CyclotomicContext ctx(Field::create(pp.p, pp.a), 3);
    const std::uint64_t c = ctx.cyclotomic_number(1, 2);
    out.scanned.push_back({pp.p, pp.a, pp.q, c});

    const bool hypotheses = odd_parity_hypotheses_hold(pp);
    if (hypotheses && c % 2 == 0) {
      throw std::logic_error("parity condition holds for q = " + std::to_string(pp.q) +
                             " but c^3_q(1,2) = " + std::to_string(c) + " is even");
    }
    if (c % 2 == 0)
      continue;

    SearchRecordM2 r;
    r.p = pp.p;
    r.a = pp.a;
    r.q = pp.q;
    const auto orders = corollary_orders(pp.p);
    r.ord2_n = orders.n;
    r.exp_order_e = orders.e;
    r.c = c;
    r.l = (c + 1) / 2;
    r.params = {4 * r.l * r.q, static_cast<std::uint32_t>(4 * r.l - 2 + r.q),
                static_cast<std::uint32_t>(4 * r.l - 2)};
    r.hypotheses_hold = hypotheses;
    out.records.push_back(r);
  }
  return out;
}

namespace {

void emit_m3(SearchM3Result& out, const PrimePower& pp, const std::shared_ptr<const Field>& field,
             std::uint64_t exponent) {
  CyclotomicContext ctx(field, 7);
  ScanM3 s{pp.p, pp.a, pp.q, field->rho(), exponent, ctx.cyclotomic_number(1, 5),
           ctx.cyclotomic_number(1, 3)};
  out.scanned.push_back(s);
  for (Variant v : {Variant::Psi1, Variant::Psi2}) {
    const std::uint64_t c = v == Variant::Psi1 ? s.c15 : s.c13;
    if (c % 4 != 1)
      continue;
    SearchRecordM3 r;
    r.p = s.p;
    r.a = s.a;
    r.q = s.q;
    r.rho = s.rho;
    r.rho_exponent = s.rho_exponent;
    r.c15 = s.c15;
    r.c13 = s.c13;
    r.variant = v;
    r.c = c;
    r.l = (3 * c + 1) / 4;
    r.params = {8 * r.l * r.q, static_cast<std::uint32_t>(8 * r.l - 2 + r.q),
                static_cast<std::uint32_t>(8 * r.l - 2)};
    out.records.push_back(r);
  }
}

} // namespace

SearchM3Result search_m3(std::uint64_t q_max, bool all_generators) {
  SearchM3Result out;
  for (const auto& pp : prime_powers_up_to(q_max)) {
    if (pp.q % 14 != 1)
      continue;
    auto field = Field::create(pp.p, pp.a);
    if (!all_generators) {
      emit_m3(out, pp, field, 1);
      continue;
    }
    const std::uint64_t order = pp.q - 1;
    for (std::uint64_t unit = 1; unit < 7; ++unit) {
      for (std::uint64_t k = unit; k < order; k += 7) {
        if (std::gcd(k, order) == 1) {
          emit_m3(out, pp, k == 1 ? field : field->with_generator(field->exp(k)), k);
          break;
        }
      }
    }
  }
  return out;
}

std::string format_record(const SearchRecordM2& r) {
  std::ostringstream out;
  out << "m=2 p=" << r.p << " a=" << r.a << " q=" << r.q << " c=" << r.c << " l=" << r.l
      << " N=" << r.params.n << " k=" << r.params.k << " lambda=" << r.params.lambda;
  return out.str();
}

std::string format_record(const SearchRecordM3& r) {
  std::ostringstream out;
  out << "m=3 p=" << r.p << " a=" << r.a << " q=" << r.q << " rho=" << r.rho.value
      << " variant=" << to_string(r.variant) << " c=" << r.c << " l=" << r.l
      << " N=" << r.params.n << " k=" << r.params.k << " lambda=" << r.params.lambda;
  return out.str();
}

std::string format_scan(const ScanM2& s) {
  std::ostringstream out;
  out << "scan m=2 p=" << s.p << " a=" << s.a << " q=" << s.q << " c=" << s.c;
  return out.str();
}

std::string format_scan(const ScanM3& s) {
  std::ostringstream out;
  out << "scan m=3 p=" << s.p << " a=" << s.a << " q=" << s.q << " rho=" << s.rho.value
      << " c15=" << s.c15 << " c13=" << s.c13;
  return out.str();
}

} // namespace ergc
