// Copyright 2026 The ergcert Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <numeric>

#include "core/cyclotomy.hpp"
#include "core/numtheory.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace ergc;

TEST_CASE("classes of GF(7) modulo 3") {
  CyclotomicContext ctx(Field::create(7, 1), 3);
  CHECK(ctx.class_index({6}) == 0);
  CHECK(ctx.class_index({3}) == 1);
  CHECK(ctx.class_index({2}) == 2);
  CHECK_ERROR(ctx.class_index({0}), ErrorCode::ZeroHasNoLog);
  auto c0 = ctx.cyclotomic_class(0);
  std::sort(c0.begin(), c0.end());
  CHECK(c0 == std::vector<FieldElement>{{1}, {6}});
  CHECK_ERROR(ctx.cyclotomic_class(3), ErrorCode::IndexOutOfRange);
  CHECK(ctx.class_size() == 2);
  CHECK(ctx.r() == 1u);
}

TEST_CASE("cyclotomic numbers of small fields") {
  CyclotomicContext q7(Field::create(7, 1), 3);
  CHECK(q7.cyclotomic_number(1, 2) == 1);
  CHECK(q7.cyclotomic_number(0, 0) == 0);
  CHECK(q7.table() == CyclotomicTable{{0, 0, 1}, {0, 1, 1}, {1, 1, 0}});
  CHECK(q7.cyclotomic_number_mod(-2, 5) == q7.cyclotomic_number(1, 2));

  CyclotomicContext q13(Field::create(13, 1), 3);
  CHECK(q13.cyclotomic_number(1, 2) == 1);
}

TEST_CASE("n must divide q - 1") {
  CHECK_ERROR(CyclotomicContext(Field::create(7, 1), 4), ErrorCode::BadCongruence);
  CHECK_ERROR(CyclotomicContext(Field::create(7, 1), 0), ErrorCode::BadCongruence);
}

TEST_CASE("tables agree with the residue-set oracle over prime fields") {
  for (std::uint64_t p = 3; p < 400; ++p) {
    if (!oracle::is_prime(p))
      continue;
    const auto f = Field::create(static_cast<std::uint32_t>(p), 1);
    for (std::uint32_t n : {2u, 3u, 4u, 6u, 7u}) {
      if ((p - 1) % n != 0)
        continue;
      CAPTURE(p);
      CAPTURE(n);
      CyclotomicContext ctx(f, n);
      CHECK(ctx.table() == oracle::cyclotomic_table_prime(p, f->rho().value, n));
    }
  }
}

TEST_CASE("property: row sums and transpose symmetry") {
  // Rows of the table count x in C(a) with x + 1 nonzero, so row a sums to
  // f - [a = class of -1]; when -1 is in C(0) the table is symmetric.
  for (const auto& pp : prime_powers_up_to(600)) {
    const auto f = Field::create_of_order(pp.q);
    for (std::uint32_t n : {3u, 7u}) {
      if ((pp.q - 1) % n != 0)
        continue;
      CyclotomicContext ctx(f, n);
      const auto t = ctx.table();
      const auto minus_one = ctx.class_index(f->neg(f->spec().one()));
      for (std::uint32_t a = 0; a < n; ++a) {
        std::uint64_t sum = 0;
        for (std::uint32_t b = 0; b < n; ++b) {
          sum += t[a][b];
          if (minus_one == 0)
            CHECK(t[a][b] == t[b][a]);
        }
        CHECK(sum == ctx.class_size() - (a == minus_one ? 1 : 0));
      }
    }
  }
}

TEST_CASE("parity criterion") {
  CHECK_FALSE(storer_parity(CyclotomicContext(Field::create(7, 1), 3)));
  CHECK(storer_parity(CyclotomicContext(Field::create(31, 1), 3)));
  CHECK_FALSE(storer_parity(CyclotomicContext(Field::create(13, 1), 3)));
  CHECK_ERROR(storer_parity(CyclotomicContext(Field::create(29, 1), 7)), ErrorCode::WrongN);
  // q = 4: 3 | q - 1 but q is even.
  CHECK_ERROR(storer_parity(CyclotomicContext(Field::create(2, 2), 3)), ErrorCode::BadCongruence);

  for (const auto& pp : prime_powers_up_to(3000)) {
    if (pp.q % 6 != 1)
      continue;
    CyclotomicContext ctx(Field::create_of_order(pp.q), 3);
    CHECK(storer_parity(ctx) == (ctx.cyclotomic_number(1, 2) % 2 == 0));
  }
}

TEST_CASE("property: c(1,2) does not depend on the primitive element") {
  for (std::uint64_t q : {7ULL, 13ULL, 19ULL, 31ULL, 49ULL, 169ULL, 343ULL}) {
    const auto f = Field::create_of_order(q);
    const auto base = CyclotomicContext(f, 3).cyclotomic_number(1, 2);
    for (std::uint32_t k = 1; k < f->q() - 1; ++k) {
      if (std::gcd(k, f->q() - 1) != 1)
        continue;
      CyclotomicContext other(f->with_generator(f->exp(k)), 3);
      CHECK(other.cyclotomic_number(1, 2) == base);
    }
  }
}
