// Copyright 2026 The ergcert Authors
// SPDX-License-Identifier: Apache-2.0

#include <numeric>

#include "core/numtheory.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace ergc;

TEST_CASE("primality agrees with trial division oracle") {
  for (std::uint64_t n = 0; n < 5000; ++n)
    CHECK(is_prime(n) == oracle::is_prime(n));
}

TEST_CASE("prime power decomposition") {
  CHECK(as_prime_power(49) == PrimePower{7, 2, 49});
  CHECK(as_prime_power(2) == PrimePower{2, 1, 2});
  CHECK(as_prime_power(1024) == PrimePower{2, 10, 1024});
  CHECK_FALSE(as_prime_power(1).has_value());
  CHECK_FALSE(as_prime_power(6).has_value());
  CHECK_FALSE(as_prime_power(0).has_value());

  const auto expected = oracle::prime_powers(3000);
  const auto got = prime_powers_up_to(3000);
  REQUIRE(got.size() == expected.size());
  for (std::size_t i = 0; i < got.size(); ++i) {
    CHECK(got[i].q == expected[i]);
    std::uint64_t power = 1;
    for (std::uint32_t j = 0; j < got[i].a; ++j)
      power *= got[i].p;
    CHECK(power == got[i].q);
  }
}

TEST_CASE("prime factors and phi") {
  CHECK(prime_factors(360) == std::vector<std::uint64_t>{2, 3, 5});
  CHECK(prime_factors(97) == std::vector<std::uint64_t>{97});
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(36) == 12);
  for (std::uint64_t n = 1; n < 300; ++n) {
    std::uint64_t count = 0;
    for (std::uint64_t k = 1; k <= n; ++k)
      count += std::gcd(k, n) == 1;
    CHECK(euler_phi(n) == count);
  }
}

TEST_CASE("pow_mod handles wide operands") {
  CHECK(pow_mod(3, 3, 7) == 6);
  CHECK(pow_mod(5, 0, 1) == 0);
  const std::uint64_t big = (1ULL << 61) - 1; // prime
  CHECK(pow_mod(2, big - 1, big) == 1);
}

TEST_CASE("multiplicative order") {
  CHECK(multiplicative_order(2, 7) == 3);
  CHECK(multiplicative_order(7, 9) == 3);
  CHECK(multiplicative_order(5, 12) == 2);
  CHECK(multiplicative_order(1, 2) == 1);
  CHECK_ERROR(multiplicative_order(6, 9), ErrorCode::NotCoprime);
  CHECK_ERROR(multiplicative_order(3, 1), ErrorCode::InvalidArgument);
  for (std::uint64_t m = 2; m < 200; ++m) {
    for (std::uint64_t x = 1; x < m; ++x) {
      if (std::gcd(x, m) == 1)
        CHECK(multiplicative_order(x, m) == oracle::order_by_iteration(x, m));
    }
  }
}

TEST_CASE("2 as a cubic residue") {
  CHECK(is_2_cubic_nonresidue(7));
  CHECK_FALSE(is_2_cubic_nonresidue(31));
  CHECK(is_2_cubic_nonresidue(13));
  CHECK_ERROR(is_2_cubic_nonresidue(11), ErrorCode::BadCongruence);
  // Cross-check against the set of cubes mod p.
  for (std::uint64_t p = 7; p < 2000; p += 6) {
    if (!oracle::is_prime(p))
      continue;
    bool cube = false;
    for (std::uint64_t x = 1; x < p && !cube; ++x)
      cube = x * x % p * x % p == 2;
    CHECK(is_2_cubic_nonresidue(p) == !cube);
  }
}

TEST_CASE("corollary orders") {
  auto o = corollary_orders(7);
  CHECK(o.n == 3);
  CHECK(o.e == 3);
  o = corollary_orders(31);
  CHECK(o.n == 5);
  CHECK(o.e == 1);
  o = corollary_orders(5);
  CHECK(o.n == 4);
  CHECK(o.e == 2);
  CHECK_ERROR(corollary_orders(2), ErrorCode::NotPrime);
  CHECK_ERROR(corollary_orders(9), ErrorCode::NotPrime);
}

TEST_CASE("property: p = 5 mod 6 gives e = 2") {
  for (std::uint64_t p = 5; p < 20000; p += 6) {
    if (oracle::is_prime(p))
      CHECK(corollary_orders(p).e == 2);
  }
}

TEST_CASE("odd parity hypotheses") {
  CHECK(odd_parity_hypotheses_hold({7, 1, 7}));
  CHECK(odd_parity_hypotheses_hold({7, 2, 49}));
  CHECK_FALSE(odd_parity_hypotheses_hold({7, 3, 343}));
  CHECK_FALSE(odd_parity_hypotheses_hold({31, 1, 31}));
  CHECK_FALSE(odd_parity_hypotheses_hold({5, 1, 5})); // q not 1 mod 6
  CHECK_FALSE(odd_parity_hypotheses_hold({5, 2, 25})); // a = 0 mod e = 2
}
