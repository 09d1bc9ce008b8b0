// Copyright 2026 The ergcert Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef ERGCERT_CORE_NUMTHEORY_HPP
#define ERGCERT_CORE_NUMTHEORY_HPP

#include <cstdint>
#include <optional>
#include <vector>

namespace ergc {

struct PrimePower {
  std::uint32_t p = 0;
  std::uint32_t a = 0;
  std::uint64_t q = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Deterministic trial division.
bool is_prime(std::uint64_t n);

/// Returns (p, a) with q = p^a, or nullopt when q is not a prime power.
std::optional<PrimePower> as_prime_power(std::uint64_t q);

/// All prime powers 2 <= q <= bound, ascending.
std::vector<PrimePower> prime_powers_up_to(std::uint64_t bound);

/// Distinct prime divisors of n, ascending.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

std::uint64_t euler_phi(std::uint64_t n);

/// Smallest k >= 1 with x^k = 1 (mod modulus). Throws NotCoprime when
/// gcd(x, modulus) != 1.
std::uint64_t multiplicative_order(std::uint64_t x, std::uint64_t modulus);

/// True iff 2^((p-1)/3) != 1 (mod p). Requires p = 1 (mod 3).
bool is_2_cubic_nonresidue(std::uint64_t p);

/// n is the order of 2 modulo p; e is the order of p modulo 3n.
struct CorollaryOrders {
  std::uint64_t n = 0;
  std::uint64_t e = 0;
};

CorollaryOrders corollary_orders(std::uint64_t p);

/// Whether q = p^a meets the sufficient condition for c^3_q(1,2) to be
/// odd: q = 1 (mod 6), e > 1 and a != 0 (mod e).
bool odd_parity_hypotheses_hold(const PrimePower& pp);

} // namespace ergc

#endif
