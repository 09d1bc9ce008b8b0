// Copyright 2026 The ergcert Authors
// SPDX-License-Identifier: Apache-2.0

#include "core/numtheory.hpp"

#include <numeric>
#include <string>

#include "core/error.hpp"

namespace ergc {

bool is_prime(std::uint64_t n) {
  if (n < 2)
    return false;
  if (n < 4)
    return true;
  if (n % 2 == 0 || n % 3 == 0)
    return false;
  for (std::uint64_t d = 5; d * d <= n; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0)
      return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0)
        n /= d;
    }
  }
  if (n > 1)
    out.push_back(n);
  return out;
}

std::optional<PrimePower> as_prime_power(std::uint64_t q) {
  if (q < 2)
    return std::nullopt;
  auto factors = prime_factors(q);
  if (factors.size() != 1)
    return std::nullopt;
  PrimePower pp;
  pp.p = static_cast<std::uint32_t>(factors.front());
  pp.q = q;
  for (std::uint64_t t = q; t > 1; t /= pp.p)
    ++pp.a;
  return pp;
}

std::vector<PrimePower> prime_powers_up_to(std::uint64_t bound) {
  std::vector<PrimePower> out;
  for (std::uint64_t q = 2; q <= bound; ++q) {
    if (auto pp = as_prime_power(q))
      out.push_back(*pp);
  }
  return out;
}

__extension__ typedef unsigned __int128 Wide;

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  if (mod == 1)
    return 0;
  Wide result = 1;
  Wide b = base % mod;
  while (exp > 0) {
    if (exp & 1)
      result = (result * b) % mod;
    b = (b * b) % mod;
    exp >>= 1;
  }
  return static_cast<std::uint64_t>(result);
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t phi = n;
  for (auto r : prime_factors(n))
    phi = phi / r * (r - 1);
  return phi;
}

std::uint64_t multiplicative_order(std::uint64_t x, std::uint64_t modulus) {
  if (modulus < 2)
    throw Error(ErrorCode::InvalidArgument, "modulus must be at least 2");
  x %= modulus;
  if (std::gcd(x, modulus) != 1) {
    throw Error(ErrorCode::NotCoprime,
                std::to_string(x) + " is not a unit modulo " + std::to_string(modulus));
  }
  // The order divides phi(modulus); strip prime factors while the power stays 1.
  std::uint64_t order = euler_phi(modulus);
  for (auto r : prime_factors(order)) {
    while (order % r == 0 && pow_mod(x, order / r, modulus) == 1)
      order /= r;
  }
  return order;
}

bool is_2_cubic_nonresidue(std::uint64_t p) {
  if (p % 3 != 1) {
    throw Error(ErrorCode::BadCongruence,
                "p = " + std::to_string(p) + " is not 1 mod 3");
  }
  return pow_mod(2, (p - 1) / 3, p) != 1;
}

CorollaryOrders corollary_orders(std::uint64_t p) {
  if (p < 3 || !is_prime(p))
    throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not an odd prime");
  CorollaryOrders out;
  out.n = multiplicative_order(2, p);
  out.e = multiplicative_order(p % (3 * out.n), 3 * out.n);
  return out;
}

bool odd_parity_hypotheses_hold(const PrimePower& pp) {
  if (pp.p < 3 || pp.q % 6 != 1)
    return false;
  auto orders = corollary_orders(pp.p);
  return orders.e > 1 && pp.a % orders.e != 0;
}

} // namespace ergc
