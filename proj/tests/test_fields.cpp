// Copyright 2026 The ergcert Authors
// SPDX-License-Identifier: Apache-2.0

#include <random>
#include <set>

#include "core/fields.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace ergc;

namespace {

// Packed value of the non-leading coefficients of a monic modulus.
std::uint64_t packed_tail(const std::vector<std::uint32_t>& monic, std::uint32_t p) {
  std::uint64_t value = 0;
  for (std::size_t i = monic.size() - 1; i-- > 0;)
    value = value * p + monic[i];
  return value;
}

} // namespace

TEST_CASE("field construction errors") {
  CHECK_ERROR(FieldSpec::build(7, 0), ErrorCode::ExponentZero);
  CHECK_ERROR(FieldSpec::build(6, 1), ErrorCode::NotPrime);
  CHECK_ERROR(FieldSpec::build(2, 20), ErrorCode::FieldTooLarge);
  CHECK_ERROR(Field::create_of_order(12), ErrorCode::NotPrimePower);
  CHECK_ERROR(Field::create_of_order(1), ErrorCode::NotPrimePower);
  CHECK_ERROR(FieldSpec::build(7, 1).element(7), ErrorCode::IndexOutOfRange);
}

TEST_CASE("prime fields carry the trivial modulus") {
  const auto spec = FieldSpec::build(7, 1);
  CHECK(spec.q() == 7);
  CHECK(spec.modulus() == std::vector<std::uint32_t>{0, 1});
}

TEST_CASE("modulus is the smallest monic irreducible in packed order") {
  for (auto [p, a] : {std::pair{7u, 2u}, {2u, 2u}, {2u, 3u}, {3u, 2u}, {3u, 3u}, {5u, 3u},
                      {13u, 2u}, {11u, 3u}}) {
    CAPTURE(p);
    CAPTURE(a);
    const auto spec = FieldSpec::build(p, a);
    const auto& mod = spec.modulus();
    REQUIRE(mod.size() == a + 1);
    CHECK(mod.back() == 1);
    // Degree 2 and 3 polynomials are irreducible exactly when rootless.
    CHECK(oracle::has_no_root(mod, p));
    const std::uint64_t tail = packed_tail(mod, p);
    for (std::uint64_t smaller = 0; smaller < tail; ++smaller) {
      std::vector<std::uint32_t> candidate(a + 1, 0);
      std::uint64_t rest = smaller;
      for (std::uint32_t i = 0; i < a; ++i, rest /= p)
        candidate[i] = static_cast<std::uint32_t>(rest % p);
      candidate[a] = 1;
      CHECK_FALSE(oracle::has_no_root(candidate, p));
    }
  }
}

TEST_CASE("irreducibility test agrees with root oracle in low degree") {
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    for (std::uint32_t deg : {2u, 3u}) {
      std::uint64_t count = 1;
      for (std::uint32_t i = 0; i < deg; ++i)
        count *= p;
      for (std::uint64_t packed = 0; packed < count; ++packed) {
        std::vector<std::uint32_t> poly(deg + 1, 0);
        std::uint64_t rest = packed;
        for (std::uint32_t i = 0; i < deg; ++i, rest /= p)
          poly[i] = static_cast<std::uint32_t>(rest % p);
        poly[deg] = 1;
        CHECK(is_irreducible(poly, p) == oracle::has_no_root(poly, p));
      }
    }
  }
  // x^4 + x + 1 is irreducible over GF(2); (x^2 + x + 1)^2 = x^4 + x^2 + 1 is not.
  const std::vector<std::uint32_t> good{1, 1, 0, 0, 1};
  const std::vector<std::uint32_t> square{1, 0, 1, 0, 1};
  CHECK(is_irreducible(good, 2));
  CHECK_FALSE(is_irreducible(square, 2));
}

TEST_CASE("pinned primitive elements") {
  CHECK(Field::create(7, 1)->rho().value == 3);
  CHECK(Field::create(13, 1)->rho().value == 2);
  CHECK(Field::create(2, 1)->rho().value == 1);
  for (std::uint32_t p = 2; p < 400; ++p) {
    if (oracle::is_prime(p))
      CHECK(Field::create(p, 1)->rho().value == oracle::smallest_primitive_root(p));
  }
}

TEST_CASE("discrete logarithm") {
  const auto f = Field::create(7, 1);
  CHECK(f->dlog({6}) == 3);
  CHECK(f->dlog({1}) == 0);
  CHECK_ERROR(f->dlog({0}), ErrorCode::ZeroHasNoLog);
  CHECK_ERROR(f->dlog({9}), ErrorCode::IndexOutOfRange);
}

TEST_CASE("prime field arithmetic matches integers mod p") {
  const std::uint32_t p = 101;
  const auto f = Field::create(p, 1);
  for (std::uint32_t x = 0; x < p; ++x) {
    for (std::uint32_t y = 0; y < p; y += 7) {
      CHECK(f->add({x}, {y}).value == (x + y) % p);
      CHECK(f->sub({x}, {y}).value == (x + p - y) % p);
      CHECK(f->mul({x}, {y}).value == x * y % p);
    }
    CHECK(f->add_one({x}).value == (x + 1) % p);
  }
}

TEST_CASE("property: extension field axioms on random triples") {
  std::mt19937_64 rng(7);
  for (auto [p, a] : {std::pair{7u, 2u}, {2u, 5u}, {3u, 4u}, {5u, 3u}, {13u, 2u}}) {
    const auto f = Field::create(p, a);
    const auto& spec = f->spec();
    std::uniform_int_distribution<std::uint32_t> pick(0, f->q() - 1);
    for (int i = 0; i < 500; ++i) {
      const FieldElement x{pick(rng)}, y{pick(rng)}, z{pick(rng)};
      CHECK(f->mul(x, y) == spec.mul(x, y));
      CHECK(f->mul(x, y) == f->mul(y, x));
      CHECK(f->mul(f->mul(x, y), z) == f->mul(x, f->mul(y, z)));
      CHECK(f->mul(x, f->add(y, z)) == f->add(f->mul(x, y), f->mul(x, z)));
      CHECK(f->add(x, f->neg(x)) == f->spec().zero());
      CHECK(f->add_one(x) == f->add(x, f->spec().one()));
      if (x.value != 0) {
        CHECK(f->mul(x, f->inv(x)) == f->spec().one());
        CHECK(f->exp(f->dlog(x)) == x);
      }
    }
    CHECK(spec.pow(f->rho(), f->q() - 1) == spec.one());
  }
}

TEST_CASE("primitive element generates the whole group") {
  for (std::uint64_t q : {4ULL, 8ULL, 9ULL, 25ULL, 27ULL, 49ULL, 64ULL, 121ULL, 169ULL, 343ULL}) {
    const auto f = Field::create_of_order(q);
    std::set<std::uint32_t> seen;
    FieldElement x = f->spec().one();
    for (std::uint32_t k = 0; k + 1 < f->q(); ++k) {
      seen.insert(x.value);
      x = f->spec().mul(x, f->rho());
    }
    CHECK(seen.size() == q - 1);
    CHECK(is_primitive(f->spec(), f->rho()));
    // Nothing smaller in packed order is primitive.
    for (std::uint32_t v = 1; v < f->rho().value; ++v)
      CHECK_FALSE(is_primitive(f->spec(), {v}));
  }
}

TEST_CASE("changing the generator") {
  const auto f = Field::create(7, 1);
  const auto g = f->with_generator({5});
  CHECK(g->rho().value == 5);
  CHECK(g->dlog({5}) == 1);
  CHECK(g->dlog({4}) == 2);
  CHECK_ERROR(f->with_generator({2}), ErrorCode::InvalidArgument);
}

TEST_CASE("coefficient round trip") {
  const auto spec = FieldSpec::build(7, 2);
  for (std::uint32_t v = 0; v < 49; ++v) {
    const auto coeffs = spec.coefficients({v});
    CHECK(coeffs.size() == 2);
    CHECK(coeffs[0] == v % 7);
    CHECK(spec.from_coefficients(coeffs).value == v);
  }
}
