// Copyright 2026 The ergcert Authors
// SPDX-License-Identifier: Apache-2.0

#include "core/fields.hpp"

#include <string>

#include "core/error.hpp"
#include "core/numtheory.hpp"

namespace ergc {

namespace {

using Poly = std::vector<std::uint32_t>;

Poly unpack(std::uint32_t packed, std::uint32_t p, std::uint32_t len) {
  Poly out(len, 0);
  for (std::uint32_t i = 0; i < len; ++i) {
    out[i] = packed % p;
    packed /= p;
  }
  return out;
}

std::uint32_t pack(std::span<const std::uint32_t> coeffs, std::uint32_t p) {
  std::uint32_t packed = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
    packed = packed * p + *it;
  return packed;
}

// Remainder of num modulo a monic divisor, in place; num keeps its length.
void reduce_monic(Poly& num, std::span<const std::uint32_t> divisor, std::uint32_t p) {
  const std::size_t deg = divisor.size() - 1;
  for (std::size_t i = num.size(); i-- > deg;) {
    const std::uint64_t c = num[i];
    if (c == 0)
      continue;
    for (std::size_t j = 0; j <= deg; ++j) {
      const std::uint64_t sub = (c * divisor[j]) % p;
      num[i - deg + j] = static_cast<std::uint32_t>((num[i - deg + j] + p - sub) % p);
    }
  }
}

} // namespace

bool is_irreducible(std::span<const std::uint32_t> monic, std::uint32_t p) {
  const std::size_t deg = monic.size() - 1;
  if (deg == 0)
    return false;
  std::uint64_t count = 1;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    count *= p;
    for (std::uint64_t t = 0; t < count; ++t) {
      Poly divisor = unpack(static_cast<std::uint32_t>(t), p, static_cast<std::uint32_t>(d));
      divisor.push_back(1);
      Poly rem(monic.begin(), monic.end());
      reduce_monic(rem, divisor, p);
      bool zero = true;
      for (std::size_t i = 0; i < d; ++i)
        zero = zero && rem[i] == 0;
      if (zero)
        return false;
    }
  }
  return true;
}

FieldSpec::FieldSpec(std::uint32_t p, std::uint32_t a, std::vector<std::uint32_t> modulus)
    : p_(p), a_(a), q_(1), modulus_(std::move(modulus)) {
  for (std::uint32_t i = 0; i < a; ++i)
    q_ *= p;
}

FieldSpec FieldSpec::build(std::uint32_t p, std::uint32_t a) {
  if (a == 0)
    throw Error(ErrorCode::ExponentZero, "field exponent must be at least 1");
  if (!is_prime(p))
    throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < a; ++i) {
    q *= p;
    if (q > kMaxFieldOrder) {
      throw Error(ErrorCode::FieldTooLarge,
                  "GF(" + std::to_string(p) + "^" + std::to_string(a) + ") exceeds " +
                      std::to_string(kMaxFieldOrder) + " elements");
    }
  }
  if (a == 1)
    return FieldSpec(p, 1, {0, 1});

  const std::uint32_t tail = static_cast<std::uint32_t>(q);
  for (std::uint32_t t = 0; t < tail; ++t) {
    Poly candidate = unpack(t, p, a);
    candidate.push_back(1);
    if (is_irreducible(candidate, p))
      return FieldSpec(p, a, std::move(candidate));
  }
  // Irreducibles exist in every degree.
  throw Error(ErrorCode::InvalidArgument, "no irreducible modulus found");
}

FieldElement FieldSpec::element(std::uint32_t packed) const {
  if (packed >= q_) {
    throw Error(ErrorCode::IndexOutOfRange,
                std::to_string(packed) + " is not an element of GF(" + std::to_string(q_) + ")");
  }
  return {packed};
}

std::vector<std::uint32_t> FieldSpec::coefficients(FieldElement x) const {
  return unpack(x.value, p_, a_);
}

FieldElement FieldSpec::from_coefficients(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() != a_)
    throw Error(ErrorCode::InvalidArgument, "coefficient vector has the wrong length");
  for (auto c : coeffs) {
    if (c >= p_)
      throw Error(ErrorCode::InvalidArgument, "coefficient out of range");
  }
  return {pack(coeffs, p_)};
}

FieldElement FieldSpec::add(FieldElement x, FieldElement y) const {
  if (a_ == 1)
    return {(x.value + y.value) % p_};
  std::uint32_t out = 0, scale = 1;
  for (std::uint32_t i = 0; i < a_; ++i) {
    out += ((x.value % p_ + y.value % p_) % p_) * scale;
    x.value /= p_;
    y.value /= p_;
    scale *= p_;
  }
  return {out};
}

FieldElement FieldSpec::neg(FieldElement x) const {
  if (a_ == 1)
    return {(p_ - x.value) % p_};
  std::uint32_t out = 0, scale = 1;
  for (std::uint32_t i = 0; i < a_; ++i) {
    out += ((p_ - x.value % p_) % p_) * scale;
    x.value /= p_;
    scale *= p_;
  }
  return {out};
}

FieldElement FieldSpec::sub(FieldElement x, FieldElement y) const {
  return add(x, neg(y));
}

FieldElement FieldSpec::mul(FieldElement x, FieldElement y) const {
  if (a_ == 1)
    return {static_cast<std::uint32_t>(std::uint64_t{x.value} * y.value % p_)};
  const Poly u = unpack(x.value, p_, a_);
  const Poly v = unpack(y.value, p_, a_);
  Poly prod(2 * a_ - 1, 0);
  for (std::uint32_t i = 0; i < a_; ++i) {
    for (std::uint32_t j = 0; j < a_; ++j)
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{u[i]} * v[j]) % p_);
  }
  reduce_monic(prod, modulus_, p_);
  return {pack(std::span(prod).first(a_), p_)};
}

FieldElement FieldSpec::pow(FieldElement x, std::uint64_t e) const {
  FieldElement result = one();
  while (e > 0) {
    if (e & 1)
      result = mul(result, x);
    x = mul(x, x);
    e >>= 1;
  }
  return result;
}

bool is_primitive(const FieldSpec& field, FieldElement x) {
  if (x.value == 0)
    return false;
  const std::uint64_t order = field.q() - 1;
  if (order == 1)
    return x == field.one();
  for (auto r : prime_factors(order)) {
    if (field.pow(x, order / r) == field.one())
      return false;
  }
  return true;
}

PrimitiveData PrimitiveData::find(const FieldSpec& field) {
  for (std::uint32_t v = 1; v < field.q(); ++v) {
    if (is_primitive(field, {v}))
      return from_generator(field, {v});
  }
  throw Error(ErrorCode::InvalidArgument, "field has no primitive element");
}

PrimitiveData PrimitiveData::from_generator(const FieldSpec& field, FieldElement rho) {
  if (!is_primitive(field, rho)) {
    throw Error(ErrorCode::InvalidArgument,
                std::to_string(rho.value) + " is not a primitive element");
  }
  PrimitiveData pd;
  pd.rho_ = rho;
  const std::uint32_t order = field.q() - 1;
  pd.exp_table_.reserve(order);
  pd.log_table_.assign(field.q(), 0);
  FieldElement power = field.one();
  for (std::uint32_t k = 0; k < order; ++k) {
    pd.exp_table_.push_back(power);
    pd.log_table_[power.value] = k;
    power = field.mul(power, rho);
  }
  return pd;
}

std::uint32_t PrimitiveData::dlog(FieldElement x) const {
  if (x.value == 0)
    throw Error(ErrorCode::ZeroHasNoLog, "zero has no discrete logarithm");
  if (x.value >= log_table_.size())
    throw Error(ErrorCode::IndexOutOfRange, "element outside the field");
  return log_table_[x.value];
}

std::shared_ptr<const Field> Field::create(std::uint32_t p, std::uint32_t a) {
  auto spec = FieldSpec::build(p, a);
  auto primitive = PrimitiveData::find(spec);
  return std::make_shared<const Field>(std::move(spec), std::move(primitive));
}

std::shared_ptr<const Field> Field::create_of_order(std::uint64_t q) {
  auto pp = as_prime_power(q);
  if (!pp)
    throw Error(ErrorCode::NotPrimePower, std::to_string(q) + " is not a prime power");
  return create(pp->p, pp->a);
}

std::shared_ptr<const Field> Field::with_generator(FieldElement rho) const {
  return std::make_shared<const Field>(spec_, PrimitiveData::from_generator(spec_, rho));
}

FieldElement Field::mul(FieldElement x, FieldElement y) const {
  if (x.value == 0 || y.value == 0)
    return spec_.zero();
  const auto& logs = primitive_.log_table();
  return primitive_.exp(std::uint64_t{logs[x.value]} + logs[y.value]);
}

FieldElement Field::inv(FieldElement x) const {
  const std::uint32_t k = dlog(x);
  return primitive_.exp(primitive_.group_order() - k);
}

} // namespace ergc
