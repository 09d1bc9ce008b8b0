// Copyright 2026 The ergcert Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef ERGCERT_CORE_FIELDS_HPP
#define ERGCERT_CORE_FIELDS_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace ergc {

// Largest field order accepted by build_field.
inline constexpr std::uint64_t kMaxFieldOrder = 1'000'000;

/// An element of GF(p^a), packed as sum_i c_i p^i over the canonical
/// coefficient vector (c_0 least significant). Zero packs to 0, one to 1.
struct FieldElement {
  std::uint32_t value = 0;

  friend auto operator<=>(const FieldElement&, const FieldElement&) = default;
};

/// GF(p^a) realised as Z_p[x] / (modulus). Arithmetic here is the direct
/// polynomial route; the table-driven route lives in Field.
class FieldSpec {
public:
  /// Deterministic construction: for a > 1 the modulus is the smallest
  /// monic irreducible x^a + c_{a-1}x^{a-1} + ... + c_0 when ordered by
  /// the packed value sum_i c_i p^i. For a = 1 the modulus is x.
  static FieldSpec build(std::uint32_t p, std::uint32_t a);

  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t a() const noexcept { return a_; }
  std::uint32_t q() const noexcept { return q_; }

  /// Coefficients low to high, monic, length a + 1.
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

  FieldElement zero() const noexcept { return {0}; }
  FieldElement one() const noexcept { return {1}; }
  FieldElement element(std::uint32_t packed) const;

  std::vector<std::uint32_t> coefficients(FieldElement x) const;
  FieldElement from_coefficients(std::span<const std::uint32_t> coeffs) const;

  FieldElement add(FieldElement x, FieldElement y) const;
  FieldElement sub(FieldElement x, FieldElement y) const;
  FieldElement neg(FieldElement x) const;
  FieldElement mul(FieldElement x, FieldElement y) const;
  FieldElement pow(FieldElement x, std::uint64_t e) const;

  /// x + 1; only the constant coefficient changes.
  FieldElement add_one(FieldElement x) const noexcept {
    return (x.value % p_ == p_ - 1) ? FieldElement{x.value - (p_ - 1)}
                                    : FieldElement{x.value + 1};
  }

private:
  FieldSpec(std::uint32_t p, std::uint32_t a, std::vector<std::uint32_t> modulus);

  std::uint32_t p_;
  std::uint32_t a_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
};

/// Whether a monic polynomial (coefficients low to high) is irreducible
/// over Z_p, by trial division with every monic polynomial of degree at
/// most deg/2.
bool is_irreducible(std::span<const std::uint32_t> monic, std::uint32_t p);

/// A fixed primitive element rho with complete discrete log tables.
class PrimitiveData {
public:
  /// First element in packed order 1, 2, 3, ... whose order is q - 1.
  static PrimitiveData find(const FieldSpec& field);

  /// Tables for a caller-chosen generator. Throws InvalidArgument if rho
  /// is not primitive.
  static PrimitiveData from_generator(const FieldSpec& field, FieldElement rho);

  FieldElement rho() const noexcept { return rho_; }
  std::uint32_t group_order() const noexcept {
    return static_cast<std::uint32_t>(exp_table_.size());
  }

  /// Exponent in {0, ..., q-2} with rho^result = x. Throws ZeroHasNoLog.
  std::uint32_t dlog(FieldElement x) const;

  /// rho^k, k taken modulo q - 1.
  FieldElement exp(std::uint64_t k) const noexcept {
    return exp_table_[k % exp_table_.size()];
  }

  const std::vector<std::uint32_t>& log_table() const noexcept { return log_table_; }
  const std::vector<FieldElement>& exp_table() const noexcept { return exp_table_; }

private:
  PrimitiveData() = default;

  FieldElement rho_;
  std::vector<std::uint32_t> log_table_; // indexed by packed value; slot 0 unused
  std::vector<FieldElement> exp_table_;
};

bool is_primitive(const FieldSpec& field, FieldElement x);

/// A field together with its pinned primitive element. Immutable and
/// shared between cyclotomic contexts, group parameters and certificates.
class Field {
public:
  static std::shared_ptr<const Field> create(std::uint32_t p, std::uint32_t a);
  /// Throws NotPrimePower.
  static std::shared_ptr<const Field> create_of_order(std::uint64_t q);

  /// Same field, tables rebuilt around another primitive element.
  std::shared_ptr<const Field> with_generator(FieldElement rho) const;

  const FieldSpec& spec() const noexcept { return spec_; }
  const PrimitiveData& primitive() const noexcept { return primitive_; }

  std::uint32_t p() const noexcept { return spec_.p(); }
  std::uint32_t a() const noexcept { return spec_.a(); }
  std::uint32_t q() const noexcept { return spec_.q(); }
  FieldElement rho() const noexcept { return primitive_.rho(); }

  FieldElement add(FieldElement x, FieldElement y) const { return spec_.add(x, y); }
  FieldElement sub(FieldElement x, FieldElement y) const { return spec_.sub(x, y); }
  FieldElement neg(FieldElement x) const { return spec_.neg(x); }
  FieldElement add_one(FieldElement x) const noexcept { return spec_.add_one(x); }

  /// Multiplication through the log tables.
  FieldElement mul(FieldElement x, FieldElement y) const;
  /// Throws ZeroHasNoLog for x = 0.
  FieldElement inv(FieldElement x) const;

  std::uint32_t dlog(FieldElement x) const { return primitive_.dlog(x); }
  FieldElement exp(std::uint64_t k) const noexcept { return primitive_.exp(k); }

  Field(FieldSpec spec, PrimitiveData primitive)
      : spec_(std::move(spec)), primitive_(std::move(primitive)) {}

private:
  FieldSpec spec_;
  PrimitiveData primitive_;
};

} // namespace ergc

#endif
