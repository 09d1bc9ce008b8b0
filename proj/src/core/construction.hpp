// Copyright 2026 The ergcert Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef ERGCERT_CORE_CONSTRUCTION_HPP
#define ERGCERT_CORE_CONSTRUCTION_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "core/fields.hpp"
#include "core/graph.hpp"

namespace ergc {

// Elements of Z_2^m as integers: bit i holds coordinate x_i, so the triple
// (x2, x1, x0) reads as the binary number x2 x1 x0.
using BitVector = std::uint32_t;

inline constexpr std::uint32_t kMaxM = 8;

std::uint32_t weight(BitVector x) noexcept;

// (x2,x1,x0) -> (x1,x0,x2): a left rotation of the three stored bits.
BitVector sigma_plus(BitVector x) noexcept;
// (x2,x1,x0) -> (x0,x2,x1): a right rotation.
BitVector sigma_minus(BitVector x) noexcept;

/// Binary value of a 3-bit vector mod 7. Throws ZeroVector.
std::uint32_t phi(BitVector x);

std::uint32_t psi1(BitVector x);
/// For x = (1,1,1) the odd branch evaluates phi at the zero vector, where
/// the same formula gives 0; that value is used.
std::uint32_t psi2(BitVector x);

enum class Variant { None, Psi1, Psi2 };

std::string_view to_string(Variant v) noexcept;

/// A bijection from the nonzero vectors of Z_2^m onto Z_{2^m - 1}.
class Bijection {
public:
  /// table[i] is the image of the vector with binary value i + 1.
  /// Throws NotABijection.
  static Bijection from_table(std::uint32_t m, std::vector<std::uint32_t> table);
  /// Comma list over vectors 1, 2, ..., 2^m - 1. Throws Parse / NotABijection.
  static Bijection parse(std::uint32_t m, std::string_view text);
  static Bijection identity(std::uint32_t m);
  static Bijection of_variant(Variant v);

  std::uint32_t m() const noexcept { return m_; }
  std::uint32_t modulus() const noexcept { return (1U << m_) - 1; }
  const std::vector<std::uint32_t>& table() const noexcept { return table_; }

  /// Throws ZeroVector or IndexOutOfRange.
  std::uint32_t operator()(BitVector x) const;

  std::string to_string() const;

private:
  Bijection(std::uint32_t m, std::vector<std::uint32_t> table)
      : m_(m), table_(std::move(table)) {}

  std::uint32_t m_;
  std::vector<std::uint32_t> table_;
};

struct GroupElement {
  std::uint32_t z = 0; // Z_l
  BitVector v = 0;     // Z_2^m
  FieldElement f;      // F_q

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

/// G = Z_l + Z_2^m + F_q with the fixed vertex numbering
/// index = z * 2^m * q + v * q + fidx(f), fidx(0) = 0, fidx(rho^j) = j + 1.
class GroupParams {
public:
  GroupParams(std::uint32_t l, std::uint32_t m, std::shared_ptr<const Field> field);

  std::uint32_t l() const noexcept { return l_; }
  std::uint32_t m() const noexcept { return m_; }
  std::uint32_t q() const noexcept { return field_->q(); }
  std::uint32_t two_m() const noexcept { return 1U << m_; }
  /// 2^m - 1
  std::uint32_t n() const noexcept { return two_m() - 1; }
  std::uint64_t order() const noexcept { return std::uint64_t{two_m()} * l_ * q(); }
  const Field& field() const noexcept { return *field_; }
  const std::shared_ptr<const Field>& field_ptr() const noexcept { return field_; }

  GroupElement add(const GroupElement& x, const GroupElement& y) const;
  GroupElement neg(const GroupElement& x) const;

  Vertex encode(const GroupElement& x) const;
  /// Throws IndexOutOfRange.
  GroupElement decode(Vertex index) const;

  std::uint32_t field_index(FieldElement f) const;
  FieldElement field_from_index(std::uint32_t idx) const;

private:
  std::uint32_t l_;
  std::uint32_t m_;
  std::shared_ptr<const Field> field_;
};

/// S(pi) kept partitioned: S_0 and one cell per nonzero z.
struct GeneratingSet {
  std::vector<GroupElement> s0;
  /// by_z[z - 1] holds S_{z,pi}.
  std::vector<std::vector<GroupElement>> by_z;

  std::size_t size() const noexcept;
  std::vector<GroupElement> elements() const;
  bool contains(const GroupElement& x) const;
};

/// S_{z,pi} = { (0, z, x) : x != 0, dlog(x) = pi(z) (mod 2^m - 1) }.
GeneratingSet generating_set(const GroupParams& gp, const Bijection& pi);

/// An element s of S with -s outside S, if any.
std::optional<GroupElement> asymmetry_witness(const GroupParams& gp, const GeneratingSet& s);

/// Throws AsymmetricGeneratingSet.
Graph build_cayley_graph(const GroupParams& gp, const GeneratingSet& s);

} // namespace ergc

#endif
