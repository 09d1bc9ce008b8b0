// Copyright 2026 The ergcert Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef ERGCERT_CORE_CYCLOTOMY_HPP
#define ERGCERT_CORE_CYCLOTOMY_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "core/fields.hpp"

namespace ergc {

using CyclotomicTable = std::vector<std::vector<std::uint64_t>>;

/// Cyclotomic classes of order n in GF(q) relative to the field's pinned
/// primitive element: C(i) = { rho^(nj+i) }.
class CyclotomicContext {
public:
  /// Throws BadCongruence unless n divides q - 1.
  CyclotomicContext(std::shared_ptr<const Field> field, std::uint32_t n);

  const Field& field() const noexcept { return *field_; }
  const std::shared_ptr<const Field>& field_ptr() const noexcept { return field_; }
  std::uint32_t n() const noexcept { return n_; }
  /// Set when q = 2nr + 1.
  std::optional<std::uint32_t> r() const noexcept { return r_; }
  std::uint32_t class_size() const noexcept { return (field_->q() - 1) / n_; }

  /// dlog(x) mod n. Throws ZeroHasNoLog.
  std::uint32_t class_index(FieldElement x) const;

  /// Elements of C(i) in exponent order. Throws IndexOutOfRange.
  std::vector<FieldElement> cyclotomic_class(std::uint32_t i) const;

  /// |(C(a) + 1) ∩ C(b)| by walking C(a). Throws IndexOutOfRange.
  std::uint64_t cyclotomic_number(std::uint32_t a, std::uint32_t b) const;

  /// As cyclotomic_number, with both indices reduced modulo n first.
  std::uint64_t cyclotomic_number_mod(std::int64_t a, std::int64_t b) const;

  /// Full n x n table, one pass over the nonzero elements.
  CyclotomicTable table() const;

private:
  void check_index(std::uint32_t i) const;

  std::shared_ptr<const Field> field_;
  std::uint32_t n_;
  std::optional<std::uint32_t> r_;
};

/// True iff c^3_q(1,2) is even, decided by whether 2 lies in C^3_q(0).
/// Throws WrongN for n != 3 and BadCongruence unless q = 1 (mod 6).
bool storer_parity(const CyclotomicContext& ctx);

} // namespace ergc

#endif
