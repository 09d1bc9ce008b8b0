// Copyright 2026 The ergcert Authors
// SPDX-License-Identifier: Apache-2.0

#include "core/cyclotomy.hpp"

#include <string>

#include "core/error.hpp"

namespace ergc {

CyclotomicContext::CyclotomicContext(std::shared_ptr<const Field> field, std::uint32_t n)
    : field_(std::move(field)), n_(n) {
  if (!field_)
    throw Error(ErrorCode::InvalidArgument, "null field");
  const std::uint32_t order = field_->q() - 1;
  if (n_ == 0 || order % n_ != 0) {
    throw Error(ErrorCode::BadCongruence,
                "n = " + std::to_string(n_) + " does not divide q - 1 = " + std::to_string(order));
  }
  if (order % (2 * n_) == 0)
    r_ = order / (2 * n_);
}

void CyclotomicContext::check_index(std::uint32_t i) const {
  if (i >= n_) {
    throw Error(ErrorCode::IndexOutOfRange,
                "class index " + std::to_string(i) + " outside 0.." + std::to_string(n_ - 1));
  }
}

std::uint32_t CyclotomicContext::class_index(FieldElement x) const {
  return field_->dlog(x) % n_;
}

std::vector<FieldElement> CyclotomicContext::cyclotomic_class(std::uint32_t i) const {
  check_index(i);
  std::vector<FieldElement> out;
  out.reserve(class_size());
  for (std::uint32_t j = 0; j < class_size(); ++j)
    out.push_back(field_->exp(std::uint64_t{n_} * j + i));
  return out;
}

std::uint64_t CyclotomicContext::cyclotomic_number(std::uint32_t a, std::uint32_t b) const {
  check_index(a);
  check_index(b);
  std::uint64_t count = 0;
  for (std::uint32_t j = 0; j < class_size(); ++j) {
    const FieldElement shifted = field_->add_one(field_->exp(std::uint64_t{n_} * j + a));
    if (shifted.value != 0 && class_index(shifted) == b)
      ++count;
  }
  return count;
}

std::uint64_t CyclotomicContext::cyclotomic_number_mod(std::int64_t a, std::int64_t b) const {
  const std::int64_t n = n_;
  return cyclotomic_number(static_cast<std::uint32_t>(((a % n) + n) % n),
                           static_cast<std::uint32_t>(((b % n) + n) % n));
}

CyclotomicTable CyclotomicContext::table() const {
  CyclotomicTable out(n_, std::vector<std::uint64_t>(n_, 0));
  for (std::uint32_t k = 0; k + 1 < field_->q(); ++k) {
    const FieldElement shifted = field_->add_one(field_->exp(k));
    if (shifted.value != 0)
      ++out[k % n_][class_index(shifted)];
  }
  return out;
}

bool storer_parity(const CyclotomicContext& ctx) {
  if (ctx.n() != 3)
    throw Error(ErrorCode::WrongN, "parity criterion needs n = 3");
  if (ctx.field().q() % 6 != 1)
    throw Error(ErrorCode::BadCongruence, "parity criterion needs q = 1 (mod 6)");
  // q = 1 (mod 6) forces p >= 5, so the constant 2 is a nonzero element.
  return ctx.class_index(FieldElement{2}) == 0;
}

} // namespace ergc
