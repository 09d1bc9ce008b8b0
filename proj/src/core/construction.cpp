// Copyright 2026 The ergcert Authors
// SPDX-License-Identifier: Apache-2.0

#include "core/construction.hpp"

#include <algorithm>
#include <bit>
#include <charconv>

#include "core/error.hpp"

namespace ergc {

std::uint32_t weight(BitVector x) noexcept { return static_cast<std::uint32_t>(std::popcount(x)); }

BitVector sigma_plus(BitVector x) noexcept { return ((x << 1) | (x >> 2)) & 7U; }

BitVector sigma_minus(BitVector x) noexcept { return ((x >> 1) | (x << 2)) & 7U; }

namespace {

std::uint32_t phi_unchecked(BitVector x) noexcept { return (x & 7U) % 7; }

void check_triple(BitVector x) {
  if (x == 0)
    throw Error(ErrorCode::ZeroVector, "the zero vector has no image");
  if (x > 7)
    throw Error(ErrorCode::IndexOutOfRange, "not a vector of Z_2^3");
}

} // namespace

std::uint32_t phi(BitVector x) {
  check_triple(x);
  return phi_unchecked(x);
}

std::uint32_t psi1(BitVector x) {
  check_triple(x);
  return weight(x) % 2 == 1 ? phi_unchecked(sigma_plus(x)) : phi_unchecked(sigma_minus(x));
}

std::uint32_t psi2(BitVector x) {
  check_triple(x);
  return weight(x) % 2 == 1 ? phi_unchecked(sigma_plus(x) ^ x) : phi_unchecked(7U ^ x);
}

std::string_view to_string(Variant v) noexcept {
  switch (v) {
  case Variant::Psi1: return "psi1";
  case Variant::Psi2: return "psi2";
  case Variant::None: break;
  }
  return "none";
}

Bijection Bijection::from_table(std::uint32_t m, std::vector<std::uint32_t> table) {
  if (m == 0 || m > kMaxM)
    throw Error(ErrorCode::InvalidArgument, "m must lie in 1.." + std::to_string(kMaxM));
  const std::uint32_t n = (1U << m) - 1;
  if (table.size() != n) {
    throw Error(ErrorCode::NotABijection, "expected " + std::to_string(n) + " values, got " +
                                              std::to_string(table.size()));
  }
  std::vector<bool> seen(n, false);
  for (auto value : table) {
    if (value >= n || seen[value])
      throw Error(ErrorCode::NotABijection, "pi is not a bijection onto Z_" + std::to_string(n));
    seen[value] = true;
  }
  return Bijection(m, std::move(table));
}

Bijection Bijection::parse(std::uint32_t m, std::string_view text) {
  std::vector<std::uint32_t> table;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const auto token = text.substr(0, comma);
    std::uint32_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size() || token.empty())
      throw Error(ErrorCode::Parse, "bad pi entry '" + std::string(token) + "'");
    table.push_back(value);
    if (comma == std::string_view::npos)
      break;
    text.remove_prefix(comma + 1);
    if (text.empty())
      throw Error(ErrorCode::Parse, "trailing comma in pi");
  }
  return from_table(m, std::move(table));
}

Bijection Bijection::identity(std::uint32_t m) {
  if (m == 0 || m > kMaxM)
    throw Error(ErrorCode::InvalidArgument, "m must lie in 1.." + std::to_string(kMaxM));
  std::vector<std::uint32_t> table((1U << m) - 1);
  for (std::uint32_t i = 0; i < table.size(); ++i)
    table[i] = i;
  return Bijection(m, std::move(table));
}

Bijection Bijection::of_variant(Variant v) {
  if (v == Variant::None)
    throw Error(ErrorCode::InvalidArgument, "no variant given");
  std::vector<std::uint32_t> table;
  for (BitVector x = 1; x < 8; ++x)
    table.push_back(v == Variant::Psi1 ? psi1(x) : psi2(x));
  return from_table(3, std::move(table));
}

std::uint32_t Bijection::operator()(BitVector x) const {
  if (x == 0)
    throw Error(ErrorCode::ZeroVector, "the zero vector has no image");
  if (x > table_.size())
    throw Error(ErrorCode::IndexOutOfRange, "vector outside Z_2^m");
  return table_[x - 1];
}

std::string Bijection::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < table_.size(); ++i) {
    if (i)
      out += ',';
    out += std::to_string(table_[i]);
  }
  return out;
}

GroupParams::GroupParams(std::uint32_t l, std::uint32_t m, std::shared_ptr<const Field> field)
    : l_(l), m_(m), field_(std::move(field)) {
  if (!field_)
    throw Error(ErrorCode::InvalidArgument, "null field");
  if (l_ == 0)
    throw Error(ErrorCode::InvalidArgument, "l must be positive");
  if (m_ == 0 || m_ > kMaxM)
    throw Error(ErrorCode::InvalidArgument, "m must lie in 1.." + std::to_string(kMaxM));
  if (order() > std::uint64_t{UINT32_MAX})
    throw Error(ErrorCode::InvalidArgument, "group order exceeds 32-bit vertex indices");
}

GroupElement GroupParams::add(const GroupElement& x, const GroupElement& y) const {
  return {(x.z + y.z) % l_, x.v ^ y.v, field_->add(x.f, y.f)};
}

GroupElement GroupParams::neg(const GroupElement& x) const {
  return {(l_ - x.z) % l_, x.v, field_->neg(x.f)};
}

std::uint32_t GroupParams::field_index(FieldElement f) const {
  return f.value == 0 ? 0 : field_->dlog(f) + 1;
}

FieldElement GroupParams::field_from_index(std::uint32_t idx) const {
  return idx == 0 ? field_->spec().zero() : field_->exp(idx - 1);
}

Vertex GroupParams::encode(const GroupElement& x) const {
  return static_cast<Vertex>((std::uint64_t{x.z} * two_m() + x.v) * q() + field_index(x.f));
}

GroupElement GroupParams::decode(Vertex index) const {
  if (index >= order()) {
    throw Error(ErrorCode::IndexOutOfRange, "vertex " + std::to_string(index) +
                                                " outside group of order " +
                                                std::to_string(order()));
  }
  GroupElement out;
  out.f = field_from_index(index % q());
  index /= q();
  out.v = index % two_m();
  out.z = index / two_m();
  return out;
}

std::size_t GeneratingSet::size() const noexcept {
  std::size_t total = s0.size();
  for (const auto& cell : by_z)
    total += cell.size();
  return total;
}

std::vector<GroupElement> GeneratingSet::elements() const {
  std::vector<GroupElement> out = s0;
  for (const auto& cell : by_z)
    out.insert(out.end(), cell.begin(), cell.end());
  return out;
}

bool GeneratingSet::contains(const GroupElement& x) const {
  if (x.f.value == 0)
    return std::find(s0.begin(), s0.end(), x) != s0.end();
  if (x.z != 0 || x.v == 0 || x.v > by_z.size())
    return false;
  const auto& cell = by_z[x.v - 1];
  return std::find(cell.begin(), cell.end(), x) != cell.end();
}

GeneratingSet generating_set(const GroupParams& gp, const Bijection& pi) {
  if (pi.m() != gp.m())
    throw Error(ErrorCode::InvalidArgument, "bijection and group disagree on m");
  GeneratingSet s;
  const FieldElement zero = gp.field().spec().zero();
  for (std::uint32_t z = 0; z < gp.l(); ++z) {
    for (BitVector v = 0; v < gp.two_m(); ++v) {
      if (z != 0 || v != 0)
        s.s0.push_back({z, v, zero});
    }
  }
  const std::uint32_t n = gp.n();
  const std::uint32_t group_order = gp.q() - 1;
  s.by_z.resize(n);
  for (BitVector v = 1; v <= n; ++v) {
    for (std::uint32_t j = pi(v); j < group_order; j += n)
      s.by_z[v - 1].push_back({0, v, gp.field().exp(j)});
  }
  return s;
}

std::optional<GroupElement> asymmetry_witness(const GroupParams& gp, const GeneratingSet& s) {
  for (const auto& x : s.elements()) {
    if (!s.contains(gp.neg(x)))
      return x;
  }
  return std::nullopt;
}

Graph build_cayley_graph(const GroupParams& gp, const GeneratingSet& s) {
  // Membership by vertex index of the connection set.
  const std::uint64_t n = gp.order();
  std::vector<bool> in_s(n, false);
  for (const auto& x : s.elements())
    in_s[gp.encode(x)] = true;
  for (const auto& x : s.elements()) {
    if (!in_s[gp.encode(gp.neg(x))]) {
      throw Error(ErrorCode::AsymmetricGeneratingSet,
                  "generator (" + std::to_string(x.z) + ", " + std::to_string(x.v) + ", " +
                      std::to_string(x.f.value) + ") has no inverse in S");
    }
  }

  std::vector<std::vector<Vertex>> lists(n);
  const auto gens = s.elements();
  for (Vertex u = 0; u < n; ++u) {
    const GroupElement x = gp.decode(u);
    auto& list = lists[u];
    list.reserve(gens.size());
    for (const auto& g : gens)
      list.push_back(gp.encode(gp.add(x, g)));
  }
  return Graph::from_adjacency(std::move(lists));
}

} // namespace ergc
