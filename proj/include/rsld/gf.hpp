#pragma once

// Exact arithmetic in GF(p^e).
//
// An element is stored as a packed index in [0, q): its coefficient vector
// (c_0, ..., c_{e-1}) over GF(p), read as base-p digits with c_0 as the most
// significant digit. Increasing index is therefore lexicographic order on the
// coefficient vector compared low-order coefficient first, and index 0 is the
// zero element. For prime fields the index is simply the residue.

#include "rsld/numeric.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace rsld::gf {

using Symbol = std::uint32_t;

inline constexpr std::uint64_t kDefaultFieldCap = std::uint64_t{1} << 20;

struct FieldElement {
  Symbol value = 0;
  std::uint32_t field_id = 0;

  friend bool operator==(const FieldElement&, const FieldElement&) = default;
};

class FieldCtx {
 public:
  /// Builds GF(p^e) with the lexicographically smallest monic irreducible modulus.
  static FieldCtx create(std::uint64_t p, unsigned e, std::uint64_t cap = kDefaultFieldCap);

  /// Parses "p^e" or "p" (e.g. "2^4", "101").
  static FieldCtx parse(std::string_view spec, std::uint64_t cap = kDefaultFieldCap);

  std::uint32_t p() const noexcept { return p_; }
  unsigned e() const noexcept { return e_; }
  std::uint32_t q() const noexcept { return q_; }
  std::uint32_t id() const noexcept { return id_; }

  /// Modulus coefficients, low-order first, length e+1 (monic). For e = 1 this is x.
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
  std::string modulus_string() const;
  std::string spec_string() const;

  FieldElement zero() const noexcept { return {0, id_}; }
  FieldElement one() const noexcept { return {one_, id_}; }
  FieldElement element(Symbol index) const;
  FieldElement from_rep(std::span<const std::uint32_t> coeffs) const;
  std::vector<std::uint32_t> rep(FieldElement a) const;

  FieldElement add(FieldElement a, FieldElement b) const;
  FieldElement sub(FieldElement a, FieldElement b) const;
  FieldElement mul(FieldElement a, FieldElement b) const;
  FieldElement neg(FieldElement a) const;
  FieldElement inv(FieldElement a) const;
  FieldElement pow(FieldElement a, std::uint64_t exponent) const;

  /// All q elements in index order; element i has value i.
  std::vector<FieldElement> enumerate_elements() const;

  // Unchecked symbol-level arithmetic for hot loops. Inputs must be < q.
  Symbol add_sym(Symbol a, Symbol b) const noexcept;
  Symbol mul_sym(Symbol a, Symbol b) const noexcept;

 private:
  FieldCtx() = default;
  void check(FieldElement a) const;
  std::vector<std::uint32_t> unpack(Symbol v) const;
  Symbol pack(std::span<const std::uint32_t> coeffs) const;
  Symbol mul_poly(Symbol a, Symbol b) const;
  Symbol add_digits(Symbol a, Symbol b) const noexcept;

  std::uint32_t p_ = 0;
  unsigned e_ = 0;
  std::uint32_t q_ = 0;
  std::uint32_t id_ = 0;
  Symbol one_ = 0;
  std::vector<std::uint32_t> modulus_;
  // Full add/mul tables for small extension fields.
  std::shared_ptr<const std::vector<std::uint16_t>> add_table_;
  std::shared_ptr<const std::vector<std::uint16_t>> mul_table_;
};

bool is_prime(std::uint64_t n);

struct PrimePower {
  BigInt p;
  unsigned e = 0;
};

/// Factors q as p^e with p prime; nullopt when q is not a prime power.
/// Primality of bases above 2^32 is decided by Miller-Rabin with 40 rounds.
std::optional<PrimePower> prime_power_decomposition(const BigInt& q);

}  // namespace rsld::gf
