#pragma once

#include "rsld/codes.hpp"
#include "rsld/gf.hpp"
#include "rsld/numeric.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace rsld::rs {

using gf::FieldCtx;
using gf::FieldElement;
using gf::Symbol;

inline constexpr std::uint64_t kDefaultMaterializeCap = std::uint64_t{1} << 20;
inline constexpr std::uint64_t kDefaultVerifyLimit = std::uint64_t{1} << 12;

/// Reed-Solomon code: evaluations of all polynomials of degree < k at n
/// distinct points. Codewords are indexed lazily in lexicographic order of
/// the coefficient vector (f_0, ..., f_{k-1}), f(x) = sum f_j x^j.
class RSCode {
 public:
  /// Requires distinct evaluation points and 1 <= k < n <= q.
  static RSCode create(const FieldCtx& ctx, std::size_t k, std::vector<FieldElement> evals);

  /// The code on all q field points in enumeration order; requires 1 <= k < q.
  static RSCode full(const FieldCtx& ctx, std::size_t k);

  const FieldCtx& field() const noexcept { return ctx_; }
  std::size_t k() const noexcept { return k_; }
  std::size_t n() const noexcept { return evals_.size(); }
  const std::vector<FieldElement>& evals() const noexcept { return evals_; }

  Rational rate() const { return Rational(k_, evals_.size()); }
  std::size_t designed_distance() const noexcept { return evals_.size() - k_ + 1; }
  BigInt size() const { return ipow(BigInt(ctx_.q()), k_); }

  codes::Codeword encode(std::span<const FieldElement> coeffs) const;
  codes::Codeword encode_symbols(std::span<const Symbol> coeffs) const;

  /// Coefficient vector at position `index` of the lexicographic order.
  std::vector<Symbol> coefficients_at(std::uint64_t index) const;
  codes::Codeword codeword_at(std::uint64_t index) const { return encode_symbols(coefficients_at(index)); }

  /// Calls fn(index, codeword) for every codeword in order.
  template <typename Fn>
  void for_each_codeword(Fn&& fn) const {
    const std::uint64_t total = size().convert_to<std::uint64_t>();
    std::vector<Symbol> coeffs(k_, 0);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      fn(idx, encode_symbols(coeffs));
      for (std::size_t j = k_; j-- > 0;) {
        if (++coeffs[j] < ctx_.q()) break;
        coeffs[j] = 0;
      }
    }
  }

 private:
  RSCode(FieldCtx ctx, std::size_t k, std::vector<FieldElement> evals)
      : ctx_(std::move(ctx)), k_(k), evals_(std::move(evals)) {}

  FieldCtx ctx_;
  std::size_t k_;
  std::vector<FieldElement> evals_;
};

/// Explicit code with all q^k words. The distance n - k + 1 is verified by
/// brute force when q^k <= verify_limit and otherwise recorded as Asserted.
codes::Code materialize(const RSCode& code, std::uint64_t cap = kDefaultMaterializeCap,
                        std::uint64_t verify_limit = kDefaultVerifyLimit);

}  // namespace rsld::rs
