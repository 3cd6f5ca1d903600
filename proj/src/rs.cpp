#include "rsld/rs.hpp"

#include "rsld/error.hpp"

#include <algorithm>
#include <string>

namespace rsld::rs {

RSCode RSCode::create(const FieldCtx& ctx, std::size_t k, std::vector<FieldElement> evals) {
  const std::size_t n = evals.size();
  if (k < 1 || k >= n || n > ctx.q()) {
    throw Error(Errc::DegreeOutOfRange, "need 1 <= k < n <= q (k=" + std::to_string(k) +
                                            ", n=" + std::to_string(n) + ", q=" + std::to_string(ctx.q()) + ")");
  }
  std::vector<bool> seen(ctx.q(), false);
  for (const auto& a : evals) {
    if (a.field_id != ctx.id()) throw Error(Errc::MixedFields, "evaluation point from another field");
    if (seen[a.value]) throw Error(Errc::DuplicateEvalPoint, "evaluation points must be distinct");
    seen[a.value] = true;
  }
  return RSCode(ctx, k, std::move(evals));
}

RSCode RSCode::full(const FieldCtx& ctx, std::size_t k) {
  if (k < 1 || k >= ctx.q()) throw Error(Errc::DegreeOutOfRange, "full code needs 1 <= k < q");
  return create(ctx, k, ctx.enumerate_elements());
}

codes::Codeword RSCode::encode(std::span<const FieldElement> coeffs) const {
  if (coeffs.size() != k_) throw Error(Errc::WrongCoefficientCount, "expected exactly k coefficients");
  std::vector<Symbol> raw(k_);
  for (std::size_t j = 0; j < k_; ++j) {
    if (coeffs[j].field_id != ctx_.id()) throw Error(Errc::MixedFields, "coefficient from another field");
    raw[j] = coeffs[j].value;
  }
  return encode_symbols(raw);
}

codes::Codeword RSCode::encode_symbols(std::span<const Symbol> coeffs) const {
  if (coeffs.size() != k_) throw Error(Errc::WrongCoefficientCount, "expected exactly k coefficients");
  codes::Codeword out(evals_.size());
  for (std::size_t i = 0; i < evals_.size(); ++i) {
    const Symbol x = evals_[i].value;
    Symbol acc = 0;
    for (std::size_t j = k_; j-- > 0;) acc = ctx_.add_sym(ctx_.mul_sym(acc, x), coeffs[j]);
    out[i] = acc;
  }
  return out;
}

std::vector<Symbol> RSCode::coefficients_at(std::uint64_t index) const {
  std::vector<Symbol> coeffs(k_, 0);
  for (std::size_t j = k_; j-- > 0;) {
    coeffs[j] = static_cast<Symbol>(index % ctx_.q());
    index /= ctx_.q();
  }
  if (index != 0) throw Error(Errc::InvalidArgument, "codeword index out of range");
  return coeffs;
}

codes::Code materialize(const RSCode& code, std::uint64_t cap, std::uint64_t verify_limit) {
  const BigInt total = code.size();
  if (total > cap) {
    throw Error(Errc::TooLargeToMaterialize, "q^k = " + total.str() + " exceeds cap " + std::to_string(cap));
  }
  std::vector<codes::Codeword> words;
  words.reserve(total.convert_to<std::size_t>());
  code.for_each_codeword([&](std::uint64_t, codes::Codeword w) { words.push_back(std::move(w)); });
  codes::Code out(code.field().q(), code.n(), std::move(words), static_cast<std::size_t>(cap));
  const std::size_t d = code.designed_distance();
  if (total <= verify_limit) {
    const std::size_t measured = codes::compute_min_distance(out);
    if (measured != d) {
      throw Error(Errc::InvalidArgument, "brute-force distance " + std::to_string(measured) +
                                             " differs from n-k+1 = " + std::to_string(d));
    }
    out.cache_distance({d, code.n() - d, codes::DistanceProvenance::Verified});
  } else {
    out.cache_distance({d, code.n() - d, codes::DistanceProvenance::Asserted});
  }
  return out;
}

}  // namespace rsld::rs
