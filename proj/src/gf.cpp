#include "rsld/gf.hpp"

#include "rsld/error.hpp"

#include <boost/multiprecision/miller_rabin.hpp>

#include <atomic>
#include <charconv>

namespace rsld::gf {

namespace {

std::atomic<std::uint32_t> next_field_id{1};

using Poly = std::vector<std::uint32_t>;  // low-order first

// Remainder of f modulo monic g over GF(p).
Poly poly_mod(Poly f, const Poly& g, std::uint32_t p) {
  const std::size_t dg = g.size() - 1;
  for (std::size_t i = f.size(); i-- > dg;) {
    const std::uint64_t coef = f[i];
    if (coef == 0) continue;
    for (std::size_t j = 0; j <= dg; ++j) {
      const std::uint64_t sub = coef * g[j] % p;
      f[i - dg + j] = static_cast<std::uint32_t>((f[i - dg + j] + p - sub) % p);
    }
  }
  f.resize(dg);
  return f;
}

bool is_zero(const Poly& f) {
  for (auto c : f) {
    if (c != 0) return false;
  }
  return true;
}

// Exhaustive factor check: f (monic, degree e) is irreducible iff no monic g of
// degree 1..e/2 divides it.
bool is_irreducible(const Poly& f, std::uint32_t p) {
  const std::size_t e = f.size() - 1;
  for (std::size_t d = 1; d <= e / 2; ++d) {
    Poly g(d + 1, 0);
    g[d] = 1;
    // Odometer over the d low coefficients of g.
    while (true) {
      if (is_zero(poly_mod(f, g, p))) return false;
      std::size_t i = 0;
      while (i < d && ++g[i] == p) g[i++] = 0;
      if (i == d) break;
    }
  }
  return true;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::optional<PrimePower> prime_power_decomposition(const BigInt& q) {
  if (q < 2) return std::nullopt;
  const auto bits = bit_length(q);
  for (auto e = static_cast<unsigned>(bits); e >= 1; --e) {
    BigInt base = iroot(q, e);
    if (base < 2 || ipow(base, e) != q) continue;
    bool prime = base < (BigInt(1) << 32) ? is_prime(base.convert_to<std::uint64_t>())
                                           : boost::multiprecision::miller_rabin_test(base, 40);
    // The largest e with an exact root leaves a base that is not itself a
    // perfect power, so q is a prime power iff that base is prime.
    if (prime) return PrimePower{base, e};
    return std::nullopt;
  }
  return std::nullopt;
}

FieldCtx FieldCtx::create(std::uint64_t p, unsigned e, std::uint64_t cap) {
  if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
  if (e == 0) throw Error(Errc::DegreeZero, "extension degree must be >= 1");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (q > cap / p) throw Error(Errc::FieldTooLarge, "p^e exceeds cap " + std::to_string(cap));
    q *= p;
  }
  if (q > cap) throw Error(Errc::FieldTooLarge, "p^e exceeds cap " + std::to_string(cap));

  FieldCtx ctx;
  ctx.p_ = static_cast<std::uint32_t>(p);
  ctx.e_ = e;
  ctx.q_ = static_cast<std::uint32_t>(q);
  ctx.id_ = next_field_id.fetch_add(1);
  ctx.one_ = ctx.q_ / ctx.p_;  // c_0 = 1 is the leading digit

  if (e == 1) {
    ctx.modulus_ = {0, 1};
  } else {
    // Low coefficients in packed order, which compares c_0 first.
    for (Symbol v = 0; v < ctx.q_; ++v) {
      Poly f = ctx.unpack(v);
      f.push_back(1);
      if (is_irreducible(f, ctx.p_)) {
        ctx.modulus_ = std::move(f);
        break;
      }
    }
  }

  if (e > 1 && q <= 256) {
    auto add = std::make_shared<std::vector<std::uint16_t>>(q * q);
    auto mul = std::make_shared<std::vector<std::uint16_t>>(q * q);
    for (Symbol a = 0; a < q; ++a) {
      for (Symbol b = 0; b < q; ++b) {
        (*add)[a * q + b] = static_cast<std::uint16_t>(ctx.add_digits(a, b));
        (*mul)[a * q + b] = static_cast<std::uint16_t>(ctx.mul_poly(a, b));
      }
    }
    ctx.add_table_ = std::move(add);
    ctx.mul_table_ = std::move(mul);
  }
  return ctx;
}

FieldCtx FieldCtx::parse(std::string_view spec, std::uint64_t cap) {
  auto parse_u64 = [&](std::string_view s) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
      throw Error(Errc::ParseError, "bad field spec '" + std::string(spec) + "'");
    }
    return v;
  };
  auto caret = spec.find('^');
  if (caret == std::string_view::npos) return create(parse_u64(spec), 1, cap);
  const auto e = parse_u64(spec.substr(caret + 1));
  if (e > 64) throw Error(Errc::FieldTooLarge, "extension degree too large");
  return create(parse_u64(spec.substr(0, caret)), static_cast<unsigned>(e), cap);
}

std::string FieldCtx::spec_string() const {
  return e_ == 1 ? std::to_string(p_) : std::to_string(p_) + "^" + std::to_string(e_);
}

std::string FieldCtx::modulus_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < modulus_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(modulus_[i]);
  }
  return out + "]";
}

std::vector<std::uint32_t> FieldCtx::unpack(Symbol v) const {
  std::vector<std::uint32_t> c(e_);
  for (unsigned j = e_; j-- > 0;) {
    c[j] = v % p_;
    v /= p_;
  }
  return c;
}

Symbol FieldCtx::pack(std::span<const std::uint32_t> coeffs) const {
  Symbol v = 0;
  for (unsigned j = 0; j < e_; ++j) v = v * p_ + coeffs[j];
  return v;
}

Symbol FieldCtx::add_digits(Symbol a, Symbol b) const noexcept {
  if (p_ == 2) return a ^ b;
  Symbol out = 0;
  Symbol scale = 1;
  for (unsigned j = 0; j < e_; ++j) {
    out += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return out;
}

Symbol FieldCtx::mul_poly(Symbol a, Symbol b) const {
  auto x = unpack(a);
  auto y = unpack(b);
  Poly prod(2 * e_ - 1, 0);
  for (unsigned i = 0; i < e_; ++i) {
    if (x[i] == 0) continue;
    for (unsigned j = 0; j < e_; ++j) {
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{x[i]} * y[j]) % p_);
    }
  }
  auto r = poly_mod(std::move(prod), modulus_, p_);
  return pack(r);
}

Symbol FieldCtx::add_sym(Symbol a, Symbol b) const noexcept {
  if (e_ == 1) {
    Symbol s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  if (add_table_) return (*add_table_)[a * q_ + b];
  return add_digits(a, b);
}

Symbol FieldCtx::mul_sym(Symbol a, Symbol b) const noexcept {
  if (e_ == 1) return static_cast<Symbol>(std::uint64_t{a} * b % p_);
  if (mul_table_) return (*mul_table_)[a * q_ + b];
  return mul_poly(a, b);
}

void FieldCtx::check(FieldElement a) const {
  if (a.field_id != id_) throw Error(Errc::MixedFields, "element belongs to a different field");
}

FieldElement FieldCtx::element(Symbol index) const {
  if (index >= q_) throw Error(Errc::InvalidArgument, "element index out of range");
  return {index, id_};
}

FieldElement FieldCtx::from_rep(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() != e_) throw Error(Errc::InvalidArgument, "coefficient vector must have length e");
  for (auto c : coeffs) {
    if (c >= p_) throw Error(Errc::InvalidArgument, "coefficient out of range");
  }
  return {pack(coeffs), id_};
}

std::vector<std::uint32_t> FieldCtx::rep(FieldElement a) const {
  check(a);
  return unpack(a.value);
}

FieldElement FieldCtx::add(FieldElement a, FieldElement b) const {
  check(a);
  check(b);
  return {add_sym(a.value, b.value), id_};
}

FieldElement FieldCtx::neg(FieldElement a) const {
  check(a);
  auto c = unpack(a.value);
  for (auto& x : c) x = (p_ - x) % p_;
  return {pack(c), id_};
}

FieldElement FieldCtx::sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }

FieldElement FieldCtx::mul(FieldElement a, FieldElement b) const {
  check(a);
  check(b);
  return {mul_sym(a.value, b.value), id_};
}

FieldElement FieldCtx::pow(FieldElement a, std::uint64_t exponent) const {
  check(a);
  Symbol result = one_;
  Symbol base = a.value;
  while (exponent > 0) {
    if (exponent & 1U) result = mul_sym(result, base);
    exponent >>= 1U;
    base = mul_sym(base, base);
  }
  return {result, id_};
}

FieldElement FieldCtx::inv(FieldElement a) const {
  check(a);
  if (a.value == 0) throw Error(Errc::DivisionByZero, "inverse of zero");
  return pow(a, q_ - 2);
}

std::vector<FieldElement> FieldCtx::enumerate_elements() const {
  std::vector<FieldElement> out;
  out.reserve(q_);
  for (Symbol v = 0; v < q_; ++v) out.push_back({v, id_});
  return out;
}

}  // namespace rsld::gf
