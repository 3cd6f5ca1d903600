#include "rsld/numeric.hpp"

#include "rsld/error.hpp"

#include <cctype>

namespace rsld {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

BigInt parse_digits(std::string_view s, std::string_view whole) {
  if (!all_digits(s)) throw Error(Errc::ParseError, "not an integer: '" + std::string(whole) + "'");
  return BigInt(std::string(s));
}

}  // namespace

BigInt parse_bigint(std::string_view text) {
  auto caret = text.find('^');
  if (caret == std::string_view::npos) return parse_digits(text, text);
  BigInt base = parse_digits(text.substr(0, caret), text);
  BigInt exp = parse_digits(text.substr(caret + 1), text);
  if (exp > 1'000'000) throw Error(Errc::ParseError, "exponent too large: '" + std::string(text) + "'");
  return ipow(base, exp.convert_to<std::uint64_t>());
}

Rational parse_rational(std::string_view text) {
  bool negative = false;
  std::string_view body = text;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  Rational value;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_digits(body.substr(0, slash), text);
    BigInt den = parse_digits(body.substr(slash + 1), text);
    if (den == 0) throw Error(Errc::ParseError, "zero denominator in '" + std::string(text) + "'");
    value = Rational(num, den);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    std::string_view ip = body.substr(0, dot);
    std::string_view fp = body.substr(dot + 1);
    if (ip.empty() && fp.empty()) throw Error(Errc::ParseError, "empty number");
    BigInt num = ip.empty() ? BigInt(0) : parse_digits(ip, text);
    BigInt den = 1;
    if (!fp.empty()) {
      BigInt frac = parse_digits(fp, text);
      den = ipow(BigInt(10), fp.size());
      num = num * den + frac;
    }
    value = Rational(num, den);
  } else {
    value = Rational(parse_digits(body, text));
  }
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

std::string to_string(const BigInt& x) { return x.str(); }

BigInt floor_of(const Rational& r) {
  BigInt num = numerator(r);
  BigInt den = denominator(r);  // always positive
  BigInt quot = num / den;      // truncates toward zero
  if (num < 0 && quot * den != num) quot -= 1;
  return quot;
}

BigInt ceil_of(const Rational& r) { return -floor_of(Rational(-r)); }

BigInt ipow(const BigInt& base, std::uint64_t exponent) {
  BigInt result = 1;
  BigInt b = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent > 0) b *= b;
  }
  return result;
}

BigInt iroot(const BigInt& x, unsigned k) {
  if (x < 0 || k == 0) throw Error(Errc::InvalidArgument, "iroot of negative number or zeroth root");
  if (x < 2 || k == 1) return x;
  // Binary search on [0, 2^(ceil(bits/k))].
  BigInt lo = 0;
  BigInt hi = BigInt(1) << static_cast<unsigned>(bit_length(x) / k + 1);
  while (lo < hi) {
    BigInt mid = (lo + hi + 1) / 2;
    if (ipow(mid, k) <= x) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return lo;
}

std::uint64_t bit_length(const BigInt& x) {
  if (x <= 0) return 0;
  return static_cast<std::uint64_t>(boost::multiprecision::msb(x)) + 1;
}

}  // namespace rsld
