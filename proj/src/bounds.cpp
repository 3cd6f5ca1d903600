#include "rsld/bounds.hpp"

#include "rsld/error.hpp"
#include "rsld/gf.hpp"
#include "rsld/interval.hpp"

namespace rsld::bounds {

using interval::Interval;
using interval::Relation;

bool Report::all_hold() const {
  for (const auto& c : checks) {
    if (!c.holds) return false;
  }
  return true;
}

const CheckResult* Report::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

namespace {

double to_double(const Rational& r) { return r.convert_to<double>(); }

template <typename T>
CheckResult exact_check(std::string name, const T& lhs, const T& rhs, Relation rel) {
  CheckResult r;
  r.name = std::move(name);
  r.holds = rel == Relation::Less ? lhs < rhs : lhs <= rhs;
  r.method = "exact";
  r.margin = to_double(Rational(rhs) - Rational(lhs));
  return r;
}

CheckResult interval_check(std::string name,
                           const std::function<std::pair<Interval, Interval>(mpfr_prec_t)>& sides, Relation rel) {
  const auto v = interval::certify(sides, rel);
  CheckResult r;
  r.name = std::move(name);
  r.holds = v.holds;
  r.method = "interval";
  r.precision = static_cast<unsigned>(v.precision);
  r.margin = v.margin;
  return r;
}

// 8 n^2 <= c h^2 log2 q, using the integer bracket floor/ceil of log2 q first.
CheckResult sqrt_upper(std::uint64_t c, const BigInt& q, std::uint64_t h, std::uint64_t n) {
  const std::string name = "n <= sqrt(log2 q) sqrt(c/8) h";
  const BigInt lhs = BigInt(8) * n * n;
  const BigInt coef = BigInt(c) * h * h;
  const std::uint64_t bits = bit_length(q);
  const bool exact_log = is_power_of_two(q);
  const BigInt log_lo = bits - 1;
  const BigInt log_hi = exact_log ? log_lo : BigInt(bits);
  if (lhs <= coef * log_lo || lhs > coef * log_hi) {
    CheckResult r = exact_check(name, lhs, BigInt(coef * log_lo), Relation::LessEqual);
    r.method = exact_log ? "exact" : "bracket";
    return r;
  }
  return interval_check(
      name,
      [&](mpfr_prec_t prec) {
        return std::pair{Interval::exact(lhs, prec), Interval::exact(coef, prec) * log2(Interval::exact(q, prec))};
      },
      Relation::LessEqual);
}

// ln(2n/(ch)) <= h/(4c^3).
CheckResult exp_upper(std::uint64_t c, std::uint64_t h, std::uint64_t n) {
  const std::string name = "n <= e^(h/(4c^3)) (c/2) h";
  const BigInt ch = BigInt(c) * h;
  if (BigInt(2) * n <= ch) {
    // ln of a ratio <= 1 is <= 0 < h/(4c^3).
    return exact_check(name, BigInt(2) * n, ch, Relation::LessEqual);
  }
  const Rational ratio(BigInt(2) * n, ch);
  const Rational rhs(BigInt(h), BigInt(4) * c * c * c);
  return interval_check(
      name,
      [&](mpfr_prec_t prec) { return std::pair{log(Interval::exact(ratio, prec)), Interval::exact(rhs, prec)}; },
      Relation::LessEqual);
}

void require_positive(std::uint64_t c, const BigInt& q, std::uint64_t h, const BigInt& m, std::uint64_t n) {
  if (c < 1 || h < 1 || n < 1 || m < 1 || q < 2) {
    throw Error(Errc::InvalidArgument, "need positive c, h, m, n and q >= 2");
  }
}

}  // namespace

bool check_field_size(const BigInt& q, const BigInt& n, std::uint64_t c) {
  if (q < 2 || n < 2 || c < 5) throw Error(Errc::InvalidArgument, "field size check needs q, n >= 2 and c >= 5");
  return ipow(q, c - 1) >= ipow(n, c);
}

WindowReport check_window_1_3(std::uint64_t c, const BigInt& q, std::uint64_t h, const BigInt& m,
                              std::uint64_t n) {
  require_positive(c, q, h, m, n);
  WindowReport out;
  auto& checks = out.report.checks;
  checks.push_back(exact_check("h <= q^(-1/c) m", ipow(BigInt(h), c) * q, ipow(m, c), Relation::LessEqual));
  checks.push_back(exact_check("3ch < n", BigInt(3) * c * h, BigInt(n), Relation::Less));
  checks.push_back(sqrt_upper(c, q, h, n));
  checks.push_back(exp_upper(c, h, n));
  // Both upper bounds are monotone in n, so the window is non-empty iff its
  // smallest candidate 3ch + 1 satisfies them.
  const std::uint64_t first = 3 * c * h + 1;
  out.window_empty = !(sqrt_upper(c, q, h, first).holds && exp_upper(c, h, first).holds);
  return out;
}

bool check_eq2(std::uint64_t n, std::uint64_t c, std::uint64_t h, std::uint64_t L) {
  if (c < 1 || h < 1) throw Error(Errc::InvalidArgument, "eq2 needs positive c and h");
  const std::uint64_t expected = n / (c * h);
  if (L != expected) throw Error(Errc::InvalidArgument, "L must equal floor(n/(ch)) = " + std::to_string(expected));
  if (L < 3) throw Error(Errc::InvalidArgument, "the puncturing theorem needs L >= 3");
  const BigInt ch = BigInt(c) * h;
  return BigInt(n) + 2 * ch * L < 3 * ch * (L + 1);
}

Report check_eq3(std::uint64_t n, const BigInt& m, std::uint64_t c, const BigInt& q, std::uint64_t h) {
  require_positive(c, q, h, m, n);
  auto middle = [&](mpfr_prec_t prec) {
    return sqrt(Interval::exact(Rational(c, 8), prec) * log2(Interval::exact(q, prec))) /
           root(Interval::exact(q, prec), c);
  };
  Report out;
  out.checks.push_back(interval_check(
      "n/m <= sqrt(c/8) sqrt(log2 q) / q^(1/c)",
      [&](mpfr_prec_t prec) { return std::pair{Interval::exact(Rational(BigInt(n), m), prec), middle(prec)}; },
      Relation::LessEqual));
  out.checks.push_back(interval_check(
      "sqrt(c/8) sqrt(log2 q) / q^(1/c) < 1/2",
      [&](mpfr_prec_t prec) { return std::pair{middle(prec), Interval::exact(Rational(1, 2), prec)}; },
      Relation::Less));
  out.checks.push_back(exact_check("n/m < 1/2", BigInt(2) * n, m, Relation::Less));
  return out;
}

Report check_eq4(std::uint64_t n, const BigInt& m, std::uint64_t c, const BigInt& q, std::uint64_t h) {
  require_positive(c, q, h, m, n);
  const Rational lhs(BigInt(2) * n * n, m);
  Report out;
  out.checks.push_back(interval_check(
      "2n^2/m <= (c/4) h log2 q q^(-1/c)",
      [&](mpfr_prec_t prec) {
        auto rhs = Interval::exact(Rational(BigInt(c) * h, 4), prec) * log2(Interval::exact(q, prec)) /
                   root(Interval::exact(q, prec), c);
        return std::pair{Interval::exact(lhs, prec), rhs};
      },
      Relation::LessEqual));
  // (c/4) q^(-1/c) < 1/12  <=>  (3c)^c < q
  out.checks.push_back(exact_check("(c/4) q^(-1/c) < 1/12", ipow(BigInt(3) * c, c), q, Relation::Less));
  out.checks.push_back(interval_check(
      "2n^2/m < h log2 q / 12",
      [&](mpfr_prec_t prec) {
        return std::pair{Interval::exact(lhs, prec),
                         Interval::exact(Rational(BigInt(h), 12), prec) * log2(Interval::exact(q, prec))};
      },
      Relation::Less));
  return out;
}

JohnsonProfile johnson_profile(const Rational& epsilon, std::uint64_t n, const BigInt& q) {
  if (epsilon <= 0 || epsilon >= 1) throw Error(Errc::InvalidArgument, "epsilon must lie strictly between 0 and 1");
  return {epsilon * epsilon, Rational(1) - epsilon, q * n * n};
}

std::uint64_t ceil_log(const BigInt& q, const BigInt& x) {
  if (q < 2) throw Error(Errc::InvalidArgument, "logarithm base must be at least 2");
  std::uint64_t e = 0;
  BigInt p = 1;
  while (p < x) {
    p *= q;
    ++e;
  }
  return e;
}

SingletonGap singleton_gap(std::uint64_t n, const BigInt& code_size, const BigInt& q, std::uint64_t d) {
  if (d < 1 || d > n) throw Error(Errc::InvalidDistance, "distance must lie in [1, n]");
  if (code_size < 1) throw Error(Errc::InvalidArgument, "code must be non-empty");
  SingletonGap out;
  out.gap = BigInt(n - d + 1) - ceil_log(q, code_size);
  out.impossible = out.gap < 0;
  return out;
}

MainTheoremParams main_params(std::uint64_t c, const Rational& epsilon, std::uint64_t n, const BigInt& q) {
  if (c < 5) throw Error(Errc::InvalidArgument, "c must be at least 5");
  if (epsilon <= 0 || epsilon >= 1) throw Error(Errc::InvalidArgument, "epsilon must lie strictly between 0 and 1");
  if (n < 2) throw Error(Errc::InvalidArgument, "n must be at least 2");
  if (!gf::prime_power_decomposition(q)) throw Error(Errc::NotPrimePower, q.str() + " is not a prime power");
  if (!check_field_size(q, BigInt(n), c)) {
    throw Error(Errc::FieldSizeTooSmall, "q = " + q.str() + " is below n^(c/(c-1))");
  }
  MainTheoremParams p;
  p.c = c;
  p.epsilon = epsilon;
  p.n = n;
  p.q = q;
  p.k = ceil_of(epsilon * n / (3 * c)).convert_to<std::uint64_t>();
  p.list_size = ceil_of(Rational(3) / epsilon).convert_to<std::uint64_t>();
  p.rate_bound = epsilon / (3 * c);
  p.rate = Rational(p.k, n);
  p.failure_exponent = epsilon * n / (13 * c);
  p.m = q;
  p.h = p.k - 1;
  p.capacity_ratio = p.rate / epsilon;
  return p;
}

Report main_report(const MainTheoremParams& p) {
  Report out;
  auto& checks = out.checks;
  const Rational eps_n = p.epsilon * p.n;
  checks.push_back(exact_check("c >= 5", BigInt(5), BigInt(p.c), Relation::LessEqual));
  checks.push_back(exact_check("q >= n^(c/(c-1))", ipow(BigInt(p.n), p.c), ipow(p.q, p.c - 1), Relation::LessEqual));
  checks.push_back(exact_check("k/n >= eps/(3c)", p.rate_bound, p.rate, Relation::LessEqual));
  checks.push_back(exact_check("h = k-1 <= eps n/(3c)", Rational(BigInt(p.h) * 3 * p.c), eps_n, Relation::LessEqual));
  checks.push_back(exact_check("h >= 1", BigInt(1), BigInt(p.h), Relation::LessEqual));
  if (p.h < 1) return out;

  checks.push_back(exact_check("h <= n", BigInt(p.h), BigInt(p.n), Relation::LessEqual));
  for (auto& c : check_window_1_3(p.c, p.q, p.h, p.m, p.n).report.checks) checks.push_back(std::move(c));

  const std::uint64_t L = p.n / (p.c * p.h);
  checks.push_back(exact_check("floor(n/(ch)) >= 3", BigInt(3), BigInt(L), Relation::LessEqual));
  checks.push_back(exact_check("floor(n/(ch)) <= ceil(3/eps)", BigInt(L), BigInt(p.list_size), Relation::LessEqual));
  checks.push_back(
      exact_check("1 - 3ch/n >= 1 - eps", Rational(BigInt(3) * p.c * p.h), eps_n, Relation::LessEqual));
  checks.push_back(exact_check("h/4 >= eps n/(13c)", Rational(eps_n * 4), Rational(BigInt(13) * p.c * p.h), Relation::LessEqual));
  if (L >= 3) {
    CheckResult eq2;
    eq2.name = "(n + 2chL)/(L+1) < 3ch";
    eq2.holds = check_eq2(p.n, p.c, p.h, L);
    eq2.method = "exact";
    checks.push_back(eq2);
  }
  for (auto& c : check_eq3(p.n, p.m, p.c, p.q, p.h).checks) checks.push_back(std::move(c));
  for (auto& c : check_eq4(p.n, p.m, p.c, p.q, p.h).checks) checks.push_back(std::move(c));
  return out;
}

PuncturingTheoremParams puncturing_params(std::uint64_t c, const BigInt& q, std::uint64_t h, const BigInt& m,
                                          std::uint64_t n) {
  require_positive(c, q, h, m, n);
  PuncturingTheoremParams p;
  p.c = c;
  p.q = q;
  p.h = h;
  p.m = m;
  p.n = n;
  p.radius = Rational(1) - Rational(BigInt(3) * c * h, n);
  p.list_size = n / (c * h);
  p.failure_exponent = Rational(h, 4);
  return p;
}

}  // namespace rsld::bounds
