#pragma once

// Exact validators for the parameter conditions of the random-puncturing
// list-decoding theorems, plus the Singleton and Johnson reference bounds.
// Purely rational conditions are decided in exact arithmetic; conditions
// involving log2, ln, exp or roots go through certified interval comparisons.

#include "rsld/numeric.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rsld::bounds {

struct CheckResult {
  std::string name;
  bool holds = false;
  bool certified = true;
  std::string method;  // "exact", "bracket" or "interval"
  unsigned precision = 0;
  double margin = 0;  // rhs - lhs, informational only
};

struct Report {
  std::vector<CheckResult> checks;

  bool all_hold() const;
  const CheckResult* find(const std::string& name) const;
};

/// q^(c-1) >= n^c, i.e. q >= n^(c/(c-1)). Requires q, n >= 2 and c >= 5.
bool check_field_size(const BigInt& q, const BigInt& n, std::uint64_t c);

struct WindowReport {
  Report report;
  bool window_empty = false;  // no n satisfies 3ch < n <= both upper bounds
};

/// Preconditions of the puncturing theorem at (c, q, h, m, n); all positive, q >= 2.
WindowReport check_window_1_3(std::uint64_t c, const BigInt& q, std::uint64_t h, const BigInt& m,
                              std::uint64_t n);

/// (n + 2chL)/(L+1) < 3ch, exact. L must equal floor(n/(ch)) and be at least 3.
bool check_eq2(std::uint64_t n, std::uint64_t c, std::uint64_t h, std::uint64_t L);

/// n/m <= sqrt(c/8) sqrt(log2 q) / q^(1/c) < 1/2.
Report check_eq3(std::uint64_t n, const BigInt& m, std::uint64_t c, const BigInt& q, std::uint64_t h);

/// 2n^2/m <= (c/4) h log2 q q^(-1/c) < h log2 q / 12.
Report check_eq4(std::uint64_t n, const BigInt& m, std::uint64_t c, const BigInt& q, std::uint64_t h);

struct JohnsonProfile {
  Rational rate_threshold;  // eps^2
  Rational radius;          // 1 - eps
  BigInt list_size;         // q n^2
};

JohnsonProfile johnson_profile(const Rational& epsilon, std::uint64_t n, const BigInt& q);

struct SingletonGap {
  BigInt gap;               // (n - d + 1) - ceil(log_q |C|)
  bool impossible = false;  // negative gap: no code has these parameters
};

SingletonGap singleton_gap(std::uint64_t n, const BigInt& code_size, const BigInt& q, std::uint64_t d);

/// Smallest e with q^e >= x.
std::uint64_t ceil_log(const BigInt& q, const BigInt& x);

struct MainTheoremParams {
  std::uint64_t c = 5;
  Rational epsilon;
  std::uint64_t n = 0;
  BigInt q;
  std::uint64_t k = 0;                 // ceil(eps n / (3c))
  std::uint64_t list_size = 0;         // ceil(3/eps)
  Rational rate_bound;                 // eps / (3c)
  Rational rate;                       // k / n
  Rational failure_exponent;           // eps n / (13c)
  BigInt m;                            // q (full code)
  std::uint64_t h = 0;                 // k - 1
  Rational capacity_ratio;             // rate / eps, informational
};

/// Derived quantities of the main theorem. Throws NotPrimePower,
/// FieldSizeTooSmall, or InvalidArgument on c < 5 or eps outside (0,1).
MainTheoremParams main_params(std::uint64_t c, const Rational& epsilon, std::uint64_t n, const BigInt& q);

/// Every named inequality of the reduction to the puncturing theorem at the
/// instantiation m = q, h = k - 1.
Report main_report(const MainTheoremParams& params);

struct PuncturingTheoremParams {
  std::uint64_t c = 5;
  BigInt q;
  std::uint64_t h = 0;
  BigInt m;
  std::uint64_t n = 0;
  Rational radius;         // 1 - 3ch/n
  std::uint64_t list_size = 0;  // floor(n/(ch))
  Rational failure_exponent;    // h/4
};

PuncturingTheoremParams puncturing_params(std::uint64_t c, const BigInt& q, std::uint64_t h, const BigInt& m,
                                          std::uint64_t n);

}  // namespace rsld::bounds
