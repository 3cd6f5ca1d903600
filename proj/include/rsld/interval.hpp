#pragma once

// Closed real intervals with outward (directed) rounding on top of MPFR.
// Used to certify comparisons that involve log2, exp, ln and roots.

#include "rsld/numeric.hpp"

#include <mpfr.h>

#include <functional>
#include <utility>

namespace rsld::interval {

class Real {
 public:
  explicit Real(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
  Real(const Real& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  mpfr_ptr get() noexcept { return v_; }
  mpfr_srcptr get() const noexcept { return v_; }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

 private:
  mpfr_t v_;
};

class Interval {
 public:
  explicit Interval(mpfr_prec_t prec) : lo_(prec), hi_(prec), prec_(prec) {}

  static Interval exact(const BigInt& x, mpfr_prec_t prec);
  static Interval exact(const Rational& x, mpfr_prec_t prec);

  const Real& lo() const noexcept { return lo_; }
  const Real& hi() const noexcept { return hi_; }
  Real& lo() noexcept { return lo_; }
  Real& hi() noexcept { return hi_; }
  mpfr_prec_t precision() const noexcept { return prec_; }
  double mid() const { return (lo_.to_double() + hi_.to_double()) / 2; }

  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  /// Requires b not to contain zero.
  friend Interval operator/(const Interval& a, const Interval& b);

  // Monotone functions; arguments must lie in the function's domain.
  friend Interval log2(const Interval& a);
  friend Interval log(const Interval& a);
  friend Interval exp(const Interval& a);
  friend Interval sqrt(const Interval& a);
  /// a^(1/k) for a > 0.
  friend Interval root(const Interval& a, unsigned long k);

 private:
  Real lo_, hi_;
  mpfr_prec_t prec_;
};

enum class Relation { Less, LessEqual };

struct Verdict {
  bool holds = false;
  mpfr_prec_t precision = 0;
  double margin = 0;  // mid(rhs) - mid(lhs), informational
};

inline constexpr mpfr_prec_t kPrecisionLadder[] = {64, 256, 1024};

/// Decides lhs REL rhs, rebuilding both sides at 64, 256 and 1024 bits until
/// the intervals separate. Throws Error(UncertifiedComparison) otherwise.
Verdict certify(const std::function<std::pair<Interval, Interval>(mpfr_prec_t)>& sides, Relation rel);

}  // namespace rsld::interval
