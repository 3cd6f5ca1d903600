#include "rsld/interval.hpp"

#include "rsld/error.hpp"

#include <string>

namespace rsld::interval {

Interval Interval::exact(const BigInt& x, mpfr_prec_t prec) {
  Interval out(prec);
  mpfr_set_z(out.lo_.get(), x.backend().data(), MPFR_RNDD);
  mpfr_set_z(out.hi_.get(), x.backend().data(), MPFR_RNDU);
  return out;
}

Interval Interval::exact(const Rational& x, mpfr_prec_t prec) {
  Interval out(prec);
  mpfr_set_q(out.lo_.get(), x.backend().data(), MPFR_RNDD);
  mpfr_set_q(out.hi_.get(), x.backend().data(), MPFR_RNDU);
  return out;
}

Interval operator+(const Interval& a, const Interval& b) {
  Interval out(a.prec_);
  mpfr_add(out.lo_.get(), a.lo_.get(), b.lo_.get(), MPFR_RNDD);
  mpfr_add(out.hi_.get(), a.hi_.get(), b.hi_.get(), MPFR_RNDU);
  return out;
}

Interval operator-(const Interval& a, const Interval& b) {
  Interval out(a.prec_);
  mpfr_sub(out.lo_.get(), a.lo_.get(), b.hi_.get(), MPFR_RNDD);
  mpfr_sub(out.hi_.get(), a.hi_.get(), b.lo_.get(), MPFR_RNDU);
  return out;
}

Interval operator*(const Interval& a, const Interval& b) {
  Interval out(a.prec_);
  Real t(a.prec_);
  const mpfr_srcptr xs[2] = {a.lo_.get(), a.hi_.get()};
  const mpfr_srcptr ys[2] = {b.lo_.get(), b.hi_.get()};
  bool first = true;
  for (auto x : xs) {
    for (auto y : ys) {
      mpfr_mul(t.get(), x, y, MPFR_RNDD);
      if (first || mpfr_less_p(t.get(), out.lo_.get())) mpfr_set(out.lo_.get(), t.get(), MPFR_RNDD);
      mpfr_mul(t.get(), x, y, MPFR_RNDU);
      if (first || mpfr_greater_p(t.get(), out.hi_.get())) mpfr_set(out.hi_.get(), t.get(), MPFR_RNDU);
      first = false;
    }
  }
  return out;
}

Interval operator/(const Interval& a, const Interval& b) {
  if (mpfr_sgn(b.lo_.get()) <= 0 && mpfr_sgn(b.hi_.get()) >= 0) {
    throw Error(Errc::UncertifiedComparison, "interval division by an interval containing zero");
  }
  Interval out(a.prec_);
  Real t(a.prec_);
  const mpfr_srcptr xs[2] = {a.lo_.get(), a.hi_.get()};
  const mpfr_srcptr ys[2] = {b.lo_.get(), b.hi_.get()};
  bool first = true;
  for (auto x : xs) {
    for (auto y : ys) {
      mpfr_div(t.get(), x, y, MPFR_RNDD);
      if (first || mpfr_less_p(t.get(), out.lo_.get())) mpfr_set(out.lo_.get(), t.get(), MPFR_RNDD);
      mpfr_div(t.get(), x, y, MPFR_RNDU);
      if (first || mpfr_greater_p(t.get(), out.hi_.get())) mpfr_set(out.hi_.get(), t.get(), MPFR_RNDU);
      first = false;
    }
  }
  return out;
}

namespace {

using MonotoneFn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);

Interval apply_increasing(const Interval& a, MonotoneFn fn) {
  Interval out(a.precision());
  fn(out.lo().get(), a.lo().get(), MPFR_RNDD);
  fn(out.hi().get(), a.hi().get(), MPFR_RNDU);
  return out;
}

void require_positive(const Interval& a, const char* what) {
  if (mpfr_sgn(a.lo().get()) <= 0) throw Error(Errc::InvalidArgument, std::string(what) + " of a non-positive interval");
}

}  // namespace

Interval log2(const Interval& a) {
  require_positive(a, "log2");
  return apply_increasing(a, mpfr_log2);
}

Interval log(const Interval& a) {
  require_positive(a, "log");
  return apply_increasing(a, mpfr_log);
}

Interval exp(const Interval& a) { return apply_increasing(a, mpfr_exp); }

Interval sqrt(const Interval& a) {
  if (mpfr_sgn(a.lo().get()) < 0) throw Error(Errc::InvalidArgument, "sqrt of a negative interval");
  return apply_increasing(a, mpfr_sqrt);
}

Interval root(const Interval& a, unsigned long k) {
  require_positive(a, "root");
  Interval out(a.precision());
  mpfr_rootn_ui(out.lo().get(), a.lo().get(), k, MPFR_RNDD);
  mpfr_rootn_ui(out.hi().get(), a.hi().get(), k, MPFR_RNDU);
  return out;
}

Verdict certify(const std::function<std::pair<Interval, Interval>(mpfr_prec_t)>& sides, Relation rel) {
  for (mpfr_prec_t prec : kPrecisionLadder) {
    auto [lhs, rhs] = sides(prec);
    const double margin = rhs.mid() - lhs.mid();
    const mpfr_srcptr lhi = lhs.hi().get();
    const mpfr_srcptr llo = lhs.lo().get();
    const mpfr_srcptr rlo = rhs.lo().get();
    const mpfr_srcptr rhi = rhs.hi().get();
    if (rel == Relation::LessEqual) {
      if (mpfr_lessequal_p(lhi, rlo)) return {true, prec, margin};
      if (mpfr_greater_p(llo, rhi)) return {false, prec, margin};
    } else {
      if (mpfr_less_p(lhi, rlo)) return {true, prec, margin};
      if (mpfr_greaterequal_p(llo, rhi)) return {false, prec, margin};
    }
  }
  throw Error(Errc::UncertifiedComparison, "intervals still overlap at 1024 bits");
}

}  // namespace rsld::interval
