// Rigorous enclosures for the logarithmic two-sided bound on E_max(p^s).
// MPFR supplies correctly rounded logarithms; every endpoint is converted to
// an exact rational before it meets the integer energy.

#include <mpfr.h>

#include <memory>
#include <stdexcept>

#include "icg/energy.hpp"

namespace icg {
namespace {

constexpr mpfr_prec_t kPrecisionBits = 256;

class Real {
 public:
  Real() { mpfr_init2(v_, kPrecisionBits); }
  ~Real() { mpfr_clear(v_); }
  Real(const Real&) = delete;
  Real& operator=(const Real&) = delete;

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

  Rational to_rational() const {
    if (!mpfr_number_p(v_)) throw ConsistencyError("loglog_factor: non-finite intermediate");
    if (mpfr_zero_p(v_)) return Rational(0);
    mpz_t z;
    mpz_init(z);
    const mpfr_exp_t e = mpfr_get_z_2exp(z, v_);
    std::unique_ptr<char, void (*)(void*)> digits(mpz_get_str(nullptr, 10, z), free);
    mpz_clear(z);
    Integer mantissa(digits.get());
    if (e >= 0) return Rational(mantissa << static_cast<unsigned>(e));
    return Rational(mantissa, Integer(1) << static_cast<unsigned>(-e));
  }

 private:
  mpfr_t v_;
};

}  // namespace

RationalInterval loglog_factor(const Natural& p) {
  if (p < Natural(3) || !p.fits_u64()) {
    throw std::invalid_argument("loglog_factor: needs 3 <= p < 2^64, got " + p.str());
  }
  const auto pv = static_cast<unsigned long>(p.to_u64());
  Real log_lo, log_hi, loglog_lo, loglog_hi, ratio_lo, ratio_hi, c_lo, c_hi;

  mpfr_set_ui(log_lo.get(), pv, MPFR_RNDN);  // exact at this precision
  mpfr_set_ui(log_hi.get(), pv, MPFR_RNDN);
  mpfr_log(log_lo.get(), log_lo.get(), MPFR_RNDD);
  mpfr_log(log_hi.get(), log_hi.get(), MPFR_RNDU);
  mpfr_log(loglog_lo.get(), log_lo.get(), MPFR_RNDD);
  mpfr_log(loglog_hi.get(), log_hi.get(), MPFR_RNDU);
  // Both logarithms are positive for p >= 3.
  mpfr_div(ratio_lo.get(), loglog_lo.get(), log_hi.get(), MPFR_RNDD);
  mpfr_div(ratio_hi.get(), loglog_hi.get(), log_lo.get(), MPFR_RNDU);
  mpfr_ui_sub(c_lo.get(), 1, ratio_hi.get(), MPFR_RNDD);
  mpfr_ui_sub(c_hi.get(), 1, ratio_lo.get(), MPFR_RNDU);
  return {c_lo.to_rational(), c_hi.to_rational()};
}

AsymptoticBounds asymptotic_emax_bounds(const PrimePowerOrder& order) {
  if (order.p() < Natural(17)) {
    throw std::invalid_argument("asymptotic_emax_bounds: stated only for p >= 17");
  }
  const RationalInterval c = loglog_factor(order.p());
  const Natural base = order.p().checked_sub(1) * order.p().pow(order.s() - 1);
  const Rational lower_scale(base.value() * (order.s() - 1));
  const Rational upper_scale(base.value() * 2 * order.s());
  return {{c.lo * lower_scale, c.hi * lower_scale}, {c.lo * upper_scale, c.hi * upper_scale}};
}

bool within_asymptotic_bounds(const PrimePowerOrder& order, const Natural& energy) {
  const auto b = asymptotic_emax_bounds(order);
  const Rational e(energy.value());
  return b.lower.hi <= e && e <= b.upper.lo;
}

}  // namespace icg
