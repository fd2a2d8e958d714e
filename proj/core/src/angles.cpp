// Exact angle comparisons. The signed squared cosine of an angle of a
// rational triangle is rational; the one of a rational-degree threshold is
// generally not, so it is enclosed in a certified MPFR interval that is
// refined until the comparison is strict.

#include <array>
#include <optional>

#include <mpfr.h>

#include "georeduce/errors.hpp"
#include "georeduce/geom2d.hpp"

namespace georeduce::geom2d {
namespace {

class MpfrValue {
 public:
  explicit MpfrValue(mpfr_prec_t prec) { mpfr_init2(value_, prec); }
  ~MpfrValue() { mpfr_clear(value_); }
  MpfrValue(const MpfrValue&) = delete;
  MpfrValue& operator=(const MpfrValue&) = delete;

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }

  Rational to_rational() const {
    mpq_class q;
    mpfr_get_q(q.get_mpq_t(), value_);
    return Rational(std::move(q));
  }

 private:
  mpfr_t value_;
};

// cos(x) * |cos(x)|, strictly decreasing on [0, 180] degrees.
Rational signed_cos_sq(const Point2& apex, const Point2& b, const Point2& c) {
  const Point2 u = b - apex;
  const Point2 v = c - apex;
  const Rational uv = dot(u, v);
  return uv * abs(uv) / (norm_sq(u) * norm_sq(v));
}

// Thresholds whose signed squared cosine is rational. cos^2(x) is rational
// at a rational number of degrees only when cos(2x) is, which by Niven's
// theorem pins 2x to a multiple of 60 or 90 degrees.
std::optional<Rational> exact_signed_cos_sq(const Rational& deg) {
  static const std::array<std::pair<long, Rational>, 7> table{{
      {30, Rational(3, 4)},
      {45, Rational(1, 2)},
      {60, Rational(1, 4)},
      {90, Rational(0)},
      {120, Rational(-1, 4)},
      {135, Rational(-1, 2)},
      {150, Rational(-3, 4)},
  }};
  for (const auto& [d, value] : table) {
    if (deg == Rational(d)) return value;
  }
  return std::nullopt;
}

struct Enclosure {
  Rational lo;
  Rational hi;
  bool valid = false;
};

// Certified [lo, hi] around cos(deg)|cos(deg)| for 0 < deg < 180.
Enclosure enclose_signed_cos_sq(const Rational& deg, mpfr_prec_t prec) {
  MpfrValue pi_lo(prec), pi_hi(prec), x_lo(prec), x_hi(prec);
  mpfr_const_pi(pi_lo.get(), MPFR_RNDD);
  mpfr_const_pi(pi_hi.get(), MPFR_RNDU);

  const mpq_class ratio = deg.mpq() / 180;  // in (0, 1)
  mpfr_mul_q(x_lo.get(), pi_lo.get(), ratio.get_mpq_t(), MPFR_RNDD);
  mpfr_mul_q(x_hi.get(), pi_hi.get(), ratio.get_mpq_t(), MPFR_RNDU);
  // cos is monotone only on [0, pi]; insist the argument interval is inside.
  if (mpfr_sgn(x_lo.get()) <= 0 || mpfr_cmp(x_hi.get(), pi_lo.get()) >= 0) {
    return {};
  }

  MpfrValue c_lo(prec), c_hi(prec), abs_lo(prec), abs_hi(prec), g_lo(prec),
      g_hi(prec);
  mpfr_cos(c_lo.get(), x_hi.get(), MPFR_RNDD);
  mpfr_cos(c_hi.get(), x_lo.get(), MPFR_RNDU);
  mpfr_abs(abs_lo.get(), c_lo.get(), MPFR_RNDN);  // exact
  mpfr_abs(abs_hi.get(), c_hi.get(), MPFR_RNDN);
  // c |c| is increasing in c, so the rounded endpoints bound it.
  mpfr_mul(g_lo.get(), c_lo.get(), abs_lo.get(), MPFR_RNDD);
  mpfr_mul(g_hi.get(), c_hi.get(), abs_hi.get(), MPFR_RNDU);
  return {g_lo.to_rational(), g_hi.to_rational(), true};
}

constexpr mpfr_prec_t kInitialPrecision = 64;
constexpr mpfr_prec_t kMaxPrecision = 1 << 20;

}  // namespace

int compare_angle(const Point2& apex, const Point2& b, const Point2& c,
                  const Rational& degrees) {
  if (orientation(apex, b, c) == 0) {
    throw Error(ErrorCode::kDegenerateInput, "angle of a degenerate triangle");
  }
  // Interior angles of a non-degenerate triangle lie strictly in (0, 180).
  if (degrees.sign() <= 0) return 1;
  if (degrees >= Rational(180)) return -1;

  const Rational g = signed_cos_sq(apex, b, c);
  if (const auto exact = exact_signed_cos_sq(degrees)) {
    if (g == *exact) {
      throw Error(ErrorCode::kThresholdCoincidence,
                  "angle equals the threshold " + degrees.str() + " exactly");
    }
    // Larger signed cos^2 means a smaller angle.
    return g > *exact ? -1 : 1;
  }
  for (mpfr_prec_t prec = kInitialPrecision; prec <= kMaxPrecision; prec *= 2) {
    const Enclosure e = enclose_signed_cos_sq(degrees, prec);
    if (!e.valid) continue;
    if (g > e.hi) return -1;
    if (g < e.lo) return 1;
  }
  // Unreachable for rational-degree thresholds outside the exact table: the
  // threshold value is irrational and g is rational.
  throw Error(ErrorCode::kThresholdCoincidence,
              "angle comparison did not separate at maximum precision");
}

}  // namespace georeduce::geom2d
