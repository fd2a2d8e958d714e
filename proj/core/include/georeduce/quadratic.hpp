#pragma once

#include <cassert>
#include <cmath>

#include "georeduce/rational.hpp"

namespace georeduce {

// Element a + b * sqrt(d) of the real extension Base(sqrt(d)), d >= 0 a
// rational. Nesting Quadratic<Quadratic<Rational>> gives a biquadratic tower,
// which is all the gear-boundary arithmetic ever needs. Sign decisions are
// exact: no floating point is involved.
//
// Elements with b == 0 are valid in every extension, so the radicand of a
// result is taken from whichever operand actually uses it.
template <typename Base>
class Quadratic {
 public:
  Quadratic() = default;
  Quadratic(Base a)  // NOLINT(google-explicit-constructor)
      : a_(std::move(a)), b_(Base(0)), d_(0) {}
  Quadratic(Base a, Base b, Rational d)
      : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
    assert(d_.sign() >= 0);
  }

  const Base& rational_part() const { return a_; }
  const Base& root_coefficient() const { return b_; }
  const Rational& radicand() const { return d_; }

  bool uses_root() const { return sign_of(b_) != 0 && !d_.is_zero(); }

  Quadratic operator-() const { return Quadratic(-a_, -b_, d_); }

  friend Quadratic operator+(const Quadratic& x, const Quadratic& y) {
    return Quadratic(x.a_ + y.a_, x.b_ + y.b_, merge(x, y));
  }
  friend Quadratic operator-(const Quadratic& x, const Quadratic& y) {
    return Quadratic(x.a_ - y.a_, x.b_ - y.b_, merge(x, y));
  }
  friend Quadratic operator*(const Quadratic& x, const Quadratic& y) {
    const Rational d = merge(x, y);
    return Quadratic(x.a_ * y.a_ + x.b_ * y.b_ * Base(d),
                     x.a_ * y.b_ + x.b_ * y.a_, d);
  }
  friend Quadratic operator*(const Quadratic& x, const Rational& s) {
    return Quadratic(x.a_ * Base(s), x.b_ * Base(s), x.d_);
  }
  friend Quadratic operator*(const Rational& s, const Quadratic& x) {
    return x * s;
  }

  // sign(a + b sqrt(d)): agree-or-compare-squares, recursively exact.
  int sign() const {
    const int sa = sign_of(a_);
    const int sb = d_.is_zero() ? 0 : sign_of(b_);
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    const int t = sign_of(a_ * a_ - b_ * b_ * Base(d_));
    if (t > 0) return sa;
    if (t < 0) return sb;
    return 0;
  }

  double to_double() const {
    return double_of(a_) + double_of(b_) * std::sqrt(d_.to_double());
  }

  friend bool operator==(const Quadratic& x, const Quadratic& y) {
    return (x - y).sign() == 0;
  }

 private:
  static int sign_of(const Base& v) { return v.sign(); }
  static double double_of(const Base& v) { return v.to_double(); }

  static Rational merge(const Quadratic& x, const Quadratic& y) {
    const bool xu = x.uses_root();
    const bool yu = y.uses_root();
    if (xu && yu) {
      assert(x.d_ == y.d_);
      return x.d_;
    }
    if (xu) return x.d_;
    if (yu) return y.d_;
    return x.d_.is_zero() ? y.d_ : x.d_;
  }

  Base a_{};
  Base b_{};
  Rational d_{0};
};

template <typename Base>
int sign(const Quadratic<Base>& q) {
  return q.sign();
}

using QuadNumber = Quadratic<Rational>;
using BiquadNumber = Quadratic<QuadNumber>;

}  // namespace georeduce
