#pragma once

#include <cstdint>
#include <numeric>

#include "tropcat/errors.hpp"

namespace tropcat::trop {

/// Element of the tropical integers, written multiplicatively: either 0 or a
/// power u^e with e in Z.  Addition is idempotent (max of exponents, 0 is
/// neutral), multiplication adds exponents (0 is absorbing).
class TropInt {
public:
  constexpr TropInt() = default;

  static constexpr TropInt zero() { return TropInt{}; }
  static constexpr TropInt pow(long long e) {
    TropInt t;
    t.zero_ = false;
    t.exp_ = e;
    return t;
  }

  constexpr bool is_zero() const { return zero_; }
  long long exponent() const {
    detail::require(!zero_, "exponent of the zero element");
    return exp_;
  }

  friend constexpr TropInt operator+(TropInt a, TropInt b) {
    if (a.zero_) return b;
    if (b.zero_) return a;
    return pow(a.exp_ >= b.exp_ ? a.exp_ : b.exp_);
  }
  friend constexpr TropInt operator*(TropInt a, TropInt b) {
    if (a.zero_ || b.zero_) return zero();
    return pow(a.exp_ + b.exp_);
  }

  friend constexpr bool operator==(TropInt a, TropInt b) = default;

private:
  // exp_ stays 0 while zero_ holds so defaulted equality is sound.
  bool zero_ = true;
  long long exp_ = 0;
};

/// x -> x^n.  Injective for every n >= 1; n = 0 is rejected (it would collapse
/// everything to the multiplicative unit and is not an endomorphism here).
inline TropInt frobenius(long long n, TropInt x) {
  detail::require(n >= 1, "frobenius index must be >= 1");
  if (x.is_zero()) return TropInt::zero();
  return TropInt::pow(n * x.exponent());
}

/// Membership in the image of x -> x^m, i.e. m | exponent (0 always belongs).
inline bool in_frobenius_image(TropInt x, long long m) {
  detail::require(m >= 1, "frobenius index must be >= 1");
  if (x.is_zero()) return true;
  return x.exponent() % m == 0;
}

/// Reduced fraction with positive denominator.
struct Rational {
  long long num = 0;
  long long den = 1;

  static Rational make(long long num, long long den) {
    detail::require(den != 0, "rational denominator must be nonzero");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    return Rational{num, den};
  }

  friend constexpr bool operator==(Rational, Rational) = default;
  friend constexpr bool operator<(Rational a, Rational b) {
    return a.num * b.den < b.num * a.den;
  }
};

/// Element of the tropical rationals: 0 or u^q with q a reduced fraction.
/// This is the perfection of TropInt; every Frobenius is invertible on it.
class TropRat {
public:
  TropRat() = default;

  static TropRat zero() { return TropRat{}; }
  static TropRat pow(Rational q) {
    TropRat t;
    t.zero_ = false;
    t.exp_ = q;
    return t;
  }
  static TropRat pow(long long num, long long den = 1) {
    return pow(Rational::make(num, den));
  }

  bool is_zero() const { return zero_; }
  Rational exponent() const {
    detail::require(!zero_, "exponent of the zero element");
    return exp_;
  }

  friend TropRat operator+(TropRat a, TropRat b) {
    if (a.zero_) return b;
    if (b.zero_) return a;
    return pow(a.exp_ < b.exp_ ? b.exp_ : a.exp_);
  }
  friend TropRat operator*(TropRat a, TropRat b) {
    if (a.zero_ || b.zero_) return zero();
    return pow(Rational::make(a.exp_.num * b.exp_.den + b.exp_.num * a.exp_.den,
                              a.exp_.den * b.exp_.den));
  }

  friend bool operator==(TropRat a, TropRat b) = default;

private:
  bool zero_ = true;
  Rational exp_{};
};

inline TropRat frobenius(long long n, TropRat x) {
  detail::require(n >= 1, "frobenius index must be >= 1");
  if (x.is_zero()) return TropRat::zero();
  Rational q = x.exponent();
  return TropRat::pow(Rational::make(n * q.num, q.den));
}

inline TropRat frobenius_inverse(long long n, TropRat x) {
  detail::require(n >= 1, "frobenius index must be >= 1");
  if (x.is_zero()) return TropRat::zero();
  Rational q = x.exponent();
  return TropRat::pow(Rational::make(q.num, q.den * n));
}

/// Membership in the fixed subfield of level n: n * exponent must be integral.
/// These subfields are ordered by divisibility of the level.
inline bool in_subfield(TropRat x, long long n) {
  detail::require(n >= 1, "subfield level must be >= 1");
  if (x.is_zero()) return true;
  Rational q = x.exponent();
  return (n * q.num) % q.den == 0;
}

/// The two-element idempotent semifield {0, 1}.
enum class BElem : unsigned char { zero = 0, one = 1 };

constexpr BElem operator+(BElem a, BElem b) {
  return (a == BElem::one || b == BElem::one) ? BElem::one : BElem::zero;
}
constexpr BElem operator*(BElem a, BElem b) {
  return (a == BElem::one && b == BElem::one) ? BElem::one : BElem::zero;
}

}  // namespace tropcat::trop
