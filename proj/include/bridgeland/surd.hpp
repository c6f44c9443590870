#pragma once

#include <compare>
#include <string>
#include <utility>

#include <gmpxx.h>

#include "bridgeland/error.hpp"

namespace bridgeland {

using Int = mpz_class;
using Rat = mpq_class;

Rat rat(long num, long den = 1);
Rat parse_rat(const std::string& text);
std::string to_string(const Rat& q);
std::string to_string(const Int& z);

int sign(const Rat& q);
int sign(const Int& z);
bool is_integer(const Rat& q);
Int floor_rat(const Rat& q);
Int ceil_rat(const Rat& q);
Rat abs_rat(const Rat& q);

Int isqrt(const Int& z);
bool is_square(const Int& z);
bool is_square(const Rat& q);
// Exact square root of a rational square; throws if q is not one.
Rat sqrt_exact(const Rat& q);

// z = k^2 * core with core squarefree and positive; z must be positive.
struct SquarefreeSplit {
  Int core;
  Int k;
};
SquarefreeSplit squarefree_split(const Int& z);

// coef * sqrt(rad), rad squarefree.  Zero is stored as 0*sqrt(1).
class Surd {
 public:
  Surd() : coef_(0), rad_(1) {}
  Surd(const Rat& coef, const Int& rad = 1);
  static Surd from_int(long c, long rad = 1) { return Surd(Rat(c), Int(rad)); }
  // sqrt(q) for a nonnegative rational q.
  static Surd sqrt_of(const Rat& q);

  const Rat& coef() const { return coef_; }
  const Int& rad() const { return rad_; }
  bool is_zero() const { return sgn(coef_) == 0; }
  bool is_rational() const { return rad_ == 1; }
  int sign() const { return sgn(coef_); }
  Rat square() const { return coef_ * coef_ * Rat(rad_); }
  double to_double() const;
  Surd operator-() const { return Surd(-coef_, rad_); }

  bool operator==(const Surd& o) const { return coef_ == o.coef_ && rad_ == o.rad_; }

 private:
  Rat coef_;
  Int rad_;
};

Surd surd_mul(const Surd& x, const Surd& y);
Surd surd_add(const Surd& x, const Surd& y);
Surd surd_sub(const Surd& x, const Surd& y);
std::strong_ordering surd_cmp(const Surd& x, const Surd& y);
Surd surd_scale(const Surd& x, const Rat& q);
// x / sqrt(m) for positive integer m, which must come out rational.
Rat surd_div_sqrt(const Surd& x, const Int& m);

inline Surd operator*(const Surd& x, const Surd& y) { return surd_mul(x, y); }
inline Surd operator+(const Surd& x, const Surd& y) { return surd_add(x, y); }
inline Surd operator-(const Surd& x, const Surd& y) { return surd_sub(x, y); }
inline std::strong_ordering operator<=>(const Surd& x, const Surd& y) { return surd_cmp(x, y); }

std::string to_string(const Surd& x);
// Grammar: INT | INT*sqrt(INT) | sqrt(INT) | -sqrt(INT), with INT optionally p/q.
Surd parse_surd(const std::string& text);

// u + v*sqrt(rad).  A perfect-square radicand folds v into u.
class QnNumber {
 public:
  QnNumber() : u_(0), v_(0), rad_(1) {}
  QnNumber(const Rat& u, const Rat& v, const Int& rad);
  static QnNumber rational(const Rat& u, const Int& rad) { return QnNumber(u, Rat(0), rad); }
  // Surd lying in Q(sqrt(rad)), i.e. its own radicand is 1 or the core of rad.
  static QnNumber from_surd(const Surd& x, const Int& rad);

  const Rat& u() const { return u_; }
  const Rat& v() const { return v_; }
  const Int& rad() const { return rad_; }
  bool is_zero() const { return sgn(u_) == 0 && sgn(v_) == 0; }
  bool is_rational() const { return sgn(v_) == 0; }
  int sign() const;
  QnNumber conj() const { return QnNumber(u_, -v_, rad_); }
  Rat norm() const { return u_ * u_ - Rat(rad_) * v_ * v_; }
  double to_double() const;

  QnNumber operator-() const { return QnNumber(-u_, -v_, rad_); }
  QnNumber operator+(const QnNumber& o) const;
  QnNumber operator-(const QnNumber& o) const;
  QnNumber operator*(const QnNumber& o) const;
  QnNumber operator/(const QnNumber& o) const;
  bool operator==(const QnNumber& o) const;
  std::strong_ordering operator<=>(const QnNumber& o) const;

 private:
  Int common_rad(const QnNumber& o) const;

  Rat u_;
  Rat v_;
  Int rad_;
};

std::string to_string(const QnNumber& x);

class QnComplex {
 public:
  QnComplex() = default;
  QnComplex(QnNumber re, QnNumber im) : re_(std::move(re)), im_(std::move(im)) {}

  const QnNumber& re() const { return re_; }
  const QnNumber& im() const { return im_; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  QnComplex conj() const { return QnComplex(re_, -im_); }
  QnNumber abs2() const { return re_ * re_ + im_ * im_; }

  QnComplex operator-() const { return QnComplex(-re_, -im_); }
  QnComplex operator+(const QnComplex& o) const { return QnComplex(re_ + o.re_, im_ + o.im_); }
  QnComplex operator-(const QnComplex& o) const { return QnComplex(re_ - o.re_, im_ - o.im_); }
  QnComplex operator*(const QnComplex& o) const;
  QnComplex operator/(const QnComplex& o) const;
  bool operator==(const QnComplex& o) const { return re_ == o.re_ && im_ == o.im_; }

 private:
  QnNumber re_;
  QnNumber im_;
};

std::string to_string(const QnComplex& z);

// 2x2 matrix of single-term surds (a b; c d).
struct SurdMat2 {
  Surd a, b, c, d;

  static SurdMat2 identity() { return {Surd(1), Surd(0), Surd(0), Surd(1)}; }
  Surd det() const { return a * d - b * c; }
  SurdMat2 operator*(const SurdMat2& o) const;
  SurdMat2 operator-() const { return {-a, -b, -c, -d}; }
  SurdMat2 transpose() const { return {a, c, b, d}; }
  bool operator==(const SurdMat2& o) const { return a == o.a && b == o.b && c == o.c && d == o.d; }
};

std::string to_string(const SurdMat2& m);

}  // namespace bridgeland
