#include "bridgeland/surd.hpp"

#include <cctype>
#include <cmath>

namespace bridgeland {

Rat rat(long num, long den) {
  if (den == 0) fail("DivisionByZero", "zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

static std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t");
  size_t e = s.find_last_not_of(" \t");
  return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

Rat parse_rat(const std::string& raw) {
  std::string text = trim(raw);
  if (text.empty()) fail("ParseError", "empty rational");
  size_t dot = text.find('.');
  if (dot != std::string::npos) {
    // Decimal literal, converted exactly.
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    size_t places = text.size() - dot - 1;
    Rat q;
    if (q.set_str(digits, 10) != 0) fail("ParseError", "bad rational '" + raw + "'");
    Int den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, places);
    q /= Rat(den);
    q.canonicalize();
    return q;
  }
  if (text[0] == '+') text = text.substr(1);
  for (char ch : text) {
    if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' || ch == '/'))
      fail("ParseError", "bad rational '" + raw + "'");
  }
  Rat q;
  if (q.set_str(text, 10) != 0) fail("ParseError", "bad rational '" + raw + "'");
  if (q.get_den() == 0) fail("DivisionByZero", "zero denominator in '" + raw + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rat& q) { return q.get_str(); }
std::string to_string(const Int& z) { return z.get_str(); }

int sign(const Rat& q) { return sgn(q); }
int sign(const Int& z) { return sgn(z); }

bool is_integer(const Rat& q) { return q.get_den() == 1; }

Int floor_rat(const Rat& q) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Int ceil_rat(const Rat& q) {
  Int r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Rat abs_rat(const Rat& q) { return sgn(q) < 0 ? Rat(-q) : q; }

Int isqrt(const Int& z) {
  if (sgn(z) < 0) fail("DomainError", "isqrt of negative");
  Int r;
  mpz_sqrt(r.get_mpz_t(), z.get_mpz_t());
  return r;
}

bool is_square(const Int& z) { return sgn(z) >= 0 && mpz_perfect_square_p(z.get_mpz_t()) != 0; }

bool is_square(const Rat& q) { return sgn(q) >= 0 && is_square(Int(q.get_num())) && is_square(Int(q.get_den())); }

Rat sqrt_exact(const Rat& q) {
  if (!is_square(q)) fail("DomainError", "not a rational square: " + to_string(q));
  Rat r(isqrt(Int(q.get_num())), isqrt(Int(q.get_den())));
  r.canonicalize();
  return r;
}

SquarefreeSplit squarefree_split(const Int& z) {
  if (sgn(z) <= 0) fail("DomainError", "squarefree split of nonpositive " + to_string(z));
  Int rest = z;
  Int k = 1;
  Int core = 1;
  for (Int p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) k *= p;
    if (e % 2) core *= p;
  }
  core *= rest;
  return {core, k};
}

Surd::Surd(const Rat& coef, const Int& rad) : coef_(coef), rad_(rad) {
  if (sgn(rad_) <= 0) fail("DomainError", "surd radicand must be positive");
  coef_.canonicalize();
  if (sgn(coef_) == 0) {
    rad_ = 1;
    return;
  }
  if (rad_ != 1) {
    SquarefreeSplit sp = squarefree_split(rad_);
    coef_ *= Rat(sp.k);
    rad_ = sp.core;
  }
}

Surd Surd::sqrt_of(const Rat& q) {
  if (sgn(q) < 0) fail("DomainError", "sqrt of negative rational");
  // sqrt(p/d) = sqrt(p*d)/d
  Int p = q.get_num();
  Int d = q.get_den();
  return Surd(Rat(1, 1) / Rat(d), p * d);
}

double Surd::to_double() const { return coef_.get_d() * std::sqrt(rad_.get_d()); }

Surd surd_mul(const Surd& x, const Surd& y) {
  if (x.is_zero() || y.is_zero()) return Surd();
  Int g;
  mpz_gcd(g.get_mpz_t(), x.rad().get_mpz_t(), y.rad().get_mpz_t());
  // rad_x = g*a, rad_y = g*b with a, b, g pairwise coprime: product is g^2*a*b.
  Int a = x.rad() / g;
  Int b = y.rad() / g;
  return Surd(x.coef() * y.coef() * Rat(g), a * b);
}

Surd surd_add(const Surd& x, const Surd& y) {
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  if (x.rad() != y.rad())
    broken("MixedRadicand", "cannot add " + to_string(x) + " and " + to_string(y));
  return Surd(x.coef() + y.coef(), x.rad());
}

Surd surd_sub(const Surd& x, const Surd& y) { return surd_add(x, -y); }

Surd surd_scale(const Surd& x, const Rat& q) { return Surd(x.coef() * q, x.rad()); }

std::strong_ordering surd_cmp(const Surd& x, const Surd& y) {
  int sx = x.sign();
  int sy = y.sign();
  if (sx != sy) return sx <=> sy;
  if (sx == 0) return std::strong_ordering::equal;
  // Same sign: compare squares, reversing for negatives.
  Rat qx = x.square();
  Rat qy = y.square();
  int c = cmp(qx, qy);
  if (sx < 0) c = -c;
  return c <=> 0;
}

Rat surd_div_sqrt(const Surd& x, const Int& m) {
  Surd q = surd_mul(x, Surd(Rat(1), m));
  if (!q.is_rational()) broken("InvariantViolation", to_string(x) + " / sqrt(" + to_string(m) + ") is irrational");
  return q.coef() / Rat(m);
}

std::string to_string(const Surd& x) {
  if (x.is_rational()) return to_string(x.coef());
  std::string root = "sqrt(" + to_string(x.rad()) + ")";
  if (x.coef() == 1) return root;
  if (x.coef() == -1) return "-" + root;
  return to_string(x.coef()) + "*" + root;
}

Surd parse_surd(const std::string& raw) {
  std::string text = trim(raw);
  size_t pos = text.find("sqrt(");
  if (pos == std::string::npos) return Surd(parse_rat(text));
  size_t close = text.find(')', pos);
  if (close == std::string::npos || close != text.size() - 1) fail("ParseError", "bad surd '" + raw + "'");
  std::string rad_text = trim(text.substr(pos + 5, close - pos - 5));
  Rat rad = parse_rat(rad_text);
  if (!is_integer(rad) || sgn(rad) <= 0) fail("ParseError", "radicand must be a positive integer in '" + raw + "'");
  std::string head = trim(text.substr(0, pos));
  Rat coef(1);
  if (head == "-") {
    coef = -1;
  } else if (!head.empty() && head != "+") {
    if (head.back() != '*') fail("ParseError", "expected '*' before sqrt in '" + raw + "'");
    coef = parse_rat(head.substr(0, head.size() - 1));
  }
  return Surd(coef, Int(rad.get_num()));
}

// QnNumber

QnNumber::QnNumber(const Rat& u, const Rat& v, const Int& rad) : u_(u), v_(v), rad_(rad) {
  if (sgn(rad_) <= 0) fail("DomainError", "Q(sqrt(n)) needs n > 0");
  u_.canonicalize();
  v_.canonicalize();
  if (is_square(rad_)) {
    u_ += v_ * Rat(isqrt(rad_));
    v_ = 0;
  }
}

QnNumber QnNumber::from_surd(const Surd& x, const Int& rad) {
  if (x.is_rational()) return QnNumber(x.coef(), Rat(0), rad);
  SquarefreeSplit sp = squarefree_split(rad);
  if (x.rad() != sp.core) broken("MixedRadicand", to_string(x) + " is not in Q(sqrt(" + to_string(rad) + "))");
  // c*sqrt(core) = (c/k)*sqrt(rad)
  return QnNumber(Rat(0), x.coef() / Rat(sp.k), rad);
}

Int QnNumber::common_rad(const QnNumber& o) const {
  if (rad_ == o.rad_) return rad_;
  if (is_rational()) return o.rad_;
  if (o.is_rational()) return rad_;
  broken("MixedRadicand", "Q(sqrt(" + to_string(rad_) + ")) vs Q(sqrt(" + to_string(o.rad_) + "))");
}

int QnNumber::sign() const {
  int su = sgn(u_);
  int sv = sgn(v_);
  if (sv == 0) return su;
  if (su == 0 || su == sv) return sv;
  // Opposite signs: whichever term has the larger square wins.
  int c = cmp(u_ * u_, Rat(rad_) * v_ * v_);
  if (c == 0) return 0;
  return c > 0 ? su : sv;
}

double QnNumber::to_double() const { return u_.get_d() + v_.get_d() * std::sqrt(rad_.get_d()); }

QnNumber QnNumber::operator+(const QnNumber& o) const { return QnNumber(u_ + o.u_, v_ + o.v_, common_rad(o)); }

QnNumber QnNumber::operator-(const QnNumber& o) const { return QnNumber(u_ - o.u_, v_ - o.v_, common_rad(o)); }

QnNumber QnNumber::operator*(const QnNumber& o) const {
  Int r = common_rad(o);
  return QnNumber(u_ * o.u_ + Rat(r) * v_ * o.v_, u_ * o.v_ + v_ * o.u_, r);
}

QnNumber QnNumber::operator/(const QnNumber& o) const {
  if (o.is_zero()) fail("DivisionByZero", "division by zero in Q(sqrt(n))");
  Rat nrm = o.norm();
  if (sgn(nrm) == 0) broken("InvariantViolation", "nonzero element with zero norm");
  QnNumber num = *this * o.conj();
  return QnNumber(num.u_ / nrm, num.v_ / nrm, common_rad(o));
}

bool QnNumber::operator==(const QnNumber& o) const {
  if (u_ != o.u_ || v_ != o.v_) return false;
  return sgn(v_) == 0 || rad_ == o.rad_;
}

std::strong_ordering QnNumber::operator<=>(const QnNumber& o) const { return (*this - o).sign() <=> 0; }

std::string to_string(const QnNumber& x) {
  if (x.is_rational()) return to_string(x.u());
  std::string root = "sqrt(" + to_string(x.rad()) + ")";
  std::string vpart = x.v() == 1 ? root : x.v() == -1 ? "-" + root : to_string(x.v()) + "*" + root;
  if (sgn(x.u()) == 0) return vpart;
  if (vpart[0] == '-') return to_string(x.u()) + vpart;
  return to_string(x.u()) + "+" + vpart;
}

QnComplex QnComplex::operator*(const QnComplex& o) const {
  return QnComplex(re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_);
}

QnComplex QnComplex::operator/(const QnComplex& o) const {
  if (o.is_zero()) fail("DivisionByZero", "complex division by zero");
  QnNumber den = o.abs2();
  QnComplex num = *this * o.conj();
  return QnComplex(num.re_ / den, num.im_ / den);
}

std::string to_string(const QnComplex& z) {
  std::string re = to_string(z.re());
  std::string im = to_string(z.im());
  if (z.im().is_zero()) return re;
  bool compound = !z.im().is_rational() && sgn(z.im().u()) != 0;
  std::string imag = compound ? "(" + im + ")*i" : im + "*i";
  if (z.re().is_zero()) return imag;
  if (imag[0] == '-') return re + imag;
  return re + "+" + imag;
}

SurdMat2 SurdMat2::operator*(const SurdMat2& o) const {
  return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

std::string to_string(const SurdMat2& m) {
  return "(" + to_string(m.a) + "," + to_string(m.b) + ";" + to_string(m.c) + "," + to_string(m.d) + ")";
}

}  // namespace bridgeland
