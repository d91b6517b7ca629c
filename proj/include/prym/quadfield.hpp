#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace prym {

using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long n, long d = 1) {
  Rat q(n, d);
  q.canonicalize();
  return q;
}

inline Rat rat_of(const Int& n, const Int& d = 1) {
  Rat q(n, d);
  q.canonicalize();
  return q;
}

struct QFError : std::runtime_error {
  explicit QFError(const std::string& m) : std::runtime_error(m) {}
};

// Discriminant of a real quadratic order: D > 0, D = 0 or 1 mod 4.
struct Disc {
  long d = 5;
  bool square = false;
  long sqrt_d = 0;  // set when square

  Disc() = default;
  explicit Disc(long dd) : d(dd) {
    if (d <= 0) throw QFError("discriminant must be positive");
    long m = d % 4;
    if (m != 0 && m != 1) throw QFError("discriminant must be 0 or 1 mod 4");
    long r = static_cast<long>(mpz_class(sqrt(mpz_class(d))).get_si());
    while (r * r > d) --r;
    while ((r + 1) * (r + 1) <= d) ++r;
    if (r * r == d) {
      square = true;
      sqrt_d = r;
    }
  }
  bool operator==(const Disc& o) const { return d == o.d; }
  bool operator!=(const Disc& o) const { return d != o.d; }
};

enum class Sign { negative = -1, zero = 0, positive = 1 };

// Element a + b*sqrt(D) of Q(sqrt(D)).  When D is a perfect square the
// sqrt folds into the rational part at construction, so b == 0 always
// holds for square discriminants.
class QF {
 public:
  QF() : a_(0), b_(0) {}
  QF(Rat a, Rat b, Disc disc) : a_(std::move(a)), b_(std::move(b)), disc_(disc) {
    fold();
  }
  static QF rational(const Rat& a, Disc disc) { return QF(a, Rat(0), disc); }
  static QF sqrt_part(const Rat& b, Disc disc) { return QF(Rat(0), b, disc); }

  const Rat& a() const { return a_; }
  const Rat& b() const { return b_; }
  const Disc& disc() const { return disc_; }
  bool is_rational() const { return b_ == 0; }

  // exact sign by integer case analysis, never floating point
  Sign sign() const {
    int sa = sgn(a_), sb = sgn(b_);
    if (sb == 0) return from_int(sa);
    if (sa == 0) return from_int(sb);
    if (sa > 0 && sb > 0) return Sign::positive;
    if (sa < 0 && sb < 0) return Sign::negative;
    // opposite signs: compare a^2 with b^2 D
    Rat a2 = a_ * a_, b2d = b_ * b_ * disc_.d;
    int c = cmp(a2, b2d);
    if (c == 0) return Sign::zero;  // cannot happen for nonsquare D, b != 0
    // |a| > |b|sqrt(D) ? sign of a : sign of b
    return from_int(c > 0 ? sa : sb);
  }

  QF conj() const { return QF(a_, -b_, disc_, nofold{}); }
  Rat norm() const { return a_ * a_ - b_ * b_ * disc_.d; }
  Rat trace() const { return 2 * a_; }

  QF operator-() const { return QF(-a_, -b_, disc_, nofold{}); }
  QF operator+(const QF& o) const {
    check(o);
    return QF(a_ + o.a_, b_ + o.b_, disc_, nofold{});
  }
  QF operator-(const QF& o) const {
    check(o);
    return QF(a_ - o.a_, b_ - o.b_, disc_, nofold{});
  }
  QF operator*(const QF& o) const {
    check(o);
    return QF(a_ * o.a_ + b_ * o.b_ * disc_.d, a_ * o.b_ + b_ * o.a_, disc_, nofold{});
  }
  QF operator/(const QF& o) const {
    check(o);
    Rat n = o.norm();
    if (n == 0) throw QFError("division by zero in Q(sqrt D)");
    QF num = *this * o.conj();
    return QF(num.a_ / n, num.b_ / n, disc_, nofold{});
  }
  QF& operator+=(const QF& o) { return *this = *this + o; }
  QF& operator-=(const QF& o) { return *this = *this - o; }
  QF& operator*=(const QF& o) { return *this = *this * o; }
  QF& operator/=(const QF& o) { return *this = *this / o; }

  bool operator==(const QF& o) const {
    check(o);
    return a_ == o.a_ && b_ == o.b_;
  }
  bool operator!=(const QF& o) const { return !(*this == o); }
  bool operator<(const QF& o) const { return (*this - o).sign() == Sign::negative; }
  bool operator>(const QF& o) const { return (*this - o).sign() == Sign::positive; }
  bool operator<=(const QF& o) const { return !(*this > o); }
  bool operator>=(const QF& o) const { return !(*this < o); }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_positive() const { return sign() == Sign::positive; }
  bool is_negative() const { return sign() == Sign::negative; }

  QF abs() const { return is_negative() ? -*this : *this; }

  // exact floor of a + b sqrt(D)
  Int floor() const {
    if (b_ == 0) return floor_rat(a_);
    // start from a double estimate, then correct with exact sign tests
    double est = a_.get_d() + b_.get_d() * std::sqrt(static_cast<double>(disc_.d));
    Int n(static_cast<long>(std::floor(est)));
    while ((*this - QF::rational(rat_of(n), disc_)).sign() == Sign::negative) --n;
    while ((*this - QF::rational(rat_of(n + 1), disc_)).sign() != Sign::negative) ++n;
    return n;
  }

  // x mod m for m > 0, result in [0, m)
  QF mod(const QF& m) const {
    if (!m.is_positive()) throw QFError("mod by non-positive element");
    QF q = *this / m;
    Int k = q.floor();
    return *this - m * QF::rational(rat_of(k), disc_);
  }

  double to_double() const {
    return a_.get_d() + b_.get_d() * std::sqrt(static_cast<double>(disc_.d));
  }

  // "a/b + c/d*sqrt(D)" with integer shorthands accepted
  std::string str() const;
  static QF parse(const std::string& s, Disc disc);

 private:
  struct nofold {};
  QF(Rat a, Rat b, Disc disc, nofold) : a_(std::move(a)), b_(std::move(b)), disc_(disc) {}

  void fold() {
    if (disc_.square && b_ != 0) {
      a_ += b_ * disc_.sqrt_d;
      b_ = 0;
    }
  }
  void check(const QF& o) const {
    if (disc_ != o.disc_) throw QFError("mixed-discriminant arithmetic");
  }
  static Sign from_int(int s) {
    return s < 0 ? Sign::negative : (s > 0 ? Sign::positive : Sign::zero);
  }
  static Int floor_rat(const Rat& q) {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
  }

  Rat a_, b_;
  Disc disc_;
};

inline QF operator*(const Rat& r, const QF& x) {
  return QF(r * x.a(), r * x.b(), x.disc());
}
inline QF operator*(long r, const QF& x) { return rat(r) * x; }

inline Sign qf_sign(const QF& x) { return x.sign(); }
inline QF qf_conjugate(const QF& x) { return x.conj(); }
inline Rat qf_norm(const QF& x) { return x.norm(); }

// positive root of x^2 = e x + c, i.e. (e + sqrt(e^2 + 4c))/2, in Q(sqrt D)
// where D must equal (e^2+4c)/k^2 scaling is NOT applied here: the caller
// passes the disc the root lives in and we express sqrt(e^2+4c) = m sqrt(D)
// with m rational.
inline QF quadratic_positive_root(long e, long c, Disc disc) {
  long raw = e * e + 4 * c;
  if (raw <= 0) throw QFError("quadratic has no positive real root data");
  // raw = m^2 * D for rational m = sqrt(raw/D); require raw/D a square of a rational
  // i.e. raw * D a perfect square times D^2: m = sqrt(raw)/sqrt(D)
  // handle via integers: m = p/q with m^2 = raw/D
  Int num = Int(raw) * Int(disc.d);
  Int s = sqrt(num);
  if (s * s != num) throw QFError("root does not lie in the requested field");
  Rat m = rat_of(s, Int(disc.d));  // m = sqrt(raw/D)
  QF root(rat(e, 2), m / 2, disc);
  if (!root.is_positive()) throw QFError("expected the positive root");
  return root;
}

// ---- printing / parsing -------------------------------------------------

inline std::string rat_str(const Rat& q) {
  return q.get_str();
}

inline std::string QF::str() const {
  if (b_ == 0) return rat_str(a_);
  std::string sq = "sqrt(" + std::to_string(disc_.d) + ")";
  std::string bs;
  if (b_ == 1) bs = sq;
  else if (b_ == -1) bs = "-" + sq;
  else bs = rat_str(b_) + "*" + sq;
  if (a_ == 0) return bs;
  if (sgn(b_) > 0) return rat_str(a_) + " + " + bs;
  return rat_str(a_) + " - " + (b_ == -1 ? sq : rat_str(-b_) + "*" + sq);
}

namespace detail {
inline void skip_ws(const std::string& s, size_t& i) {
  while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
}
inline Rat parse_rat(const std::string& s, size_t& i) {
  skip_ws(s, i);
  size_t j = i;
  if (j < s.size() && (s[j] == '+' || s[j] == '-')) ++j;
  size_t digits = j;
  while (j < s.size() && isdigit(static_cast<unsigned char>(s[j]))) ++j;
  if (j == digits) throw QFError("expected number in field element: " + s);
  if (j < s.size() && s[j] == '/') {
    ++j;
    while (j < s.size() && isdigit(static_cast<unsigned char>(s[j]))) ++j;
  }
  Rat q(s.substr(i, j - i));
  q.canonicalize();
  i = j;
  return q;
}
}  // namespace detail

inline QF QF::parse(const std::string& s, Disc disc) {
  Rat a(0), b(0);
  size_t i = 0;
  bool first = true;
  while (true) {
    detail::skip_ws(s, i);
    if (i >= s.size()) break;
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
      detail::skip_ws(s, i);
    } else if (!first) {
      throw QFError("malformed field element: " + s);
    }
    Rat coeff(1);
    bool have_coeff = false;
    if (i < s.size() && (isdigit(static_cast<unsigned char>(s[i])))) {
      coeff = detail::parse_rat(s, i);
      have_coeff = true;
      detail::skip_ws(s, i);
      if (i < s.size() && s[i] == '*') {
        ++i;
        detail::skip_ws(s, i);
      }
    }
    if (i + 4 < s.size() && s.compare(i, 5, "sqrt(") == 0) {
      i += 5;
      size_t close = s.find(')', i);
      if (close == std::string::npos) throw QFError("malformed sqrt(): " + s);
      long dd = std::stol(s.substr(i, close - i));
      if (dd != disc.d) throw QFError("sqrt argument does not match discriminant");
      i = close + 1;
      b += sign * coeff;
    } else {
      if (!have_coeff) throw QFError("malformed field element: " + s);
      a += sign * coeff;
    }
    first = false;
  }
  if (first) throw QFError("empty field element");
  return QF(a, b, disc);
}

// planar vector over the field
struct Vec2 {
  QF x, y;
  Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  Vec2 operator-() const { return {-x, -y}; }
  bool operator==(const Vec2& o) const { return x == o.x && y == o.y; }
  bool is_zero() const { return x.is_zero() && y.is_zero(); }
};
inline QF wedge(const Vec2& u, const Vec2& v) { return u.x * v.y - u.y * v.x; }
inline Vec2 scale(const QF& c, const Vec2& v) { return {c * v.x, c * v.y}; }
inline QF operator*(const QF& c, const Rat& r) { return c * QF::rational(r, c.disc()); }

}  // namespace prym
