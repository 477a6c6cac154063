#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace nikodym {

/// Exact fraction with arbitrary-precision numerator and denominator.
///
/// Always canonical: lowest terms, positive denominator. Every arithmetic
/// operation is exact. Backed by GMP's mpq_t.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(int value) : q_(static_cast<long>(value)) {}  // NOLINT
  Rational(long num, long den);
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  /// Parses "p/q", "p", or a plain decimal such as "-0.125" or "1.5e-3".
  /// Decimals are read exactly as fractions over powers of ten.
  static Rational parse(std::string_view text);

  const mpq_class& raw() const { return q_; }
  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }

  /// Largest integer not exceeding the value.
  mpz_class floor() const;

  /// "p/q" in lowest terms; integers render as "p/1".
  std::string str() const;

  /// Decimal rendering rounded half-away-from-zero to `significant` digits,
  /// fixed notation. Annotation only; never parsed back for computation.
  std::string decimal(int significant = 20) const;

  /// Fixed-point rendering with exactly `places` digits after the point,
  /// rounded half away from zero.
  std::string fixed(int places) const;

  double to_double() const { return q_.get_d(); }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(Raw{}, a.q_ + b.q_); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(Raw{}, a.q_ - b.q_); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(Raw{}, a.q_ * b.q_); }
  friend Rational operator/(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a) { return Rational(Raw{}, -a.q_); }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  struct Raw {};
  // gmpxx arithmetic on canonical operands already yields canonical results.
  template <class Expr>
  Rational(Raw, Expr&& e) : q_(std::forward<Expr>(e)) {}

  mpq_class q_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }
inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace nikodym
