#include "nikodym/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

#include "nikodym/errors.hpp"

namespace nikodym {

namespace {

mpz_class pow10(unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
  std::string_view digits = s;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (!all_digits(digits)) throw InvalidInput("malformed rational literal: '" + std::string(whole) + "'");
  return mpz_class(std::string(s.front() == '+' ? s.substr(1) : s), 10);
}

Rational parse_decimal(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (const auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    const std::string_view exp_part = s.substr(e + 1);
    std::string_view exp_digits = exp_part;
    if (!exp_digits.empty() && (exp_digits.front() == '-' || exp_digits.front() == '+')) exp_digits.remove_prefix(1);
    if (!all_digits(exp_digits) || exp_digits.size() > 6) {
      throw InvalidInput("malformed rational literal: '" + std::string(text) + "'");
    }
    exponent = std::stol(std::string(exp_part));
    s = s.substr(0, e);
  }
  std::string_view int_part = s;
  std::string_view frac_part;
  if (const auto dot = s.find('.'); dot != std::string_view::npos) {
    int_part = s.substr(0, dot);
    frac_part = s.substr(dot + 1);
  }
  if (int_part.empty() && frac_part.empty()) throw InvalidInput("malformed rational literal: '" + std::string(text) + "'");
  if ((!int_part.empty() && !all_digits(int_part)) || (!frac_part.empty() && !all_digits(frac_part))) {
    throw InvalidInput("malformed rational literal: '" + std::string(text) + "'");
  }
  mpz_class digits(std::string(int_part.empty() ? "0" : int_part) + std::string(frac_part), 10);
  exponent -= static_cast<long>(frac_part.size());
  mpq_class q(digits);
  if (exponent >= 0) {
    q *= mpq_class(pow10(static_cast<unsigned long>(exponent)));
  } else {
    q /= mpq_class(pow10(static_cast<unsigned long>(-exponent)));
  }
  if (negative) q = -q;
  return Rational(q);
}

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw InvalidInput("empty rational literal");

  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const mpz_class num = parse_integer(text.substr(0, slash), text);
    const std::string_view den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) throw InvalidInput("malformed rational literal: '" + std::string(text) + "'");
    const mpz_class den(std::string(den_text), 10);
    if (den == 0) throw InvalidInput("zero denominator in '" + std::string(text) + "'");
    mpq_class q(num, den);
    q.canonicalize();
    return Rational(q);
  }
  return parse_decimal(text);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  q_ /= o.q_;
  return *this;
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  return Rational(Rational::Raw{}, a.q_ / b.q_);
}

mpz_class Rational::floor() const {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

std::string Rational::str() const { return q_.get_num().get_str() + "/" + q_.get_den().get_str(); }

std::string Rational::decimal(int significant) const {
  if (significant < 1) significant = 1;
  if (is_zero()) return "0";
  const bool negative = sign() < 0;
  const mpq_class v = negative ? mpq_class(-q_) : q_;

  // Decimal exponent e with 10^e <= v < 10^(e+1).
  long e = static_cast<long>(mpz_sizeinbase(v.get_num_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(v.get_den_mpz_t(), 10));
  auto scaled_by_pow10 = [&](long k) {
    mpq_class s = v;
    if (k >= 0) s *= mpq_class(pow10(static_cast<unsigned long>(k)));
    else s /= mpq_class(pow10(static_cast<unsigned long>(-k)));
    return s;
  };
  while (scaled_by_pow10(-e) >= 10) ++e;
  while (scaled_by_pow10(-e) < 1) --e;

  // Round v * 10^(sig-1-e) half away from zero.
  auto round_digits = [&](long shift) {
    const mpq_class s = scaled_by_pow10(shift);
    mpz_class twice = 2 * s.get_num();
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), mpz_class(twice + s.get_den()).get_mpz_t(), mpz_class(2 * s.get_den()).get_mpz_t());
    return r;
  };
  mpz_class digits = round_digits(significant - 1 - e);
  if (digits >= pow10(static_cast<unsigned long>(significant))) {
    ++e;
    digits = round_digits(significant - 1 - e);
  }

  std::string d = digits.get_str();
  std::string out;
  const long point = e + 1;  // digits before the decimal point
  if (point <= 0) {
    out = "0." + std::string(static_cast<size_t>(-point), '0') + d;
  } else if (point >= static_cast<long>(d.size())) {
    out = d + std::string(static_cast<size_t>(point - static_cast<long>(d.size())), '0');
  } else {
    out = d.substr(0, static_cast<size_t>(point)) + "." + d.substr(static_cast<size_t>(point));
  }
  if (out.find('.') != std::string::npos) {
    while (out.back() == '0') out.pop_back();
    if (out.back() == '.') out.pop_back();
  }
  return negative ? "-" + out : out;
}

std::string Rational::fixed(int places) const {
  if (places < 0) places = 0;
  const bool negative = sign() < 0;
  mpq_class v = negative ? mpq_class(-q_) : q_;
  v *= mpq_class(pow10(static_cast<unsigned long>(places)));
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), mpz_class(2 * v.get_num() + v.get_den()).get_mpz_t(), mpz_class(2 * v.get_den()).get_mpz_t());
  std::string d = r.get_str();
  if (d.size() <= static_cast<std::size_t>(places)) d.insert(0, static_cast<std::size_t>(places) + 1 - d.size(), '0');
  std::string out = places == 0 ? d : d.substr(0, d.size() - places) + "." + d.substr(d.size() - places);
  return (negative && r != 0) ? "-" + out : out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace nikodym
