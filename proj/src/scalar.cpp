#include "vallab/scalar.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

namespace vallab {

namespace {

std::string trim(std::string_view text) {
  std::size_t first = 0;
  std::size_t last = text.size();
  while (first < last && std::isspace(static_cast<unsigned char>(text[first]))) ++first;
  while (last > first && std::isspace(static_cast<unsigned char>(text[last - 1]))) --last;
  return std::string(text.substr(first, last - first));
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::size_t hash_mpz(mpz_srcptr z) {
  std::size_t h = static_cast<std::size_t>(mpz_size(z)) * 0x9e3779b97f4a7c15ULL;
  if (mpz_size(z) > 0) h ^= static_cast<std::size_t>(mpz_getlimbn(z, 0)) + (h << 6) + (h >> 2);
  return h ^ static_cast<std::size_t>(mpz_sgn(z) + 1);
}

std::size_t hash_mpq(const Rational& q) {
  mpq_srcptr raw = q.backend().data();
  std::size_t h = hash_mpz(mpq_numref(raw));
  return h ^ (hash_mpz(mpq_denref(raw)) * 0xbf58476d1ce4e5b9ULL);
}

}  // namespace

int sign(const Rational& q) { return q.sign(); }

Rational parse_rational(std::string_view raw) {
  const std::string text = trim(raw);
  if (text.empty()) throw InputError("empty rational literal");
  std::string_view body = text;
  bool negative = false;
  if (body.front() == '+' || body.front() == '-') {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  Rational value;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto num = body.substr(0, slash);
    auto den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) throw InputError("bad rational literal '" + text + "'");
    Integer d{std::string(den)};
    if (d.is_zero()) throw InputError("zero denominator in '" + text + "'");
    value = Rational(Integer{std::string(num)}, d);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    auto whole = body.substr(0, dot);
    auto frac = body.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
        (whole.empty() && frac.empty()))
      throw InputError("bad decimal literal '" + text + "'");
    Integer w = whole.empty() ? Integer(0) : Integer{std::string(whole)};
    Integer f = frac.empty() ? Integer(0) : Integer{std::string(frac)};
    Integer scale = boost::multiprecision::pow(Integer(10), static_cast<unsigned>(frac.size()));
    value = Rational(w * scale + f, scale);
  } else {
    if (!all_digits(body)) throw InputError("bad rational literal '" + text + "'");
    value = Rational(Integer{std::string(body)});
  }
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& q) {
  if (boost::multiprecision::denominator(q) == 1) return boost::multiprecision::numerator(q).str();
  return q.str();
}

bool QuadScalar::is_integer() const {
  return b_.is_zero() && boost::multiprecision::denominator(a_) == 1;
}

int QuadScalar::sign() const {
  const int sa = a_.sign();
  const int sb = b_.sign();
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: compare a^2 with 2 b^2; equality would make sqrt2 rational.
  const Rational lhs = a_ * a_;
  const Rational rhs = 2 * b_ * b_;
  return lhs > rhs ? sa : sb;
}

QuadScalar& QuadScalar::operator+=(const QuadScalar& o) {
  a_ += o.a_;
  if (!o.b_.is_zero()) b_ += o.b_;
  return *this;
}

QuadScalar& QuadScalar::operator-=(const QuadScalar& o) {
  a_ -= o.a_;
  if (!o.b_.is_zero()) b_ -= o.b_;
  return *this;
}

QuadScalar& QuadScalar::operator*=(const QuadScalar& o) {
  if (o.b_.is_zero()) {
    a_ *= o.a_;
    if (!b_.is_zero()) b_ *= o.a_;
    return *this;
  }
  if (b_.is_zero()) {
    b_ = a_ * o.b_;
    a_ *= o.a_;
    return *this;
  }
  Rational na = a_ * o.a_ + 2 * b_ * o.b_;
  Rational nb = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(na);
  b_ = std::move(nb);
  return *this;
}

QuadScalar& QuadScalar::operator/=(const QuadScalar& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  if (o.b_.is_zero()) {
    a_ /= o.a_;
    if (!b_.is_zero()) b_ /= o.a_;
    return *this;
  }
  const Rational n = o.norm();
  *this *= o.conjugate();
  a_ /= n;
  b_ /= n;
  return *this;
}

std::strong_ordering operator<=>(const QuadScalar& x, const QuadScalar& y) {
  if (x.b_.is_zero() && y.b_.is_zero()) {
    if (x.a_ < y.a_) return std::strong_ordering::less;
    if (x.a_ > y.a_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
  const int s = (x - y).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

double QuadScalar::to_double() const {
  return a_.convert_to<double>() + b_.convert_to<double>() * std::sqrt(2.0);
}

Scalar abs(const Scalar& x) { return x.sign() < 0 ? -x : x; }

Scalar pow(const Scalar& x, unsigned k) {
  Scalar result(1);
  Scalar base = x;
  while (k > 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k > 0) base *= base;
  }
  return result;
}

std::string to_string(const Scalar& x) {
  if (x.is_rational()) return to_string(x.a());
  std::string out;
  if (!x.a().is_zero()) out = to_string(x.a());
  const Rational& b = x.b();
  if (b.sign() < 0) {
    out += "-";
  } else if (!out.empty()) {
    out += "+";
  }
  const Rational mag = b.sign() < 0 ? Rational(-b) : b;
  if (mag != 1) out += to_string(mag) + "*";
  out += "sqrt2";
  return out;
}

Scalar parse_scalar(std::string_view raw) {
  const std::string text = trim(raw);
  const auto root = text.find("sqrt2");
  if (root == std::string::npos) return Scalar(parse_rational(text));
  if (root + 5 != text.size()) throw InputError("bad quadratic literal '" + text + "'");
  std::string head = text.substr(0, root);
  if (!head.empty() && head.back() == '*') head.pop_back();
  // Split "a+b" at the last sign that is not leading.
  std::size_t split = std::string::npos;
  for (std::size_t i = head.size(); i-- > 1;) {
    if (head[i] == '+' || head[i] == '-') {
      split = i;
      break;
    }
  }
  Rational a(0);
  std::string coeff = head;
  if (split != std::string::npos) {
    a = parse_rational(head.substr(0, split));
    coeff = head.substr(split);
  }
  Rational b;
  if (coeff.empty() || coeff == "+") {
    b = 1;
  } else if (coeff == "-") {
    b = -1;
  } else {
    b = parse_rational(coeff);
  }
  return {a, b};
}

std::ostream& operator<<(std::ostream& os, const Scalar& x) { return os << to_string(x); }

std::size_t hash_value(const Scalar& x) {
  return hash_mpq(x.a()) * 31U + hash_mpq(x.b());
}

Scalar cauchy_apply(const CauchyFunctional& xi, const Scalar& x) { return xi(x); }

}  // namespace vallab
