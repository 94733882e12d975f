#include "pareto/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace pareto {

namespace {

using Int = boost::multiprecision::cpp_int;

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Int parse_int(std::string_view digits) { return Int(std::string(digits)); }

}  // namespace

Rational::Rational(std::int64_t value) : value_(value) {}

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Int n(num), d(den);
  if (d < 0) {
    n = -n;
    d = -d;
  }
  value_ = Value(n, d);
}

Rational Rational::parse(std::string_view text) {
  auto fail = [&]() -> Rational {
    throw std::invalid_argument("not a rational number: \"" + std::string(text) + "\"");
  };
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  if (body.empty()) return fail();

  Value v;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto num = body.substr(0, slash);
    auto den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) return fail();
    Int d = parse_int(den);
    if (d == 0) throw std::invalid_argument("rational with zero denominator: \"" + std::string(text) + "\"");
    v = Value(parse_int(num), d);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    auto whole = body.substr(0, dot);
    auto frac = body.substr(dot + 1);
    if (whole.empty() && frac.empty()) return fail();
    if (!whole.empty() && !all_digits(whole)) return fail();
    if (!frac.empty() && !all_digits(frac)) return fail();
    Int scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    Int w = whole.empty() ? Int(0) : parse_int(whole);
    Int f = frac.empty() ? Int(0) : parse_int(frac);
    v = Value(w * scale + f, scale);
  } else {
    if (!all_digits(body)) return fail();
    v = Value(parse_int(body));
  }
  if (negative) v = -v;
  return Rational(std::move(v));
}

std::string Rational::numerator_str() const {
  return boost::multiprecision::numerator(value_).str();
}

std::string Rational::denominator_str() const {
  return boost::multiprecision::denominator(value_).str();
}

bool Rational::is_integer() const { return boost::multiprecision::denominator(value_) == 1; }

int Rational::sign() const { return value_.sign(); }

std::string Rational::str() const {
  if (is_integer()) return numerator_str();
  return numerator_str() + "/" + denominator_str();
}

Rational Rational::operator-() const { return Rational(Value(-value_)); }

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.value_ == 0) throw std::domain_error("division by zero");
  value_ /= o.value_;
  return *this;
}

}  // namespace pareto
