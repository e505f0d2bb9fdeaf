// Copyright 2026 The Delivery Mechanisms Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "delivery/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace delivery {
namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rational::Rational(std::int64_t value) : value_(static_cast<long>(value)) {}

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw std::domain_error("rational with zero denominator");
  value_ = mpq_class(static_cast<long>(numerator), static_cast<long>(denominator));
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  if (!is_integer_literal(num)) {
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  }
  mpq_class q;
  if (slash == std::string_view::npos) {
    q = mpq_class(parse_integer(num));
  } else {
    const std::string_view den = text.substr(slash + 1);
    if (!is_integer_literal(den) || den.front() == '-') {
      throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    }
    mpz_class d = parse_integer(den);
    if (d == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    q = mpq_class(parse_integer(num), d);
    q.canonicalize();
  }
  return Rational(std::move(q));
}

std::string Rational::str() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::decimal(int digits) const {
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits < 0 ? 0 : digits));
  mpz_class scaled = value_.get_num() * scale;
  mpz_class q;
  mpz_tdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), value_.get_den().get_mpz_t());
  const bool negative = sgn(value_) < 0;
  std::string s = (negative ? mpz_class(-q) : q).get_str();
  if (digits <= 0) return (negative && q != 0 ? "-" : "") + s;
  if (s.size() <= static_cast<std::size_t>(digits)) {
    s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
  }
  s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  return (negative ? "-" : "") + s;
}

Rational& Rational::operator+=(const Rational& other) {
  value_ += other.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& other) {
  value_ -= other.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& other) {
  value_ *= other.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& other) {
  if (other.is_zero()) throw std::domain_error("rational division by zero");
  value_ /= other.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

std::size_t Rational::hash() const {
  const std::size_t a = mpz_get_ui(value_.get_num_mpz_t());
  const std::size_t b = mpz_get_ui(value_.get_den_mpz_t());
  return a * 0x9e3779b97f4a7c15ULL ^ (b + static_cast<std::size_t>(sign() + 1));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace delivery
