/*
   Copyright 2026 The libual Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "ual/field.hpp"

#include <ostream>

#include "ual/error.hpp"

namespace ual {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31) || !ual::is_prime(p))
    throw InputError("field modulus " + std::to_string(p) +
                     " is not a prime below 2^31");
  return Field(Kind::Prime, p);
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long long v) const {
  if (kind_ == Kind::Rational) return Scalar(mpq_class(mpz_class(static_cast<long>(v))));
  const auto p = static_cast<long long>(p_);
  long long r = v % p;
  if (r < 0) r += p;
  return Scalar(static_cast<std::uint64_t>(r), p_);
}

Scalar Field::from_rational(const mpq_class& q) const {
  if (kind_ == Kind::Rational) return Scalar(q);
  mpz_class num = q.get_num() % mpz_class(static_cast<unsigned long>(p_));
  if (num < 0) num += static_cast<unsigned long>(p_);
  mpz_class den = q.get_den() % mpz_class(static_cast<unsigned long>(p_));
  if (den == 0)
    throw ValidationError("denominator of " + q.get_str() +
                          " is not invertible modulo " + std::to_string(p_));
  Scalar n(num.get_ui(), p_);
  Scalar d(den.get_ui(), p_);
  return n / d;
}

Scalar Field::parse(std::string_view text) const {
  std::string s(text);
  while (!s.empty() && s.front() == ' ') s.erase(s.begin());
  while (!s.empty() && s.back() == ' ') s.pop_back();
  if (s.empty()) throw InputError("empty coefficient");
  const auto slash = s.find('/');
  mpz_class num, den(1);
  auto parse_int = [&](const std::string& part, mpz_class& out) {
    std::string digits = part;
    if (!digits.empty() && digits.front() == '+') digits.erase(digits.begin());
    if (digits.empty() || out.set_str(digits, 10) != 0)
      throw InputError("malformed coefficient '" + s + "'");
  };
  if (slash == std::string::npos) {
    parse_int(s, num);
  } else {
    parse_int(s.substr(0, slash), num);
    parse_int(s.substr(slash + 1), den);
    if (den == 0) throw InputError("zero denominator in '" + s + "'");
  }
  mpq_class q(num, den);
  q.canonicalize();
  return from_rational(q);
}

std::string Field::to_string() const {
  return kind_ == Kind::Rational ? "Q" : "F_" + std::to_string(p_);
}

Scalar::Scalar(mpq_class q) : v_(std::move(q)) {
  std::get<mpq_class>(v_).canonicalize();
}

Scalar::Scalar(std::uint64_t residue, std::uint64_t modulus)
    : v_(Residue{residue % modulus, modulus}) {}

Field Scalar::field() const {
  if (is_rational()) return Field::rational();
  return Field(Field::Kind::Prime, std::get<Residue>(v_).modulus);
}

bool Scalar::is_zero() const {
  if (auto* q = std::get_if<mpq_class>(&v_)) return sgn(*q) == 0;
  return std::get<Residue>(v_).value == 0;
}

bool Scalar::is_one() const {
  if (auto* q = std::get_if<mpq_class>(&v_)) return *q == 1;
  return std::get<Residue>(v_).value == 1;
}

const mpq_class& Scalar::rational() const {
  if (auto* q = std::get_if<mpq_class>(&v_)) return *q;
  throw InputError("scalar is not rational");
}

std::uint64_t Scalar::residue() const {
  if (auto* r = std::get_if<Residue>(&v_)) return r->value;
  throw InputError("scalar is not a prime-field residue");
}

void Scalar::require_same_field(const Scalar& o) const {
  if (v_.index() != o.v_.index())
    throw InputError("field mismatch: rational and prime-field scalars mixed");
  if (auto* r = std::get_if<Residue>(&v_)) {
    if (r->modulus != std::get<Residue>(o.v_).modulus)
      throw InputError("field mismatch: F_" + std::to_string(r->modulus) +
                       " vs F_" +
                       std::to_string(std::get<Residue>(o.v_).modulus));
  }
}

Scalar Scalar::operator-() const {
  if (auto* q = std::get_if<mpq_class>(&v_)) return Scalar(mpq_class(-*q));
  const auto& r = std::get<Residue>(v_);
  return Scalar(r.value == 0 ? 0 : r.modulus - r.value, r.modulus);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw ValidationError("inversion of zero");
  if (auto* q = std::get_if<mpq_class>(&v_)) return Scalar(mpq_class(1 / *q));
  const auto& r = std::get<Residue>(v_);
  // Fermat: a^(p-2)
  std::uint64_t result = 1, base = r.value, e = r.modulus - 2;
  while (e) {
    if (e & 1) result = result * base % r.modulus;
    base = base * base % r.modulus;
    e >>= 1;
  }
  return Scalar(result, r.modulus);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  require_same_field(o);
  if (auto* q = std::get_if<mpq_class>(&v_)) {
    *q += std::get<mpq_class>(o.v_);
  } else {
    auto& r = std::get<Residue>(v_);
    r.value = (r.value + std::get<Residue>(o.v_).value) % r.modulus;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  require_same_field(o);
  if (auto* q = std::get_if<mpq_class>(&v_)) {
    *q *= std::get<mpq_class>(o.v_);
  } else {
    auto& r = std::get<Residue>(v_);
    r.value = r.value * std::get<Residue>(o.v_).value % r.modulus;
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  require_same_field(o);
  return *this *= o.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  a.require_same_field(b);
  return a.v_ == b.v_;
}

std::string Scalar::to_string() const {
  if (auto* q = std::get_if<mpq_class>(&v_)) return q->get_str();
  return std::to_string(std::get<Residue>(v_).value);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
  return os << s.to_string();
}

}  // namespace ual
