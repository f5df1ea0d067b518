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

#ifndef UAL_FIELD_HPP
#define UAL_FIELD_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace ual {

class Scalar;

/// The coefficient field of a computation: the rationals or a prime field F_p.
class Field {
 public:
  enum class Kind : std::uint8_t { Rational, Prime };

  static Field rational() { return Field(Kind::Rational, 0); }
  /// Throws InputError unless p is a prime below 2^31.
  static Field prime(std::uint64_t p);

  Kind kind() const noexcept { return kind_; }
  bool is_prime() const noexcept { return kind_ == Kind::Prime; }
  /// Zero for the rationals.
  std::uint64_t modulus() const noexcept { return p_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long long v) const;
  Scalar from_rational(const mpq_class& q) const;
  /// Accepts "7", "-3", "5/6". Over F_p the value is reduced modulo p.
  Scalar parse(std::string_view text) const;

  std::string to_string() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  friend class Scalar;
  Field(Kind kind, std::uint64_t p) : kind_(kind), p_(p) {}

  Kind kind_;
  std::uint64_t p_;
};

bool is_prime(std::uint64_t n);

/// Element of a Field. Rationals are kept in lowest terms with a positive
/// denominator; residues lie in [0, p). Arithmetic between elements of
/// different fields throws InputError.
class Scalar {
 public:
  struct Residue {
    std::uint64_t value;
    std::uint64_t modulus;
    friend bool operator==(const Residue&, const Residue&) = default;
  };

  explicit Scalar(mpq_class q);
  Scalar(std::uint64_t residue, std::uint64_t modulus);

  Field field() const;
  bool is_rational() const noexcept { return std::holds_alternative<mpq_class>(v_); }
  bool is_zero() const;
  bool is_one() const;

  const mpq_class& rational() const;
  std::uint64_t residue() const;

  Scalar operator-() const;
  Scalar inverse() const;  // ValidationError on zero

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  /// Throws InputError when the fields differ.
  friend bool operator==(const Scalar& a, const Scalar& b);

  /// "num/den" or "num" for rationals, the residue for F_p.
  std::string to_string() const;

 private:
  void require_same_field(const Scalar& o) const;

  std::variant<mpq_class, Residue> v_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace ual

#endif  // UAL_FIELD_HPP
