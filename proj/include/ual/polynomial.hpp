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

#ifndef UAL_POLYNOMIAL_HPP
#define UAL_POLYNOMIAL_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "ual/field.hpp"

namespace ual {

/// Variables X_{s,i} with s in [0, rows), i in [0, cols), repeated `copies`
/// times for tensor powers. Flat index: (copy * rows + s) * cols + i, so the
/// default ranking is (copy, s, i) lexicographic with smaller index = larger.
struct VariableGrid {
  std::uint32_t rows = 0;
  std::uint32_t cols = 0;
  std::uint32_t copies = 1;

  std::size_t size() const noexcept {
    return std::size_t{rows} * cols * copies;
  }
  std::uint32_t index(std::uint32_t copy, std::uint32_t s, std::uint32_t i) const {
    return (copy * rows + s) * cols + i;
  }
  std::uint32_t copy_of(std::uint32_t v) const { return v / (rows * cols); }
  std::uint32_t row_of(std::uint32_t v) const { return (v / cols) % rows; }
  std::uint32_t col_of(std::uint32_t v) const { return v % cols; }

  friend bool operator==(const VariableGrid&, const VariableGrid&) = default;
};

/// Power product over a fixed number of variables. Exponents are stored
/// densely; absent variables have exponent zero.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
  Monomial(std::size_t nvars, std::uint32_t var, std::uint16_t power = 1);

  std::size_t nvars() const noexcept { return e_.size(); }
  std::uint16_t operator[](std::size_t v) const { return e_[v]; }
  void set(std::size_t v, std::uint16_t power);
  std::uint32_t degree() const noexcept { return deg_; }
  bool is_one() const noexcept { return deg_ == 0; }

  bool divides(const Monomial& o) const;
  bool coprime(const Monomial& o) const;
  Monomial lcm(const Monomial& o) const;
  /// Exact quotient; the divisor must divide *this.
  Monomial operator/(const Monomial& o) const;
  Monomial operator*(const Monomial& o) const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.deg_ == b.deg_ && a.e_ == b.e_;
  }

 private:
  std::vector<std::uint16_t> e_;
  std::uint32_t deg_ = 0;
};

class MonomialOrder {
 public:
  enum class Kind : std::uint8_t { DegRevLex, Lex };

  /// Default ranking: variable 0 largest.
  MonomialOrder(Kind kind, std::size_t nvars);
  /// `ranking` lists every variable once, largest first.
  MonomialOrder(Kind kind, std::vector<std::uint32_t> ranking);

  Kind kind() const noexcept { return kind_; }
  const std::vector<std::uint32_t>& ranking() const noexcept { return ranking_; }
  std::string name() const { return kind_ == Kind::Lex ? "lex" : "degrevlex"; }

  /// Negative, zero or positive as a < b, a == b, a > b.
  int compare(const Monomial& a, const Monomial& b) const;

  static Kind parse_kind(const std::string& name);

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  Kind kind_;
  std::vector<std::uint32_t> ranking_;
};

class PolyRing {
 public:
  PolyRing(VariableGrid grid, Field field, MonomialOrder::Kind kind);
  PolyRing(VariableGrid grid, Field field, MonomialOrder order);

  const VariableGrid& grid() const noexcept { return grid_; }
  const Field& field() const noexcept { return field_; }
  const MonomialOrder& order() const noexcept { return order_; }
  std::size_t nvars() const noexcept { return grid_.size(); }

  /// X11, X23 (1-based); tensor copies use X, Y, Z, ... as the letter.
  std::string variable_name(std::uint32_t v) const;

  friend bool operator==(const PolyRing&, const PolyRing&) = default;

 private:
  VariableGrid grid_;
  Field field_;
  MonomialOrder order_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr make_ring(VariableGrid grid, Field field,
                  MonomialOrder::Kind kind = MonomialOrder::Kind::DegRevLex);

struct Term {
  Monomial mono;
  Scalar coeff;
};

/// Sparse polynomial; terms are kept strictly decreasing in the ring's order
/// with no zero coefficients.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr ring, const Scalar& c);
  static Polynomial variable(RingPtr ring, std::uint32_t v);
  /// Sorts and combines like terms; zero coefficients are dropped.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
  }
  std::size_t size() const noexcept { return terms_.size(); }
  std::uint32_t total_degree() const;

  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().mono; }
  const Scalar& leading_coefficient() const { return leading_term().coeff; }

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial scaled(const Scalar& c) const;
  Polynomial times_term(const Scalar& c, const Monomial& m) const;
  /// *this -= c * m * g, in place.
  void subtract_multiple(const Scalar& c, const Monomial& m, const Polynomial& g);

  /// Removes and returns the leading term.
  Term take_leading();
  /// Appends a term smaller than every current term (caller guarantees order).
  void push_trailing(Term t) { terms_.push_back(std::move(t)); }

  Polynomial monic() const;
  /// Same terms, re-sorted under `other`, which must share grid and field.
  Polynomial in_ring(RingPtr other) const;
  /// Algebra map sending variable v to images[v] (all in one target ring).
  Polynomial substitute(const RingPtr& target,
                        const std::vector<Polynomial>& images) const;
  Scalar evaluate(const std::vector<Scalar>& point) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

  std::string to_string() const;

 private:
  void require_compatible(const Polynomial& o) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Evaluates p in an arbitrary commutative ring given by callbacks.
template <class T, class Mul, class Add, class Embed>
T evaluate_in(const Polynomial& p, const std::vector<T>& values, const T& zero,
              Mul mul, Add add, Embed embed) {
  T acc = zero;
  const std::size_t nv = p.ring()->nvars();
  for (const auto& term : p.terms()) {
    T prod = embed(term.coeff);
    for (std::size_t v = 0; v < nv; ++v)
      for (std::uint16_t e = 0; e < term.mono[v]; ++e) prod = mul(prod, values[v]);
    acc = add(acc, prod);
  }
  return acc;
}

}  // namespace ual

#endif  // UAL_POLYNOMIAL_HPP
