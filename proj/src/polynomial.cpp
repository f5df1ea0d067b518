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

#include "ual/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "ual/error.hpp"

namespace ual {

Monomial::Monomial(std::size_t nvars, std::uint32_t var, std::uint16_t power)
    : e_(nvars, 0) {
  if (var >= nvars) throw InputError("variable index out of range");
  e_[var] = power;
  deg_ = power;
}

void Monomial::set(std::size_t v, std::uint16_t power) {
  deg_ = deg_ - e_[v] + power;
  e_[v] = power;
}

bool Monomial::divides(const Monomial& o) const {
  if (deg_ > o.deg_) return false;
  for (std::size_t v = 0; v < e_.size(); ++v)
    if (e_[v] > o.e_[v]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& o) const {
  for (std::size_t v = 0; v < e_.size(); ++v)
    if (e_[v] && o.e_[v]) return false;
  return true;
}

Monomial Monomial::lcm(const Monomial& o) const {
  Monomial out(e_.size());
  for (std::size_t v = 0; v < e_.size(); ++v) out.set(v, std::max(e_[v], o.e_[v]));
  return out;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial out(e_.size());
  for (std::size_t v = 0; v < e_.size(); ++v) out.set(v, e_[v] - o.e_[v]);
  return out;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial out = *this;
  for (std::size_t v = 0; v < e_.size(); ++v) out.e_[v] += o.e_[v];
  out.deg_ += o.deg_;
  return out;
}

namespace {

std::vector<std::uint32_t> default_ranking(std::size_t n) {
  std::vector<std::uint32_t> r(n);
  std::iota(r.begin(), r.end(), 0u);
  return r;
}

}  // namespace

MonomialOrder::MonomialOrder(Kind kind, std::size_t nvars)
    : kind_(kind), ranking_(default_ranking(nvars)) {}

MonomialOrder::MonomialOrder(Kind kind, std::vector<std::uint32_t> ranking)
    : kind_(kind), ranking_(std::move(ranking)) {
  std::vector<bool> seen(ranking_.size(), false);
  for (auto v : ranking_) {
    if (v >= ranking_.size() || seen[v])
      throw InputError("variable ranking is not a permutation");
    seen[v] = true;
  }
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (kind_ == Kind::DegRevLex) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    // the smallest variable with differing exponent decides; smaller exponent wins
    for (auto it = ranking_.rbegin(); it != ranking_.rend(); ++it) {
      const auto ea = a[*it], eb = b[*it];
      if (ea != eb) return ea > eb ? -1 : 1;
    }
    return 0;
  }
  for (auto v : ranking_) {
    const auto ea = a[v], eb = b[v];
    if (ea != eb) return ea < eb ? -1 : 1;
  }
  return 0;
}

MonomialOrder::Kind MonomialOrder::parse_kind(const std::string& name) {
  if (name == "degrevlex") return Kind::DegRevLex;
  if (name == "lex") return Kind::Lex;
  throw InputError("unknown monomial order '" + name + "'");
}

PolyRing::PolyRing(VariableGrid grid, Field field, MonomialOrder::Kind kind)
    : grid_(grid), field_(field), order_(kind, grid.size()) {}

PolyRing::PolyRing(VariableGrid grid, Field field, MonomialOrder order)
    : grid_(grid), field_(field), order_(std::move(order)) {
  if (order_.ranking().size() != grid_.size())
    throw InputError("monomial order ranks a different number of variables");
}

std::string PolyRing::variable_name(std::uint32_t v) const {
  static const char letters[] = "XYZWUV";
  const auto copy = grid_.copy_of(v);
  const auto s = grid_.row_of(v) + 1;
  const auto i = grid_.col_of(v) + 1;
  std::string name(1, copy < 6 ? letters[copy] : 'T');
  if (copy >= 6) name += std::to_string(copy);
  if (s < 10 && i < 10) return name + std::to_string(s) + std::to_string(i);
  return name + "_{" + std::to_string(s) + "," + std::to_string(i) + "}";
}

RingPtr make_ring(VariableGrid grid, Field field, MonomialOrder::Kind kind) {
  return std::make_shared<const PolyRing>(grid, field, kind);
}

Polynomial Polynomial::constant(RingPtr ring, const Scalar& c) {
  Polynomial p(ring);
  if (!c.is_zero()) p.terms_.push_back({Monomial(ring->nvars()), c});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::uint32_t v) {
  Polynomial p(ring);
  p.terms_.push_back({Monomial(ring->nvars(), v), ring->field().one()});
  return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  Polynomial p(ring);
  const auto& order = ring->order();
  for (const auto& t : terms) {
    if (t.mono.nvars() != ring->nvars())
      throw InputError("monomial has the wrong number of variables");
    if (t.coeff.field() != ring->field())
      throw InputError("coefficient field does not match the ring");
  }
  std::stable_sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return order.compare(a.mono, b.mono) > 0;
  });
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
    } else if (!t.coeff.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

std::uint32_t Polynomial::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw InputError("leading term of the zero polynomial");
  return terms_.front();
}

void Polynomial::require_compatible(const Polynomial& o) const {
  if (ring_ != o.ring_ && !(*ring_ == *o.ring_))
    throw InputError("polynomials live in different rings");
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  subtract_multiple(-ring_->field().one(), Monomial(ring_->nvars()), o);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  subtract_multiple(ring_->field().one(), Monomial(ring_->nvars()), o);
  return *this;
}

void Polynomial::subtract_multiple(const Scalar& c, const Monomial& m,
                                   const Polynomial& g) {
  require_compatible(g);
  if (c.is_zero() || g.is_zero()) return;
  if (&g == this) {
    const Polynomial copy = g;
    subtract_multiple(c, m, copy);
    return;
  }
  const auto& order = ring_->order();
  std::vector<Term> out;
  out.reserve(terms_.size() + g.terms_.size());
  auto a = terms_.begin();
  auto b = g.terms_.begin();
  const bool shift = !m.is_one();
  while (a != terms_.end() || b != g.terms_.end()) {
    if (b == g.terms_.end()) {
      out.push_back(std::move(*a++));
      continue;
    }
    Monomial bm = shift ? b->mono * m : b->mono;
    if (a == terms_.end()) {
      out.push_back({std::move(bm), -(c * b->coeff)});
      ++b;
      continue;
    }
    const int cmp = order.compare(a->mono, bm);
    if (cmp > 0) {
      out.push_back(std::move(*a++));
    } else if (cmp < 0) {
      out.push_back({std::move(bm), -(c * b->coeff)});
      ++b;
    } else {
      Scalar s = a->coeff - c * b->coeff;
      if (!s.is_zero()) out.push_back({std::move(a->mono), std::move(s)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.require_compatible(b);
  std::vector<Term> terms;
  terms.reserve(a.size() * b.size());
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) terms.push_back({x.mono * y.mono, x.coeff * y.coeff});
  return Polynomial::from_terms(a.ring_, std::move(terms));
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  Polynomial out(ring_);
  if (c.is_zero()) return out;
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) out.terms_.push_back({t.mono, t.coeff * c});
  return out;
}

Polynomial Polynomial::times_term(const Scalar& c, const Monomial& m) const {
  Polynomial out(ring_);
  if (c.is_zero()) return out;
  out.terms_.reserve(terms_.size());
  // multiplication by a monomial preserves any monomial order
  for (const auto& t : terms_) out.terms_.push_back({t.mono * m, t.coeff * c});
  return out;
}

Term Polynomial::take_leading() {
  if (terms_.empty()) throw InputError("take_leading on the zero polynomial");
  Term t = std::move(terms_.front());
  terms_.erase(terms_.begin());
  return t;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(leading_coefficient().inverse());
}

Polynomial Polynomial::in_ring(RingPtr other) const {
  if (other->grid() != ring_->grid() || other->field() != ring_->field())
    throw InputError("in_ring: grid or field differs");
  return from_terms(std::move(other), terms_);
}

Polynomial Polynomial::substitute(const RingPtr& target,
                                  const std::vector<Polynomial>& images) const {
  const std::size_t nv = ring_->nvars();
  if (images.size() != nv) throw InputError("substitute: wrong number of images");
  Polynomial acc(target);
  // cache powers per variable
  std::vector<std::vector<Polynomial>> powers(nv);
  auto power = [&](std::size_t v, std::uint16_t e) -> const Polynomial& {
    auto& pw = powers[v];
    if (pw.empty()) pw.push_back(Polynomial::constant(target, target->field().one()));
    while (pw.size() <= e) pw.push_back(pw.back() * images[v]);
    return pw[e];
  };
  for (const auto& t : terms_) {
    Polynomial prod = Polynomial::constant(target, t.coeff);
    for (std::size_t v = 0; v < nv && !prod.is_zero(); ++v)
      if (t.mono[v]) prod = prod * power(v, t.mono[v]);
    acc += prod;
  }
  return acc;
}

Scalar Polynomial::evaluate(const std::vector<Scalar>& point) const {
  if (point.size() != ring_->nvars()) throw InputError("evaluate: wrong arity");
  return evaluate_in<Scalar>(
      *this, point, ring_->field().zero(),
      [](const Scalar& x, const Scalar& y) { return x * y; },
      [](const Scalar& x, const Scalar& y) { return x + y; },
      [](const Scalar& c) { return c; });
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  a.require_compatible(b);
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t k = 0; k < a.terms_.size(); ++k)
    if (!(a.terms_[k].mono == b.terms_[k].mono) ||
        !(a.terms_[k].coeff == b.terms_[k].coeff))
      return false;
  return true;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  const bool rational = ring_->field().kind() == Field::Kind::Rational;
  for (const auto& t : terms_) {
    std::string c = t.coeff.to_string();
    bool negative = rational && !c.empty() && c[0] == '-';
    if (negative) c.erase(c.begin());
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const bool unit = c == "1";
    if (!unit || t.mono.is_one()) os << c;
    bool need_star = !unit;
    for (std::size_t v = 0; v < t.mono.nvars(); ++v) {
      if (!t.mono[v]) continue;
      if (need_star) os << '*';
      os << ring_->variable_name(static_cast<std::uint32_t>(v));
      if (t.mono[v] > 1) os << '^' << t.mono[v];
      need_star = true;
    }
  }
  return os.str();
}

}  // namespace ual
