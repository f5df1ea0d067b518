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

#include "ual/leibniz.hpp"

#include <cctype>
#include <charconv>

#include "ual/error.hpp"

namespace ual {

namespace {

void add_to(SparseVector& v, std::uint32_t s, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = v.find(s);
  if (it == v.end()) {
    v.emplace(s, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) v.erase(it);
  }
}

void strip_and_check(BracketTable& table, std::size_t dim, const Field& field,
                     const char* what) {
  for (auto it = table.begin(); it != table.end();) {
    const auto [i, j] = it->first;
    if (i >= dim || j >= dim)
      throw InputError(std::string(what) + ": index out of range");
    for (auto vit = it->second.begin(); vit != it->second.end();) {
      if (vit->first >= dim) throw InputError(std::string(what) + ": index out of range");
      if (vit->second.field() != field)
        throw InputError(std::string(what) + ": coefficient field mismatch");
      vit = vit->second.is_zero() ? it->second.erase(vit) : std::next(vit);
    }
    it = it->second.empty() ? table.erase(it) : std::next(it);
  }
}

const SparseVector& empty_vector() {
  static const SparseVector empty;
  return empty;
}

}  // namespace

LeibnizAlgebra::LeibnizAlgebra(std::size_t dim, Field field, BracketTable brackets,
                               std::string name)
    : dim_(dim), field_(field), brackets_(std::move(brackets)), name_(std::move(name)) {
  if (dim_ == 0) throw InputError("algebra dimension must be positive");
  strip_and_check(brackets_, dim_, field_, "bracket table");
}

Scalar LeibnizAlgebra::structure_constant(std::uint32_t i, std::uint32_t j,
                                          std::uint32_t s) const {
  const auto& v = bracket(i, j);
  auto it = v.find(s);
  return it == v.end() ? field_.zero() : it->second;
}

const SparseVector& LeibnizAlgebra::bracket(std::uint32_t i, std::uint32_t j) const {
  auto it = brackets_.find({i, j});
  return it == brackets_.end() ? empty_vector() : it->second;
}

std::vector<Scalar> LeibnizAlgebra::bracket(const std::vector<Scalar>& x,
                                            const std::vector<Scalar>& y) const {
  if (x.size() != dim_ || y.size() != dim_) throw InputError("bracket: dimension mismatch");
  std::vector<Scalar> out(dim_, field_.zero());
  for (const auto& [ij, v] : brackets_) {
    const auto& xi = x[ij.first];
    const auto& yj = y[ij.second];
    if (xi.is_zero() || yj.is_zero()) continue;
    const Scalar c = xi * yj;
    for (const auto& [s, t] : v) out[s] += c * t;
  }
  return out;
}

LeibnizAlgebra LeibnizAlgebra::over_prime(std::uint64_t p) const {
  const Field target = Field::prime(p);
  if (field_ == target) return *this;
  if (field_.kind() != Field::Kind::Rational)
    throw InputError("algebra is over " + field_.to_string() + ", not " + target.to_string());
  BracketTable table;
  for (const auto& [ij, v] : brackets_)
    for (const auto& [s, c] : v) add_to(table[ij], s, target.from_rational(c.rational()));
  return LeibnizAlgebra(dim_, target, std::move(table), name_);
}

LeibnizCheck check_leibniz(const LeibnizAlgebra& alg) {
  LeibnizCheck out;
  const auto n = static_cast<std::uint32_t>(alg.dim());
  const Field& f = alg.field();
  auto unit = [&](std::uint32_t i) {
    std::vector<Scalar> e(n, f.zero());
    e[i] = f.one();
    return e;
  };
  std::vector<std::vector<Scalar>> basis;
  for (std::uint32_t i = 0; i < n; ++i) basis.push_back(unit(i));
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j)
      for (std::uint32_t l = 0; l < n; ++l) {
        const auto jl = alg.bracket(basis[j], basis[l]);
        const auto ij = alg.bracket(basis[i], basis[j]);
        const auto il = alg.bracket(basis[i], basis[l]);
        const auto lhs = alg.bracket(basis[i], jl);
        const auto r1 = alg.bracket(ij, basis[l]);
        const auto r2 = alg.bracket(il, basis[j]);
        for (std::uint32_t a = 0; a < n; ++a) {
          if (!(lhs[a] == r1[a] - r2[a])) {
            out.holds = false;
            out.violations.push_back({i, j, l});
            break;
          }
        }
      }
  return out;
}

bool check_lie(const LeibnizAlgebra& alg) {
  const auto n = static_cast<std::uint32_t>(alg.dim());
  for (std::uint32_t i = 0; i < n; ++i) {
    if (!alg.bracket(i, i).empty()) return false;
    for (std::uint32_t j = i + 1; j < n; ++j)
      for (std::uint32_t s = 0; s < n; ++s)
        if (!(alg.structure_constant(i, j, s) == -alg.structure_constant(j, i, s)))
          return false;
  }
  return true;
}

CommutativeAlgebra::CommutativeAlgebra(std::size_t dim, Field field, BracketTable mu,
                                       std::vector<Scalar> unit, std::string name)
    : dim_(dim), field_(field), mu_(std::move(mu)), unit_(std::move(unit)), name_(std::move(name)) {
  if (dim_ == 0) throw InputError("commutative algebra dimension must be positive");
  if (unit_.size() != dim_) throw InputError("unit vector has the wrong length");
  for (const auto& u : unit_)
    if (u.field() != field_) throw InputError("unit vector field mismatch");
  strip_and_check(mu_, dim_, field_, "multiplication table");
  const auto m = static_cast<std::uint32_t>(dim_);
  for (std::uint32_t a = 0; a < m; ++a)
    for (std::uint32_t b = a + 1; b < m; ++b) {
      auto ab = mu_.find({a, b});
      auto ba = mu_.find({b, a});
      const bool same = (ab == mu_.end() && ba == mu_.end()) ||
                        (ab != mu_.end() && ba != mu_.end() && ab->second == ba->second);
      if (!same) throw ValidationError("multiplication is not commutative");
    }
  for (std::uint32_t a = 0; a < m; ++a) {
    const auto fa = basis_vector(a);
    if (!(multiply(unit_, fa) == fa)) throw ValidationError("unit vector is not a unit");
    for (std::uint32_t b = 0; b < m; ++b)
      for (std::uint32_t c = 0; c < m; ++c) {
        const auto fb = basis_vector(b);
        const auto fc = basis_vector(c);
        if (!(multiply(multiply(fa, fb), fc) == multiply(fa, multiply(fb, fc))))
          throw ValidationError("multiplication is not associative");
      }
  }
}

CommutativeAlgebra CommutativeAlgebra::ground_field(Field field) {
  BracketTable mu;
  mu[{0, 0}].emplace(0, field.one());
  return CommutativeAlgebra(1, field, std::move(mu), {field.one()}, "k");
}

CommutativeAlgebra CommutativeAlgebra::truncated_polynomial(std::size_t k, Field field) {
  if (k == 0) throw InputError("k[t]/(t^k) needs k >= 1");
  BracketTable mu;
  for (std::uint32_t a = 0; a < k; ++a)
    for (std::uint32_t b = 0; a + b < k; ++b) mu[{a, b}].emplace(a + b, field.one());
  std::vector<Scalar> unit(k, field.zero());
  unit[0] = field.one();
  return CommutativeAlgebra(k, field, std::move(mu), std::move(unit),
                            "k[t]/(t^" + std::to_string(k) + ")");
}

std::vector<Scalar> CommutativeAlgebra::scalar(const Scalar& c) const {
  auto out = unit_;
  for (auto& x : out) x *= c;
  return out;
}

std::vector<Scalar> CommutativeAlgebra::basis_vector(std::uint32_t a) const {
  auto e = zero();
  e.at(a) = field_.one();
  return e;
}

std::vector<Scalar> CommutativeAlgebra::multiply(const std::vector<Scalar>& x,
                                                 const std::vector<Scalar>& y) const {
  auto out = zero();
  for (const auto& [ab, v] : mu_) {
    if (x[ab.first].is_zero() || y[ab.second].is_zero()) continue;
    const Scalar c = x[ab.first] * y[ab.second];
    for (const auto& [s, t] : v) out[s] += c * t;
  }
  return out;
}

Matrix CommutativeAlgebra::square_span() const {
  Matrix cols(dim_, mu_.size(), field_);
  std::size_t c = 0;
  for (const auto& [ab, v] : mu_) {
    for (const auto& [s, t] : v) cols(s, c) = t;
    ++c;
  }
  return cols.column_space();
}

LeibnizAlgebra current_algebra(const LeibnizAlgebra& h, const CommutativeAlgebra& a) {
  if (h.field() != a.field()) throw InputError("current algebra: field mismatch");
  const auto m = static_cast<std::uint32_t>(a.dim());
  BracketTable table;
  for (const auto& [ij, hv] : h.brackets())
    for (const auto& [fab, av] : a.structure())
      for (const auto& [s, tau] : hv)
        for (const auto& [c, mu] : av)
          add_to(table[{ij.first * m + fab.first, ij.second * m + fab.second}], s * m + c,
                 tau * mu);
  std::string name = (h.name().empty() ? "h" : h.name()) + " (x) " +
                     (a.name().empty() ? "A" : a.name());
  return LeibnizAlgebra(h.dim() * a.dim(), h.field(), std::move(table), std::move(name));
}

Matrix derived_subalgebra(const LeibnizAlgebra& alg) {
  Matrix cols(alg.dim(), alg.brackets().size(), alg.field());
  std::size_t c = 0;
  for (const auto& [ij, v] : alg.brackets()) {
    for (const auto& [s, t] : v) cols(s, c) = t;
    ++c;
  }
  return cols.column_space();
}

bool is_hom(const Matrix& f, const LeibnizAlgebra& g, const LeibnizAlgebra& h) {
  if (f.rows() != h.dim() || f.cols() != g.dim())
    throw InputError("is_hom: map has shape " + std::to_string(f.rows()) + "x" +
                     std::to_string(f.cols()) + ", expected " + std::to_string(h.dim()) +
                     "x" + std::to_string(g.dim()));
  if (f.field() != h.field() || g.field() != h.field())
    throw InputError("is_hom: field mismatch");
  const auto m = static_cast<std::uint32_t>(g.dim());
  std::vector<std::vector<Scalar>> images;
  for (std::uint32_t i = 0; i < m; ++i) images.push_back(f.column(i));
  for (std::uint32_t i = 0; i < m; ++i)
    for (std::uint32_t j = 0; j < m; ++j) {
      std::vector<Scalar> gij(m, g.field().zero());
      for (const auto& [u, c] : g.bracket(i, j)) gij[u] = c;
      if (!(f.apply(gij) == h.bracket(images[i], images[j]))) return false;
    }
  return true;
}

namespace {

std::size_t parse_parameter(std::string_view name, std::string_view prefix) {
  std::string_view rest = name.substr(prefix.size());
  if (!rest.empty() && rest.front() == '(' && rest.back() == ')')
    rest = rest.substr(1, rest.size() - 2);
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), value);
  if (ec != std::errc() || ptr != rest.data() + rest.size() || value == 0)
    throw InputError("invalid parameter in builtin algebra '" + std::string(name) + "'");
  return value;
}

void set_lie(BracketTable& t, const Field& f, std::uint32_t i, std::uint32_t j,
             std::uint32_t s, long long c) {
  add_to(t[{i, j}], s, f.from_int(c));
  add_to(t[{j, i}], s, f.from_int(-c));
}

}  // namespace

LeibnizAlgebra builtin(std::string_view name, Field field) {
  BracketTable t;
  if (name == "aff2") {
    set_lie(t, field, 0, 1, 0, 1);
    return LeibnizAlgebra(2, field, std::move(t), "aff2");
  }
  if (name == "sl2") {
    set_lie(t, field, 0, 1, 2, 1);
    set_lie(t, field, 2, 1, 1, -2);
    set_lie(t, field, 2, 0, 0, 2);
    return LeibnizAlgebra(3, field, std::move(t), "sl2");
  }
  if (name == "heisenberg") {
    set_lie(t, field, 0, 1, 2, 1);
    return LeibnizAlgebra(3, field, std::move(t), "heisenberg");
  }
  if (name.starts_with("abelian")) {
    const auto n = parse_parameter(name, "abelian");
    return LeibnizAlgebra(n, field, {}, "abelian(" + std::to_string(n) + ")");
  }
  if (name.starts_with("gl")) {
    const auto m = static_cast<std::uint32_t>(parse_parameter(name, "gl"));
    auto idx = [m](std::uint32_t a, std::uint32_t b) { return a * m + b; };
    // [E_ab, E_cd] = delta_bc E_ad - delta_da E_cb
    for (std::uint32_t a = 0; a < m; ++a)
      for (std::uint32_t b = 0; b < m; ++b)
        for (std::uint32_t c = 0; c < m; ++c)
          for (std::uint32_t d = 0; d < m; ++d) {
            auto& v = t[{idx(a, b), idx(c, d)}];
            if (b == c) add_to(v, idx(a, d), field.one());
            if (d == a) add_to(v, idx(c, b), -field.one());
          }
    return LeibnizAlgebra(std::size_t{m} * m, field, std::move(t),
                          "gl(" + std::to_string(m) + ")");
  }
  throw InputError("unknown builtin algebra '" + std::string(name) + "'");
}

}  // namespace ual
