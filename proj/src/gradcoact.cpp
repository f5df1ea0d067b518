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

#include "ual/gradcoact.hpp"

#include <algorithm>
#include <charconv>

#include "ual/error.hpp"

namespace ual {

namespace {

void add_to(std::map<std::uint32_t, Scalar>& m, std::uint32_t key, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = m.find(key);
  if (it == m.end()) {
    m.emplace(key, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) m.erase(it);
}

void add_to(GroupTensor& m, std::pair<std::uint32_t, std::uint32_t> key, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = m.find(key);
  if (it == m.end()) {
    m.emplace(key, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) m.erase(it);
}

std::string kind_name(GroupBialgebraKind k) {
  return k == GroupBialgebraKind::GroupAlgebra ? "k[G]" : "k[G]*";
}

}  // namespace

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<std::uint32_t> factors)
    : factors_(std::move(factors)) {
  std::uint64_t order = 1;
  for (auto m : factors_) {
    if (m < 2) throw InputError("group factor must be at least 2");
    order *= m;
    if (order > (1u << 20)) throw InputError("group order too large");
  }
  order_ = static_cast<std::uint32_t>(order);
}

FiniteAbelianGroup FiniteAbelianGroup::parse(std::string_view spec) {
  if (spec == "1") return FiniteAbelianGroup({});
  std::vector<std::uint32_t> factors;
  std::size_t pos = 0;
  while (pos <= spec.size()) {
    std::size_t end = spec.find('x', pos);
    if (end == std::string_view::npos) end = spec.size();
    std::string_view part = spec.substr(pos, end - pos);
    if (part.size() < 2 || part[0] != 'Z')
      throw InputError("invalid group '" + std::string(spec) + "'; expected e.g. Z2xZ4");
    std::uint32_t m = 0;
    auto [ptr, ec] = std::from_chars(part.data() + 1, part.data() + part.size(), m);
    if (ec != std::errc() || ptr != part.data() + part.size())
      throw InputError("invalid group '" + std::string(spec) + "'");
    factors.push_back(m);
    pos = end + 1;
  }
  return FiniteAbelianGroup(std::move(factors));
}

std::vector<std::uint32_t> FiniteAbelianGroup::element(std::uint32_t index) const {
  if (index >= order_) throw InputError("group element index out of range");
  std::vector<std::uint32_t> r(factors_.size());
  for (std::size_t k = factors_.size(); k-- > 0;) {
    r[k] = index % factors_[k];
    index /= factors_[k];
  }
  return r;
}

std::uint32_t FiniteAbelianGroup::index(const std::vector<std::uint32_t>& residues) const {
  if (residues.size() != factors_.size()) throw InputError("group element has wrong arity");
  std::uint32_t idx = 0;
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    if (residues[k] >= factors_[k]) throw InputError("group element residue out of range");
    idx = idx * factors_[k] + residues[k];
  }
  return idx;
}

std::uint32_t FiniteAbelianGroup::add(std::uint32_t a, std::uint32_t b) const {
  auto x = element(a);
  auto y = element(b);
  for (std::size_t k = 0; k < x.size(); ++k) x[k] = (x[k] + y[k]) % factors_[k];
  return index(x);
}

std::uint32_t FiniteAbelianGroup::negate(std::uint32_t a) const {
  auto x = element(a);
  for (std::size_t k = 0; k < x.size(); ++k) x[k] = (factors_[k] - x[k]) % factors_[k];
  return index(x);
}

std::uint32_t FiniteAbelianGroup::generator(std::size_t r) const {
  if (r >= factors_.size()) throw InputError("generator index out of range");
  std::vector<std::uint32_t> x(factors_.size(), 0);
  x[r] = 1;
  return index(x);
}

std::string FiniteAbelianGroup::to_string() const {
  if (factors_.empty()) return "1";
  std::string s;
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    if (k) s += 'x';
    s += "Z" + std::to_string(factors_[k]);
  }
  return s;
}

std::string FiniteAbelianGroup::element_to_string(std::uint32_t idx) const {
  auto x = element(idx);
  std::string s = "(";
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(x[k]);
  }
  return s + ")";
}

GroupBialgebra::GroupBialgebra(GroupPtr group, Field field, GroupBialgebraKind kind)
    : group_(std::move(group)), field_(std::move(field)), kind_(kind) {
  if (!group_) throw InputError("group bialgebra needs a group");
}

void GroupBialgebra::require_kind(const GroupAlgebraElement& x) const {
  if (x.kind != kind_) throw InputError("element of " + kind_name(x.kind) + " used in " +
                                        kind_name(kind_));
  for (const auto& [g, c] : x.coeffs) {
    if (g >= group_->order()) throw InputError("group element index out of range");
    if (c.field() != field_) throw InputError("coefficient field mismatch");
  }
}

GroupAlgebraElement GroupBialgebra::one() const {
  GroupAlgebraElement e{kind_, {}};
  if (kind_ == GroupBialgebraKind::GroupAlgebra) {
    e.coeffs.emplace(group_->identity(), field_.one());
  } else {
    for (std::uint32_t g = 0; g < group_->order(); ++g) e.coeffs.emplace(g, field_.one());
  }
  return e;
}

GroupAlgebraElement GroupBialgebra::basis(std::uint32_t g) const {
  if (g >= group_->order()) throw InputError("group element index out of range");
  GroupAlgebraElement e{kind_, {}};
  e.coeffs.emplace(g, field_.one());
  return e;
}

GroupAlgebraElement GroupBialgebra::scalar(const Scalar& c) const { return scale(one(), c); }

GroupAlgebraElement GroupBialgebra::add(const GroupAlgebraElement& x,
                                        const GroupAlgebraElement& y) const {
  require_kind(x);
  require_kind(y);
  GroupAlgebraElement out = x;
  for (const auto& [g, c] : y.coeffs) add_to(out.coeffs, g, c);
  return out;
}

GroupAlgebraElement GroupBialgebra::multiply(const GroupAlgebraElement& x,
                                             const GroupAlgebraElement& y) const {
  require_kind(x);
  require_kind(y);
  GroupAlgebraElement out{kind_, {}};
  if (kind_ == GroupBialgebraKind::GroupAlgebra) {
    for (const auto& [a, ca] : x.coeffs)
      for (const auto& [b, cb] : y.coeffs) add_to(out.coeffs, group_->add(a, b), ca * cb);
  } else {
    for (const auto& [a, ca] : x.coeffs) {
      auto it = y.coeffs.find(a);
      if (it != y.coeffs.end()) add_to(out.coeffs, a, ca * it->second);
    }
  }
  return out;
}

GroupAlgebraElement GroupBialgebra::scale(const GroupAlgebraElement& x, const Scalar& c) const {
  require_kind(x);
  GroupAlgebraElement out{kind_, {}};
  for (const auto& [g, v] : x.coeffs) add_to(out.coeffs, g, v * c);
  return out;
}

GroupTensor GroupBialgebra::coproduct(const GroupAlgebraElement& x) const {
  require_kind(x);
  GroupTensor out;
  if (kind_ == GroupBialgebraKind::GroupAlgebra) {
    for (const auto& [g, c] : x.coeffs) add_to(out, {g, g}, c);
  } else {
    for (const auto& [g, c] : x.coeffs)
      for (std::uint32_t u = 0; u < group_->order(); ++u)
        add_to(out, {u, group_->add(g, group_->negate(u))}, c);
  }
  return out;
}

Scalar GroupBialgebra::counit(const GroupAlgebraElement& x) const {
  require_kind(x);
  Scalar acc = field_.zero();
  if (kind_ == GroupBialgebraKind::GroupAlgebra) {
    for (const auto& [g, c] : x.coeffs) acc += c;
  } else {
    acc = x.coefficient(group_->identity(), field_);
  }
  return acc;
}

GroupTensor GroupBialgebra::tensor(const GroupAlgebraElement& x,
                                   const GroupAlgebraElement& y) const {
  require_kind(x);
  require_kind(y);
  GroupTensor out;
  for (const auto& [a, ca] : x.coeffs)
    for (const auto& [b, cb] : y.coeffs) add_to(out, {a, b}, ca * cb);
  return out;
}

Matrix BialgebraHom::coefficient_matrix(std::uint32_t g) const {
  const std::size_t n = pres->n();
  Matrix m(n, n, pres->field());
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t i = 0; i < n; ++i) m(s, i) = at(s, i).coefficient(g, pres->field());
  return m;
}

namespace {

void require_structure(const BialgebraHom& theta) {
  if (!theta.pres || !theta.codomain) throw InputError("bialgebra hom is incomplete");
  if (!theta.pres->is_square()) throw InputError("bialgebra hom needs a square presentation");
  const std::size_t n = theta.pres->n();
  if (theta.images.size() != n * n) throw InputError("bialgebra hom needs n*n images");
  if (theta.codomain->field() != theta.pres->field())
    throw InputError("bialgebra hom field mismatch");
  for (const auto& x : theta.images) {
    if (x.kind != theta.codomain->kind()) throw InputError("image has the wrong bialgebra kind");
    for (const auto& [g, c] : x.coeffs) {
      if (g >= theta.codomain->group()->order())
        throw InputError("group element index out of range");
      if (c.field() != theta.pres->field()) throw InputError("coefficient field mismatch");
    }
  }
}

std::string pos(std::size_t a, std::size_t b) {
  return std::to_string(a + 1) + std::to_string(b + 1);
}

}  // namespace

BihomCheck verify_bialgebra_hom(const BialgebraHom& theta) {
  require_structure(theta);
  BihomCheck report;
  const auto& B = *theta.codomain;
  const auto& pres = *theta.pres;
  const std::size_t n = pres.n();
  const std::size_t nv = pres.ring()->nvars();
  std::vector<GroupAlgebraElement> values(nv, B.zero());
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t i = 0; i < n; ++i) values[pres.variable(s, i)] = theta.at(s, i);
  auto mul = [&](const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    return B.multiply(a, b);
  };
  auto add = [&](const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    return B.add(a, b);
  };
  auto embed = [&](const Scalar& c) { return B.scalar(c); };
  for (const auto& up : pres.universal()) {
    if (up.poly.is_zero()) continue;
    auto v = evaluate_in<GroupAlgebraElement>(up.poly, values, B.zero(), mul, add, embed);
    if (!v.coeffs.empty()) {
      report.algebra_map = false;
      report.failures.push_back("relation P(" + std::to_string(up.a + 1) + "," +
                                std::to_string(up.i + 1) + "," + std::to_string(up.j + 1) +
                                ") does not vanish");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      GroupTensor lhs = B.coproduct(theta.at(i, j));
      GroupTensor rhs;
      for (std::size_t s = 0; s < n; ++s)
        for (const auto& [k, c] : B.tensor(theta.at(i, s), theta.at(s, j))) add_to(rhs, k, c);
      if (lhs != rhs) {
        report.coalgebra_map = false;
        report.failures.push_back("comultiplication fails at x" + pos(i, j));
      }
      Scalar e = B.counit(theta.at(i, j));
      if (i == j ? !e.is_one() : !e.is_zero()) {
        report.counit_map = false;
        report.failures.push_back("counit fails at x" + pos(i, j));
      }
    }
  }
  return report;
}

Grading::Grading(GroupPtr group, std::size_t dim, Field field,
                 std::vector<GradingComponent> comps)
    : group_(std::move(group)), dim_(dim), field_(std::move(field)), components_(std::move(comps)) {
  std::vector<std::uint32_t> degrees(dim_, 0);
  std::vector<bool> seen(dim_, false);
  bool diag = true;
  for (const auto& c : components_) {
    for (std::size_t col = 0; col < c.basis.cols() && diag; ++col) {
      std::size_t nonzero = 0;
      std::size_t where = 0;
      for (std::size_t r = 0; r < dim_; ++r)
        if (!c.basis(r, col).is_zero()) {
          ++nonzero;
          where = r;
        }
      if (nonzero != 1 || seen[where]) {
        diag = false;
        break;
      }
      seen[where] = true;
      degrees[where] = c.element;
    }
  }
  if (diag) degree_map_ = std::move(degrees);
}

Grading Grading::from_components(const LeibnizAlgebra& h, GroupPtr group,
                                 std::vector<GradingComponent> components) {
  if (!group) throw InputError("grading needs a group");
  const std::size_t n = h.dim();
  std::map<std::uint32_t, Matrix> by_element;
  Matrix all(n, 0, h.field());
  for (auto& c : components) {
    if (c.element >= group->order()) throw InputError("grading component element out of range");
    if (c.basis.rows() != n) throw InputError("grading component has wrong row count");
    if (c.basis.field() != h.field()) throw InputError("grading component field mismatch");
    if (by_element.count(c.element)) throw ValidationError("grading repeats a group element");
    Matrix canon = c.basis.column_space();
    if (canon.cols() != c.basis.cols())
      throw ValidationError("grading component basis is linearly dependent");
    all = all.hcat(canon);
    if (canon.cols() > 0) by_element.emplace(c.element, std::move(canon));
  }
  if (all.cols() != n || all.rank() != n)
    throw ValidationError("grading components do not form a direct sum decomposition");
  for (const auto& [s, bs] : by_element) {
    for (const auto& [t, bt] : by_element) {
      const std::uint32_t st = group->add(s, t);
      auto it = by_element.find(st);
      for (std::size_t a = 0; a < bs.cols(); ++a) {
        for (std::size_t b = 0; b < bt.cols(); ++b) {
          auto v = h.bracket(bs.column(a), bt.column(b));
          bool zero = std::all_of(v.begin(), v.end(), [](const Scalar& x) { return x.is_zero(); });
          if (zero) continue;
          Matrix col(n, 1, v);
          if (it == by_element.end() || !it->second.spans(col))
            throw ValidationError("bracket of components " + group->element_to_string(s) +
                                  " and " + group->element_to_string(t) + " leaves component " +
                                  group->element_to_string(st));
        }
      }
    }
  }
  std::vector<GradingComponent> out;
  for (auto& [g, b] : by_element) out.push_back({g, std::move(b)});
  return Grading(std::move(group), n, h.field(), std::move(out));
}

Grading Grading::from_degree_map(const LeibnizAlgebra& h, GroupPtr group,
                                 const std::vector<std::uint32_t>& degrees) {
  if (!group) throw InputError("grading needs a group");
  const std::size_t n = h.dim();
  if (degrees.size() != n) throw InputError("degree map has wrong length");
  std::map<std::uint32_t, std::vector<std::size_t>> cols;
  for (std::size_t i = 0; i < n; ++i) {
    if (degrees[i] >= group->order()) throw InputError("degree out of range");
    cols[degrees[i]].push_back(i);
  }
  std::vector<GradingComponent> comps;
  for (const auto& [g, idx] : cols) {
    Matrix b(n, idx.size(), h.field());
    for (std::size_t c = 0; c < idx.size(); ++c) b(idx[c], c) = h.field().one();
    comps.push_back({g, std::move(b)});
  }
  return from_components(h, std::move(group), std::move(comps));
}

Matrix Grading::component(std::uint32_t sigma) const {
  for (const auto& c : components_)
    if (c.element == sigma) return c.basis;
  return Matrix(dim_, 0, field_);
}

bool operator==(const Grading& a, const Grading& b) {
  if (a.dim_ != b.dim_ || *a.group_ != *b.group_) return false;
  if (a.components_.size() != b.components_.size()) return false;
  for (std::size_t k = 0; k < a.components_.size(); ++k) {
    if (a.components_[k].element != b.components_[k].element) return false;
    if (!(a.components_[k].basis == b.components_[k].basis)) return false;
  }
  return true;
}

std::vector<Grading> diagonal_gradings(const LeibnizAlgebra& h, const GroupPtr& group,
                                       const EnumerationBudget& budget) {
  if (!group) throw InputError("diagonal_gradings needs a group");
  const std::size_t n = h.dim();
  if (candidate_count(group->order(), n) > budget.max_candidates)
    throw BudgetExceeded("diagonal grading search exceeds the candidate budget (|G|^n = " +
                         std::to_string(group->order()) + "^" + std::to_string(n) + ")");
  struct Constraint {
    std::uint32_t i, j, s;
  };
  std::vector<Constraint> constraints;
  for (const auto& [ij, vec] : h.brackets())
    for (const auto& [s, c] : vec)
      if (!c.is_zero()) constraints.push_back({ij.first, ij.second, s});
  std::vector<std::uint32_t> d(n, 0);
  std::vector<Grading> out;
  auto consistent = [&](std::size_t assigned) {
    for (const auto& c : constraints) {
      if (c.i >= assigned || c.j >= assigned || c.s >= assigned) continue;
      if (d[c.s] != group->add(d[c.i], d[c.j])) return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == n) {
      out.push_back(Grading::from_degree_map(h, group, d));
      return;
    }
    for (std::uint32_t g = 0; g < group->order(); ++g) {
      d[k] = g;
      if (consistent(k + 1)) self(self, k + 1);
    }
    d[k] = 0;
  };
  rec(rec, 0);
  return out;
}

namespace {

GroupBialgebraPtr group_algebra(const GroupPtr& group, const Field& field) {
  return std::make_shared<GroupBialgebra>(group, field, GroupBialgebraKind::GroupAlgebra);
}

}  // namespace

BialgebraHom grading_to_bihom(const Grading& grading, const PresentationPtr& pres) {
  if (!pres || !pres->is_square()) throw InputError("grading_to_bihom needs a square presentation");
  const std::size_t n = pres->n();
  if (grading.dim() != n) throw InputError("grading dimension does not match the presentation");
  const Field& f = pres->field();
  Grading checked = Grading::from_components(pres->h(), grading.group(), grading.components());
  BialgebraHom theta{pres, group_algebra(grading.group(), f),
                     std::vector<GroupAlgebraElement>(n * n, GroupAlgebraElement{})};
  if (checked.diagonal()) {
    const auto& d = *checked.degree_map();
    for (std::size_t i = 0; i < n; ++i) theta.images[i * n + i].coeffs.emplace(d[i], f.one());
    return theta;
  }
  Matrix w(n, 0, f);
  std::vector<std::uint32_t> degree;
  for (const auto& c : checked.components()) {
    w = w.hcat(c.basis);
    degree.insert(degree.end(), c.basis.cols(), c.element);
  }
  Matrix winv = *w.inverse();
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t c = 0; c < n; ++c)
        add_to(theta.images[s * n + i].coeffs, degree[c], w(s, c) * winv(c, i));
  return theta;
}

Grading bihom_to_grading(const BialgebraHom& theta) {
  require_structure(theta);
  if (theta.codomain->kind() != GroupBialgebraKind::GroupAlgebra)
    throw InputError("bihom_to_grading needs a map into k[G]");
  auto check = verify_bialgebra_hom(theta);
  if (!check.ok())
    throw ValidationError("not a bialgebra map: " +
                          (check.failures.empty() ? std::string("unknown") : check.failures[0]));
  const auto& group = theta.codomain->group();
  const std::size_t n = theta.pres->n();
  const Field& f = theta.pres->field();
  std::vector<Matrix> coeff;
  for (std::uint32_t g = 0; g < group->order(); ++g) coeff.push_back(theta.coefficient_matrix(g));
  std::vector<GradingComponent> comps;
  Matrix id = Matrix::identity(n, f);
  for (std::uint32_t sigma = 0; sigma < group->order(); ++sigma) {
    Matrix stacked(n * group->order(), n, f);
    for (std::uint32_t g = 0; g < group->order(); ++g) {
      Matrix block = g == sigma ? coeff[g] - id : coeff[g];
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) stacked(g * n + r, c) = block(r, c);
    }
    Matrix k = stacked.kernel();
    if (k.cols() > 0) comps.push_back({sigma, k.column_space()});
  }
  try {
    return Grading::from_components(theta.pres->h(), group, std::move(comps));
  } catch (const ValidationError& e) {
    throw ValidationError(std::string("extracted components are not a grading: ") + e.what());
  }
}

namespace {

/// sum_t L(s, t) * theta(x_ti) or theta(x_st) * R(t, i) as k[G]-valued matrices.
std::vector<GroupAlgebraElement> matrix_product(const Matrix& left,
                                                const std::vector<GroupAlgebraElement>& mid,
                                                const Matrix& right, GroupBialgebraKind kind) {
  const std::size_t n = left.rows();
  std::vector<GroupAlgebraElement> tmp(n * n, GroupAlgebraElement{kind, {}});
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t) {
      if (left(s, t).is_zero()) continue;
      for (std::size_t i = 0; i < n; ++i)
        for (const auto& [g, c] : mid[t * n + i].coeffs)
          add_to(tmp[s * n + i].coeffs, g, left(s, t) * c);
    }
  std::vector<GroupAlgebraElement> out(n * n, GroupAlgebraElement{kind, {}});
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t)
      for (const auto& [g, c] : tmp[s * n + t].coeffs)
        for (std::size_t i = 0; i < n; ++i)
          if (!right(t, i).is_zero()) add_to(out[s * n + i].coeffs, g, c * right(t, i));
  return out;
}

std::vector<GroupAlgebraElement> left_multiply(const Matrix& d,
                                               const std::vector<GroupAlgebraElement>& t,
                                               GroupBialgebraKind kind) {
  return matrix_product(d, t, Matrix::identity(d.rows(), d.field()), kind);
}

std::vector<GroupAlgebraElement> right_multiply(const std::vector<GroupAlgebraElement>& t,
                                                const Matrix& d, GroupBialgebraKind kind) {
  return matrix_product(Matrix::identity(d.rows(), d.field()), t, d, kind);
}

void require_compatible(const BialgebraHom& t, const Character& g) {
  require_structure(t);
  if (g.matrix().rows() != t.pres->n() || g.matrix().cols() != t.pres->n())
    throw InputError("character and bialgebra hom have different dimensions");
  if (g.matrix().field() != t.pres->field())
    throw InputError("character and bialgebra hom have different fields");
}

}  // namespace

BialgebraHom conjugate(const BialgebraHom& theta, const Character& g) {
  require_compatible(theta, g);
  auto inv = g.matrix().inverse();
  if (!inv) throw ValidationError("conjugation needs an invertible character");
  BialgebraHom out = theta;
  out.images = matrix_product(g.matrix(), theta.images, *inv, theta.codomain->kind());
  return out;
}

std::optional<Character> gradings_isomorphic(const BialgebraHom& t1, const BialgebraHom& t2,
                                             const std::vector<Character>& automorphisms) {
  require_structure(t1);
  require_structure(t2);
  if (t1.pres->n() != t2.pres->n() || *t1.codomain->group() != *t2.codomain->group() ||
      t1.codomain->kind() != t2.codomain->kind())
    throw InputError("gradings_isomorphic needs homs with the same shape and codomain");
  const auto kind = t1.codomain->kind();
  for (const auto& g : automorphisms) {
    require_compatible(t1, g);
    if (left_multiply(g.matrix(), t1.images, kind) == right_multiply(t2.images, g.matrix(), kind))
      return g;
  }
  return std::nullopt;
}

std::optional<Character> gradings_isomorphic(const BialgebraHom& t1, const BialgebraHom& t2,
                                             const EnumerationBudget& budget) {
  require_structure(t1);
  return gradings_isomorphic(t1, t2, enumerate_automorphism_characters(t1.pres, budget));
}

bool witness_maps_components(const Character& g, const BialgebraHom& t1, const BialgebraHom& t2) {
  Grading a = bihom_to_grading(t1);
  Grading b = bihom_to_grading(t2);
  for (std::uint32_t sigma = 0; sigma < t1.codomain->group()->order(); ++sigma) {
    Matrix image = g.matrix() * a.component(sigma);
    Matrix target = b.component(sigma);
    if (image.rank() != target.cols()) return false;
    if (!target.spans(image) || !image.spans(target)) return false;
  }
  return true;
}

GradingClassification classify_gradings(const PresentationPtr& pres, const GroupPtr& group,
                                        const EnumerationBudget& budget) {
  if (!pres || !pres->is_square()) throw InputError("classify_gradings needs a square presentation");
  if (!pres->field().is_prime()) throw InputError("classify_gradings needs a prime field");
  GradingClassification result;
  auto autos = enumerate_automorphism_characters(pres, budget);
  auto diag = diagonal_gradings(pres->h(), group, budget);
  result.automorphism_count = autos.size();
  result.diagonal_count = diag.size();
  std::vector<BialgebraHom> members;
  auto find = [&](const BialgebraHom& t) -> std::size_t {
    for (std::size_t k = 0; k < members.size(); ++k)
      if (members[k] == t) return k;
    return members.size();
  };
  for (const auto& gr : diag) {
    auto t = grading_to_bihom(gr, pres);
    if (find(t) == members.size()) members.push_back(std::move(t));
  }
  const std::size_t base = members.size();
  for (std::size_t k = 0; k < base; ++k)
    for (const auto& g : autos) {
      auto c = conjugate(members[k], g);
      if (find(c) == members.size()) members.push_back(std::move(c));
    }
  std::vector<std::size_t> cls(members.size(), members.size());
  for (std::size_t k = 0; k < members.size(); ++k) {
    if (cls[k] != members.size()) continue;
    const std::size_t id = result.classes.size();
    GradingClass gc;
    for (const auto& g : autos) {
      std::size_t j = find(conjugate(members[k], g));
      if (j == members.size()) throw Error(ErrorKind::Validation, "conjugation orbit not closed");
      if (cls[j] == members.size()) {
        cls[j] = id;
        gc.members.push_back(members[j]);
      }
    }
    if (cls[k] != id) {
      cls[k] = id;
      gc.members.insert(gc.members.begin(), members[k]);
    } else {
      auto it = std::find(gc.members.begin(), gc.members.end(), members[k]);
      std::rotate(gc.members.begin(), it, it + 1);
    }
    Grading rep = bihom_to_grading(gc.members.front());
    for (std::uint32_t g = 0; g < group->order(); ++g)
      gc.component_dims.push_back(rep.component(g).cols());
    result.classes.push_back(std::move(gc));
  }
  result.total = members.size();
  result.scope =
      "exhaustive over diagonal gradings in the given basis and their conjugates by all "
      "automorphisms over " + pres->field().to_string() +
      "; gradings with no homogeneous basis in that orbit are not enumerated";
  return result;
}

GroupAction::GroupAction(PresentationPtr pres, GroupPtr group, std::vector<Matrix> images)
    : pres_(std::move(pres)), group_(std::move(group)) {
  if (!pres_ || !pres_->is_square()) throw InputError("group action needs a square presentation");
  if (!group_) throw InputError("group action needs a group");
  if (images.size() != group_->order())
    throw InputError("group action needs one matrix per group element");
  const std::size_t n = pres_->n();
  Matrix id = Matrix::identity(n, pres_->field());
  for (std::size_t g = 0; g < images.size(); ++g) {
    if (images[g].rows() != n || images[g].cols() != n)
      throw InputError("group action matrix has wrong shape");
    if (!images[g].inverse())
      throw ValidationError("phi" + group_->element_to_string(g) + " is not invertible");
    images_.emplace_back(pres_, images[g]);
  }
  if (!(images[group_->identity()] == id))
    throw ValidationError("phi(identity) is not the identity");
  for (std::uint32_t a = 0; a < group_->order(); ++a)
    for (std::uint32_t b = 0; b < group_->order(); ++b)
      if (!(images[group_->add(a, b)] == images[a] * images[b]))
        throw ValidationError("phi" + group_->element_to_string(a) + group_->element_to_string(b) +
                              " is not a group homomorphism");
}

BialgebraHom action_to_bihom(const GroupAction& action) {
  const auto& pres = action.presentation();
  const std::size_t n = pres->n();
  const Field& f = pres->field();
  auto dual = std::make_shared<GroupBialgebra>(action.group(), f, GroupBialgebraKind::Dual);
  BialgebraHom theta{pres, dual,
                     std::vector<GroupAlgebraElement>(n * n, GroupAlgebraElement{
                                                                 GroupBialgebraKind::Dual, {}})};
  for (std::uint32_t g = 0; g < action.group()->order(); ++g) {
    const Matrix& m = action.images()[g].matrix();
    for (std::size_t s = 0; s < n; ++s)
      for (std::size_t i = 0; i < n; ++i) add_to(theta.images[s * n + i].coeffs, g, m(s, i));
  }
  return theta;
}

GroupAction bihom_to_action(const BialgebraHom& theta) {
  require_structure(theta);
  if (theta.codomain->kind() != GroupBialgebraKind::Dual)
    throw InputError("bihom_to_action needs a map into k[G]*");
  std::vector<Matrix> images;
  for (std::uint32_t g = 0; g < theta.codomain->group()->order(); ++g)
    images.push_back(theta.coefficient_matrix(g));
  return GroupAction(theta.pres, theta.codomain->group(), std::move(images));
}

std::vector<GroupAction> enumerate_actions(const PresentationPtr& pres, const GroupPtr& group,
                                           const EnumerationBudget& budget) {
  if (!pres || !pres->is_square()) throw InputError("enumerate_actions needs a square presentation");
  if (!group) throw InputError("enumerate_actions needs a group");
  auto autos = enumerate_automorphism_characters(pres, budget);
  const std::size_t k = group->factors().size();
  if (candidate_count(autos.size(), k) > budget.max_candidates)
    throw BudgetExceeded("action search exceeds the candidate budget");
  const std::size_t n = pres->n();
  const Matrix id = Matrix::identity(n, pres->field());
  auto power = [&](const Matrix& a, std::uint32_t e) {
    Matrix r = id;
    for (std::uint32_t t = 0; t < e; ++t) r = r * a;
    return r;
  };
  std::vector<std::vector<std::size_t>> allowed(k);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t a = 0; a < autos.size(); ++a)
      if (power(autos[a].matrix(), group->factors()[r]) == id) allowed[r].push_back(a);
  std::vector<GroupAction> out;
  std::vector<std::size_t> choice(k, 0);
  auto rec = [&](auto&& self, std::size_t r) -> void {
    if (r == k) {
      std::vector<Matrix> images;
      for (std::uint32_t g = 0; g < group->order(); ++g) {
        auto res = group->element(g);
        Matrix m = id;
        for (std::size_t q = 0; q < k; ++q) m = m * power(autos[choice[q]].matrix(), res[q]);
        images.push_back(std::move(m));
      }
      out.emplace_back(pres, group, std::move(images));
      return;
    }
    for (std::size_t a : allowed[r]) {
      const Matrix& ma = autos[a].matrix();
      bool commutes = true;
      for (std::size_t q = 0; q < r && commutes; ++q) {
        const Matrix& mq = autos[choice[q]].matrix();
        commutes = ma * mq == mq * ma;
      }
      if (!commutes) continue;
      choice[r] = a;
      self(self, r + 1);
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace ual
