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

#include "ual/serialize.hpp"

#include <algorithm>

#include "ual/error.hpp"

namespace ual {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw InputError(msg);
}

std::uint32_t one_based(const Json& j, std::size_t bound, const std::string& what) {
  require(j.is_number_integer(), what + " must be an integer");
  const auto v = j.get<long long>();
  require(v >= 1 && static_cast<std::size_t>(v) <= bound,
          what + " " + std::to_string(v) + " out of range 1.." + std::to_string(bound));
  return static_cast<std::uint32_t>(v - 1);
}

std::size_t positive(const Json& j, const std::string& what) {
  require(j.is_number_integer() && j.get<long long>() > 0, what + " must be a positive integer");
  return j.get<std::size_t>();
}

const Json& member(const Json& j, const char* key, const std::string& ctx) {
  require(j.is_object(), ctx + " must be an object");
  auto it = j.find(key);
  require(it != j.end(), ctx + " is missing \"" + key + "\"");
  return *it;
}

SparseVector sparse_from_json(const Json& j, std::size_t dim, const Field& f,
                              const std::string& ctx) {
  require(j.is_array(), ctx + " must be a list of [index, coeff] pairs");
  SparseVector v;
  for (const auto& e : j) {
    require(e.is_array() && e.size() == 2, ctx + " entries must be [index, coeff]");
    const auto s = one_based(e[0], dim, ctx + " index");
    Scalar c = scalar_from_json(e[1], f);
    auto it = v.find(s);
    if (it == v.end()) {
      v.emplace(s, c);
    } else {
      it->second += c;
    }
  }
  for (auto it = v.begin(); it != v.end();) it = it->second.is_zero() ? v.erase(it) : std::next(it);
  return v;
}

Json sparse_to_json(const SparseVector& v) {
  Json out = Json::array();
  for (const auto& [s, c] : v) out.push_back(Json::array({s + 1, to_json(c)}));
  return out;
}

template <class F>
auto wrap(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

Json to_json(const Scalar& c) {
  if (c.is_rational()) return c.to_string();
  return c.residue();
}

Scalar scalar_from_json(const Json& j, const Field& field) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) {
      const auto v = j.get<std::uint64_t>();
      return field.from_rational(mpq_class(mpz_class(std::to_string(v))));
    }
    return field.from_int(j.get<long long>());
  }
  if (j.is_string()) return field.parse(j.get<std::string>());
  throw InputError("coefficient must be an integer or a \"num/den\" string");
}

Json to_json(const Field& field) {
  if (field.is_prime()) return {{"type", "prime"}, {"p", field.modulus()}};
  return {{"type", "rational"}};
}

Field field_from_json(const Json& j) {
  return wrap([&] {
    const auto& type = member(j, "type", "field");
    require(type.is_string(), "field type must be a string");
    const auto t = type.get<std::string>();
    if (t == "rational") return Field::rational();
    if (t == "prime") {
      const auto& p = member(j, "p", "field");
      require(p.is_number_integer() && p.get<long long>() > 0, "field p must be a positive integer");
      return Field::prime(p.get<std::uint64_t>());
    }
    throw InputError("unknown field type '" + t + "'");
  });
}

Json to_json(const LeibnizAlgebra& alg) {
  Json brackets = Json::array();
  for (const auto& [ij, v] : alg.brackets())
    brackets.push_back(Json::array({ij.first + 1, ij.second + 1, sparse_to_json(v)}));
  return {{"name", alg.name()},
          {"dim", alg.dim()},
          {"field", to_json(alg.field())},
          {"lie_autocomplete", false},
          {"brackets", brackets}};
}

LeibnizAlgebra algebra_from_json(const Json& j) {
  return wrap([&] {
    const std::string ctx = "algebra";
    std::string name;
    if (j.is_object() && j.contains("name")) {
      require(j["name"].is_string(), "algebra name must be a string");
      name = j["name"].get<std::string>();
    }
    const std::size_t dim = positive(member(j, "dim", ctx), "algebra dim");
    Field f = field_from_json(member(j, "field", ctx));
    bool autocomplete = false;
    if (j.contains("lie_autocomplete")) {
      require(j["lie_autocomplete"].is_boolean(), "lie_autocomplete must be a boolean");
      autocomplete = j["lie_autocomplete"].get<bool>();
    }
    const auto& list = member(j, "brackets", ctx);
    require(list.is_array(), "brackets must be a list");
    BracketTable table;
    for (const auto& b : list) {
      require(b.is_array() && b.size() == 3, "bracket entries must be [i, j, [[s, coeff], ...]]");
      const auto i = one_based(b[0], dim, "bracket index");
      const auto k = one_based(b[1], dim, "bracket index");
      require(!table.count({i, k}), "bracket [" + std::to_string(i + 1) + ", " +
                                        std::to_string(k + 1) + "] given twice");
      table.emplace(std::make_pair(i, k), sparse_from_json(b[2], dim, f, "bracket value"));
    }
    if (autocomplete) {
      BracketTable mates;
      for (const auto& [ij, v] : table) {
        if (ij.first == ij.second) continue;
        SparseVector neg;
        for (const auto& [s, c] : v) neg.emplace(s, -c);
        const std::pair<std::uint32_t, std::uint32_t> ji{ij.second, ij.first};
        auto it = table.find(ji);
        if (it != table.end()) {
          require(it->second == neg, "bracket [" + std::to_string(ji.first + 1) + ", " +
                                         std::to_string(ji.second + 1) +
                                         "] contradicts antisymmetry");
        } else {
          mates.emplace(ji, std::move(neg));
        }
      }
      table.merge(mates);
    }
    return LeibnizAlgebra(dim, f, std::move(table), name);
  });
}

Json to_json(const CommutativeAlgebra& alg) {
  Json products = Json::array();
  for (const auto& [ab, v] : alg.structure())
    products.push_back(Json::array({ab.first + 1, ab.second + 1, sparse_to_json(v)}));
  Json unit = Json::array();
  for (const auto& c : alg.unit()) unit.push_back(to_json(c));
  return {{"name", alg.name()},
          {"dim", alg.dim()},
          {"field", to_json(alg.field())},
          {"unit", unit},
          {"products", products}};
}

CommutativeAlgebra commutative_algebra_from_json(const Json& j) {
  return wrap([&] {
    const std::string ctx = "commutative algebra";
    std::string name;
    if (j.is_object() && j.contains("name")) {
      require(j["name"].is_string(), "algebra name must be a string");
      name = j["name"].get<std::string>();
    }
    const std::size_t dim = positive(member(j, "dim", ctx), "algebra dim");
    Field f = field_from_json(member(j, "field", ctx));
    const auto& u = member(j, "unit", ctx);
    require(u.is_array() && u.size() == dim, "unit must list dim coefficients");
    std::vector<Scalar> unit;
    for (const auto& c : u) unit.push_back(scalar_from_json(c, f));
    const auto& list = member(j, "products", ctx);
    require(list.is_array(), "products must be a list");
    BracketTable mu;
    for (const auto& b : list) {
      require(b.is_array() && b.size() == 3, "product entries must be [a, b, [[c, coeff], ...]]");
      const auto a = one_based(b[0], dim, "product index");
      const auto c = one_based(b[1], dim, "product index");
      require(!mu.count({a, c}), "product given twice");
      mu.emplace(std::make_pair(a, c), sparse_from_json(b[2], dim, f, "product value"));
    }
    return CommutativeAlgebra(dim, f, std::move(mu), std::move(unit), name);
  });
}

Json to_json(const Polynomial& p) {
  const auto& grid = p.ring()->grid();
  Json out = Json::array();
  for (const auto& t : p.terms()) {
    Json mono = Json::array();
    for (std::uint32_t v = 0; v < t.mono.nvars(); ++v) {
      if (!t.mono[v]) continue;
      Json var = Json::array({grid.row_of(v) + 1, grid.col_of(v) + 1, t.mono[v]});
      if (grid.copies > 1) var.push_back(grid.copy_of(v) + 1);
      mono.push_back(var);
    }
    out.push_back(Json::array({mono, to_json(t.coeff)}));
  }
  return out;
}

Polynomial polynomial_from_json(const Json& j, const RingPtr& ring) {
  return wrap([&] {
    const auto& grid = ring->grid();
    require(j.is_array(), "polynomial must be a list of terms");
    std::vector<Term> terms;
    for (const auto& t : j) {
      require(t.is_array() && t.size() == 2, "polynomial terms must be [monomial, coeff]");
      require(t[0].is_array(), "monomial must be a list of [s, i, e] factors");
      Monomial m(ring->nvars());
      for (const auto& var : t[0]) {
        require(var.is_array() && (var.size() == 3 || var.size() == 4),
                "monomial factors must be [s, i, e] or [s, i, e, copy]");
        const auto s = one_based(var[0], grid.rows, "variable row");
        const auto i = one_based(var[1], grid.cols, "variable column");
        require(var[2].is_number_integer() && var[2].get<long long>() >= 0 &&
                    var[2].get<long long>() <= 65535,
                "exponent out of range");
        std::uint32_t copy = 0;
        if (var.size() == 4) copy = one_based(var[3], grid.copies, "tensor copy");
        const auto v = grid.index(copy, s, i);
        require(m[v] == 0, "variable repeated in a monomial");
        m.set(v, static_cast<std::uint16_t>(var[2].get<long long>()));
      }
      terms.push_back({std::move(m), scalar_from_json(t[1], ring->field())});
    }
    return Polynomial::from_terms(ring, std::move(terms));
  });
}

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

Matrix matrix_from_json(const Json& j, const Field& field) {
  return wrap([&] {
    require(j.is_array() && !j.empty(), "matrix must be a non-empty list of rows");
    const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
    Matrix m(j.size(), cols, field);
    for (std::size_t r = 0; r < j.size(); ++r) {
      require(j[r].is_array() && j[r].size() == cols, "matrix rows must have equal length");
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = scalar_from_json(j[r][c], field);
    }
    return m;
  });
}

Json to_json(const Presentation& pres) {
  Json polys = Json::array();
  for (const auto& u : pres.universal())
    polys.push_back({{"index", Json::array({u.a + 1, u.i + 1, u.j + 1})},
                     {"zero", u.poly.is_zero()},
                     {"terms", to_json(u.poly)},
                     {"text", u.poly.to_string()}});
  Json gb = Json::array();
  Json gb_text = Json::array();
  for (const auto& g : pres.basis().generators()) {
    gb.push_back(to_json(g));
    gb_text.push_back(g.to_string());
  }
  return {{"dims", Json::array({pres.n(), pres.m()})},
          {"h", pres.h().name()},
          {"g", pres.g().name()},
          {"field", to_json(pres.field())},
          {"order", pres.ring()->order().name()},
          {"universal_polys", polys},
          {"groebner_basis", gb},
          {"groebner_basis_text", gb_text},
          {"unit_ideal", pres.basis().is_unit()}};
}

Json matrices_to_json(const std::vector<Matrix>& ms) {
  Json elems = Json::array();
  for (const auto& m : ms) elems.push_back(to_json(m));
  return {{"count", ms.size()}, {"elements", elems}};
}

Json characters_to_json(const std::vector<Character>& chars) {
  Json elems = Json::array();
  for (const auto& c : chars) elems.push_back(to_json(c.matrix()));
  return {{"count", chars.size()}, {"elements", elems}};
}

Json to_json(const FiniteAbelianGroup& group, std::uint32_t element) {
  return group.element(element);
}

std::uint32_t group_element_from_json(const Json& j, const FiniteAbelianGroup& group) {
  return wrap([&] {
    require(j.is_array(), "group element must be a list of residues");
    std::vector<std::uint32_t> r;
    for (const auto& x : j) {
      require(x.is_number_integer() && x.get<long long>() >= 0, "residues must be non-negative");
      r.push_back(x.get<std::uint32_t>());
    }
    return group.index(r);
  });
}

Json to_json(const Grading& grading) {
  const auto& G = *grading.group();
  Json comps = Json::array();
  for (const auto& c : grading.components())
    comps.push_back({{"element", to_json(G, c.element)}, {"basis", to_json(c.basis)}});
  Json degree_map = nullptr;
  if (grading.diagonal()) {
    degree_map = Json::array();
    for (auto d : *grading.degree_map()) degree_map.push_back(to_json(G, d));
  }
  return {{"group", G.to_string()},
          {"components", comps},
          {"diagonal", grading.diagonal()},
          {"degree_map", degree_map}};
}

Grading grading_from_json(const Json& j, const LeibnizAlgebra& h) {
  return wrap([&] {
    const auto& g = member(j, "group", "grading");
    require(g.is_string(), "grading group must be a string");
    auto group = std::make_shared<FiniteAbelianGroup>(FiniteAbelianGroup::parse(g.get<std::string>()));
    const auto& list = member(j, "components", "grading");
    require(list.is_array(), "grading components must be a list");
    std::vector<GradingComponent> comps;
    for (const auto& c : list)
      comps.push_back({group_element_from_json(member(c, "element", "component"), *group),
                       matrix_from_json(member(c, "basis", "component"), h.field())});
    return Grading::from_components(h, group, std::move(comps));
  });
}

Json to_json(const BialgebraHom& theta) {
  const auto& G = *theta.codomain->group();
  const std::size_t n = theta.pres->n();
  Json rows = Json::array();
  for (std::size_t s = 0; s < n; ++s) {
    Json row = Json::array();
    for (std::size_t i = 0; i < n; ++i) {
      Json entry = Json::array();
      for (const auto& [g, c] : theta.at(s, i).coeffs)
        entry.push_back({{"element", to_json(G, g)}, {"coeff", to_json(c)}});
      row.push_back(entry);
    }
    rows.push_back(row);
  }
  const bool dual = theta.codomain->kind() == GroupBialgebraKind::Dual;
  return {{"codomain", dual ? "k[G]*" : "k[G]"}, {"group", G.to_string()}, {"images", rows}};
}

BialgebraHom bihom_from_json(const Json& j, const PresentationPtr& pres) {
  return wrap([&] {
    const auto& cod = member(j, "codomain", "bialgebra hom");
    require(cod.is_string() && (cod == "k[G]" || cod == "k[G]*"),
            "codomain must be \"k[G]\" or \"k[G]*\"");
    const auto kind = cod == "k[G]" ? GroupBialgebraKind::GroupAlgebra : GroupBialgebraKind::Dual;
    const auto& g = member(j, "group", "bialgebra hom");
    require(g.is_string(), "group must be a string");
    auto group = std::make_shared<FiniteAbelianGroup>(FiniteAbelianGroup::parse(g.get<std::string>()));
    auto B = std::make_shared<GroupBialgebra>(group, pres->field(), kind);
    const std::size_t n = pres->n();
    const auto& rows = member(j, "images", "bialgebra hom");
    require(rows.is_array() && rows.size() == n, "images must have n rows");
    BialgebraHom theta{pres, B, {}};
    for (const auto& row : rows) {
      require(row.is_array() && row.size() == n, "images must have n columns");
      for (const auto& entry : row) {
        require(entry.is_array(), "image entries must be lists of {element, coeff}");
        GroupAlgebraElement x = B->zero();
        for (const auto& term : entry) {
          GroupAlgebraElement b =
              B->scale(B->basis(group_element_from_json(member(term, "element", "term"), *group)),
                       scalar_from_json(member(term, "coeff", "term"), pres->field()));
          x = B->add(x, b);
        }
        theta.images.push_back(std::move(x));
      }
    }
    return theta;
  });
}

Json to_json(const GroupAction& action) {
  const auto& G = *action.group();
  Json images = Json::array();
  for (std::uint32_t g = 0; g < G.order(); ++g)
    images.push_back({{"element", to_json(G, g)}, {"matrix", to_json(action.images()[g].matrix())}});
  return {{"group", G.to_string()}, {"images", images}};
}

GroupAction action_from_json(const Json& j, const PresentationPtr& pres) {
  return wrap([&] {
    const auto& g = member(j, "group", "action");
    require(g.is_string(), "group must be a string");
    auto group = std::make_shared<FiniteAbelianGroup>(FiniteAbelianGroup::parse(g.get<std::string>()));
    const auto& list = member(j, "images", "action");
    require(list.is_array() && list.size() == group->order(), "action needs one image per element");
    std::vector<std::optional<Matrix>> slots(group->order());
    for (const auto& e : list) {
      const auto idx = group_element_from_json(member(e, "element", "action image"), *group);
      require(!slots[idx], "action image given twice");
      slots[idx] = matrix_from_json(member(e, "matrix", "action image"), pres->field());
    }
    std::vector<Matrix> images;
    for (auto& s : slots) images.push_back(std::move(*s));
    return GroupAction(pres, group, std::move(images));
  });
}

}  // namespace ual
