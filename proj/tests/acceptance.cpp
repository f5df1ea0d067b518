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

#define DOCTEST_CONFIG_DISABLE

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <memory>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "cli.hpp"
#include "support.hpp"
#include "ual/gradcoact.hpp"
#include "ual/homspace.hpp"
#include "ual/serialize.hpp"
#include "ual/universal.hpp"

using namespace ual;
using namespace ual::test;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Checker {
 public:
  void expect(bool cond, const std::string& what) {
    if (!cond && out_.pass) out_.detail = what;
    out_.pass = out_.pass && cond;
  }
  Outcome done(std::string detail) {
    if (out_.pass) out_.detail = std::move(detail);
    return out_;
  }

 private:
  Outcome out_;
};

const std::string kData = std::string(UAL_DATA_DIR) + "/algebras";

bool same_up_to_sign(const Polynomial& a, const Polynomial& b) { return a == b || a == -b; }

std::set<std::string> keys(const std::vector<Matrix>& ms) {
  std::set<std::string> out;
  for (const auto& m : ms) out.insert(m.to_string());
  return out;
}

std::vector<Scalar> flat(const Matrix& m) { return m.data(); }

Outcome sl2_universal_polynomials() {
  Checker c;
  auto r = cli::run({"upoly", kData + "/sl2.json"});
  c.expect(r.status == cli::Status::Ok, "upoly failed");
  auto ring = universal_ring(builtin("sl2", Q), builtin("sl2", Q));
  std::vector<Polynomial> got;
  for (const auto& p : r.payload["polynomials"]) got.push_back(polynomial_from_json(p["terms"], ring));
  c.expect(got.size() == 9, "expected nine distinct nonzero polynomials");
  const char* listed[] = {
      "X13 - 2*X12*X31 + 2*X11*X32", "2*X11 - 2*X11*X33 + 2*X13*X31",
      "2*X12 - 2*X13*X32 + 2*X12*X33", "X23 - 2*X21*X32 + 2*X22*X31",
      "2*X21 - 2*X23*X31 + 2*X21*X33", "2*X22 - 2*X22*X33 + 2*X23*X32",
      "X33 - X11*X22 + X12*X21", "2*X31 - X21*X13 + X11*X23", "2*X32 - X12*X23 + X13*X22"};
  for (const char* text : listed) {
    auto q = poly(ring, text);
    c.expect(std::count_if(got.begin(), got.end(), [&](const Polynomial& p) { return same_up_to_sign(p, q); }) == 1,
             std::string("missing ") + text);
  }
  return c.done("9 of 9 polynomials match up to sign");
}

Outcome lie_symmetry() {
  Checker c;
  std::size_t checked = 0;
  for (const char* name : {"aff2", "sl2", "gl2"}) {
    auto h = builtin(name, Q);
    auto polys = universal_polynomials(h, h, universal_ring(h, h));
    const auto m = h.dim();
    for (const auto& u : polys) {
      const auto& mate = polys[(u.a * m + u.j) * m + u.i].poly;
      if (u.i == u.j) c.expect(u.poly.is_zero(), std::string(name) + ": nonzero P(a,i,i)");
      c.expect((u.poly + mate).is_zero(), std::string(name) + ": P(a,i,j) + P(a,j,i) != 0");
      ++checked;
    }
  }
  return c.done(std::to_string(checked) + " polynomials checked");
}

Outcome abelian_freeness() {
  Checker c;
  for (int n = 1; n <= 3; ++n) {
    auto pres = build_presentation(builtin("abelian" + std::to_string(n), Q));
    c.expect(pres->basis().empty(), "abelian" + std::to_string(n) + ": nonempty basis");
  }
  return c.done("dims 1..3: empty Groebner bases");
}

Outcome quadrics_of_k() {
  Checker c;
  auto h = builtin("sl2", Q);
  auto pres = build_presentation(h, builtin("abelian1", Q));
  const auto& r = pres->ring();
  std::vector<Polynomial> quadrics;
  for (std::uint32_t a = 0; a < h.dim(); ++a) {
    Polynomial q(r);
    for (std::uint32_t s = 0; s < h.dim(); ++s)
      for (std::uint32_t t = 0; t < h.dim(); ++t)
        q += (Polynomial::variable(r, pres->variable(s, 0)) * Polynomial::variable(r, pres->variable(t, 0)))
                 .scaled(h.structure_constant(s, t, a));
    quadrics.push_back(q);
  }
  c.expect(buchberger(r, quadrics) == pres->basis(), "ideal differs from the quadric ideal");
  for (const auto& u : pres->universal())
    c.expect(same_up_to_sign(u.poly, quadrics[u.a]), "generator is not a structure-constant quadric");
  return c.done("ideal equals (sum tau X_s X_t), basis size " + std::to_string(pres->basis().size()));
}

Outcome symmetric_algebras() {
  Checker c;
  auto heis = symmetric_algebra_check(builtin("heisenberg", Q));
  c.expect(heis.ok && heis.free_generators == 2, "heisenberg: not free on 2 generators");
  auto sl2 = symmetric_algebra_check(builtin("sl2", Q));
  c.expect(sl2.ok && sl2.free_generators == 0 && sl2.linear_span_dim == 3, "sl2: quotient is not k");
  auto ph = build_presentation(builtin("abelian1", Q), builtin("heisenberg", Q));
  c.expect(ph->basis().size() == 1 && ph->basis().generators()[0].total_degree() == 1,
           "heisenberg presentation is not one linear relation");
  auto ps = build_presentation(builtin("abelian1", Q), builtin("sl2", Q));
  c.expect(ps->basis().size() == 3, "sl2 presentation does not kill every generator");
  for (const auto& g : ps->basis().generators()) c.expect(g.total_degree() == 1, "sl2: nonlinear relation");
  return c.done("heisenberg free on 2, sl2 quotient = k");
}

Outcome bialgebra_verification() {
  Checker c;
  for (const char* name : {"aff2", "sl2"}) {
    auto pres = build_presentation(builtin(name, Q));
    const std::string n = name;
    c.expect(verify_comultiplication(*pres).ok, n + ": Delta not well defined");
    auto co = verify_comodule(*pres);
    c.expect(co.ok(), n + ": coalgebra or comodule axiom fails");
    c.expect(verify_eta_hom(*pres).ok, n + ": eta is not a homomorphism");
    c.expect(verify_projection_bialgebra_map(*pres), n + ": projection is not a bialgebra map");
    c.expect(comultiplication(*pres).counit == Matrix::identity(pres->n(), Q), n + ": counit is not delta_ij");
  }
  return c.done("aff2 and sl2 certificates pass");
}

Outcome character_bijection() {
  Checker c;
  const Field f = F(2);
  std::vector<std::pair<const char*, const char*>> pairs{{"aff2", "aff2"}, {"sl2", "sl2"}, {"aff2", "sl2"}};
  std::string counts;
  for (const auto& [hn, gn] : pairs) {
    auto h = builtin(hn, f);
    auto g = builtin(gn, f);
    auto pres = build_presentation(h, g);
    auto chars = enumerate_characters(pres);
    std::vector<Matrix> images;
    for (const auto& ch : chars) {
      images.push_back(gamma(ch));
      c.expect(is_hom(images.back(), g, h), "gamma image is not a homomorphism");
      c.expect(lift(images.back(), pres) == ch, "lift does not invert gamma");
    }
    auto brute = brute_force_homs(g, h);
    c.expect(keys(images).size() == images.size(), "gamma is not injective");
    c.expect(keys(images) == keys(brute), std::string(hn) + "<-" + gn + ": image differs from brute force");
    counts += std::string(counts.empty() ? "" : ", ") + hn + "<-" + gn + " " + std::to_string(chars.size());
  }
  auto aff = build_presentation(builtin("aff2", f));
  std::size_t direct = 0;
  for (const auto& m : all_matrices(2, 2, f)) direct += verify_character(m, *aff) ? 1 : 0;
  c.expect(direct == 6 && enumerate_characters(aff).size() == 6, "aff2/F_2 character count is not 6");
  return c.done(counts);
}

Outcome automorphism_group() {
  Checker c;
  for (std::uint64_t p : {2, 3})
    for (const char* name : {"aff2", "sl2"}) {
      const std::string tag = std::string(name) + "/F_" + std::to_string(p);
      auto pres = build_presentation(builtin(name, F(p)));
      auto autos = enumerate_automorphism_characters(pres);
      auto eps = Character::counit(pres);
      auto in = [&](const Character& x) { return std::find(autos.begin(), autos.end(), x) != autos.end(); };
      c.expect(in(eps), tag + ": missing counit");
      for (const auto& a : autos) {
        auto inv = convolution_inverse(a);
        c.expect(inv && in(*inv) && convolution(a, *inv) == eps, tag + ": missing inverse");
        for (const auto& b : autos) {
          auto ab = convolution(a, b);
          c.expect(in(ab), tag + ": not closed");
          c.expect(gamma(ab) == gamma(a) * gamma(b), tag + ": gamma is not multiplicative");
        }
      }
    }
  auto aff = builtin("aff2", F(2));
  std::size_t brute = 0;
  for (const auto& m : brute_force_homs(aff, aff)) brute += m.inverse() ? 1 : 0;
  auto count = enumerate_automorphisms(aff).size();
  c.expect(count == 2 && brute == 2, "|Aut(aff2, F_2)| != 2");
  return c.done("|Aut(aff2, F_2)| = " + std::to_string(count));
}

Outcome grading_bijection() {
  Checker c;
  auto z2 = std::make_shared<const FiniteAbelianGroup>(FiniteAbelianGroup::parse("Z2"));
  auto h = builtin("sl2", Q);
  auto pres = build_presentation(h);
  auto grs = diagonal_gradings(h, z2);
  std::size_t brute = 0;
  for (std::uint32_t code = 0; code < 8; ++code) {
    std::vector<std::uint32_t> d{code >> 2 & 1u, code >> 1 & 1u, code & 1u};
    bool ok = true;
    for (std::uint32_t i = 0; i < 3; ++i)
      for (std::uint32_t j = 0; j < 3; ++j)
        for (std::uint32_t s = 0; s < 3; ++s)
          if (!h.structure_constant(i, j, s).is_zero() && d[s] != (d[i] + d[j]) % 2) ok = false;
    brute += ok ? 1 : 0;
  }
  c.expect(grs.size() == 2 && brute == 2, "expected 2 diagonal gradings");
  for (const auto& g : grs) {
    auto theta = grading_to_bihom(g, pres);
    c.expect(verify_bialgebra_hom(theta).ok(), "grading bihom fails verification");
    c.expect(bihom_to_grading(theta) == g, "grading does not round trip");
  }
  auto cls = classify_gradings(build_presentation(builtin("sl2", F(3))), z2);
  c.expect(cls.classes.size() == 2, "expected 2 classes over F_3");
  return c.done(std::to_string(grs.size()) + " gradings, " + std::to_string(cls.classes.size()) + " classes");
}

Outcome action_bijection() {
  Checker c;
  auto z2 = std::make_shared<const FiniteAbelianGroup>(FiniteAbelianGroup::parse("Z2"));
  auto pres = build_presentation(builtin("aff2", F(3)));
  GroupAction phi(pres, z2, {Matrix::identity(2, F(3)), Matrix::from_ints(F(3), {{-1, 0}, {0, 1}})});
  auto theta = action_to_bihom(phi);
  c.expect(theta.codomain->kind() == GroupBialgebraKind::Dual, "codomain is not k[G]*");
  c.expect(verify_bialgebra_hom(theta).ok(), "bihom fails verification in k[Z2]*");
  c.expect(bihom_to_action(theta) == phi, "action does not round trip");
  const auto& b = *theta.codomain;
  c.expect(theta.at(0, 0) == b.add(b.basis(0), b.scale(b.basis(1), F(3).from_int(-1))), "theta(x11) != p0 - p1");
  c.expect(theta.at(1, 1) == b.add(b.basis(0), b.basis(1)), "theta(x22) != p0 + p1");
  return c.done("theta(x11) = p0 - p1, theta(x22) = p0 + p1");
}

Outcome aff2_divergence() {
  Checker c;
  const Field f = F(2);
  auto h = builtin("aff2", f);
  auto pres = build_presentation(h);
  const auto& r = pres->ring();
  const auto& polys = pres->universal();
  c.expect(polys[1].poly == poly(r, "X11 - X11*X22 + X12*X21"), "P(1,1,2) is not X11 - X11*X22 + X12*X21");
  std::vector<Polynomial> variant;
  for (const auto& u : polys) variant.push_back(u.poly);
  variant[1] = poly(r, "X11 - X12*X22 + X12*X21");
  variant[2] = -variant[1];
  auto brute = keys(brute_force_homs(h, h));
  std::vector<Matrix> general, displayed;
  for (const auto& m : all_matrices(2, 2, f)) {
    auto point = flat(m);
    if (std::all_of(polys.begin(), polys.end(), [&](const auto& u) { return u.poly.evaluate(point).is_zero(); }))
      general.push_back(m);
    if (std::all_of(variant.begin(), variant.end(), [&](const auto& p) { return p.evaluate(point).is_zero(); }))
      displayed.push_back(m);
  }
  c.expect(keys(general) == brute, "X11*X22 system differs from brute-force endomorphisms");
  c.expect(keys(displayed) != brute, "X12*X22 system unexpectedly matches");
  return c.done("X11*X22: " + std::to_string(general.size()) + " solutions = brute force " +
                std::to_string(brute.size()) + "; X12*X22: " + std::to_string(displayed.size()));
}

bool reduced(const GroebnerBasis& gb) {
  for (std::size_t a = 0; a < gb.size(); ++a) {
    if (!gb.generators()[a].leading_coefficient().is_one()) return false;
    for (std::size_t b = 0; b < gb.size(); ++b) {
      if (a == b) continue;
      for (const auto& t : gb.generators()[b].terms())
        if (gb.generators()[a].leading_monomial().divides(t.mono)) return false;
    }
  }
  return true;
}

Outcome groebner_properties() {
  Checker c;
  std::mt19937_64 rng(20261018);
  std::size_t cases = 0;
  for (Field f : {F(5), Q})
    for (int trial = 0; trial < 500; ++trial) {
      auto kind = trial % 2 == 0 ? MonomialOrder::Kind::DegRevLex : MonomialOrder::Kind::Lex;
      auto r = make_ring({1, 3, 1}, f, kind);
      std::vector<Polynomial> gens;
      const int k = 1 + static_cast<int>(rng() % 3);
      for (int g = 0; g < k; ++g) gens.push_back(random_poly(r, rng, 3, 2));
      auto gb = buchberger(r, gens);
      for (std::size_t a = 0; a < gb.size(); ++a)
        for (std::size_t b = a + 1; b < gb.size(); ++b)
          c.expect(normal_form(s_polynomial(gb.generators()[a], gb.generators()[b]), gb).is_zero(),
                   "S-polynomial does not reduce to zero");
      for (const auto& g : gens) c.expect(normal_form(g, gb).is_zero(), "generator not in the ideal");
      auto p = random_poly(r, rng, 4, 3);
      auto q = random_poly(r, rng, 4, 3);
      auto a = f.from_int(static_cast<long long>(rng() % 7) - 3);
      auto b = f.from_int(static_cast<long long>(rng() % 7) - 3);
      auto np = normal_form(p, gb);
      auto nq = normal_form(q, gb);
      c.expect(normal_form(np, gb) == np, "normal form is not idempotent");
      c.expect(normal_form(p.scaled(a) + q.scaled(b), gb) == np.scaled(a) + nq.scaled(b), "normal form is not linear");
      c.expect(reduced(gb), "basis is not reduced");
      c.expect(buchberger(r, gb.generators()) == gb, "reduced basis is not a fixed point");
      ++cases;
    }
  return c.done(std::to_string(cases) + " randomized cases over F_5 and Q");
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"sl2 universal polynomials", sl2_universal_polynomials},
      {"Lie symmetry", lie_symmetry},
      {"abelian freeness", abelian_freeness},
      {"A(h, k) quadrics", quadrics_of_k},
      {"symmetric-algebra check", symmetric_algebras},
      {"bialgebra verification", bialgebra_verification},
      {"character-homomorphism bijection", character_bijection},
      {"automorphism group isomorphism", automorphism_group},
      {"grading bijection and classification", grading_bijection},
      {"action bijection", action_bijection},
      {"aff2 divergence record", aff2_divergence},
      {"Groebner property suite", groebner_properties},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = criteria[k].second();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %2zu %s (%.3f s): %s\n", out.pass ? "PASS" : "FAIL", k + 1, criteria[k].first, secs,
                out.detail.c_str());
    if (!out.pass) ++failed;
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
