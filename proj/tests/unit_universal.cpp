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

#include "doctest.h"
#include "support.hpp"
#include "ual/error.hpp"
#include "ual/universal.hpp"

using namespace ual;
using namespace ual::test;

namespace {

LeibnizAlgebra leibniz2(Field f) {
  BracketTable t;
  t[{0, 0}].emplace(1, f.one());
  return LeibnizAlgebra(2, f, t, "leibniz2");
}

std::vector<LeibnizAlgebra> samples(Field f) {
  std::vector<LeibnizAlgebra> out;
  for (const char* name : {"abelian1", "abelian2", "aff2", "sl2", "heisenberg"})
    out.push_back(builtin(name, f));
  out.push_back(leibniz2(f));
  return out;
}

}  // namespace

TEST_SUITE("universal") {
  TEST_CASE("Lie algebras have antisymmetric universal polynomials") {
    for (const char* name : {"aff2", "sl2", "gl2"}) {
      auto pres = build_presentation(builtin(name, Q));
      const auto m = pres->m();
      CHECK(pres->universal().size() == pres->n() * m * m);
      for (const auto& u : pres->universal()) {
        const auto& mate = pres->universal()[(u.a * m + u.j) * m + u.i].poly;
        if (u.i == u.j) CHECK(u.poly.is_zero());
        CHECK((u.poly + mate).is_zero());
      }
    }
  }

  TEST_CASE("every universal polynomial vanishes in the quotient") {
    for (Field f : {Q, F(2), F(3)})
      for (const auto& h : samples(f)) {
        auto pres = build_presentation(h);
        for (const auto& u : pres->universal()) CHECK(normal_form(u.poly, pres->basis()).is_zero());
      }
  }

  TEST_CASE("lex and degrevlex presentations define the same ideal") {
    for (const char* name : {"aff2", "sl2", "heisenberg"}) {
      auto d = build_presentation(builtin(name, Q));
      auto l = build_presentation(builtin(name, Q), MonomialOrder::Kind::Lex);
      for (const auto& g : d->basis().generators())
        CHECK(normal_form(g.in_ring(l->ring()), l->basis()).is_zero());
      for (const auto& g : l->basis().generators())
        CHECK(normal_form(g.in_ring(d->ring()), d->basis()).is_zero());
    }
  }

  TEST_CASE("bialgebra verification on all samples") {
    for (Field f : {Q, F(2), F(3)})
      for (const auto& h : samples(f)) {
        auto pres = build_presentation(h);
        CAPTURE(h.name());
        CHECK(verify_eta_hom(*pres).ok);
        CHECK(verify_comultiplication(*pres).ok);
        CHECK(verify_comodule(*pres).ok());
        CHECK(verify_projection_bialgebra_map(*pres));
      }
  }

  TEST_CASE("gl2 bialgebra verification") {
    auto pres = build_presentation(builtin("gl2", Q));
    CHECK(verify_eta_hom(*pres).ok);
    CHECK(verify_comultiplication(*pres).ok);
    CHECK(verify_comodule(*pres).ok());
  }

  TEST_CASE("non-square presentations carry no coalgebra structure") {
    auto pres = build_presentation(builtin("aff2", Q), builtin("sl2", Q));
    CHECK_FALSE(pres->is_square());
    CHECK(pres->universal().size() == 2 * 9);
    CHECK(verify_eta_hom(*pres).ok);
    CHECK_THROWS_AS(comultiplication(*pres), InputError);
    CHECK_THROWS_AS(verify_comodule(*pres), InputError);
  }

  TEST_CASE("field mismatch is rejected") {
    CHECK_THROWS_AS(build_presentation(builtin("aff2", Q), builtin("aff2", F(3))), InputError);
  }

  TEST_CASE("the doubled-ring basis is built once") {
    auto pres = build_presentation(builtin("sl2", Q));
    const auto* first = &pres->tensor_square();
    CHECK(first == &pres->tensor_square());
    CHECK(first->ring()->grid().copies == 2);
  }

  TEST_CASE("a wrong relation is caught by the well-definedness check") {
    // Delta(X11 - X22) modulo (X11 - X22)
    auto r = make_ring({2, 2, 1}, Q);
    std::vector<Polynomial> j{poly(r, "X11 - X22")};
    TensorSquareReducer red(r, j);
    auto t = red.ring();
    auto delta = poly(t, "X11*Y11 + X12*Y21 - X21*Y12 - X22*Y22");
    CHECK_FALSE(red.reduce(delta).is_zero());
  }
}
