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

#include <algorithm>
#include <memory>
#include <set>

#include "doctest.h"
#include "support.hpp"
#include "ual/error.hpp"
#include "ual/homspace.hpp"

using namespace ual;
using namespace ual::test;

namespace {

std::set<std::string> keys(const std::vector<Matrix>& ms) {
  std::set<std::string> out;
  for (const auto& x : ms) out.insert(x.to_string());
  return out;
}

}  // namespace

TEST_SUITE("homspace") {
  TEST_CASE("candidate_count saturates") {
    CHECK(candidate_count(2, 10) == 1024);
    CHECK(candidate_count(3, 0) == 1);
    CHECK(candidate_count(7, 200) == UINT64_MAX);
  }

  TEST_CASE("gamma is a bijection onto the brute-force homomorphisms") {
    const char* names[] = {"abelian1", "abelian2", "aff2", "sl2", "heisenberg"};
    for (std::uint64_t p : {2, 3})
      for (const char* hn : names)
        for (const char* gn : names) {
          auto h = builtin(hn, F(p));
          auto g = builtin(gn, F(p));
          if (candidate_count(p, h.dim() * g.dim()) > 20'000) continue;
          CAPTURE(hn);
          CAPTURE(gn);
          CAPTURE(p);
          auto pres = build_presentation(h, g);
          auto chars = enumerate_characters(pres);
          std::vector<Matrix> images;
          for (const auto& c : chars) {
            images.push_back(gamma(c));
            CHECK(is_hom(images.back(), g, h));
            CHECK(lift(images.back(), pres) == c);
          }
          auto brute = brute_force_homs(g, h);
          CHECK(images.size() == brute.size());
          CHECK(keys(images).size() == images.size());
          CHECK(keys(images) == keys(brute));
        }
  }

  TEST_CASE("enumeration is deterministic across thread counts") {
    auto pres = build_presentation(builtin("sl2", F(3)));
    auto one = enumerate_characters(pres, {100'000'000, 1});
    auto many = enumerate_characters(pres, {100'000'000, 8});
    REQUIRE(one.size() == many.size());
    for (std::size_t k = 0; k < one.size(); ++k) CHECK(one[k] == many[k]);
    for (std::size_t k = 1; k < one.size(); ++k)
      CHECK(std::lexicographical_compare(
          one[k - 1].matrix().data().begin(), one[k - 1].matrix().data().end(),
          one[k].matrix().data().begin(), one[k].matrix().data().end(),
          [](const Scalar& a, const Scalar& b) { return a.residue() < b.residue(); }));
  }

  TEST_CASE("budget is a hard error") {
    auto pres = build_presentation(builtin("sl2", F(3)));
    CHECK_THROWS_AS(enumerate_characters(pres, {1000, 1}), BudgetExceeded);
    CHECK_THROWS_AS(enumerate_automorphisms(builtin("sl2", F(3)), {1000, 1}), BudgetExceeded);
    CHECK_THROWS_AS(enumerate_representations(builtin("sl2", F(3)), 2, {1000, 1}), BudgetExceeded);
  }

  TEST_CASE("enumeration needs a prime field") {
    CHECK_THROWS_AS(enumerate_characters(build_presentation(builtin("aff2", Q))), InputError);
    CHECK_THROWS_AS(enumerate_automorphisms(builtin("aff2", Q)), InputError);
  }

  TEST_CASE("automorphism characters form a group under convolution") {
    for (std::uint64_t p : {2, 3})
      for (const char* name : {"aff2", "sl2"}) {
        auto pres = build_presentation(builtin(name, F(p)));
        auto autos = enumerate_automorphism_characters(pres);
        auto eps = Character::counit(pres);
        CHECK(std::count(autos.begin(), autos.end(), eps) == 1);
        auto in = [&](const Character& c) { return std::find(autos.begin(), autos.end(), c) != autos.end(); };
        for (const auto& a : autos) {
          auto inv = convolution_inverse(a);
          REQUIRE(inv.has_value());
          CHECK(in(*inv));
          CHECK(convolution(a, *inv) == eps);
          for (const auto& b : autos) {
            auto ab = convolution(a, b);
            CHECK(in(ab));
            CHECK(gamma(ab) == gamma(a) * gamma(b));
          }
        }
        std::vector<Matrix> maps;
        for (const auto& a : autos) maps.push_back(gamma(a));
        CHECK(keys(maps) == keys(enumerate_automorphisms(builtin(name, F(p)))));
      }
  }

  TEST_CASE("convolution is associative on aff2 over F_3") {
    auto pres = build_presentation(builtin("aff2", F(3)));
    auto chars = enumerate_characters(pres);
    for (const auto& a : chars)
      for (const auto& b : chars)
        for (const auto& c : chars)
          CHECK(convolution(convolution(a, b), c) == convolution(a, convolution(b, c)));
  }

  TEST_CASE("convolution rejects non-square presentations") {
    auto pres = build_presentation(builtin("aff2", F(2)), builtin("abelian1", F(2)));
    auto chars = enumerate_characters(pres);
    CHECK_THROWS_AS(convolution(chars[0], chars[0]), InputError);
    CHECK_THROWS_AS(Character::counit(pres), InputError);
  }

  TEST_CASE("characters over the rationals") {
    auto pres = build_presentation(builtin("aff2", Q));
    Character t(pres, Matrix::from_ints(Q, {{1, 5}, {0, 1}}));
    auto inv = convolution_inverse(t);
    REQUIRE(inv.has_value());
    CHECK(inv->matrix() == Matrix::from_ints(Q, {{1, -5}, {0, 1}}));
    CHECK(convolution(t, *inv) == Character::counit(pres));
  }

  TEST_CASE("algebra-valued points are maps into the current algebra") {
    auto h = builtin("aff2", Q);
    auto pres = build_presentation(h);
    auto a = std::make_shared<const CommutativeAlgebra>(CommutativeAlgebra::truncated_polynomial(2, Q));
    auto current = current_algebra(h, *a);

    // identity plus t times the inner derivation ad(e1)
    AlgebraValuedPoint point{a, 2, 2, {{Q.one(), Q.zero()}, {Q.zero(), Q.one()}, a->zero(), a->scalar(Q.one())}};
    CHECK(verify_point(point, *pres));
    auto f = gamma(point, *pres);
    CHECK(f.rows() == 4);
    CHECK(is_hom(f, h, current));
    auto back = lift(f, *pres, a);
    CHECK(back.entries == point.entries);

    AlgebraValuedPoint bad{a, 2, 2, {a->scalar(Q.one()), a->zero(), {Q.zero(), Q.one()}, a->scalar(Q.one())}};
    CHECK_FALSE(verify_point(bad, *pres));
    CHECK_THROWS_AS(gamma(bad, *pres), ValidationError);

    for (const auto& c : enumerate_characters(build_presentation(builtin("aff2", F(3))))) {
      auto k = std::make_shared<const CommutativeAlgebra>(CommutativeAlgebra::ground_field(F(3)));
      auto p = lift(gamma(c), *c.presentation(), k);
      CHECK(verify_point(p, *c.presentation()));
      CHECK(gamma(p, *c.presentation()) == gamma(c));
    }
  }

  TEST_CASE("algebra-valued points over truncated polynomials match brute force") {
    auto h = builtin("aff2", F(2));
    auto pres = build_presentation(h);
    auto a = std::make_shared<const CommutativeAlgebra>(CommutativeAlgebra::truncated_polynomial(2, F(2)));
    auto current = current_algebra(h, *a);
    std::size_t points = 0;
    for (const auto& f : all_matrices(4, 2, F(2))) {
      bool hom = is_hom(f, h, current);
      auto p = AlgebraValuedPoint{a, 2, 2, {}};
      for (std::size_t s = 0; s < 2; ++s)
        for (std::size_t i = 0; i < 2; ++i) p.entries.push_back({f(s * 2, i), f(s * 2 + 1, i)});
      CHECK(verify_point(p, *pres) == hom);
      if (hom) {
        ++points;
        CHECK(lift(f, *pres, a).entries == p.entries);
      }
    }
    CHECK(points > 6);
  }

  TEST_CASE("representations are homomorphisms into gl(m)") {
    auto g = builtin("aff2", F(2));
    auto gl = builtin("gl2", F(2));
    auto reps = enumerate_representations(g, 2);
    CHECK(reps.size() == brute_force_homs(g, gl).size());
    for (const auto& r : reps) {
      CHECK(is_hom(r.map, g, gl));
      REQUIRE(r.images.size() == 2);
      const auto& x = r.images[0];
      const auto& y = r.images[1];
      CHECK(x * y - y * x == x);
    }
    BracketTable t;
    t[{0, 0}].emplace(1, F(2).one());
    CHECK_THROWS_AS(enumerate_representations(LeibnizAlgebra(2, F(2), t, "leibniz2"), 1), InputError);
    CHECK_THROWS_AS(enumerate_representations(g, 0), InputError);
  }
}
