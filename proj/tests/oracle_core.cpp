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

RingPtr grid22(MonomialOrder::Kind kind = MonomialOrder::Kind::DegRevLex, Field f = Q) {
  return make_ring({2, 2, 1}, f, kind);
}

}  // namespace

TEST_SUITE("core oracles") {
  TEST_CASE("scalar arithmetic examples") {
    CHECK(Q.parse("1/2") + Q.parse("1/3") == Q.parse("5/6"));
    CHECK((F(5).from_int(3).inverse() == F(5).from_int(2)));
    CHECK_THROWS_AS(Q.zero().inverse(), ValidationError);
    CHECK_THROWS_AS(F(5).zero().inverse(), ValidationError);
    CHECK_THROWS_AS(static_cast<void>(Q.one() == F(5).one()), InputError);
    CHECK_THROWS_AS(static_cast<void>(Q.one() + F(5).one()), InputError);
  }

  TEST_CASE("normal form examples") {
    auto r = grid22();
    CHECK(normal_form(poly(r, "X12*X21"), GroebnerBasis(r, {poly(r, "X21")})).is_zero());
    GroebnerBasis gb(r, {poly(r, "X21"), poly(r, "X11*X22 - X11")});
    CHECK(normal_form(poly(r, "X11"), gb) == poly(r, "X11"));
    CHECK(normal_form(poly(r, "X11*X22^2"), gb) == poly(r, "X11"));
  }

  TEST_CASE("buchberger examples") {
    auto r = grid22();
    CHECK(buchberger(r, std::vector<Polynomial>{}).empty());
    auto r3 = make_ring({1, 3, 1}, Q);
    auto single = buchberger(r3, std::vector<Polynomial>{poly(r3, "X11 - X12*X13")});
    REQUIRE(single.size() == 1);
    CHECK(single.generators()[0] == poly(r3, "X12*X13 - X11"));
    auto r3lex = make_ring({1, 3, 1}, Q, MonomialOrder::Kind::Lex);
    auto single_lex = buchberger(r3lex, std::vector<Polynomial>{poly(r3lex, "X11 - X12*X13")});
    REQUIRE(single_lex.size() == 1);
    CHECK(single_lex.generators()[0] == poly(r3lex, "X11 - X12*X13"));
    auto lex = grid22(MonomialOrder::Kind::Lex);
    auto gb = buchberger(lex, std::vector<Polynomial>{poly(lex, "X21"),
                                                      poly(lex, "X11 - X11*X22 + X12*X21")});
    REQUIRE(gb.size() == 2);
    CHECK(gb.generators()[0] == poly(lex, "X21"));
    CHECK(gb.generators()[1] == poly(lex, "X11*X22 - X11"));
  }

  TEST_CASE("reduce in tensor square examples") {
    auto r = grid22();
    std::vector<Polynomial> j{poly(r, "X21")};
    TensorSquareReducer red(r, j);
    CHECK(red.reduce(poly(red.ring(), "X21")).is_zero());
    CHECK(red.reduce(poly(red.ring(), "Y21*X12")).is_zero());
    CHECK(red.reduce(Polynomial(red.ring())).is_zero());
    CHECK(reduce_in_tensor_square(embed_in_copy(poly(r, "X21"), red.ring(), 0), j).is_zero());

    auto sl2 = build_presentation(builtin("sl2", Q));
    auto c = comultiplication(*sl2);
    for (const auto& p : sl2->relations())
      CHECK(sl2->tensor_square().reduce(apply_delta(p, c)).is_zero());
  }
}
