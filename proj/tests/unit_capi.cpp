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

#include <string>

#include "doctest.h"
#include "json.hpp"
#include "ual/ual.h"

using nlohmann::json;

namespace {

struct Owned {
  char* text = nullptr;
  ~Owned() { ual_string_free(text); }
  json parse() const { return json::parse(text); }
};

struct Algebra {
  ual_algebra* ptr = nullptr;
  ~Algebra() { ual_algebra_free(ptr); }
};

struct Pres {
  ual_presentation* ptr = nullptr;
  ~Pres() { ual_presentation_free(ptr); }
};

std::string data(const char* name) { return std::string(UAL_DATA_DIR) + "/algebras/" + name; }

ual_budget budget(std::uint64_t max = 100'000'000) {
  ual_budget b;
  ual_budget_default(&b);
  b.max_candidates = max;
  return b;
}

}  // namespace

TEST_SUITE("capi") {
  TEST_CASE("builtins and files") {
    Algebra sl2;
    REQUIRE(ual_algebra_builtin("sl2", 0, &sl2.ptr) == UAL_OK);
    CHECK(ual_algebra_dim(sl2.ptr) == 3);
    CHECK(ual_algebra_characteristic(sl2.ptr) == 0);
    Algebra file;
    REQUIRE(ual_algebra_from_file(data("sl2.json").c_str(), 1, &file.ptr) == UAL_OK);
    Owned a, b;
    REQUIRE(ual_algebra_to_json(sl2.ptr, &a.text) == UAL_OK);
    REQUIRE(ual_algebra_to_json(file.ptr, &b.text) == UAL_OK);
    CHECK(a.parse()["brackets"] == b.parse()["brackets"]);
    Algebra reduced;
    REQUIRE(ual_algebra_reduce_mod(file.ptr, 3, &reduced.ptr) == UAL_OK);
    CHECK(ual_algebra_characteristic(reduced.ptr) == 3);
    Algebra missing;
    CHECK(ual_algebra_builtin("nope", 0, &missing.ptr) == UAL_INPUT_ERROR);
    CHECK(std::string(ual_last_error()).size() > 0);
    CHECK(ual_algebra_from_file("/nonexistent.json", 1, &missing.ptr) == UAL_INPUT_ERROR);
    CHECK(ual_algebra_from_json("{", 1, &missing.ptr) == UAL_INPUT_ERROR);
    CHECK(missing.ptr == nullptr);
  }

  TEST_CASE("check reports non-Leibniz algebras as validation errors") {
    const char* bad = R"({"name":"bad","dim":1,"field":{"type":"prime","p":3},
      "brackets":[[1,1,[[1,"1"]]]]})";
    Algebra alg;
    CHECK(ual_algebra_from_json(bad, 1, &alg.ptr) == UAL_VALIDATION_ERROR);
    REQUIRE(ual_algebra_from_json(bad, 0, &alg.ptr) == UAL_OK);
    Owned out;
    CHECK(ual_check(alg.ptr, &out.text) == UAL_VALIDATION_ERROR);
    auto j = out.parse();
    CHECK(j["leibniz"] == false);
    CHECK_FALSE(j["violations"].empty());
    Algebra leib;
    REQUIRE(ual_algebra_from_file(data("leibniz2.json").c_str(), 1, &leib.ptr) == UAL_OK);
    Owned out2;
    CHECK(ual_check(leib.ptr, &out2.text) == UAL_OK);
    CHECK(out2.parse()["lie"] == false);
    CHECK(std::string(ual_last_error()).empty());
  }

  TEST_CASE("presentations and commands") {
    Algebra aff;
    REQUIRE(ual_algebra_builtin("aff2", 0, &aff.ptr) == UAL_OK);
    Pres lex;
    REQUIRE(ual_presentation_build(aff.ptr, nullptr, UAL_ORDER_LEX, &lex.ptr) == UAL_OK);
    CHECK(ual_presentation_groebner_size(lex.ptr) == 2);
    Owned p;
    REQUIRE(ual_presentation_to_json(lex.ptr, &p.text) == UAL_OK);
    CHECK(p.parse()["groebner_basis_text"] == json::array({"X21", "X11*X22 - X11"}));
    Owned u;
    REQUIRE(ual_universal_polynomials(aff.ptr, nullptr, &u.text) == UAL_OK);
    CHECK(u.parse()["count"] == 8);
    Owned bc;
    CHECK(ual_bialgebra_check(lex.ptr, &bc.text) == UAL_OK);
    CHECK(bc.parse()["ok"] == true);
  }

  TEST_CASE("enumeration commands") {
    Algebra aff;
    REQUIRE(ual_algebra_builtin("aff2", 3, &aff.ptr) == UAL_OK);
    Pres pres;
    REQUIRE(ual_presentation_build(aff.ptr, nullptr, UAL_ORDER_DEGREVLEX, &pres.ptr) == UAL_OK);
    auto b = budget();
    Owned autos, gr, cls, act;
    REQUIRE(ual_endomorphisms(aff.ptr, 1, &b, &autos.text) == UAL_OK);
    CHECK(autos.parse()["count"] == 6);
    REQUIRE(ual_gradings(pres.ptr, "Z2", &b, &gr.text) == UAL_OK);
    CHECK(gr.parse()["count"] == 2);
    REQUIRE(ual_classify_gradings(pres.ptr, "Z2", &b, &cls.text) == UAL_OK);
    CHECK(cls.parse()["class_count"] == 2);
    REQUIRE(ual_actions(pres.ptr, "Z2", &b, &act.text) == UAL_OK);
    auto actions = act.parse();
    CHECK(actions["count"] == 4);

    Owned verified;
    auto bihom = actions["actions"][0]["bihom"].dump();
    CHECK(ual_verify_bialgebra_hom(pres.ptr, bihom.c_str(), &verified.text) == UAL_OK);

    Owned none;
    CHECK(ual_gradings(pres.ptr, "Z1", &b, &none.text) == UAL_INPUT_ERROR);
    CHECK(ual_gradings(pres.ptr, nullptr, &b, &none.text) == UAL_INPUT_ERROR);
    auto tiny = budget(10);
    CHECK(ual_characters(pres.ptr, &tiny, &none.text) == UAL_BUDGET_EXCEEDED);
    CHECK(none.text == nullptr);
  }

  TEST_CASE("representations and current algebras") {
    Algebra sl2;
    REQUIRE(ual_algebra_builtin("sl2", 3, &sl2.ptr) == UAL_OK);
    auto b = budget();
    Owned reps;
    REQUIRE(ual_representations(sl2.ptr, 1, &b, &reps.text) == UAL_OK);
    CHECK(reps.parse()["count"] == 1);
    ual_comm_algebra* t = nullptr;
    REQUIRE(ual_comm_algebra_builtin("truncated:2", 3, &t) == UAL_OK);
    Algebra cur;
    CHECK(ual_current_algebra(sl2.ptr, t, &cur.ptr) == UAL_OK);
    CHECK(ual_algebra_dim(cur.ptr) == 6);
    ual_comm_algebra_free(t);
    ual_comm_algebra* q = nullptr;
    CHECK(ual_comm_algebra_builtin("field", 0, &q) == UAL_OK);
    CHECK(ual_current_algebra(sl2.ptr, q, &cur.ptr) == UAL_INPUT_ERROR);
    ual_comm_algebra_free(q);
  }
}
