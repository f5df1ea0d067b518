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

#include "ual/ual.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <memory>
#include <new>
#include <sstream>
#include <string>

#include "ual/error.hpp"
#include "ual/gradcoact.hpp"
#include "ual/homspace.hpp"
#include "ual/leibniz.hpp"
#include "ual/serialize.hpp"
#include "ual/universal.hpp"

struct ual_algebra {
  ual::LeibnizAlgebra alg;
};

struct ual_comm_algebra {
  std::shared_ptr<const ual::CommutativeAlgebra> alg;
};

struct ual_presentation {
  ual::PresentationPtr pres;
};

namespace {

using ual::Json;

thread_local std::string last_error;

ual_status status_of(ual::ErrorKind k) {
  switch (k) {
    case ual::ErrorKind::Validation:
      return UAL_VALIDATION_ERROR;
    case ual::ErrorKind::Input:
      return UAL_INPUT_ERROR;
    case ual::ErrorKind::Budget:
      return UAL_BUDGET_EXCEEDED;
  }
  return UAL_INTERNAL_ERROR;
}

template <class F>
ual_status guard(F&& f) {
  last_error.clear();
  try {
    return f();
  } catch (const ual::Error& e) {
    last_error = e.what();
    return status_of(e.kind());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
  } catch (const std::exception& e) {
    last_error = e.what();
  } catch (...) {
    last_error = "unknown error";
  }
  return UAL_INTERNAL_ERROR;
}

void require(bool cond, const char* msg) {
  if (!cond) throw ual::InputError(msg);
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

ual_status emit(const Json& payload, char** out, ual_status status = UAL_OK) {
  *out = dup(payload.dump());
  return status;
}

ual::Field field_for(std::uint64_t prime) {
  return prime == 0 ? ual::Field::rational() : ual::Field::prime(prime);
}

std::string read_file(const char* path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ual::InputError(std::string("cannot read '") + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw ual::InputError(std::string("malformed JSON: ") + e.what());
  }
}

ual::LeibnizAlgebra load_algebra(const Json& j, int check) {
  auto alg = ual::algebra_from_json(j);
  if (check) {
    auto report = ual::check_leibniz(alg);
    if (!report.holds) {
      const auto& v = report.violations.front();
      throw ual::ValidationError("not a Leibniz algebra: identity fails at (" +
                                 std::to_string(v[0] + 1) + ", " + std::to_string(v[1] + 1) +
                                 ", " + std::to_string(v[2] + 1) + ")");
    }
  }
  return alg;
}

ual::EnumerationBudget budget_of(const ual_budget* b) {
  ual::EnumerationBudget out;
  if (b) {
    out.max_candidates = b->max_candidates;
    out.threads = b->threads;
  }
  return out;
}

ual::GroupPtr group_of(const char* spec) {
  require(spec != nullptr, "group is required");
  return std::make_shared<ual::FiniteAbelianGroup>(ual::FiniteAbelianGroup::parse(spec));
}

Json grading_entry(const ual::Grading& gr, const ual::PresentationPtr& pres) {
  auto theta = ual::grading_to_bihom(gr, pres);
  return {{"grading", ual::to_json(gr)},
          {"bihom", ual::to_json(theta)},
          {"verified", ual::verify_bialgebra_hom(theta).ok()}};
}

}  // namespace

extern "C" {

const char* ual_version(void) { return "0.1.0"; }

const char* ual_last_error(void) { return last_error.c_str(); }

void ual_string_free(char* s) { std::free(s); }

void ual_budget_default(ual_budget* budget) {
  if (!budget) return;
  ual::EnumerationBudget d;
  budget->max_candidates = d.max_candidates;
  budget->threads = d.threads;
}

ual_status ual_algebra_from_json(const char* json, int check, ual_algebra** out) {
  return guard([&] {
    require(json && out, "null argument");
    *out = new ual_algebra{load_algebra(parse(json), check)};
    return UAL_OK;
  });
}

ual_status ual_algebra_from_file(const char* path, int check, ual_algebra** out) {
  return guard([&] {
    require(path && out, "null argument");
    *out = new ual_algebra{load_algebra(parse(read_file(path)), check)};
    return UAL_OK;
  });
}

ual_status ual_algebra_builtin(const char* name, uint64_t prime, ual_algebra** out) {
  return guard([&] {
    require(name && out, "null argument");
    *out = new ual_algebra{ual::builtin(name, field_for(prime))};
    return UAL_OK;
  });
}

ual_status ual_algebra_reduce_mod(const ual_algebra* alg, uint64_t prime, ual_algebra** out) {
  return guard([&] {
    require(alg && out, "null argument");
    *out = new ual_algebra{alg->alg.over_prime(prime)};
    return UAL_OK;
  });
}

size_t ual_algebra_dim(const ual_algebra* alg) { return alg ? alg->alg.dim() : 0; }

uint64_t ual_algebra_characteristic(const ual_algebra* alg) {
  return alg && alg->alg.field().is_prime() ? alg->alg.field().modulus() : 0;
}

ual_status ual_algebra_to_json(const ual_algebra* alg, char** out) {
  return guard([&] {
    require(alg && out, "null argument");
    return emit(ual::to_json(alg->alg), out);
  });
}

void ual_algebra_free(ual_algebra* alg) { delete alg; }

ual_status ual_comm_algebra_builtin(const char* name, uint64_t prime, ual_comm_algebra** out) {
  return guard([&] {
    require(name && out, "null argument");
    const std::string n = name;
    const auto f = field_for(prime);
    if (n == "field") {
      *out = new ual_comm_algebra{
          std::make_shared<ual::CommutativeAlgebra>(ual::CommutativeAlgebra::ground_field(f))};
      return UAL_OK;
    }
    const std::string prefix = "truncated:";
    if (n.rfind(prefix, 0) == 0) {
      std::size_t k = 0;
      try {
        std::size_t used = 0;
        k = std::stoul(n.substr(prefix.size()), &used);
        require(used == n.size() - prefix.size(), "malformed truncated:K");
      } catch (const std::logic_error&) {
        throw ual::InputError("malformed truncated:K");
      }
      require(k >= 1, "truncated:K needs K >= 1");
      *out = new ual_comm_algebra{std::make_shared<ual::CommutativeAlgebra>(
          ual::CommutativeAlgebra::truncated_polynomial(k, f))};
      return UAL_OK;
    }
    throw ual::InputError("unknown commutative algebra '" + n + "'; expected field or truncated:K");
  });
}

ual_status ual_comm_algebra_from_file(const char* path, ual_comm_algebra** out) {
  return guard([&] {
    require(path && out, "null argument");
    *out = new ual_comm_algebra{std::make_shared<ual::CommutativeAlgebra>(
        ual::commutative_algebra_from_json(parse(read_file(path))))};
    return UAL_OK;
  });
}

void ual_comm_algebra_free(ual_comm_algebra* alg) { delete alg; }

ual_status ual_presentation_build(const ual_algebra* h, const ual_algebra* g, ual_order order,
                                  ual_presentation** out) {
  return guard([&] {
    require(h && out, "null argument");
    const auto kind =
        order == UAL_ORDER_LEX ? ual::MonomialOrder::Kind::Lex : ual::MonomialOrder::Kind::DegRevLex;
    *out = new ual_presentation{ual::build_presentation(h->alg, g ? g->alg : h->alg, kind)};
    return UAL_OK;
  });
}

size_t ual_presentation_groebner_size(const ual_presentation* pres) {
  return pres ? pres->pres->basis().size() : 0;
}

ual_status ual_presentation_to_json(const ual_presentation* pres, char** out) {
  return guard([&] {
    require(pres && out, "null argument");
    return emit(ual::to_json(*pres->pres), out);
  });
}

void ual_presentation_free(ual_presentation* pres) { delete pres; }

ual_status ual_check(const ual_algebra* alg, char** out) {
  return guard([&] {
    require(alg && out, "null argument");
    auto report = ual::check_leibniz(alg->alg);
    Json violations = Json::array();
    for (const auto& v : report.violations)
      violations.push_back(Json::array({v[0] + 1, v[1] + 1, v[2] + 1}));
    Json payload = {{"name", alg->alg.name()},
                    {"dim", alg->alg.dim()},
                    {"field", ual::to_json(alg->alg.field())},
                    {"leibniz", report.holds},
                    {"lie", ual::check_lie(alg->alg)},
                    {"violations", violations}};
    if (!report.holds) last_error = "the Leibniz identity fails";
    return emit(payload, out, report.holds ? UAL_OK : UAL_VALIDATION_ERROR);
  });
}

ual_status ual_universal_polynomials(const ual_algebra* h, const ual_algebra* g, char** out) {
  return guard([&] {
    require(h && out, "null argument");
    const auto& gg = g ? g->alg : h->alg;
    auto ring = ual::universal_ring(h->alg, gg);
    auto polys = ual::universal_polynomials(h->alg, gg, ring);
    Json all = Json::array();
    Json distinct = Json::array();
    std::vector<ual::Polynomial> seen;
    std::size_t nonzero = 0;
    for (const auto& u : polys) {
      Json idx = Json::array({u.a + 1, u.i + 1, u.j + 1});
      all.push_back({{"index", idx},
                     {"zero", u.poly.is_zero()},
                     {"terms", ual::to_json(u.poly)},
                     {"text", u.poly.to_string()}});
      if (u.poly.is_zero()) continue;
      ++nonzero;
      bool dup_found = false;
      for (const auto& p : seen)
        if (p == u.poly || p == -u.poly) {
          dup_found = true;
          break;
        }
      if (dup_found) continue;
      seen.push_back(u.poly);
      distinct.push_back({{"index", idx}, {"terms", ual::to_json(u.poly)}, {"text", u.poly.to_string()}});
    }
    Json payload = {{"dims", Json::array({h->alg.dim(), gg.dim()})},
                    {"field", ual::to_json(h->alg.field())},
                    {"count", polys.size()},
                    {"nonzero_count", nonzero},
                    {"distinct_count", distinct.size()},
                    {"polynomials", distinct},
                    {"all", all}};
    return emit(payload, out);
  });
}

ual_status ual_bialgebra_check(const ual_presentation* pres, char** out) {
  return guard([&] {
    require(pres && out, "null argument");
    const auto& p = *pres->pres;
    require(p.is_square(), "bialgebra-check needs A(h) = A(h, h)");
    auto wd = ual::verify_comultiplication(p);
    Json failing = Json::array();
    for (const auto& e : wd.entries)
      if (!e.delta_vanishes || !e.counit_vanishes)
        failing.push_back(Json::array({e.a + 1, e.i + 1, e.j + 1}));
    auto eta_cert = ual::verify_eta_hom(p);
    auto comodule = ual::verify_comodule(p);
    const bool projection = ual::verify_projection_bialgebra_map(p);
    const bool ok = wd.ok && eta_cert.ok && comodule.ok() && projection;
    Json payload = {
        {"dims", Json::array({p.n(), p.m()})},
        {"field", ual::to_json(p.field())},
        {"groebner_size", p.basis().size()},
        {"doubled_groebner_size", p.tensor_square().basis().size()},
        {"well_defined", wd.ok},
        {"relations_checked", wd.entries.size()},
        {"failing_relations", failing},
        {"eta_homomorphism", eta_cert.ok},
        {"coaction_coassociative", comodule.coaction_coassociative},
        {"coaction_counital", comodule.coaction_counital},
        {"coassociative", comodule.coassociative},
        {"counit_left", comodule.counit_left},
        {"counit_right", comodule.counit_right},
        {"projection_bialgebra_map", projection},
        {"ok", ok}};
    if (!ok) last_error = "bialgebra verification failed";
    return emit(payload, out, ok ? UAL_OK : UAL_VALIDATION_ERROR);
  });
}

ual_status ual_characters(const ual_presentation* pres, const ual_budget* budget, char** out) {
  return guard([&] {
    require(pres && out, "null argument");
    auto chars = ual::enumerate_characters(pres->pres, budget_of(budget));
    Json payload = ual::characters_to_json(chars);
    payload["dims"] = Json::array({pres->pres->n(), pres->pres->m()});
    payload["field"] = ual::to_json(pres->pres->field());
    return emit(payload, out);
  });
}

ual_status ual_endomorphisms(const ual_algebra* alg, int automorphisms_only,
                             const ual_budget* budget, char** out) {
  return guard([&] {
    require(alg && out, "null argument");
    auto maps = automorphisms_only ? ual::enumerate_automorphisms(alg->alg, budget_of(budget))
                                   : ual::enumerate_endomorphisms(alg->alg, budget_of(budget));
    Json payload = ual::matrices_to_json(maps);
    payload["kind"] = automorphisms_only ? "automorphisms" : "endomorphisms";
    payload["field"] = ual::to_json(alg->alg.field());
    return emit(payload, out);
  });
}

ual_status ual_representations(const ual_algebra* g, size_t dim, const ual_budget* budget,
                               char** out) {
  return guard([&] {
    require(g && out, "null argument");
    require(dim >= 1, "representation dimension must be positive");
    auto reps = ual::enumerate_representations(g->alg, dim, budget_of(budget));
    Json elems = Json::array();
    for (const auto& r : reps) {
      Json images = Json::array();
      for (const auto& m : r.images) images.push_back(ual::to_json(m));
      elems.push_back({{"map", ual::to_json(r.map)}, {"images", images}});
    }
    Json payload = {{"count", reps.size()},
                    {"dim", dim},
                    {"field", ual::to_json(g->alg.field())},
                    {"elements", elems}};
    return emit(payload, out);
  });
}

ual_status ual_gradings(const ual_presentation* pres, const char* group, const ual_budget* budget,
                        char** out) {
  return guard([&] {
    require(pres && out, "null argument");
    require(pres->pres->is_square(), "gradings need A(h) = A(h, h)");
    auto G = group_of(group);
    auto grs = ual::diagonal_gradings(pres->pres->h(), G, budget_of(budget));
    Json list = Json::array();
    for (const auto& gr : grs) list.push_back(grading_entry(gr, pres->pres));
    Json payload = {{"group", G->to_string()},
                    {"field", ual::to_json(pres->pres->field())},
                    {"count", grs.size()},
                    {"gradings", list}};
    return emit(payload, out);
  });
}

ual_status ual_classify_gradings(const ual_presentation* pres, const char* group,
                                 const ual_budget* budget, char** out) {
  return guard([&] {
    require(pres && out, "null argument");
    auto G = group_of(group);
    auto result = ual::classify_gradings(pres->pres, G, budget_of(budget));
    Json classes = Json::array();
    for (const auto& c : result.classes) {
      auto rep = ual::bihom_to_grading(c.members.front());
      Json members = Json::array();
      for (const auto& m : c.members) members.push_back(ual::to_json(m));
      classes.push_back({{"size", c.members.size()},
                         {"component_dims", c.component_dims},
                         {"representative", {{"grading", ual::to_json(rep)},
                                             {"bihom", ual::to_json(c.members.front())}}},
                         {"members", members}});
    }
    Json payload = {{"group", G->to_string()},
                    {"field", ual::to_json(pres->pres->field())},
                    {"diagonal_count", result.diagonal_count},
                    {"automorphism_count", result.automorphism_count},
                    {"total", result.total},
                    {"class_count", result.classes.size()},
                    {"classes", classes},
                    {"scope", result.scope}};
    return emit(payload, out);
  });
}

ual_status ual_actions(const ual_presentation* pres, const char* group, const ual_budget* budget,
                       char** out) {
  return guard([&] {
    require(pres && out, "null argument");
    auto G = group_of(group);
    auto actions = ual::enumerate_actions(pres->pres, G, budget_of(budget));
    Json list = Json::array();
    for (const auto& a : actions) {
      auto theta = ual::action_to_bihom(a);
      list.push_back({{"action", ual::to_json(a)},
                      {"bihom", ual::to_json(theta)},
                      {"verified", ual::verify_bialgebra_hom(theta).ok()}});
    }
    Json payload = {{"group", G->to_string()},
                    {"field", ual::to_json(pres->pres->field())},
                    {"count", actions.size()},
                    {"actions", list}};
    return emit(payload, out);
  });
}

ual_status ual_verify_bialgebra_hom(const ual_presentation* pres, const char* json, char** out) {
  return guard([&] {
    require(pres && json && out, "null argument");
    auto theta = ual::bihom_from_json(parse(json), pres->pres);
    auto check = ual::verify_bialgebra_hom(theta);
    Json payload = {{"algebra_map", check.algebra_map},
                    {"coalgebra_map", check.coalgebra_map},
                    {"counit_map", check.counit_map},
                    {"failures", check.failures},
                    {"ok", check.ok()}};
    if (!check.ok()) last_error = "not a bialgebra homomorphism";
    return emit(payload, out, check.ok() ? UAL_OK : UAL_VALIDATION_ERROR);
  });
}

ual_status ual_current_algebra(const ual_algebra* h, const ual_comm_algebra* a,
                               ual_algebra** out) {
  return guard([&] {
    require(h && a && out, "null argument");
    *out = new ual_algebra{ual::current_algebra(h->alg, *a->alg)};
    return UAL_OK;
  });
}

}  // extern "C"
