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

#include "cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "ual/ual.h"

namespace ual::cli {

namespace {

using nlohmann::json;

struct Failure {
  Status status;
  std::string message;
};

Status status_of(ual_status s) {
  switch (s) {
    case UAL_OK:
      return Status::Ok;
    case UAL_VALIDATION_ERROR:
      return Status::ValidationError;
    case UAL_BUDGET_EXCEEDED:
      return Status::BudgetExceeded;
    default:
      return Status::InputError;
  }
}

void ensure(ual_status s) {
  if (s == UAL_OK) return;
  std::string msg = ual_last_error();
  if (s == UAL_INTERNAL_ERROR) msg = "internal error: " + msg;
  throw Failure{status_of(s), msg};
}

template <class T, void (*Free)(T*)>
struct Handle {
  T* ptr = nullptr;
  Handle() = default;
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  ~Handle() { Free(ptr); }
  T** out() { return &ptr; }
  T* get() const { return ptr; }
};

using Algebra = Handle<ual_algebra, ual_algebra_free>;
using CommAlgebra = Handle<ual_comm_algebra, ual_comm_algebra_free>;
using Presentation = Handle<ual_presentation, ual_presentation_free>;

/// Runs a payload-producing call; the payload is kept on validation failures.
template <class F>
ual_status call_json(CommandResult& result, F&& f) {
  char* text = nullptr;
  const ual_status s = f(&text);
  if (text) {
    result.payload = json::parse(text);
    ual_string_free(text);
  }
  if (s != UAL_OK && s != UAL_VALIDATION_ERROR) ensure(s);
  if (s == UAL_VALIDATION_ERROR) {
    result.status = Status::ValidationError;
    result.diagnostics.push_back(ual_last_error());
  }
  return s;
}

constexpr const char* kBuiltin = "builtin:";

std::uint64_t parse_u64(const std::string& text, const char* what) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw Failure{Status::InputError, std::string("invalid ") + what + " '" + text + "'"};
  return v;
}

struct Options {
  std::string algebra;
  std::string source;
  std::string second;
  std::string group;
  std::string order = "degrevlex";
  std::string out;
  std::uint64_t prime = 0;
  std::size_t dim = 0;
  bool endomorphisms = false;
};

void load(const std::string& spec, std::uint64_t prime, int check, Algebra& alg) {
  if (spec.rfind(kBuiltin, 0) == 0) {
    ensure(ual_algebra_builtin(spec.c_str() + std::char_traits<char>::length(kBuiltin), prime,
                               alg.out()));
    return;
  }
  ensure(ual_algebra_from_file(spec.c_str(), check, alg.out()));
  if (prime == 0) return;
  const auto ch = ual_algebra_characteristic(alg.get());
  if (ch == prime) return;
  if (ch != 0)
    throw Failure{Status::InputError, "algebra is over F_" + std::to_string(ch) +
                                          ", not F_" + std::to_string(prime)};
  Algebra reduced;
  ensure(ual_algebra_reduce_mod(alg.get(), prime, reduced.out()));
  std::swap(alg.ptr, reduced.ptr);
}

void presentation(const Options& o, const Algebra& h, const Algebra* g, Presentation& pres) {
  ual_order order = UAL_ORDER_DEGREVLEX;
  if (o.order == "lex") {
    order = UAL_ORDER_LEX;
  } else if (o.order != "degrevlex") {
    throw Failure{Status::InputError, "unknown monomial order '" + o.order + "'"};
  }
  ensure(ual_presentation_build(h.get(), g ? g->get() : nullptr, order, pres.out()));
}

void require_prime_field(const Algebra& alg, const char* command) {
  if (ual_algebra_characteristic(alg.get()) == 0)
    throw Failure{Status::InputError,
                  std::string(command) + " enumerates over F_p; pass --prime or a prime-field algebra"};
}

ual_budget budget_from_env() {
  ual_budget b;
  ual_budget_default(&b);
  if (const char* env = std::getenv("UAL_BUDGET"); env && *env) {
    b.max_candidates = parse_u64(env, "UAL_BUDGET");
  }
  return b;
}

void add_algebra_arg(CLI::App* sub, Options& o) {
  sub->add_option("algebra", o.algebra,
                  "algebra JSON file, or builtin:NAME (aff2, sl2, heisenberg, abelianN, glN)")
      ->required();
}

void add_prime(CLI::App* sub, Options& o, const char* text) {
  sub->add_option("--prime", o.prime, text)->check(CLI::PositiveNumber);
}

}  // namespace

std::string CommandResult::status_name() const {
  switch (status) {
    case Status::Ok:
      return "ok";
    case Status::ValidationError:
      return "validation_error";
    case Status::InputError:
      return "input_error";
    case Status::BudgetExceeded:
      return "budget_exceeded";
  }
  return "input_error";
}

nlohmann::json CommandResult::envelope() const {
  return {{"status", status_name()}, {"payload", payload}, {"diagnostics", diagnostics}};
}

std::string CommandResult::render() const { return envelope().dump(2) + "\n"; }

CommandResult run(const std::vector<std::string>& args) {
  CommandResult result;
  Options o;
  CLI::App app{"ual: universal algebras of Leibniz algebras", "ual"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "print help for every subcommand");
  app.add_option("--out", o.out, "write the JSON result to this file instead of stdout");

  auto* check = app.add_subcommand(
      "check", "check the Leibniz identity [x,[y,z]] = [[x,y],z] - [[x,z],y] and Lie antisymmetry");
  add_algebra_arg(check, o);
  add_prime(check, o, "reduce the structure constants modulo this prime");

  auto* upoly = app.add_subcommand(
      "upoly", "universal polynomials P_(a,i,j) of the universal algebra A(h, g); h = ALGEBRA");
  add_algebra_arg(upoly, o);
  upoly->add_option("--source", o.source, "the algebra g (default: g = h)");
  add_prime(upoly, o, "reduce the structure constants modulo this prime");

  auto* present = app.add_subcommand(
      "present", "quotient presentation k[X_si]/J of A(h, g) by a reduced Groebner basis of J");
  add_algebra_arg(present, o);
  present->add_option("--source", o.source, "the algebra g (default: g = h)");
  present->add_option("--order", o.order, "monomial order")
      ->check(CLI::IsMember({"degrevlex", "lex"}));
  add_prime(present, o, "reduce the structure constants modulo this prime");

  auto* bialg = app.add_subcommand(
      "bialgebra-check",
      "bialgebra structure of A(h): Delta(x_ij) = sum_s x_is (x) x_sj and eps(x_ij) = delta_ij "
      "are well defined, coassociative and counital, and h is an A(h)-comodule");
  add_algebra_arg(bialg, o);
  add_prime(bialg, o, "reduce the structure constants modulo this prime");

  auto* chars = app.add_subcommand(
      "chars", "characters A(h, g) -> k over F_p, in bijection with Leibniz maps g -> h");
  add_algebra_arg(chars, o);
  chars->add_option("--source", o.source, "the algebra g (default: g = h)");
  add_prime(chars, o, "the prime p");

  auto* autos = app.add_subcommand(
      "autos", "automorphism group Aut(h) over F_p as the invertible characters of A(h)");
  add_algebra_arg(autos, o);
  add_prime(autos, o, "the prime p");
  autos->add_flag("--endomorphisms", o.endomorphisms, "list all endomorphisms instead");

  auto* reps = app.add_subcommand(
      "reps", "representations g -> gl(m) over F_p as characters of A(gl(m), g)");
  add_algebra_arg(reps, o);
  reps->add_option("--dim", o.dim, "the dimension m")->required()->check(CLI::PositiveNumber);
  add_prime(reps, o, "the prime p");

  auto* gradings = app.add_subcommand(
      "gradings",
      "diagonal G-gradings of h and the matching bialgebra maps A(h) -> k[G]");
  add_algebra_arg(gradings, o);
  gradings->add_option("--group", o.group, "finite abelian group, e.g. Z2 or Z2xZ3")->required();
  add_prime(gradings, o, "reduce the structure constants modulo this prime");

  auto* classify = app.add_subcommand(
      "classify-gradings",
      "isomorphism classes of G-gradings of h under conjugation by Aut(h) over F_p");
  add_algebra_arg(classify, o);
  classify->add_option("--group", o.group, "finite abelian group, e.g. Z2 or Z2xZ3")->required();
  add_prime(classify, o, "the prime p");

  auto* actions = app.add_subcommand(
      "actions",
      "actions G -> Aut(h) over F_p and the matching bialgebra maps A(h) -> k[G]*");
  add_algebra_arg(actions, o);
  actions->add_option("--group", o.group, "finite abelian group, e.g. Z2 or Z2xZ3")->required();
  add_prime(actions, o, "the prime p");

  auto* current = app.add_subcommand(
      "current", "current algebra h (x) A with [x (x) a, y (x) b] = [x, y] (x) ab");
  add_algebra_arg(current, o);
  current->add_option("commutative", o.second,
                      "commutative algebra JSON file, builtin:field or builtin:truncated:K")
      ->required();
  add_prime(current, o, "reduce the structure constants modulo this prime");

  for (auto* sub : app.get_subcommands({}))
    sub->add_option("--out", o.out, "write the JSON result to this file instead of stdout");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    std::ostringstream out, err;
    app.exit(e, out, err);
    result.help = out.str();
    return result;
  } catch (const CLI::CallForAllHelp& e) {
    std::ostringstream out, err;
    app.exit(e, out, err);
    result.help = out.str();
    return result;
  } catch (const CLI::ParseError& e) {
    result.status = Status::InputError;
    if (!args.empty() && !args[0].empty() && args[0][0] != '-' &&
        app.get_subcommands([&](const CLI::App* sub) { return sub->get_name() == args[0]; })
            .empty()) {
      result.diagnostics.push_back("unknown subcommand '" + args[0] + "'");
    } else {
      result.diagnostics.push_back(e.what());
    }
    return result;
  }

  try {
    const ual_budget budget = budget_from_env();
    Algebra h;
    if (check->parsed()) {
      load(o.algebra, o.prime, 0, h);
      call_json(result, [&](char** t) { return ual_check(h.get(), t); });
    } else {
      load(o.algebra, o.prime, 1, h);
      Algebra g;
      if (!o.source.empty()) load(o.source, o.prime, 1, g);
      const Algebra* gp = o.source.empty() ? nullptr : &g;
      if (upoly->parsed()) {
        call_json(result, [&](char** t) { return ual_universal_polynomials(h.get(), gp ? g.get() : nullptr, t); });
      } else if (present->parsed()) {
        Presentation pres;
        presentation(o, h, gp, pres);
        call_json(result, [&](char** t) { return ual_presentation_to_json(pres.get(), t); });
      } else if (bialg->parsed()) {
        Presentation pres;
        presentation(o, h, nullptr, pres);
        call_json(result, [&](char** t) { return ual_bialgebra_check(pres.get(), t); });
      } else if (chars->parsed()) {
        require_prime_field(h, "chars");
        Presentation pres;
        presentation(o, h, gp, pres);
        call_json(result, [&](char** t) { return ual_characters(pres.get(), &budget, t); });
      } else if (autos->parsed()) {
        require_prime_field(h, "autos");
        call_json(result, [&](char** t) { return ual_endomorphisms(h.get(), o.endomorphisms ? 0 : 1, &budget, t); });
      } else if (reps->parsed()) {
        require_prime_field(h, "reps");
        call_json(result, [&](char** t) { return ual_representations(h.get(), o.dim, &budget, t); });
      } else if (gradings->parsed()) {
        Presentation pres;
        presentation(o, h, nullptr, pres);
        call_json(result, [&](char** t) { return ual_gradings(pres.get(), o.group.c_str(), &budget, t); });
      } else if (classify->parsed()) {
        require_prime_field(h, "classify-gradings");
        Presentation pres;
        presentation(o, h, nullptr, pres);
        call_json(result, [&](char** t) { return ual_classify_gradings(pres.get(), o.group.c_str(), &budget, t); });
      } else if (actions->parsed()) {
        require_prime_field(h, "actions");
        Presentation pres;
        presentation(o, h, nullptr, pres);
        call_json(result, [&](char** t) { return ual_actions(pres.get(), o.group.c_str(), &budget, t); });
      } else if (current->parsed()) {
        CommAlgebra a;
        if (o.second.rfind(kBuiltin, 0) == 0) {
          ensure(ual_comm_algebra_builtin(o.second.c_str() + std::char_traits<char>::length(kBuiltin),
                                          ual_algebra_characteristic(h.get()), a.out()));
        } else {
          ensure(ual_comm_algebra_from_file(o.second.c_str(), a.out()));
        }
        Algebra cur;
        ensure(ual_current_algebra(h.get(), a.get(), cur.out()));
        call_json(result, [&](char** t) { return ual_algebra_to_json(cur.get(), t); });
      }
    }
  } catch (const Failure& f) {
    result.status = f.status;
    result.payload = json::object();
    result.diagnostics.push_back(f.message);
  }

  if (!o.out.empty()) {
    std::ofstream file(o.out, std::ios::binary);
    if (!file) {
      result.status = Status::InputError;
      result.diagnostics.push_back("cannot write '" + o.out + "'");
      return result;
    }
    file << result.render();
    result.written_to = o.out;
  }
  return result;
}

}  // namespace ual::cli
