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

#include "ual/homspace.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "ual/error.hpp"

namespace ual {

std::uint64_t candidate_count(std::uint64_t p, std::size_t cells) {
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < cells; ++k) {
    if (total > UINT64_MAX / p) return UINT64_MAX;
    total *= p;
  }
  return total;
}

namespace {

std::vector<Scalar> flatten(const Matrix& d) { return d.data(); }

void require_shape(const Matrix& d, const Presentation& pres) {
  if (d.rows() != pres.n() || d.cols() != pres.m())
    throw InputError("character matrix must be " + std::to_string(pres.n()) + "x" +
                     std::to_string(pres.m()));
  if (d.field() != pres.field()) throw InputError("character field mismatch");
}

}  // namespace

bool verify_character(const Matrix& d, const Presentation& pres) {
  require_shape(d, pres);
  const auto point = flatten(d);
  for (const auto& up : pres.universal())
    if (!up.poly.evaluate(point).is_zero()) return false;
  return true;
}

Character::Character(PresentationPtr pres, Matrix d) : pres_(std::move(pres)), d_(std::move(d)) {
  if (!verify_character(d_, *pres_))
    throw ValidationError("matrix " + d_.to_string() + " violates the universal relations");
}

Character Character::counit(PresentationPtr pres) {
  if (!pres->is_square()) throw InputError("the counit exists only on A(h)");
  Matrix id = Matrix::identity(pres->n(), pres->field());
  return Character(std::move(pres), std::move(id));
}

LinearMap gamma(const Character& theta) { return theta.matrix(); }

Character lift(const LinearMap& f, PresentationPtr pres) {
  require_shape(f, *pres);
  if (!is_hom(f, pres->g(), pres->h()))
    throw ValidationError("map is not a Leibniz algebra homomorphism");
  return Character(std::move(pres), f);
}

bool verify_point(const AlgebraValuedPoint& point, const Presentation& pres) {
  const auto& alg = *point.algebra;
  if (point.rows != pres.n() || point.cols != pres.m() ||
      point.entries.size() != point.rows * point.cols)
    throw InputError("algebra-valued point has the wrong shape");
  if (alg.field() != pres.field()) throw InputError("algebra-valued point: field mismatch");
  for (const auto& up : pres.universal()) {
    const auto value = evaluate_in<std::vector<Scalar>>(
        up.poly, point.entries, alg.zero(),
        [&](const std::vector<Scalar>& x, const std::vector<Scalar>& y) {
          return alg.multiply(x, y);
        },
        [](std::vector<Scalar> x, const std::vector<Scalar>& y) {
          for (std::size_t k = 0; k < x.size(); ++k) x[k] += y[k];
          return x;
        },
        [&](const Scalar& c) { return alg.scalar(c); });
    for (const auto& c : value)
      if (!c.is_zero()) return false;
  }
  return true;
}

LinearMap gamma(const AlgebraValuedPoint& point, const Presentation& pres) {
  if (!verify_point(point, pres))
    throw ValidationError("algebra-valued point violates the universal relations");
  const std::size_t da = point.algebra->dim();
  Matrix f(pres.n() * da, pres.m(), pres.field());
  for (std::size_t s = 0; s < pres.n(); ++s)
    for (std::size_t i = 0; i < pres.m(); ++i)
      for (std::size_t c = 0; c < da; ++c) f(s * da + c, i) = point.at(s, i)[c];
  return f;
}

AlgebraValuedPoint lift(const LinearMap& f, const Presentation& pres,
                        std::shared_ptr<const CommutativeAlgebra> algebra) {
  const std::size_t da = algebra->dim();
  if (f.rows() != pres.n() * da || f.cols() != pres.m())
    throw InputError("lift: map has the wrong shape for h (x) A");
  if (!is_hom(f, pres.g(), current_algebra(pres.h(), *algebra)))
    throw ValidationError("map is not a Leibniz algebra homomorphism into h (x) A");
  AlgebraValuedPoint pt{algebra, pres.n(), pres.m(), {}};
  for (std::size_t s = 0; s < pres.n(); ++s)
    for (std::size_t i = 0; i < pres.m(); ++i) {
      std::vector<Scalar> v;
      for (std::size_t c = 0; c < da; ++c) v.push_back(f(s * da + c, i));
      pt.entries.push_back(std::move(v));
    }
  return pt;
}

namespace {

struct CompiledPoly {
  struct Term {
    std::uint64_t coeff;
    std::vector<std::uint32_t> vars;  // with multiplicity
  };
  std::vector<Term> terms;
};

class CharacterSearch {
 public:
  CharacterSearch(const Presentation& pres, std::uint64_t p)
      : p_(p), nvars_(pres.ring()->nvars()), buckets_(nvars_) {
    for (const auto& up : pres.universal()) {
      if (up.poly.is_zero()) continue;
      CompiledPoly cp;
      std::uint32_t maxvar = 0;
      for (const auto& t : up.poly.terms()) {
        CompiledPoly::Term ct{t.coeff.residue(), {}};
        for (std::uint32_t v = 0; v < nvars_; ++v)
          for (std::uint16_t e = 0; e < t.mono[v]; ++e) {
            ct.vars.push_back(v);
            maxvar = std::max(maxvar, v);
          }
        cp.terms.push_back(std::move(ct));
      }
      buckets_[maxvar].push_back(static_cast<std::uint32_t>(polys_.size()));
      polys_.push_back(std::move(cp));
    }
  }

  std::size_t nvars() const { return nvars_; }

  /// Depth-first search over variables [from, to), appending full or partial
  /// assignments (when to < nvars) in lexicographic order.
  void search(std::vector<std::uint64_t>& assign, std::uint32_t from, std::uint32_t to,
              std::vector<std::vector<std::uint64_t>>& out) const {
    if (from == to) {
      out.push_back(assign);
      return;
    }
    for (std::uint64_t val = 0; val < p_; ++val) {
      assign[from] = val;
      if (consistent(assign, from)) search(assign, from + 1, to, out);
    }
    assign[from] = 0;
  }

 private:
  bool consistent(const std::vector<std::uint64_t>& assign, std::uint32_t v) const {
    for (auto idx : buckets_[v]) {
      std::uint64_t acc = 0;
      for (const auto& t : polys_[idx].terms) {
        std::uint64_t prod = t.coeff;
        for (auto var : t.vars) prod = prod * assign[var] % p_;
        acc = (acc + prod) % p_;
      }
      if (acc != 0) return false;
    }
    return true;
  }

  std::uint64_t p_;
  std::uint32_t nvars_;
  std::vector<CompiledPoly> polys_;
  std::vector<std::vector<std::uint32_t>> buckets_;  // by largest variable index
};

}  // namespace

std::vector<Character> enumerate_characters(const PresentationPtr& pres,
                                             const EnumerationBudget& budget) {
  const Field& field = pres->field();
  if (!field.is_prime())
    throw InputError("exhaustive enumeration requires a prime field; got " + field.to_string());
  const std::uint64_t p = field.modulus();
  const std::size_t cells = pres->n() * pres->m();
  const std::uint64_t candidates = candidate_count(p, cells);
  if (candidates > budget.max_candidates)
    throw BudgetExceeded(std::to_string(p) + "^" + std::to_string(cells) +
                         " candidates exceed the enumeration budget of " +
                         std::to_string(budget.max_candidates) +
                         "; use a smaller prime or algebra");

  CharacterSearch search(*pres, p);
  const auto nv = static_cast<std::uint32_t>(search.nvars());
  // the first row of the matrix is fixed per partition
  const auto split = static_cast<std::uint32_t>(std::min<std::size_t>(pres->m(), nv));
  std::vector<std::uint64_t> assign(nv, 0);
  std::vector<std::vector<std::uint64_t>> prefixes;
  search.search(assign, 0, split, prefixes);

  std::vector<std::vector<std::vector<std::uint64_t>>> parts(prefixes.size());
  unsigned threads = budget.threads ? budget.threads : std::thread::hardware_concurrency();
  if (threads == 0) threads = 1;
  if (candidates < 100'000) threads = 1;
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, prefixes.size())));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < prefixes.size(); k = next++) {
      auto a = prefixes[k];
      search.search(a, split, nv, parts[k]);
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  std::vector<Character> out;
  for (const auto& part : parts)
    for (const auto& a : part) {
      std::vector<Scalar> entries;
      entries.reserve(a.size());
      for (auto r : a) entries.emplace_back(r, p);
      out.emplace_back(pres, Matrix(pres->n(), pres->m(), std::move(entries)));
    }
  return out;
}

Character convolution(const Character& a, const Character& b) {
  if (a.presentation() != b.presentation() &&
      !(a.presentation()->is_square() && b.presentation()->is_square() &&
        a.presentation()->h().brackets() == b.presentation()->h().brackets()))
    throw InputError("convolution of characters of different algebras");
  if (!a.presentation()->is_square()) throw InputError("convolution needs A(h)");
  return Character(a.presentation(), a.matrix() * b.matrix());
}

std::optional<Character> convolution_inverse(const Character& t) {
  if (!t.presentation()->is_square()) throw InputError("convolution inverse needs A(h)");
  auto inv = t.matrix().inverse();
  if (!inv) return std::nullopt;
  return Character(t.presentation(), std::move(*inv));
}

std::vector<Character> enumerate_automorphism_characters(const PresentationPtr& pres,
                                                         const EnumerationBudget& budget) {
  if (!pres->is_square()) throw InputError("automorphisms need A(h)");
  std::vector<Character> out;
  for (auto& c : enumerate_characters(pres, budget))
    if (c.matrix().inverse()) out.push_back(std::move(c));
  return out;
}

std::vector<LinearMap> enumerate_endomorphisms(const LeibnizAlgebra& h,
                                               const EnumerationBudget& budget) {
  const auto pres = build_presentation(h);
  std::vector<LinearMap> out;
  for (const auto& c : enumerate_characters(pres, budget)) out.push_back(gamma(c));
  return out;
}

std::vector<LinearMap> enumerate_automorphisms(const LeibnizAlgebra& h,
                                               const EnumerationBudget& budget) {
  const auto pres = build_presentation(h);
  std::vector<LinearMap> out;
  for (const auto& c : enumerate_automorphism_characters(pres, budget))
    out.push_back(gamma(c));
  return out;
}

std::vector<Representation> enumerate_representations(const LeibnizAlgebra& g, std::size_t m,
                                                       const EnumerationBudget& budget) {
  if (m == 0) throw InputError("representation dimension must be positive");
  if (!check_lie(g)) throw InputError("representations are enumerated for Lie algebras only");
  const LeibnizAlgebra gl = builtin("gl(" + std::to_string(m) + ")", g.field());
  const auto pres = build_presentation(gl, g);
  std::vector<Representation> out;
  for (const auto& c : enumerate_characters(pres, budget)) {
    Representation rep{gamma(c), {}};
    for (std::size_t i = 0; i < g.dim(); ++i) {
      Matrix img(m, m, g.field());
      for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) img(a, b) = rep.map(a * m + b, i);
      rep.images.push_back(std::move(img));
    }
    // rho([f_i, f_j]) must equal the commutator of rho(f_i) and rho(f_j)
    for (std::uint32_t i = 0; i < g.dim(); ++i)
      for (std::uint32_t j = 0; j < g.dim(); ++j) {
        Matrix lhs(m, m, g.field());
        for (const auto& [u, beta] : g.bracket(i, j)) {
          Matrix scaled = rep.images[u];
          for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b) scaled(a, b) *= beta;
          lhs = lhs + scaled;
        }
        const Matrix rhs = rep.images[i] * rep.images[j] - rep.images[j] * rep.images[i];
        if (!(lhs == rhs))
          throw ValidationError("enumerated character is not a representation");
      }
    out.push_back(std::move(rep));
  }
  return out;
}

}  // namespace ual
