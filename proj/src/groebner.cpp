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

#include "ual/groebner.hpp"

#include <algorithm>
#include <set>
#include <tuple>
#include <utility>

#include "ual/error.hpp"

namespace ual {

GroebnerBasis::GroebnerBasis(RingPtr ring, std::vector<Polynomial> reduced_generators)
    : ring_(std::move(ring)), gens_(std::move(reduced_generators)) {
  for (const auto& g : gens_)
    if (!(*g.ring() == *ring_)) throw InputError("basis element from another ring");
}

Polynomial reduce(const Polynomial& p, std::span<const Polynomial> divisors) {
  for (const auto& d : divisors)
    if (!(*d.ring() == *p.ring()))
      throw InputError("normal form: polynomial and basis live in different rings");
  Polynomial rest = p;
  Polynomial remainder(p.ring());
  while (!rest.is_zero()) {
    const Term& lt = rest.leading_term();
    const Polynomial* div = nullptr;
    for (const auto& d : divisors) {
      if (!d.is_zero() && d.leading_monomial().divides(lt.mono)) {
        div = &d;
        break;
      }
    }
    if (div) {
      const Scalar c = lt.coeff / div->leading_coefficient();
      const Monomial m = lt.mono / div->leading_monomial();
      rest.subtract_multiple(c, m, *div);
    } else {
      remainder.push_trailing(rest.take_leading());
    }
  }
  return remainder;
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb) {
  if (!(*p.ring() == *gb.ring()))
    throw InputError("normal form: polynomial and basis live in different rings");
  return reduce(p, gb.generators());
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  const Monomial l = f.leading_monomial().lcm(g.leading_monomial());
  Polynomial s = f.times_term(f.leading_coefficient().inverse(), l / f.leading_monomial());
  s.subtract_multiple(g.leading_coefficient().inverse(), l / g.leading_monomial(), g);
  return s;
}

namespace {

struct Pair {
  std::size_t i, j;
  Monomial lcm;
};

GroebnerBasis finalize(const RingPtr& ring, std::vector<Polynomial> g) {
  const auto& order = ring->order();
  for (const auto& p : g)
    if (p.is_constant())
      return GroebnerBasis(ring, {Polynomial::constant(ring, ring->field().one())});
  std::stable_sort(g.begin(), g.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order.compare(a.leading_monomial(), b.leading_monomial()) < 0;
  });
  std::vector<Polynomial> minimal;
  for (auto& p : g) {
    bool redundant = false;
    for (const auto& q : minimal)
      if (q.leading_monomial().divides(p.leading_monomial())) {
        redundant = true;
        break;
      }
    if (!redundant) minimal.push_back(std::move(p));
  }
  std::vector<Polynomial> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    std::vector<Polynomial> others;
    for (std::size_t l = 0; l < minimal.size(); ++l)
      if (l != k) others.push_back(minimal[l]);
    Polynomial head = minimal[k];
    Term lead = head.take_leading();
    Polynomial tail = reduce(head, others);
    Polynomial r(ring);
    r.push_trailing(std::move(lead));
    for (const auto& t : tail.terms()) r.push_trailing(t);
    reduced.push_back(r.monic());
  }
  return GroebnerBasis(ring, std::move(reduced));
}

}  // namespace

GroebnerBasis buchberger(const RingPtr& ring, std::span<const Polynomial> gens,
                         BuchbergerStats* stats) {
  BuchbergerStats local;
  BuchbergerStats& st = stats ? *stats : local;
  const auto& order = ring->order();
  std::vector<Polynomial> basis;
  for (const auto& f : gens) {
    if (!(*f.ring() == *ring))
      throw InputError("buchberger: generator from a different ring");
    if (!f.is_zero()) basis.push_back(f.monic());
  }
  if (basis.empty()) return GroebnerBasis(ring);

  std::vector<Pair> queue;
  std::set<std::pair<std::size_t, std::size_t>> pending;
  auto add_pairs_for = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      queue.push_back({i, j, basis[i].leading_monomial().lcm(basis[j].leading_monomial())});
      pending.insert({i, j});
    }
  };
  for (std::size_t j = 0; j < basis.size(); ++j) add_pairs_for(j);

  auto is_pending = [&](std::size_t a, std::size_t b) {
    return pending.count({std::min(a, b), std::max(a, b)}) > 0;
  };

  while (!queue.empty()) {
    // normal strategy: smallest lcm first, ties broken by indices
    auto best = std::min_element(queue.begin(), queue.end(), [&](const Pair& a, const Pair& b) {
      const int c = order.compare(a.lcm, b.lcm);
      if (c != 0) return c < 0;
      return std::tie(a.j, a.i) < std::tie(b.j, b.i);
    });
    Pair pr = std::move(*best);
    queue.erase(best);
    pending.erase({pr.i, pr.j});
    ++st.pairs_considered;

    const auto& fi = basis[pr.i];
    const auto& fj = basis[pr.j];
    if (fi.leading_monomial().coprime(fj.leading_monomial())) {
      ++st.pairs_skipped_coprime;
      continue;
    }
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (basis[k].leading_monomial().divides(pr.lcm) && !is_pending(pr.i, k) &&
          !is_pending(pr.j, k))
        chain = true;
    }
    if (chain) {
      ++st.pairs_skipped_chain;
      continue;
    }
    Polynomial h = reduce(s_polynomial(fi, fj), basis);
    if (h.is_zero()) {
      ++st.reductions_to_zero;
      continue;
    }
    if (h.is_constant())
      return GroebnerBasis(ring, {Polynomial::constant(ring, ring->field().one())});
    basis.push_back(h.monic());
    add_pairs_for(basis.size() - 1);
  }
  return finalize(ring, std::move(basis));
}

RingPtr tensor_power_ring(const PolyRing& base, std::uint32_t copies) {
  if (base.grid().copies != 1) throw InputError("tensor power of a tensor ring");
  VariableGrid grid = base.grid();
  grid.copies = copies;
  const auto n = static_cast<std::uint32_t>(base.nvars());
  std::vector<std::uint32_t> ranking;
  ranking.reserve(std::size_t{n} * copies);
  for (std::uint32_t c = 0; c < copies; ++c)
    for (auto v : base.order().ranking()) ranking.push_back(c * n + v);
  return std::make_shared<const PolyRing>(
      grid, base.field(), MonomialOrder(base.order().kind(), std::move(ranking)));
}

Polynomial embed_in_copy(const Polynomial& p, const RingPtr& target, std::uint32_t copy) {
  const auto n = p.ring()->nvars();
  if (target->nvars() < n * (copy + 1) || target->field() != p.ring()->field())
    throw InputError("embed_in_copy: incompatible target ring");
  std::vector<Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) {
    Monomial m(target->nvars());
    for (std::size_t v = 0; v < n; ++v)
      if (t.mono[v]) m.set(copy * n + v, t.mono[v]);
    terms.push_back({std::move(m), t.coeff});
  }
  return Polynomial::from_terms(target, std::move(terms));
}

TensorSquareReducer::TensorSquareReducer(const RingPtr& base,
                                         std::span<const Polynomial> jgens)
    : base_(base), ring_(tensor_power_ring(*base, 2)), gb_(ring_) {
  std::vector<Polynomial> doubled;
  doubled.reserve(2 * jgens.size());
  for (std::uint32_t copy = 0; copy < 2; ++copy)
    for (const auto& q : jgens) {
      if (!(*q.ring() == *base)) throw InputError("tensor square: generator ring mismatch");
      doubled.push_back(embed_in_copy(q, ring_, copy));
    }
  gb_ = buchberger(ring_, doubled);
}

Polynomial TensorSquareReducer::reduce(const Polynomial& p) const {
  return normal_form(p, gb_);
}

Polynomial reduce_in_tensor_square(const Polynomial& p, std::span<const Polynomial> jgens) {
  const auto& ring = *p.ring();
  if (ring.grid().copies != 2) throw InputError("polynomial is not in a doubled ring");
  VariableGrid grid = ring.grid();
  grid.copies = 1;
  const auto n = static_cast<std::uint32_t>(grid.size());
  std::vector<std::uint32_t> ranking;
  for (auto v : ring.order().ranking())
    if (v < n) ranking.push_back(v);
  auto base = std::make_shared<const PolyRing>(
      grid, ring.field(), MonomialOrder(ring.order().kind(), std::move(ranking)));
  TensorSquareReducer reducer(base, jgens);
  return reducer.reduce(p.in_ring(reducer.ring()));
}

}  // namespace ual
