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

#include "ual/universal.hpp"

#include "ual/error.hpp"

namespace ual {

RingPtr universal_ring(const LeibnizAlgebra& h, const LeibnizAlgebra& g,
                       MonomialOrder::Kind order) {
  if (h.field() != g.field()) throw InputError("universal algebra: field mismatch");
  VariableGrid grid{static_cast<std::uint32_t>(h.dim()), static_cast<std::uint32_t>(g.dim()), 1};
  return make_ring(grid, h.field(), order);
}

std::vector<UniversalPolynomial> universal_polynomials(const LeibnizAlgebra& h,
                                                       const LeibnizAlgebra& g,
                                                       const RingPtr& ring) {
  if (h.field() != g.field()) throw InputError("universal polynomials: field mismatch");
  const auto& grid = ring->grid();
  if (grid.rows != h.dim() || grid.cols != g.dim() || grid.copies != 1)
    throw InputError("universal polynomials: ring grid does not match the algebras");
  const auto n = static_cast<std::uint32_t>(h.dim());
  const auto m = static_cast<std::uint32_t>(g.dim());
  const std::size_t nv = ring->nvars();
  std::vector<UniversalPolynomial> out;
  out.reserve(std::size_t{n} * m * m);
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t i = 0; i < m; ++i)
      for (std::uint32_t j = 0; j < m; ++j) {
        std::vector<Term> terms;
        for (const auto& [u, beta] : g.bracket(i, j))
          terms.push_back({Monomial(nv, grid.index(0, a, u)), beta});
        for (const auto& [st, v] : h.brackets()) {
          auto it = v.find(a);
          if (it == v.end()) continue;
          Monomial mono(nv, grid.index(0, st.first, i));
          mono = mono * Monomial(nv, grid.index(0, st.second, j));
          terms.push_back({std::move(mono), -it->second});
        }
        out.push_back({a, i, j, Polynomial::from_terms(ring, std::move(terms))});
      }
  return out;
}

Presentation::Presentation(LeibnizAlgebra h, LeibnizAlgebra g, MonomialOrder::Kind order)
    : h_(std::move(h)),
      g_(std::move(g)),
      ring_(universal_ring(h_, g_, order)),
      polys_(universal_polynomials(h_, g_, ring_)),
      gb_(ring_) {
  const auto rel = relations();
  gb_ = buchberger(ring_, rel);
}

bool Presentation::is_square() const {
  return h_.dim() == g_.dim() && h_.brackets() == g_.brackets();
}

std::vector<Polynomial> Presentation::relations() const {
  std::vector<Polynomial> out;
  for (const auto& up : polys_)
    if (!up.poly.is_zero()) out.push_back(up.poly);
  return out;
}

const TensorSquareReducer& Presentation::tensor_square() const {
  std::call_once(tensor_once_, [this] {
    // the reduced basis generates J, so it serves as the generating set
    tensor_ = std::make_unique<TensorSquareReducer>(ring_, gb_.generators());
  });
  return *tensor_;
}

PresentationPtr build_presentation(const LeibnizAlgebra& h, const LeibnizAlgebra& g,
                                   MonomialOrder::Kind order) {
  return std::make_shared<const Presentation>(h, g, order);
}

PresentationPtr build_presentation(const LeibnizAlgebra& h, MonomialOrder::Kind order) {
  return build_presentation(h, h, order);
}

Coaction eta(const Presentation& pres) {
  Coaction c;
  const auto n = static_cast<std::uint32_t>(pres.n());
  const auto m = static_cast<std::uint32_t>(pres.m());
  c.images.resize(m);
  for (std::uint32_t i = 0; i < m; ++i)
    for (std::uint32_t s = 0; s < n; ++s) c.images[i].push_back({s, pres.variable(s, i)});
  return c;
}

namespace {

/// Element of h (x) k[X]: one polynomial per basis vector of h.
using HTensorPoly = std::vector<Polynomial>;

HTensorPoly eta_image(const Presentation& pres, std::uint32_t i) {
  HTensorPoly out;
  for (std::uint32_t s = 0; s < pres.n(); ++s)
    out.push_back(Polynomial::variable(pres.ring(), pres.variable(s, i)));
  return out;
}

HTensorPoly current_bracket(const LeibnizAlgebra& h, const HTensorPoly& x,
                            const HTensorPoly& y, const RingPtr& ring) {
  HTensorPoly out(h.dim(), Polynomial(ring));
  for (const auto& [st, v] : h.brackets()) {
    const Polynomial prod = x[st.first] * y[st.second];
    if (prod.is_zero()) continue;
    for (const auto& [a, tau] : v) out[a] += prod.scaled(tau);
  }
  return out;
}

/// Target ring with `copies` tensor factors of the presentation ring.
RingPtr copies_ring(const Presentation& pres, std::uint32_t copies) {
  return copies == 1 ? pres.ring() : tensor_power_ring(*pres.ring(), copies);
}

/// Applies Delta to tensor factor `c` of a polynomial with `copies` factors.
Polynomial delta_on_copy(const Presentation& pres, const Polynomial& p, std::uint32_t copies,
                         std::uint32_t c) {
  const auto n = static_cast<std::uint32_t>(pres.n());
  const RingPtr target = copies_ring(pres, copies + 1);
  const auto& src = p.ring()->grid();
  const auto& dst = target->grid();
  std::vector<Polynomial> images;
  images.reserve(p.ring()->nvars());
  for (std::uint32_t v = 0; v < p.ring()->nvars(); ++v) {
    const auto cp = src.copy_of(v), s = src.row_of(v), i = src.col_of(v);
    if (cp < c) {
      images.push_back(Polynomial::variable(target, dst.index(cp, s, i)));
    } else if (cp > c) {
      images.push_back(Polynomial::variable(target, dst.index(cp + 1, s, i)));
    } else {
      Polynomial sum(target);
      for (std::uint32_t t = 0; t < n; ++t)
        sum += Polynomial::variable(target, dst.index(c, s, t)) *
               Polynomial::variable(target, dst.index(c + 1, t, i));
      images.push_back(std::move(sum));
    }
  }
  return p.substitute(target, images);
}

/// Applies eps to tensor factor `c`; `copies` >= 2.
Polynomial counit_on_copy(const Presentation& pres, const Polynomial& p, std::uint32_t copies,
                          std::uint32_t c) {
  const RingPtr target = copies_ring(pres, copies - 1);
  const auto& src = p.ring()->grid();
  const auto& dst = target->grid();
  const Field& f = pres.field();
  std::vector<Polynomial> images;
  for (std::uint32_t v = 0; v < p.ring()->nvars(); ++v) {
    const auto cp = src.copy_of(v), s = src.row_of(v), i = src.col_of(v);
    if (cp < c)
      images.push_back(Polynomial::variable(target, dst.index(cp, s, i)));
    else if (cp > c)
      images.push_back(Polynomial::variable(target, dst.index(cp - 1, s, i)));
    else
      images.push_back(Polynomial::constant(target, s == i ? f.one() : f.zero()));
  }
  return p.substitute(target, images);
}

void require_square(const Presentation& pres, const char* what) {
  if (!pres.is_square())
    throw InputError(std::string(what) + " is only defined on A(h) = A(h, h)");
}

}  // namespace

EtaCertificate verify_eta_hom(const Presentation& pres) {
  EtaCertificate cert;
  const auto& ring = pres.ring();
  const auto m = static_cast<std::uint32_t>(pres.m());
  std::vector<HTensorPoly> images;
  for (std::uint32_t i = 0; i < m; ++i) images.push_back(eta_image(pres, i));
  for (std::uint32_t i = 0; i < m; ++i)
    for (std::uint32_t j = 0; j < m; ++j) {
      HTensorPoly lhs = current_bracket(pres.h(), images[i], images[j], ring);
      HTensorPoly rhs(pres.n(), Polynomial(ring));
      for (const auto& [u, beta] : pres.g().bracket(i, j))
        for (std::uint32_t a = 0; a < pres.n(); ++a) rhs[a] += images[u][a].scaled(beta);
      for (std::uint32_t a = 0; a < pres.n(); ++a) {
        Polynomial diff = lhs[a] - rhs[a];
        Polynomial red = normal_form(diff, pres.basis());
        if (!red.is_zero()) cert.ok = false;
        cert.components.push_back({i, j, a, std::move(diff), std::move(red)});
      }
    }
  return cert;
}

Comultiplication comultiplication(const Presentation& pres) {
  require_square(pres, "comultiplication");
  const auto n = static_cast<std::uint32_t>(pres.n());
  Comultiplication c{copies_ring(pres, 2), {}, Matrix::identity(n, pres.field())};
  const auto& grid = c.doubled->grid();
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j) {
      Polynomial d(c.doubled);
      for (std::uint32_t s = 0; s < n; ++s)
        d += Polynomial::variable(c.doubled, grid.index(0, i, s)) *
             Polynomial::variable(c.doubled, grid.index(1, s, j));
      c.delta.push_back(std::move(d));
    }
  return c;
}

Polynomial apply_delta(const Polynomial& p, const Comultiplication& c) {
  return p.substitute(c.doubled, c.delta);
}

Scalar apply_counit(const Polynomial& p, const Comultiplication& c) {
  const auto n = c.counit.rows();
  std::vector<Scalar> point;
  point.reserve(n * n);
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t i = 0; i < n; ++i) point.push_back(c.counit(s, i));
  return p.evaluate(point);
}

WellDefinedness verify_comultiplication(const Presentation& pres) {
  require_square(pres, "comultiplication");
  const Comultiplication c = comultiplication(pres);
  const TensorSquareReducer& sq = pres.tensor_square();
  WellDefinedness out;
  for (const auto& up : pres.universal()) {
    if (up.poly.is_zero()) continue;
    Polynomial residue = sq.reduce(apply_delta(up.poly, c).in_ring(sq.ring()));
    const bool dv = residue.is_zero();
    const bool ev = apply_counit(up.poly, c).is_zero();
    if (!dv || !ev) out.ok = false;
    out.entries.push_back({up.a, up.i, up.j, dv, ev, std::move(residue)});
  }
  return out;
}

ComoduleReport verify_comodule(const Presentation& pres) {
  require_square(pres, "comodule check");
  const auto n = static_cast<std::uint32_t>(pres.n());
  const Comultiplication c = comultiplication(pres);
  const RingPtr two = c.doubled;
  const RingPtr three = copies_ring(pres, 3);
  const auto& g2 = two->grid();
  const auto& g3 = three->grid();
  const Field& f = pres.field();
  ComoduleReport r;

  // (id (x) Delta) eta(e_i) has t-th coordinate Delta(x_ti); (eta (x) id) eta(e_i)
  // has t-th coordinate sum_s x_ts (x) x_si.
  r.coaction_coassociative = true;
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t t = 0; t < n; ++t) {
      const Polynomial lhs =
          apply_delta(Polynomial::variable(pres.ring(), pres.variable(t, i)), c);
      Polynomial rhs(two);
      for (std::uint32_t s = 0; s < n; ++s)
        rhs += Polynomial::variable(two, g2.index(0, t, s)) *
               Polynomial::variable(two, g2.index(1, s, i));
      if (!(lhs == rhs)) r.coaction_coassociative = false;
    }

  // (id (x) eps) eta(e_i) = sum_s e_s eps(x_si) must be e_i
  r.coaction_counital = true;
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t s = 0; s < n; ++s) {
      const Scalar e =
          apply_counit(Polynomial::variable(pres.ring(), pres.variable(s, i)), c);
      if (!(e == (s == i ? f.one() : f.zero()))) r.coaction_counital = false;
    }

  r.coassociative = r.counit_left = r.counit_right = true;
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j) {
      const Polynomial& d = c.delta[i * n + j];
      const Polynomial left = delta_on_copy(pres, d, 2, 0);
      const Polynomial right = delta_on_copy(pres, d, 2, 1);
      Polynomial expected(three);
      for (std::uint32_t s = 0; s < n; ++s)
        for (std::uint32_t t = 0; t < n; ++t)
          expected += Polynomial::variable(three, g3.index(0, i, s)) *
                      Polynomial::variable(three, g3.index(1, s, t)) *
                      Polynomial::variable(three, g3.index(2, t, j));
      if (!(left == right) || !(left == expected)) r.coassociative = false;
      const Polynomial xij = Polynomial::variable(pres.ring(), pres.variable(i, j));
      if (!(counit_on_copy(pres, d, 2, 0) == xij)) r.counit_left = false;
      if (!(counit_on_copy(pres, d, 2, 1) == xij)) r.counit_right = false;
    }
  return r;
}

namespace {

void monomials_up_to(std::size_t nvars, std::uint32_t max_degree, std::size_t start,
                     Monomial& cur, std::vector<Monomial>& out) {
  out.push_back(cur);
  if (cur.degree() == max_degree) return;
  for (std::size_t v = start; v < nvars; ++v) {
    cur.set(v, cur[v] + 1);
    monomials_up_to(nvars, max_degree, v, cur, out);
    cur.set(v, cur[v] - 1);
  }
}

}  // namespace

bool verify_projection_bialgebra_map(const Presentation& pres, std::uint32_t max_degree) {
  require_square(pres, "projection check");
  const Comultiplication c = comultiplication(pres);
  const TensorSquareReducer& sq = pres.tensor_square();
  std::vector<Monomial> monos;
  Monomial one(pres.ring()->nvars());
  monomials_up_to(pres.ring()->nvars(), max_degree, 0, one, monos);
  const Field& f = pres.field();
  for (const auto& mono : monos) {
    const Polynomial q = Polynomial::from_terms(pres.ring(), {{mono, f.one()}});
    const Polynomial nq = normal_form(q, pres.basis());
    const Polynomial via_quotient = sq.reduce(apply_delta(nq, c).in_ring(sq.ring()));
    const Polynomial via_matrix = sq.reduce(apply_delta(q, c).in_ring(sq.ring()));
    if (!(via_quotient == via_matrix)) return false;
    if (!(apply_counit(nq, c) == apply_counit(q, c))) return false;
  }
  return true;
}

SymmetricAlgebraCheck symmetric_algebra_check(const LeibnizAlgebra& g) {
  const LeibnizAlgebra k(1, g.field(), {}, "k");
  const Presentation pres(k, g, MonomialOrder::Kind::DegRevLex);
  SymmetricAlgebraCheck out;
  out.all_linear = true;
  for (const auto& p : pres.basis().generators())
    if (p.total_degree() != 1) out.all_linear = false;
  out.linear_span_dim = pres.basis().size();
  out.derived_dim = derived_subalgebra(g).cols();
  out.free_generators = g.dim() - out.linear_span_dim;
  out.ok = out.all_linear && out.linear_span_dim == out.derived_dim;
  return out;
}

}  // namespace ual
