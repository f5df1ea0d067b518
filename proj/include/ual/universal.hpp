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

#ifndef UAL_UNIVERSAL_HPP
#define UAL_UNIVERSAL_HPP

#include <cstdint>
#include <memory>
#include <mutex>
#include <vector>

#include "ual/groebner.hpp"
#include "ual/leibniz.hpp"
#include "ual/matrix.hpp"
#include "ual/polynomial.hpp"

namespace ual {

/// P_(a,i,j) = sum_u beta(i,j,u) X_{a,u} - sum_{s,t} tau(s,t,a) X_{s,i} X_{t,j},
/// with 0-based indices a < dim h and i, j < dim g.
struct UniversalPolynomial {
  std::uint32_t a, i, j;
  Polynomial poly;
};

/// Polynomial ring on the dim(h) x dim(g) grid of variables X_{s,i}.
RingPtr universal_ring(const LeibnizAlgebra& h, const LeibnizAlgebra& g,
                       MonomialOrder::Kind order = MonomialOrder::Kind::DegRevLex);

/// All dim(h) * dim(g)^2 polynomials, zero ones included, ordered by (a, i, j).
std::vector<UniversalPolynomial> universal_polynomials(const LeibnizAlgebra& h,
                                                       const LeibnizAlgebra& g,
                                                       const RingPtr& ring);

/// Quotient presentation k[X_{s,i}] / J of the universal algebra of (h, g).
class Presentation {
 public:
  Presentation(LeibnizAlgebra h, LeibnizAlgebra g, MonomialOrder::Kind order);
  Presentation(const Presentation&) = delete;
  Presentation& operator=(const Presentation&) = delete;

  const LeibnizAlgebra& h() const noexcept { return h_; }
  const LeibnizAlgebra& g() const noexcept { return g_; }
  std::size_t n() const noexcept { return h_.dim(); }
  std::size_t m() const noexcept { return g_.dim(); }
  bool is_square() const;
  const Field& field() const noexcept { return h_.field(); }
  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<UniversalPolynomial>& universal() const noexcept { return polys_; }
  /// The nonzero universal polynomials, in index order.
  std::vector<Polynomial> relations() const;
  const GroebnerBasis& basis() const noexcept { return gb_; }
  std::uint32_t variable(std::uint32_t s, std::uint32_t i) const {
    return ring_->grid().index(0, s, i);
  }

  /// Groebner basis of J (x) A + A (x) J in the doubled ring, built on first use.
  const TensorSquareReducer& tensor_square() const;

 private:
  LeibnizAlgebra h_;
  LeibnizAlgebra g_;
  RingPtr ring_;
  std::vector<UniversalPolynomial> polys_;
  GroebnerBasis gb_;
  mutable std::once_flag tensor_once_;
  mutable std::unique_ptr<TensorSquareReducer> tensor_;
};

using PresentationPtr = std::shared_ptr<const Presentation>;

PresentationPtr build_presentation(const LeibnizAlgebra& h, const LeibnizAlgebra& g,
                                   MonomialOrder::Kind order = MonomialOrder::Kind::DegRevLex);
PresentationPtr build_presentation(const LeibnizAlgebra& h,
                                   MonomialOrder::Kind order = MonomialOrder::Kind::DegRevLex);

/// eta(f_i) = sum_s e_s (x) x_{s,i}; images[i] lists (s, variable index).
struct Coaction {
  struct Term {
    std::uint32_t s;
    std::uint32_t variable;
  };
  std::vector<std::vector<Term>> images;
};

Coaction eta(const Presentation& pres);

struct EtaCertificate {
  struct Component {
    std::uint32_t i, j, a;
    Polynomial difference;  // a-th coordinate of [eta f_i, eta f_j] - eta [f_i, f_j]
    Polynomial reduced;     // its normal form modulo J
  };
  bool ok = true;
  std::vector<Component> components;
};

/// Checks that eta is a Leibniz homomorphism g -> h (x) A(h, g).
EtaCertificate verify_eta_hom(const Presentation& pres);

/// Delta(x_ij) = sum_s x_is (x) x_sj and eps(x_ij) = delta_ij. Square case only.
struct Comultiplication {
  RingPtr doubled;
  std::vector<Polynomial> delta;  // delta[i * n + j]
  Matrix counit;
};

Comultiplication comultiplication(const Presentation& pres);

/// Algebra maps induced by Delta and eps on polynomials of the presentation ring.
Polynomial apply_delta(const Polynomial& p, const Comultiplication& c);
Scalar apply_counit(const Polynomial& p, const Comultiplication& c);

struct WellDefinedness {
  struct Entry {
    std::uint32_t a, i, j;
    bool delta_vanishes;
    bool counit_vanishes;
    Polynomial delta_residue;
  };
  bool ok = true;
  std::vector<Entry> entries;  // one per nonzero universal polynomial
};

/// Delta(P) lies in J (x) A + A (x) J and eps(P) = 0 for every universal P.
WellDefinedness verify_comultiplication(const Presentation& pres);

struct ComoduleReport {
  bool coaction_coassociative = false;  // (id (x) Delta) eta = (eta (x) id) eta
  bool coaction_counital = false;       // (id (x) eps) eta = can
  bool coassociative = false;
  bool counit_left = false;
  bool counit_right = false;
  bool ok() const {
    return coaction_coassociative && coaction_counital && coassociative && counit_left &&
           counit_right;
  }
};

ComoduleReport verify_comodule(const Presentation& pres);

/// The projection M(n) -> A(h) commutes with Delta and eps on every monomial of
/// degree <= max_degree.
bool verify_projection_bialgebra_map(const Presentation& pres, std::uint32_t max_degree = 2);

struct SymmetricAlgebraCheck {
  bool ok = false;
  bool all_linear = false;
  std::size_t linear_span_dim = 0;
  std::size_t derived_dim = 0;
  std::size_t free_generators = 0;
};

/// A(k, g) is the polynomial ring on dim(g / g') variables.
SymmetricAlgebraCheck symmetric_algebra_check(const LeibnizAlgebra& g);

}  // namespace ual

#endif  // UAL_UNIVERSAL_HPP
