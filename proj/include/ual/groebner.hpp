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

#ifndef UAL_GROEBNER_HPP
#define UAL_GROEBNER_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "ual/polynomial.hpp"

namespace ual {

/// Reduced Groebner basis: monic, inter-reduced, sorted by increasing leading
/// monomial. The zero ideal is the empty basis, the unit ideal is {1}.
class GroebnerBasis {
 public:
  explicit GroebnerBasis(RingPtr ring) : ring_(std::move(ring)) {}
  GroebnerBasis(RingPtr ring, std::vector<Polynomial> reduced_generators);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Polynomial>& generators() const noexcept { return gens_; }
  std::size_t size() const noexcept { return gens_.size(); }
  bool empty() const noexcept { return gens_.empty(); }
  bool is_unit() const noexcept {
    return gens_.size() == 1 && gens_.front().is_constant();
  }

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
    return a.gens_ == b.gens_;
  }

 private:
  RingPtr ring_;
  std::vector<Polynomial> gens_;
};

struct BuchbergerStats {
  std::size_t pairs_considered = 0;
  std::size_t pairs_skipped_coprime = 0;
  std::size_t pairs_skipped_chain = 0;
  std::size_t reductions_to_zero = 0;
};

/// Remainder of multivariate division of p by `divisors` (full reduction:
/// no monomial of the result is divisible by a divisor's leading monomial).
Polynomial reduce(const Polynomial& p, std::span<const Polynomial> divisors);
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

/// Reduced Groebner basis of the ideal generated by `gens`, using the normal
/// selection strategy with the coprime and chain criteria.
GroebnerBasis buchberger(const RingPtr& ring, std::span<const Polynomial> gens,
                         BuchbergerStats* stats = nullptr);

/// The ring with `copies` tensor copies of the variables of `base`.
RingPtr tensor_power_ring(const PolyRing& base, std::uint32_t copies);
/// Copies a polynomial of `base` into tensor factor `copy` of `target`.
Polynomial embed_in_copy(const Polynomial& p, const RingPtr& target,
                         std::uint32_t copy);

/// Normal forms modulo J (x) A + A (x) J in the doubled ring, where J is
/// generated by `jgens`. The doubled-ring basis is computed once.
class TensorSquareReducer {
 public:
  TensorSquareReducer(const RingPtr& base, std::span<const Polynomial> jgens);

  const RingPtr& base_ring() const noexcept { return base_; }
  const RingPtr& ring() const noexcept { return ring_; }
  const GroebnerBasis& basis() const noexcept { return gb_; }

  Polynomial reduce(const Polynomial& p) const;

 private:
  RingPtr base_;
  RingPtr ring_;
  GroebnerBasis gb_;
};

Polynomial reduce_in_tensor_square(const Polynomial& p,
                                   std::span<const Polynomial> jgens);

}  // namespace ual

#endif  // UAL_GROEBNER_HPP
