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

#ifndef UAL_LEIBNIZ_HPP
#define UAL_LEIBNIZ_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ual/field.hpp"
#include "ual/matrix.hpp"

namespace ual {

/// Sparse coordinate vector, 0-based index -> nonzero coefficient.
using SparseVector = std::map<std::uint32_t, Scalar>;
/// (i, j) -> [e_i, e_j]. Missing pairs bracket to zero.
using BracketTable = std::map<std::pair<std::uint32_t, std::uint32_t>, SparseVector>;

/// Finite-dimensional algebra with basis e_0..e_{n-1} and bracket
/// [e_i, e_j] = sum_s tau(i, j, s) e_s. Construction checks indices and
/// fields only; the Leibniz identity is checked by check_leibniz().
class LeibnizAlgebra {
 public:
  LeibnizAlgebra(std::size_t dim, Field field, BracketTable brackets,
                 std::string name = {});

  std::size_t dim() const noexcept { return dim_; }
  const Field& field() const noexcept { return field_; }
  const std::string& name() const noexcept { return name_; }
  const BracketTable& brackets() const noexcept { return brackets_; }

  Scalar structure_constant(std::uint32_t i, std::uint32_t j, std::uint32_t s) const;
  const SparseVector& bracket(std::uint32_t i, std::uint32_t j) const;
  std::vector<Scalar> bracket(const std::vector<Scalar>& x,
                              const std::vector<Scalar>& y) const;

  /// Reinterprets rational constants in F_p. An algebra already over F_p is
  /// returned unchanged; any other field is an InputError.
  LeibnizAlgebra over_prime(std::uint64_t p) const;

 private:
  std::size_t dim_;
  Field field_;
  BracketTable brackets_;
  std::string name_;
};

struct LeibnizCheck {
  bool holds = true;
  /// 0-based (i, j, l) for which [e_i,[e_j,e_l]] != [[e_i,e_j],e_l] - [[e_i,e_l],e_j].
  std::vector<std::array<std::uint32_t, 3>> violations;
};

LeibnizCheck check_leibniz(const LeibnizAlgebra& alg);
/// tau(i,i,s) = 0 and tau(i,j,s) = -tau(j,i,s) for all indices.
bool check_lie(const LeibnizAlgebra& alg);

/// Finite-dimensional commutative associative unital algebra given by
/// structure constants f_a f_b = sum_c mu(a,b,c) f_c. The constructor
/// throws ValidationError when an axiom fails.
class CommutativeAlgebra {
 public:
  CommutativeAlgebra(std::size_t dim, Field field, BracketTable mu,
                     std::vector<Scalar> unit, std::string name = {});

  static CommutativeAlgebra ground_field(Field field);
  /// k[t]/(t^k) on the basis 1, t, ..., t^{k-1}.
  static CommutativeAlgebra truncated_polynomial(std::size_t k, Field field);

  std::size_t dim() const noexcept { return dim_; }
  const Field& field() const noexcept { return field_; }
  const std::string& name() const noexcept { return name_; }
  const BracketTable& structure() const noexcept { return mu_; }
  const std::vector<Scalar>& unit() const noexcept { return unit_; }

  std::vector<Scalar> zero() const { return std::vector<Scalar>(dim_, field_.zero()); }
  std::vector<Scalar> scalar(const Scalar& c) const;
  std::vector<Scalar> basis_vector(std::uint32_t a) const;
  std::vector<Scalar> multiply(const std::vector<Scalar>& x,
                               const std::vector<Scalar>& y) const;
  /// Span of all products f_a f_b, as a canonical column basis.
  Matrix square_span() const;

 private:
  std::size_t dim_;
  Field field_;
  BracketTable mu_;
  std::vector<Scalar> unit_;
  std::string name_;
};

/// h (x) A with [e_i (x) f_a, e_j (x) f_b] = [e_i, e_j] (x) f_a f_b on the
/// basis index i * dim(A) + a.
LeibnizAlgebra current_algebra(const LeibnizAlgebra& h, const CommutativeAlgebra& a);

/// Canonical column basis of span{[e_i, e_j]}.
Matrix derived_subalgebra(const LeibnizAlgebra& alg);

/// f is dim(h) x dim(g); true iff f([x, y]) = [f x, f y] on basis pairs.
bool is_hom(const Matrix& f, const LeibnizAlgebra& g, const LeibnizAlgebra& h);

/// abelian(n), aff2, sl2, gl(m), heisenberg.
LeibnizAlgebra builtin(std::string_view name, Field field);

}  // namespace ual

#endif  // UAL_LEIBNIZ_HPP
