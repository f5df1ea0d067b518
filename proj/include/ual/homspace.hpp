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

#ifndef UAL_HOMSPACE_HPP
#define UAL_HOMSPACE_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "ual/leibniz.hpp"
#include "ual/matrix.hpp"
#include "ual/universal.hpp"

namespace ual {

/// Upper bound on p^(number of unknowns) for exhaustive searches.
struct EnumerationBudget {
  std::uint64_t max_candidates = 100'000'000;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// p^cells, saturating at UINT64_MAX.
std::uint64_t candidate_count(std::uint64_t p, std::size_t cells);

/// True iff substituting X_si -> d(s, i) kills every universal polynomial.
bool verify_character(const Matrix& d, const Presentation& pres);

/// Algebra map A(h, g) -> k, stored as its values d(s, i) = theta(x_si).
class Character {
 public:
  /// Throws ValidationError if d violates the relations.
  Character(PresentationPtr pres, Matrix d);

  /// The counit: d = identity. Square presentations only.
  static Character counit(PresentationPtr pres);

  const PresentationPtr& presentation() const noexcept { return pres_; }
  const Matrix& matrix() const noexcept { return d_; }

  friend bool operator==(const Character& a, const Character& b) { return a.d_ == b.d_; }

 private:
  PresentationPtr pres_;
  Matrix d_;
};

/// gamma(theta)(f_i) = sum_s theta(x_si) e_s, a dim(h) x dim(g) matrix.
LinearMap gamma(const Character& theta);
/// Inverse of gamma; throws ValidationError unless f is a homomorphism g -> h.
Character lift(const LinearMap& f, PresentationPtr pres);

/// Algebra map A(h, g) -> A into a finite-dimensional commutative algebra,
/// stored as entries[s * dim(g) + i] = theta(x_si) in the basis of A.
struct AlgebraValuedPoint {
  std::shared_ptr<const CommutativeAlgebra> algebra;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::vector<Scalar>> entries;

  const std::vector<Scalar>& at(std::size_t s, std::size_t i) const {
    return entries[s * cols + i];
  }
};

bool verify_point(const AlgebraValuedPoint& point, const Presentation& pres);
/// The map g -> h (x) A on the basis e_s (x) f_c (index s * dim(A) + c).
LinearMap gamma(const AlgebraValuedPoint& point, const Presentation& pres);
/// Throws ValidationError unless f is a homomorphism g -> h (x) A.
AlgebraValuedPoint lift(const LinearMap& f, const Presentation& pres,
                        std::shared_ptr<const CommutativeAlgebra> algebra);

/// Every character over F_p, in row-major lexicographic order of residues.
/// Throws BudgetExceeded when p^(n * m) exceeds the budget.
std::vector<Character> enumerate_characters(const PresentationPtr& pres,
                                            const EnumerationBudget& budget = {});

/// Convolution: the matrix product of the d-matrices. Square case only.
Character convolution(const Character& a, const Character& b);
std::optional<Character> convolution_inverse(const Character& t);

/// Characters of A(h) whose matrix is invertible.
std::vector<Character> enumerate_automorphism_characters(const PresentationPtr& pres,
                                                         const EnumerationBudget& budget = {});

/// h must be over a prime field.
std::vector<LinearMap> enumerate_endomorphisms(const LeibnizAlgebra& h,
                                               const EnumerationBudget& budget = {});
std::vector<LinearMap> enumerate_automorphisms(const LeibnizAlgebra& h,
                                               const EnumerationBudget& budget = {});

/// A representation g -> gl(m): the linear map into gl(m) (basis E_ab at
/// index a * m + b) and the m x m matrix of every basis vector of g.
struct Representation {
  LinearMap map;
  std::vector<Matrix> images;
};

/// All m-dimensional representations of the Lie algebra g over its prime field.
std::vector<Representation> enumerate_representations(const LeibnizAlgebra& g, std::size_t m,
                                                      const EnumerationBudget& budget = {});

}  // namespace ual

#endif  // UAL_HOMSPACE_HPP
