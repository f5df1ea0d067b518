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

#ifndef UAL_GRADCOACT_HPP
#define UAL_GRADCOACT_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ual/homspace.hpp"
#include "ual/leibniz.hpp"
#include "ual/matrix.hpp"
#include "ual/universal.hpp"

namespace ual {

/// Z_{m_1} x ... x Z_{m_k}. Elements are indexed 0..order-1 in lexicographic
/// order of their residue tuples; index 0 is the identity.
class FiniteAbelianGroup {
 public:
  explicit FiniteAbelianGroup(std::vector<std::uint32_t> factors);

  /// "Z2", "Z2xZ4"; "1" is the trivial group. Factors below 2 are rejected.
  static FiniteAbelianGroup parse(std::string_view spec);

  const std::vector<std::uint32_t>& factors() const noexcept { return factors_; }
  std::uint32_t order() const noexcept { return order_; }
  std::uint32_t identity() const noexcept { return 0; }

  std::vector<std::uint32_t> element(std::uint32_t index) const;
  std::uint32_t index(const std::vector<std::uint32_t>& residues) const;
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t negate(std::uint32_t a) const;
  /// The r-th generator (1 in factor r, 0 elsewhere).
  std::uint32_t generator(std::size_t r) const;

  std::string to_string() const;
  std::string element_to_string(std::uint32_t index) const;

  friend bool operator==(const FiniteAbelianGroup&, const FiniteAbelianGroup&) = default;

 private:
  std::vector<std::uint32_t> factors_;
  std::uint32_t order_ = 1;
};

using GroupPtr = std::shared_ptr<const FiniteAbelianGroup>;

enum class GroupBialgebraKind : std::uint8_t {
  GroupAlgebra,  // k[G]: basis G, Delta(g) = g (x) g
  Dual,          // k[G]*: basis p_g, pointwise product, Delta(p_g) = sum_{uv=g} p_u (x) p_v
};

/// Sparse element of k[G] or k[G]*: basis index -> nonzero coefficient.
struct GroupAlgebraElement {
  GroupBialgebraKind kind = GroupBialgebraKind::GroupAlgebra;
  std::map<std::uint32_t, Scalar> coeffs;

  Scalar coefficient(std::uint32_t g, const Field& f) const {
    auto it = coeffs.find(g);
    return it == coeffs.end() ? f.zero() : it->second;
  }
  friend bool operator==(const GroupAlgebraElement&, const GroupAlgebraElement&) = default;
};

using GroupTensor = std::map<std::pair<std::uint32_t, std::uint32_t>, Scalar>;

class GroupBialgebra {
 public:
  GroupBialgebra(GroupPtr group, Field field, GroupBialgebraKind kind);

  const GroupPtr& group() const noexcept { return group_; }
  const Field& field() const noexcept { return field_; }
  GroupBialgebraKind kind() const noexcept { return kind_; }

  GroupAlgebraElement zero() const { return {kind_, {}}; }
  GroupAlgebraElement one() const;
  GroupAlgebraElement basis(std::uint32_t g) const;
  GroupAlgebraElement scalar(const Scalar& c) const;

  GroupAlgebraElement add(const GroupAlgebraElement& x, const GroupAlgebraElement& y) const;
  GroupAlgebraElement multiply(const GroupAlgebraElement& x, const GroupAlgebraElement& y) const;
  GroupAlgebraElement scale(const GroupAlgebraElement& x, const Scalar& c) const;

  GroupTensor coproduct(const GroupAlgebraElement& x) const;
  Scalar counit(const GroupAlgebraElement& x) const;
  GroupTensor tensor(const GroupAlgebraElement& x, const GroupAlgebraElement& y) const;

 private:
  void require_kind(const GroupAlgebraElement& x) const;

  GroupPtr group_;
  Field field_;
  GroupBialgebraKind kind_;
};

using GroupBialgebraPtr = std::shared_ptr<const GroupBialgebra>;

/// theta: A(h) -> B given on generators, images[s * n + i] = theta(x_si).
struct BialgebraHom {
  PresentationPtr pres;
  GroupBialgebraPtr codomain;
  std::vector<GroupAlgebraElement> images;

  const GroupAlgebraElement& at(std::size_t s, std::size_t i) const {
    return images[s * pres->n() + i];
  }
  /// Coefficient matrix of basis element g: M_g(s, i) = <theta(x_si), g>.
  Matrix coefficient_matrix(std::uint32_t g) const;

  friend bool operator==(const BialgebraHom& a, const BialgebraHom& b) {
    return a.images == b.images;
  }
};

struct BihomCheck {
  bool algebra_map = true;
  bool coalgebra_map = true;
  bool counit_map = true;
  std::vector<std::string> failures;
  bool ok() const { return algebra_map && coalgebra_map && counit_map; }
};

BihomCheck verify_bialgebra_hom(const BialgebraHom& theta);

struct GradingComponent {
  std::uint32_t element;
  Matrix basis;  // canonical column basis of h_sigma
};

/// G-grading h = sum_sigma h_sigma. Only nonzero components are stored,
/// sorted by group element.
class Grading {
 public:
  /// Validates direct sum and [h_s, h_t] in h_{s+t}; throws ValidationError.
  static Grading from_components(const LeibnizAlgebra& h, GroupPtr group,
                                 std::vector<GradingComponent> components);
  /// Grading in which e_i is homogeneous of degree degrees[i].
  static Grading from_degree_map(const LeibnizAlgebra& h, GroupPtr group,
                                 const std::vector<std::uint32_t>& degrees);

  const GroupPtr& group() const noexcept { return group_; }
  std::size_t dim() const noexcept { return dim_; }
  const std::vector<GradingComponent>& components() const noexcept { return components_; }
  /// The component of sigma; zero columns when it vanishes.
  Matrix component(std::uint32_t sigma) const;
  bool diagonal() const noexcept { return degree_map_.has_value(); }
  const std::optional<std::vector<std::uint32_t>>& degree_map() const noexcept {
    return degree_map_;
  }

  friend bool operator==(const Grading& a, const Grading& b);

 private:
  Grading(GroupPtr group, std::size_t dim, Field field, std::vector<GradingComponent> comps);

  GroupPtr group_;
  std::size_t dim_;
  Field field_;
  std::vector<GradingComponent> components_;
  std::optional<std::vector<std::uint32_t>> degree_map_;
};

/// All degree maps d with tau(i,j,s) != 0 => d(s) = d(i) + d(j), in
/// lexicographic order of (d(e_1), ..., d(e_n)).
std::vector<Grading> diagonal_gradings(const LeibnizAlgebra& h, const GroupPtr& group,
                                       const EnumerationBudget& budget = {});

BialgebraHom grading_to_bihom(const Grading& grading, const PresentationPtr& pres);
/// h_sigma = {x : (id (x) theta) eta(x) = x (x) sigma}. Throws ValidationError
/// if theta is not a bialgebra map into k[G].
Grading bihom_to_grading(const BialgebraHom& theta);

/// g * theta * g^{-1} in the convolution algebra Hom(A(h), B).
BialgebraHom conjugate(const BialgebraHom& theta, const Character& g);

/// Witness g with g * t1 = t2 * g among `automorphisms`, if any.
std::optional<Character> gradings_isomorphic(const BialgebraHom& t1, const BialgebraHom& t2,
                                             const std::vector<Character>& automorphisms);
/// Same, enumerating the automorphisms over the presentation's prime field.
std::optional<Character> gradings_isomorphic(const BialgebraHom& t1, const BialgebraHom& t2,
                                             const EnumerationBudget& budget = {});

/// The automorphism w_g carries every component of t1 onto the same-degree
/// component of t2.
bool witness_maps_components(const Character& g, const BialgebraHom& t1, const BialgebraHom& t2);

struct GradingClass {
  std::vector<BialgebraHom> members;  // members.front() is the representative
  std::vector<std::size_t> component_dims;  // indexed by group element
};

struct GradingClassification {
  std::vector<GradingClass> classes;
  std::size_t diagonal_count = 0;
  std::size_t automorphism_count = 0;
  std::size_t total = 0;
  std::string scope;
};

/// Diagonal gradings closed under conjugation by all automorphisms over F_p,
/// partitioned into isomorphism classes. h is the presentation's algebra.
GradingClassification classify_gradings(const PresentationPtr& pres, const GroupPtr& group,
                                        const EnumerationBudget& budget = {});

/// Group homomorphism G -> Aut(h); images[g] is the automorphism of element g.
class GroupAction {
 public:
  /// Throws ValidationError unless phi(0) = id, every phi(g) is an
  /// automorphism and phi(a + b) = phi(a) phi(b).
  GroupAction(PresentationPtr pres, GroupPtr group, std::vector<Matrix> images);

  const PresentationPtr& presentation() const noexcept { return pres_; }
  const GroupPtr& group() const noexcept { return group_; }
  const std::vector<Character>& images() const noexcept { return images_; }

  friend bool operator==(const GroupAction& a, const GroupAction& b) {
    return a.images_ == b.images_;
  }

 private:
  PresentationPtr pres_;
  GroupPtr group_;
  std::vector<Character> images_;
};

/// theta(x_si) = sum_g phi(g)(s, i) p_g in k[G]*.
BialgebraHom action_to_bihom(const GroupAction& action);
GroupAction bihom_to_action(const BialgebraHom& theta);

/// Every action of the group on h over F_p, determined by the images of the
/// generators; in lexicographic order of generator images.
std::vector<GroupAction> enumerate_actions(const PresentationPtr& pres, const GroupPtr& group,
                                           const EnumerationBudget& budget = {});

}  // namespace ual

#endif  // UAL_GRADCOACT_HPP
