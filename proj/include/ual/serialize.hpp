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

#ifndef UAL_SERIALIZE_HPP
#define UAL_SERIALIZE_HPP

#include <string>
#include <vector>

#include "json.hpp"
#include "ual/gradcoact.hpp"
#include "ual/homspace.hpp"
#include "ual/leibniz.hpp"
#include "ual/polynomial.hpp"
#include "ual/universal.hpp"

namespace ual {

using Json = nlohmann::json;

/// Residues over F_p as integers in [0, p); rationals as "num/den" strings.
Json to_json(const Scalar& c);
Scalar scalar_from_json(const Json& j, const Field& field);

Json to_json(const Field& field);
Field field_from_json(const Json& j);

/// Algebra file format with 1-based indices. With lie_autocomplete, every
/// bracket [i, j] also defines [j, i] = -[i, j]; a conflicting explicit
/// entry is an InputError.
Json to_json(const LeibnizAlgebra& alg);
LeibnizAlgebra algebra_from_json(const Json& j);

/// {name, dim, field, unit, products: [[a, b, [[c, coeff], ...]], ...]}.
Json to_json(const CommutativeAlgebra& alg);
CommutativeAlgebra commutative_algebra_from_json(const Json& j);

/// [[[[s, i, e], ...], coeff], ...] with 1-based s, i. Multi-copy rings
/// append the 1-based copy: [s, i, e, copy].
Json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j, const RingPtr& ring);

/// Array of rows.
Json to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, const Field& field);

Json to_json(const Presentation& pres);

/// {count, elements: [matrix, ...]}.
Json characters_to_json(const std::vector<Character>& chars);
Json matrices_to_json(const std::vector<Matrix>& ms);

Json to_json(const FiniteAbelianGroup& group, std::uint32_t element);
std::uint32_t group_element_from_json(const Json& j, const FiniteAbelianGroup& group);

Json to_json(const Grading& grading);
Grading grading_from_json(const Json& j, const LeibnizAlgebra& h);

Json to_json(const BialgebraHom& theta);
BialgebraHom bihom_from_json(const Json& j, const PresentationPtr& pres);

Json to_json(const GroupAction& action);
GroupAction action_from_json(const Json& j, const PresentationPtr& pres);

}  // namespace ual

#endif  // UAL_SERIALIZE_HPP
