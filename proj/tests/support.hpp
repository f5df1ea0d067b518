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

#ifndef UAL_TESTS_SUPPORT_HPP
#define UAL_TESTS_SUPPORT_HPP

#include <cctype>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "ual/groebner.hpp"
#include "ual/leibniz.hpp"
#include "ual/matrix.hpp"
#include "ual/polynomial.hpp"

namespace ual::test {

inline const Field Q = Field::rational();
inline Field F(std::uint64_t p) { return Field::prime(p); }

/// Parses "X11 - 2*X12*X21^2 + 1/2" in `ring`; Y, Z, ... name later tensor copies.
inline Polynomial poly(const RingPtr& ring, const std::string& text) {
  const auto& grid = ring->grid();
  std::vector<Term> terms;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && text[pos] == ' ') ++pos;
  };
  auto number = [&] {
    std::size_t start = pos;
    while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/'))
      ++pos;
    return text.substr(start, pos - start);
  };
  skip();
  while (pos < text.size()) {
    bool negative = false;
    if (text[pos] == '+' || text[pos] == '-') {
      negative = text[pos] == '-';
      ++pos;
      skip();
    }
    Scalar coeff = ring->field().one();
    Monomial mono(ring->nvars());
    bool first = true;
    while (true) {
      skip();
      if (!first) {
        if (pos < text.size() && text[pos] == '*') {
          ++pos;
          skip();
        } else {
          break;
        }
      }
      first = false;
      if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        coeff *= ring->field().parse(number());
        continue;
      }
      if (pos + 3 > text.size()) throw std::invalid_argument(text);
      const char letter = text[pos];
      const std::uint32_t copy = letter == 'X' ? 0 : static_cast<std::uint32_t>(letter - 'X');
      const std::uint32_t s = static_cast<std::uint32_t>(text[pos + 1] - '1');
      const std::uint32_t i = static_cast<std::uint32_t>(text[pos + 2] - '1');
      if (copy >= grid.copies || s >= grid.rows || i >= grid.cols) throw std::invalid_argument(text);
      pos += 3;
      std::uint16_t e = 1;
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        e = static_cast<std::uint16_t>(std::stoi(number()));
      }
      const auto v = grid.index(copy, s, i);
      mono.set(v, static_cast<std::uint16_t>(mono[v] + e));
    }
    if (negative) coeff = -coeff;
    terms.push_back({std::move(mono), coeff});
    skip();
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

/// Every rows x cols matrix over F_p, in row-major lexicographic order.
inline std::vector<Matrix> all_matrices(std::size_t rows, std::size_t cols, const Field& f) {
  const std::uint64_t p = f.modulus();
  const std::size_t cells = rows * cols;
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < cells; ++k) total *= p;
  std::vector<Matrix> out;
  out.reserve(total);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::vector<Scalar> data(cells, f.zero());
    std::uint64_t c = code;
    for (std::size_t k = cells; k-- > 0;) {
      data[k] = f.from_int(static_cast<long long>(c % p));
      c /= p;
    }
    out.emplace_back(rows, cols, std::move(data));
  }
  return out;
}

/// Brute-force oracle: all Leibniz maps g -> h over F_p.
inline std::vector<Matrix> brute_force_homs(const LeibnizAlgebra& g, const LeibnizAlgebra& h) {
  std::vector<Matrix> out;
  for (auto& m : all_matrices(h.dim(), g.dim(), h.field()))
    if (is_hom(m, g, h)) out.push_back(std::move(m));
  return out;
}

/// Random polynomial with small coefficients and exponents.
inline Polynomial random_poly(const RingPtr& ring, std::mt19937_64& rng, int max_terms = 3,
                              int max_exp = 2) {
  std::uniform_int_distribution<int> nterms(1, max_terms);
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> expo(0, max_exp);
  std::uniform_int_distribution<std::size_t> var(0, ring->nvars() - 1);
  std::vector<Term> terms;
  const int k = nterms(rng);
  for (int t = 0; t < k; ++t) {
    Monomial m(ring->nvars());
    const int factors = expo(rng) + 1;
    for (int f = 0; f < factors; ++f) {
      const auto v = var(rng);
      m.set(v, static_cast<std::uint16_t>(std::min<int>(m[v] + expo(rng), max_exp)));
    }
    int c = coeff(rng);
    if (c == 0) c = 1;
    Scalar sc = ring->field().from_int(c);
    if (!ring->field().is_prime() && coeff(rng) > 1) sc /= ring->field().from_int(2);
    terms.push_back({std::move(m), sc});
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

}  // namespace ual::test

namespace doctest {

template <>
struct StringMaker<ual::Polynomial> {
  static String convert(const ual::Polynomial& p) { return p.to_string().c_str(); }
};

template <>
struct StringMaker<ual::Matrix> {
  static String convert(const ual::Matrix& m) { return m.to_string().c_str(); }
};

template <>
struct StringMaker<ual::Scalar> {
  static String convert(const ual::Scalar& s) { return s.to_string().c_str(); }
};

}  // namespace doctest

#endif  // UAL_TESTS_SUPPORT_HPP
