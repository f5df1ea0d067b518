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

#ifndef UAL_MATRIX_HPP
#define UAL_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ual/field.hpp"

namespace ual {

/// Dense row-major matrix over a Field. A linear map between spaces with
/// chosen bases is stored with column j equal to the image of basis vector j.
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, Field field);
  Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> row_major);

  static Matrix identity(std::size_t n, Field field);
  /// Builds a matrix from integer entries, reduced into the field.
  static Matrix from_ints(Field field,
                          const std::vector<std::vector<long long>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const Field& field() const noexcept { return field_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  const std::vector<Scalar>& data() const noexcept { return data_; }

  std::vector<Scalar> column(std::size_t c) const;
  Matrix transpose() const;
  bool is_zero() const;

  /// Reduced row echelon form; pivot columns are written to `pivots` if given.
  Matrix rref(std::vector<std::size_t>* pivots = nullptr) const;
  std::size_t rank() const;
  std::optional<Matrix> inverse() const;
  /// Columns form a basis of the null space, in reduced form.
  Matrix kernel() const;
  /// Canonical basis of the column space: the transpose of the nonzero rows
  /// of rref(transpose()).
  Matrix column_space() const;
  /// Horizontal concatenation; row counts must agree.
  Matrix hcat(const Matrix& right) const;
  /// True iff every column of `vectors` lies in the column space.
  bool spans(const Matrix& vectors) const;

  std::vector<Scalar> apply(const std::vector<Scalar>& x) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

  std::string to_string() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  Field field_;
  std::vector<Scalar> data_;
};

using LinearMap = Matrix;

}  // namespace ual

#endif  // UAL_MATRIX_HPP
