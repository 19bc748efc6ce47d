// Copyright 2026 The realcyclo Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#ifndef REALCYCLO_DENSE_MATRIX_H_
#define REALCYCLO_DENSE_MATRIX_H_

#include <cstddef>
#include <vector>

namespace realcyclo {

// Row-major dense double matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

  static Matrix Identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix Transpose() const;
  // Rows [r0, r0 + nr) x columns [c0, c0 + nc).
  Matrix Block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

  double FrobeniusNormSquared() const;
  double MaxAbs() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);

// Inverse by LU with partial pivoting. Throws SingularMatrixError when a
// pivot falls below 1e-12 * max|A|.
Matrix Inverse(const Matrix& a);

}  // namespace realcyclo

#endif  // REALCYCLO_DENSE_MATRIX_H_
