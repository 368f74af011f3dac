// Copyright 2026 The etcs Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Exact dense linear algebra over the rationals, sized for the small Gram
// matrices that occur in K3 lattice configurations (rank <= 22).

#ifndef ETCS_RATIONAL_MATRIX_H_
#define ETCS_RATIONAL_MATRIX_H_

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "etcs/numeric.h"

namespace etcs {

using RationalVector = std::vector<Rational>;

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);

  static RationalMatrix Identity(std::size_t n);
  // Rows must all have the same length.
  static RationalMatrix FromRows(const std::vector<RationalVector>& rows);
  // Matrix whose columns are the given vectors (all of length `rows`).
  static RationalMatrix FromColumns(const std::vector<RationalVector>& columns,
                                    std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  const Rational& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  RationalMatrix Transpose() const;
  Rational Trace() const;
  bool IsZero() const;
  // Throws ValidationError when the matrix is singular.
  RationalMatrix Inverse() const;
  RationalMatrix Block(std::size_t row0, std::size_t col0, std::size_t nrows,
                       std::size_t ncols) const;
  RationalVector Column(std::size_t j) const;

  RationalMatrix operator*(const RationalMatrix& other) const;
  RationalMatrix operator+(const RationalMatrix& other) const;
  RationalMatrix operator-(const RationalMatrix& other) const;
  RationalMatrix operator*(const Rational& scalar) const;
  RationalVector operator*(const RationalVector& v) const;
  bool operator==(const RationalMatrix& other) const = default;

  std::string DebugString() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

std::size_t Rank(const RationalMatrix& m);

// Basis of the right null space in reduced-echelon form: one vector per free
// column, with a 1 in that column.
std::vector<RationalVector> Kernel(const RationalMatrix& m);

Rational Dot(const RationalVector& a, const RationalVector& b);

// Scales a nonzero rational vector to the primitive integral vector on the
// same ray, then flips it so the first nonzero entry is positive.
std::vector<Integer> PrimitiveIntegral(const RationalVector& v);

// Polynomial over Q, coefficients stored from the constant term upwards. The
// zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);

  static Polynomial Monomial(const Rational& c, std::size_t degree);
  // x - root
  static Polynomial Linear(const Rational& root);

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  bool IsZero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int Degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& Leading() const { return coeffs_.back(); }
  Rational Evaluate(const Rational& x) const;
  double Evaluate(double x) const;
  Polynomial Derivative() const;
  Polynomial Monic() const;

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  bool operator==(const Polynomial& other) const = default;

  // Euclidean division; divisor must be nonzero.
  std::pair<Polynomial, Polynomial> DivMod(const Polynomial& divisor) const;

  std::string DebugString(const char* var = "x") const;

 private:
  void Trim();
  std::vector<Rational> coeffs_;
};

// Monic greatest common divisor (zero if both are zero).
Polynomial Gcd(Polynomial a, Polynomial b);

// det(x I - m) via Faddeev-LeVerrier; monic of degree m.rows().
Polynomial CharacteristicPolynomial(const RationalMatrix& m);

// p(m) for a square matrix m.
RationalMatrix EvaluateAt(const Polynomial& p, const RationalMatrix& m);

struct RationalRoot {
  Rational value;
  int multiplicity = 0;
  bool operator==(const RationalRoot&) const = default;
};

struct RationalFactorization {
  // Sorted ascending by value.
  std::vector<RationalRoot> roots;
  // Monic cofactor with no rational roots (1 when p splits over Q).
  Polynomial remainder;
};

// Splits off every rational root of a nonzero polynomial.
RationalFactorization FactorRationalRoots(const Polynomial& p);

}  // namespace etcs

#endif  // ETCS_RATIONAL_MATRIX_H_
