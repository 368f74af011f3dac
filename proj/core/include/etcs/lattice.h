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

// Integral symmetric bilinear forms and the standard lattices used to model
// the second cohomology of a K3 surface.

#ifndef ETCS_LATTICE_H_
#define ETCS_LATTICE_H_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string_view>
#include <vector>

#include "etcs/numeric.h"
#include "etcs/rational_matrix.h"

namespace etcs {

// Square symmetric integer matrix. Construction validates symmetry.
class GramMatrix {
 public:
  GramMatrix() = default;
  explicit GramMatrix(std::vector<std::vector<Integer>> entries);
  GramMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

  std::size_t rank() const { return entries_.size(); }
  const Integer& operator()(std::size_t i, std::size_t j) const {
    return entries_[i][j];
  }
  const std::vector<std::vector<Integer>>& entries() const { return entries_; }

  RationalMatrix ToRational() const;
  // Principal submatrix on rows/cols [start, start + size).
  GramMatrix Principal(std::size_t start, std::size_t size) const;

  bool operator==(const GramMatrix&) const = default;

 private:
  std::vector<std::vector<Integer>> entries_;
};

struct LatticeSignature {
  int n_pos = 0;
  int n_neg = 0;
  int n_zero = 0;
  bool operator==(const LatticeSignature&) const = default;
};

LatticeSignature Signature(const GramMatrix& g);
// Inertia of a symmetric rational matrix, computed exactly.
LatticeSignature Signature(const RationalMatrix& symmetric);

// Exact determinant (fraction-free Bareiss elimination); 1 for rank 0.
Integer Determinant(const GramMatrix& g);

bool IsEven(const GramMatrix& g);
bool IsUnimodular(const GramMatrix& g);
GramMatrix DirectSum(const GramMatrix& a, const GramMatrix& b);
GramMatrix Negate(const GramMatrix& g);

// S^T g S for an integer matrix S with g.rank() rows.
GramMatrix ChangeBasis(const GramMatrix& g,
                       const std::vector<std::vector<Integer>>& s);

enum class StandardLatticeName { kU, kE8, kE8Neg, kK3 };

// E8 is the Cartan matrix of the E8 root system (diagonal 2, -1 on the
// Dynkin edges, branch at the third node of a chain of seven). K3 is
// U + U + U + E8(-1) + E8(-1).
GramMatrix StandardLattice(StandardLatticeName name);
// Accepts "U", "E8", "E8_neg", "K3"; throws ValidationError otherwise.
GramMatrix StandardLattice(std::string_view name);

}  // namespace etcs

#endif  // ETCS_LATTICE_H_
