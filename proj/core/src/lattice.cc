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

#include "etcs/lattice.h"

#include <string>
#include <utility>

#include "etcs/error.h"

namespace etcs {

GramMatrix::GramMatrix(std::vector<std::vector<Integer>> entries)
    : entries_(std::move(entries)) {
  const std::size_t n = entries_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (entries_[i].size() != n) {
      throw ValidationError("[" + std::to_string(i) + "]",
                            "Gram matrix is not square");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (entries_[i][j] != entries_[j][i]) {
        throw ValidationError(
            "[" + std::to_string(i) + "][" + std::to_string(j) + "]",
            "Gram matrix is not symmetric");
      }
    }
  }
}

namespace {

std::vector<std::vector<Integer>> ToEntries(
    std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  std::vector<std::vector<Integer>> out;
  for (const auto& row : rows) {
    out.emplace_back();
    for (std::int64_t x : row) out.back().emplace_back(x);
  }
  return out;
}

}  // namespace

GramMatrix::GramMatrix(
    std::initializer_list<std::initializer_list<std::int64_t>> rows)
    : GramMatrix(ToEntries(rows)) {}

RationalMatrix GramMatrix::ToRational() const {
  RationalMatrix m(rank(), rank());
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = 0; j < rank(); ++j) m(i, j) = Rational(entries_[i][j]);
  return m;
}

GramMatrix GramMatrix::Principal(std::size_t start, std::size_t size) const {
  if (start + size > rank()) throw ValidationError("principal block out of range");
  std::vector<std::vector<Integer>> out(size, std::vector<Integer>(size));
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) out[i][j] = entries_[start + i][start + j];
  return GramMatrix(std::move(out));
}

LatticeSignature Signature(const RationalMatrix& symmetric) {
  if (!symmetric.square()) throw ValidationError("signature of non-square matrix");
  RationalMatrix a = symmetric;
  std::vector<std::size_t> live(a.rows());
  for (std::size_t i = 0; i < live.size(); ++i) live[i] = i;
  LatticeSignature sig;
  while (!live.empty()) {
    std::size_t pos = live.size();
    for (std::size_t t = 0; t < live.size(); ++t) {
      if (a(live[t], live[t]) != 0) {
        pos = t;
        break;
      }
    }
    if (pos == live.size()) {
      // Zero diagonal: replace e_i by e_i + e_j for some A_ij != 0, which
      // puts 2 A_ij on the diagonal.
      bool found = false;
      for (std::size_t s = 0; s < live.size() && !found; ++s) {
        for (std::size_t t = s + 1; t < live.size() && !found; ++t) {
          const std::size_t i = live[s], j = live[t];
          if (a(i, j) == 0) continue;
          for (std::size_t c : live) a(i, c) += a(j, c);
          for (std::size_t r : live) a(r, i) += a(r, j);
          pos = s;
          found = true;
        }
      }
      if (!found) {
        sig.n_zero += static_cast<int>(live.size());
        break;
      }
    }
    const std::size_t p = live[pos];
    const Rational pivot = a(p, p);
    (pivot > 0 ? sig.n_pos : sig.n_neg) += 1;
    live.erase(live.begin() + static_cast<std::ptrdiff_t>(pos));
    for (std::size_t r : live) {
      if (a(r, p) == 0) continue;
      const Rational f = a(r, p) / pivot;
      for (std::size_t c : live) a(r, c) -= f * a(p, c);
    }
  }
  return sig;
}

LatticeSignature Signature(const GramMatrix& g) {
  return Signature(g.ToRational());
}

Integer Determinant(const GramMatrix& g) {
  const std::size_t n = g.rank();
  if (n == 0) return 1;
  std::vector<std::vector<Integer>> a = g.entries();
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(a[k], a[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

bool IsEven(const GramMatrix& g) {
  for (std::size_t i = 0; i < g.rank(); ++i) {
    if (g(i, i) % 2 != 0) return false;
  }
  return true;
}

bool IsUnimodular(const GramMatrix& g) {
  return abs(Determinant(g)) == 1;
}

GramMatrix DirectSum(const GramMatrix& a, const GramMatrix& b) {
  const std::size_t n = a.rank() + b.rank();
  std::vector<std::vector<Integer>> out(n, std::vector<Integer>(n, 0));
  for (std::size_t i = 0; i < a.rank(); ++i)
    for (std::size_t j = 0; j < a.rank(); ++j) out[i][j] = a(i, j);
  for (std::size_t i = 0; i < b.rank(); ++i)
    for (std::size_t j = 0; j < b.rank(); ++j)
      out[a.rank() + i][a.rank() + j] = b(i, j);
  return GramMatrix(std::move(out));
}

GramMatrix Negate(const GramMatrix& g) {
  std::vector<std::vector<Integer>> out = g.entries();
  for (auto& row : out)
    for (auto& x : row) x = -x;
  return GramMatrix(std::move(out));
}

GramMatrix ChangeBasis(const GramMatrix& g,
                       const std::vector<std::vector<Integer>>& s) {
  const std::size_t n = g.rank();
  if (s.size() != n) throw ValidationError("basis change has wrong row count");
  const std::size_t m = n == 0 ? 0 : s[0].size();
  std::vector<std::vector<Integer>> gs(n, std::vector<Integer>(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < m; ++j) gs[i][j] += g(i, k) * s[k][j];
  std::vector<std::vector<Integer>> out(m, std::vector<Integer>(m, 0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < m; ++j) out[i][j] += s[k][i] * gs[k][j];
  return GramMatrix(std::move(out));
}

namespace {

GramMatrix E8() {
  // Nodes 0..6 form a chain; node 7 attaches to node 4.
  std::vector<std::vector<Integer>> e(8, std::vector<Integer>(8, 0));
  for (int i = 0; i < 8; ++i) e[i][i] = 2;
  auto edge = [&e](int i, int j) { e[i][j] = e[j][i] = -1; };
  for (int i = 0; i + 1 < 7; ++i) edge(i, i + 1);
  edge(4, 7);
  return GramMatrix(std::move(e));
}

}  // namespace

GramMatrix StandardLattice(StandardLatticeName name) {
  switch (name) {
    case StandardLatticeName::kU:
      return GramMatrix{{0, 1}, {1, 0}};
    case StandardLatticeName::kE8:
      return E8();
    case StandardLatticeName::kE8Neg:
      return Negate(E8());
    case StandardLatticeName::kK3: {
      const GramMatrix u = StandardLattice(StandardLatticeName::kU);
      const GramMatrix e8n = Negate(E8());
      return DirectSum(DirectSum(DirectSum(u, u), DirectSum(u, e8n)), e8n);
    }
  }
  throw ValidationError("unknown standard lattice");
}

GramMatrix StandardLattice(std::string_view name) {
  if (name == "U") return StandardLattice(StandardLatticeName::kU);
  if (name == "E8") return StandardLattice(StandardLatticeName::kE8);
  if (name == "E8_neg") return StandardLattice(StandardLatticeName::kE8Neg);
  if (name == "K3") return StandardLattice(StandardLatticeName::kK3);
  throw ValidationError("name", "unknown standard lattice '" + std::string(name) + "'");
}

}  // namespace etcs
