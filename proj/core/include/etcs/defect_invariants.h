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

// Coboundary-defect invariants of 7-manifolds (mu, nu, xi, Milnor's lambda),
// their relations, and the class counts they imply.

#ifndef ETCS_DEFECT_INVARIANTS_H_
#define ETCS_DEFECT_INVARIANTS_H_

#include <cstdint>
#include <optional>
#include <string>

namespace etcs {

// Canonical representative in [0, modulus), or an unreduced integer when
// modulus is 0.
struct Residue {
  std::int64_t value = 0;
  std::int64_t modulus = 0;

  std::string ToString() const;
  bool operator==(const Residue&) const = default;
};

Residue MakeResidue(std::int64_t value, std::int64_t modulus);

struct CoboundaryData {
  std::int64_t chi = 0;
  std::int64_t sigma = 0;
  std::int64_t n_plus = 0;
  // Integer representative of (p_W - u)^2.
  std::int64_t p_sq = 0;
  std::optional<std::int64_t> p1_sq;
  // Divisibility of p_M: even, or 0 when p_M is torsion.
  std::int64_t d = 0;
};

// Throws ValidationError when d is odd or negative, or p_sq != sigma mod 8.
void ValidateCoboundary(const CoboundaryData& data);

// lcm(4, d) for even positive d. Throws ValidationError otherwise.
std::int64_t DTilde(std::int64_t d);

// gcd(28, d~/4).
std::int64_t SmoothStructureCount(std::int64_t d);

struct ClassCount {
  std::int64_t per_nu = 0;
  std::int64_t total = 0;
};

// Numerator of d/112 values of xi per value of nu, and 24 times that.
ClassCount G2ClassCount(std::int64_t d);

// (45 sigma + p1^2) mod 7.
Residue MilnorLambda(std::int64_t sigma, std::int64_t p1_sq);

// (p_sq - sigma)/8 modulo gcd(28, d~/4), or modulo 28 when d = 0.
Residue EellsKuiperMu(const CoboundaryData& data);

// (chi - 2 n_plus - 3 sigma) mod 48.
Residue NuInvariant(std::int64_t chi, std::int64_t n_plus, std::int64_t sigma);

// 7 chi - 14 n_plus + (3 p_sq - 45 sigma)/2, reduced mod 3 d~ when d > 0.
Residue XiInvariant(const CoboundaryData& data);

// xi = 7 nu mod 12.
bool Relation13Check(std::int64_t xi, std::int64_t nu);

// (xi - 7 nu)/12 modulo the mu modulus for d. Throws InconsistencyError when
// 12 does not divide xi - 7 nu.
Residue MuRecovery(std::int64_t xi, std::int64_t nu, std::int64_t d);

// nu = b0 + b1 + b2 + b3 mod 2.
bool ParityCheck(std::int64_t nu, std::int64_t b0, std::int64_t b1,
                 std::int64_t b2, std::int64_t b3);

// (nu_bar - 24 (1 + b1)) mod 48.
Residue NuFromNuBar(std::int64_t nu_bar, std::int64_t b1);

// 3 | nu.
bool G2BordismCheck(std::int64_t nu);

struct ClosedRelationsVerdict {
  // 7 p2 = 4 p^2 + 45 sigma
  bool signature = false;
  // 1440 ind D + p2 = 7 p^2
  bool index = false;
  // p2 = p^2 + 2 chi - 4 n_plus
  bool euler = false;

  bool all() const { return signature && index && euler; }
};

ClosedRelationsVerdict ClosedRelationsCheck(std::int64_t sigma, std::int64_t p_sq,
                                            std::int64_t p2, std::int64_t ind_d,
                                            std::int64_t chi, std::int64_t n_plus);

// Whether (ind D, p2) in Z^2 solve the signature and index relations for the
// given (p_sq, sigma): true iff 28 divides (p_sq - sigma)/8. Throws
// ValidationError when p_sq != sigma mod 8.
bool EkSolvability(std::int64_t p_sq, std::int64_t sigma);

// Searches |ind D| <= bound for a solution of the same two relations and
// returns the ind D found.
std::optional<std::int64_t> EkSolutionSearch(std::int64_t p_sq, std::int64_t sigma,
                                             std::int64_t bound);

// d in {2, 4, 6, 8, 12, 24}.
bool TcsDValidation(std::int64_t d);

}  // namespace etcs

#endif  // ETCS_DEFECT_INVARIANTS_H_
