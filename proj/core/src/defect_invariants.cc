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

#include "etcs/defect_invariants.h"

#include <numeric>

#include "etcs/error.h"
#include "etcs/numeric.h"

namespace etcs {

std::string Residue::ToString() const {
  if (modulus == 0) return std::to_string(value);
  return std::to_string(value) + " mod " + std::to_string(modulus);
}

Residue MakeResidue(std::int64_t value, std::int64_t modulus) {
  if (modulus == 0) return {value, 0};
  return {FloorMod(value, modulus), modulus};
}

void ValidateCoboundary(const CoboundaryData& data) {
  if (data.d < 0 || data.d % 2 != 0) {
    throw ValidationError("d", "divisibility must be even and non-negative");
  }
  if (FloorMod(data.p_sq - data.sigma, 8) != 0) {
    throw ValidationError("p_sq", "p_sq must be congruent to sigma mod 8");
  }
}

std::int64_t DTilde(std::int64_t d) {
  if (d <= 0 || d % 2 != 0) {
    throw ValidationError("d", "d must be even and positive (use the torsion branch for d = 0)");
  }
  return std::lcm<std::int64_t>(4, d);
}

std::int64_t SmoothStructureCount(std::int64_t d) {
  return std::gcd<std::int64_t>(28, DTilde(d) / 4);
}

ClassCount G2ClassCount(std::int64_t d) {
  DTilde(d);
  const std::int64_t per_nu = d / std::gcd<std::int64_t>(d, 112);
  return {per_nu, 24 * per_nu};
}

Residue MilnorLambda(std::int64_t sigma, std::int64_t p1_sq) {
  return MakeResidue(45 * sigma + p1_sq, 7);
}

namespace {

std::int64_t MuModulus(std::int64_t d) {
  return d == 0 ? 28 : SmoothStructureCount(d);
}

}  // namespace

Residue EellsKuiperMu(const CoboundaryData& data) {
  ValidateCoboundary(data);
  return MakeResidue((data.p_sq - data.sigma) / 8, MuModulus(data.d));
}

Residue NuInvariant(std::int64_t chi, std::int64_t n_plus, std::int64_t sigma) {
  return MakeResidue(chi - 2 * n_plus - 3 * sigma, 48);
}

Residue XiInvariant(const CoboundaryData& data) {
  ValidateCoboundary(data);
  const std::int64_t twice = 3 * data.p_sq - 45 * data.sigma;
  if (twice % 2 != 0) throw ValidationError("p_sq", "3 p_sq - 45 sigma must be even");
  const std::int64_t xi = 7 * data.chi - 14 * data.n_plus + twice / 2;
  return MakeResidue(xi, data.d == 0 ? 0 : 3 * DTilde(data.d));
}

bool Relation13Check(std::int64_t xi, std::int64_t nu) {
  return FloorMod(xi - 7 * nu, 12) == 0;
}

Residue MuRecovery(std::int64_t xi, std::int64_t nu, std::int64_t d) {
  if (!Relation13Check(xi, nu)) {
    throw InconsistencyError("xi - 7 nu is not divisible by 12");
  }
  return MakeResidue((xi - 7 * nu) / 12, MuModulus(d));
}

bool ParityCheck(std::int64_t nu, std::int64_t b0, std::int64_t b1,
                 std::int64_t b2, std::int64_t b3) {
  return FloorMod(nu - (b0 + b1 + b2 + b3), 2) == 0;
}

Residue NuFromNuBar(std::int64_t nu_bar, std::int64_t b1) {
  return MakeResidue(nu_bar - 24 * (1 + b1), 48);
}

bool G2BordismCheck(std::int64_t nu) { return FloorMod(nu, 3) == 0; }

ClosedRelationsVerdict ClosedRelationsCheck(std::int64_t sigma, std::int64_t p_sq,
                                            std::int64_t p2, std::int64_t ind_d,
                                            std::int64_t chi, std::int64_t n_plus) {
  ClosedRelationsVerdict v;
  v.signature = 7 * p2 == 4 * p_sq + 45 * sigma;
  v.index = 1440 * ind_d + p2 == 7 * p_sq;
  v.euler = p2 == p_sq + 2 * chi - 4 * n_plus;
  return v;
}

bool EkSolvability(std::int64_t p_sq, std::int64_t sigma) {
  if (FloorMod(p_sq - sigma, 8) != 0) {
    throw ValidationError("p_sq", "p_sq must be congruent to sigma mod 8");
  }
  return FloorMod((p_sq - sigma) / 8, 28) == 0;
}

std::optional<std::int64_t> EkSolutionSearch(std::int64_t p_sq, std::int64_t sigma,
                                             std::int64_t bound) {
  for (std::int64_t ind_d = -bound; ind_d <= bound; ++ind_d) {
    const std::int64_t p2 = 7 * p_sq - 1440 * ind_d;
    if (7 * p2 == 4 * p_sq + 45 * sigma) return ind_d;
  }
  return std::nullopt;
}

bool TcsDValidation(std::int64_t d) {
  return d == 2 || d == 4 || d == 6 || d == 8 || d == 12 || d == 24;
}

}  // namespace etcs
