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

// Building block and matching records, and the pipeline assembling the
// analytic invariant nu-bar from them.

#ifndef ETCS_ASSEMBLER_H_
#define ETCS_ASSEMBLER_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "etcs/configuration.h"
#include "etcs/dedekind_sum.h"
#include "etcs/defect_invariants.h"
#include "etcs/eta_series.h"
#include "etcs/hyperbolic.h"
#include "etcs/lattice.h"
#include "etcs/torus_gluing.h"

namespace etcs {

struct BlockRecord {
  std::string name;
  GramMatrix polarising_gram;
  std::int64_t k = 1;
  std::int64_t eps = 0;
  FixedPointSet fixed_points;
  std::string notes;
};

// Throws ValidationError with a field path.
void ValidateBlock(const BlockRecord& block);

struct Overrides {
  std::optional<std::vector<ConfigAngle>> alpha_minus;
  std::optional<int> m_rho;
};

struct EtcsInstance {
  std::string name;
  BlockRecord block_plus;
  BlockRecord block_minus;
  GluingData gluing;
  // May be omitted when an override supplies m_rho or alpha_minus.
  std::optional<Configuration> configuration;
  Overrides overrides;
  std::int64_t b1 = 0;
  std::string notes;
};

// Checks the blocks, the gluing, and that the configuration blocks are the
// polarising lattices. Throws ValidationError with a field path.
void ValidateInstance(const EtcsInstance& inst);

struct AssembleOptions {
  double series_tol = 1e-12;
  double integrality_tol = 1e-6;
  std::optional<std::int64_t> b1;
};

struct NuBarReport {
  std::string instance;
  double theta = 0.0;
  Rational cos2_theta;
  double rho = 0.0;
  Rational d_plus;
  Rational d_minus;
  RealEstimate f_plus;
  RealEstimate f_minus;
  // -72 rho / pi.
  double rho_term = 0.0;
  int m_rho = 0;
  std::string m_rho_source;
  double nu_bar_real = 0.0;
  std::int64_t nu_bar = 0;
  std::int64_t b1 = 0;
  Residue nu_mod48;
  bool g2_nullbordant = false;

  bool operator==(const NuBarReport& other) const;
};

// Throws ValidationError on invalid input, UnsupportedError when a term is
// not determined, and InconsistencyError when the gluing angle is not in the
// configuration's spectrum or the sum is not an integer.
NuBarReport AssembleNuBar(const EtcsInstance& inst,
                          const AssembleOptions& options = {});

enum class ReportFormat { kText, kJson };

// Deterministic rendering; the JSON form round-trips through ParseReport.
std::string RenderReport(const NuBarReport& report, ReportFormat format);
NuBarReport ParseReport(const std::string& json);

struct CrossCheckResult {
  NuBarReport report;
  PolygonNuBar polygon;
  double delta = 0.0;
  bool pass = false;
};

// Compares AssembleNuBar against the polygon route with the same D, m_rho
// and rho = pi - 2 theta.
CrossCheckResult CrossCheck(const EtcsInstance& inst, const HyperPolygon& polygon,
                            double tol = 1e-6,
                            const AssembleOptions& options = {});

}  // namespace etcs

#endif  // ETCS_ASSEMBLER_H_
