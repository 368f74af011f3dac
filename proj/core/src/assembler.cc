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

#include "etcs/assembler.h"

#include <cmath>
#include <cstdio>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

#include "etcs/error.h"

namespace etcs {

void ValidateBlock(const BlockRecord& block) {
  if (block.k <= 0) throw ValidationError("k", "must be positive");
  if (std::gcd(block.eps, block.k) != 1) throw ValidationError("eps", "must be a unit modulo k");
  if (!(2 * block.eps > -block.k && 2 * block.eps <= block.k)) {
    throw ValidationError("eps", "representative must lie in (-k/2, k/2]");
  }
  if (block.polarising_gram.rank() == 0) {
    throw ValidationError("polarising_gram", "must have positive rank");
  }
  if (block.fixed_points.k != block.k) {
    throw ValidationError("fixed_points.k", "must equal the block's k");
  }
  if (block.k <= 2 && !block.fixed_points.entries.empty()) {
    throw ValidationError("fixed_points.entries", "must be empty when k <= 2");
  }
}

void ValidateInstance(const EtcsInstance& inst) {
  auto nested = [](const std::string& prefix, const BlockRecord& b) {
    try {
      ValidateBlock(b);
    } catch (const ValidationError& e) {
      throw ValidationError(prefix + "." + e.path(), e.message());
    }
  };
  nested("block_plus", inst.block_plus);
  nested("block_minus", inst.block_minus);
  const GluingValidation v = Validate(inst.gluing);
  if (!v.ok()) throw ValidationError("gluing", "constraints violated: " + v.Failures());
  if (inst.gluing.k_plus != inst.block_plus.k || inst.gluing.eps_plus != inst.block_plus.eps) {
    throw ValidationError("gluing.k_plus", "k_plus and eps_plus must match block_plus");
  }
  if (inst.gluing.k_minus != inst.block_minus.k ||
      inst.gluing.eps_minus != inst.block_minus.eps) {
    throw ValidationError("gluing.k_minus", "k_minus and eps_minus must match block_minus");
  }
  if (inst.configuration) {
    const Configuration& cfg = *inst.configuration;
    if (cfg.Block(Side::kPlus) != inst.block_plus.polarising_gram) {
      throw ValidationError("configuration.gram", "N+ block differs from block_plus.polarising_gram");
    }
    if (cfg.Block(Side::kMinus) != inst.block_minus.polarising_gram) {
      throw ValidationError("configuration.gram", "N- block differs from block_minus.polarising_gram");
    }
  } else if (!inst.overrides.m_rho && !inst.overrides.alpha_minus) {
    throw ValidationError("configuration", "required unless overrides supply m_rho or alpha_minus");
  }
  if (inst.b1 < 0) throw ValidationError("b1", "must be non-negative");
}

bool NuBarReport::operator==(const NuBarReport& o) const {
  return instance == o.instance && theta == o.theta && cos2_theta == o.cos2_theta &&
         rho == o.rho && d_plus == o.d_plus && d_minus == o.d_minus &&
         f_plus.value == o.f_plus.value && f_plus.error_bound == o.f_plus.error_bound &&
         f_minus.value == o.f_minus.value && f_minus.error_bound == o.f_minus.error_bound &&
         rho_term == o.rho_term && m_rho == o.m_rho && m_rho_source == o.m_rho_source &&
         nu_bar_real == o.nu_bar_real && nu_bar == o.nu_bar && b1 == o.b1 &&
         nu_mod48 == o.nu_mod48 && g2_nullbordant == o.g2_nullbordant;
}

namespace {

Rational DedekindTerm(const BlockRecord& block, const char* side) {
  const DedekindSumResult d = DedekindSum(block.fixed_points);
  if (!d.rational) {
    throw InconsistencyError(std::string("Dedekind sum of block_") + side +
                             " did not reconstruct to a rational");
  }
  return *d.rational;
}

RealEstimate TorusTerm(std::int64_t k, std::int64_t eps, const DerivedGeometry& geom,
                       bool plus, double tol) {
  if (k <= 2) return {0.0, 0.0};
  const std::optional<Rational>& s_sq = plus ? geom.s_plus_sq : geom.s_minus_sq;
  if (!s_sq) {
    throw UnsupportedError("torus contribution with k > 2 needs a fixed ratio s^2, which a "
                           "right-angle gluing leaves free");
  }
  return FContribution({k, eps, *s_sq}, tol);
}

}  // namespace

NuBarReport AssembleNuBar(const EtcsInstance& inst, const AssembleOptions& options) {
  ValidateInstance(inst);
  const DerivedGeometry geom = Derive(inst.gluing);
  if (geom.kind == GluingCase::kThetaZeroExcluded) {
    throw ValidationError("gluing.G", geom.reason);
  }
  NuBarReport r;
  r.instance = inst.name;
  r.theta = geom.theta;
  r.cos2_theta = geom.cos2_theta;
  r.rho = kPi - 2 * geom.theta;
  const Rational rho_cos = 2 * geom.cos2_theta - 1;

  if (inst.configuration) {
    const Cos2Spectrum spectrum = GluingAngleCos2(*inst.configuration);
    bool found = false;
    for (const auto& root : spectrum.rational) found = found || root.value == geom.cos2_theta;
    if (!found) {
      throw InconsistencyError("gluing cos^2(theta) = " + ToString(geom.cos2_theta) +
                               " is not an eigenvalue of the configuration");
    }
  }

  r.d_plus = DedekindTerm(inst.block_plus, "plus");
  r.d_minus = DedekindTerm(inst.block_minus, "minus");
  r.f_plus = TorusTerm(inst.gluing.k_plus, inst.gluing.eps_plus, geom, true, options.series_tol);
  r.f_minus = TorusTerm(inst.gluing.k_minus, inst.gluing.eps_minus, geom, false, options.series_tol);
  r.rho_term = -72 * r.rho / kPi;

  if (inst.overrides.m_rho) {
    r.m_rho = *inst.overrides.m_rho;
    r.m_rho_source = "override";
  } else if (inst.overrides.alpha_minus) {
    AngleSpectrum spec;
    spec.alpha_minus = *inst.overrides.alpha_minus;
    r.m_rho = MRho(spec, r.rho, rho_cos);
    r.m_rho_source = "alpha_minus override";
  } else {
    const AngleSpectrum spec = ConfigurationAngles(*inst.configuration);
    if (spec.cos2_theta && *spec.cos2_theta != geom.cos2_theta) {
      throw InconsistencyError("configuration angles match cos^2(theta) = " +
                               ToString(*spec.cos2_theta) + ", gluing has " +
                               ToString(geom.cos2_theta));
    }
    r.m_rho = MRho(spec, r.rho, rho_cos);
    r.m_rho_source = "configuration";
  }

  r.nu_bar_real = ToDouble(r.d_plus) + ToDouble(r.d_minus) + r.f_plus.value + r.f_minus.value +
                  r.rho_term + 3 * r.m_rho;
  const double nearest = std::round(r.nu_bar_real);
  if (std::abs(r.nu_bar_real - nearest) > options.integrality_tol) {
    throw InconsistencyError("nu-bar = " + std::to_string(r.nu_bar_real) +
                             " is not an integer; the input data is inconsistent");
  }
  r.nu_bar = static_cast<std::int64_t>(nearest);
  r.b1 = options.b1.value_or(inst.b1);
  r.nu_mod48 = NuFromNuBar(r.nu_bar, r.b1);
  r.g2_nullbordant = G2BordismCheck(r.nu_mod48.value);
  return r;
}

namespace {

std::string Num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12f", x);
  std::string s = buf;
  if (s.rfind("-0.000000000000", 0) == 0 && s.size() == 15) s = s.substr(1);
  return s;
}

std::string Sci(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.1e", x);
  return buf;
}

}  // namespace

std::string RenderReport(const NuBarReport& r, ReportFormat format) {
  if (format == ReportFormat::kJson) {
    nlohmann::ordered_json j;
    j["schema"] = "etcs/1";
    j["instance"] = r.instance;
    j["theta"] = r.theta;
    j["cos2_theta"] = ToString(r.cos2_theta);
    j["rho"] = r.rho;
    j["D_plus"] = ToString(r.d_plus);
    j["D_minus"] = ToString(r.d_minus);
    j["F_plus"] = {{"value", r.f_plus.value}, {"error_bound", r.f_plus.error_bound}};
    j["F_minus"] = {{"value", r.f_minus.value}, {"error_bound", r.f_minus.error_bound}};
    j["rho_term"] = r.rho_term;
    j["m_rho"] = r.m_rho;
    j["m_rho_source"] = r.m_rho_source;
    j["nu_bar_real"] = r.nu_bar_real;
    j["nu_bar"] = r.nu_bar;
    j["b1"] = r.b1;
    j["nu_mod48"] = r.nu_mod48.value;
    j["g2_nullbordant"] = r.g2_nullbordant;
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "instance: " << r.instance << "\n";
  os << "theta: " << Num(r.theta) << "  [gluing angle, cos^2 = " << ToString(r.cos2_theta) << "]\n";
  os << "rho: " << Num(r.rho) << "  [pi - 2 theta]\n";
  os << "D_plus: " << ToString(r.d_plus) << "  [isolated fixed points, plus block]\n";
  os << "D_minus: " << ToString(r.d_minus) << "  [isolated fixed points, minus block]\n";
  os << "F_plus: " << Num(r.f_plus.value) << " +- " << Sci(r.f_plus.error_bound)
     << "  [eta series, plus torus]\n";
  os << "F_minus: " << Num(r.f_minus.value) << " +- " << Sci(r.f_minus.error_bound)
     << "  [eta series, minus torus]\n";
  os << "rho_term: " << Num(r.rho_term) << "  [-72 rho / pi]\n";
  os << "m_rho: " << r.m_rho << "  [" << r.m_rho_source << "]\n";
  os << "nu_bar_real: " << Num(r.nu_bar_real) << "\n";
  os << "nu_bar: " << r.nu_bar << "\n";
  os << "b1: " << r.b1 << "\n";
  os << "nu_mod48: " << r.nu_mod48.value << "\n";
  os << "g2_nullbordant: " << (r.g2_nullbordant ? "true" : "false") << "\n";
  return os.str();
}

NuBarReport ParseReport(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError("", std::string("JSON parse error: ") + e.what());
  }
  try {
    if (j.at("schema").get<std::string>() != "etcs/1") {
      throw ValidationError("schema", "unsupported schema version");
    }
    NuBarReport r;
    r.instance = j.at("instance").get<std::string>();
    r.theta = j.at("theta").get<double>();
    r.cos2_theta = ParseRational(j.at("cos2_theta").get<std::string>());
    r.rho = j.at("rho").get<double>();
    r.d_plus = ParseRational(j.at("D_plus").get<std::string>());
    r.d_minus = ParseRational(j.at("D_minus").get<std::string>());
    r.f_plus = {j.at("F_plus").at("value").get<double>(),
                j.at("F_plus").at("error_bound").get<double>()};
    r.f_minus = {j.at("F_minus").at("value").get<double>(),
                 j.at("F_minus").at("error_bound").get<double>()};
    r.rho_term = j.at("rho_term").get<double>();
    r.m_rho = j.at("m_rho").get<int>();
    r.m_rho_source = j.at("m_rho_source").get<std::string>();
    r.nu_bar_real = j.at("nu_bar_real").get<double>();
    r.nu_bar = j.at("nu_bar").get<std::int64_t>();
    r.b1 = j.at("b1").get<std::int64_t>();
    r.nu_mod48 = MakeResidue(j.at("nu_mod48").get<std::int64_t>(), 48);
    r.g2_nullbordant = j.at("g2_nullbordant").get<bool>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError("", std::string("malformed report: ") + e.what());
  }
}

CrossCheckResult CrossCheck(const EtcsInstance& inst, const HyperPolygon& polygon,
                            double tol, const AssembleOptions& options) {
  CrossCheckResult out;
  out.report = AssembleNuBar(inst, options);
  const AngleExpr rho{Rational(1), Rational(-2), 0.0};
  out.polygon = NuBarViaPolygon(polygon, rho, out.report.m_rho, out.report.d_plus,
                                out.report.d_minus, out.report.theta);
  out.delta = out.polygon.value - out.report.nu_bar_real;
  out.pass = std::abs(out.delta) <= tol;
  return out;
}

}  // namespace etcs
