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

// Command-line front end. Exit codes: 0 success, 1 invalid input,
// 2 inconsistent results (non-integral nu-bar, failed cross-check or
// relation).

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "etcs/assembler.h"
#include "etcs/configuration.h"
#include "etcs/defect_invariants.h"
#include "etcs/error.h"
#include "etcs/eta_series.h"
#include "etcs/json_io.h"
#include "etcs/lattice.h"
#include "etcs/numeric.h"
#include "etcs/torus_gluing.h"

namespace {

constexpr int kExitInvalid = 1;
constexpr int kExitInconsistent = 2;

std::string Fixed(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12f", x);
  return buf;
}

std::string GramString(const etcs::GramMatrix& g) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < g.rank(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < g.rank(); ++j) os << (j ? ", " : "") << etcs::ToString(g(i, j));
    os << "]";
  }
  os << "]";
  return os.str();
}

std::string AngleString(const etcs::ConfigAngle& a) {
  using Kind = etcs::ConfigAngle::Kind;
  switch (a.kind) {
    case Kind::kZero: return "0";
    case Kind::kPi: return "pi";
    case Kind::kExact:
      return std::string(a.sign < 0 ? "-" : "+") + "arccos(" + etcs::ToString(a.two_cos / 2) + ")";
    case Kind::kFloat: return Fixed(a.radians);
  }
  return "?";
}

std::string GluingString(const etcs::GluingData& g) {
  std::ostringstream os;
  os << "k+=" << g.k_plus << " eps+=" << g.eps_plus << " k-=" << g.k_minus
     << " eps-=" << g.eps_minus << " G=[[" << g.m << ", " << g.p << "], [" << g.n << ", "
     << g.q << "]]";
  return os.str();
}

int NuBar(const std::string& path, std::optional<std::int64_t> b1, double tol, bool json) {
  etcs::AssembleOptions opts;
  opts.b1 = b1;
  opts.integrality_tol = tol;
  etcs::NuBarReport r = etcs::AssembleNuBar(etcs::LoadInstance(path), opts);
  std::cout << etcs::RenderReport(r, json ? etcs::ReportFormat::kJson : etcs::ReportFormat::kText);
  return 0;
}

int CrossCheck(const std::string& instance, const std::string& polygon, double tol) {
  etcs::CrossCheckResult c =
      etcs::CrossCheck(etcs::LoadInstance(instance), etcs::LoadPolygon(polygon), tol);
  const auto& f = c.polygon.f_sum;
  std::cout << "series nu_bar: " << Fixed(c.report.nu_bar_real) << "\n"
            << "polygon area: " << etcs::ToString(f.area.pi_coeff) << " pi "
            << (f.area.theta_coeff < 0 ? "- " : "+ ") << etcs::ToString(abs(f.area.theta_coeff))
            << " theta" << (f.area.radians != 0.0 ? " + " + Fixed(f.area.radians) : "") << "\n"
            << "polygon ell: " << etcs::ToString(f.ell) << "\n"
            << "polygon nu_bar: " << Fixed(c.polygon.value);
  if (c.polygon.exact.IsExactRational())
    std::cout << " (exact " << etcs::ToString(c.polygon.exact.constant) << ")";
  std::cout << "\n"
            << "delta: " << Fixed(c.delta) << "\n"
            << "verdict: " << (c.pass ? "pass" : "fail") << "\n";
  return c.pass ? 0 : kExitInconsistent;
}

int EnumerateGluings(std::int64_t k_plus, std::int64_t k_minus, std::optional<std::int64_t> bound,
                     std::optional<std::int64_t> eps_plus, std::optional<std::int64_t> eps_minus,
                     bool all) {
  if (k_plus < 1 || k_minus < 1) throw etcs::ValidationError("k", "must be positive");
  etcs::EnumerateOptions opts;
  opts.eps_plus = eps_plus;
  opts.eps_minus = eps_minus;
  opts.deduplicate = !all;
  std::int64_t b = bound.value_or(std::max<std::int64_t>(3, k_plus * k_minus));
  auto list = etcs::Enumerate(k_plus, k_minus, b, opts);
  std::cout << (all ? "tuples: " : "classes: ") << list.size() << "\n";
  for (const auto& g : list) {
    etcs::DerivedGeometry d = etcs::Derive(g);
    std::cout << GluingString(g) << " case=" << etcs::GluingCaseName(d.kind)
              << " cos2_theta=" << etcs::ToString(d.cos2_theta) << " theta=" << Fixed(d.theta);
    if (d.s_plus_sq) std::cout << " s+^2=" << etcs::ToString(*d.s_plus_sq);
    if (d.s_minus_sq) std::cout << " s-^2=" << etcs::ToString(*d.s_minus_sq);
    std::cout << "\n";
  }
  return 0;
}

int ConfigCheck(const std::string& path, const std::optional<std::string>& cos2) {
  etcs::Configuration cfg = etcs::LoadConfiguration(path);
  etcs::LatticeSignature s = etcs::Signature(cfg.gram());
  std::cout << "rank: " << cfg.rank() << " (" << cfg.r_plus() << " + " << cfg.r_minus() << ")\n"
            << "signature: (" << s.n_pos << ", " << s.n_neg << ", " << s.n_zero << ")\n";
  bool cond_i = etcs::ConditionI(cfg);
  std::cout << "condition_i: " << (cond_i ? "true" : "false") << "\n";
  etcs::Cos2Spectrum spec = etcs::GluingAngleCos2(cfg);
  std::cout << "cos2_spectrum:";
  for (const auto& r : spec.rational)
    std::cout << " " << etcs::ToString(r.value) << "^" << r.multiplicity;
  if (spec.irrational.Degree() > 0) std::cout << " irrational:" << spec.irrational.DebugString();
  std::cout << "\n";
  if (cond_i) {
    etcs::AngleSpectrum a = etcs::ConfigurationAngles(cfg);
    std::cout << "alpha_plus:";
    for (const auto& x : a.alpha_plus) std::cout << " " << AngleString(x);
    std::cout << "\nalpha_minus:";
    for (const auto& x : a.alpha_minus) std::cout << " " << AngleString(x);
    std::cout << "\n";
    if (a.cos2_theta) std::cout << "cos2_theta: " << etcs::ToString(*a.cos2_theta) << "\n";
  }
  if (cos2) {
    etcs::Rational c = etcs::ParseRational(*cos2);
    bool plus = etcs::ConditionII(cfg, c, etcs::Side::kPlus);
    bool minus = etcs::ConditionII(cfg, c, etcs::Side::kMinus);
    std::cout << "condition_ii_plus: " << (plus ? "true" : "false") << "\n"
              << "condition_ii_minus: " << (minus ? "true" : "false") << "\n";
    if (plus && minus) {
      std::cout << "lambda_plus: " << GramString(etcs::LambdaSumGram(cfg, c, etcs::Side::kPlus)) << "\n"
                << "lambda_minus: " << GramString(etcs::LambdaSumGram(cfg, c, etcs::Side::kMinus))
                << "\n";
    }
    if (!plus || !minus) return kExitInconsistent;
  }
  return cond_i ? 0 : kExitInconsistent;
}

int Classify(std::int64_t b3, std::int64_t d, std::optional<std::int64_t> mu) {
  std::int64_t dt = etcs::DTilde(d);
  std::int64_t count = etcs::SmoothStructureCount(d);
  if (mu && (*mu < 0 || *mu >= count))
    throw etcs::ValidationError("mu", "must lie in [0, " + std::to_string(count) + ")");
  etcs::ClassCount g2 = etcs::G2ClassCount(d);
  std::cout << "b3: " << b3 << "\n"
            << "d: " << d << "\n"
            << "d_tilde: " << dt << "\n"
            << "tcs_possible_d: " << (etcs::TcsDValidation(d) ? "true" : "false") << "\n"
            << "smooth_structures: " << count << "\n"
            << "mu_modulus: " << count << "\n"
            << "nu_modulus: 48\n"
            << "xi_modulus: " << 3 * dt << "\n"
            << "g2_classes_per_nu: " << g2.per_nu << "\n"
            << "g2_classes_total: " << g2.total << "\n";
  if (mu) std::cout << "mu: " << *mu << " mod " << count << "\n";
  return 0;
}

int Eta(std::int64_t k, std::int64_t eps, const std::string& s_sq, double tol) {
  etcs::EtaParams params{k, eps, etcs::ParseRational(s_sq)};
  etcs::RealEstimate small = etcs::FSmall(params, tol);
  etcs::RealEstimate contribution = etcs::FContribution(params, tol);
  std::cout << "c_over_pi: " << etcs::ToString(etcs::CConstantOverPi(k, eps)) << "\n"
            << "F_small: " << Fixed(small.value) << "\n"
            << "F_contribution: " << Fixed(contribution.value) << "\n"
            << "error_bound: " << contribution.error_bound << "\n";
  return 0;
}

int RenderTorus(const std::string& path, const std::string& out,
                const std::optional<std::string>& s_plus_sq) {
  etcs::GluingData g = etcs::LoadGluing(path);
  etcs::DerivedGeometry d = etcs::Derive(g);
  if (d.kind == etcs::GluingCase::kThetaZeroExcluded)
    throw etcs::ValidationError("G", d.reason);
  std::optional<etcs::Rational> s;
  if (s_plus_sq) s = etcs::ParseRational(*s_plus_sq);
  std::string svg = etcs::RenderSvg(etcs::BuildTorusFigure(g, d, s));
  if (out.empty() || out == "-") {
    std::cout << svg;
  } else {
    std::ofstream f(out);
    if (!f) throw etcs::ValidationError("output", "cannot open " + out);
    f << svg;
    std::cout << "wrote " << out << " (theta = " << Fixed(d.theta) << ")\n";
  }
  return 0;
}

int Defect(const etcs::CoboundaryData& data) {
  etcs::ValidateCoboundary(data);
  etcs::Residue mu = etcs::EellsKuiperMu(data);
  etcs::Residue nu = etcs::NuInvariant(data.chi, data.n_plus, data.sigma);
  etcs::Residue xi = etcs::XiInvariant(data);
  bool rel13 = etcs::Relation13Check(xi.value, nu.value);
  bool recovered = rel13 && etcs::MuRecovery(xi.value, nu.value, data.d) == mu;
  std::cout << "mu: " << mu.ToString() << "\n"
            << "nu: " << nu.ToString() << "\n"
            << "xi: " << xi.ToString() << "\n";
  if (data.p1_sq)
    std::cout << "lambda: " << etcs::MilnorLambda(data.sigma, *data.p1_sq).ToString() << "\n";
  std::cout << "g2_nullbordant: " << (etcs::G2BordismCheck(nu.value) ? "true" : "false") << "\n"
            << "relation_xi_7nu_mod_12: " << (rel13 ? "true" : "false") << "\n"
            << "mu_recovery: " << (recovered ? "true" : "false") << "\n";
  return rel13 && recovered ? 0 : kExitInconsistent;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Analytic and topological invariants of extra-twisted connected sums"};
  app.require_subcommand(1);
  std::function<int()> run;

  std::string instance, polygon, config, gluing, out;
  std::optional<std::int64_t> b1, bound, eps_plus, eps_minus, mu, p1_sq;
  std::optional<std::string> cos2, s_plus_sq;
  double tol = 1e-6, series_tol = 1e-12;
  bool json = false, all = false;
  std::int64_t k_plus = 1, k_minus = 1, k = 1, eps = 0, b3 = 0, d = 0;
  std::string s_sq = "1";
  etcs::CoboundaryData data;

  auto* nu_bar = app.add_subcommand("nu-bar", "Assemble nu-bar for an instance");
  nu_bar->add_option("instance", instance, "Instance JSON")->required();
  nu_bar->add_option("--b1", b1, "First Betti number (default from the instance)");
  nu_bar->add_option("--tol", tol, "Integrality tolerance");
  nu_bar->add_flag("--json", json, "Emit JSON");
  nu_bar->callback([&] { run = [&] { return NuBar(instance, b1, tol, json); }; });

  auto* cross = app.add_subcommand("cross-check", "Compare with the hyperbolic polygon route");
  cross->add_option("instance", instance, "Instance JSON")->required();
  cross->add_option("polygon", polygon, "Polygon JSON")->required();
  cross->add_option("--tol", tol, "Allowed difference");
  cross->callback([&] { run = [&] { return CrossCheck(instance, polygon, tol); }; });

  auto* enumerate = app.add_subcommand("enumerate-gluings", "List admissible gluing matrices");
  enumerate->add_option("--k-plus", k_plus)->required();
  enumerate->add_option("--k-minus", k_minus)->required();
  enumerate->add_option("--eps-plus", eps_plus);
  enumerate->add_option("--eps-minus", eps_minus);
  enumerate->add_option("--bound", bound, "Bound on |m|, |n|, |p|, |q|");
  enumerate->add_flag("--all", all, "Do not reduce modulo symmetries");
  enumerate->callback([&] {
    run = [&] { return EnumerateGluings(k_plus, k_minus, bound, eps_plus, eps_minus, all); };
  });

  auto* cfg = app.add_subcommand("config-check", "Inspect a lattice configuration");
  cfg->add_option("configuration", config, "Configuration JSON")->required();
  cfg->add_option("--cos2", cos2, "Candidate cos^2 of the gluing angle, a/b");
  cfg->callback([&] { run = [&] { return ConfigCheck(config, cos2); }; });

  auto* classify = app.add_subcommand("classify", "Class counts for given b3 and d");
  classify->add_option("--b3", b3)->required();
  classify->add_option("--d", d, "Divisibility of p_M")->required();
  classify->add_option("--mu", mu);
  classify->callback([&] { run = [&] { return Classify(b3, d, mu); }; });

  auto* eta = app.add_subcommand("eta", "Torus contribution F_{k,eps}(s)");
  eta->add_option("--k", k)->required();
  eta->add_option("--eps", eps)->required();
  eta->add_option("--s-sq", s_sq, "s^2 as a/b")->required();
  eta->add_option("--tol", series_tol, "Series tolerance");
  eta->callback([&] { run = [&] { return Eta(k, eps, s_sq, series_tol); }; });

  auto* render = app.add_subcommand("render-torus", "Write the torus lattice figure as SVG");
  render->add_option("gluing", gluing, "Gluing JSON")->required();
  render->add_option("-o,--output", out, "Output file, - for stdout");
  render->add_option("--s-plus-sq", s_plus_sq, "Ratio for right-angle gluings");
  render->callback([&] { run = [&] { return RenderTorus(gluing, out, s_plus_sq); }; });

  auto* defect = app.add_subcommand("defect", "Coboundary-defect invariants");
  defect->add_option("--chi", data.chi)->required();
  defect->add_option("--sigma", data.sigma)->required();
  defect->add_option("--n-plus", data.n_plus)->required();
  defect->add_option("--p-sq", data.p_sq)->required();
  defect->add_option("--d", data.d, "0 when p_M is torsion")->required();
  defect->add_option("--p1-sq", p1_sq);
  defect->callback([&] {
    data.p1_sq = p1_sq;
    run = [&] { return Defect(data); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalid;
  }
  try {
    return run();
  } catch (const etcs::InconsistencyError& e) {
    std::cerr << "inconsistent: " << e.what() << "\n";
    return kExitInconsistent;
  } catch (const etcs::UnsupportedError& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const etcs::Error& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitInvalid;
  }
}
