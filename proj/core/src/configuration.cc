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

#include "etcs/configuration.h"

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>
#include <utility>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "etcs/error.h"

namespace etcs {

Configuration::Configuration(GramMatrix gram, std::size_t r_plus,
                             std::size_t r_minus)
    : gram_(std::move(gram)), r_plus_(r_plus), r_minus_(r_minus) {
  if (r_plus_ + r_minus_ != gram_.rank()) {
    throw ValidationError("r_plus", "r_plus + r_minus must equal the rank of gram");
  }
  if (r_plus_ == 0 || r_minus_ == 0) {
    throw ValidationError("r_plus", "both lattices must have positive rank");
  }
  if (Determinant(Block(Side::kPlus)) == 0) {
    throw ValidationError("gram", "N+ block is degenerate");
  }
  if (Determinant(Block(Side::kMinus)) == 0) {
    throw ValidationError("gram", "N- block is degenerate");
  }
}

GramMatrix Configuration::Block(Side side) const {
  return side == Side::kPlus ? gram_.Principal(0, r_plus_)
                             : gram_.Principal(r_plus_, r_minus_);
}

RationalMatrix Configuration::Cross() const {
  return gram_.ToRational().Block(0, r_plus_, r_plus_, r_minus_);
}

bool ConditionI(const Configuration& cfg) {
  const LatticeSignature sig = Signature(cfg.gram());
  return sig.n_zero == 0 && sig.n_pos == 2 &&
         sig.n_neg == static_cast<int>(cfg.rank()) - 2;
}

RationalMatrix ProjComposition(const Configuration& cfg, Side side) {
  const RationalMatrix n_plus_inv = cfg.Block(Side::kPlus).ToRational().Inverse();
  const RationalMatrix n_minus_inv = cfg.Block(Side::kMinus).ToRational().Inverse();
  const RationalMatrix b = cfg.Cross();
  if (side == Side::kPlus) return n_plus_inv * b * n_minus_inv * b.Transpose();
  return n_minus_inv * b.Transpose() * n_plus_inv * b;
}

Cos2Spectrum GluingAngleCos2(const Configuration& cfg) {
  RationalFactorization f =
      FactorRationalRoots(CharacteristicPolynomial(ProjComposition(cfg, Side::kPlus)));
  return {std::move(f.roots), std::move(f.remainder)};
}

std::vector<RationalVector> ThetaEigenspace(const Configuration& cfg,
                                            const Rational& c, Side side) {
  const RationalMatrix p = ProjComposition(cfg, side);
  std::vector<RationalVector> basis =
      Kernel(p - RationalMatrix::Identity(p.rows()) * c);
  if (basis.empty()) {
    throw ValidationError("c", ToString(c) + " is not an eigenvalue of the projection composition");
  }
  return basis;
}

bool ConditionII(const Configuration& cfg, const Rational& c, Side side) {
  try {
    return !ThetaEigenspace(cfg, c, side).empty();
  } catch (const ValidationError&) {
    return false;
  }
}

GramMatrix LambdaSumGram(const Configuration& cfg, const Rational& c,
                         Side side) {
  const Side other = side == Side::kPlus ? Side::kMinus : Side::kPlus;
  const std::size_t r_side = side == Side::kPlus ? cfg.r_plus() : cfg.r_minus();
  const std::size_t r_other = side == Side::kPlus ? cfg.r_minus() : cfg.r_plus();
  const std::size_t off_side = side == Side::kPlus ? 0 : cfg.r_plus();
  const std::size_t off_other = side == Side::kPlus ? cfg.r_plus() : 0;

  const std::vector<RationalVector> eig = ThetaEigenspace(cfg, c, other);
  const RationalMatrix e = RationalMatrix::FromColumns(eig, r_other);
  const RationalMatrix n_other = cfg.Block(other).ToRational();
  const std::vector<RationalVector> complement = Kernel(e.Transpose() * n_other);

  // Generators in W coordinates.
  std::vector<std::vector<Integer>> gens;
  for (std::size_t i = 0; i < r_side; ++i) {
    std::vector<Integer> v(cfg.rank(), 0);
    v[off_side + i] = 1;
    gens.push_back(std::move(v));
  }
  for (const auto& w : complement) {
    const std::vector<Integer> prim = PrimitiveIntegral(w);
    std::vector<Integer> v(cfg.rank(), 0);
    for (std::size_t i = 0; i < r_other; ++i) v[off_other + i] = prim[i];
    gens.push_back(std::move(v));
  }
  std::vector<std::vector<Integer>> s(cfg.rank(), std::vector<Integer>(gens.size()));
  for (std::size_t j = 0; j < gens.size(); ++j)
    for (std::size_t i = 0; i < cfg.rank(); ++i) s[i][j] = gens[j][i];
  return ChangeBasis(cfg.gram(), s);
}

namespace {

// Orthogonal projection of W onto N_side, as a matrix on W coordinates.
RationalMatrix Projection(const Configuration& cfg, Side side) {
  const RationalMatrix g = cfg.gram().ToRational();
  const std::size_t off = side == Side::kPlus ? 0 : cfg.r_plus();
  const std::size_t r = side == Side::kPlus ? cfg.r_plus() : cfg.r_minus();
  const RationalMatrix top =
      cfg.Block(side).ToRational().Inverse() * g.Block(off, 0, r, cfg.rank());
  RationalMatrix p(cfg.rank(), cfg.rank());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < cfg.rank(); ++j) p(off + i, j) = top(i, j);
  return p;
}

}  // namespace

RationalMatrix ReflectionProduct(const Configuration& cfg) {
  const std::size_t n = cfg.rank();
  const RationalMatrix id = RationalMatrix::Identity(n);
  const RationalMatrix a_plus = Projection(cfg, Side::kPlus) * Rational(2) - id;
  const RationalMatrix a_minus = Projection(cfg, Side::kMinus) * Rational(2) - id;
  const RationalMatrix r = a_plus * a_minus;
  const RationalMatrix g = cfg.gram().ToRational();
  if (!(r.Transpose() * g * r == g)) {
    throw InconsistencyError("reflection product is not an isometry");
  }
  return r;
}

ConfigAngle ConfigAngle::Zero() { return ConfigAngle{}; }

ConfigAngle ConfigAngle::Pi() {
  ConfigAngle a;
  a.kind = Kind::kPi;
  a.two_cos = -2;
  a.radians = kPi;
  return a;
}

ConfigAngle ConfigAngle::Exact(const Rational& two_cos, int sign) {
  ConfigAngle a;
  a.kind = Kind::kExact;
  a.two_cos = two_cos;
  a.sign = sign;
  a.radians = sign * std::acos(ToDouble(two_cos) / 2);
  return a;
}

ConfigAngle ConfigAngle::Float(double radians) {
  ConfigAngle a;
  a.kind = Kind::kFloat;
  a.radians = radians;
  a.sign = radians > 0 ? 1 : (radians < 0 ? -1 : 0);
  return a;
}

bool ConfigAngle::operator==(const ConfigAngle& other) const {
  if (kind != other.kind) return false;
  switch (kind) {
    case Kind::kZero:
    case Kind::kPi:
      return true;
    case Kind::kExact:
      return two_cos == other.two_cos && sign == other.sign;
    case Kind::kFloat:
      return radians == other.radians;
  }
  return false;
}

namespace {

struct Split {
  std::vector<ConfigAngle> plus;
  std::vector<ConfigAngle> minus;
};

// Signature of the Gram matrix restricted to the span of the given vectors.
LatticeSignature RestrictedSignature(const RationalMatrix& g,
                                     const std::vector<RationalVector>& basis,
                                     std::size_t n) {
  const RationalMatrix v = RationalMatrix::FromColumns(basis, n);
  return Signature(v.Transpose() * g * v);
}

// Palindromic P of degree 2d as x^d Q(x + 1/x); returns Q.
Polynomial TraceReduction(const Polynomial& p) {
  const int deg = p.Degree();
  const auto& a = p.coefficients();
  if (deg % 2 != 0) throw InconsistencyError("odd-degree remainder in reflection spectrum");
  for (int i = 0; i <= deg; ++i) {
    if (a[i] != a[deg - i]) {
      throw InconsistencyError("reflection spectrum is not closed under inversion");
    }
  }
  const int d = deg / 2;
  Polynomial q({a[d]});
  Polynomial s_prev({Rational(2)});
  Polynomial s_cur({Rational(0), Rational(1)});
  const Polynomial y({Rational(0), Rational(1)});
  for (int k = 1; k <= d; ++k) {
    q = q + s_cur * Polynomial({a[d + k]});
    Polynomial s_next = y * s_cur - s_prev;
    s_prev = std::move(s_cur);
    s_cur = std::move(s_next);
  }
  return q;
}

void AppendPairs(std::vector<ConfigAngle>& out, int pairs,
                 const ConfigAngle& positive, const ConfigAngle& negative) {
  for (int i = 0; i < pairs; ++i) {
    out.push_back(positive);
    out.push_back(negative);
  }
}

// Numeric treatment of the eigenvalues 2 cos(alpha) that are roots of q.
void SplitIrrational(const RationalMatrix& r, const RationalMatrix& g,
                     const Polynomial& q, Split& split) {
  const Polynomial sf = q.DivMod(Gcd(q, q.Derivative())).first.Monic();
  const int deg = sf.Degree();
  if (deg <= 0) return;
  const int n = static_cast<int>(r.rows());
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(deg, deg);
  for (int i = 1; i < deg; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < deg; ++i) companion(i, deg - 1) = -ToDouble(sf.coefficients()[i]);
  Eigen::EigenSolver<Eigen::MatrixXd> roots(companion, false);

  Eigen::MatrixXcd rc(n, n);
  Eigen::MatrixXcd gc(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      rc(i, j) = ToDouble(r(i, j));
      gc(i, j) = ToDouble(g(i, j));
    }
  }
  int covered = 0;
  for (int k = 0; k < deg; ++k) {
    const std::complex<double> t = roots.eigenvalues()[k];
    if (std::abs(t.imag()) > 1e-9 || std::abs(t.real()) >= 2.0 - 1e-12) {
      throw InconsistencyError("eigenvalue of the reflection product off the unit circle");
    }
    const double alpha = std::acos(t.real() / 2);
    const std::complex<double> lambda = std::polar(1.0, alpha);
    Eigen::FullPivLU<Eigen::MatrixXcd> lu(rc - lambda * Eigen::MatrixXcd::Identity(n, n));
    lu.setThreshold(1e-8);
    const Eigen::MatrixXcd v = lu.kernel();
    const Eigen::MatrixXcd h = v.adjoint() * gc * v;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> hs(h);
    for (int i = 0; i < hs.eigenvalues().size(); ++i) {
      const double e = hs.eigenvalues()[i];
      if (std::abs(e) < kAngleTolerance) {
        throw InconsistencyError("invariant plane is not definite");
      }
      AppendPairs(e > 0 ? split.plus : split.minus, 1, ConfigAngle::Float(alpha),
                  ConfigAngle::Float(-alpha));
    }
    covered += static_cast<int>(v.cols());
  }
  if (2 * covered != 2 * q.Degree()) {
    throw InconsistencyError("reflection product is not semisimple");
  }
}

double SortKey(const ConfigAngle& a) {
  switch (a.kind) {
    case ConfigAngle::Kind::kZero: return 2.0;
    case ConfigAngle::Kind::kPi: return -2.0;
    case ConfigAngle::Kind::kExact: return ToDouble(a.two_cos);
    case ConfigAngle::Kind::kFloat: return 2 * std::cos(a.radians);
  }
  return 0.0;
}

void SortAngles(std::vector<ConfigAngle>& v) {
  std::stable_sort(v.begin(), v.end(), [](const ConfigAngle& a, const ConfigAngle& b) {
    if (a.kind == ConfigAngle::Kind::kExact && b.kind == ConfigAngle::Kind::kExact &&
        a.two_cos != b.two_cos) {
      return a.two_cos < b.two_cos;
    }
    const double ka = SortKey(a), kb = SortKey(b);
    if (ka != kb) return ka < kb;
    return a.sign > b.sign;
  });
}

// Checks that the positive part is {alpha, -alpha} with cos(alpha) = 2c - 1
// for an eigenvalue c of the projection composition; records c.
void MatchGluingAngle(const Configuration& cfg, AngleSpectrum& spec,
                      const std::vector<ConfigAngle>& w_plus) {
  if (w_plus.size() != 2) throw InconsistencyError("positive part of W is not a plane");
  const ConfigAngle& a = w_plus[0];
  const ConfigAngle& b = w_plus[1];
  const Cos2Spectrum cos2 = GluingAngleCos2(cfg);
  std::optional<Rational> wanted;
  if (a.kind == ConfigAngle::Kind::kPi && b.kind == ConfigAngle::Kind::kPi) {
    wanted = Rational(0);
  } else if (a.kind == ConfigAngle::Kind::kZero && b.kind == ConfigAngle::Kind::kZero) {
    wanted = Rational(1);
  } else if (a.kind == ConfigAngle::Kind::kExact && b.kind == ConfigAngle::Kind::kExact &&
             a.two_cos == b.two_cos && a.sign == -b.sign) {
    wanted = (a.two_cos + 2) / 4;
  }
  if (wanted) {
    for (const auto& root : cos2.rational) {
      if (root.value == *wanted) {
        spec.cos2_theta = *wanted;
        spec.cos2_theta_value = ToDouble(*wanted);
        return;
      }
    }
    throw InconsistencyError("positive configuration angles do not match any cos^2 eigenvalue");
  }
  if (a.kind == ConfigAngle::Kind::kFloat && b.kind == ConfigAngle::Kind::kFloat &&
      std::abs(a.radians + b.radians) < kAngleTolerance) {
    const double target = (std::cos(a.radians) + 1) / 2;
    const Polynomial& irr = cos2.irrational;
    if (irr.Degree() > 0 && std::abs(irr.Evaluate(target)) < 1e-7) {
      spec.cos2_theta_value = target;
      return;
    }
  }
  throw InconsistencyError("positive configuration angles are not of the form {0, +-2 theta}");
}

}  // namespace

AngleSpectrum ConfigurationAngles(const Configuration& cfg) {
  if (!ConditionI(cfg)) {
    throw ValidationError("gram", "configuration violates condition (i): W must have signature (2, r - 2)");
  }
  const std::size_t n = cfg.rank();
  const RationalMatrix r = ReflectionProduct(cfg);
  const RationalMatrix g = cfg.gram().ToRational();
  const RationalMatrix id = RationalMatrix::Identity(n);
  const RationalFactorization f = FactorRationalRoots(CharacteristicPolynomial(r));

  Split split;
  for (const auto& root : f.roots) {
    if (root.value != 1 && root.value != -1) {
      throw InconsistencyError("rational eigenvalue " + ToString(root.value) +
                               " of the reflection product is off the unit circle");
    }
    const std::vector<RationalVector> eig = Kernel(r - id * root.value);
    if (static_cast<int>(eig.size()) != root.multiplicity) {
      throw InconsistencyError("reflection product is not semisimple");
    }
    const LatticeSignature sig = RestrictedSignature(g, eig, n);
    if (sig.n_zero != 0) throw InconsistencyError("degenerate invariant subspace");
    const ConfigAngle angle = root.value == 1 ? ConfigAngle::Zero() : ConfigAngle::Pi();
    split.plus.insert(split.plus.end(), sig.n_pos, angle);
    split.minus.insert(split.minus.end(), sig.n_neg, angle);
  }

  if (f.remainder.Degree() > 0) {
    const Polynomial q = TraceReduction(f.remainder);
    const RationalFactorization qf = FactorRationalRoots(q);
    for (const auto& root : qf.roots) {
      const Rational& t = root.value;
      if (t <= -2 || t >= 2) {
        throw InconsistencyError("eigenvalue of the reflection product off the unit circle");
      }
      const std::vector<RationalVector> eig = Kernel(r * r - r * t + id);
      if (static_cast<int>(eig.size()) != 2 * root.multiplicity) {
        throw InconsistencyError("reflection product is not semisimple");
      }
      const LatticeSignature sig = RestrictedSignature(g, eig, n);
      if (sig.n_zero != 0 || sig.n_pos % 2 != 0 || sig.n_neg % 2 != 0) {
        throw InconsistencyError("invariant planes are not definite");
      }
      AppendPairs(split.plus, sig.n_pos / 2, ConfigAngle::Exact(t, 1), ConfigAngle::Exact(t, -1));
      AppendPairs(split.minus, sig.n_neg / 2, ConfigAngle::Exact(t, 1), ConfigAngle::Exact(t, -1));
    }
    SplitIrrational(r, g, qf.remainder, split);
  }

  SortAngles(split.plus);
  SortAngles(split.minus);
  AngleSpectrum spec;
  MatchGluingAngle(cfg, spec, split.plus);
  if (split.minus.size() > 19) throw ValidationError("gram", "W has rank above 21");
  spec.alpha_plus = split.plus;
  spec.alpha_plus.push_back(ConfigAngle::Zero());
  spec.alpha_minus = split.minus;
  spec.alpha_minus.resize(19, ConfigAngle::Zero());
  return spec;
}

namespace {

// -1, 0, +1 for alpha < beta, alpha == beta, alpha > beta.
int CompareToBeta(const ConfigAngle& a, double beta,
                  const std::optional<Rational>& beta_cos) {
  if (a.kind == ConfigAngle::Kind::kExact && beta_cos) {
    const Rational half = a.two_cos / 2;
    if (half == *beta_cos) return 0;
    return half < *beta_cos ? 1 : -1;
  }
  const double diff = a.radians - beta;
  if (std::abs(diff) <= kAngleTolerance) {
    throw InconsistencyError("configuration angle within tolerance of pi - |rho|; exact data required");
  }
  return diff > 0 ? 1 : -1;
}

}  // namespace

int MRho(const AngleSpectrum& spectrum, double rho,
         const std::optional<Rational>& rho_cos_exact) {
  if (!(rho > -kPi && rho < kPi)) throw ValidationError("rho", "rho must lie in (-pi, pi)");
  if (rho == 0) return 0;
  const double beta = kPi - std::abs(rho);
  int boundary = 0;
  int interior = 0;
  for (const ConfigAngle& a : spectrum.alpha_minus) {
    if (a.kind == ConfigAngle::Kind::kZero || a.sign < 0) continue;
    if (a.kind == ConfigAngle::Kind::kPi) {
      ++boundary;
      continue;
    }
    if (a.kind == ConfigAngle::Kind::kFloat && std::abs(a.radians - kPi) <= kAngleTolerance) {
      ++boundary;
      continue;
    }
    const int cmp = CompareToBeta(a, beta, rho_cos_exact);
    if (cmp == 0) ++boundary;
    else if (cmp > 0) ++interior;
  }
  const int sign = rho > 0 ? 1 : -1;
  return sign * (boundary - 1 + 2 * interior);
}

}  // namespace etcs
