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

#include "etcs/rational_matrix.h"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "etcs/error.h"

namespace etcs {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

RationalMatrix RationalMatrix::Identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::FromRows(const std::vector<RationalVector>& rows) {
  const std::size_t ncols = rows.empty() ? 0 : rows.front().size();
  RationalMatrix m(rows.size(), ncols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != ncols) {
      throw ValidationError("ragged matrix rows");
    }
    for (std::size_t j = 0; j < ncols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

RationalMatrix RationalMatrix::FromColumns(
    const std::vector<RationalVector>& columns, std::size_t rows) {
  RationalMatrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw ValidationError("ragged columns");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

RationalMatrix RationalMatrix::Transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Rational RationalMatrix::Trace() const {
  Rational t = 0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

bool RationalMatrix::IsZero() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const Rational& x) { return x == 0; });
}

RationalMatrix RationalMatrix::Inverse() const {
  if (!square()) throw ValidationError("inverse of a non-square matrix");
  const std::size_t n = rows_;
  RationalMatrix a = *this;
  RationalMatrix inv = Identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col) == 0) ++pivot;
    if (pivot == n) throw ValidationError("singular matrix");
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(pivot, j), a(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    }
    const Rational scale = 1 / a(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) *= scale;
      inv(col, j) *= scale;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a(i, col) == 0) continue;
      const Rational f = a(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(col, j);
        inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

RationalMatrix RationalMatrix::Block(std::size_t row0, std::size_t col0,
                                     std::size_t nrows,
                                     std::size_t ncols) const {
  RationalMatrix b(nrows, ncols);
  for (std::size_t i = 0; i < nrows; ++i)
    for (std::size_t j = 0; j < ncols; ++j) b(i, j) = (*this)(row0 + i, col0 + j);
  return b;
}

RationalVector RationalMatrix::Column(std::size_t j) const {
  RationalVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& other) const {
  if (cols_ != other.rows_) throw ValidationError("matrix shape mismatch");
  RationalMatrix r(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) r(i, j) += a * other(k, j);
    }
  }
  return r;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw ValidationError("matrix shape mismatch");
  RationalMatrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += other.data_[i];
  return r;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw ValidationError("matrix shape mismatch");
  RationalMatrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= other.data_[i];
  return r;
}

RationalMatrix RationalMatrix::operator*(const Rational& scalar) const {
  RationalMatrix r = *this;
  for (auto& x : r.data_) x *= scalar;
  return r;
}

RationalVector RationalMatrix::operator*(const RationalVector& v) const {
  if (v.size() != cols_) throw ValidationError("vector length mismatch");
  RationalVector r(rows_, Rational(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
  return r;
}

std::string RationalMatrix::DebugString() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) {
      os << (j ? ", " : "") << ToString((*this)(i, j));
    }
    os << "]";
  }
  os << "]";
  return os.str();
}

namespace {

// In-place reduction to reduced row echelon form; returns pivot columns.
std::vector<std::size_t> ReduceRowEchelon(RationalMatrix& a) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t p = row;
    while (p < a.rows() && a(p, col) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != row) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(row, j));
    }
    const Rational scale = 1 / a(row, col);
    for (std::size_t j = col; j < a.cols(); ++j) a(row, j) *= scale;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col) == 0) continue;
      const Rational f = a(i, col);
      for (std::size_t j = col; j < a.cols(); ++j) a(i, j) -= f * a(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t Rank(const RationalMatrix& m) {
  RationalMatrix a = m;
  return ReduceRowEchelon(a).size();
}

std::vector<RationalVector> Kernel(const RationalMatrix& m) {
  RationalMatrix a = m;
  const std::vector<std::size_t> pivots = ReduceRowEchelon(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(a.cols(), Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

Rational Dot(const RationalVector& a, const RationalVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::vector<Integer> PrimitiveIntegral(const RationalVector& v) {
  Integer common_den = 1;
  for (const auto& x : v) common_den = boost::multiprecision::lcm(common_den, Denominator(x));
  std::vector<Integer> out;
  out.reserve(v.size());
  Integer content = 0;
  for (const auto& x : v) {
    out.push_back(Numerator(x) * (common_den / Denominator(x)));
    content = boost::multiprecision::gcd(content, out.back());
  }
  if (content == 0) throw ValidationError("zero vector has no primitive form");
  int lead_sign = 0;
  for (auto& x : out) {
    x /= content;
    if (lead_sign == 0 && x != 0) lead_sign = x.sign();
  }
  if (lead_sign < 0) {
    for (auto& x : out) x = -x;
  }
  return out;
}

// --- Polynomial -----------------------------------------------------------

Polynomial::Polynomial(std::vector<Rational> coefficients)
    : coeffs_(std::move(coefficients)) {
  Trim();
}

Polynomial Polynomial::Monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> coeffs(degree + 1, Rational(0));
  coeffs[degree] = c;
  return Polynomial(std::move(coeffs));
}

Polynomial Polynomial::Linear(const Rational& root) {
  return Polynomial({-root, Rational(1)});
}

void Polynomial::Trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::Evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double Polynomial::Evaluate(double x) const {
  double acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + ToDouble(*it);
  return acc;
}

Polynomial Polynomial::Derivative() const {
  if (coeffs_.size() <= 1) return Polynomial();
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<int>(i);
  return Polynomial(std::move(d));
}

Polynomial Polynomial::Monic() const {
  if (IsZero()) return *this;
  std::vector<Rational> c = coeffs_;
  const Rational lead = c.back();
  for (auto& x : c) x /= lead;
  return Polynomial(std::move(c));
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  std::vector<Rational> c(std::max(coeffs_.size(), other.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) c[i] += other.coeffs_[i];
  return Polynomial(std::move(c));
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  std::vector<Rational> c(std::max(coeffs_.size(), other.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) c[i] -= other.coeffs_[i];
  return Polynomial(std::move(c));
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  if (IsZero() || other.IsZero()) return Polynomial();
  std::vector<Rational> c(coeffs_.size() + other.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j)
      c[i + j] += coeffs_[i] * other.coeffs_[j];
  return Polynomial(std::move(c));
}

std::pair<Polynomial, Polynomial> Polynomial::DivMod(
    const Polynomial& divisor) const {
  if (divisor.IsZero()) throw ValidationError("polynomial division by zero");
  std::vector<Rational> rem = coeffs_;
  const int dd = divisor.Degree();
  if (Degree() < dd) return {Polynomial(), *this};
  std::vector<Rational> quot(Degree() - dd + 1, Rational(0));
  for (int i = Degree(); i >= dd; --i) {
    const Rational f = rem[i] / divisor.Leading();
    quot[i - dd] = f;
    if (f == 0) continue;
    for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= f * divisor.coeffs_[j];
  }
  rem.resize(dd);
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

std::string Polynomial::DebugString(const char* var) const {
  if (IsZero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = Degree(); i >= 0; --i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    const Rational a = c < 0 ? Rational(-c) : c;
    if (a != 1 || i == 0) os << ToString(a);
    if (i > 0) os << var;
    if (i > 1) os << "^" << i;
    first = false;
  }
  return os.str();
}

Polynomial Gcd(Polynomial a, Polynomial b) {
  while (!b.IsZero()) {
    Polynomial r = a.DivMod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.Monic();
}

Polynomial CharacteristicPolynomial(const RationalMatrix& m) {
  if (!m.square()) throw ValidationError("characteristic polynomial of non-square matrix");
  const std::size_t n = m.rows();
  std::vector<Rational> c(n + 1, Rational(0));
  c[n] = 1;
  RationalMatrix mk(n, n);
  const RationalMatrix id = RationalMatrix::Identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = m * mk + id * c[n - k + 1];
    c[n - k] = -(m * mk).Trace() / static_cast<int>(k);
  }
  return Polynomial(std::move(c));
}

RationalMatrix EvaluateAt(const Polynomial& p, const RationalMatrix& m) {
  RationalMatrix acc(m.rows(), m.cols());
  const RationalMatrix id = RationalMatrix::Identity(m.rows());
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = m * acc + id * *it;
  return acc;
}

namespace {

// Trial division is exhaustive below this bound; larger coefficients fall
// back to numerically seeded candidates.
const Integer kDivisorEnumerationLimit = Integer(100000000000000LL);

std::vector<Integer> PositiveDivisors(const Integer& n) {
  std::vector<Integer> small, large;
  const auto v = n.convert_to<std::uint64_t>();
  for (std::uint64_t d = 1; d * d <= v; ++d) {
    if (v % d != 0) continue;
    small.emplace_back(d);
    if (d * d != v) large.emplace_back(v / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

// Primitive integral coefficients proportional to p.
std::vector<Integer> IntegralCoefficients(const Polynomial& p) {
  Integer common_den = 1;
  for (const auto& x : p.coefficients())
    common_den = boost::multiprecision::lcm(common_den, Denominator(x));
  std::vector<Integer> out;
  Integer content = 0;
  for (const auto& x : p.coefficients()) {
    out.push_back(Numerator(x) * (common_den / Denominator(x)));
    content = boost::multiprecision::gcd(content, out.back());
  }
  for (auto& x : out) x /= content;
  return out;
}

// Continued-fraction convergents of x with denominators up to max_den.
std::vector<Rational> Convergents(double x, const Integer& max_den) {
  std::vector<Rational> out;
  Integer h_prev = 1, h = static_cast<long long>(std::floor(x));
  Integer k_prev = 0, k = 1;
  out.emplace_back(h, k);
  double frac = x - std::floor(x);
  for (int iter = 0; iter < 64 && frac > 1e-15; ++iter) {
    const double inv = 1.0 / frac;
    const auto a = static_cast<long long>(std::floor(inv));
    frac = inv - std::floor(inv);
    const Integer h_next = a * h + h_prev;
    const Integer k_next = a * k + k_prev;
    if (k_next > max_den) break;
    h_prev = h; h = h_next;
    k_prev = k; k = k_next;
    out.emplace_back(h, k);
  }
  return out;
}

std::vector<Rational> CandidateRoots(const Polynomial& p) {
  const std::vector<Integer> c = IntegralCoefficients(p);
  const Integer a0 = abs(c.front());
  const Integer an = abs(c.back());
  std::vector<Rational> candidates;
  if (a0 <= kDivisorEnumerationLimit && an <= kDivisorEnumerationLimit) {
    const auto num = PositiveDivisors(a0);
    const auto den = PositiveDivisors(an);
    for (const auto& q : den) {
      for (const auto& pn : num) {
        candidates.emplace_back(pn, q);
        candidates.emplace_back(-pn, q);
      }
    }
    return candidates;
  }
  // Numeric seeding on the square-free part, whose roots are simple.
  const Polynomial sf = p.DivMod(Gcd(p, p.Derivative())).first.Monic();
  const int n = sf.Degree();
  if (n <= 0) return candidates;
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) companion(i, n - 1) = -ToDouble(sf.coefficients()[i]);
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  for (int i = 0; i < n; ++i) {
    const std::complex<double> z = solver.eigenvalues()[i];
    if (std::abs(z.imag()) > 1e-6 * (1 + std::abs(z.real()))) continue;
    for (const auto& r : Convergents(z.real(), an)) candidates.push_back(r);
  }
  return candidates;
}

}  // namespace

RationalFactorization FactorRationalRoots(const Polynomial& p) {
  if (p.IsZero()) throw ValidationError("cannot factor the zero polynomial");
  RationalFactorization out;
  Polynomial rest = p.Monic();
  // Roots at zero first so the constant term of `rest` is nonzero.
  int zero_mult = 0;
  while (rest.Degree() > 0 && rest.coefficients().front() == 0) {
    rest = rest.DivMod(Polynomial::Linear(0)).first;
    ++zero_mult;
  }
  if (zero_mult > 0) out.roots.push_back({Rational(0), zero_mult});
  if (rest.Degree() > 0) {
    std::vector<Rational> candidates = CandidateRoots(rest);
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (const auto& r : candidates) {
      int mult = 0;
      while (rest.Degree() > 0 && rest.Evaluate(r) == 0) {
        rest = rest.DivMod(Polynomial::Linear(r)).first;
        ++mult;
      }
      if (mult > 0) out.roots.push_back({r, mult});
    }
  }
  std::sort(out.roots.begin(), out.roots.end(),
            [](const RationalRoot& a, const RationalRoot& b) { return a.value < b.value; });
  out.remainder = rest.Monic();
  return out;
}

}  // namespace etcs
