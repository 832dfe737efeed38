// Copyright 2026 The pidisc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pidisc/hermitian.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace pidisc {

namespace {

constexpr double kHermTol = 1e-12;       // per-element asymmetry allowance
constexpr double kUnitNormTol = 1e-12;   // |norm - 1| allowed before rejection
constexpr int kMaxJacobiSweeps = 64;

}  // namespace

UnitVector::UnitVector(Vector amplitudes) : amp_(std::move(amplitudes)) {
  if (amp_.size() == 0) throw ValidationError("UnitVector: empty amplitude vector");
  const double norm = amp_.norm();
  if (!(norm > 1e-8)) throw ValidationError("UnitVector: amplitudes are (near) zero");
  amp_ /= norm;
}

HermitianOperator::HermitianOperator(int dim_a, int dim_b, const Matrix& entries)
    : dim_a_(dim_a), dim_b_(dim_b) {
  if (dim_a <= 0 || dim_b <= 0)
    throw ValidationError("HermitianOperator: dimensions must be positive");
  const int side = dim_a * dim_b;
  if (entries.rows() != entries.cols())
    throw ValidationError("HermitianOperator: matrix is not square");
  if (entries.rows() != side)
    throw ValidationError("HermitianOperator: side " + std::to_string(entries.rows()) +
                          " does not equal dim_a*dim_b = " + std::to_string(side));
  const double asym = (entries - entries.adjoint()).cwiseAbs().maxCoeff();
  if (asym > 2 * kHermTol)
    throw ValidationError("HermitianOperator: entries are not Hermitian (asymmetry " +
                          std::to_string(asym) + ")");
  m_ = 0.5 * (entries + entries.adjoint());
  // A real diagonal keeps later rotation algebra exact.
  for (int i = 0; i < side; ++i) m_(i, i) = Complex(m_(i, i).real(), 0.0);
}

HermitianOperator HermitianOperator::identity(int dim_a, int dim_b) {
  return HermitianOperator(dim_a, dim_b, Matrix::Identity(dim_a * dim_b, dim_a * dim_b),
                           true);
}

HermitianOperator HermitianOperator::zero(int dim_a, int dim_b) {
  return HermitianOperator(dim_a, dim_b, Matrix::Zero(dim_a * dim_b, dim_a * dim_b), true);
}

HermitianOperator HermitianOperator::projector(int dim_a, int dim_b, const UnitVector& v) {
  if (v.dim() != dim_a * dim_b)
    throw ValidationError("projector: vector dimension does not match dim_a*dim_b");
  const Vector& a = v.amplitudes();
  return HermitianOperator(dim_a, dim_b, a * a.adjoint(), true);
}

HermitianOperator HermitianOperator::operator+(const HermitianOperator& rhs) const {
  if (dim_a_ != rhs.dim_a_ || dim_b_ != rhs.dim_b_)
    throw ValidationError("operator+: dimension mismatch");
  return HermitianOperator(dim_a_, dim_b_, m_ + rhs.m_, true);
}

HermitianOperator HermitianOperator::operator-(const HermitianOperator& rhs) const {
  if (dim_a_ != rhs.dim_a_ || dim_b_ != rhs.dim_b_)
    throw ValidationError("operator-: dimension mismatch");
  return HermitianOperator(dim_a_, dim_b_, m_ - rhs.m_, true);
}

HermitianOperator HermitianOperator::operator*(double scale) const {
  return HermitianOperator(dim_a_, dim_b_, scale * m_, true);
}

Eigensystem jacobi_eigensystem(Matrix a) {
  const int n = static_cast<int>(a.rows());
  a = 0.5 * (a + a.adjoint().eval());
  Matrix v = Matrix::Identity(n, n);
  const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());

  for (int sweep = 0; sweep < kMaxJacobiSweeps; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q) off = std::max(off, std::abs(a(p, q)));
    if (off <= 1e-15 * scale) break;

    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const Complex h = a(p, q);
        const double ah = std::abs(h);
        if (ah <= 1e-18 * scale) {
          a(p, q) = a(q, p) = Complex(0, 0);
          continue;
        }
        // Phase out the pivot, then a real 2x2 rotation annihilates it.
        const Complex ph = h / ah;  // e^{i arg h}
        const double alpha = a(p, p).real();
        const double beta = a(q, q).real();
        const double theta = (beta - alpha) / (2.0 * ah);
        const double t = (theta >= 0.0)
                             ? -1.0 / (theta + std::sqrt(theta * theta + 1.0))
                             : 1.0 / (-theta + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const Complex phc = std::conj(ph);

        // Columns: X <- X U  with  U = [[c, -s], [s*conj(ph), c*conj(ph)]].
        for (int k = 0; k < n; ++k) {
          const Complex xp = a(k, p);
          const Complex xq = a(k, q);
          a(k, p) = c * xp + s * phc * xq;
          a(k, q) = -s * xp + c * phc * xq;
        }
        // Rows: X <- U^dag X.
        for (int k = 0; k < n; ++k) {
          const Complex xp = a(p, k);
          const Complex xq = a(q, k);
          a(p, k) = c * xp + s * ph * xq;
          a(q, k) = -s * xp + c * ph * xq;
        }
        a(p, q) = a(q, p) = Complex(0, 0);
        a(p, p) = Complex(a(p, p).real(), 0);
        a(q, q) = Complex(a(q, q).real(), 0);

        for (int k = 0; k < n; ++k) {
          const Complex vp = v(k, p);
          const Complex vq = v(k, q);
          v(k, p) = c * vp + s * phc * vq;
          v(k, q) = -s * vp + c * phc * vq;
        }
      }
    }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return a(i, i).real() < a(j, j).real(); });

  Eigensystem out;
  out.eigenvalues.resize(n);
  out.eigenvectors.resize(n, n);
  for (int k = 0; k < n; ++k) {
    out.eigenvalues(k) = a(order[k], order[k]).real();
    out.eigenvectors.col(k) = v.col(order[k]);
  }
  return out;
}

Eigensystem eig_hermitian(const HermitianOperator& h) { return jacobi_eigensystem(h.matrix()); }

HermitianOperator tensor(const HermitianOperator& a, const HermitianOperator& b) {
  const int na = a.side();
  const int nb = b.side();
  Matrix out(na * nb, na * nb);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < na; ++j)
      out.block(i * nb, j * nb, nb, nb) = a.entry(i, j) * b.matrix();
  return HermitianOperator(na, nb, out);
}

HermitianOperator partial_transpose(const HermitianOperator& h) {
  const int da = h.dim_a();
  const int db = h.dim_b();
  Matrix out(h.side(), h.side());
  for (int i = 0; i < da; ++i)
    for (int k = 0; k < da; ++k)
      for (int j = 0; j < db; ++j)
        for (int l = 0; l < db; ++l)
          out(i * db + l, k * db + j) = h.entry(i * db + j, k * db + l);
  return HermitianOperator(da, db, out);
}

HermitianOperator partial_contraction_b(const HermitianOperator& h, const UnitVector& b) {
  const int da = h.dim_a();
  const int db = h.dim_b();
  if (b.dim() != db) throw ValidationError("partial_contraction_b: dimension mismatch");
  Matrix out = Matrix::Zero(da, da);
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < da; ++j) {
      Complex acc(0, 0);
      for (int k = 0; k < db; ++k)
        for (int l = 0; l < db; ++l)
          acc += std::conj(b[k]) * h.entry(i * db + k, j * db + l) * b[l];
      out(i, j) = acc;
    }
  return HermitianOperator(da, 1, out);
}

HermitianOperator partial_contraction_a(const HermitianOperator& h, const UnitVector& a) {
  const int da = h.dim_a();
  const int db = h.dim_b();
  if (a.dim() != da) throw ValidationError("partial_contraction_a: dimension mismatch");
  Matrix out = Matrix::Zero(db, db);
  for (int k = 0; k < db; ++k)
    for (int l = 0; l < db; ++l) {
      Complex acc(0, 0);
      for (int i = 0; i < da; ++i)
        for (int j = 0; j < da; ++j)
          acc += std::conj(a[i]) * h.entry(i * db + k, j * db + l) * a[j];
      out(k, l) = acc;
    }
  return HermitianOperator(db, 1, out);
}

double trace_norm(const HermitianOperator& h) {
  const Eigensystem es = eig_hermitian(h);
  return es.eigenvalues.cwiseAbs().sum();
}

double inner(const HermitianOperator& a, const HermitianOperator& b) {
  if (a.side() != b.side()) throw ValidationError("inner: dimension mismatch");
  return (a.matrix().cwiseProduct(b.matrix().transpose())).sum().real();
}

double expectation(const HermitianOperator& h, const UnitVector& v) {
  if (v.dim() != h.side()) throw ValidationError("expectation: dimension mismatch");
  return (v.amplitudes().adjoint() * h.matrix() * v.amplitudes())(0, 0).real();
}

UnitVector tensor(const UnitVector& a, const UnitVector& b) {
  Vector out(a.dim() * b.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < b.dim(); ++j) out(i * b.dim() + j) = a[i] * b[j];
  return UnitVector(std::move(out));
}

}  // namespace pidisc
