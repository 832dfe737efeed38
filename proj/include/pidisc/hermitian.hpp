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

#ifndef PIDISC_HERMITIAN_HPP
#define PIDISC_HERMITIAN_HPP

#include <complex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace pidisc {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Thrown when an input violates a documented contract (bad dimensions,
/// non-Hermitian entries, malformed files, invalid subsets, ...).
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// Unit-norm complex column vector. The constructor normalizes, so the
/// norm-one invariant holds by construction; near-zero inputs are rejected.
class UnitVector {
 public:
  explicit UnitVector(Vector amplitudes);

  int dim() const { return static_cast<int>(amp_.size()); }
  const Vector& amplitudes() const { return amp_; }
  Complex operator[](int i) const { return amp_(i); }

 private:
  Vector amp_;
};

/// Complex Hermitian operator on a declared bipartite space C^dA (x) C^dB,
/// basis ordering |i>_A (x) |j>_B  ->  row i*dB + j (row-major, A-major).
///
/// Hermiticity is enforced at construction: entries whose asymmetry
/// |H - H^dag| stays below 1e-12 per element are symmetrized to (H + H^dag)/2,
/// anything worse is rejected. Values are immutable afterwards.
///
/// Single-system operators are represented with dim_b = 1.
class HermitianOperator {
 public:
  HermitianOperator(int dim_a, int dim_b, const Matrix& entries);

  int dim_a() const { return dim_a_; }
  int dim_b() const { return dim_b_; }
  int side() const { return dim_a_ * dim_b_; }
  const Matrix& matrix() const { return m_; }
  Complex entry(int r, int c) const { return m_(r, c); }

  static HermitianOperator identity(int dim_a, int dim_b);
  static HermitianOperator zero(int dim_a, int dim_b);
  /// |v><v| on the declared split.
  static HermitianOperator projector(int dim_a, int dim_b, const UnitVector& v);

  HermitianOperator operator+(const HermitianOperator& rhs) const;
  HermitianOperator operator-(const HermitianOperator& rhs) const;
  HermitianOperator operator*(double scale) const;
  friend HermitianOperator operator*(double scale, const HermitianOperator& h) {
    return h * scale;
  }

  double trace() const { return m_.trace().real(); }

 private:
  HermitianOperator(int dim_a, int dim_b, Matrix m, bool /*trusted*/)
      : dim_a_(dim_a), dim_b_(dim_b), m_(std::move(m)) {}

  int dim_a_;
  int dim_b_;
  Matrix m_;
};

/// Eigendecomposition of a Hermitian operator: eigenvalues ascending,
/// eigenvectors as matching orthonormal columns.
struct Eigensystem {
  Eigen::VectorXd eigenvalues;
  Matrix eigenvectors;

  double min_eigenvalue() const { return eigenvalues(0); }
  UnitVector eigenvector(int k) const { return UnitVector(eigenvectors.col(k)); }
};

/// Cyclic Jacobi eigensolver for complex Hermitian matrices. Unconditionally
/// convergent on Hermitian input; intended for the small (side <= 64)
/// operators this library works with.
Eigensystem eig_hermitian(const HermitianOperator& h);

/// Raw-matrix entry point used internally (symmetrizes its input first).
Eigensystem jacobi_eigensystem(Matrix a);

/// Kronecker product in the declared basis ordering; the result's bipartite
/// split is (total dim of a, total dim of b).
HermitianOperator tensor(const HermitianOperator& a, const HermitianOperator& b);

/// Transpose of the B-subsystem indices. An involution, bit-exact.
HermitianOperator partial_transpose(const HermitianOperator& h);

/// X_b with entries <i|_A <b| H |j>_A |b>; Hermitian on C^dA by construction.
HermitianOperator partial_contraction_b(const HermitianOperator& h, const UnitVector& b);
/// Mirror image: contracts the A side with |a>, leaving an operator on C^dB.
HermitianOperator partial_contraction_a(const HermitianOperator& h, const UnitVector& a);

/// Sum of |eigenvalue| over the spectrum.
double trace_norm(const HermitianOperator& h);

/// Tr(AB); real for Hermitian arguments.
double inner(const HermitianOperator& a, const HermitianOperator& b);

/// <v|H|v>, real for Hermitian H.
double expectation(const HermitianOperator& h, const UnitVector& v);

/// Kronecker product of unit vectors, |a> (x) |b>.
UnitVector tensor(const UnitVector& a, const UnitVector& b);

}  // namespace pidisc

#endif  // PIDISC_HERMITIAN_HPP
