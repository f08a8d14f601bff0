// Copyright 2026 The trisep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace trisep {

using cplx = std::complex<double>;
using ComplexVector = std::vector<cplx>;

/// Numerical thresholds used by the certification routines.
///
/// All thresholds are dimensionless; each operation documents the scale it
/// is applied against (usually max(1, largest entry magnitude)).
struct Tolerances {
  double tol_sym = 1e-10;
  double tol_rank = 1e-9;
  double tol_psd = 1e-9;
  double tol_zero = 1e-9;
};

/// Dense row-major complex matrix.
///
/// Most of the library works with 8x8 square matrices in the lexicographic
/// three-qubit basis |000>, |001>, ..., |111>; rectangular shapes are allowed
/// so that rank tests on sets of vectors can reuse the same carrier.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t dim) : ComplexMatrix(dim, dim) {}
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(std::span<const double> entries);
  /// Builds a matrix whose columns are the given vectors (all equal length).
  static ComplexMatrix from_columns(std::span<const ComplexVector> columns);
  /// |v><v|
  static ComplexMatrix outer(std::span<const cplx> v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  /// Side length; throws BadDimension when not square.
  std::size_t dim() const;

  cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  ComplexMatrix conjugate() const;

  cplx trace() const;
  double frobenius_norm() const;
  double max_abs() const;
  bool all_finite() const;

  /// max_{i,j} |M_ij - conj(M_ji)| <= tol * max(1, max_abs()).
  bool is_hermitian(double tol) const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(cplx scalar);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) {
    return a += b;
  }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) {
    return a -= b;
  }
  friend ComplexMatrix operator*(ComplexMatrix a, cplx s) { return a *= s; }
  friend ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexVector operator*(const ComplexMatrix& a, std::span<const cplx> v);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> data_;
};

/// One of the three qubits of C^2 (x) C^2 (x) C^2. The bit weight of the
/// party in the lexicographic index i = 4 i_A + 2 i_B + i_C is party_bit().
enum class Party { A, B, C };

constexpr std::size_t party_bit(Party p) {
  switch (p) {
    case Party::A:
      return 4;
    case Party::B:
      return 2;
    case Party::C:
      return 1;
  }
  return 0;
}

inline constexpr Party kParties[] = {Party::A, Party::B, Party::C};

char party_name(Party p);

/// <a|b>, conjugate-linear in the first slot.
cplx inner(std::span<const cplx> a, std::span<const cplx> b);
double norm(std::span<const cplx> v);
ComplexVector conj(std::span<const cplx> v);
/// Max |a_ij - b_ij|; shapes must agree.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexVector kron(std::span<const cplx> a, std::span<const cplx> b);

struct EigenSystem {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // column k belongs to values[k]
};

/// Eigen-decomposition of a Hermitian matrix by cyclic complex Jacobi
/// rotations. Throws NotHermitian when the symmetry check fails.
EigenSystem hermitian_eigensystem(const ComplexMatrix& h, const Tolerances& tol = {});
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h,
                                          const Tolerances& tol = {});

/// Number of pivots in Gaussian elimination with partial pivoting whose
/// magnitude exceeds tol_rank * max(1, max_abs(M)). Works for any shape.
std::size_t rank(const ComplexMatrix& m, const Tolerances& tol = {});

/// Rank of a Hermitian matrix counted from its spectrum with the same
/// relative threshold as rank().
std::size_t hermitian_rank(const ComplexMatrix& h, const Tolerances& tol = {});

/// min eigenvalue >= -tol_psd * max(1, max eigenvalue).
bool is_psd(const ComplexMatrix& h, const Tolerances& tol = {});

/// Solves A x = b for square nonsingular A by partial-pivot elimination.
/// Returns false if a pivot falls below tol_rank * max(1, max_abs(A)).
bool solve_linear(const ComplexMatrix& a, std::span<const cplx> b, ComplexVector& x,
                  const Tolerances& tol = {});

/// Partial transpose of an 8x8 three-qubit operator with respect to one
/// party. Throws BadDimension for any other shape.
ComplexMatrix partial_transpose(const ComplexMatrix& rho, Party party);

/// The Pauli X acting on one party, sigma (x) I (x) I and so on.
ComplexMatrix bit_flip(Party party);

}  // namespace trisep
