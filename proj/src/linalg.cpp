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

#include "trisep/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "trisep/errors.hpp"

namespace trisep {

namespace {

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw BadDimension("matrix shapes differ: " + std::to_string(a.rows()) + "x" +
                       std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) +
                       "x" + std::to_string(b.cols()));
  }
}

void require_hermitian(const ComplexMatrix& h, const Tolerances& tol) {
  if (!h.is_square()) throw BadDimension("Hermitian operand must be square");
  if (!h.is_hermitian(tol.tol_sym)) throw NotHermitian("matrix is not Hermitian");
}

double off_diagonal_mass(const ComplexMatrix& a) {
  double s = 0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

}  // namespace

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> entries) {
  ComplexMatrix m(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

ComplexMatrix ComplexMatrix::from_columns(std::span<const ComplexVector> columns) {
  if (columns.empty()) return {};
  const std::size_t n = columns.front().size();
  ComplexMatrix m(n, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != n) throw BadDimension("columns have unequal length");
    for (std::size_t i = 0; i < n; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

ComplexMatrix ComplexMatrix::outer(std::span<const cplx> v) {
  ComplexMatrix m(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = v[i] * std::conj(v[j]);
  return m;
}

std::size_t ComplexMatrix::dim() const {
  if (!is_square()) throw BadDimension("matrix is not square");
  return rows_;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = std::conj((*this)(i, j));
  return m;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

ComplexMatrix ComplexMatrix::conjugate() const {
  ComplexMatrix m = *this;
  for (auto& z : m.data_) z = std::conj(z);
  return m;
}

cplx ComplexMatrix::trace() const {
  cplx t = 0;
  for (std::size_t i = 0; i < dim(); ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0;
  for (const auto& z : data_) s += std::norm(z);
  return std::sqrt(s);
}

double ComplexMatrix::max_abs() const {
  double m = 0;
  for (const auto& z : data_) m = std::max(m, std::abs(z));
  return m;
}

bool ComplexMatrix::all_finite() const {
  return std::all_of(data_.begin(), data_.end(), [](const cplx& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
  });
}

bool ComplexMatrix::is_hermitian(double tol) const {
  if (!is_square()) return false;
  const double scale = std::max(1.0, max_abs());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i; j < cols_; ++j)
      if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol * scale) return false;
  return true;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_shape(*this, other);
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_shape(*this, other);
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx scalar) {
  for (auto& z : data_) z *= scalar;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) throw BadDimension("inner dimensions differ in product");
  ComplexMatrix m(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const cplx aik = a(i, k);
      if (aik == cplx{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) m(i, j) += aik * b(k, j);
    }
  return m;
}

ComplexVector operator*(const ComplexMatrix& a, std::span<const cplx> v) {
  if (a.cols() != v.size()) throw BadDimension("vector length differs from columns");
  ComplexVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * v[j];
  return out;
}

char party_name(Party p) {
  switch (p) {
    case Party::A:
      return 'A';
    case Party::B:
      return 'B';
    case Party::C:
      return 'C';
  }
  return '?';
}

cplx inner(std::span<const cplx> a, std::span<const cplx> b) {
  if (a.size() != b.size()) throw BadDimension("inner product of unequal lengths");
  cplx s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

double norm(std::span<const cplx> v) { return std::sqrt(std::real(inner(v, v))); }

ComplexVector conj(std::span<const cplx> v) {
  ComplexVector out(v.begin(), v.end());
  for (auto& z : out) z = std::conj(z);
  return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b);
  double m = 0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
  return m;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix m(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ia = 0; ia < a.rows(); ++ia)
    for (std::size_t ja = 0; ja < a.cols(); ++ja)
      for (std::size_t ib = 0; ib < b.rows(); ++ib)
        for (std::size_t jb = 0; jb < b.cols(); ++jb)
          m(ia * b.rows() + ib, ja * b.cols() + jb) = a(ia, ja) * b(ib, jb);
  return m;
}

ComplexVector kron(std::span<const cplx> a, std::span<const cplx> b) {
  ComplexVector out(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i * b.size() + j] = a[i] * b[j];
  return out;
}

EigenSystem hermitian_eigensystem(const ComplexMatrix& h, const Tolerances& tol) {
  require_hermitian(h, tol);
  const std::size_t n = h.dim();
  // Work on the exactly Hermitian part so round-off in the input cannot bias
  // the rotations.
  ComplexMatrix a = (h + h.adjoint()) * cplx{0.5};
  ComplexMatrix v = ComplexMatrix::identity(n);
  const double stop = 1e-14 * std::max(a.frobenius_norm(), 1e-300);

  constexpr int kMaxSweeps = 100;
  for (int sweep = 0; sweep < kMaxSweeps && off_diagonal_mass(a) > stop; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double r = std::abs(a(p, q));
        if (r == 0.0) continue;

        // Rotate the phase of basis vector q so that a(p,q) becomes real.
        const cplx phase = a(p, q) / r;  // e^{i phi}
        const cplx undo = std::conj(phase);
        for (std::size_t k = 0; k < n; ++k) {
          a(k, q) *= undo;
          v(k, q) *= undo;
        }
        for (std::size_t k = 0; k < n; ++k) a(q, k) *= phase;
        a(p, q) = r;
        a(q, p) = r;

        // Real Jacobi rotation zeroing the (p,q) entry.
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * r);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        for (std::size_t k = 0; k < n; ++k) {
          const cplx akp = a(k, p);
          const cplx akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
          const cplx vkp = v(k, p);
          const cplx vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const cplx apk = a(p, k);
          const cplx aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = app - t * r;
        a(q, q) = aqq + t * r;
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a(i, i).real() < a(j, j).real();
  });
  EigenSystem out{std::vector<double>(n), ComplexMatrix(n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
  }
  return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h, const Tolerances& tol) {
  return hermitian_eigensystem(h, tol).values;
}

std::size_t rank(const ComplexMatrix& m, const Tolerances& tol) {
  ComplexMatrix a = m;
  const double threshold = tol.tol_rank * std::max(1.0, m.max_abs());
  std::size_t r = 0;
  for (std::size_t col = 0; col < a.cols() && r < a.rows(); ++col) {
    std::size_t pivot = r;
    for (std::size_t i = r + 1; i < a.rows(); ++i)
      if (std::abs(a(i, col)) > std::abs(a(pivot, col))) pivot = i;
    if (std::abs(a(pivot, col)) <= threshold) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r, j), a(pivot, j));
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      const cplx f = a(i, col) / a(r, col);
      if (f == cplx{}) continue;
      for (std::size_t j = col; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  return r;
}

std::size_t hermitian_rank(const ComplexMatrix& h, const Tolerances& tol) {
  const double threshold = tol.tol_rank * std::max(1.0, h.max_abs());
  const auto values = hermitian_eigenvalues(h, tol);
  return static_cast<std::size_t>(std::count_if(
      values.begin(), values.end(), [&](double x) { return std::abs(x) > threshold; }));
}

bool is_psd(const ComplexMatrix& h, const Tolerances& tol) {
  const auto values = hermitian_eigenvalues(h, tol);
  if (values.empty()) return true;
  return values.front() >= -tol.tol_psd * std::max(1.0, values.back());
}

bool solve_linear(const ComplexMatrix& a, std::span<const cplx> b, ComplexVector& x,
                  const Tolerances& tol) {
  const std::size_t n = a.dim();
  if (b.size() != n) throw BadDimension("right-hand side length differs from matrix");
  ComplexMatrix m = a;
  ComplexVector rhs(b.begin(), b.end());
  const double threshold = tol.tol_rank * std::max(1.0, a.max_abs());
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t i = col + 1; i < n; ++i)
      if (std::abs(m(i, col)) > std::abs(m(pivot, col))) pivot = i;
    if (std::abs(m(pivot, col)) <= threshold) return false;
    for (std::size_t j = 0; j < n; ++j) std::swap(m(col, j), m(pivot, j));
    std::swap(rhs[col], rhs[pivot]);
    for (std::size_t i = col + 1; i < n; ++i) {
      const cplx f = m(i, col) / m(col, col);
      for (std::size_t j = col; j < n; ++j) m(i, j) -= f * m(col, j);
      rhs[i] -= f * rhs[col];
    }
  }
  x.assign(n, 0.0);
  for (std::size_t i = n; i-- > 0;) {
    cplx s = rhs[i];
    for (std::size_t j = i + 1; j < n; ++j) s -= m(i, j) * x[j];
    x[i] = s / m(i, i);
  }
  return true;
}

ComplexMatrix partial_transpose(const ComplexMatrix& rho, Party party) {
  if (rho.rows() != 8 || rho.cols() != 8)
    throw BadDimension("partial transpose needs an 8x8 three-qubit operator");
  const std::size_t bit = party_bit(party);
  ComplexMatrix out(8);
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) {
      // Exchange the party's bit between row and column index.
      const std::size_t si = (i & ~bit) | (j & bit);
      const std::size_t sj = (j & ~bit) | (i & bit);
      out(i, j) = rho(si, sj);
    }
  return out;
}

ComplexMatrix bit_flip(Party party) {
  ComplexMatrix sigma(2);
  sigma(0, 1) = 1.0;
  sigma(1, 0) = 1.0;
  const auto id = ComplexMatrix::identity(2);
  switch (party) {
    case Party::A:
      return kron(kron(sigma, id), id);
    case Party::B:
      return kron(kron(id, sigma), id);
    case Party::C:
      return kron(kron(id, id), sigma);
  }
  return {};
}

}  // namespace trisep
