// Copyright 2026 The qdiscord Authors
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

#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace qdiscord {

template <typename Real>
using CMatrix = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Real>
using CVector = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1>;
template <typename Real>
using RVector = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

using ComplexMatrix = CMatrix<double>;
using ComplexVector = CVector<double>;
using RealVector = RVector<double>;
using Complex = std::complex<double>;

/// Thrown when an input violates a documented precondition (shape, hermiticity,
/// normalization, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Subsystem { A, B };

template <typename Real>
struct HermitianEigen {
  RVector<Real> eigenvalues;   // ascending
  CMatrix<Real> eigenvectors;  // columns
};

template <typename Derived>
typename Derived::RealScalar hermiticity_residual(const Eigen::MatrixBase<Derived>& m) {
  return (m - m.adjoint()).norm();
}

/// Cyclic complex Jacobi eigensolver for Hermitian matrices.
///
/// Each rotation first removes the phase of the pivot a_pq with a diagonal
/// unitary, then applies the real symmetric Jacobi rotation that zeroes it.
/// Sweeps stop once the off-diagonal Frobenius norm drops below
/// `tolerance * max(1, ||H||_F)`, or after `max_sweeps`.
template <typename Derived>
HermitianEigen<typename Derived::RealScalar> herm_eig(const Eigen::MatrixBase<Derived>& h,
                                                      typename Derived::RealScalar tolerance = 1e-12,
                                                      int max_sweeps = 100) {
  using Real = typename Derived::RealScalar;
  using Cplx = std::complex<Real>;
  if (h.rows() != h.cols()) {
    throw PreconditionError("herm_eig: matrix is not square");
  }
  if (hermiticity_residual(h) > Real(1e-9)) {
    throw PreconditionError("herm_eig: matrix is not Hermitian");
  }
  const Eigen::Index n = h.rows();
  CMatrix<Real> a = (h + h.adjoint()) / Real(2);
  CMatrix<Real> v = CMatrix<Real>::Identity(n, n);

  const Real scale = std::max(Real(1), a.norm());
  auto off_norm = [&]() {
    Real s = 0;
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j)
        if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
  };

  for (int sweep = 0; sweep < max_sweeps && off_norm() > tolerance * scale; ++sweep) {
    for (Eigen::Index p = 0; p + 1 < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const Real r = std::abs(a(p, q));
        if (r == Real(0)) continue;
        const Cplx phase = a(p, q) / r;  // e^{i phi}
        const Real app = std::real(a(p, p));
        const Real aqq = std::real(a(q, q));
        const Real theta = (aqq - app) / (Real(2) * r);
        Real t = Real(1) / (std::abs(theta) + std::sqrt(theta * theta + Real(1)));
        if (theta < 0) t = -t;
        const Real c = Real(1) / std::sqrt(t * t + Real(1));
        const Real s = t * c;
        // G restricted to (p,q): [[c, s], [-s e^{-i phi}, c e^{-i phi}]]
        const Cplx g_pp = c, g_pq = s;
        const Cplx g_qp = -s * std::conj(phase), g_qq = c * std::conj(phase);
        // a <- a G
        for (Eigen::Index k = 0; k < n; ++k) {
          const Cplx akp = a(k, p), akq = a(k, q);
          a(k, p) = akp * g_pp + akq * g_qp;
          a(k, q) = akp * g_pq + akq * g_qq;
        }
        // a <- G^dagger a
        for (Eigen::Index k = 0; k < n; ++k) {
          const Cplx apk = a(p, k), aqk = a(q, k);
          a(p, k) = std::conj(g_pp) * apk + std::conj(g_qp) * aqk;
          a(q, k) = std::conj(g_pq) * apk + std::conj(g_qq) * aqk;
        }
        a(p, q) = a(q, p) = Cplx(0);
        a(p, p) = std::real(a(p, p));
        a(q, q) = std::real(a(q, q));
        for (Eigen::Index k = 0; k < n; ++k) {
          const Cplx vkp = v(k, p), vkq = v(k, q);
          v(k, p) = vkp * g_pp + vkq * g_qp;
          v(k, q) = vkp * g_pq + vkq * g_qq;
        }
      }
    }
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index(0));
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index i, Eigen::Index j) {
    return std::real(a(i, i)) < std::real(a(j, j));
  });
  HermitianEigen<Real> out;
  out.eigenvalues.resize(n);
  out.eigenvectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    out.eigenvalues(k) = std::real(a(order[k], order[k]));
    out.eigenvectors.col(k) = v.col(order[k]);
  }
  return out;
}

/// Kronecker product A ⊗ B with A-index major ordering.
template <typename DA, typename DB>
CMatrix<typename DA::RealScalar> kron(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  using Real = typename DA::RealScalar;
  CMatrix<Real> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b.template cast<std::complex<Real>>();
  return out;
}

/// Partial trace of an operator on H_A ⊗ H_B over the tagged subsystem.
template <typename Derived>
CMatrix<typename Derived::RealScalar> partial_trace(const Eigen::MatrixBase<Derived>& m, Eigen::Index dim_a,
                                                    Eigen::Index dim_b, Subsystem over) {
  using Real = typename Derived::RealScalar;
  if (dim_a < 1 || dim_b < 1 || m.rows() != dim_a * dim_b || m.cols() != dim_a * dim_b) {
    throw PreconditionError("partial_trace: operator size " + std::to_string(m.rows()) + "x" +
                            std::to_string(m.cols()) + " does not match dims (" + std::to_string(dim_a) +
                            ", " + std::to_string(dim_b) + ")");
  }
  if (over == Subsystem::A) {
    CMatrix<Real> out = CMatrix<Real>::Zero(dim_b, dim_b);
    for (Eigen::Index k = 0; k < dim_a; ++k) out += m.block(k * dim_b, k * dim_b, dim_b, dim_b);
    return out;
  }
  CMatrix<Real> out(dim_a, dim_a);
  for (Eigen::Index i = 0; i < dim_a; ++i)
    for (Eigen::Index j = 0; j < dim_a; ++j) out(i, j) = m.block(i * dim_b, j * dim_b, dim_b, dim_b).trace();
  return out;
}

/// Extends the orthonormal columns of `cols` to a square unitary whose leading
/// columns equal the input. Candidates are canonical basis vectors, orthogonalized
/// by two passes of modified Gram–Schmidt and dropped when their residual norm
/// falls below 1e-8.
template <typename Derived>
CMatrix<typename Derived::RealScalar> complete_to_unitary(const Eigen::MatrixBase<Derived>& cols) {
  using Real = typename Derived::RealScalar;
  const Eigen::Index n = cols.rows();
  const Eigen::Index k = cols.cols();
  if (k > n) throw PreconditionError("complete_to_unitary: more columns than rows");
  const CMatrix<Real> gram = cols.adjoint() * cols;
  if ((gram - CMatrix<Real>::Identity(k, k)).norm() > Real(1e-9)) {
    throw PreconditionError("complete_to_unitary: columns are not orthonormal");
  }
  CMatrix<Real> u(n, n);
  u.leftCols(k) = cols;
  Eigen::Index filled = k;
  for (Eigen::Index e = 0; e < n && filled < n; ++e) {
    CVector<Real> cand = CVector<Real>::Unit(n, e);
    for (int pass = 0; pass < 2; ++pass)
      for (Eigen::Index j = 0; j < filled; ++j) cand -= u.col(j) * u.col(j).dot(cand);
    const Real norm = cand.norm();
    if (norm < Real(1e-8)) continue;
    u.col(filled++) = cand / norm;
  }
  if (filled != n) throw std::runtime_error("complete_to_unitary: basis exhausted");
  return u;
}

/// Hermitian square root of a PSD matrix; eigenvalues in [-1e-10, 0) are clamped.
template <typename Derived>
CMatrix<typename Derived::RealScalar> psd_sqrt(const Eigen::MatrixBase<Derived>& m) {
  using Real = typename Derived::RealScalar;
  const auto eig = herm_eig(m);
  RVector<Real> roots = eig.eigenvalues;
  for (Eigen::Index i = 0; i < roots.size(); ++i) {
    if (roots(i) < Real(-1e-10)) throw PreconditionError("psd_sqrt: matrix is not positive semidefinite");
    roots(i) = std::sqrt(std::max(roots(i), Real(0)));
  }
  return eig.eigenvectors * roots.template cast<std::complex<Real>>().asDiagonal() * eig.eigenvectors.adjoint();
}

}  // namespace qdiscord
