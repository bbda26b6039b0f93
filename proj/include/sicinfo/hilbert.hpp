#pragma once

// Dense complex linear algebra on small finite-dimensional Hilbert spaces.
//
// Every operator function goes through the spectral calculus: decompose with
// eigh(), map the eigenvalues, recompose. Dimensions are tiny (d <= 16 in
// practice) so exactness wins over speed.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <string>
#include <vector>

#include "sicinfo/errors.hpp"
#include "sicinfo/tolerances.hpp"

namespace sicinfo {

using Index = Eigen::Index;

template <typename Real>
using CMatrix = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Real>
using CVector = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1>;
template <typename Real>
using RVector = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

/// Largest entrywise modulus of A - A^dagger.
template <typename Derived>
typename Derived::RealScalar hermiticity_defect(const Eigen::MatrixBase<Derived>& a) {
  if (a.size() == 0) return 0;
  return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

/// A d x d complex matrix that is Hermitian within kHermTol.
///
/// The stored matrix is symmetrized on construction, so downstream code may
/// rely on exact Hermiticity.
template <typename Real>
class BasicHermitian {
 public:
  using RealScalar = Real;
  using Matrix = CMatrix<Real>;

  BasicHermitian() = default;

  explicit BasicHermitian(const Matrix& m, Real tol = Real(kHermTol)) {
    if (m.rows() != m.cols() || m.rows() == 0) {
      throw InvalidOperator("operator must be a non-empty square matrix, got " +
                            std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    }
    if (!m.allFinite()) throw InvalidOperator("operator has non-finite entries");
    const Real defect = hermiticity_defect(m);
    if (defect > tol) {
      throw InvalidOperator("operator is not Hermitian (defect " + std::to_string(defect) + ")");
    }
    m_ = (m + m.adjoint()) / Real(2);
  }

  static BasicHermitian identity(Index d) { return BasicHermitian(Matrix::Identity(d, d)); }
  static BasicHermitian zero(Index d) { return BasicHermitian(Matrix::Zero(d, d)); }
  static BasicHermitian diagonal(const RVector<Real>& diag) {
    return BasicHermitian(diag.template cast<std::complex<Real>>().asDiagonal().toDenseMatrix());
  }

  Index dim() const { return m_.rows(); }
  const Matrix& matrix() const { return m_; }
  std::complex<Real> operator()(Index i, Index j) const { return m_(i, j); }
  Real trace() const { return m_.trace().real(); }

  BasicHermitian& operator+=(const BasicHermitian& o) {
    m_ += o.m_;
    return *this;
  }
  BasicHermitian& operator-=(const BasicHermitian& o) {
    m_ -= o.m_;
    return *this;
  }
  BasicHermitian& operator*=(Real s) {
    m_ *= s;
    return *this;
  }
  friend BasicHermitian operator+(BasicHermitian a, const BasicHermitian& b) { return a += b; }
  friend BasicHermitian operator-(BasicHermitian a, const BasicHermitian& b) { return a -= b; }
  friend BasicHermitian operator*(BasicHermitian a, Real s) { return a *= s; }
  friend BasicHermitian operator*(Real s, BasicHermitian a) { return a *= s; }

 private:
  Matrix m_;
};

/// Unit vector in C^d.
template <typename Real>
class BasicPureState {
 public:
  using Vector = CVector<Real>;

  BasicPureState() = default;

  explicit BasicPureState(const Vector& v, Real tol = Real(kNormTol)) : v_(v) {
    if (v.size() == 0) throw InvalidState("state vector is empty");
    if (!v.allFinite()) throw InvalidState("state vector has non-finite entries");
    const Real err = std::abs(v.squaredNorm() - Real(1));
    if (err > tol) {
      throw InvalidState("state vector is not normalized (|norm^2 - 1| = " + std::to_string(err) + ")");
    }
  }

  /// Rescales an arbitrary nonzero vector onto the unit sphere.
  static BasicPureState normalized(const Vector& v) {
    const Real n = v.norm();
    if (!(n > Real(0))) throw InvalidState("cannot normalize the zero vector");
    return BasicPureState(v / n);
  }

  static BasicPureState basis(Index d, Index k) {
    Vector v = Vector::Zero(d);
    v(k) = 1;
    return BasicPureState(v);
  }

  Index dim() const { return v_.size(); }
  const Vector& amplitudes() const { return v_; }
  std::complex<Real> operator()(Index i) const { return v_(i); }

 private:
  Vector v_;
};

/// Eigenvalues in descending order, eigenvectors as matching columns.
template <typename Real>
struct Spectrum {
  RVector<Real> values;
  CMatrix<Real> vectors;
};

namespace detail {

// Rotates the column so its first non-negligible entry is real positive.
template <typename Real>
void normalize_phase(Eigen::Ref<CVector<Real>> v) {
  const Real cutoff = Real(1e-12);
  for (Index i = 0; i < v.size(); ++i) {
    const Real mag = std::abs(v(i));
    if (mag > cutoff) {
      v *= std::conj(v(i)) / mag;
      v(i) = mag;
      return;
    }
  }
}

// Lexicographic "greater than" on (re, im) of the components.
template <typename Real>
bool lex_greater(const CVector<Real>& a, const CVector<Real>& b) {
  const Real eps = Real(1e-12);
  for (Index i = 0; i < a.size(); ++i) {
    if (std::abs(a(i).real() - b(i).real()) > eps) return a(i).real() > b(i).real();
    if (std::abs(a(i).imag() - b(i).imag()) > eps) return a(i).imag() > b(i).imag();
  }
  return false;
}

}  // namespace detail

/// Hermitian eigendecomposition with a deterministic ordering.
///
/// Eigenvalues are sorted descending. Every eigenvector is phase-normalized so
/// its first nonzero component is real positive; within a run of degenerate
/// eigenvalues, vectors are ordered lexicographically (largest first).
template <typename Real>
Spectrum<Real> eigh(const BasicHermitian<Real>& op) {
  Eigen::SelfAdjointEigenSolver<CMatrix<Real>> solver(op.matrix());
  if (solver.info() != Eigen::Success) throw InvalidOperator("eigendecomposition failed");

  const Index d = op.dim();
  Spectrum<Real> out{RVector<Real>(d), CMatrix<Real>(d, d)};
  for (Index k = 0; k < d; ++k) {
    out.values(k) = solver.eigenvalues()(d - 1 - k);
    out.vectors.col(k) = solver.eigenvectors().col(d - 1 - k);
    detail::normalize_phase<Real>(out.vectors.col(k));
  }

  const Real scale = std::max<Real>(Real(1), out.values.cwiseAbs().maxCoeff());
  const Real tie = Real(1e-12) * scale;
  Index begin = 0;
  while (begin < d) {
    Index end = begin + 1;
    while (end < d && std::abs(out.values(end) - out.values(begin)) <= tie) ++end;
    if (end - begin > 1) {
      std::vector<CVector<Real>> cols;
      for (Index k = begin; k < end; ++k) cols.emplace_back(out.vectors.col(k));
      std::stable_sort(cols.begin(), cols.end(), detail::lex_greater<Real>);
      for (Index k = begin; k < end; ++k) out.vectors.col(k) = cols[static_cast<std::size_t>(k - begin)];
    }
    begin = end;
  }
  return out;
}

/// Recomposes sum_k f(lambda_k) v_k v_k^dagger.
template <typename Real, typename Fn>
BasicHermitian<Real> spectral_map(const Spectrum<Real>& s, Fn&& f) {
  RVector<Real> mapped(s.values.size());
  for (Index k = 0; k < s.values.size(); ++k) mapped(k) = f(s.values(k));
  CMatrix<Real> m = s.vectors * mapped.template cast<std::complex<Real>>().asDiagonal() * s.vectors.adjoint();
  return BasicHermitian<Real>(m, Real(1e-8));
}

template <typename Real>
void require_psd(const Spectrum<Real>& s, Real tol = Real(kPsdTol)) {
  if (s.values.size() > 0 && s.values.minCoeff() < -tol) {
    throw NotPositive("operator has negative eigenvalue " + std::to_string(s.values.minCoeff()));
  }
}

template <typename Real>
bool is_psd(const BasicHermitian<Real>& op, Real tol = Real(kPsdTol)) {
  return eigh(op).values.minCoeff() >= -tol;
}

/// Positive square root. Eigenvalues at or below kKernelTol are treated as
/// zero, matching op_inv_sqrt.
template <typename Real>
BasicHermitian<Real> op_sqrt(const BasicHermitian<Real>& op) {
  const auto s = eigh(op);
  require_psd(s);
  return spectral_map(s, [](Real x) { return x > Real(kKernelTol) ? std::sqrt(x) : Real(0); });
}

/// Pseudo-inverse square root: eigenvalues at or below kKernelTol map to 0.
template <typename Real>
BasicHermitian<Real> op_inv_sqrt(const BasicHermitian<Real>& op) {
  const auto s = eigh(op);
  require_psd(s);
  return spectral_map(s, [](Real x) { return x > Real(kKernelTol) ? Real(1) / std::sqrt(x) : Real(0); });
}

/// Orthonormal columns spanning the eigenvectors with eigenvalue > tol, in eigh order.
template <typename Real>
CMatrix<Real> support_basis(const BasicHermitian<Real>& op, Real tol = Real(kKernelTol)) {
  const auto s = eigh(op);
  Index rank = 0;
  while (rank < s.values.size() && s.values(rank) > tol) ++rank;
  return s.vectors.leftCols(rank);
}

template <typename Real>
BasicHermitian<Real> support_projector(const BasicHermitian<Real>& op, Real tol = Real(kKernelTol)) {
  const CMatrix<Real> v = support_basis(op, tol);
  return BasicHermitian<Real>(v * v.adjoint());
}

/// |psi><psi|.
template <typename Real>
BasicHermitian<Real> outer(const BasicPureState<Real>& psi) {
  const auto& v = psi.amplitudes();
  return BasicHermitian<Real>(v * v.adjoint());
}

/// Re Tr[A B] for Hermitian A, B, without forming the product.
template <typename Real>
Real trace_product(const BasicHermitian<Real>& a, const BasicHermitian<Real>& b) {
  if (a.dim() != b.dim()) throw DimMismatch("trace_product: dimension mismatch");
  return a.matrix().cwiseProduct(b.matrix().transpose()).sum().real();
}

/// <psi|A|psi>.
template <typename Real>
Real expectation(const BasicHermitian<Real>& a, const CVector<Real>& psi) {
  return psi.dot(a.matrix() * psi).real();
}

/// A^dagger X A, keeping the result in the Hermitian type.
template <typename Real>
BasicHermitian<Real> congruence(const CMatrix<Real>& a, const BasicHermitian<Real>& x) {
  return BasicHermitian<Real>(a.adjoint() * x.matrix() * a, Real(1e-8));
}

/// B X B for Hermitian B.
template <typename Real>
BasicHermitian<Real> sandwich(const BasicHermitian<Real>& b, const BasicHermitian<Real>& x) {
  return BasicHermitian<Real>(b.matrix() * x.matrix() * b.matrix(), Real(1e-8));
}

using Operator = BasicHermitian<double>;
using PureState = BasicPureState<double>;
using ComplexMatrix = CMatrix<double>;
using ComplexVector = CVector<double>;

}  // namespace sicinfo
