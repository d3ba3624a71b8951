#pragma once

// Dense so(n) matrix algebra: commutators, Frobenius pairings, the rotation
// generator fields sigma_i, and the matrix exponential onto SO(n).
//
// All values are immutable after construction and every function is pure,
// so the whole layer is safe to call from concurrent test runners.

#include <Eigen/Dense>
#include <random>
#include <stdexcept>
#include <vector>

namespace ymlab {

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;

/// Element of so(n). The stored matrix is antisymmetrized on construction,
/// so the invariant A + A^T = 0 holds exactly (bit-level) afterwards.
class SoMatrix {
public:
  SoMatrix() = default;

  explicit SoMatrix(int n) : m_(Mat::Zero(n, n)) {}

  /// Antisymmetrizes the input: A := (M - M^T)/2.
  explicit SoMatrix(const Mat& raw) : m_(0.5 * (raw - raw.transpose())) {}

  /// Trusted constructor for values already exactly antisymmetric
  /// (sums/scalings of SoMatrix stay antisymmetric in floating point).
  static SoMatrix fromAntisymmetric(Mat m) {
    SoMatrix a;
    a.m_ = std::move(m);
    return a;
  }

  int n() const { return static_cast<int>(m_.rows()); }
  const Mat& mat() const { return m_; }

  double operator()(int r, int c) const { return m_(r, c); }

  SoMatrix operator+(const SoMatrix& o) const { return fromAntisymmetric(m_ + o.m_); }
  SoMatrix operator-(const SoMatrix& o) const { return fromAntisymmetric(m_ - o.m_); }
  SoMatrix operator-() const { return fromAntisymmetric(-m_); }
  SoMatrix operator*(double s) const { return fromAntisymmetric(s * m_); }
  SoMatrix& operator+=(const SoMatrix& o) {
    if (m_.size() == 0) m_ = o.m_; else m_ += o.m_;
    return *this;
  }

  double frobeniusNorm() const { return m_.norm(); }
  bool isZero(double tol = 0.0) const { return m_.size() == 0 || m_.norm() <= tol; }

private:
  Mat m_;
};

inline SoMatrix operator*(double s, const SoMatrix& a) { return a * s; }

/// [A, B] = AB - BA. Antisymmetric whenever A, B are.
inline SoMatrix commutator(const SoMatrix& a, const SoMatrix& b) {
  if (a.n() != b.n()) throw std::invalid_argument("commutator: dimension mismatch");
  const Mat p = a.mat() * b.mat();
  return SoMatrix::fromAntisymmetric(p - p.transpose());
}

/// <A, B>_F = tr(A^T B).
inline double frobeniusInner(const SoMatrix& a, const SoMatrix& b) {
  if (a.n() != b.n()) throw std::invalid_argument("frobeniusInner: dimension mismatch");
  return a.mat().cwiseProduct(b.mat()).sum();
}

/// <T, V>_F = sum_alpha tr(T_alpha^T V_alpha) over a shared index set.
inline double frobeniusInner(const std::vector<SoMatrix>& t, const std::vector<SoMatrix>& v) {
  if (t.size() != v.size()) throw std::invalid_argument("frobeniusInner: index-set mismatch");
  double s = 0.0;
  for (std::size_t k = 0; k < t.size(); ++k) s += frobeniusInner(t[k], v[k]);
  return s;
}

inline double frobeniusNorm(const std::vector<SoMatrix>& t) {
  double s = 0.0;
  for (const auto& m : t) s += m.mat().squaredNorm();
  return std::sqrt(s);
}

/// Elementary antisymmetric matrix K_{ij} = e_i e_j^T - e_j e_i^T
/// (zero-based indices).
inline SoMatrix basisK(int n, int i, int j) {
  Mat m = Mat::Zero(n, n);
  m(i, j) = 1.0;
  m(j, i) = -1.0;
  return SoMatrix::fromAntisymmetric(std::move(m));
}

/// Rotation generator field: (sigma_i(y))^mu_nu = delta_{i nu} y^mu - delta_{i mu} y^nu,
/// i.e. sigma_i(y) = y e_i^T - e_i y^T. Linear in y. Zero-based i.
inline SoMatrix sigma(int i, const Vec& y) {
  const int n = static_cast<int>(y.size());
  if (i < 0 || i >= n) throw std::invalid_argument("sigma: coordinate index out of range");
  Mat m = Mat::Zero(n, n);
  m.col(i) = y;
  m.row(i) -= y.transpose();
  m(i, i) = 0.0;
  return SoMatrix::fromAntisymmetric(std::move(m));
}

/// exp(A) for antisymmetric A, via the Hermitian eigendecomposition of iA.
/// The result is orthogonal with determinant 1 to ~1e-14.
inline Mat soExponential(const SoMatrix& a) {
  const int n = a.n();
  using CMat = Eigen::MatrixXcd;
  const std::complex<double> iu(0.0, 1.0);
  CMat h = iu * a.mat().cast<std::complex<double>>();
  Eigen::SelfAdjointEigenSolver<CMat> es(h);
  const auto& lam = es.eigenvalues();
  CMat phase = CMat::Zero(n, n);
  for (int k = 0; k < n; ++k) phase(k, k) = std::exp(-iu * lam(k));
  CMat e = es.eigenvectors() * phase * es.eigenvectors().adjoint();
  return e.real();
}

/// Reproducible random so(n) element: independent uniform entries in [-1, 1],
/// antisymmetrized. Seeded generators are passed in by the caller so every
/// fuzz report can state its seed.
inline SoMatrix randomSo(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Mat m(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) m(r, c) = u(rng);
  return SoMatrix(m);
}

inline Vec randomPoint(int n, double radius, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Vec y(n);
  for (int k = 0; k < n; ++k) y(k) = radius * u(rng);
  return y;
}

} // namespace ymlab
