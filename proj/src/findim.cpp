#include "kshift/findim.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include <Eigen/Eigenvalues>
#include <Eigen/Jacobi>
#include <Eigen/SVD>

namespace kshift::findim {

namespace {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;

enum class Region { Inside = 0, Boundary = 1, Outside = 2 };

Region classify(Complex lambda, double c, double tol) {
  const double m = std::abs(lambda);
  if (m < c - tol) return Region::Inside;
  if (m > c + tol) return Region::Outside;
  return Region::Boundary;
}

/// Swap the adjacent diagonal entries k, k+1 of the upper-triangular Schur
/// factor with one Givens rotation, keeping A = U R U^*.
void swap_schur_pair(CMatrix& r, CMatrix& u, Eigen::Index k) {
  Eigen::JacobiRotation<Complex> rot;
  rot.makeGivens(r(k, k + 1), r(k + 1, k + 1) - r(k, k));
  r.applyOnTheLeft(k, k + 1, rot.adjoint());
  r.applyOnTheRight(k, k + 1, rot);
  u.applyOnTheRight(k, k + 1, rot);
  r(k + 1, k) = Complex(0.0);
}

/// Orthonormal basis of the column span, rank decided relative to the largest singular value.
Eigen::MatrixXd real_orthonormal_span(const CMatrix& c) {
  const Eigen::Index n = c.rows();
  if (c.cols() == 0) return Eigen::MatrixXd(n, 0);
  Eigen::MatrixXd m(n, 2 * c.cols());
  m << c.real(), c.imag();
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeThinU);
  const auto& s = svd.singularValues();
  Eigen::Index rank = 0;
  while (rank < s.size() && s(rank) > 1e-8 * std::max(1.0, s(0))) ++rank;
  // A conjugation-closed complex subspace of dimension d has a real basis of size d.
  rank = std::min(rank, c.cols());
  return svd.matrixU().leftCols(rank);
}

double orbit_growth(const CMatrix& block, const Eigen::VectorXcd& y, int steps, double c, bool want_max) {
  Eigen::VectorXcd v = y;
  double best = v.norm();
  for (int i = 0; i < steps; ++i) {
    v = (block * v) / c;
    best = want_max ? std::max(best, v.norm()) : v.norm();
  }
  return best;
}

}  // namespace

SmallOperator::SmallOperator(Eigen::MatrixXd matrix) : matrix_(std::move(matrix)) {
  if (matrix_.rows() != matrix_.cols()) throw std::invalid_argument("SmallOperator: matrix must be square");
  if (matrix_.rows() > kMaxDimension) throw std::invalid_argument("SmallOperator: dimension exceeds 12");
  if (!matrix_.allFinite()) throw std::invalid_argument("SmallOperator: entries must be finite");
}

double SmallOperator::spectral_radius() const {
  if (dim() == 0) return 0.0;
  return Eigen::ComplexEigenSolver<CMatrix>(matrix_.cast<Complex>(), false).eigenvalues().cwiseAbs().maxCoeff();
}

Eigen::MatrixXd SubspaceBasis::projector(Eigen::Index ambient) const {
  if (columns.cols() == 0) return Eigen::MatrixXd::Zero(ambient, ambient);
  return columns * columns.transpose();
}

SubspaceResult s_subspace(const SmallOperator& t, double c, const OracleOptions& options) {
  if (!(c > 0.0)) throw std::invalid_argument("s_subspace: c must be > 0");
  const Eigen::Index n = t.dim();
  SubspaceResult out;
  if (n == 0) return out;

  Eigen::ComplexSchur<CMatrix> schur(t.matrix().cast<Complex>());
  CMatrix r = schur.matrixT();
  CMatrix u = schur.matrixU();

  // Bubble inside eigenvalues to the front, boundary ones next.
  for (Eigen::Index pass = 0; pass < n; ++pass) {
    for (Eigen::Index k = 0; k + 1 < n; ++k) {
      const Region a = classify(r(k, k), c, options.boundary_tolerance);
      const Region b = classify(r(k + 1, k + 1), c, options.boundary_tolerance);
      if (static_cast<int>(a) > static_cast<int>(b)) swap_schur_pair(r, u, k);
    }
  }
  Eigen::Index k_in = 0, k_bd = 0;
  for (Eigen::Index k = 0; k < n; ++k) {
    const Region reg = classify(r(k, k), c, options.boundary_tolerance);
    if (reg == Region::Inside) ++k_in;
    if (reg == Region::Boundary) ++k_bd;
  }

  CMatrix span = u.leftCols(k_in);
  if (k_bd > 0) {
    const CMatrix block = r.block(k_in, k_in, k_bd, k_bd);
    const double scale = std::max(1.0, block.norm());

    // Kernel of (block - lambda) for each cluster of boundary eigenvalues.
    std::vector<Complex> centers;
    for (Eigen::Index k = 0; k < k_bd; ++k) {
      const Complex lam = block(k, k);
      const bool seen = std::any_of(centers.begin(), centers.end(),
                                    [&](Complex z) { return std::abs(z - lam) <= 1e-6 * scale; });
      if (!seen) centers.push_back(lam);
    }
    CMatrix kernel(k_bd, 0);
    for (const Complex lam : centers) {
      const CMatrix shifted = block - lam * CMatrix::Identity(k_bd, k_bd);
      Eigen::JacobiSVD<CMatrix> svd(shifted, Eigen::ComputeFullV);
      const auto& s = svd.singularValues();
      for (Eigen::Index j = 0; j < k_bd; ++j) {
        if (s(j) <= options.kernel_tolerance * scale) {
          kernel.conservativeResize(Eigen::NoChange, kernel.cols() + 1);
          kernel.col(kernel.cols() - 1) = svd.matrixV().col(j);
        }
      }
    }

    // Orthonormal split of the boundary block into kernel and complement.
    Eigen::JacobiSVD<CMatrix> ksvd(kernel.cols() > 0 ? kernel : CMatrix::Zero(k_bd, 1), Eigen::ComputeFullU);
    Eigen::Index kdim = 0;
    if (kernel.cols() > 0) {
      const auto& s = ksvd.singularValues();
      while (kdim < s.size() && s(kdim) > 1e-8 * s(0)) ++kdim;
    }
    const CMatrix basis = ksvd.matrixU();

    // The orbit scan has the final word on boundary directions.
    for (Eigen::Index j = 0; j < k_bd; ++j) {
      const Eigen::VectorXcd y = basis.col(j);
      if (j < kdim) {
        if (orbit_growth(block, y, options.scan_length, c, true) > 2.0) out.ambiguous = true;
      } else if (orbit_growth(block, y, options.scan_length, c, false) < 10.0) {
        out.ambiguous = true;
      }
    }
    if (kdim > 0) {
      const CMatrix lifted = u.middleCols(k_in, k_bd) * basis.leftCols(kdim);
      CMatrix merged(n, span.cols() + lifted.cols());
      merged << span, lifted;
      span = merged;
    }
  }
  out.basis.columns = real_orthonormal_span(span);
  return out;
}

double subspace_distance(const SubspaceBasis& a, const SubspaceBasis& b, Eigen::Index ambient) {
  const Eigen::MatrixXd d = a.projector(ambient) - b.projector(ambient);
  if (ambient == 0) return 0.0;
  return Eigen::JacobiSVD<Eigen::MatrixXd>(d).singularValues()(0);
}

SmallOperator direct_sum(const SmallOperator& a, const SmallOperator& b) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(a.dim() + b.dim(), a.dim() + b.dim());
  m.topLeftCorner(a.dim(), a.dim()) = a.matrix();
  m.bottomRightCorner(b.dim(), b.dim()) = b.matrix();
  return SmallOperator(std::move(m));
}

SubspaceBasis direct_sum(const SubspaceBasis& a, Eigen::Index dim_a, const SubspaceBasis& b, Eigen::Index dim_b) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim_a + dim_b, a.dim() + b.dim());
  if (a.dim() > 0) m.topLeftCorner(dim_a, a.dim()) = a.columns;
  if (b.dim() > 0) m.bottomRightCorner(dim_b, b.dim()) = b.columns;
  return {std::move(m)};
}

R12Report check_r1_2(const SmallOperator& t1, const SmallOperator& t2, double c, double tolerance) {
  const SubspaceResult whole = s_subspace(direct_sum(t1, t2), c);
  const SubspaceResult s1 = s_subspace(t1, c);
  const SubspaceResult s2 = s_subspace(t2, c);
  R12Report report;
  report.ambiguous = whole.ambiguous || s1.ambiguous || s2.ambiguous;
  const Eigen::Index ambient = t1.dim() + t2.dim();
  const SubspaceBasis parts = direct_sum(s1.basis, t1.dim(), s2.basis, t2.dim());
  report.dim = whole.basis.dim();
  report.distance = whole.basis.dim() == parts.dim() ? subspace_distance(whole.basis, parts, ambient) : 1.0;
  report.pass = !report.ambiguous && report.distance <= tolerance;
  return report;
}

double restricted_spectral_radius(const SmallOperator& t, const SubspaceBasis& l) {
  if (l.dim() == 0) return 0.0;
  const Eigen::MatrixXd restricted = l.columns.transpose() * t.matrix() * l.columns;
  return SmallOperator(restricted).spectral_radius();
}

R11Report check_r1_1(const SmallOperator& t, const SubspaceBasis& l, double c, double eps, double tolerance) {
  if (!(eps > 0.0)) throw std::invalid_argument("check_r1_1: eps must be > 0");
  const Eigen::Index n = t.dim();
  R11Report report;
  if (l.dim() == 0) {
    report.applicable = true;
    report.contained = true;
    return report;
  }
  const Eigen::MatrixXd leak =
      (Eigen::MatrixXd::Identity(n, n) - l.projector(n)) * t.matrix() * l.columns;
  if (leak.norm() > 1e-10 * std::max(1.0, t.matrix().norm())) {
    throw std::invalid_argument("check_r1_1: subspace is not T-invariant");
  }
  report.restricted_radius = restricted_spectral_radius(t, l);
  report.applicable = report.restricted_radius <= c;
  if (!report.applicable) return report;

  const SubspaceResult s = s_subspace(t, c + eps);
  report.ambiguous = s.ambiguous;
  const Eigen::MatrixXd complement = Eigen::MatrixXd::Identity(n, n) - s.basis.projector(n);
  for (Eigen::Index j = 0; j < l.dim(); ++j) {
    report.max_residual = std::max(report.max_residual, (complement * l.columns.col(j)).norm());
  }
  report.contained = !report.ambiguous && report.max_residual <= tolerance;
  return report;
}

double orbit_ratio_max(const SmallOperator& t, const Eigen::VectorXd& x, double c, int horizon) {
  const double base = x.norm();
  if (base == 0.0) return 0.0;
  Eigen::VectorXd v = x / base;
  double best = 1.0;
  for (int i = 0; i < horizon; ++i) {
    v = t.matrix() * v / c;
    best = std::max(best, v.norm());
  }
  return best;
}

}  // namespace kshift::findim
