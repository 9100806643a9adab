#pragma once

#include <optional>
#include <string>

#include <Eigen/Dense>

// Small dense oracle for S(T, c) in finite dimensions. Used to check the
// direct-sum and invariant-subspace remarks and to cross-validate the growth
// semantics; it is not an approximation of the infinite shift.
namespace kshift::findim {

inline constexpr int kMaxDimension = 12;

/// Dense real square matrix, dimension <= kMaxDimension, finite entries.
class SmallOperator {
 public:
  explicit SmallOperator(Eigen::MatrixXd matrix);

  const Eigen::MatrixXd& matrix() const { return matrix_; }
  Eigen::Index dim() const { return matrix_.rows(); }
  double spectral_radius() const;

 private:
  Eigen::MatrixXd matrix_;
};

/// Orthonormal columns. A 0-column basis is the zero subspace.
struct SubspaceBasis {
  Eigen::MatrixXd columns;

  Eigen::Index dim() const { return columns.cols(); }
  Eigen::MatrixXd projector(Eigen::Index ambient) const;
};

struct SubspaceResult {
  SubspaceBasis basis;
  /// Set when an eigenvalue sits on |lambda| = c and the orbit scan could not
  /// confirm which directions stay bounded.
  bool ambiguous = false;
};

/// Tolerances for the eigenvalue threshold and the boundary orbit scan.
struct OracleOptions {
  double boundary_tolerance = 1e-7;  ///< | |lambda| - c | below this counts as on the boundary
  double kernel_tolerance = 1e-8;    ///< singular values treated as zero (relative)
  int scan_length = 200;             ///< orbit scan horizon for boundary directions
};

/// S(T, c): generalized eigenspaces for |lambda| < c plus, on |lambda| = c,
/// the eigenvectors whose orbits the scan confirms as bounded.
SubspaceResult s_subspace(const SmallOperator& t, double c, const OracleOptions& options = {});

/// || P_a - P_b || in spectral norm.
double subspace_distance(const SubspaceBasis& a, const SubspaceBasis& b, Eigen::Index ambient);

/// Direct sum of two operators / bases.
SmallOperator direct_sum(const SmallOperator& a, const SmallOperator& b);
SubspaceBasis direct_sum(const SubspaceBasis& a, Eigen::Index dim_a, const SubspaceBasis& b, Eigen::Index dim_b);

struct R12Report {
  bool ambiguous = false;
  double distance = 0.0;  ///< || P_{S(T1+T2)} - P_{S(T1)+S(T2)} ||
  Eigen::Index dim = 0;
  bool pass = false;
};

/// S(T1 (+) T2, c) = S(T1, c) (+) S(T2, c).
R12Report check_r1_2(const SmallOperator& t1, const SmallOperator& t2, double c, double tolerance = 1e-9);

struct R11Report {
  double restricted_radius = 0.0;  ///< r(T|L)
  bool applicable = false;         ///< r(T|L) <= c
  bool contained = false;          ///< L subset of S(T, c + eps)
  double max_residual = 0.0;       ///< max over columns of || (I - P_S) q ||
  bool ambiguous = false;
};

/// Given a T-invariant L with r(T|L) <= c, checks L subset of S(T, c + eps).
/// Throws std::invalid_argument when L is not invariant to 1e-10.
R11Report check_r1_1(const SmallOperator& t, const SubspaceBasis& l, double c, double eps,
                     double tolerance = 1e-9);

/// max over N in [0, horizon] of ||T^N x|| / (c^N ||x||).
double orbit_ratio_max(const SmallOperator& t, const Eigen::VectorXd& x, double c, int horizon);

/// Spectral radius of T restricted to an invariant subspace.
double restricted_spectral_radius(const SmallOperator& t, const SubspaceBasis& l);

}  // namespace kshift::findim
