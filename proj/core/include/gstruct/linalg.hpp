/// @file linalg.hpp
/// @brief Small dense linear algebra over a fixed orthonormal frame:
/// skew-symmetric matrices with the so(n) inner product, commutators, and
/// subspace construction from linear conditions.

#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>
#include <vector>

namespace gstruct {

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;

/// Orthonormal frame of a fixed dimension. The Gram matrix is the identity by
/// definition; labels are used for diagnostics and report output.
struct Frame {
  int dim = 0;
  std::vector<std::string> labels;

  Frame() = default;
  Frame(int n, std::vector<std::string> frame_labels);

  /// Frame with default labels "E1".."En".
  static Frame standard(int n);
};

/// Element of so(n). Antisymmetry is exact: the wrapped matrix satisfies
/// entries(i,j) == -entries(j,i) bitwise. Arithmetic that cannot guarantee
/// exactness (products, projections) must go through skew_part().
class SkewMatrix {
 public:
  SkewMatrix() = default;

  /// Wraps a matrix, rejecting anything not exactly antisymmetric.
  explicit SkewMatrix(Mat m);

  static SkewMatrix zero(int n);

  /// Elementary basis element e_{jk}: (j,k)-entry +1, (k,j)-entry -1.
  /// Indices are 0-based here; the paper's e_{13} is elementary(n, 0, 2).
  static SkewMatrix elementary(int n, int j, int k);

  /// (m - m^T)/2 with the lower triangle mirrored from the upper, so the
  /// result is antisymmetric bitwise.
  static SkewMatrix skew_part(const Mat& m);

  const Mat& mat() const { return m_; }
  int dim() const { return static_cast<int>(m_.rows()); }
  double operator()(int i, int j) const { return m_(i, j); }

  SkewMatrix operator+(const SkewMatrix& o) const;
  SkewMatrix operator-(const SkewMatrix& o) const;
  SkewMatrix operator*(double c) const;
  Vec apply(const Vec& v) const { return m_ * v; }

  double frobenius_norm() const { return m_.norm(); }

 private:
  Mat m_;
};

inline SkewMatrix operator*(double c, const SkewMatrix& a) { return a * c; }

/// Inner product on so(n): <A,B> = -1/2 tr(AB). Under this normalization the
/// elementary matrices {e_{jk}}_{j<k} are orthonormal.
double so_inner(const SkewMatrix& a, const SkewMatrix& b);

/// Commutator AB - BA, antisymmetric bitwise.
SkewMatrix bracket(const SkewMatrix& a, const SkewMatrix& b);

/// Subspace of R^ambient spanned by orthonormal basis columns.
class LinearSubspace {
 public:
  LinearSubspace() = default;
  LinearSubspace(int ambient_dim, Mat orthonormal_basis);

  int ambient_dim() const { return ambient_; }
  int rank() const { return static_cast<int>(basis_.cols()); }
  const Mat& basis() const { return basis_; }

  /// Orthogonal projection B B^T v.
  Vec project(const Vec& v) const;
  bool contains(const Vec& v, double tol = 1e-10) const;

 private:
  int ambient_ = 0;
  Mat basis_;  // ambient x rank, orthonormal columns
};

/// Common kernel of a family of linear functionals (each one a coefficient
/// vector of length ambient_dim). Rank detection uses a singular-value cutoff
/// of 1e-10 relative to the largest singular value. An empty condition list
/// returns the full space.
LinearSubspace solve_subspace(const std::vector<Vec>& conditions, int ambient_dim);

/// Orthonormal basis of the column span of `generators` (same SVD cutoff).
LinearSubspace span_subspace(const Mat& generators, int ambient_dim);

/// Dense real 3-tensor T(i,j,k) over one frame, row-major storage.
class Tensor3 {
 public:
  Tensor3() = default;
  explicit Tensor3(int n) : n_(n), a_(static_cast<size_t>(n) * n * n, 0.0) {}

  int dim() const { return n_; }
  double& operator()(int i, int j, int k) { return a_[idx(i, j, k)]; }
  double operator()(int i, int j, int k) const { return a_[idx(i, j, k)]; }

  double norm2() const;
  Tensor3& operator+=(const Tensor3& o);
  Tensor3 operator-(const Tensor3& o) const;
  Tensor3 operator*(double c) const;

  const std::vector<double>& flat() const { return a_; }

 private:
  size_t idx(int i, int j, int k) const {
    return (static_cast<size_t>(i) * n_ + j) * n_ + k;
  }
  int n_ = 0;
  std::vector<double> a_;
};

/// Deterministic, platform-independent RNG (splitmix64 stream + Box-Muller).
/// Used everywhere randomness is needed so fuzz runs reproduce bit-for-bit
/// from a seed.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next_u64();
  /// Uniform in [0,1).
  double uniform();
  /// Standard normal.
  double gaussian();
  /// Derive an independent stream for iteration i of a campaign.
  static uint64_t derive_seed(uint64_t seed, uint64_t iteration);

 private:
  uint64_t state_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

namespace detail {
[[noreturn]] void fail_dim(const std::string& what, int a, int b);
void require(bool cond, const std::string& message);
}  // namespace detail

}  // namespace gstruct
