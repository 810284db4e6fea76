#include "gstruct/linalg.hpp"

#include <cmath>
#include <set>

namespace gstruct {

namespace detail {

void fail_dim(const std::string& what, int a, int b) {
  throw std::invalid_argument(what + ": dimension mismatch (" + std::to_string(a) +
                              " vs " + std::to_string(b) + ")");
}

void require(bool cond, const std::string& message) {
  if (!cond) throw std::invalid_argument(message);
}

}  // namespace detail

Frame::Frame(int n, std::vector<std::string> frame_labels)
    : dim(n), labels(std::move(frame_labels)) {
  detail::require(dim >= 2, "Frame: dim must be >= 2");
  detail::require(static_cast<int>(labels.size()) == dim,
                  "Frame: need one label per direction");
  std::set<std::string> distinct(labels.begin(), labels.end());
  detail::require(static_cast<int>(distinct.size()) == dim,
                  "Frame: labels must be pairwise distinct");
}

Frame Frame::standard(int n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (int i = 1; i <= n; ++i) labels.push_back("E" + std::to_string(i));
  return Frame(n, std::move(labels));
}

SkewMatrix::SkewMatrix(Mat m) : m_(std::move(m)) {
  detail::require(m_.rows() == m_.cols(), "SkewMatrix: matrix must be square");
  for (int i = 0; i < m_.rows(); ++i)
    for (int j = 0; j <= i; ++j)
      if (m_(i, j) != -m_(j, i))
        throw std::invalid_argument("SkewMatrix: entries (" + std::to_string(i) + "," +
                                    std::to_string(j) + ") violate antisymmetry");
}

SkewMatrix SkewMatrix::zero(int n) {
  SkewMatrix s;
  s.m_ = Mat::Zero(n, n);
  return s;
}

SkewMatrix SkewMatrix::elementary(int n, int j, int k) {
  detail::require(j >= 0 && k >= 0 && j < n && k < n && j != k,
                  "SkewMatrix::elementary: bad index pair");
  SkewMatrix s = zero(n);
  s.m_(j, k) = 1.0;
  s.m_(k, j) = -1.0;
  return s;
}

SkewMatrix SkewMatrix::skew_part(const Mat& m) {
  detail::require(m.rows() == m.cols(), "skew_part: matrix must be square");
  const int n = static_cast<int>(m.rows());
  SkewMatrix s = zero(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double v = 0.5 * (m(i, j) - m(j, i));
      s.m_(i, j) = v;
      s.m_(j, i) = -v;
    }
  }
  return s;
}

SkewMatrix SkewMatrix::operator+(const SkewMatrix& o) const {
  if (dim() != o.dim()) detail::fail_dim("SkewMatrix::operator+", dim(), o.dim());
  SkewMatrix s;
  s.m_ = m_ + o.m_;
  return s;
}

SkewMatrix SkewMatrix::operator-(const SkewMatrix& o) const {
  if (dim() != o.dim()) detail::fail_dim("SkewMatrix::operator-", dim(), o.dim());
  SkewMatrix s;
  s.m_ = m_ - o.m_;
  return s;
}

SkewMatrix SkewMatrix::operator*(double c) const {
  SkewMatrix s;
  s.m_ = m_ * c;
  return s;
}

double so_inner(const SkewMatrix& a, const SkewMatrix& b) {
  if (a.dim() != b.dim()) detail::fail_dim("so_inner", a.dim(), b.dim());
  // -1/2 tr(AB) = sum_{i<j} A_ij B_ij for antisymmetric A, B.
  double s = 0.0;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = i + 1; j < a.dim(); ++j) s += a(i, j) * b(i, j);
  return s;
}

SkewMatrix bracket(const SkewMatrix& a, const SkewMatrix& b) {
  if (a.dim() != b.dim()) detail::fail_dim("bracket", a.dim(), b.dim());
  return SkewMatrix::skew_part(a.mat() * b.mat() - b.mat() * a.mat());
}

LinearSubspace::LinearSubspace(int ambient_dim, Mat orthonormal_basis)
    : ambient_(ambient_dim), basis_(std::move(orthonormal_basis)) {
  detail::require(basis_.rows() == ambient_ || basis_.size() == 0,
                  "LinearSubspace: basis rows must match ambient dimension");
  if (basis_.size() == 0) basis_ = Mat::Zero(ambient_, 0);
  const Mat gram = basis_.transpose() * basis_;
  const double off = (gram - Mat::Identity(gram.rows(), gram.cols())).norm();
  detail::require(off < 1e-12 * std::max(1.0, static_cast<double>(gram.rows())),
                  "LinearSubspace: basis is not orthonormal");
}

Vec LinearSubspace::project(const Vec& v) const {
  if (v.size() != ambient_) detail::fail_dim("LinearSubspace::project", static_cast<int>(v.size()), ambient_);
  if (rank() == 0) return Vec::Zero(ambient_);
  return basis_ * (basis_.transpose() * v);
}

bool LinearSubspace::contains(const Vec& v, double tol) const {
  return (v - project(v)).norm() <= tol;
}

LinearSubspace solve_subspace(const std::vector<Vec>& conditions, int ambient_dim) {
  if (conditions.empty())
    return LinearSubspace(ambient_dim, Mat::Identity(ambient_dim, ambient_dim));
  Mat c(static_cast<int>(conditions.size()), ambient_dim);
  for (size_t r = 0; r < conditions.size(); ++r) {
    detail::require(conditions[r].size() == ambient_dim,
                    "solve_subspace: condition length must equal ambient dimension");
    c.row(static_cast<int>(r)) = conditions[r].transpose();
  }
  Eigen::JacobiSVD<Mat> svd(c, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double cutoff = (sv.size() > 0 ? sv(0) : 0.0) * 1e-10;
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > cutoff) ++rank;
  const Mat v = svd.matrixV();
  return LinearSubspace(ambient_dim, v.rightCols(ambient_dim - rank));
}

LinearSubspace span_subspace(const Mat& generators, int ambient_dim) {
  if (generators.cols() == 0) return LinearSubspace(ambient_dim, Mat::Zero(ambient_dim, 0));
  detail::require(static_cast<int>(generators.rows()) == ambient_dim,
                  "span_subspace: generator length must equal ambient dimension");
  Eigen::JacobiSVD<Mat> svd(generators, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  const double cutoff = (sv.size() > 0 ? sv(0) : 0.0) * 1e-10;
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > cutoff) ++rank;
  return LinearSubspace(ambient_dim, svd.matrixU().leftCols(rank));
}

double Tensor3::norm2() const {
  double s = 0.0;
  for (double v : a_) s += v * v;
  return s;
}

Tensor3& Tensor3::operator+=(const Tensor3& o) {
  if (n_ != o.n_) detail::fail_dim("Tensor3::operator+=", n_, o.n_);
  for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

Tensor3 Tensor3::operator-(const Tensor3& o) const {
  if (n_ != o.n_) detail::fail_dim("Tensor3::operator-", n_, o.n_);
  Tensor3 r(n_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
  return r;
}

Tensor3 Tensor3::operator*(double c) const {
  Tensor3 r(n_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * c;
  return r;
}

uint64_t Rng::next_u64() {
  // splitmix64
  state_ += 0x9e3779b97f4a7c15ull;
  uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

double Rng::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::gaussian() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u1 = 0.0;
  do {
    u1 = uniform();
  } while (u1 <= 0.0);
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * M_PI * u2;
  spare_ = r * std::sin(theta);
  has_spare_ = true;
  return r * std::cos(theta);
}

uint64_t Rng::derive_seed(uint64_t seed, uint64_t iteration) {
  Rng mix(seed ^ (0x632be59bd9b4e019ull + iteration * 0x9e3779b97f4a7c15ull));
  return mix.next_u64();
}

}  // namespace gstruct
