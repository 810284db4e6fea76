#include "gstruct/gstructure.hpp"

namespace gstruct {

namespace {
constexpr double kStructureTol = 1e-12;
}

std::string to_string(StructureKind kind) {
  switch (kind) {
    case StructureKind::Product: return "product";
    case StructureKind::Hermitian: return "hermitian";
    case StructureKind::SpecialHermitian: return "special_hermitian";
    case StructureKind::Contact: return "contact";
  }
  return "unknown";
}

GStructure GStructure::product(int dim, int m) {
  detail::require(dim >= 2, "product structure: dim must be >= 2");
  detail::require(m >= 1 && m <= dim - 1, "product structure: need 1 <= m <= dim-1");
  GStructure s;
  s.kind_ = StructureKind::Product;
  s.dim_ = dim;
  s.m_ = m;
  return s;
}

GStructure GStructure::hermitian(Mat J) {
  const int n = static_cast<int>(J.rows());
  detail::require(J.cols() == n, "hermitian structure: J must be square");
  detail::require(n % 2 == 0, "hermitian structure: dimension must be even");
  detail::require((J * J + Mat::Identity(n, n)).norm() < kStructureTol,
                  "hermitian structure: J^2 != -Id");
  detail::require((J.transpose() * J - Mat::Identity(n, n)).norm() < kStructureTol,
                  "hermitian structure: J is not orthogonal");
  GStructure s;
  s.kind_ = StructureKind::Hermitian;
  s.dim_ = n;
  s.j_ = std::move(J);
  return s;
}

GStructure GStructure::special_hermitian(Mat J) {
  GStructure s = hermitian(std::move(J));
  s.kind_ = StructureKind::SpecialHermitian;
  return s;
}

GStructure GStructure::contact(Mat phi, Vec zeta) {
  const int n = static_cast<int>(phi.rows());
  detail::require(phi.cols() == n, "contact structure: phi must be square");
  detail::require(n % 2 == 1, "contact structure: dimension must be odd");
  detail::require(zeta.size() == n, "contact structure: zeta dimension mismatch");
  detail::require(std::abs(zeta.norm() - 1.0) < kStructureTol,
                  "contact structure: zeta must be a unit vector");
  // phi^2 X = -X + eta(X) zeta, metric compatibility, phi zeta = 0, eta(zeta) = 1.
  const Mat phi2 = phi * phi;
  const Mat expected = -Mat::Identity(n, n) + zeta * zeta.transpose();
  detail::require((phi2 - expected).norm() < kStructureTol,
                  "contact structure: phi^2 != -Id + eta (x) zeta");
  const Mat gram = phi.transpose() * phi;
  const Mat gram_expected = Mat::Identity(n, n) - zeta * zeta.transpose();
  detail::require((gram - gram_expected).norm() < kStructureTol,
                  "contact structure: g(phi X, phi Y) != g(X,Y) - eta(X)eta(Y)");
  detail::require((phi * zeta).norm() < kStructureTol, "contact structure: phi(zeta) != 0");
  GStructure s;
  s.kind_ = StructureKind::Contact;
  s.dim_ = n;
  s.phi_ = std::move(phi);
  s.zeta_ = std::move(zeta);
  return s;
}

GStructure GStructure::standard_hermitian(int dim) {
  detail::require(dim >= 2 && dim % 2 == 0, "standard_hermitian: even dim >= 2");
  Mat J = Mat::Zero(dim, dim);
  for (int k = 0; k < dim / 2; ++k) {
    J(2 * k + 1, 2 * k) = 1.0;   // J e_{2k} = e_{2k+1}
    J(2 * k, 2 * k + 1) = -1.0;  // J e_{2k+1} = -e_{2k}
  }
  return hermitian(std::move(J));
}

GStructure GStructure::standard_special_hermitian(int dim) {
  GStructure s = standard_hermitian(dim);
  s.kind_ = StructureKind::SpecialHermitian;
  return s;
}

GStructure GStructure::standard_contact(int dim) {
  detail::require(dim >= 3 && dim % 2 == 1, "standard_contact: odd dim >= 3");
  const int n = (dim - 1) / 2;
  Mat phi = Mat::Zero(dim, dim);
  for (int i = 0; i < n; ++i) {
    phi(n + i, i) = 1.0;   // phi X_i = X_{n+i}
    phi(i, n + i) = -1.0;  // phi X_{n+i} = -X_i
  }
  Vec zeta = Vec::Zero(dim);
  zeta(dim - 1) = 1.0;
  return contact(std::move(phi), std::move(zeta));
}

const Mat& GStructure::complex_structure() const {
  detail::require(kind_ == StructureKind::Hermitian || kind_ == StructureKind::SpecialHermitian,
                  "complex_structure: not a Hermitian-kind structure");
  return j_;
}

const Mat& GStructure::phi() const {
  detail::require(kind_ == StructureKind::Contact, "phi: not a contact structure");
  return phi_;
}

const Vec& GStructure::zeta() const {
  detail::require(kind_ == StructureKind::Contact, "zeta: not a contact structure");
  return zeta_;
}

int GStructure::split_m() const {
  detail::require(kind_ == StructureKind::Product, "split_m: not a product structure");
  return m_;
}

SkewMatrix GStructure::project_g_perp(const SkewMatrix& a) const {
  if (a.dim() != dim_) detail::fail_dim("project_g_perp", a.dim(), dim_);
  switch (kind_) {
    case StructureKind::Product: {
      Mat p = Mat::Zero(dim_, dim_);
      p.topRightCorner(m_, dim_ - m_) = a.mat().topRightCorner(m_, dim_ - m_);
      p.bottomLeftCorner(dim_ - m_, m_) = a.mat().bottomLeftCorner(dim_ - m_, m_);
      return SkewMatrix::skew_part(p);  // p is already antisymmetric; this keeps it bitwise exact
    }
    case StructureKind::Hermitian:
      return SkewMatrix::skew_part(a.mat() + j_ * a.mat() * j_);
    case StructureKind::SpecialHermitian: {
      const double tr_aj = (a.mat() * j_).trace();
      return SkewMatrix::skew_part(a.mat() + j_ * a.mat() * j_ -
                                   (2.0 / dim_) * tr_aj * j_);
    }
    case StructureKind::Contact: {
      const Vec az = a.mat() * zeta_;
      const Mat m = a.mat() + phi_ * a.mat() * phi_ + az * zeta_.transpose() -
                    zeta_ * az.transpose();
      return SkewMatrix::skew_part(m);
    }
  }
  throw std::logic_error("project_g_perp: unreachable");
}

bool GStructure::member_g(const SkewMatrix& a) const {
  return project_g_perp(a).frobenius_norm() < 1e-10;
}

}  // namespace gstruct
