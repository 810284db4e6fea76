#include "gstruct/curvature.hpp"

#include <cmath>

namespace gstruct {

CurvatureOperator CurvatureOperator::zero(int n) {
  CurvatureOperator r;
  r.n_ = n;
  r.r_.assign(static_cast<size_t>(n) * n, SkewMatrix::zero(n));
  return r;
}

CurvatureOperator CurvatureOperator::from_slices(int n, std::vector<SkewMatrix> r) {
  detail::require(static_cast<int>(r.size()) == n * n,
                  "CurvatureOperator: need n*n slices");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      detail::require(r[i * n + j].dim() == n, "CurvatureOperator: slice dimension mismatch");
      const double anti =
          (r[i * n + j].mat() + r[j * n + i].mat()).norm();
      detail::require(anti < 1e-12, "CurvatureOperator: R(i,j) != -R(j,i)");
    }
  CurvatureOperator out;
  out.n_ = n;
  out.r_ = std::move(r);
  return out;
}

Mat ricci(const CurvatureOperator& r) {
  const int n = r.dim();
  Mat ric = Mat::Zero(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int i = 0; i < n; ++i) ric(a, b) += r.component(a, i, i, b);
  return ric;
}

double scalar_curvature(const CurvatureOperator& r) {
  const int n = r.dim();
  double s = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) s += r.component(i, j, j, i);
  return s;
}

double star_scalar(const CurvatureOperator& r, const GStructure& s) {
  const int n = r.dim();
  detail::require(n == s.dim(), "star_scalar: dimension mismatch");
  const Mat* k = nullptr;
  switch (s.kind()) {
    case StructureKind::Hermitian:
    case StructureKind::SpecialHermitian:
      k = &s.complex_structure();
      break;
    case StructureKind::Contact:
      k = &s.phi();
      break;
    default:
      throw std::invalid_argument("star_scalar: Hermitian or contact structure required");
  }
  double out = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Vec kj = k->col(j);
      const Vec ki = k->col(i);
      out += ki.dot(r(i, j).mat() * kj);
    }
  return out;
}

double s_gperp(const CurvatureOperator& r, const GStructure& s) {
  const int n = r.dim();
  detail::require(n == s.dim(), "s_gperp: dimension mismatch");
  double out = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      out += s.project_g_perp(r(i, j)).mat()(i, j);  // <P(R(e_i,e_j)) e_j, e_i>
    }
  return out;
}

double s_alt_gperp(const TorsionTensor& xi) {
  const int n = xi.dim();
  std::vector<SkewMatrix> slices;
  slices.reserve(n);
  for (int i = 0; i < n; ++i) slices.push_back(xi.slice(i));
  double out = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const SkewMatrix br = xi.structure().project_g_perp(bracket(slices[i], slices[j]));
      out += br.mat()(i, j);
    }
  return out;
}

double s_mix(const CurvatureOperator& r, const GStructure& product) {
  detail::require(product.kind() == StructureKind::Product, "s_mix: product structure required");
  const int n = r.dim();
  detail::require(n == product.dim(), "s_mix: dimension mismatch");
  const int m = product.split_m();
  double out = 0.0;
  for (int a = 0; a < m; ++a)
    for (int al = m; al < n; ++al) out += r.component(a, al, al, a);
  return out;
}

double s_r_component(const CurvatureOperator& r, const GStructure& special_hermitian) {
  detail::require(special_hermitian.kind() == StructureKind::SpecialHermitian,
                  "s_r_component: special Hermitian structure required");
  const int n = r.dim();
  const Mat& J = special_hermitian.complex_structure();
  double out = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const double tr_rj = (r(i, j).mat() * J).trace();
      out += -(tr_rj / n) * J(i, j);  // <(-tr(RJ)/dim) J e_j, e_i>
    }
  return out;
}

double chern_trace(const ClassDecomposition& gh, double s_star) {
  const double n12 = gh.component_norm2("W1") + gh.component_norm2("W2");
  const double n34 = gh.component_norm2("W3") + gh.component_norm2("W4");
  return (n34 - n12 + s_star) / (2.0 * M_PI);
}

CurvatureOperator random_algebraic_curvature(uint64_t seed, int dim, int generators) {
  detail::require(dim >= 2, "random_algebraic_curvature: dim >= 2");
  detail::require(generators >= 1, "random_algebraic_curvature: generators >= 1");
  Rng rng(seed);
  // R_h(X,Y,Z,W) = h(X,W)h(Y,Z) - h(X,Z)h(Y,W) for symmetric h has all
  // algebraic curvature symmetries; h = g gives the unit-sphere tensor.
  std::vector<Mat> hs;
  for (int g = 0; g < generators; ++g) {
    Mat raw(dim, dim);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) raw(i, j) = rng.gaussian();
    hs.push_back(0.5 * (raw + raw.transpose()));
  }
  std::vector<SkewMatrix> slices(static_cast<size_t>(dim) * dim, SkewMatrix::zero(dim));
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j) {
      Mat rij = Mat::Zero(dim, dim);
      for (const Mat& h : hs)
        // column k, row l: <R(e_i,e_j) e_k, e_l> = h(i,l)h(j,k) - h(i,k)h(j,l)
        rij += h.col(i) * h.row(j) - h.col(j) * h.row(i);
      SkewMatrix s = SkewMatrix::skew_part(rij);  // rij is antisymmetric; mirror keeps it exact
      slices[i * dim + j] = s;
      slices[j * dim + i] = s * -1.0;
    }
  return CurvatureOperator::from_slices(dim, std::move(slices));
}

double bianchi_residual(const CurvatureOperator& r) {
  const int n = r.dim();
  double worst = 0.0;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        const Vec v = r(x, y).mat().col(z) + r(y, z).mat().col(x) + r(z, x).mat().col(y);
        worst = std::max(worst, v.cwiseAbs().maxCoeff());
      }
  return worst;
}

double pair_symmetry_residual(const CurvatureOperator& r) {
  const int n = r.dim();
  double worst = 0.0;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        for (int w = 0; w < n; ++w)
          worst = std::max(worst,
                           std::abs(r.component(x, y, z, w) - r.component(z, w, x, y)));
  return worst;
}

}  // namespace gstruct
