/// @file curvature.hpp
/// @brief Curvature operators, contraction scalars, structure-projected scalar
/// pieces, and a Bianchi-respecting random curvature generator for fuzzing.

#pragma once

#include "gstruct/torsion.hpp"

namespace gstruct {

/// R(e_i, e_j) in so(n), antisymmetric in (i,j), with the convention
/// R(X,Y) = [nabla_X, nabla_Y] - nabla_{[X,Y]}. The 4-slot component is
/// R(X,Y,Z,W) = <R(X,Y)Z, W>.
class CurvatureOperator {
 public:
  CurvatureOperator() = default;
  static CurvatureOperator zero(int n);
  static CurvatureOperator from_slices(int n, std::vector<SkewMatrix> r);

  int dim() const { return n_; }
  const SkewMatrix& operator()(int i, int j) const { return r_[i * n_ + j]; }

  /// <R(e_i,e_j) e_k, e_l>
  double component(int i, int j, int k, int l) const {
    return r_[i * n_ + j](l, k);
  }

 private:
  int n_ = 0;
  std::vector<SkewMatrix> r_;
};

/// Ric(a,b) = sum_i <R(e_a, e_i) e_i, e_b>; symmetric for algebraic curvature.
Mat ricci(const CurvatureOperator& r);

/// s = tr Ric = sum_{i,j} <R(e_i,e_j) e_j, e_i>.
double scalar_curvature(const CurvatureOperator& r);

/// Star-scalar curvature: sum_{i,j} <R(e_i,e_j) K e_j, K e_i> with K = J
/// (Hermitian kinds) or K = phi (contact).
double star_scalar(const CurvatureOperator& r, const GStructure& s);

/// g_perp part of the scalar curvature:
/// sum_{i,j} <P(R(e_i,e_j)) e_j, e_i>.
double s_gperp(const CurvatureOperator& r, const GStructure& s);

/// s_alt_gperp = sum_{i,j} <[xi_{e_i}, xi_{e_j}]_{g_perp} e_j, e_i>.
double s_alt_gperp(const TorsionTensor& xi);

/// Mixed scalar curvature of a product structure:
/// sum over (A in D, alpha in D_perp) of <R(e_A,e_alpha) e_alpha, e_A>.
double s_mix(const CurvatureOperator& r, const GStructure& product);

/// R-component scalar for a special Hermitian structure, via the projector
/// A -> -tr(AJ)/dim * J. Equals s*/ (dim/2) when R satisfies first Bianchi.
double s_r_component(const CurvatureOperator& r, const GStructure& special_hermitian);

/// 2*pi*tr*(gamma) / (2*pi) for the first Chern form:
/// (|xi^{34}|^2 - |xi^{12}|^2 + s*) / (2 pi).
double chern_trace(const ClassDecomposition& gh, double s_star);

/// Random algebraic curvature operator built from Kulkarni-Nomizu squares of
/// random symmetric forms. Guarantees pair symmetry and first Bianchi;
/// deterministic in (seed, dim, generators).
CurvatureOperator random_algebraic_curvature(uint64_t seed, int dim, int generators = 3);

/// max over frame triples of |R(X,Y)Z + R(Y,Z)X + R(Z,X)Y|.
double bianchi_residual(const CurvatureOperator& r);

/// max over frame quadruples of |<R(X,Y)Z,W> - <R(Z,W)X,Y>|.
double pair_symmetry_residual(const CurvatureOperator& r);

}  // namespace gstruct
