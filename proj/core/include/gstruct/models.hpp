/// @file models.hpp
/// @brief Concrete builders: the flag manifold F_{1,2}(t), the Stiefel
/// manifold V_{4,2}(t) with Jensen metrics, the generalized Heisenberg group
/// H(1,n), Sasaki/Kenmotsu pointwise tensors, and the C(alpha) scalar map.

#pragma once

#include "gstruct/homogeneous.hpp"

namespace gstruct {

/// A homogeneous model together with the G-structure living on it.
struct ModelBundle {
  HomogeneousModel model;
  GStructure structure;
};

/// Flag manifold F_{1,2} = U(3)/T^3 with the one-parameter metric family and
/// the invariant almost Hermitian structure J(E1) = -E2, J(E3) = E4,
/// J(E5) = -E6. Valid for t > 0.
ModelBundle build_flag(double t);

/// Stiefel manifold V_{4,2} = SO(4)/SO(2) with the Jensen metric family and
/// the invariant almost contact structure (phi, zeta = E5). Valid for t > 0.
/// The source tables use the opposite elementary-skew sign convention; the
/// builder negates them once on input.
ModelBundle build_stiefel(double t);

/// Generalized Heisenberg group H(1,n), dim 2n+1, as a Lie-group model
/// (h_dim = 0). Brackets are derived from the connection table via
/// [X,Y] = Lambda(X)Y - Lambda(Y)X. Contact structure phi(X_i) = X_{n+i},
/// zeta = Z (the last frame vector).
ModelBundle build_heisenberg(int n);

/// Pointwise almost contact model: a torsion tensor with the closed-form
/// shape, plus the scalar data implied by the Janssen-Vanhecke C(alpha)
/// condition (no curvature operator; curvature-dependent scalars are
/// "implied" values).
struct PointwiseModel {
  std::string name;
  int dim = 0;
  GStructure structure;
  TorsionTensor xi;
  double alpha = 0.0;          // the C(alpha) parameter
  double s_minus_sstar = 0.0;  // 4 n^2 alpha
  double ric_zeta = 0.0;       // 2 n alpha
};

/// Sasaki structure xi_X Y = g(X, phi Y) zeta on dim 2n+1; satisfies C(1).
PointwiseModel build_sasaki(int n);

/// Kenmotsu structure xi_X Y = g(X,Y) zeta, xi_X zeta = -X; satisfies C(-1).
PointwiseModel build_kenmotsu(int n);

/// (s - s*, Ric(zeta,zeta)) implied by the C(alpha) condition in dim 2n+1.
std::pair<double, double> c_alpha_scalars(double alpha, int n);

}  // namespace gstruct
