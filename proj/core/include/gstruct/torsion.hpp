/// @file torsion.hpp
/// @brief The intrinsic torsion tensor: derived vectors and norms, quadratic
/// invariants, Gray-Hervella and D1/D2/D3 class subspaces, decomposition,
/// almost-product tensors and pattern recognition.

#pragma once

#include <map>
#include <optional>
#include <utility>

#include "gstruct/gstructure.hpp"

namespace gstruct {

/// Intrinsic torsion in frame components, alpha(i,j,k) = g(xi_{e_i} e_j, e_k).
/// Every slice xi_{e_i} is an element of g_perp of the attached structure.
class TorsionTensor {
 public:
  TorsionTensor(Tensor3 alpha, GStructure structure);
  static TorsionTensor from_slices(const std::vector<SkewMatrix>& slices,
                                   GStructure structure);
  static TorsionTensor zero(GStructure structure);

  int dim() const { return alpha_.dim(); }
  double alpha(int i, int j, int k) const { return alpha_(i, j, k); }
  const Tensor3& components() const { return alpha_; }
  const GStructure& structure() const { return structure_; }

  /// The operator xi_{e_i} as a matrix: slice(i)(k,j) = alpha(i,j,k).
  SkewMatrix slice(int i) const;

  double norm2() const { return alpha_.norm2(); }

 private:
  Tensor3 alpha_;
  GStructure structure_;
};

/// chi_k = sum_i alpha(i,i,k) — the characteristic vector field in frame
/// components.
Vec characteristic_vector(const TorsionTensor& xi);

/// Splits alpha into the parts antisymmetric / symmetric in the first two
/// slots; returns (alt, sym). The parts are general 3-tensors, not torsion
/// tensors, and alt + sym = alpha.
std::pair<Tensor3, Tensor3> alt_sym_split(const TorsionTensor& xi);

/// sum_{i,j,k} alpha(j,i,k) alpha(i,j,k) = |xi_sym|^2 - |xi_alt|^2.
double cross_term(const TorsionTensor& xi);

struct HermitianInvariants {
  double i1 = 0, i2 = 0, i3 = 0, i4 = 0;
  double xi_norm2 = 0, chi_norm2 = 0, alt_norm2 = 0, sym_norm2 = 0;
};

/// Contact quadratic invariants; Latin sums run over ker(eta) indices only,
/// zeta handled explicitly (the slots with a literal zeta argument).
struct ContactInvariants {
  double i1 = 0, i2 = 0, i4 = 0, i5 = 0, i6 = 0, i7 = 0, i8 = 0, i10 = 0,
         i12 = 0, i14 = 0, i16 = 0, i17 = 0;
  double xi_norm2 = 0, chi_norm2 = 0, alt_norm2 = 0, sym_norm2 = 0;
};

HermitianInvariants hermitian_invariants(const TorsionTensor& xi);
ContactInvariants contact_invariants(const TorsionTensor& xi);

enum class GhClass { W1, W2, W3, W4 };
std::string to_string(GhClass c);

/// Orthonormal basis of the Gray-Hervella class inside the u(n)-perp torsion
/// space, in the coordinate system of gh_coordinates().
LinearSubspace gh_subspace(GhClass c, const GStructure& hermitian);

/// Coordinates of a torsion tensor with respect to the cached orthonormal
/// basis of the full u(n)-perp torsion space (dim = n * dim(u_perp)).
Vec gh_coordinates(const TorsionTensor& xi);
TorsionTensor gh_tensor_from_coordinates(const Vec& coords, const GStructure& hermitian);

/// Components of a decomposition into mutually orthogonal class subspaces,
/// summing to the input up to `residual`.
struct ClassDecomposition {
  std::map<std::string, TorsionTensor> components;
  double residual = 0.0;

  const TorsionTensor& at(const std::string& label) const { return components.at(label); }
  double component_norm2(const std::string& label) const { return components.at(label).norm2(); }
};

/// Orthogonal projection onto W1..W4.
ClassDecomposition gh_decompose(const TorsionTensor& xi);

/// E_k = |chi_k|^2 + |xi_k_alt|^2 - |xi_k_sym|^2 per class component.
std::map<std::string, double> gh_energy(const ClassDecomposition& d);

/// Slot decomposition of a contact torsion into D1 (almost Hermitian part of
/// ker eta), D2, D3.
ClassDecomposition contact_d_split(const TorsionTensor& xi);

/// Second fundamental forms, integrability tensors and mean curvatures of the
/// two distributions of an almost product structure, extracted from the
/// intrinsic torsion. Index ranges are the full frame; entries are supported
/// on the defining blocks.
struct ProductTensors {
  Vec H, Hperp;
  Tensor3 T, Tperp, B, Bperp;
  double h_norm2 = 0, hperp_norm2 = 0;
  double t_norm2 = 0, tperp_norm2 = 0;
  double b_norm2 = 0, bperp_norm2 = 0;
};

ProductTensors product_tensors(const TorsionTensor& xi);

/// A recognized closed-form shape of the torsion with fitted scale:
///   sasaki(c):   xi_X Y = c g(X, phi Y) zeta,  xi_X zeta = c phi(X)
///   kenmotsu(c): xi_X Y = c g(X, Y) zeta,      xi_X zeta = -c X
///   lee(theta):  the W4 family with Lee form theta
struct PatternMatch {
  std::string name;
  double scale = 0.0;
  Vec theta;  // lee only
  double relative_residual = 0.0;
};

std::vector<PatternMatch> recognize_patterns(const TorsionTensor& xi);

/// One-form eta of the SU(n)-torsion split xi = xi_U(n) + eta-part, where the
/// eta-part acts as X,Y -> eta(JX) JY. Returns eta together with the two
/// parts; the U(n) part is valued in u(n)-perp.
struct SuTorsionSplit {
  Vec eta;
  TorsionTensor u_part;
  Tensor3 eta_part;
};

SuTorsionSplit su_eta_extract(const TorsionTensor& xi);

/// Random tensor in the g_perp torsion space of `s` (slices projected from
/// gaussian skew matrices). Deterministic in the rng state.
TorsionTensor random_torsion(Rng& rng, const GStructure& s);

/// Builders for closed-form torsion shapes (unit scale).
TorsionTensor sasaki_pattern(const GStructure& contact, double scale);
TorsionTensor kenmotsu_pattern(const GStructure& contact, double scale);
TorsionTensor lee_pattern(const GStructure& hermitian, const Vec& theta);

}  // namespace gstruct
