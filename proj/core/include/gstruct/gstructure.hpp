/// @file gstructure.hpp
/// @brief The four structure groups as orthogonal projectors so(n) -> g_perp
/// together with their defining tensors (J, phi, eta, zeta, distribution split).

#pragma once

#include "gstruct/linalg.hpp"

namespace gstruct {

enum class StructureKind { Product, Hermitian, SpecialHermitian, Contact };

std::string to_string(StructureKind kind);

/// A G-structure on an oriented orthonormal frame, encoded by the orthogonal
/// projector P : so(n) -> g_perp of its structure group G in SO(n).
///
///   Product(m):          G = SO(m) x SO(n-m); P keeps the off-diagonal blocks.
///   Hermitian(J):        G = U(n/2);          P(A) = (A + JAJ)/2.
///   SpecialHermitian(J): G = SU(n/2);         P(A) = (A + JAJ)/2 - tr(AJ)/n * J.
///   Contact(phi, zeta):  G = U((n-1)/2) x 1;  P(A) = (A + phi A phi
///                                               + (A zeta) zeta^T - zeta (A zeta)^T)/2.
class GStructure {
 public:
  static GStructure product(int dim, int m);
  static GStructure hermitian(Mat J);
  static GStructure special_hermitian(Mat J);
  static GStructure contact(Mat phi, Vec zeta);

  /// Standard models used by the fuzz campaigns: J rotating consecutive
  /// pairs, phi(X_i) = X_{n+i} with zeta the last frame vector.
  static GStructure standard_hermitian(int dim);
  static GStructure standard_special_hermitian(int dim);
  static GStructure standard_contact(int dim);

  StructureKind kind() const { return kind_; }
  int dim() const { return dim_; }

  const Mat& complex_structure() const;  // Hermitian / SpecialHermitian
  const Mat& phi() const;                // Contact
  const Vec& zeta() const;               // Contact
  Vec eta() const { return zeta(); }     // orthonormal frame: eta = zeta^flat
  int split_m() const;                   // Product

  /// g_perp component of A.
  SkewMatrix project_g_perp(const SkewMatrix& a) const;

  /// True iff A lies in g, i.e. ||P(A)|| < 1e-10.
  bool member_g(const SkewMatrix& a) const;

 private:
  GStructure() = default;

  StructureKind kind_ = StructureKind::Product;
  int dim_ = 0;
  Mat j_;      // Hermitian kinds
  Mat phi_;    // Contact
  Vec zeta_;   // Contact
  int m_ = 0;  // Product
};

}  // namespace gstruct
