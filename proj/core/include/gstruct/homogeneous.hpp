/// @file homogeneous.hpp
/// @brief Reductive homogeneous model machinery: Nomizu-map connection,
/// curvature, intrinsic torsion, and invariant tensor calculus.

#pragma once

#include <map>
#include <optional>

#include "gstruct/curvature.hpp"

namespace gstruct {

/// Dense real tensor of arbitrary rank over one frame (all slots covariant,
/// components in the orthonormal frame). Rank 0 is a scalar.
class TensorN {
 public:
  TensorN() = default;
  TensorN(int n, int rank);
  static TensorN from_vector(const Vec& v);
  static TensorN from_matrix(const Mat& m);

  int dim() const { return n_; }
  int rank() const { return rank_; }
  double at(const std::vector<int>& idx) const { return a_[offset(idx)]; }
  double& at(const std::vector<int>& idx) { return a_[offset(idx)]; }
  const std::vector<double>& flat() const { return a_; }
  std::vector<double>& flat() { return a_; }
  double norm2() const;

 private:
  size_t offset(const std::vector<int>& idx) const;
  int n_ = 0;
  int rank_ = 0;
  std::vector<double> a_;
};

/// A reductive homogeneous space K/H in a fixed orthonormal frame of m:
/// bracket tables for [m,m] (m- and h-components), the isotropy action of h
/// on m, and the Nomizu map Lambda of the Levi-Civita connection.
struct HomogeneousModel {
  std::string name;
  Frame frame;
  int h_dim = 0;
  std::vector<Mat> lambda;                   // n skew matrices, Lambda(E_i)
  std::vector<std::vector<Vec>> bracket_m;   // [i][j] -> m-component (length n)
  std::vector<std::vector<Vec>> bracket_h;   // [i][j] -> h-component (length h_dim)
  std::vector<Mat> ad_h;                     // h_dim skew matrices acting on m
  std::vector<std::vector<Vec>> bracket_hh;  // [a][b] -> h-component of [h_a,h_b]
  std::optional<std::pair<std::vector<int>, std::vector<int>>> split;  // (m0, m1)
  std::map<std::string, double> params;

  int dim() const { return frame.dim; }
};

/// Residuals of the model invariants; all should be < 1e-9 for a valid model.
struct ModelResiduals {
  double lambda_skew = 0;        // metric compatibility
  double torsion_free = 0;       // Lambda(X)Y - Lambda(Y)X = [X,Y]_m
  double bracket_antisym = 0;    // both tables
  double jacobi = 0;             // on the full algebra h + m
  double split_relations = 0;    // the m0/m1 bracket inclusions, if split given
};

ModelResiduals model_residuals(const HomogeneousModel& model);

/// Throws std::invalid_argument naming the failed invariant if any residual
/// exceeds `tol`.
void validate_model(const HomogeneousModel& model, double tol = 1e-9);

/// R(X,Y) = [Lambda(X),Lambda(Y)] - Lambda([X,Y]_m) - Ad([X,Y]_h).
CurvatureOperator nomizu_curvature(const HomogeneousModel& model);

/// Same formula with a different connection map (e.g. Lambda_g of the
/// G-connection); lambda_prime must be skew-valued.
CurvatureOperator connection_curvature(const HomogeneousModel& model,
                                       const std::vector<Mat>& lambda_prime);

/// Intrinsic torsion of the structure on the model:
/// alpha(i,j,k) = <P(Lambda(E_i)) E_j, E_k>.
TorsionTensor intrinsic_torsion(const HomogeneousModel& model, const GStructure& s);

/// The g-component Lambda_g = Lambda - Lambda_{g_perp} slice by slice.
std::vector<Mat> g_connection_map(const HomogeneousModel& model, const GStructure& s);

/// Covariant derivative of a frame-constant covariant tensor: rank r -> r+1,
/// (nabla T)(i; a_1..a_r) = -sum_s T(a_1,..,Lambda(E_i) slot s,..,a_r).
TensorN invariant_derivative(const HomogeneousModel& model, const TensorN& t);

/// div v = sum_i <Lambda(E_i) v, E_i> for a frame-constant vector field.
double invariant_divergence(const HomogeneousModel& model, const Vec& v);

}  // namespace gstruct
