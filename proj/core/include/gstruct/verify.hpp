/// @file verify.hpp
/// @brief Named identity checkers producing CheckReports, plus the fuzz
/// campaign driver for the algebraic property suites.

#pragma once

#include "gstruct/models.hpp"

namespace gstruct {

struct CheckReport {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::map<std::string, std::string> metadata;
};

CheckReport make_check(std::string name, double lhs, double rhs, double tolerance,
                       std::map<std::string, std::string> metadata = {});

/// Default tolerance for identity residuals; overridable per call site.
constexpr double kIdentityTol = 1e-9;
/// Relative tolerance for comparisons against closed-form expressions.
constexpr double kClosedFormRelTol = 1e-6;

/// Both forms of the divergence formula on a homogeneous model:
///   div chi = 1/2 s_alt_gperp - 1/2 s_gperp + |chi|^2 + |alt|^2 - |sym|^2
///   2 div chi = s_G - s + |chi|^2 + |alt|^2 - |sym|^2
std::vector<CheckReport> check_divergence(const ModelBundle& bundle,
                                          double tol = kIdentityTol);

/// Walczak divergence formula for the product structure splitting off the
/// first m frame directions:
///   -div(H + Hperp) = -s_mix + |H|^2 + |Hperp|^2 + |T|^2 + |Tperp|^2
///                     - |B|^2 - |Bperp|^2
CheckReport check_walczak(const HomogeneousModel& model, int m_split,
                          double tol = kIdentityTol);

/// Pointwise Bor / Hernandez-Lamoneda formula on a Hermitian model:
///   div chi = |xi1|^2 - 1/2 |xi2|^2 + (n-1)/2 |xi4|^2 - 1/4 (s - s*)
CheckReport check_bor_lamoneda(const ModelBundle& bundle, double tol = kIdentityTol);

/// Contact-structure identities on a homogeneous model: the two scalar
/// curvature component relations, the invariant form of the divergence
/// formula, and the chi = 0 pointwise identity relating |T|^2 - |B|^2 to the
/// curvature scalars.
std::vector<CheckReport> check_contact_propositions(const ModelBundle& bundle,
                                                    double tol = kIdentityTol);

/// Contact identities evaluable on a pointwise model (curvature scalars come
/// from the declared C(alpha) condition): the D2 divergence identity, the
/// C(alpha) recovery, and the closed-form s_alt_gperp value.
std::vector<CheckReport> check_contact_propositions(const PointwiseModel& pm,
                                                    double tol = kIdentityTol);

enum class FuzzSpace { Hermitian, Contact, Product, Su };

FuzzSpace fuzz_space_from_string(const std::string& s);
std::string to_string(FuzzSpace space);

struct FuzzSummary {
  FuzzSpace space = FuzzSpace::Hermitian;
  int dim = 0;
  int iterations = 0;
  uint64_t seed = 0;
  int failures = 0;
  double max_residual = 0.0;
  uint64_t first_failure_seed = 0;
  std::string first_failure_property;
  std::map<std::string, double> property_max_residual;
};

/// Runs the module-level algebraic property checks on random tensors and
/// curvature operators. Deterministic per (space, dim, iterations, seed); a
/// residual above 1e-9 counts as a failure and records the reproduction seed.
FuzzSummary fuzz_campaign(FuzzSpace space, int dim, int iterations, uint64_t seed);

}  // namespace gstruct
