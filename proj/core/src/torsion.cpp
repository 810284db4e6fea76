#include "gstruct/torsion.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <mutex>

namespace gstruct {

namespace {

constexpr double kMembershipTol = 1e-10;

/// Index of zeta when it is a coordinate frame vector (it is, for every
/// contact structure built in this repo).
int zeta_index(const GStructure& s) {
  const Vec& z = s.zeta();
  int idx = -1;
  for (int i = 0; i < z.size(); ++i) {
    if (z(i) == 1.0) {
      detail::require(idx < 0, "contact structure: zeta is not a frame vector");
      idx = i;
    } else {
      detail::require(z(i) == 0.0, "contact structure: zeta is not a frame vector");
    }
  }
  detail::require(idx >= 0, "contact structure: zeta is not a frame vector");
  return idx;
}

Tensor3 canonical_skew(const Tensor3& a) {
  const int n = a.dim();
  Tensor3 out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = j; k < n; ++k) {
        const double v = 0.5 * (a(i, j, k) - a(i, k, j));
        out(i, j, k) = v;
        out(i, k, j) = -v;
      }
  return out;
}

}  // namespace

TorsionTensor::TorsionTensor(Tensor3 alpha, GStructure structure)
    : alpha_(std::move(alpha)), structure_(std::move(structure)) {
  const int n = alpha_.dim();
  detail::require(n == structure_.dim(), "TorsionTensor: dimension mismatch with structure");
  double skew_residual = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = j; k < n; ++k)
        skew_residual = std::max(skew_residual, std::abs(alpha_(i, j, k) + alpha_(i, k, j)));
  detail::require(skew_residual < 1e-12,
                  "TorsionTensor: alpha is not antisymmetric in the last two slots");
  alpha_ = canonical_skew(alpha_);
  for (int i = 0; i < n; ++i) {
    const SkewMatrix s = slice(i);
    const double r = (structure_.project_g_perp(s) - s).frobenius_norm();
    if (r >= kMembershipTol)
      throw std::invalid_argument("TorsionTensor: slice " + std::to_string(i) +
                                  " lies outside g_perp (residual " + std::to_string(r) + ")");
  }
}

TorsionTensor TorsionTensor::from_slices(const std::vector<SkewMatrix>& slices,
                                         GStructure structure) {
  const int n = structure.dim();
  detail::require(static_cast<int>(slices.size()) == n,
                  "TorsionTensor::from_slices: need one slice per frame direction");
  Tensor3 alpha(n);
  for (int i = 0; i < n; ++i) {
    detail::require(slices[i].dim() == n, "TorsionTensor::from_slices: slice dimension mismatch");
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) alpha(i, j, k) = slices[i](k, j);
  }
  return TorsionTensor(std::move(alpha), std::move(structure));
}

TorsionTensor TorsionTensor::zero(GStructure structure) {
  Tensor3 alpha(structure.dim());
  return TorsionTensor(std::move(alpha), std::move(structure));
}

SkewMatrix TorsionTensor::slice(int i) const {
  const int n = dim();
  Mat s(n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) s(k, j) = alpha_(i, j, k);
  return SkewMatrix(std::move(s));
}

Vec characteristic_vector(const TorsionTensor& xi) {
  const int n = xi.dim();
  Vec chi = Vec::Zero(n);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) chi(k) += xi.alpha(i, i, k);
  return chi;
}

std::pair<Tensor3, Tensor3> alt_sym_split(const TorsionTensor& xi) {
  const int n = xi.dim();
  Tensor3 alt(n), sym(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        alt(i, j, k) = 0.5 * (xi.alpha(i, j, k) - xi.alpha(j, i, k));
        sym(i, j, k) = 0.5 * (xi.alpha(i, j, k) + xi.alpha(j, i, k));
      }
  return {std::move(alt), std::move(sym)};
}

double cross_term(const TorsionTensor& xi) {
  const int n = xi.dim();
  double s = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) s += xi.alpha(j, i, k) * xi.alpha(i, j, k);
  return s;
}

HermitianInvariants hermitian_invariants(const TorsionTensor& xi) {
  detail::require(xi.structure().kind() == StructureKind::Hermitian,
                  "hermitian_invariants: structure kind mismatch");
  const int n = xi.dim();
  const Mat& J = xi.structure().complex_structure();
  HermitianInvariants inv;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const double a = xi.alpha(i, j, k);
        inv.i1 += a * a;
        inv.i2 += a * xi.alpha(j, i, k);
        double aj = 0.0;  // alpha(J e_i, J e_j, e_k)
        for (int p = 0; p < n; ++p) {
          if (J(p, i) == 0.0) continue;
          for (int q = 0; q < n; ++q) {
            if (J(q, j) == 0.0) continue;
            aj += J(p, i) * J(q, j) * xi.alpha(p, q, k);
          }
        }
        inv.i3 += a * aj;
      }
  const Vec chi = characteristic_vector(xi);
  inv.i4 = chi.squaredNorm();
  inv.xi_norm2 = xi.norm2();
  inv.chi_norm2 = inv.i4;
  auto [alt, sym] = alt_sym_split(xi);
  inv.alt_norm2 = alt.norm2();
  inv.sym_norm2 = sym.norm2();
  return inv;
}

ContactInvariants contact_invariants(const TorsionTensor& xi) {
  detail::require(xi.structure().kind() == StructureKind::Contact,
                  "contact_invariants: structure kind mismatch");
  const int n = xi.dim();
  const int z = zeta_index(xi.structure());
  const Mat& phi = xi.structure().phi();
  std::vector<int> ker;  // ker(eta) frame indices
  for (int i = 0; i < n; ++i)
    if (i != z) ker.push_back(i);

  ContactInvariants inv;
  for (int i : ker)
    for (int j : ker) {
      for (int k : ker) {
        const double a = xi.alpha(i, j, k);
        inv.i1 += a * a;
        inv.i2 += a * xi.alpha(j, i, k);
      }
      inv.i8 += xi.alpha(i, j, z) * xi.alpha(j, i, z);
    }
  for (int j : ker)
    for (int k : ker) {
      const double a = xi.alpha(z, j, k);
      inv.i5 += a * a;
      inv.i7 += a * xi.alpha(j, z, k);
    }
  for (int i : ker)
    for (int k : ker) inv.i6 += xi.alpha(i, z, k) * xi.alpha(i, z, k);

  double trace_m = 0.0;       // sum_i alpha(i,i,zeta)
  double trace_m_phi = 0.0;   // sum_i alpha(e_i, phi e_i, zeta)
  for (int i : ker) {
    trace_m += xi.alpha(i, i, z);
    for (int p : ker) trace_m_phi += phi(p, i) * xi.alpha(i, p, z);
  }
  inv.i10 = trace_m * trace_m;
  inv.i14 = trace_m_phi * trace_m_phi;

  for (int i : ker)
    for (int j : ker) {
      double twisted = 0.0;  // alpha(phi e_j, phi e_i, zeta)
      for (int p : ker) {
        if (phi(p, j) == 0.0) continue;
        for (int q : ker) twisted += phi(p, j) * phi(q, i) * xi.alpha(p, q, z);
      }
      inv.i12 += xi.alpha(i, j, z) * twisted;
    }

  for (int k : ker) {
    const double azz = xi.alpha(z, z, k);
    inv.i16 += azz * azz;
    double tr_k = 0.0;
    for (int i : ker) tr_k += xi.alpha(i, i, k);
    inv.i17 += tr_k * azz;
  }

  inv.i4 = 0.0;
  for (int k : ker) {
    double tr_k = 0.0;
    for (int i : ker) tr_k += xi.alpha(i, i, k);
    inv.i4 += tr_k * tr_k;
  }

  inv.xi_norm2 = xi.norm2();
  inv.chi_norm2 = characteristic_vector(xi).squaredNorm();
  auto [alt, sym] = alt_sym_split(xi);
  inv.alt_norm2 = alt.norm2();
  inv.sym_norm2 = sym.norm2();
  return inv;
}

// ---------------------------------------------------------------------------
// Gray-Hervella machinery
// ---------------------------------------------------------------------------

namespace {

struct GhBasis {
  int dim = 0;
  std::vector<Mat> uperp;  // Frobenius-orthonormal basis of u(n)_perp
  int uperp_dim = 0;
  int torsion_dim = 0;  // dim * uperp_dim
  LinearSubspace w[4];
};

Vec vectorize(const Mat& m) {
  Vec v(m.size());
  int idx = 0;
  for (int c = 0; c < m.cols(); ++c)
    for (int r = 0; r < m.rows(); ++r) v(idx++) = m(r, c);
  return v;
}

// alpha(i,j,k) of the coordinate basis tensor (slice l equal to uperp[m]).
// Conditions on torsion tensors become rows over the coordinates c[l*d+m].
double basis_alpha(const GhBasis& gb, int l, int m, int i, int j, int k) {
  if (l != i) return 0.0;
  return gb.uperp[m](k, j);
}

Vec condition_row(const GhBasis& gb, const std::function<double(int, int)>& coeff) {
  Vec row = Vec::Zero(gb.torsion_dim);
  for (int l = 0; l < gb.dim; ++l)
    for (int m = 0; m < gb.uperp_dim; ++m) row(l * gb.uperp_dim + m) = coeff(l, m);
  return row;
}

std::shared_ptr<const GhBasis> build_gh_basis(const GStructure& s) {
  detail::require(s.kind() == StructureKind::Hermitian,
                  "gh basis: Hermitian structure required");
  const int n = s.dim();
  const Mat& J = s.complex_structure();

  auto gb = std::make_shared<GhBasis>();
  gb->dim = n;

  // Frobenius-orthonormal basis of u(n)_perp from projected elementary matrices.
  Mat gens(n * n, n * (n - 1) / 2);
  int col = 0;
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k)
      gens.col(col++) = vectorize(s.project_g_perp(SkewMatrix::elementary(n, j, k)).mat());
  LinearSubspace uperp_span = span_subspace(gens, n * n);
  gb->uperp_dim = uperp_span.rank();
  for (int m = 0; m < gb->uperp_dim; ++m) {
    Mat u(n, n);
    int idx = 0;
    for (int c = 0; c < n; ++c)
      for (int r = 0; r < n; ++r) u(r, c) = uperp_span.basis()(idx++, m);
    gb->uperp.push_back(std::move(u));
  }
  gb->torsion_dim = n * gb->uperp_dim;
  const int half_n = n / 2;
  detail::require(gb->uperp_dim == half_n * half_n - half_n,
                  "gh basis: unexpected dim of u(n)_perp");

  // alpha(Je_i, Je_j, e_k) as a functional of the coordinates.
  auto twisted = [&](int l, int m, int i, int j, int k) {
    double v = 0.0;
    for (int q = 0; q < n; ++q) {
      if (J(q, j) == 0.0) continue;
      v += J(l, i) * J(q, j) * gb->uperp[m](k, q);
    }
    return v;
  };

  std::vector<Vec> w1_conditions;  // xi_X Y = -xi_Y X
  std::vector<Vec> w2_conditions;  // cyclic sum zero  AND  xi_{JX}JY = -xi_X Y
  std::vector<Vec> w3_conditions;  // xi_{JX}JY = xi_X Y  AND  chi = 0
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        if (i <= j)
          w1_conditions.push_back(condition_row(*gb, [&](int l, int m) {
            return basis_alpha(*gb, l, m, i, j, k) + basis_alpha(*gb, l, m, j, i, k);
          }));
        if (i < j && j < k)
          w2_conditions.push_back(condition_row(*gb, [&](int l, int m) {
            return basis_alpha(*gb, l, m, i, j, k) + basis_alpha(*gb, l, m, k, i, j) +
                   basis_alpha(*gb, l, m, j, k, i);
          }));
        w2_conditions.push_back(condition_row(*gb, [&](int l, int m) {
          return twisted(l, m, i, j, k) + basis_alpha(*gb, l, m, i, j, k);
        }));
        w3_conditions.push_back(condition_row(*gb, [&](int l, int m) {
          return twisted(l, m, i, j, k) - basis_alpha(*gb, l, m, i, j, k);
        }));
      }
  for (int k = 0; k < n; ++k)
    w3_conditions.push_back(condition_row(*gb, [&](int l, int m) {
      return gb->uperp[m](k, l);  // sum_i alpha(i,i,k)
    }));

  gb->w[0] = solve_subspace(w1_conditions, gb->torsion_dim);
  gb->w[1] = solve_subspace(w2_conditions, gb->torsion_dim);
  gb->w[2] = solve_subspace(w3_conditions, gb->torsion_dim);

  // W4 directly as the span of the theta-parametrized family.
  Mat w4_gens(gb->torsion_dim, n);
  for (int t = 0; t < n; ++t) {
    Vec theta = Vec::Zero(n);
    theta(t) = 1.0;
    const TorsionTensor lee = lee_pattern(s, theta);
    Vec coords = Vec::Zero(gb->torsion_dim);
    for (int l = 0; l < n; ++l) {
      const Mat sl = lee.slice(l).mat();
      for (int m = 0; m < gb->uperp_dim; ++m)
        coords(l * gb->uperp_dim + m) = (sl.array() * gb->uperp[m].array()).sum();
    }
    w4_gens.col(t) = coords;
  }
  gb->w[3] = span_subspace(w4_gens, gb->torsion_dim);

  // Self-checks: the four classes decompose the torsion space orthogonally.
  int rank_sum = 0;
  for (const auto& sub : gb->w) rank_sum += sub.rank();
  if (rank_sum != gb->torsion_dim)
    throw std::runtime_error("gh basis: class ranks sum to " + std::to_string(rank_sum) +
                             ", expected " + std::to_string(gb->torsion_dim));
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) {
      if (gb->w[a].rank() == 0 || gb->w[b].rank() == 0) continue;
      const double overlap =
          (gb->w[a].basis().transpose() * gb->w[b].basis()).cwiseAbs().maxCoeff();
      if (overlap > 1e-10)
        throw std::runtime_error("gh basis: W" + std::to_string(a + 1) + " and W" +
                                 std::to_string(b + 1) + " are not orthogonal (overlap " +
                                 std::to_string(overlap) + ")");
    }
  return gb;
}

std::shared_ptr<const GhBasis> gh_basis_for(const GStructure& s) {
  static std::mutex mtx;
  static std::map<std::vector<double>, std::shared_ptr<const GhBasis>> cache;
  std::vector<double> key;
  key.push_back(static_cast<double>(s.dim()));
  const Mat& J = s.complex_structure();
  key.insert(key.end(), J.data(), J.data() + J.size());
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto gb = build_gh_basis(s);
  cache.emplace(std::move(key), gb);
  return gb;
}

}  // namespace

std::string to_string(GhClass c) {
  switch (c) {
    case GhClass::W1: return "W1";
    case GhClass::W2: return "W2";
    case GhClass::W3: return "W3";
    case GhClass::W4: return "W4";
  }
  return "?";
}

LinearSubspace gh_subspace(GhClass c, const GStructure& hermitian) {
  detail::require(hermitian.dim() >= 4, "gh_subspace: dim >= 4 required");
  auto gb = gh_basis_for(hermitian);
  return gb->w[static_cast<int>(c)];
}

Vec gh_coordinates(const TorsionTensor& xi) {
  auto gb = gh_basis_for(xi.structure());
  Vec coords = Vec::Zero(gb->torsion_dim);
  for (int l = 0; l < gb->dim; ++l) {
    const Mat sl = xi.slice(l).mat();
    for (int m = 0; m < gb->uperp_dim; ++m)
      coords(l * gb->uperp_dim + m) = (sl.array() * gb->uperp[m].array()).sum();
  }
  return coords;
}

TorsionTensor gh_tensor_from_coordinates(const Vec& coords, const GStructure& hermitian) {
  auto gb = gh_basis_for(hermitian);
  detail::require(coords.size() == gb->torsion_dim, "gh_tensor_from_coordinates: bad length");
  std::vector<SkewMatrix> slices;
  for (int l = 0; l < gb->dim; ++l) {
    Mat s = Mat::Zero(gb->dim, gb->dim);
    for (int m = 0; m < gb->uperp_dim; ++m) s += coords(l * gb->uperp_dim + m) * gb->uperp[m];
    slices.push_back(SkewMatrix::skew_part(s));
  }
  return TorsionTensor::from_slices(slices, hermitian);
}

ClassDecomposition gh_decompose(const TorsionTensor& xi) {
  auto gb = gh_basis_for(xi.structure());
  const Vec coords = gh_coordinates(xi);
  ClassDecomposition d;
  Vec sum = Vec::Zero(coords.size());
  for (int c = 0; c < 4; ++c) {
    const Vec pc = gb->w[c].project(coords);
    sum += pc;
    d.components.emplace(to_string(static_cast<GhClass>(c)),
                         gh_tensor_from_coordinates(pc, xi.structure()));
  }
  d.residual = (coords - sum).norm();
  if (d.residual > 1e-9)
    throw std::runtime_error("gh_decompose: residual " + std::to_string(d.residual) +
                             " exceeds tolerance (convention bug?)");
  return d;
}

std::map<std::string, double> gh_energy(const ClassDecomposition& d) {
  std::map<std::string, double> e;
  for (const auto& [label, comp] : d.components) {
    const double chi2 = characteristic_vector(comp).squaredNorm();
    auto [alt, sym] = alt_sym_split(comp);
    e[label] = chi2 + alt.norm2() - sym.norm2();
  }
  return e;
}

ClassDecomposition contact_d_split(const TorsionTensor& xi) {
  detail::require(xi.structure().kind() == StructureKind::Contact,
                  "contact_d_split: structure kind mismatch");
  const int n = xi.dim();
  const int z = zeta_index(xi.structure());
  Tensor3 d1(n), d2(n), d3(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const double a = xi.alpha(i, j, k);
        if (a == 0.0) continue;
        if (i != z && j != z && k != z)
          d1(i, j, k) = a;  // ker-eta slices, ker-eta block
        else if (i != z)
          d2(i, j, k) = a;  // ker-eta slices, zeta column
        else if (j != z && k != z)
          d2(i, j, k) = a;  // zeta slice, ker-eta block
        else
          d3(i, j, k) = a;  // zeta slice, zeta column
      }
  ClassDecomposition d;
  d.components.emplace("D1", TorsionTensor(std::move(d1), xi.structure()));
  d.components.emplace("D2", TorsionTensor(std::move(d2), xi.structure()));
  d.components.emplace("D3", TorsionTensor(std::move(d3), xi.structure()));
  double sum2 = 0.0;
  for (const auto& [label, comp] : d.components) sum2 += comp.norm2();
  d.residual = std::sqrt(std::abs(xi.norm2() - sum2));
  if (d.residual > 1e-9)
    throw std::runtime_error("contact_d_split: residual exceeds tolerance");
  return d;
}

ProductTensors product_tensors(const TorsionTensor& xi) {
  detail::require(xi.structure().kind() == StructureKind::Product,
                  "product_tensors: structure kind mismatch");
  const int n = xi.dim();
  const int m = xi.structure().split_m();
  ProductTensors out;
  out.H = Vec::Zero(n);
  out.Hperp = Vec::Zero(n);
  out.T = Tensor3(n);
  out.Tperp = Tensor3(n);
  out.B = Tensor3(n);
  out.Bperp = Tensor3(n);
  // xi_X Y for X,Y in D is the D-perp part of nabla_X Y; its symmetrization is
  // the second fundamental form, its alternation the integrability tensor.
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b)
      for (int k = 0; k < n; ++k) {
        const double t = 0.5 * (xi.alpha(a, b, k) - xi.alpha(b, a, k));
        const double s = 0.5 * (xi.alpha(a, b, k) + xi.alpha(b, a, k));
        out.T(a, b, k) = t;
        out.B(a, b, k) = s;
        out.t_norm2 += t * t;
        out.b_norm2 += s * s;
      }
    for (int k = 0; k < n; ++k) out.H(k) += xi.alpha(a, a, k);
  }
  for (int a = m; a < n; ++a) {
    for (int b = m; b < n; ++b)
      for (int k = 0; k < n; ++k) {
        const double t = 0.5 * (xi.alpha(a, b, k) - xi.alpha(b, a, k));
        const double s = 0.5 * (xi.alpha(a, b, k) + xi.alpha(b, a, k));
        out.Tperp(a, b, k) = t;
        out.Bperp(a, b, k) = s;
        out.tperp_norm2 += t * t;
        out.bperp_norm2 += s * s;
      }
    for (int k = 0; k < n; ++k) out.Hperp(k) += xi.alpha(a, a, k);
  }
  out.h_norm2 = out.H.squaredNorm();
  out.hperp_norm2 = out.Hperp.squaredNorm();
  return out;
}

std::vector<PatternMatch> recognize_patterns(const TorsionTensor& xi) {
  std::vector<PatternMatch> matches;
  const double xi2 = xi.norm2();
  if (xi2 == 0.0) return matches;
  const double xi_norm = std::sqrt(xi2);
  constexpr double kFitTol = 1e-8;

  auto try_scaled = [&](const std::string& name, const TorsionTensor& unit_pattern) {
    const double p2 = unit_pattern.norm2();
    if (p2 == 0.0) return;
    double dot = 0.0;
    const auto& a = xi.components().flat();
    const auto& b = unit_pattern.components().flat();
    for (size_t idx = 0; idx < a.size(); ++idx) dot += a[idx] * b[idx];
    const double c = dot / p2;
    const double res = std::sqrt(std::max(0.0, xi2 - 2.0 * c * dot + c * c * p2)) / xi_norm;
    if (res < kFitTol && std::abs(c) > 0.0) {
      PatternMatch pm;
      pm.name = name;
      pm.scale = c;
      pm.relative_residual = res;
      matches.push_back(std::move(pm));
    }
  };

  if (xi.structure().kind() == StructureKind::Contact) {
    try_scaled("sasaki", sasaki_pattern(xi.structure(), 1.0));
    try_scaled("kenmotsu", kenmotsu_pattern(xi.structure(), 1.0));
  }
  if (xi.structure().kind() == StructureKind::Hermitian && xi.dim() >= 4) {
    const Vec chi = characteristic_vector(xi);
    const int half_n = xi.dim() / 2;
    if (half_n > 1 && chi.norm() > 0.0) {
      const Vec theta = (2.0 / (half_n - 1)) * chi;
      const TorsionTensor lee = lee_pattern(xi.structure(), theta);
      const double res = std::sqrt((xi.components() - lee.components()).norm2()) / xi_norm;
      if (res < kFitTol) {
        PatternMatch pm;
        pm.name = "lee";
        pm.scale = theta.norm();
        pm.theta = theta;
        pm.relative_residual = res;
        matches.push_back(std::move(pm));
      }
    }
  }
  return matches;
}

SuTorsionSplit su_eta_extract(const TorsionTensor& xi) {
  detail::require(xi.structure().kind() == StructureKind::SpecialHermitian,
                  "su_eta_extract: structure kind mismatch");
  const int n = xi.dim();
  const Mat& J = xi.structure().complex_structure();

  // eta(e_l) = (1/dim) sum_p J(p,l) tr(xi_{e_p} J)
  Vec tau(n);
  for (int p = 0; p < n; ++p) tau(p) = (xi.slice(p).mat() * J).trace();
  Vec eta = Vec::Zero(n);
  for (int l = 0; l < n; ++l) {
    for (int p = 0; p < n; ++p) eta(l) += J(p, l) * tau(p);
    eta(l) /= static_cast<double>(n);
  }

  Tensor3 eta_part(n);
  for (int i = 0; i < n; ++i) {
    double eji = 0.0;  // eta(J e_i)
    for (int p = 0; p < n; ++p) eji += eta(p) * J(p, i);
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) eta_part(i, j, k) = eji * J(k, j);
  }
  Tensor3 u = xi.components() - eta_part;
  SuTorsionSplit split{std::move(eta),
                       TorsionTensor(std::move(u), GStructure::hermitian(J)),
                       std::move(eta_part)};
  return split;
}

TorsionTensor random_torsion(Rng& rng, const GStructure& s) {
  const int n = s.dim();
  std::vector<SkewMatrix> slices;
  slices.reserve(n);
  for (int i = 0; i < n; ++i) {
    Mat raw(n, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) raw(r, c) = rng.gaussian();
    slices.push_back(s.project_g_perp(SkewMatrix::skew_part(raw)));
  }
  return TorsionTensor::from_slices(slices, s);
}

TorsionTensor sasaki_pattern(const GStructure& contact, double scale) {
  detail::require(contact.kind() == StructureKind::Contact,
                  "sasaki_pattern: contact structure required");
  const int n = contact.dim();
  const int z = zeta_index(contact);
  const Mat& phi = contact.phi();
  Tensor3 a(n);
  for (int i = 0; i < n; ++i) {
    if (i == z) continue;
    for (int j = 0; j < n; ++j) {
      if (j == z) continue;
      const double v = scale * phi(i, j);  // g(e_i, phi e_j)
      a(i, j, z) = v;
      a(i, z, j) = -v;
    }
  }
  return TorsionTensor(std::move(a), contact);
}

TorsionTensor kenmotsu_pattern(const GStructure& contact, double scale) {
  detail::require(contact.kind() == StructureKind::Contact,
                  "kenmotsu_pattern: contact structure required");
  const int n = contact.dim();
  const int z = zeta_index(contact);
  Tensor3 a(n);
  for (int i = 0; i < n; ++i) {
    if (i == z) continue;
    a(i, i, z) = scale;
    a(i, z, i) = -scale;
  }
  return TorsionTensor(std::move(a), contact);
}

TorsionTensor lee_pattern(const GStructure& hermitian, const Vec& theta) {
  detail::require(hermitian.kind() == StructureKind::Hermitian,
                  "lee_pattern: Hermitian structure required");
  const int n = hermitian.dim();
  detail::require(theta.size() == n, "lee_pattern: theta dimension mismatch");
  const Mat& J = hermitian.complex_structure();
  const Vec jtheta = J * theta;
  Tensor3 a(n);
  // -4 xi_X Y = theta(Y) X + theta(JY) JX - g(X,Y) theta# - g(X,JY) J theta#
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        double v = theta(j) * (i == k ? 1.0 : 0.0);
        v += -jtheta(j) * J(k, i);  // theta(J e_j) = -(J theta)_j
        v -= (i == j ? 1.0 : 0.0) * theta(k);
        v -= J(i, j) * jtheta(k);
        a(i, j, k) = -0.25 * v;
      }
  return TorsionTensor(std::move(a), hermitian);
}

}  // namespace gstruct
