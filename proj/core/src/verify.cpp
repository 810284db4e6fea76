#include "gstruct/verify.hpp"

#include <cmath>
#include <sstream>

namespace gstruct {

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

/// i7 = sum alpha(zeta, e_j, e_k) alpha(e_j, zeta, e_k): the cross pairing
/// between the zeta-slice block and the zeta-columns of the ker-eta slices.
/// It vanishes on every example in scope but not on generic D2 tensors.
double contact_i7(const TorsionTensor& xi) { return contact_invariants(xi).i7; }

}  // namespace

CheckReport make_check(std::string name, double lhs, double rhs, double tolerance,
                       std::map<std::string, std::string> metadata) {
  CheckReport r;
  r.name = std::move(name);
  r.lhs = lhs;
  r.rhs = rhs;
  r.residual = std::abs(lhs - rhs);
  r.tolerance = tolerance;
  r.pass = r.residual <= tolerance;
  r.metadata = std::move(metadata);
  return r;
}

std::vector<CheckReport> check_divergence(const ModelBundle& bundle, double tol) {
  const HomogeneousModel& model = bundle.model;
  const GStructure& s = bundle.structure;
  const TorsionTensor xi = intrinsic_torsion(model, s);
  const Vec chi = characteristic_vector(xi);
  const double div_chi = invariant_divergence(model, chi);
  const double chi2 = chi.squaredNorm();
  auto [alt, sym] = alt_sym_split(xi);
  const double alt2 = alt.norm2();
  const double sym2 = sym.norm2();

  const CurvatureOperator r = nomizu_curvature(model);
  const double sg = s_gperp(r, s);
  const double salt = s_alt_gperp(xi);
  const double scal = scalar_curvature(r);
  const CurvatureOperator rg = connection_curvature(model, g_connection_map(model, s));
  const double s_g = scalar_curvature(rg);

  std::map<std::string, std::string> meta{
      {"model", model.name},
      {"structure", to_string(s.kind())},
      {"xi_convention", "xi = Lambda_gperp"},
      {"s_gperp", fmt(sg)},
      {"s_alt_gperp", fmt(salt)},
  };
  std::vector<CheckReport> out;
  out.push_back(make_check("divergence_formula", div_chi,
                           0.5 * salt - 0.5 * sg + chi2 + alt2 - sym2, tol, meta));
  meta["s_G"] = fmt(s_g);
  out.push_back(make_check("divergence_formula_connection", 2.0 * div_chi,
                           s_g - scal + chi2 + alt2 - sym2, tol, meta));
  return out;
}

CheckReport check_walczak(const HomogeneousModel& model, int m_split, double tol) {
  const GStructure prod = GStructure::product(model.dim(), m_split);
  const TorsionTensor xi = intrinsic_torsion(model, prod);
  const ProductTensors pt = product_tensors(xi);
  const CurvatureOperator r = nomizu_curvature(model);
  const double smix = s_mix(r, prod);
  const double div_h = invariant_divergence(model, pt.H + pt.Hperp);
  const double rhs = -smix + pt.h_norm2 + pt.hperp_norm2 + pt.t_norm2 + pt.tperp_norm2 -
                     pt.b_norm2 - pt.bperp_norm2;
  return make_check("walczak_divergence", -div_h, rhs, tol,
                    {{"model", model.name},
                     {"m", std::to_string(m_split)},
                     {"s_mix", fmt(smix)}});
}

CheckReport check_bor_lamoneda(const ModelBundle& bundle, double tol) {
  detail::require(bundle.structure.kind() == StructureKind::Hermitian,
                  "check_bor_lamoneda: Hermitian structure required");
  const TorsionTensor xi = intrinsic_torsion(bundle.model, bundle.structure);
  const ClassDecomposition d = gh_decompose(xi);
  const Vec chi = characteristic_vector(xi);
  const double div_chi = invariant_divergence(bundle.model, chi);
  const CurvatureOperator r = nomizu_curvature(bundle.model);
  const double scal = scalar_curvature(r);
  const double sstar = star_scalar(r, bundle.structure);
  const int half_n = bundle.model.dim() / 2;
  const double rhs = d.component_norm2("W1") - 0.5 * d.component_norm2("W2") +
                     0.5 * (half_n - 1) * d.component_norm2("W4") - 0.25 * (scal - sstar);
  return make_check("bor_lamoneda", div_chi, rhs, tol, {{"model", bundle.model.name}});
}

std::vector<CheckReport> check_contact_propositions(const ModelBundle& bundle, double tol) {
  detail::require(bundle.structure.kind() == StructureKind::Contact,
                  "check_contact_propositions: contact structure required");
  const HomogeneousModel& model = bundle.model;
  const GStructure& s = bundle.structure;
  const TorsionTensor xi = intrinsic_torsion(model, s);
  const ContactInvariants inv = contact_invariants(xi);
  const CurvatureOperator r = nomizu_curvature(model);
  const double scal = scalar_curvature(r);
  const double sstar = star_scalar(r, s);
  const Mat ric = ricci(r);
  const Vec zeta = s.zeta();
  const double ric_zeta = zeta.dot(ric * zeta);
  const double sg = s_gperp(r, s);
  const double salt = s_alt_gperp(xi);
  const Vec chi = characteristic_vector(xi);
  const double div_chi = invariant_divergence(model, chi);

  std::map<std::string, std::string> meta{{"model", model.name}};
  std::vector<CheckReport> out;
  out.push_back(make_check("contact_s_gperp_relation", sg,
                           0.5 * (scal - sstar) + ric_zeta, tol, meta));
  out.push_back(make_check("contact_s_alt_relation", salt,
                           0.5 * (inv.i8 - inv.i10 + inv.i12 + inv.i14) +
                               2.0 * (inv.i7 - inv.i17),
                           tol, meta));
  // Invariant form of the divergence formula. The i14 sign and the i7/i17
  // cross terms follow from the scalar relations above; see README notes.
  out.push_back(make_check(
      "contact_divergence_invariant_form", div_chi,
      -inv.i2 + inv.i4 - 0.75 * inv.i8 + 0.75 * inv.i10 + 0.25 * inv.i12 +
          0.25 * inv.i14 - inv.i7 + inv.i17 - 0.25 * (scal - sstar) - 0.5 * ric_zeta,
      tol, meta));

  // chi = 0 branch: |T|^2 - |B|^2 in terms of the curvature scalars (the
  // ker-eta distribution with zeta the unit normal).
  if (chi.norm() < tol) {
    const GStructure prod = GStructure::product(model.dim(), model.dim() - 1);
    const TorsionTensor xi_p = intrinsic_torsion(model, prod);
    const ProductTensors pt = product_tensors(xi_p);
    const double lhs = pt.t_norm2 - pt.b_norm2;
    const double rhs =
        -0.5 * salt + 0.25 * (scal - sstar) + 0.5 * ric_zeta + 2.0 * inv.i7;
    auto m2 = meta;
    m2["i7"] = fmt(inv.i7);
    out.push_back(make_check("contact_tb_identity", lhs, rhs, tol, m2));
  }
  return out;
}

std::vector<CheckReport> check_contact_propositions(const PointwiseModel& pm, double tol) {
  const TorsionTensor& xi = pm.xi;
  const int half_n = (pm.dim - 1) / 2;
  const double salt = s_alt_gperp(xi);
  const double i7 = contact_i7(xi);

  std::map<std::string, std::string> meta{
      {"model", pm.name},
      {"scalars", "implied by C(alpha), alpha = " + fmt(pm.alpha)},
  };
  std::vector<CheckReport> out;
  // div(nabla_zeta zeta) = 1/2 s_alt + 1/2 Ric(zeta,zeta) - 1/4 (s - s*);
  // for these structures nabla_zeta zeta = 0.
  out.push_back(make_check("contact_d2_divergence", 0.0,
                           0.5 * salt + 0.5 * pm.ric_zeta - 0.25 * pm.s_minus_sstar -
                               2.0 * i7,
                           tol, meta));
  const double alpha_rec = (0.5 * salt - 2.0 * i7 - 0.0) / (half_n * (half_n - 1));
  out.push_back(make_check("c_alpha_recovery", alpha_rec, pm.alpha, tol, meta));

  const ClassDecomposition d = contact_d_split(xi);
  out.push_back(make_check("d2_membership", d.component_norm2("D2"), xi.norm2(), tol, meta));
  return out;
}

FuzzSpace fuzz_space_from_string(const std::string& s) {
  if (s == "hermitian") return FuzzSpace::Hermitian;
  if (s == "contact") return FuzzSpace::Contact;
  if (s == "product") return FuzzSpace::Product;
  if (s == "su") return FuzzSpace::Su;
  throw std::invalid_argument("unknown fuzz space '" + s + "'");
}

std::string to_string(FuzzSpace space) {
  switch (space) {
    case FuzzSpace::Hermitian: return "hermitian";
    case FuzzSpace::Contact: return "contact";
    case FuzzSpace::Product: return "product";
    case FuzzSpace::Su: return "su";
  }
  return "?";
}

namespace {

class PropertyRecorder {
 public:
  PropertyRecorder(FuzzSummary& summary, uint64_t iter_seed)
      : summary_(summary), iter_seed_(iter_seed) {}

  void operator()(const std::string& property, double residual) {
    auto& slot = summary_.property_max_residual[property];
    slot = std::max(slot, residual);
    summary_.max_residual = std::max(summary_.max_residual, residual);
    if (residual > kIdentityTol) {
      ++summary_.failures;
      if (summary_.first_failure_property.empty()) {
        summary_.first_failure_property = property;
        summary_.first_failure_seed = iter_seed_;
      }
    }
  }

 private:
  FuzzSummary& summary_;
  uint64_t iter_seed_;
};

SkewMatrix random_skew(Rng& rng, int n) {
  Mat raw(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) raw(i, j) = rng.gaussian();
  return SkewMatrix::skew_part(raw);
}

void projector_properties(Rng& rng, const GStructure& s, PropertyRecorder& rec) {
  const SkewMatrix a = random_skew(rng, s.dim());
  const SkewMatrix b = random_skew(rng, s.dim());
  const SkewMatrix pa = s.project_g_perp(a);
  const SkewMatrix pb = s.project_g_perp(b);
  rec("projector_idempotent", (s.project_g_perp(pa) - pa).frobenius_norm());
  rec("projector_self_adjoint", std::abs(so_inner(pa, b) - so_inner(a, pb)));
  rec("projector_orthogonal_split", std::abs(so_inner(pa, a - pa)));
}

void norm_split_properties(const TorsionTensor& xi, PropertyRecorder& rec) {
  auto [alt, sym] = alt_sym_split(xi);
  rec("norm_split", std::abs(xi.norm2() - alt.norm2() - sym.norm2()));
  rec("cross_term", std::abs(cross_term(xi) - (sym.norm2() - alt.norm2())));
}

void hermitian_iteration(uint64_t iter_seed, int dim, PropertyRecorder& rec) {
  Rng rng(iter_seed);
  const GStructure s = GStructure::standard_hermitian(dim);
  projector_properties(rng, s, rec);

  const TorsionTensor xi = random_torsion(rng, s);
  norm_split_properties(xi, rec);
  rec("s_alt_gperp_vanishes", std::abs(s_alt_gperp(xi)));

  const HermitianInvariants inv = hermitian_invariants(xi);
  rec("inv_i1_norm", std::abs(inv.i1 - inv.xi_norm2));
  rec("inv_i2_cross", std::abs(inv.i2 - (inv.sym_norm2 - inv.alt_norm2)));
  rec("inv_i4_chi", std::abs(inv.i4 - inv.chi_norm2));

  // Closure: [u_perp, u_perp] lies in u(n).
  const SkewMatrix pa = s.project_g_perp(random_skew(rng, dim));
  const SkewMatrix pb = s.project_g_perp(random_skew(rng, dim));
  rec("uperp_bracket_closure", s.project_g_perp(bracket(pa, pb)).frobenius_norm());

  const ClassDecomposition d = gh_decompose(xi);
  rec("gh_residual", d.residual);
  double sum2 = 0.0;
  for (const auto& [label, comp] : d.components) sum2 += comp.norm2();
  rec("gh_pythagoras", std::abs(sum2 - xi.norm2()));

  int rank_sum = 0;
  for (GhClass c : {GhClass::W1, GhClass::W2, GhClass::W3, GhClass::W4})
    rank_sum += gh_subspace(c, s).rank();
  const int half_n = dim / 2;
  const int expected = dim * (half_n * half_n - half_n);
  rec("gh_rank_sum", std::abs(static_cast<double>(rank_sum - expected)));

  // Energy closed forms E1 = |xi1|^2, E2 = -1/2 |xi2|^2, E3 = 0,
  // E4 = (n-1)/2 |xi4|^2.
  const auto energy = gh_energy(d);
  rec("gh_energy_w1", std::abs(energy.at("W1") - d.component_norm2("W1")));
  rec("gh_energy_w2", std::abs(energy.at("W2") + 0.5 * d.component_norm2("W2")));
  rec("gh_energy_w3", std::abs(energy.at("W3")));
  rec("gh_energy_w4",
      std::abs(energy.at("W4") - 0.5 * (half_n - 1) * d.component_norm2("W4")));

  // W1+W2 is the -1 eigenspace of xi -> xi_{JX}JY.
  {
    const Mat& J = s.complex_structure();
    Tensor3 w12(dim);
    const TorsionTensor& x1 = d.at("W1");
    const TorsionTensor& x2 = d.at("W2");
    double worst = 0.0;
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j)
        for (int k = 0; k < dim; ++k) {
          double twisted = 0.0;
          for (int p = 0; p < dim; ++p) {
            if (J(p, i) == 0.0) continue;
            for (int q = 0; q < dim; ++q) {
              if (J(q, j) == 0.0) continue;
              twisted += J(p, i) * J(q, j) * (x1.alpha(p, q, k) + x2.alpha(p, q, k));
            }
          }
          worst = std::max(worst,
                           std::abs(twisted + x1.alpha(i, j, k) + x2.alpha(i, j, k)));
        }
    rec("gh_w12_eigenspace", worst);
  }

  // eq:sunbot on a Bianchi-respecting curvature operator.
  const CurvatureOperator r = random_algebraic_curvature(Rng::derive_seed(iter_seed, 101), dim);
  rec("bianchi_residual", bianchi_residual(r));
  rec("pair_symmetry", pair_symmetry_residual(r));
  const double sg = s_gperp(r, s);
  const double scal = scalar_curvature(r);
  const double sstar = star_scalar(r, s);
  rec("sunbot", std::abs(sg - 0.5 * (scal - sstar)));
}

void contact_iteration(uint64_t iter_seed, int dim, PropertyRecorder& rec) {
  Rng rng(iter_seed);
  const GStructure s = GStructure::standard_contact(dim);
  projector_properties(rng, s, rec);

  // Projected elements satisfy xi_X Y = phi(xi_X phi Y) + eta(xi_X Y) zeta
  // + eta(Y) xi_X zeta.
  {
    const SkewMatrix pa = s.project_g_perp(random_skew(rng, dim));
    const Mat& phi = s.phi();
    const Vec& zeta = s.zeta();
    const Mat lhs = pa.mat();
    const Mat rhs = phi * pa.mat() * phi + zeta * (zeta.transpose() * pa.mat()) +
                    (pa.mat() * zeta) * zeta.transpose();
    rec("contact_projector_relation", (lhs - rhs).norm());
  }

  const TorsionTensor xi = random_torsion(rng, s);
  norm_split_properties(xi, rec);

  const ContactInvariants v = contact_invariants(xi);
  rec("contact_norm_identity", std::abs(v.xi_norm2 - (v.i1 + v.i5 + 2 * v.i6 + 2 * v.i16)));
  rec("contact_chi_identity",
      std::abs(v.chi_norm2 - (v.i4 + v.i10 + v.i16 + 2 * v.i17)));
  rec("contact_cross_identity",
      std::abs((v.sym_norm2 - v.alt_norm2) - (v.i2 + 2 * v.i7 + v.i8 + v.i16)));
  rec("contact_s_alt_invariants",
      std::abs(s_alt_gperp(xi) - (0.5 * (v.i8 - v.i10 + v.i12 + v.i14) +
                                  2.0 * (v.i7 - v.i17))));

  const ClassDecomposition d = contact_d_split(xi);
  rec("d_split_residual", d.residual);
  double sum2 = 0.0;
  for (const auto& [label, comp] : d.components) sum2 += comp.norm2();
  rec("d_split_pythagoras", std::abs(sum2 - xi.norm2()));

  // chi of the D2 part is proportional to zeta.
  {
    const Vec chi2 = characteristic_vector(d.at("D2"));
    Vec chi2_ker = chi2;
    chi2_ker(dim - 1) = 0.0;
    rec("d2_chi_along_zeta", chi2_ker.norm());
  }
  // D3: |chi|^2 + |alt|^2 - |sym|^2 = 0 and s_alt vanishes.
  {
    const TorsionTensor& d3 = d.at("D3");
    auto [alt, sym] = alt_sym_split(d3);
    const double chi2 = characteristic_vector(d3).squaredNorm();
    rec("d3_energy_zero", std::abs(chi2 + alt.norm2() - sym.norm2()));
    rec("d3_s_alt_zero", std::abs(s_alt_gperp(d3)));
  }
  // The algebraic part of the D2 identity: |T|^2 - |B|^2 = -i8, where T and B
  // are the alternation/symmetrization of the zeta-column block.
  {
    const TorsionTensor& d2 = d.at("D2");
    const ContactInvariants v2 = contact_invariants(d2);
    const GStructure prod = GStructure::product(dim, dim - 1);
    std::vector<SkewMatrix> slices;
    slices.reserve(dim);
    for (int i = 0; i < dim; ++i) slices.push_back(prod.project_g_perp(d2.slice(i)));
    const ProductTensors pt = product_tensors(TorsionTensor::from_slices(slices, prod));
    rec("d2_tb_identity", std::abs((pt.t_norm2 - pt.b_norm2) + v2.i8));
  }

  const CurvatureOperator r = random_algebraic_curvature(Rng::derive_seed(iter_seed, 202), dim);
  const double sg = s_gperp(r, s);
  const double scal = scalar_curvature(r);
  const double sstar = star_scalar(r, s);
  const Mat ric = ricci(r);
  const double ric_zeta = s.zeta().dot(ric * s.zeta());
  rec("contact_s_gperp_relation", std::abs(sg - (0.5 * (scal - sstar) + ric_zeta)));
}

void product_iteration(uint64_t iter_seed, int dim, PropertyRecorder& rec) {
  Rng rng(iter_seed);
  const int m = dim / 2;
  const GStructure s = GStructure::product(dim, m);
  projector_properties(rng, s, rec);

  const TorsionTensor xi = random_torsion(rng, s);
  norm_split_properties(xi, rec);
  rec("s_alt_gperp_vanishes", std::abs(s_alt_gperp(xi)));

  const ProductTensors pt = product_tensors(xi);
  const Vec chi = characteristic_vector(xi);
  rec("chi_mean_curvature", (chi - pt.H - pt.Hperp).norm());

  auto [alt, sym] = alt_sym_split(xi);
  rec("walczak_alt_sym",
      std::abs((alt.norm2() - sym.norm2()) -
               (pt.t_norm2 + pt.tperp_norm2 - pt.b_norm2 - pt.bperp_norm2)));
  // Block decomposition of |alt|^2: mixed slots contribute half of the
  // D-D plus Dperp-Dperp squared norms.
  {
    double dd = 0.0, pp = 0.0;
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j)
        for (int k = 0; k < dim; ++k) {
          const double a = xi.alpha(i, j, k);
          if (i < m && j < m) dd += a * a;
          if (i >= m && j >= m) pp += a * a;
        }
    rec("alt_block_decomposition",
        std::abs(alt.norm2() - (pt.t_norm2 + pt.tperp_norm2 + 0.5 * (dd + pp))));
    rec("sym_block_decomposition",
        std::abs(sym.norm2() - (pt.b_norm2 + pt.bperp_norm2 + 0.5 * (dd + pp))));
  }

  const CurvatureOperator r = random_algebraic_curvature(Rng::derive_seed(iter_seed, 303), dim);
  rec("s_gperp_twice_mix", std::abs(s_gperp(r, s) - 2.0 * s_mix(r, s)));
  // Codimension-one specialization: s_mix = Ric(zeta, zeta).
  {
    const GStructure codim1 = GStructure::product(dim, dim - 1);
    const Mat ric = ricci(r);
    rec("s_mix_codim1", std::abs(s_mix(r, codim1) - ric(dim - 1, dim - 1)));
    const GStructure line = GStructure::product(dim, 1);
    rec("s_mix_line", std::abs(s_mix(r, line) - ric(0, 0)));
  }
}

void su_iteration(uint64_t iter_seed, int dim, PropertyRecorder& rec) {
  Rng rng(iter_seed);
  const GStructure su = GStructure::standard_special_hermitian(dim);
  const GStructure u = GStructure::standard_hermitian(dim);
  projector_properties(rng, su, rec);
  const int half_n = dim / 2;
  const Mat& J = su.complex_structure();
  const SkewMatrix j_elem = SkewMatrix::skew_part(J);

  // [A,B]_{su_perp} = -tr(A0 B0 J)/n J + 2 (mu A0 - lambda B0) J for
  // A = A0 + lambda J, B = B0 + mu J with A0, B0 in u(n)_perp.
  {
    const SkewMatrix a0 = u.project_g_perp(random_skew(rng, dim));
    const SkewMatrix b0 = u.project_g_perp(random_skew(rng, dim));
    const double lambda = rng.gaussian();
    const double mu = rng.gaussian();
    const SkewMatrix a = a0 + j_elem * lambda;
    const SkewMatrix b = b0 + j_elem * mu;
    const SkewMatrix lhs = su.project_g_perp(bracket(a, b));
    const Mat rhs = -((a0.mat() * b0.mat() * J).trace() / half_n) * J +
                    2.0 * (mu * a0.mat() - lambda * b0.mat()) * J;
    rec("su_commutator_projection", (lhs.mat() - rhs).norm());
  }

  // eta extraction round trip on a synthetic W5 part plus u(n)_perp noise.
  {
    const TorsionTensor u_noise = random_torsion(rng, u);
    Vec theta(dim);
    for (int i = 0; i < dim; ++i) theta(i) = rng.gaussian();
    Tensor3 a(dim);
    for (int i = 0; i < dim; ++i) {
      double tji = 0.0;  // theta(J e_i)
      for (int p = 0; p < dim; ++p) tji += theta(p) * J(p, i);
      for (int jj = 0; jj < dim; ++jj)
        for (int k = 0; k < dim; ++k)
          a(i, jj, k) = u_noise.alpha(i, jj, k) + tji * J(k, jj);
    }
    const TorsionTensor xi(a, su);
    const SuTorsionSplit split = su_eta_extract(xi);
    rec("su_eta_roundtrip", (split.eta - theta).norm());
    rec("su_u_part_match",
        std::sqrt((split.u_part.components() - u_noise.components()).norm2()));
  }

  const CurvatureOperator r = random_algebraic_curvature(Rng::derive_seed(iter_seed, 404), dim);
  const double sr = s_r_component(r, su);
  const double sstar = star_scalar(r, su);
  rec("s_r_component", std::abs(sr - sstar / half_n));
}

}  // namespace

FuzzSummary fuzz_campaign(FuzzSpace space, int dim, int iterations, uint64_t seed) {
  detail::require(iterations >= 1, "fuzz_campaign: iterations >= 1");
  switch (space) {
    case FuzzSpace::Hermitian:
    case FuzzSpace::Su:
      detail::require(dim >= 4 && dim % 2 == 0, "fuzz_campaign: even dim >= 4 required");
      break;
    case FuzzSpace::Contact:
      detail::require(dim >= 5 && dim % 2 == 1, "fuzz_campaign: odd dim >= 5 required");
      break;
    case FuzzSpace::Product:
      detail::require(dim >= 2, "fuzz_campaign: dim >= 2 required");
      break;
  }
  FuzzSummary summary;
  summary.space = space;
  summary.dim = dim;
  summary.iterations = iterations;
  summary.seed = seed;
  for (int it = 0; it < iterations; ++it) {
    const uint64_t iter_seed = Rng::derive_seed(seed, static_cast<uint64_t>(it));
    PropertyRecorder rec(summary, iter_seed);
    switch (space) {
      case FuzzSpace::Hermitian: hermitian_iteration(iter_seed, dim, rec); break;
      case FuzzSpace::Contact: contact_iteration(iter_seed, dim, rec); break;
      case FuzzSpace::Product: product_iteration(iter_seed, dim, rec); break;
      case FuzzSpace::Su: su_iteration(iter_seed, dim, rec); break;
    }
  }
  return summary;
}

}  // namespace gstruct
