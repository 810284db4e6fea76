#include "gstruct/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace gstruct {

namespace jsonw {

std::string number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  out += "\"";
  return out;
}

namespace {

std::string number(int v) { return std::to_string(v); }

std::string pairs_to_object(const std::vector<std::pair<std::string, double>>& kv) {
  std::string out = "{";
  bool first = true;
  for (const auto& [k, v] : kv) {
    if (!first) out += ",";
    first = false;
    out += quoted(k) + ":" + number(v);
  }
  return out + "}";
}

std::string pairs_to_object(const std::vector<std::pair<std::string, std::string>>& kv) {
  std::string out = "{";
  bool first = true;
  for (const auto& [k, v] : kv) {
    if (!first) out += ",";
    first = false;
    out += quoted(k) + ":" + quoted(v);
  }
  return out + "}";
}

std::string doubles_to_array(const std::vector<double>& v) {
  std::string out = "[";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += number(v[i]);
  }
  return out + "]";
}

std::string matrix_to_json(const Mat& m) {
  std::string out = "[";
  for (int r = 0; r < m.rows(); ++r) {
    if (r) out += ",";
    out += "[";
    for (int c = 0; c < m.cols(); ++c) {
      if (c) out += ",";
      out += number(m(r, c));
    }
    out += "]";
  }
  return out + "]";
}

std::string vector_to_json(const Vec& v) {
  std::string out = "[";
  for (int i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += number(v(i));
  }
  return out + "]";
}

}  // namespace
}  // namespace jsonw

bool ModelReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

namespace {

using jsonw::quoted;

std::string check_to_json(const CheckReport& c) {
  std::string out = "{";
  out += quoted("name") + ":" + quoted(c.name);
  out += "," + quoted("lhs") + ":" + jsonw::number(c.lhs);
  out += "," + quoted("rhs") + ":" + jsonw::number(c.rhs);
  out += "," + quoted("residual") + ":" + jsonw::number(c.residual);
  out += "," + quoted("tolerance") + ":" + jsonw::number(c.tolerance);
  out += "," + quoted("pass") + ":" + (c.pass ? "true" : "false");
  return out + "}";
}

double rel_tol(double expected, double floor_tol) {
  return std::max(floor_tol, kClosedFormRelTol * std::abs(expected));
}

std::vector<std::string> active_labels(const std::vector<std::pair<std::string, double>>& norms,
                                       double total) {
  std::vector<std::string> out;
  const double cut = std::max(1e-9, 1e-9 * total);
  for (const auto& [label, n2] : norms)
    if (n2 > cut) out.push_back(label);
  return out;
}

std::vector<std::pair<std::string, std::string>> base_conventions() {
  return {
      {"e_jk", "(j,k)-entry +1, (k,j)-entry -1"},
      {"so_inner", "<A,B> = -1/2 tr(AB)"},
      {"xi", "Lambda_gperp (negative of nabla^G - nabla)"},
      {"curvature", "R(X,Y) = [nabla_X,nabla_Y] - nabla_[X,Y]; R(X,Y,Z,W) = <R(X,Y)Z,W>"},
      {"s_gperp", "sum_ij <P(R(e_i,e_j)) e_j, e_i>"},
  };
}

void add_contact_invariants(ModelReport& rep, const ContactInvariants& v) {
  rep.torsion_scalars.insert(rep.torsion_scalars.end(),
                             {{"xi_norm2", v.xi_norm2},
                              {"chi_norm2", v.chi_norm2},
                              {"alt_norm2", v.alt_norm2},
                              {"sym_norm2", v.sym_norm2},
                              {"i1", v.i1},
                              {"i2", v.i2},
                              {"i4", v.i4},
                              {"i5", v.i5},
                              {"i6", v.i6},
                              {"i7", v.i7},
                              {"i8", v.i8},
                              {"i10", v.i10},
                              {"i12", v.i12},
                              {"i14", v.i14},
                              {"i16", v.i16},
                              {"i17", v.i17}});
}

void add_flag_regressions(ModelReport& rep, const ModelBundle& bundle, double tol) {
  const double t = bundle.model.params.at("t");
  const TorsionTensor xi = intrinsic_torsion(bundle.model, bundle.structure);
  const Vec chi = characteristic_vector(xi);
  const double cross = cross_term(xi);
  const CurvatureOperator r = nomizu_curvature(bundle.model);
  const double sg = s_gperp(r, bundle.structure);

  rep.checks.push_back(make_check("flag_chi_vanishes", chi.norm(), 0.0, tol));
  rep.checks.push_back(
      make_check("flag_cross_term", cross, 4.0 * (t - 2.0), rel_tol(4.0 * (t - 2.0), tol)));
  rep.checks.push_back(make_check("flag_s_gperp_abs", std::abs(sg), 8.0 * std::abs(2.0 - t),
                                  rel_tol(8.0 * (2.0 - t), tol),
                                  {{"sign_ledger", "s_gperp = +8(2-t)"}}));
  const ClassDecomposition d = gh_decompose(xi);
  rep.checks.push_back(make_check(
      "flag_class_w1w2", d.component_norm2("W3") + d.component_norm2("W4"), 0.0, tol));
}

void add_stiefel_regressions(ModelReport& rep, const ModelBundle& bundle, double tol) {
  const double t = bundle.model.params.at("t");
  const TorsionTensor xi = intrinsic_torsion(bundle.model, bundle.structure);
  const CurvatureOperator r = nomizu_curvature(bundle.model);
  const double s = scalar_curvature(r);
  const double ss = star_scalar(r, bundle.structure);
  const Mat ric = ricci(r);
  const Vec& zeta = bundle.structure.zeta();
  const double rz = zeta.dot(ric * zeta);
  const double sg = s_gperp(r, bundle.structure);
  const double salt = s_alt_gperp(xi);
  auto [alt, sym] = alt_sym_split(xi);

  rep.checks.push_back(make_check("stiefel_s", s, 2.0 * (4.0 - t), rel_tol(2.0 * (4.0 - t), tol)));
  rep.checks.push_back(
      make_check("stiefel_s_star", ss, 2.0 * (4.0 - 5.0 * t), rel_tol(2.0 * (4.0 - 5.0 * t), tol)));
  rep.checks.push_back(make_check("stiefel_ric_zeta", rz, 2.0 * t, rel_tol(2.0 * t, tol)));
  rep.checks.push_back(make_check("stiefel_s_gperp", sg, 6.0 * t, rel_tol(6.0 * t, tol),
                                  {{"sign_ledger", "s_gperp = +6t"}}));
  rep.checks.push_back(make_check("stiefel_s_alt_gperp", salt, 2.0 * t, rel_tol(2.0 * t, tol)));
  rep.checks.push_back(make_check("stiefel_combination",
                                  0.5 * salt - 0.5 * sg + alt.norm2() - sym.norm2(), 0.0, tol,
                                  {{"pattern", "t - 3t + 2t = 0"}}));

  bool found = false;
  for (const auto& pm : recognize_patterns(xi)) {
    if (pm.name != "sasaki") continue;
    found = true;
    rep.checks.push_back(
        make_check("stiefel_sasaki_scale", pm.scale, std::sqrt(t / 2.0), 1e-8));
  }
  if (!found) rep.checks.push_back(make_check("stiefel_sasaki_scale", 1.0, 0.0, tol));
}

void add_heisenberg_regressions(ModelReport& rep, const ModelBundle& bundle, double tol) {
  const int n = static_cast<int>(bundle.model.params.at("n"));
  const int dim = bundle.model.dim();
  const CurvatureOperator r = nomizu_curvature(bundle.model);
  const double s = scalar_curvature(r);
  const double ss = star_scalar(r, bundle.structure);
  const Mat ric = ricci(r);
  const Vec& zeta = bundle.structure.zeta();
  const double rz = zeta.dot(ric * zeta);

  rep.checks.push_back(make_check("heisenberg_s", s, -0.5 * n, tol));
  rep.checks.push_back(make_check("heisenberg_s_star", ss, 0.5 * n, tol));
  rep.checks.push_back(make_check("heisenberg_ric_zeta", rz, -0.5 * n, tol));
  rep.checks.push_back(
      make_check("heisenberg_div_zeta", invariant_divergence(bundle.model, zeta), 0.0, tol));

  const GStructure prod = GStructure::product(dim, dim - 1);
  const ProductTensors pt = product_tensors(intrinsic_torsion(bundle.model, prod));
  rep.checks.push_back(make_check("heisenberg_b_norm2", pt.b_norm2, 0.5 * n, tol));
  rep.checks.push_back(make_check("heisenberg_t_norm2", pt.t_norm2, 0.0, tol));
  rep.checks.push_back(make_check("heisenberg_prop412_2_value", pt.t_norm2 - pt.b_norm2,
                                  -0.5 * n, tol));
}

ModelReport hermitian_bundle_report(const ModelBundle& bundle, double tol) {
  ModelReport rep;
  rep.model = bundle.model.name;
  for (const auto& [k, v] : bundle.model.params) rep.params.emplace_back(k, v);
  rep.conventions = base_conventions();

  const TorsionTensor xi = intrinsic_torsion(bundle.model, bundle.structure);
  const CurvatureOperator r = nomizu_curvature(bundle.model);
  const double s = scalar_curvature(r);
  const double ss = star_scalar(r, bundle.structure);
  const double sg = s_gperp(r, bundle.structure);
  const double salt = s_alt_gperp(xi);
  const Vec chi = characteristic_vector(xi);
  const double div_chi = invariant_divergence(bundle.model, chi);
  const CurvatureOperator rg =
      connection_curvature(bundle.model, g_connection_map(bundle.model, bundle.structure));

  const ClassDecomposition d = gh_decompose(xi);
  rep.scalars = {{"s", s},
                 {"s_star", ss},
                 {"s_gperp", sg},
                 {"s_alt_gperp", salt},
                 {"s_G", scalar_curvature(rg)},
                 {"div_chi", div_chi},
                 {"chern_trace", chern_trace(d, ss)}};

  const HermitianInvariants inv = hermitian_invariants(xi);
  rep.torsion_scalars = {{"xi_norm2", inv.xi_norm2}, {"chi_norm2", inv.chi_norm2},
                         {"alt_norm2", inv.alt_norm2}, {"sym_norm2", inv.sym_norm2},
                         {"cross_term", cross_term(xi)}, {"i1", inv.i1},
                         {"i2", inv.i2}, {"i3", inv.i3}, {"i4", inv.i4}};
  rep.alpha_flat = xi.components().flat();
  for (const auto& [label, comp] : d.components)
    rep.class_norms.emplace_back(label, comp.norm2());
  rep.classes = active_labels(rep.class_norms, xi.norm2());
  rep.patterns = recognize_patterns(xi);

  for (auto& c : check_divergence(bundle, tol)) rep.checks.push_back(std::move(c));
  rep.checks.push_back(make_check("eq_sunbot", sg, 0.5 * (s - ss), tol));
  rep.checks.push_back(check_bor_lamoneda(bundle, tol));
  if (bundle.model.split)
    rep.checks.push_back(check_walczak(bundle.model,
                                       static_cast<int>(bundle.model.split->first.size()), tol));
  if (rep.model == "flag") add_flag_regressions(rep, bundle, tol);
  return rep;
}

ModelReport contact_bundle_report(const ModelBundle& bundle, double tol) {
  ModelReport rep;
  rep.model = bundle.model.name;
  for (const auto& [k, v] : bundle.model.params) rep.params.emplace_back(k, v);
  rep.conventions = base_conventions();
  if (rep.model == "stiefel")
    rep.conventions.emplace_back("source_tables",
                                 "converted from (i,j)-entry -1 convention by one negation");

  const TorsionTensor xi = intrinsic_torsion(bundle.model, bundle.structure);
  const CurvatureOperator r = nomizu_curvature(bundle.model);
  const double s = scalar_curvature(r);
  const double ss = star_scalar(r, bundle.structure);
  const Mat ric = ricci(r);
  const Vec& zeta = bundle.structure.zeta();
  const CurvatureOperator rg =
      connection_curvature(bundle.model, g_connection_map(bundle.model, bundle.structure));
  rep.scalars = {{"s", s},
                 {"s_star", ss},
                 {"ric_zeta", zeta.dot(ric * zeta)},
                 {"s_gperp", s_gperp(r, bundle.structure)},
                 {"s_alt_gperp", s_alt_gperp(xi)},
                 {"s_G", scalar_curvature(rg)},
                 {"div_chi", invariant_divergence(bundle.model, characteristic_vector(xi))}};

  add_contact_invariants(rep, contact_invariants(xi));
  rep.alpha_flat = xi.components().flat();

  const ClassDecomposition d = contact_d_split(xi);
  for (const auto& [label, comp] : d.components)
    rep.class_norms.emplace_back(label, comp.norm2());
  rep.classes = active_labels(rep.class_norms, xi.norm2());
  rep.patterns = recognize_patterns(xi);

  for (auto& c : check_divergence(bundle, tol)) rep.checks.push_back(std::move(c));
  for (auto& c : check_contact_propositions(bundle, tol)) rep.checks.push_back(std::move(c));
  if (rep.model == "heisenberg")
    rep.checks.push_back(check_walczak(bundle.model, bundle.model.dim() - 1, tol));
  if (rep.model == "stiefel") add_stiefel_regressions(rep, bundle, tol);
  if (rep.model == "heisenberg") add_heisenberg_regressions(rep, bundle, tol);
  return rep;
}

}  // namespace

ModelReport bundle_report(const ModelBundle& bundle, double tol) {
  switch (bundle.structure.kind()) {
    case StructureKind::Hermitian:
      return hermitian_bundle_report(bundle, tol);
    case StructureKind::Contact:
      return contact_bundle_report(bundle, tol);
    default:
      throw std::invalid_argument("bundle_report: unsupported structure kind");
  }
}

ModelReport pointwise_report(const PointwiseModel& pm, double tol) {
  ModelReport rep;
  rep.model = pm.name;
  const int half_n = (pm.dim - 1) / 2;
  rep.params = {{"alpha", pm.alpha}, {"n", static_cast<double>(half_n)}};
  rep.conventions = base_conventions();
  rep.conventions.emplace_back("curvature_scalars", "implied by the C(alpha) condition");

  const double salt = s_alt_gperp(pm.xi);
  rep.scalars = {{"s_minus_sstar", pm.s_minus_sstar},
                 {"ric_zeta", pm.ric_zeta},
                 {"s_alt_gperp", salt}};
  add_contact_invariants(rep, contact_invariants(pm.xi));
  rep.alpha_flat = pm.xi.components().flat();

  const ClassDecomposition d = contact_d_split(pm.xi);
  for (const auto& [label, comp] : d.components)
    rep.class_norms.emplace_back(label, comp.norm2());
  rep.classes = active_labels(rep.class_norms, pm.xi.norm2());
  rep.patterns = recognize_patterns(pm.xi);

  for (auto& c : check_contact_propositions(pm, tol)) rep.checks.push_back(std::move(c));

  const ContactInvariants v = contact_invariants(pm.xi);
  if (pm.name == "sasaki") {
    rep.checks.push_back(
        make_check("sasaki_s_alt_gperp", salt, 2.0 * half_n * (half_n - 1), tol));
    rep.checks.push_back(make_check("sasaki_ratio_i8", v.i6, -v.i8, tol));
    rep.checks.push_back(make_check("sasaki_ratio_i12", v.i6, -v.i12, tol));
    rep.checks.push_back(make_check("sasaki_ratio_i14", v.i14, 2.0 * half_n * v.i6, tol));
  } else if (pm.name == "kenmotsu") {
    rep.checks.push_back(
        make_check("kenmotsu_s_alt_gperp", salt, 2.0 * half_n * (1 - half_n), tol));
    rep.checks.push_back(make_check("kenmotsu_ratio_i8", v.i6, v.i8, tol));
    rep.checks.push_back(make_check("kenmotsu_ratio_i12", v.i6, v.i12, tol));
    rep.checks.push_back(make_check("kenmotsu_ratio_i10", v.i10, 2.0 * half_n * v.i6, tol));
  }
  return rep;
}

ModelReport run_model_report(const std::string& name, double t, int n, double tol) {
  if (name == "flag") return bundle_report(build_flag(t), tol);
  if (name == "stiefel") return bundle_report(build_stiefel(t), tol);
  if (name == "heisenberg") return bundle_report(build_heisenberg(n), tol);
  if (name == "sasaki") return pointwise_report(build_sasaki(n), tol);
  if (name == "kenmotsu") return pointwise_report(build_kenmotsu(n), tol);
  throw std::invalid_argument("unknown model '" + name + "'");
}

std::string report_to_json(const ModelReport& rep) {
  std::string out = "{";
  out += quoted("model") + ":" + quoted(rep.model);
  out += "," + quoted("params") + ":" + jsonw::pairs_to_object(rep.params);
  out += "," + quoted("conventions") + ":" + jsonw::pairs_to_object(rep.conventions);
  out += "," + quoted("scalars") + ":" + jsonw::pairs_to_object(rep.scalars);
  out += "," + quoted("torsion") + ":{";
  {
    bool first = true;
    for (const auto& [k, v] : rep.torsion_scalars) {
      if (!first) out += ",";
      first = false;
      out += quoted(k) + ":" + jsonw::number(v);
    }
    if (!first) out += ",";
    out += quoted("alpha") + ":" + jsonw::doubles_to_array(rep.alpha_flat);
  }
  out += "}";
  out += "," + quoted("classes") + ":[";
  for (size_t i = 0; i < rep.classes.size(); ++i) {
    if (i) out += ",";
    out += quoted(rep.classes[i]);
  }
  out += "]";
  out += "," + quoted("class_norms") + ":" + jsonw::pairs_to_object(rep.class_norms);
  out += "," + quoted("patterns") + ":[";
  for (size_t i = 0; i < rep.patterns.size(); ++i) {
    if (i) out += ",";
    out += "{" + quoted("name") + ":" + quoted(rep.patterns[i].name) + "," + quoted("scale") +
           ":" + jsonw::number(rep.patterns[i].scale) + "," + quoted("residual") + ":" +
           jsonw::number(rep.patterns[i].relative_residual) + "}";
  }
  out += "]";
  out += "," + quoted("checks") + ":[";
  for (size_t i = 0; i < rep.checks.size(); ++i) {
    if (i) out += ",";
    out += check_to_json(rep.checks[i]);
  }
  out += "]}";
  return out;
}

std::string report_to_pretty(const ModelReport& rep) {
  std::ostringstream os;
  os << "model: " << rep.model << "\n";
  for (const auto& [k, v] : rep.params) os << "  param " << k << " = " << jsonw::number(v) << "\n";
  os << "scalars:\n";
  for (const auto& [k, v] : rep.scalars) os << "  " << k << " = " << jsonw::number(v) << "\n";
  os << "torsion:\n";
  for (const auto& [k, v] : rep.torsion_scalars)
    os << "  " << k << " = " << jsonw::number(v) << "\n";
  os << "classes:";
  for (const auto& c : rep.classes) os << " " << c;
  os << "\n";
  for (const auto& [k, v] : rep.class_norms)
    os << "  |" << k << "|^2 = " << jsonw::number(v) << "\n";
  for (const auto& p : rep.patterns)
    os << "pattern: " << p.name << " scale=" << jsonw::number(p.scale)
       << " residual=" << jsonw::number(p.relative_residual) << "\n";
  os << "checks:\n";
  for (const auto& c : rep.checks)
    os << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.name
       << " lhs=" << jsonw::number(c.lhs) << " rhs=" << jsonw::number(c.rhs)
       << " residual=" << jsonw::number(c.residual) << "\n";
  os << (rep.all_pass() ? "ALL CHECKS PASS" : "CHECK FAILURES PRESENT") << "\n";
  return os.str();
}

std::string sweep_csv(const std::string& model_name, double t_from, double t_to, int steps) {
  detail::require(t_from > 0.0 && t_from < t_to, "sweep: need 0 < t_from < t_to");
  detail::require(steps >= 2, "sweep: need steps >= 2");
  std::string out = "t,s,s_star,s_gperp,s_alt_gperp,chi2,alt2,sym2,div_residual\n";
  for (int i = 0; i < steps; ++i) {
    const double t = t_from + (t_to - t_from) * static_cast<double>(i) / (steps - 1);
    ModelBundle bundle = [&] {
      if (model_name == "flag") return build_flag(t);
      if (model_name == "stiefel") return build_stiefel(t);
      throw std::invalid_argument("sweep: model '" + model_name + "' is not t-parametrized");
    }();
    const TorsionTensor xi = intrinsic_torsion(bundle.model, bundle.structure);
    const CurvatureOperator r = nomizu_curvature(bundle.model);
    const Vec chi = characteristic_vector(xi);
    auto [alt, sym] = alt_sym_split(xi);
    const auto checks = check_divergence(bundle);
    out += jsonw::number(t);
    out += "," + jsonw::number(scalar_curvature(r));
    out += "," + jsonw::number(star_scalar(r, bundle.structure));
    out += "," + jsonw::number(s_gperp(r, bundle.structure));
    out += "," + jsonw::number(s_alt_gperp(xi));
    out += "," + jsonw::number(chi.squaredNorm());
    out += "," + jsonw::number(alt.norm2());
    out += "," + jsonw::number(sym.norm2());
    out += "," + jsonw::number(checks.at(0).residual);
    out += "\n";
  }
  return out;
}

std::string fuzz_summary_to_json(const FuzzSummary& summary) {
  std::string out = "{";
  out += quoted("space") + ":" + quoted(to_string(summary.space));
  out += "," + quoted("dim") + ":" + std::to_string(summary.dim);
  out += "," + quoted("iterations") + ":" + std::to_string(summary.iterations);
  out += "," + quoted("seed") + ":" + std::to_string(summary.seed);
  out += "," + quoted("failures") + ":" + std::to_string(summary.failures);
  out += "," + quoted("max_residual") + ":" + jsonw::number(summary.max_residual);
  if (summary.failures > 0) {
    out += "," + quoted("first_failure_property") + ":" + quoted(summary.first_failure_property);
    out += "," + quoted("first_failure_seed") + ":" + std::to_string(summary.first_failure_seed);
  }
  out += "," + quoted("properties") + ":{";
  bool first = true;
  for (const auto& [k, v] : summary.property_max_residual) {
    if (!first) out += ",";
    first = false;
    out += quoted(k) + ":" + jsonw::number(v);
  }
  out += "}}";
  return out;
}

std::string fuzz_summary_to_pretty(const FuzzSummary& summary) {
  std::ostringstream os;
  os << "fuzz " << to_string(summary.space) << " dim=" << summary.dim
     << " iters=" << summary.iterations << " seed=" << summary.seed << "\n";
  for (const auto& [k, v] : summary.property_max_residual)
    os << "  " << k << ": max residual " << jsonw::number(v) << "\n";
  os << "failures: " << summary.failures;
  if (summary.failures > 0)
    os << " (first: " << summary.first_failure_property << ", reproduction seed "
       << summary.first_failure_seed << ")";
  os << "\nmax residual: " << jsonw::number(summary.max_residual) << "\n";
  return os.str();
}

namespace {

std::string structure_to_json(const GStructure& s) {
  std::string out = "{" + quoted("kind") + ":" + quoted(to_string(s.kind()));
  switch (s.kind()) {
    case StructureKind::Product:
      out += "," + quoted("m") + ":" + std::to_string(s.split_m());
      break;
    case StructureKind::Hermitian:
    case StructureKind::SpecialHermitian:
      out += "," + quoted("J") + ":" + jsonw::matrix_to_json(s.complex_structure());
      break;
    case StructureKind::Contact:
      out += "," + quoted("phi") + ":" + jsonw::matrix_to_json(s.phi());
      out += "," + quoted("zeta") + ":" + jsonw::vector_to_json(s.zeta());
      break;
  }
  return out + "}";
}

std::string vec_table_to_json(const std::vector<std::vector<Vec>>& table) {
  std::string out = "[";
  for (size_t i = 0; i < table.size(); ++i) {
    if (i) out += ",";
    out += "[";
    for (size_t j = 0; j < table[i].size(); ++j) {
      if (j) out += ",";
      out += jsonw::vector_to_json(table[i][j]);
    }
    out += "]";
  }
  return out + "]";
}

}  // namespace

std::string model_to_json(const ModelBundle& bundle) {
  const HomogeneousModel& m = bundle.model;
  std::string out = "{";
  out += quoted("name") + ":" + quoted(m.name);
  out += "," + quoted("dim") + ":" + std::to_string(m.dim());
  out += "," + quoted("h_dim") + ":" + std::to_string(m.h_dim);
  out += "," + quoted("params") + ":{";
  bool first = true;
  for (const auto& [k, v] : m.params) {
    if (!first) out += ",";
    first = false;
    out += quoted(k) + ":" + jsonw::number(v);
  }
  out += "}";
  out += "," + quoted("lambda") + ":[";
  for (size_t i = 0; i < m.lambda.size(); ++i) {
    if (i) out += ",";
    out += jsonw::matrix_to_json(m.lambda[i]);
  }
  out += "]";
  out += "," + quoted("bracket_m") + ":" + vec_table_to_json(m.bracket_m);
  if (m.h_dim > 0) {
    out += "," + quoted("bracket_h") + ":" + vec_table_to_json(m.bracket_h);
    out += "," + quoted("ad_h") + ":[";
    for (size_t i = 0; i < m.ad_h.size(); ++i) {
      if (i) out += ",";
      out += jsonw::matrix_to_json(m.ad_h[i]);
    }
    out += "]";
    if (!m.bracket_hh.empty())
      out += "," + quoted("bracket_hh") + ":" + vec_table_to_json(m.bracket_hh);
  }
  if (m.split) {
    out += "," + quoted("split") + ":{" + quoted("m0") + ":[";
    for (size_t i = 0; i < m.split->first.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(m.split->first[i]);
    }
    out += "]," + quoted("m1") + ":[";
    for (size_t i = 0; i < m.split->second.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(m.split->second[i]);
    }
    out += "]}";
  }
  out += "," + quoted("structure") + ":" + structure_to_json(bundle.structure);
  return out + "}";
}

std::string pointwise_to_json(const PointwiseModel& pm) {
  std::string out = "{";
  out += quoted("name") + ":" + quoted(pm.name);
  out += "," + quoted("dim") + ":" + std::to_string(pm.dim);
  out += "," + quoted("h_dim") + ":0";
  const int half_n = (pm.dim - 1) / 2;
  out += "," + quoted("params") + ":{" + quoted("alpha") + ":" + jsonw::number(pm.alpha) + "," +
         quoted("n") + ":" + jsonw::number(static_cast<double>(half_n)) + "}";
  out += "," + quoted("xi") + ":" + jsonw::doubles_to_array(pm.xi.components().flat());
  out += "," + quoted("structure") + ":" + structure_to_json(pm.structure);
  return out + "}";
}

namespace {

using nlohmann::json;

Mat parse_matrix(const json& j, const std::string& what, int n) {
  if (!j.is_array() || static_cast<int>(j.size()) != n)
    throw std::invalid_argument(what + ": expected " + std::to_string(n) + " rows");
  Mat m(n, n);
  for (int r = 0; r < n; ++r) {
    if (!j[r].is_array() || static_cast<int>(j[r].size()) != n)
      throw std::invalid_argument(what + ": row " + std::to_string(r) + " has wrong length");
    for (int c = 0; c < n; ++c) m(r, c) = j[r][c].get<double>();
  }
  return m;
}

Vec parse_vector(const json& j, const std::string& what, int n) {
  if (!j.is_array() || static_cast<int>(j.size()) != n)
    throw std::invalid_argument(what + ": expected length " + std::to_string(n));
  Vec v(n);
  for (int i = 0; i < n; ++i) v(i) = j[i].get<double>();
  return v;
}

std::vector<std::vector<Vec>> parse_vec_table(const json& j, const std::string& what, int n,
                                              int len) {
  std::vector<std::vector<Vec>> out(n, std::vector<Vec>(n, Vec::Zero(len)));
  if (!j.is_array() || static_cast<int>(j.size()) != n)
    throw std::invalid_argument(what + ": expected " + std::to_string(n) + " rows");
  for (int i = 0; i < n; ++i)
    for (int jj = 0; jj < n; ++jj)
      out[i][jj] = parse_vector(j[i][jj], what + "[" + std::to_string(i) + "][" +
                                              std::to_string(jj) + "]",
                                len);
  return out;
}

GStructure parse_structure(const json& j, int dim) {
  if (!j.contains("kind")) throw std::invalid_argument("structure: missing 'kind'");
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "product") return GStructure::product(dim, j.at("m").get<int>());
  if (kind == "hermitian") return GStructure::hermitian(parse_matrix(j.at("J"), "structure.J", dim));
  if (kind == "special_hermitian")
    return GStructure::special_hermitian(parse_matrix(j.at("J"), "structure.J", dim));
  if (kind == "contact")
    return GStructure::contact(parse_matrix(j.at("phi"), "structure.phi", dim),
                               parse_vector(j.at("zeta"), "structure.zeta", dim));
  throw std::invalid_argument("structure: unknown kind '" + kind + "'");
}

}  // namespace

LoadedModel load_model_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("model file: JSON parse error: ") + e.what());
  }
  if (!j.contains("dim")) throw std::invalid_argument("model file: missing 'dim'");
  const int n = j.at("dim").get<int>();
  if (n < 2) throw std::invalid_argument("model file: dim must be >= 2");
  LoadedModel out;

  if (j.contains("xi")) {
    if (!j.contains("structure")) throw std::invalid_argument("model file: missing 'structure'");
    GStructure s = parse_structure(j.at("structure"), n);
    const auto& flat = j.at("xi");
    if (!flat.is_array() || static_cast<int>(flat.size()) != n * n * n)
      throw std::invalid_argument("xi: expected " + std::to_string(n * n * n) + " entries");
    Tensor3 a(n);
    int idx = 0;
    for (int i = 0; i < n; ++i)
      for (int jj = 0; jj < n; ++jj)
        for (int k = 0; k < n; ++k) a(i, jj, k) = flat[idx++].get<double>();
    PointwiseModel pm{j.value("name", std::string("pointwise")), n, s, TorsionTensor(a, s),
                      0.0, 0.0, 0.0};
    if (j.contains("params")) {
      const auto& p = j.at("params");
      if (p.contains("alpha")) {
        pm.alpha = p.at("alpha").get<double>();
        const int half_n = (n - 1) / 2;
        const auto [ds, rz] = c_alpha_scalars(pm.alpha, std::max(1, half_n));
        pm.s_minus_sstar = ds;
        pm.ric_zeta = rz;
      }
    }
    out.pointwise = std::move(pm);
    return out;
  }

  if (!j.contains("lambda")) throw std::invalid_argument("model file: missing 'lambda' or 'xi'");
  HomogeneousModel m;
  m.name = j.value("name", std::string("model"));
  m.frame = Frame::standard(n);
  m.h_dim = j.value("h_dim", 0);
  if (j.contains("params"))
    for (const auto& [k, v] : j.at("params").items()) m.params[k] = v.get<double>();

  const auto& lj = j.at("lambda");
  if (!lj.is_array() || static_cast<int>(lj.size()) != n)
    throw std::invalid_argument("lambda: expected " + std::to_string(n) + " matrices");
  for (int i = 0; i < n; ++i) {
    Mat l = parse_matrix(lj[i], "lambda[" + std::to_string(i) + "]", n);
    if ((l + l.transpose()).norm() > 1e-10)
      throw std::invalid_argument("lambda[" + std::to_string(i) + "] is not skew-symmetric");
    m.lambda.push_back(std::move(l));
  }
  m.bracket_m = parse_vec_table(j.at("bracket_m"), "bracket_m", n, n);
  if (m.h_dim > 0) {
    m.bracket_h = parse_vec_table(j.at("bracket_h"), "bracket_h", n, m.h_dim);
    const auto& aj = j.at("ad_h");
    if (!aj.is_array() || static_cast<int>(aj.size()) != m.h_dim)
      throw std::invalid_argument("ad_h: expected " + std::to_string(m.h_dim) + " matrices");
    for (int a = 0; a < m.h_dim; ++a)
      m.ad_h.push_back(parse_matrix(aj[a], "ad_h[" + std::to_string(a) + "]", n));
    if (j.contains("bracket_hh")) {
      const auto& hh = j.at("bracket_hh");
      m.bracket_hh.assign(m.h_dim, std::vector<Vec>(m.h_dim, Vec::Zero(m.h_dim)));
      for (int a = 0; a < m.h_dim; ++a)
        for (int b = 0; b < m.h_dim; ++b)
          m.bracket_hh[a][b] = parse_vector(hh[a][b], "bracket_hh", m.h_dim);
    }
  }
  if (j.contains("split")) {
    std::vector<int> m0 = j.at("split").at("m0").get<std::vector<int>>();
    std::vector<int> m1 = j.at("split").at("m1").get<std::vector<int>>();
    m.split = std::make_pair(std::move(m0), std::move(m1));
  }
  validate_model(m);
  if (!j.contains("structure")) throw std::invalid_argument("model file: missing 'structure'");
  GStructure s = parse_structure(j.at("structure"), n);
  out.bundle = ModelBundle{std::move(m), std::move(s)};
  return out;
}

ModelReport report_for_loaded(const LoadedModel& loaded, double tol) {
  if (loaded.bundle) return bundle_report(*loaded.bundle, tol);
  if (loaded.pointwise) return pointwise_report(*loaded.pointwise, tol);
  throw std::invalid_argument("report_for_loaded: empty model");
}

}  // namespace gstruct
