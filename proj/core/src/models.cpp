#include "gstruct/models.hpp"

#include <cmath>

namespace gstruct {

namespace {

Mat elem(int n, int j, int k) { return SkewMatrix::elementary(n, j, k).mat(); }

std::vector<std::vector<Vec>> empty_table(int n, int len) {
  return std::vector<std::vector<Vec>>(n, std::vector<Vec>(n, Vec::Zero(len)));
}

Vec unit(int n, int i, double c = 1.0) {
  Vec v = Vec::Zero(n);
  v(i) = c;
  return v;
}

}  // namespace

ModelBundle build_flag(double t) {
  detail::require(t > 0.0, "build_flag: t must be positive");
  const int n = 6;
  const double c = std::sqrt(t / 2.0);
  const double d = (1.0 - t) / std::sqrt(2.0 * t);
  const double s2t = std::sqrt(2.0 * t);
  const double r2t = 1.0 / s2t;

  HomogeneousModel m;
  m.name = "flag";
  m.frame = Frame::standard(n);
  m.h_dim = 3;
  m.params["t"] = t;

  m.lambda = {
      c * (elem(n, 2, 4) + elem(n, 3, 5)),   // Lambda(E1) = c (e35 + e46)
      c * (elem(n, 3, 4) - elem(n, 2, 5)),   // Lambda(E2) = c (e45 - e36)
      c * (elem(n, 1, 5) - elem(n, 0, 4)),   // Lambda(E3) = c (e26 - e15)
      -c * (elem(n, 0, 5) + elem(n, 1, 4)),  // Lambda(E4) = -c (e16 + e25)
      d * (elem(n, 0, 2) + elem(n, 1, 3)),   // Lambda(E5) = d (e13 + e24)
      d * (elem(n, 0, 3) - elem(n, 1, 2)),   // Lambda(E6) = d (e14 - e23)
  };

  m.bracket_m = empty_table(n, n);
  m.bracket_h = empty_table(n, 3);
  auto set_m = [&](int i, int j, const Vec& v) {
    m.bracket_m[i][j] = v;
    m.bracket_m[j][i] = -v;
  };
  auto set_h = [&](int i, int j, const Vec& v) {
    m.bracket_h[i][j] = v;
    m.bracket_h[j][i] = -v;
  };
  set_h(0, 1, Vec{{2.0, -2.0, 0.0}});        // [E1,E2] = 2H1 - 2H2
  set_m(0, 2, unit(n, 4, -s2t));             // [E1,E3] = -sqrt(2t) E5
  set_m(0, 3, unit(n, 5, -s2t));             // [E1,E4] = -sqrt(2t) E6
  set_m(0, 4, unit(n, 2, r2t));              // [E1,E5]
  set_m(0, 5, unit(n, 3, r2t));              // [E1,E6]
  set_m(1, 2, unit(n, 5, s2t));              // [E2,E3]
  set_m(1, 3, unit(n, 4, -s2t));             // [E2,E4]
  set_m(1, 4, unit(n, 3, r2t));              // [E2,E5]
  set_m(1, 5, unit(n, 2, -r2t));             // [E2,E6]
  set_h(2, 3, Vec{{2.0, 0.0, -2.0}});        // [E3,E4] = 2H1 - 2H3
  set_m(2, 4, unit(n, 0, -r2t));             // [E3,E5]
  set_m(2, 5, unit(n, 1, r2t));              // [E3,E6]
  set_m(3, 4, unit(n, 1, -r2t));             // [E4,E5]
  set_m(3, 5, unit(n, 0, -r2t));             // [E4,E6]
  set_h(4, 5, Vec{{0.0, 1.0 / t, -1.0 / t}});  // [E5,E6] = (H2 - H3)/t

  m.ad_h = {
      -elem(n, 0, 1) - elem(n, 2, 3),  // Ad(H1)
      elem(n, 0, 1) - elem(n, 4, 5),   // Ad(H2)
      elem(n, 2, 3) + elem(n, 4, 5),   // Ad(H3)
  };
  m.bracket_hh = std::vector<std::vector<Vec>>(3, std::vector<Vec>(3, Vec::Zero(3)));
  m.split = std::make_pair(std::vector<int>{0, 1, 2, 3}, std::vector<int>{4, 5});

  validate_model(m);

  Mat J = Mat::Zero(n, n);
  J(1, 0) = -1.0;  // J E1 = -E2
  J(0, 1) = 1.0;
  J(3, 2) = 1.0;   // J E3 = E4
  J(2, 3) = -1.0;
  J(5, 4) = -1.0;  // J E5 = -E6
  J(4, 5) = 1.0;
  return ModelBundle{std::move(m), GStructure::hermitian(std::move(J))};
}

ModelBundle build_stiefel(double t) {
  detail::require(t > 0.0, "build_stiefel: t must be positive");
  const int n = 5;
  const double c = std::sqrt(t / 2.0);
  const double d = (1.0 - t) / std::sqrt(2.0 * t);
  const double s2t = std::sqrt(2.0 * t);
  const double r2t = 1.0 / s2t;

  HomogeneousModel m;
  m.name = "stiefel";
  m.frame = Frame::standard(n);
  m.h_dim = 1;
  m.params["t"] = t;

  // Source tables use elementary skews with (i,j)-entry -1; one global
  // negation converts them to this repo's convention.
  m.lambda = {
      -c * elem(n, 2, 4),                   // Lambda(E1) = sqrt(t/2) e35
      -c * elem(n, 3, 4),                   // Lambda(E2) = sqrt(t/2) e45
      c * elem(n, 0, 4),                    // Lambda(E3) = -sqrt(t/2) e15
      c * elem(n, 1, 4),                    // Lambda(E4) = -sqrt(t/2) e25
      -d * (elem(n, 0, 2) + elem(n, 1, 3)),  // Lambda(E5) = d (e13 + e24)
  };

  m.bracket_m = empty_table(n, n);
  m.bracket_h = empty_table(n, 1);
  auto set_m = [&](int i, int j, const Vec& v) {
    m.bracket_m[i][j] = v;
    m.bracket_m[j][i] = -v;
  };
  auto set_h = [&](int i, int j, double v) {
    m.bracket_h[i][j] = Vec::Constant(1, v);
    m.bracket_h[j][i] = Vec::Constant(1, -v);
  };
  set_h(0, 1, 1.0);               // [E1,E2] = F1 (the so(2) generator)
  set_m(0, 2, unit(n, 4, s2t));   // [E1,E3] = sqrt(2t) E5
  set_m(0, 4, unit(n, 2, -r2t));  // [E1,E5]
  set_m(1, 3, unit(n, 4, s2t));   // [E2,E4]
  set_m(1, 4, unit(n, 3, -r2t));  // [E2,E5]
  set_h(2, 3, 1.0);               // [E3,E4] = F1
  set_m(2, 4, unit(n, 0, r2t));   // [E3,E5]
  set_m(3, 4, unit(n, 1, r2t));   // [E4,E5]

  m.ad_h = {-(elem(n, 0, 1) + elem(n, 2, 3))};
  m.bracket_hh = std::vector<std::vector<Vec>>(1, std::vector<Vec>(1, Vec::Zero(1)));
  m.split = std::make_pair(std::vector<int>{0, 1, 2, 3}, std::vector<int>{4});

  validate_model(m);

  Mat phi = Mat::Zero(n, n);
  phi(2, 0) = -1.0;  // phi E1 = -E3
  phi(3, 1) = -1.0;  // phi E2 = -E4
  phi(0, 2) = 1.0;   // phi E3 = E1
  phi(1, 3) = 1.0;   // phi E4 = E2
  return ModelBundle{std::move(m), GStructure::contact(std::move(phi), unit(n, 4))};
}

ModelBundle build_heisenberg(int n) {
  detail::require(n >= 1, "build_heisenberg: n must be >= 1");
  const int dim = 2 * n + 1;
  const int z = 2 * n;

  HomogeneousModel m;
  m.name = "heisenberg";
  m.frame = Frame::standard(dim);
  m.h_dim = 0;
  m.params["n"] = static_cast<double>(n);

  // Connection table: nabla_{X_i} X_{n+i} = -Z/2, nabla_{X_i} Z = X_{n+i}/2,
  // nabla_{X_{n+i}} X_i = -Z/2, nabla_{X_{n+i}} Z = X_i/2,
  // nabla_Z X_i = -X_{n+i}/2, nabla_Z X_{n+i} = X_i/2.
  m.lambda.assign(dim, Mat::Zero(dim, dim));
  for (int i = 0; i < n; ++i) {
    m.lambda[i] = 0.5 * elem(dim, n + i, z);
    m.lambda[n + i] = 0.5 * elem(dim, i, z);
    m.lambda[z] += 0.5 * elem(dim, i, n + i);
  }

  // Brackets derived from the connection table ([X,Y] = Lambda(X)Y - Lambda(Y)X)
  // rather than typed in; cross-checked against [X_i, Z] = X_{n+i}.
  m.bracket_m = empty_table(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      m.bracket_m[i][j] = m.lambda[i].col(j) - m.lambda[j].col(i);

  validate_model(m);

  Mat phi = Mat::Zero(dim, dim);
  for (int i = 0; i < n; ++i) {
    phi(n + i, i) = 1.0;
    phi(i, n + i) = -1.0;
  }
  return ModelBundle{std::move(m), GStructure::contact(std::move(phi), unit(dim, z))};
}

PointwiseModel build_sasaki(int n) {
  detail::require(n >= 2, "build_sasaki: n must be >= 2");
  const int dim = 2 * n + 1;
  GStructure s = GStructure::standard_contact(dim);
  TorsionTensor xi = sasaki_pattern(s, 1.0);
  const auto [ds, rz] = c_alpha_scalars(1.0, n);
  return PointwiseModel{"sasaki", dim, std::move(s), std::move(xi), 1.0, ds, rz};
}

PointwiseModel build_kenmotsu(int n) {
  detail::require(n >= 2, "build_kenmotsu: n must be >= 2");
  const int dim = 2 * n + 1;
  GStructure s = GStructure::standard_contact(dim);
  TorsionTensor xi = kenmotsu_pattern(s, 1.0);
  const auto [ds, rz] = c_alpha_scalars(-1.0, n);
  return PointwiseModel{"kenmotsu", dim, std::move(s), std::move(xi), -1.0, ds, rz};
}

std::pair<double, double> c_alpha_scalars(double alpha, int n) {
  detail::require(n >= 1, "c_alpha_scalars: n must be >= 1");
  return {4.0 * n * n * alpha, 2.0 * n * alpha};
}

}  // namespace gstruct
