#include "gstruct/homogeneous.hpp"

#include <algorithm>
#include <cmath>

namespace gstruct {

TensorN::TensorN(int n, int rank) : n_(n), rank_(rank) {
  detail::require(n >= 1 && rank >= 0, "TensorN: bad shape");
  size_t size = 1;
  for (int i = 0; i < rank; ++i) size *= static_cast<size_t>(n);
  a_.assign(size, 0.0);
}

TensorN TensorN::from_vector(const Vec& v) {
  TensorN t(static_cast<int>(v.size()), 1);
  for (int i = 0; i < v.size(); ++i) t.a_[i] = v(i);
  return t;
}

TensorN TensorN::from_matrix(const Mat& m) {
  detail::require(m.rows() == m.cols(), "TensorN::from_matrix: square matrix required");
  TensorN t(static_cast<int>(m.rows()), 2);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) t.a_[static_cast<size_t>(i) * m.cols() + j] = m(i, j);
  return t;
}

size_t TensorN::offset(const std::vector<int>& idx) const {
  detail::require(static_cast<int>(idx.size()) == rank_, "TensorN: wrong index rank");
  size_t off = 0;
  for (int i : idx) off = off * n_ + static_cast<size_t>(i);
  return off;
}

double TensorN::norm2() const {
  double s = 0.0;
  for (double v : a_) s += v * v;
  return s;
}

namespace {

Vec table_at(const std::vector<std::vector<Vec>>& table, int i, int j, int len) {
  if (table.empty()) return Vec::Zero(len);
  return table[i][j];
}

struct FullAlgebraElement {
  Vec m;
  Vec h;
};

FullAlgebraElement full_bracket(const HomogeneousModel& model, const FullAlgebraElement& x,
                                const FullAlgebraElement& y) {
  const int n = model.dim();
  const int hd = model.h_dim;
  FullAlgebraElement z{Vec::Zero(n), Vec::Zero(hd)};
  for (int i = 0; i < n; ++i) {
    if (x.m(i) == 0.0) continue;
    for (int j = 0; j < n; ++j) {
      if (y.m(j) == 0.0) continue;
      const double c = x.m(i) * y.m(j);
      z.m += c * model.bracket_m[i][j];
      if (hd > 0) z.h += c * table_at(model.bracket_h, i, j, hd);
    }
  }
  for (int a = 0; a < hd; ++a) {
    if (x.h(a) != 0.0) z.m += x.h(a) * (model.ad_h[a] * y.m);
    if (y.h(a) != 0.0) z.m -= y.h(a) * (model.ad_h[a] * x.m);
  }
  if (hd > 0 && !model.bracket_hh.empty())
    for (int a = 0; a < hd; ++a)
      for (int b = 0; b < hd; ++b)
        if (x.h(a) != 0.0 && y.h(b) != 0.0) z.h += x.h(a) * y.h(b) * model.bracket_hh[a][b];
  return z;
}

}  // namespace

ModelResiduals model_residuals(const HomogeneousModel& model) {
  const int n = model.dim();
  const int hd = model.h_dim;
  detail::require(static_cast<int>(model.lambda.size()) == n, "model: lambda table size");
  detail::require(static_cast<int>(model.bracket_m.size()) == n, "model: bracket_m size");
  detail::require(static_cast<int>(model.ad_h.size()) == hd, "model: ad_h size");

  ModelResiduals res;
  for (const Mat& l : model.lambda)
    res.lambda_skew = std::max(res.lambda_skew, (l + l.transpose()).norm());
  for (const Mat& a : model.ad_h)
    res.lambda_skew = std::max(res.lambda_skew, (a + a.transpose()).norm());

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Vec tf = model.lambda[i].col(j) - model.lambda[j].col(i) - model.bracket_m[i][j];
      res.torsion_free = std::max(res.torsion_free, tf.cwiseAbs().maxCoeff());
      const Vec bm = model.bracket_m[i][j] + model.bracket_m[j][i];
      res.bracket_antisym = std::max(res.bracket_antisym, bm.cwiseAbs().maxCoeff());
      if (hd > 0) {
        const Vec bh = table_at(model.bracket_h, i, j, hd) + table_at(model.bracket_h, j, i, hd);
        res.bracket_antisym = std::max(res.bracket_antisym, bh.cwiseAbs().maxCoeff());
      }
    }

  // Jacobi identity on the full algebra h + m.
  const int total = n + hd;
  auto basis_element = [&](int s) {
    FullAlgebraElement e{Vec::Zero(n), Vec::Zero(hd)};
    if (s < n)
      e.m(s) = 1.0;
    else
      e.h(s - n) = 1.0;
    return e;
  };
  for (int x = 0; x < total; ++x)
    for (int y = x + 1; y < total; ++y)
      for (int z = y + 1; z < total; ++z) {
        const auto ex = basis_element(x), ey = basis_element(y), ez = basis_element(z);
        FullAlgebraElement sum{Vec::Zero(n), Vec::Zero(hd)};
        const auto t1 = full_bracket(model, full_bracket(model, ex, ey), ez);
        const auto t2 = full_bracket(model, full_bracket(model, ey, ez), ex);
        const auto t3 = full_bracket(model, full_bracket(model, ez, ex), ey);
        sum.m = t1.m + t2.m + t3.m;
        sum.h = t1.h + t2.h + t3.h;
        double r = sum.m.cwiseAbs().maxCoeff();
        if (hd > 0 && sum.h.size() > 0) r = std::max(r, sum.h.cwiseAbs().maxCoeff());
        res.jacobi = std::max(res.jacobi, r);
      }

  if (model.split) {
    const auto& [m0, m1] = *model.split;
    auto in_set = [](const std::vector<int>& set, int i) {
      return std::find(set.begin(), set.end(), i) != set.end();
    };
    auto support_outside = [&](const Vec& v, const std::vector<int>& allowed) {
      double r = 0.0;
      for (int i = 0; i < v.size(); ++i)
        if (!in_set(allowed, i)) r = std::max(r, std::abs(v(i)));
      return r;
    };
    double r = 0.0;
    for (int i : m0)
      for (int j : m0)  // [m0,m0] subset h + m1
        r = std::max(r, support_outside(model.bracket_m[i][j], m1));
    for (int i : m1)
      for (int j : m1) {  // [m1,m1] subset h
        r = std::max(r, model.bracket_m[i][j].cwiseAbs().maxCoeff());
      }
    for (int i : m0)
      for (int j : m1) {  // [m0,m1] subset m0
        r = std::max(r, support_outside(model.bracket_m[i][j], m0));
        if (hd > 0) {
          const Vec bh = table_at(model.bracket_h, i, j, hd);
          if (bh.size() > 0) r = std::max(r, bh.cwiseAbs().maxCoeff());
        }
      }
    for (int a = 0; a < hd; ++a) {  // [h,m0] subset m0, [h,m1] subset m1
      for (int j : m0) r = std::max(r, support_outside(model.ad_h[a].col(j), m0));
      for (int j : m1) r = std::max(r, support_outside(model.ad_h[a].col(j), m1));
    }
    res.split_relations = r;
  }
  return res;
}

void validate_model(const HomogeneousModel& model, double tol) {
  const ModelResiduals r = model_residuals(model);
  auto check = [&](double v, const std::string& what) {
    if (v >= tol)
      throw std::invalid_argument("model '" + model.name + "': " + what + " residual " +
                                  std::to_string(v) + " exceeds " + std::to_string(tol));
  };
  check(r.lambda_skew, "metric compatibility (Lambda skew)");
  check(r.torsion_free, "torsion-freeness");
  check(r.bracket_antisym, "bracket antisymmetry");
  check(r.jacobi, "Jacobi identity");
  check(r.split_relations, "m0/m1 split relations");
}

CurvatureOperator nomizu_curvature(const HomogeneousModel& model) {
  return connection_curvature(model, model.lambda);
}

CurvatureOperator connection_curvature(const HomogeneousModel& model,
                                       const std::vector<Mat>& lambda_prime) {
  const int n = model.dim();
  detail::require(static_cast<int>(lambda_prime.size()) == n,
                  "connection_curvature: one connection matrix per frame direction");
  for (const Mat& l : lambda_prime)
    detail::require((l + l.transpose()).norm() < 1e-10,
                    "connection_curvature: connection map must be skew-valued");
  std::vector<SkewMatrix> slices(static_cast<size_t>(n) * n, SkewMatrix::zero(n));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Mat rij = lambda_prime[i] * lambda_prime[j] - lambda_prime[j] * lambda_prime[i];
      const Vec& bm = model.bracket_m[i][j];
      for (int k = 0; k < n; ++k)
        if (bm(k) != 0.0) rij -= bm(k) * lambda_prime[k];
      if (model.h_dim > 0) {
        const Vec bh = table_at(model.bracket_h, i, j, model.h_dim);
        for (int a = 0; a < model.h_dim; ++a)
          if (bh(a) != 0.0) rij -= bh(a) * model.ad_h[a];
      }
      const SkewMatrix s = SkewMatrix::skew_part(rij);
      slices[i * n + j] = s;
      slices[j * n + i] = s * -1.0;
    }
  return CurvatureOperator::from_slices(n, std::move(slices));
}

TorsionTensor intrinsic_torsion(const HomogeneousModel& model, const GStructure& s) {
  detail::require(model.dim() == s.dim(), "intrinsic_torsion: dimension mismatch");
  std::vector<SkewMatrix> slices;
  slices.reserve(model.dim());
  for (const Mat& l : model.lambda)
    slices.push_back(s.project_g_perp(SkewMatrix::skew_part(l)));
  return TorsionTensor::from_slices(slices, s);
}

std::vector<Mat> g_connection_map(const HomogeneousModel& model, const GStructure& s) {
  std::vector<Mat> out;
  out.reserve(model.dim());
  for (const Mat& l : model.lambda) {
    const SkewMatrix sk = SkewMatrix::skew_part(l);
    out.push_back((sk - s.project_g_perp(sk)).mat());
  }
  return out;
}

TensorN invariant_derivative(const HomogeneousModel& model, const TensorN& t) {
  const int n = model.dim();
  detail::require(t.dim() == n, "invariant_derivative: dimension mismatch");
  TensorN out(n, t.rank() + 1);
  std::vector<int> idx(t.rank(), 0);
  std::vector<int> out_idx(t.rank() + 1, 0);
  // iterate over all output multi-indices (i, a_1..a_r)
  const size_t count = t.flat().size();
  for (int i = 0; i < n; ++i) {
    out_idx[0] = i;
    for (size_t lin = 0; lin < count; ++lin) {
      size_t rest = lin;
      for (int s = t.rank() - 1; s >= 0; --s) {
        idx[s] = static_cast<int>(rest % n);
        rest /= n;
      }
      double v = 0.0;
      std::vector<int> probe = idx;
      for (int s = 0; s < t.rank(); ++s) {
        const int orig = idx[s];
        for (int b = 0; b < n; ++b) {
          const double coeff = model.lambda[i](b, orig);  // (Lambda(E_i) e_orig)_b
          if (coeff == 0.0) continue;
          probe[s] = b;
          v -= coeff * t.at(probe);
        }
        probe[s] = orig;
      }
      for (int s = 0; s < t.rank(); ++s) out_idx[s + 1] = idx[s];
      out.at(out_idx) = v;
    }
  }
  return out;
}

double invariant_divergence(const HomogeneousModel& model, const Vec& v) {
  const int n = model.dim();
  detail::require(v.size() == n, "invariant_divergence: dimension mismatch");
  double div = 0.0;
  for (int i = 0; i < n; ++i) div += (model.lambda[i] * v)(i);
  return div;
}

}  // namespace gstruct
