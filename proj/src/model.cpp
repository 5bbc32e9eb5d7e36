#include "cartan/model.hpp"

#include <cmath>
#include <stdexcept>

namespace cartan {

namespace {

Mat unit(Field f, int n, int i, int j, const Scalar& u) {
  Mat m = Mat::zeros(f, n, n);
  m.at(i, j) = u;
  return m;
}

std::vector<Scalar> field_units(Field f) {
  switch (f) {
    case Field::Real: return {Scalar::real(1)};
    case Field::Complex: return {Scalar::complex(1, 0), Scalar::complex(0, 1)};
    default:
      return {Scalar::quat(1, 0, 0, 0), Scalar::quat(0, 1, 0, 0), Scalar::quat(0, 0, 1, 0),
              Scalar::quat(0, 0, 0, 1)};
  }
}

// G_- element of the cr model from (v, t).
Mat cr_gminus(const ModelSpec& model, const Mat& v, double t) {
  const int d = model.p + model.q, n = d + 2;
  Mat g = Mat::identity(Field::Complex, n);
  double vIv = 0.0;
  for (int l = 0; l < d; ++l) {
    g.at(1 + l, 0) = v.at(l, 0);
    g.at(n - 1, 1 + l) = -(v.at(l, 0).conj() * model.signature(l));
    vIv += model.signature(l) * v.at(l, 0).norm2();
  }
  g.at(n - 1, 0) = Scalar::complex(-0.5 * vIv, t);
  return g;
}

}  // namespace

const char* ModelSpec::name() const {
  switch (kind) {
    case ModelKind::CProj: return "cproj";
    case ModelKind::Quat: return "quat";
    case ModelKind::CR: return "cr";
    case ModelKind::Affine: return "affine";
    default: return "euclid";
  }
}

std::vector<int> ModelSpec::grades() const {
  switch (depth()) {
    case 1: return {-1, 0, 1};
    case 2: return {-2, -1, 0, 1, 2};
    default: return {};
  }
}

int ModelSpec::grade_real_dim(int i) const {
  int cdim = field() == Field::Quaternion ? 4 : 2;
  if (kind == ModelKind::CProj || kind == ModelKind::Quat) {
    if (i == -1 || i == 1) return cdim * m;
    if (i == 0) return cdim + cdim * m * m;
    return 0;
  }
  if (kind == ModelKind::CR) {
    const int d = p + q;
    switch (i) {
      case -2:
      case 2: return 1;
      case -1:
      case 1: return 2 * d;
      case 0: return 2 + d * d;
      default: return 0;
    }
  }
  return 0;
}

Mat ModelSpec::gram_matrix() const {
  if (kind != ModelKind::CR) throw std::invalid_argument("gram_matrix: cr model expected");
  const int d = p + q, n = d + 2;
  Mat H = Mat::zeros(Field::Complex, n, n);
  H.at(0, n - 1) = Scalar::complex(1, 0);
  H.at(n - 1, 0) = Scalar::complex(1, 0);
  for (int l = 0; l < d; ++l) H.at(1 + l, 1 + l) = Scalar::complex(signature(l), 0);
  return H;
}

Mat center_reduce(const ModelSpec& model, const Mat& X) {
  const int n = model.matrix_size();
  Scalar t = X.trace();
  Mat I = Mat::identity(model.field(), n);
  switch (model.kind) {
    case ModelKind::CProj:
      return X - I.scale_left(t / n);
    case ModelKind::Quat:
      return X - (t.w / n) * I;
    case ModelKind::CR:
      return X - I.scale_left(Scalar::complex(0, t.x / n));
    default:
      return X;
  }
}

bool algebra_equiv(const ModelSpec& model, const Mat& X, const Mat& Y, double tol) {
  return center_reduce(model, X).equals(center_reduce(model, Y), tol);
}

AlgebraElement bracket(const AlgebraElement& X, const AlgebraElement& Y) {
  if (!(X.model == Y.model)) throw std::invalid_argument("bracket: model mismatch");
  return {X.model, center_reduce(X.model, X.matrix * Y.matrix - Y.matrix * X.matrix)};
}

double algebra_membership_residual(const ModelSpec& model, const Mat& X) {
  if (model.kind != ModelKind::CR) return 0.0;
  Mat H = model.gram_matrix();
  return (X.dagger() * H + H * X).frobenius_norm();
}

Mat grade_project(const ModelSpec& model, const Mat& X, int i) {
  const int n = model.matrix_size();
  Mat M = Mat::zeros(model.field(), n, n);
  if (model.kind == ModelKind::CProj || model.kind == ModelKind::Quat) {
    const int m = model.m;
    switch (i) {
      case -1: M.set_block(1, 0, X.block(1, 0, m, 1)); break;
      case 0:
        M.at(0, 0) = X.at(0, 0);
        M.set_block(1, 1, X.block(1, 1, m, m));
        break;
      case 1: M.set_block(0, 1, X.block(0, 1, 1, m)); break;
      default: break;
    }
    return M;
  }
  if (model.kind == ModelKind::CR) {
    const int d = model.p + model.q;
    switch (i) {
      case -2: M.at(n - 1, 0) = Scalar::complex(0, X.at(n - 1, 0).x); break;
      case -1:
        for (int l = 0; l < d; ++l) {
          const Scalar& v = X.at(1 + l, 0);
          M.at(1 + l, 0) = v;
          M.at(n - 1, 1 + l) = -(v.conj() * model.signature(l));
        }
        break;
      case 0:
        M.at(0, 0) = X.at(0, 0);
        M.set_block(1, 1, X.block(1, 1, d, d));
        M.at(n - 1, n - 1) = X.at(n - 1, n - 1);
        break;
      case 1:
        for (int l = 0; l < d; ++l) {
          const Scalar& b = X.at(0, 1 + l);
          M.at(0, 1 + l) = b;
          M.at(1 + l, n - 1) = -(model.signature(l) * b.conj());
        }
        break;
      case 2: M.at(0, n - 1) = Scalar::complex(0, X.at(0, n - 1).x); break;
      default: break;
    }
    return M;
  }
  throw std::invalid_argument("grade_project: model carries no grading");
}

std::map<int, Mat> grade_split(const ModelSpec& model, const Mat& X, double tol) {
  double res = algebra_membership_residual(model, X);
  if (res > tol * (1.0 + X.frobenius_norm()))
    throw std::domain_error("grade_split: matrix violates the model algebra relations");
  std::map<int, Mat> parts;
  for (int i : model.grades()) parts.emplace(i, grade_project(model, X, i));
  return parts;
}

std::vector<Mat> grading_basis(const ModelSpec& model, int i) {
  const Field f = model.field();
  const int n = model.matrix_size();
  std::vector<Mat> basis;
  if (model.kind == ModelKind::CProj || model.kind == ModelKind::Quat) {
    const int m = model.m;
    for (const Scalar& u : field_units(f)) {
      if (i == -1)
        for (int l = 1; l <= m; ++l) basis.push_back(unit(f, n, l, 0, u));
      else if (i == 1)
        for (int l = 1; l <= m; ++l) basis.push_back(unit(f, n, 0, l, u));
      else if (i == 0) {
        basis.push_back(unit(f, n, 0, 0, u));
        for (int l = 1; l <= m; ++l)
          for (int t = 1; t <= m; ++t) basis.push_back(unit(f, n, l, t, u));
      }
    }
    return basis;
  }
  if (model.kind == ModelKind::CR) {
    const int d = model.p + model.q;
    switch (i) {
      case -2: basis.push_back(unit(f, n, n - 1, 0, Scalar::complex(0, 1))); break;
      case 2: basis.push_back(unit(f, n, 0, n - 1, Scalar::complex(0, 1))); break;
      case -1:
        for (int l = 0; l < d; ++l)
          for (const Scalar& u : field_units(f)) {
            Mat M = Mat::zeros(f, n, n);
            M.at(1 + l, 0) = u;
            M.at(n - 1, 1 + l) = -(u.conj() * model.signature(l));
            basis.push_back(M);
          }
        break;
      case 1:
        for (int l = 0; l < d; ++l)
          for (const Scalar& u : field_units(f)) {
            Mat M = Mat::zeros(f, n, n);
            M.at(0, 1 + l) = u;
            M.at(1 + l, n - 1) = -(model.signature(l) * u.conj());
            basis.push_back(M);
          }
        break;
      case 0: {
        for (const Scalar& u : field_units(f)) {
          Mat M = Mat::zeros(f, n, n);
          M.at(0, 0) = u;
          M.at(n - 1, n - 1) = -u.conj();
          basis.push_back(M);
        }
        // u(p,q) block: R = I_{p,q} S with S skew-Hermitian
        auto push_R = [&](const Mat& S) {
          Mat M = Mat::zeros(f, n, n);
          for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c) M.at(1 + r, 1 + c) = model.signature(r) * S.at(r, c);
          basis.push_back(M);
        };
        for (int l = 0; l < d; ++l) push_R(unit(f, d, l, l, Scalar::complex(0, 1)));
        for (int l = 0; l < d; ++l)
          for (int t = l + 1; t < d; ++t) {
            Mat S = Mat::zeros(f, d, d);
            S.at(l, t) = Scalar::complex(1, 0);
            S.at(t, l) = Scalar::complex(-1, 0);
            push_R(S);
            S.at(l, t) = Scalar::complex(0, 1);
            S.at(t, l) = Scalar::complex(0, 1);
            push_R(S);
          }
        break;
      }
      default: break;
    }
    return basis;
  }
  throw std::invalid_argument("grading_basis: model carries no grading");
}

bool subgroup_member(const ModelSpec& model, const Mat& g, Subgroup which, double tol) {
  const int n = model.matrix_size();
  Mat c = canon_center(g, model.center());

  if (model.kind == ModelKind::Affine || model.kind == ModelKind::Euclid) {
    const int m = model.m;
    switch (which) {
      case Subgroup::GMinus:
        return c.block(0, 0, m, m).equals(Mat::identity(Field::Real, m), tol);
      case Subgroup::GZero:
      case Subgroup::P:
        return c.block(0, m, m, 1).frobenius_norm() <= tol;
      case Subgroup::PPlus:
        return c.equals(Mat::identity(Field::Real, n), tol);
    }
  }

  if (model.kind == ModelKind::CProj || model.kind == ModelKind::Quat) {
    const int m = model.m;
    switch (which) {
      case Subgroup::GMinus: {
        Mat b = Mat::identity(model.field(), n);
        b.set_block(1, 0, c.block(1, 0, m, 1));
        return c.equals(b, tol);
      }
      case Subgroup::PPlus: {
        Mat b = Mat::identity(model.field(), n);
        b.set_block(0, 1, c.block(0, 1, 1, m));
        return c.equals(b, tol);
      }
      case Subgroup::GZero:
        return c.block(1, 0, m, 1).frobenius_norm() <= tol &&
               c.block(0, 1, 1, m).frobenius_norm() <= tol;
      case Subgroup::P:
        return c.block(1, 0, m, 1).frobenius_norm() <= tol;
    }
  }

  const int d = model.p + model.q;
  switch (which) {
    case Subgroup::GMinus: {
      Mat rebuilt = cr_gminus(model, c.block(1, 0, d, 1), c.at(n - 1, 0).x);
      return c.equals(rebuilt, tol);
    }
    case Subgroup::PPlus: {
      IsotropyElement a = IsotropyElement::make(model, c.block(0, 1, 1, d), c.at(0, n - 1).x);
      return c.equals(a.matrix(), tol);
    }
    case Subgroup::GZero:
      return c.block(1, 0, d, 1).frobenius_norm() <= tol &&
             c.block(n - 1, 0, 1, 1).frobenius_norm() <= tol &&
             c.block(n - 1, 1, 1, d).frobenius_norm() <= tol &&
             c.block(0, 1, 1, d).frobenius_norm() <= tol &&
             c.block(0, n - 1, 1, 1).frobenius_norm() <= tol &&
             c.block(1, n - 1, d, 1).frobenius_norm() <= tol;
    case Subgroup::P:
      return c.block(1, 0, n - 1, 1).frobenius_norm() <= tol;
  }
  return false;
}

AlgebraElement adjoint(const ModelSpec& model, const Mat& g, const AlgebraElement& X) {
  if (!(model == X.model)) throw std::invalid_argument("adjoint: model mismatch");
  return {model, center_reduce(model, g * X.matrix * inverse(g))};
}

HomogeneousPoint basepoint(const ModelSpec& model) {
  const int n = model.matrix_size();
  Mat v = Mat::zeros(model.field(), n, 1);
  if (model.kind == ModelKind::Affine || model.kind == ModelKind::Euclid)
    v.at(n - 1, 0) = Scalar::one(model.field());
  else
    v.at(0, 0) = Scalar::one(model.field());
  return {model, v};
}

HomogeneousPoint make_point(const ModelSpec& model, const Mat& coords) {
  if (coords.cols != 1 || coords.rows != model.matrix_size() || coords.field != model.field())
    throw std::invalid_argument("make_point: bad coordinate vector");
  return {model, coords};
}

HomogeneousPoint act(const Mat& g, const HomogeneousPoint& pt) {
  if (g.field != pt.model.field() || g.cols != pt.coords.rows)
    throw std::invalid_argument("act: model mismatch");
  Mat w = g * pt.coords;
  if (w.max_entry_norm() < 1e-13 * (1.0 + g.max_entry_norm()))
    throw std::domain_error("act: image coordinate vector vanished");
  if (pt.model.parabolic()) w = canon_column(w);
  return {pt.model, w};
}

bool point_equiv(const HomogeneousPoint& a, const HomogeneousPoint& b, double tol) {
  if (!(a.model == b.model)) return false;
  if (a.model.parabolic()) return column_equiv(a.coords, b.coords, tol);
  return a.coords.equals(b.coords, tol);
}

double null_form_value(const ModelSpec& model, const Mat& coords) {
  if (model.kind != ModelKind::CR) throw std::invalid_argument("null_form_value: cr model expected");
  return frobenius_inner(coords, model.gram_matrix() * coords);
}

Mat to_chart(const HomogeneousPoint& pt) {
  const ModelSpec& model = pt.model;
  const int n = model.matrix_size();
  const Mat& v = pt.coords;

  if (model.kind == ModelKind::Affine || model.kind == ModelKind::Euclid) {
    if (v.at(n - 1, 0).norm() < 1e-13 * (1.0 + v.max_entry_norm()))
      throw std::domain_error("to_chart: chart denominator vanished");
    return v.block(0, 0, n - 1, 1).scale_right(v.at(n - 1, 0).inverse());
  }

  if (v.at(0, 0).norm() < 1e-13 * (1.0 + v.max_entry_norm()))
    throw std::domain_error("to_chart: chart denominator vanished");
  Mat u = v.scale_right(v.at(0, 0).inverse());

  if (model.kind == ModelKind::CR) {
    const int d = model.p + model.q;
    Mat chart(Field::Complex, d + 1, 1);
    chart.set_block(0, 0, u.block(1, 0, d, 1));
    chart.at(d, 0) = Scalar::complex(u.at(n - 1, 0).x, 0);  // Im c
    return chart;
  }
  return u.block(1, 0, model.m, 1);
}

HomogeneousPoint from_chart(const ModelSpec& model, const Mat& chart) {
  const int n = model.matrix_size();
  Mat v = Mat::zeros(model.field(), n, 1);
  if (model.kind == ModelKind::Affine || model.kind == ModelKind::Euclid) {
    v.set_block(0, 0, chart);
    v.at(n - 1, 0) = Scalar::one(model.field());
    return {model, v};
  }
  v.at(0, 0) = Scalar::one(model.field());
  if (model.kind == ModelKind::CR) {
    const int d = model.p + model.q;
    double xIx = 0.0;
    for (int l = 0; l < d; ++l) {
      v.at(1 + l, 0) = chart.at(l, 0);
      xIx += model.signature(l) * chart.at(l, 0).norm2();
    }
    v.at(n - 1, 0) = Scalar::complex(-0.5 * xIx, chart.at(d, 0).w);
    return {model, v};
  }
  v.set_block(1, 0, chart);
  return {model, v};
}

Mat gminus_section(const ModelSpec& model, const Mat& chart) {
  const int n = model.matrix_size();
  if (model.kind == ModelKind::Affine || model.kind == ModelKind::Euclid) {
    Mat g = Mat::identity(Field::Real, n);
    g.set_block(0, n - 1, chart);
    return g;
  }
  if (model.kind == ModelKind::CR)
    return cr_gminus(model, chart.block(0, 0, model.p + model.q, 1),
                     chart.at(model.p + model.q, 0).w);
  Mat g = Mat::identity(model.field(), n);
  g.set_block(1, 0, chart);
  return g;
}

int chart_real_dim(const ModelSpec& model) {
  switch (model.kind) {
    case ModelKind::CProj: return 2 * model.m;
    case ModelKind::Quat: return 4 * model.m;
    case ModelKind::CR: return 2 * (model.p + model.q) + 1;
    default: return model.m;
  }
}

std::vector<double> chart_to_reals(const ModelSpec& model, const Mat& chart) {
  std::vector<double> v;
  v.reserve(chart_real_dim(model));
  if (model.kind == ModelKind::CR) {
    const int d = model.p + model.q;
    for (int l = 0; l < d; ++l) {
      v.push_back(chart.at(l, 0).w);
      v.push_back(chart.at(l, 0).x);
    }
    v.push_back(chart.at(d, 0).w);
    return v;
  }
  for (const Scalar& e : chart.a) {
    v.push_back(e.w);
    if (model.field() != Field::Real) v.push_back(e.x);
    if (model.field() == Field::Quaternion) {
      v.push_back(e.y);
      v.push_back(e.z);
    }
  }
  return v;
}

Mat chart_from_reals(const ModelSpec& model, const std::vector<double>& v) {
  if (model.kind == ModelKind::CR) {
    const int d = model.p + model.q;
    Mat chart(Field::Complex, d + 1, 1);
    for (int l = 0; l < d; ++l) chart.at(l, 0) = Scalar::complex(v[2 * l], v[2 * l + 1]);
    chart.at(d, 0) = Scalar::complex(v[2 * d], 0);
    return chart;
  }
  const Field f = model.field();
  const int stride = f == Field::Real ? 1 : (f == Field::Complex ? 2 : 4);
  Mat chart(f, static_cast<int>(v.size()) / stride, 1);
  for (int l = 0; l < chart.rows; ++l) {
    const double* c = v.data() + stride * l;
    chart.at(l, 0) = Scalar(f, c[0], stride > 1 ? c[1] : 0.0, stride > 2 ? c[2] : 0.0,
                            stride > 3 ? c[3] : 0.0);
  }
  return chart;
}

IsotropyElement IsotropyElement::make(const ModelSpec& model, const Mat& beta, double s) {
  if (!model.parabolic()) throw std::invalid_argument("isotropy: parabolic model expected");
  const int d = model.kind == ModelKind::CR ? model.p + model.q : model.m;
  if (beta.rows != 1 || beta.cols != d || beta.field != model.field())
    throw std::invalid_argument("isotropy: beta must be a 1 x dim covector over the model field");
  IsotropyElement a;
  a.model = model;
  a.beta = beta;
  a.s = model.kind == ModelKind::CR ? s : 0.0;
  return a;
}

double IsotropyElement::beta_pairing() const {
  double v = 0.0;
  for (int l = 0; l < beta.cols; ++l) {
    double sign = model.kind == ModelKind::CR ? model.signature(l) : 1.0;
    v += sign * beta.at(0, l).norm2();
  }
  return v;
}

Mat IsotropyElement::matrix_power(double k) const {
  const int n = model.matrix_size();
  Mat g = Mat::identity(model.field(), n);
  if (model.kind != ModelKind::CR) {
    for (int l = 0; l < model.m; ++l) g.at(0, 1 + l) = k * beta.at(0, l);
    return g;
  }
  const int d = model.p + model.q;
  for (int l = 0; l < d; ++l) {
    g.at(0, 1 + l) = k * beta.at(0, l);
    g.at(1 + l, n - 1) = (-k * model.signature(l)) * beta.at(0, l).conj();
  }
  g.at(0, n - 1) = Scalar::complex(-0.5 * k * k * beta_pairing(), k * s);
  return g;
}

bool IsotropyElement::is_trivial(double tol) const {
  return beta.frobenius_norm() <= tol && std::abs(s) <= tol;
}

bool IsotropyElement::non_null(double tol) const {
  if (is_trivial()) return false;
  if (model.kind != ModelKind::CR) return true;
  double b2 = beta.frobenius_norm();
  if (b2 <= tol) return std::abs(s) > tol;
  return std::abs(beta_pairing()) > tol * b2 * b2;
}

Scalar random_scalar(Field f, std::mt19937_64& rng, double scale) {
  std::uniform_real_distribution<double> d(-scale, scale);
  switch (f) {
    case Field::Real: return Scalar::real(d(rng));
    case Field::Complex: return Scalar::complex(d(rng), d(rng));
    default: return Scalar::quat(d(rng), d(rng), d(rng), d(rng));
  }
}

Mat random_mat(Field f, int r, int c, std::mt19937_64& rng, double scale) {
  Mat m(f, r, c);
  for (auto& e : m.a) e = random_scalar(f, rng, scale);
  return m;
}

Mat random_grade_element(const ModelSpec& model, int i, std::mt19937_64& rng, double scale) {
  std::uniform_real_distribution<double> d(-scale, scale);
  Mat X = Mat::zeros(model.field(), model.matrix_size(), model.matrix_size());
  for (const Mat& b : grading_basis(model, i)) X += d(rng) * b;
  return X;
}

Mat random_algebra_element(const ModelSpec& model, std::mt19937_64& rng, double scale) {
  const int n = model.matrix_size();
  if (model.kind == ModelKind::Affine || model.kind == ModelKind::Euclid) {
    const int m = model.m;
    Mat X = Mat::zeros(Field::Real, n, n);
    Mat A = random_mat(Field::Real, m, m, rng, scale);
    if (model.kind == ModelKind::Euclid) A = 0.5 * (A - A.dagger());
    X.set_block(0, 0, A);
    X.set_block(0, m, random_mat(Field::Real, m, 1, rng, scale));
    return X;
  }
  Mat X = Mat::zeros(model.field(), n, n);
  for (int i : model.grades()) X += random_grade_element(model, i, rng, scale);
  return center_reduce(model, X);
}

Mat random_g0_element(const ModelSpec& model, std::mt19937_64& rng, double scale) {
  if (model.kind == ModelKind::Affine || model.kind == ModelKind::Euclid) {
    const int m = model.m;
    Mat A = random_mat(Field::Real, m, m, rng, scale);
    if (model.kind == ModelKind::Euclid) A = 0.5 * (A - A.dagger());
    Mat X = Mat::zeros(Field::Real, m + 1, m + 1);
    X.set_block(0, 0, A);
    return mat_exp(X);
  }
  return mat_exp(random_grade_element(model, 0, rng, scale));
}

}  // namespace cartan
