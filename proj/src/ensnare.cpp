#include "cartan/ensnare.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cartan {

namespace {

Scalar beta_apply(const Mat& beta, const Mat& x) {
  Scalar s = Scalar::zero(beta.field);
  for (int l = 0; l < beta.cols; ++l) s += beta.at(0, l) * x.at(l, 0);
  return s;
}

// |beta(x)| and |c| measured on a coordinate vector
double beta_norm_at(const EnsnareCase& c, const Mat& coords) {
  Mat x = coords.block(1, 0, c.a.beta.cols, 1);
  return beta_apply(c.a.beta, x).norm();
}

double c_norm_at(const EnsnareCase&, const Mat& coords) {
  return coords.at(coords.rows - 1, 0).norm();
}

double ell2(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

// operator norm of a dense real matrix via power iteration on J^T J
double operator_norm(const std::vector<std::vector<double>>& J) {
  const int rows = static_cast<int>(J.size());
  const int cols = static_cast<int>(J[0].size());
  std::vector<double> v(cols, 1.0 / std::sqrt(static_cast<double>(cols)));
  double lambda = 0.0;
  for (int it = 0; it < 200; ++it) {
    std::vector<double> w(rows, 0.0);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) w[i] += J[i][j] * v[j];
    std::vector<double> u(cols, 0.0);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) u[j] += J[i][j] * w[i];
    double nu = ell2(u);
    if (nu == 0.0) return 0.0;
    for (double& x : u) x /= nu;
    v = u;
    lambda = nu;
  }
  return std::sqrt(lambda);
}

}  // namespace

EnsnareCase EnsnareCase::make(const ModelSpec& model, const Mat& beta, double s, const Mat& y) {
  EnsnareCase c;
  c.model = model;
  c.a = IsotropyElement::make(model, beta, s);
  c.y = y;

  if (model.kind == ModelKind::CR) {
    bool beta_zero = beta.frobenius_norm() <= 1e-14;
    c.fixed_set = beta_zero ? FixedSetDescriptor{FixedSetKind::CZero, 2}
                            : FixedSetDescriptor{FixedSetKind::BetaKernelCZero, 4};
  } else {
    int codim = model.kind == ModelKind::Quat ? 4 : 2;
    c.fixed_set = {FixedSetKind::BetaKernel, codim};
    if (!c.a.is_trivial()) {
      if (y.rows != model.m || y.cols != 1 || y.field != model.field())
        throw std::invalid_argument("ensnare case: y must be a model-field column of length m");
      Scalar by = beta_apply(beta, y);
      if (std::abs(by.x) + std::abs(by.y) + std::abs(by.z) > 1e-12 * (1 + by.norm()) || by.w <= 0)
        throw std::invalid_argument("ensnare case: beta(y) must be real and positive");
    }
  }
  return c;
}

double EnsnareCase::beta_of_y() const {
  Scalar by = Scalar::zero(a.beta.field);
  for (int l = 0; l < a.beta.cols; ++l) by += a.beta.at(0, l) * y.at(l, 0);
  return by.w;
}

void DecaySeries::finalize() {
  fitted_exponent = fit_power_law(ks, values);
  monotone_from = 0;
  for (int i = static_cast<int>(values.size()) - 1; i > 0; --i) {
    if (values[i - 1] <= values[i]) {
      monotone_from = i;
      return;
    }
  }
}

double fit_power_law(const std::vector<double>& ks, const std::vector<double>& values) {
  std::vector<double> lx, ly;
  for (size_t i = 0; i < ks.size(); ++i)
    if (ks[i] > 0 && values[i] > 0) {
      lx.push_back(std::log(ks[i]));
      ly.push_back(std::log(values[i]));
    }
  size_t n = lx.size();
  if (n < 2) return 0.0;
  size_t lo = n / 2;  // burn-in: fit over the last half
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  size_t cnt = n - lo;
  for (size_t i = lo; i < n; ++i) {
    sx += lx[i];
    sy += ly[i];
    sxx += lx[i] * lx[i];
    sxy += lx[i] * ly[i];
  }
  double denom = cnt * sxx - sx * sx;
  if (std::abs(denom) < 1e-14) return 0.0;
  return (cnt * sxy - sx * sy) / denom;
}

std::vector<double> decay_k_grid(int k_max) {
  std::vector<double> ks{0, 1};
  double k = 1;
  while (k < k_max) {
    k = std::min<double>(k_max, std::ceil(k * 1.8));
    ks.push_back(k);
  }
  return ks;
}

HomogeneousPoint orbit(const EnsnareCase& c, const HomogeneousPoint& pt, double k) {
  if (!(pt.model == c.model)) throw std::invalid_argument("orbit: model mismatch");
  const Mat& v = pt.coords;
  Mat w = v;
  const Mat& beta = c.a.beta;

  if (c.model.kind != ModelKind::CR) {
    Mat x = v.block(1, 0, c.model.m, 1);
    Scalar bx = Scalar::zero(beta.field);
    for (int l = 0; l < beta.cols; ++l) bx += beta.at(0, l) * x.at(l, 0);
    w.at(0, 0) = v.at(0, 0) + k * bx;
  } else {
    const int d = c.model.p + c.model.q;
    Mat x = v.block(1, 0, d, 1);
    Scalar r = v.at(0, 0), cc = v.at(d + 1, 0);
    Scalar bx = beta_apply(beta, x);
    Scalar ics = Scalar::complex(0, c.a.s) * cc;
    double q = c.a.beta_pairing();
    w.at(0, 0) = r + k * (bx + ics) - (0.5 * k * k * q) * cc;
    for (int l = 0; l < d; ++l)
      w.at(1 + l, 0) = x.at(l, 0) - (k * c.model.signature(l)) * (cc * beta.at(0, l).conj());
  }
  if (w.max_entry_norm() < 1e-13 * (1.0 + v.max_entry_norm()))
    throw std::domain_error("orbit: coordinate vector degenerated");
  return {c.model, canon_column(w)};
}

std::vector<double> orbit_chart_reals(const EnsnareCase& c, const std::vector<double>& x,
                                      double k) {
  HomogeneousPoint pt = from_chart(c.model, chart_from_reals(c.model, x));
  return chart_to_reals(c.model, to_chart(orbit(c, pt, k)));
}

bool fixed_set_contains(const EnsnareCase& c, const HomogeneousPoint& pt, double tol) {
  Mat v = canon_column(pt.coords);
  double scale = v.frobenius_norm();
  switch (c.fixed_set.kind) {
    case FixedSetKind::BetaKernel:
      return beta_norm_at(c, v) <= tol * scale * (1 + c.a.beta.frobenius_norm());
    case FixedSetKind::CZero:
      return c_norm_at(c, v) <= tol * scale;
    case FixedSetKind::BetaKernelCZero:
      return beta_norm_at(c, v) <= tol * scale * (1 + c.a.beta.frobenius_norm()) &&
             c_norm_at(c, v) <= tol * scale;
  }
  return false;
}

HomogeneousPoint sample_fixed_point(const EnsnareCase& c, std::mt19937_64& rng) {
  const Field f = c.model.field();
  const Mat& beta = c.a.beta;
  auto kernel_project = [&](Mat x) {
    double b2 = 0.0;
    for (int l = 0; l < beta.cols; ++l) b2 += beta.at(0, l).norm2();
    if (b2 < 1e-28) return x;
    Scalar lam = Scalar::zero(f);
    for (int l = 0; l < beta.cols; ++l) lam += beta.at(0, l) * x.at(l, 0);
    lam = (1.0 / b2) * lam;
    for (int l = 0; l < beta.cols; ++l) x.at(l, 0) -= beta.at(0, l).conj() * lam;
    return x;
  };

  if (c.model.kind != ModelKind::CR) {
    Mat x = kernel_project(random_mat(f, c.model.m, 1, rng));
    Mat v(f, c.model.m + 1, 1);
    v.at(0, 0) = random_scalar(f, rng) + Scalar::one(f);  // keep r away from 0
    v.set_block(1, 0, x);
    return {c.model, canon_column(v)};
  }

  const int d = c.model.p + c.model.q, n = d + 2;
  for (int attempt = 0; attempt < 64; ++attempt) {
    Mat x = random_mat(Field::Complex, d, 1, rng);
    if (c.fixed_set.kind == FixedSetKind::BetaKernelCZero) x = kernel_project(x);
    // rescale the negative-signature block so the form vanishes
    double plus = 0.0, minus = 0.0;
    for (int l = 0; l < d; ++l)
      (c.model.signature(l) > 0 ? plus : minus) += x.at(l, 0).norm2();
    if (minus > 1e-20 && plus > 1e-20) {
      double t = std::sqrt(plus / minus);
      for (int l = c.model.p; l < d; ++l) x.at(l, 0) = t * x.at(l, 0);
    } else {
      x = Mat::zeros(Field::Complex, d, 1);
    }
    if (c.fixed_set.kind == FixedSetKind::BetaKernelCZero) {
      Scalar bx = beta_apply(beta, x);
      if (bx.norm() > 1e-10) x = Mat::zeros(Field::Complex, d, 1);
    }
    Mat v(Field::Complex, n, 1);
    v.at(0, 0) = random_scalar(Field::Complex, rng) + Scalar::one(Field::Complex);
    v.set_block(1, 0, x);
    // c = 0 on the fixed set, so the null relation needs x^dagger I x = 0
    double scale = v.frobenius_norm();
    if (std::abs(null_form_value(c.model, v)) <= 1e-10 * scale * scale)
      return {c.model, canon_column(v)};
  }
  return basepoint(c.model);
}

HomogeneousPoint sample_moving_point(const EnsnareCase& c, std::mt19937_64& rng) {
  for (int attempt = 0; attempt < 256; ++attempt) {
    Mat chart = random_mat(c.model.kind == ModelKind::CR ? Field::Complex : c.model.field(),
                           c.model.kind == ModelKind::CR ? c.model.p + c.model.q + 1 : c.model.m,
                           1, rng);
    if (c.model.kind == ModelKind::CR) chart.at(chart.rows - 1, 0).x = 0;
    HomogeneousPoint pt = from_chart(c.model, chart);
    Mat v = canon_column(pt.coords);
    bool clear = false;
    switch (c.fixed_set.kind) {
      case FixedSetKind::BetaKernel: clear = beta_norm_at(c, v) > 0.1; break;
      case FixedSetKind::CZero: clear = c_norm_at(c, v) > 0.1; break;
      case FixedSetKind::BetaKernelCZero:
        clear = beta_norm_at(c, v) > 0.1 || c_norm_at(c, v) > 0.1;
        break;
    }
    if (clear) return pt;
  }
  throw std::runtime_error("sample_moving_point: sampling budget exhausted");
}

BasePathFn zeta_generator(const EnsnareCase& c) {
  if (c.a.is_trivial()) throw std::invalid_argument("zeta: trivial isotropy has no access path");

  if (c.model.kind != ModelKind::CR) {
    const Field f = c.model.field();
    const int n = c.model.m + 1;
    Mat y = c.y;
    BasePathFn z;
    z.value = [f, n, y](double t) {
      Mat v = Mat::zeros(f, n, 1);
      v.at(0, 0) = Scalar::one(f);
      for (int l = 0; l < y.rows; ++l) v.at(1 + l, 0) = t * y.at(l, 0);
      return v;
    };
    z.velocity = [f, n, y](double) {
      Mat v = Mat::zeros(f, n, 1);
      for (int l = 0; l < y.rows; ++l) v.at(1 + l, 0) = y.at(l, 0);
      return v;
    };
    return z;
  }

  if (!c.a.non_null())
    throw std::invalid_argument("zeta: cr isotropy must be non-null");
  const int d = c.model.p + c.model.q, n = d + 2;
  const double s = c.a.s;
  const Mat beta = c.a.beta;
  const double q = c.a.beta_pairing();
  const ModelSpec model = c.model;

  if (beta.frobenius_norm() <= 1e-14) {
    // representative divided by t: (t - s, 0, t i)
    BasePathFn z;
    z.value = [n, s](double t) {
      Mat v = Mat::zeros(Field::Complex, n, 1);
      v.at(0, 0) = Scalar::complex(t - s, 0);
      v.at(n - 1, 0) = Scalar::complex(0, t);
      return v;
    };
    z.velocity = [n](double) {
      Mat v = Mat::zeros(Field::Complex, n, 1);
      v.at(0, 0) = Scalar::complex(1, 0);
      v.at(n - 1, 0) = Scalar::complex(0, 1);
      return v;
    };
    return z;
  }

  BasePathFn z;
  z.value = [n, d, s, q, beta, model](double t) {
    Mat v = Mat::zeros(Field::Complex, n, 1);
    v.at(0, 0) = Scalar::complex(t * (t - s), -0.5 * q);
    for (int l = 0; l < d; ++l)
      v.at(1 + l, 0) = Scalar::complex(0, -t) * (model.signature(l) * beta.at(0, l).conj());
    v.at(n - 1, 0) = Scalar::complex(0, t * t);
    return v;
  };
  z.velocity = [n, d, s, beta, model](double t) {
    Mat v = Mat::zeros(Field::Complex, n, 1);
    v.at(0, 0) = Scalar::complex(2 * t - s, 0);
    for (int l = 0; l < d; ++l)
      v.at(1 + l, 0) = Scalar::complex(0, -1) * (model.signature(l) * beta.at(0, l).conj());
    v.at(n - 1, 0) = Scalar::complex(0, 2 * t);
    return v;
  };
  return z;
}

SampledPath zeta_path(const EnsnareCase& c, int n_intervals) {
  BasePathFn z = zeta_generator(c);
  return sample_path(z.value, z.velocity, n_intervals);
}

double tau_k(const EnsnareCase& c, double k, double t) {
  double rate = c.model.kind == ModelKind::CR ? 1.0 : c.beta_of_y();
  return t / (1.0 + k * rate * (1.0 - t));
}

DecaySeries shrink_check(const EnsnareCase& c, int k_max, int n_samples) {
  BasePathFn z = zeta_generator(c);
  DecaySeries series;
  series.ks = decay_k_grid(k_max);
  const double dt = 1.0 / n_samples;

  for (double k : series.ks) {
    // chart coordinates of a^k zeta(tau_k(t)) on the grid
    std::vector<std::vector<double>> cs(n_samples + 1);
    for (int j = 0; j <= n_samples; ++j) {
      double t = tau_k(c, k, j * dt);
      HomogeneousPoint pt{c.model, z.value(t)};
      cs[j] = chart_to_reals(c.model, to_chart(orbit(c, pt, k)));
    }
    double sup_val = 0.0, sup_der = 0.0;
    for (int j = 0; j <= n_samples; ++j) {
      sup_val = std::max(sup_val, ell2(cs[j]));
      int a = std::max(0, j - 1), b = std::min(n_samples, j + 1);
      std::vector<double> der(cs[j].size());
      for (size_t i = 0; i < der.size(); ++i) der[i] = (cs[b][i] - cs[a][i]) / ((b - a) * dt);
      sup_der = std::max(sup_der, ell2(der));
    }
    series.values.push_back(sup_val + sup_der);
  }
  series.finalize();
  return series;
}

ChartBall default_chart_ball(const EnsnareCase& c) {
  ChartBall ball;
  ball.center.assign(chart_real_dim(c.model), 0.0);
  ball.radius = 1.0;
  if (c.model.kind == ModelKind::CR) {
    // distance to {c = 0} is measured along Im c, the last chart coordinate
    ball.center.back() = 1.0;
  } else {
    // place the center at beta(x) = 1 along the conjugate direction of beta
    const Mat& beta = c.a.beta;
    double b2 = 0.0;
    for (int l = 0; l < beta.cols; ++l) b2 += beta.at(0, l).norm2();
    if (b2 < 1e-28) throw std::invalid_argument("chart ball: trivial isotropy");
    Mat x = Mat::zeros(c.model.field(), c.model.m, 1);
    for (int l = 0; l < beta.cols; ++l) x.at(l, 0) = (1.0 / b2) * beta.at(0, l).conj();
    ball.center = chart_to_reals(c.model, x);
    double norm = ell2(ball.center);
    for (double& v : ball.center) v /= norm;  // chart distance 1 from beta(x) = 0
  }
  return ball;
}

std::vector<std::vector<double>> chart_ball_grid(const EnsnareCase& c, const ChartBall& ball) {
  (void)c;
  const int d = static_cast<int>(ball.center.size());
  int per_axis = ball.per_axis > 0 ? ball.per_axis : 11;
  while (per_axis > 3 && std::pow(per_axis, d) > ball.max_samples) --per_axis;

  std::vector<std::vector<double>> grid;
  std::vector<int> idx(d, 0);
  while (true) {
    std::vector<double> x(d);
    double dist2 = 0.0;
    for (int i = 0; i < d; ++i) {
      x[i] = ball.center[i] - ball.radius + 2.0 * ball.radius * idx[i] / std::max(1, per_axis - 1);
      dist2 += (x[i] - ball.center[i]) * (x[i] - ball.center[i]);
    }
    if (dist2 < ball.radius * ball.radius * (1.0 - 1e-12)) grid.push_back(std::move(x));
    int axis = 0;
    while (axis < d && ++idx[axis] == per_axis) idx[axis++] = 0;
    if (axis == d) break;
  }
  return grid;
}

double jacobian_norm_fd(const EnsnareCase& c, double k, const std::vector<double>& x,
                        double fd_step) {
  const int d = static_cast<int>(x.size());
  std::vector<std::vector<double>> J(d, std::vector<double>(d, 0.0));
  for (int j = 0; j < d; ++j) {
    std::vector<double> xp = x, xm = x;
    xp[j] += fd_step;
    xm[j] -= fd_step;
    std::vector<double> fp = orbit_chart_reals(c, xp, k);
    std::vector<double> fm = orbit_chart_reals(c, xm, k);
    for (int i = 0; i < d; ++i) J[i][j] = (fp[i] - fm[i]) / (2 * fd_step);
  }
  return operator_norm(J);
}

Mat cproj_jacobian_analytic(const EnsnareCase& c, double k, const Mat& chart, const Mat& dir) {
  if (c.model.kind != ModelKind::CProj)
    throw std::invalid_argument("analytic jacobian: cproj model expected");
  // (u + k (beta(x) u - beta(u) x)) / (1 + k beta(x))^2
  Scalar bx = beta_apply(c.a.beta, chart);
  Scalar bu = beta_apply(c.a.beta, dir);
  Scalar den = Scalar::one(Field::Complex) + k * bx;
  Scalar den2inv = (den * den).inverse();
  Mat num = dir + dir.scale_left(k * bx) - chart.scale_left(k * bu);
  return num.scale_left(den2inv);
}

DecaySeries jacobian_decay(const EnsnareCase& c, const ChartBall& ball, int k_max,
                           double fd_step) {
  auto grid = chart_ball_grid(c, ball);
  if (grid.empty()) throw std::invalid_argument("jacobian_decay: empty ball grid");
  for (const auto& x : grid) {
    HomogeneousPoint pt = from_chart(c.model, chart_from_reals(c.model, x));
    if (fixed_set_contains(c, pt, 1e-7))
      throw std::invalid_argument("jacobian_decay: grid touches the fixed set");
  }
  DecaySeries series;
  series.ks = decay_k_grid(k_max);
  for (double k : series.ks) {
    double sup = 0.0;
    for (const auto& x : grid) sup = std::max(sup, jacobian_norm_fd(c, k, x, fd_step));
    series.values.push_back(sup);
  }
  series.finalize();
  return series;
}

ContractionWitness conjugation_orbit_witness(const EnsnareCase& c, const Mat& g, long k_budget,
                                             double ratio_threshold) {
  const Center center = c.model.center();
  const int n = c.model.matrix_size();
  const Mat id = Mat::identity(c.model.field(), n);

  // fixed-norm distance from the center line: min_lambda |M - lambda I|,
  // so the polynomial-in-k growth of the conjugation orbit is visible
  auto dist_to_e = [&](const Mat& m) {
    Scalar lam = m.trace() / n;
    if (c.model.kind == ModelKind::Quat) lam = Scalar::quat(lam.w, 0, 0, 0);
    return (m - id.scale_left(lam)).frobenius_norm();
  };

  if ((canon_center(g, center) - id).frobenius_norm() <= 1e-12)
    return {ContractionWitness::Kind::Constant, 0, 0.0};
  double d0 = std::max(dist_to_e(g), 1e-12);

  Mat orbit0 = canon_center(g, center);
  Mat diag0 = grade_project(c.model, g, 0);
  bool constant = true, diag_constant = true;
  long k = 1;
  while (true) {
    Mat conj = c.a.matrix_power(static_cast<double>(k)) * g *
               c.a.matrix_power(-static_cast<double>(k));
    double dk = dist_to_e(conj);
    if (dk > ratio_threshold * d0)
      return {ContractionWitness::Kind::Diverged, k, dk / d0};
    if ((canon_center(conj, center) - orbit0).frobenius_norm() > 1e-8 * (1 + d0))
      constant = false;
    if ((grade_project(c.model, conj, 0) - diag0).frobenius_norm() > 1e-9 * (1 + d0))
      diag_constant = false;
    if (k >= k_budget) break;
    k = std::min(k_budget, 2 * k);
  }
  if (constant) return {ContractionWitness::Kind::Constant, k_budget, 1.0};
  // The block-diagonal part of the orbit is constant whenever it will ever
  // be (the isotropy is block-triangular unipotent); a constant diagonal
  // away from the center floors the whole orbit away from e.
  double diag_floor = dist_to_e(diag0);
  if (diag_constant && diag_floor > 1e-9 * (1 + g.frobenius_norm()))
    return {ContractionWitness::Kind::Constant, k_budget, diag_floor / d0};
  return {ContractionWitness::Kind::Inconclusive, k_budget, 0.0};
}

ContractionVerdict contraction_hypothesis(const EnsnareCase& c, int n_samples,
                                          std::mt19937_64& rng, long k_budget) {
  ContractionVerdict v;
  Mat N = c.a.matrix() - Mat::identity(c.model.field(), c.model.matrix_size());
  Mat Np = N * N;
  if (c.model.kind == ModelKind::CR) Np = Np * N;
  v.unipotent_exact = Np.exactly_zero();

  for (int i = 0; i < n_samples; ++i) {
    Mat g;
    // spread samples across the subgroups the conjugation acts on
    switch (i % 3) {
      case 0: g = mat_exp(random_grade_element(c.model, -1, rng)); break;
      case 1: g = random_g0_element(c.model, rng); break;
      default: g = mat_exp(random_algebra_element(c.model, rng, 0.5)); break;
    }
    ContractionWitness w = conjugation_orbit_witness(c, g, k_budget);
    switch (w.kind) {
      case ContractionWitness::Kind::Diverged: ++v.diverged; break;
      case ContractionWitness::Kind::Constant: ++v.constant; break;
      default: ++v.inconclusive; break;
    }
  }
  return v;
}

EnsnareVerdict ensnare_verdict(const EnsnareCase& c, const EnsnareTolerances& tols,
                               std::mt19937_64& rng) {
  EnsnareVerdict v;
  v.fixed_codimension = c.fixed_set.codimension;

  if (c.a.is_trivial()) {
    v.pass = false;
    v.reason = "isotropy is trivial: the fixed set is everything and U is empty";
    v.checks.push_back({"u-nonempty", false, 0.0, 0.0});
    return v;
  }
  if (c.model.kind == ModelKind::CR && !c.a.non_null()) {
    v.pass = false;
    v.reason = "cr isotropy is null: outside the verified hypotheses";
    v.checks.push_back({"non-null", false, 0.0, 0.0});
    return v;
  }

  Mat A = c.a.matrix();

  // fixed points of the analytic descriptor are exactly fixed
  double worst_fix = 0.0;
  for (int i = 0; i < tols.n_fixed_samples; ++i) {
    HomogeneousPoint pt = sample_fixed_point(c, rng);
    HomogeneousPoint moved = act(A, pt);
    Mat da = canon_column(moved.coords) - canon_column(pt.coords);
    worst_fix = std::max(worst_fix, da.frobenius_norm());
  }
  v.checks.push_back(
      {"fixed-set-exact", worst_fix <= tols.fixed_exact, worst_fix, tols.fixed_exact});

  // complement points move and stay in U
  double least_move = 1e300;
  bool invariant = true;
  std::vector<HomogeneousPoint> movers;
  for (int i = 0; i < tols.n_complement_samples; ++i) {
    HomogeneousPoint pt = sample_moving_point(c, rng);
    movers.push_back(pt);
    std::vector<double> x0 = chart_to_reals(c.model, to_chart(pt));
    std::vector<double> x1 = chart_to_reals(c.model, to_chart(act(A, pt)));
    double move = 0.0;
    for (size_t j = 0; j < x0.size(); ++j) move += (x1[j] - x0[j]) * (x1[j] - x0[j]);
    least_move = std::min(least_move, std::sqrt(move));
    if (fixed_set_contains(c, act(A, pt), 1e-9)) invariant = false;
  }
  v.checks.push_back(
      {"complement-moves", least_move > tols.complement_moves, least_move, tols.complement_moves});
  v.checks.push_back({"u-invariant", invariant, invariant ? 1.0 : 0.0, 1.0});

  // chart distance of the orbit of a complement point to q(e), per k
  {
    DecaySeries orb;
    orb.ks = decay_k_grid(tols.k_max);
    HomogeneousPoint probe = movers.front();
    for (double k : orb.ks)
      orb.values.push_back(ell2(chart_to_reals(c.model, to_chart(orbit(c, probe, k)))));
    orb.finalize();
    v.orbit_decay = orb;
    bool ok = orb.fitted_exponent <= tols.min_decay_exponent;
    v.checks.push_back(
        {"orbit-decay-exponent", ok, orb.fitted_exponent, tols.min_decay_exponent});
  }

  v.shrink = shrink_check(c, tols.k_max);
  bool shrink_ok = v.shrink.monotone_from <= static_cast<int>(v.shrink.values.size()) / 2 &&
                   v.shrink.final_value() <= tols.shrink_final &&
                   v.shrink.fitted_exponent <= tols.min_decay_exponent;
  v.checks.push_back(
      {"shrink-to-first-order", shrink_ok, v.shrink.final_value(), tols.shrink_final});

  ChartBall ball = tols.ball.center.empty() ? default_chart_ball(c) : tols.ball;
  v.jacobian = jacobian_decay(c, ball, tols.k_max);
  bool jac_ok = v.jacobian.final_value() <= tols.jacobian_final &&
                v.jacobian.fitted_exponent <= tols.min_decay_exponent;
  v.checks.push_back(
      {"jacobian-sup-decay", jac_ok, v.jacobian.final_value(), tols.jacobian_final});

  ContractionVerdict cv = contraction_hypothesis(c, tols.n_contraction_samples, rng, tols.k_max);
  v.checks.push_back(
      {"unipotency-exact", cv.unipotent_exact, cv.unipotent_exact ? 1.0 : 0.0, 1.0});
  v.checks.push_back({"contraction-witnesses", cv.inconclusive == 0,
                      static_cast<double>(cv.inconclusive), 0.0});

  v.pass = true;
  for (const auto& chk : v.checks) v.pass = v.pass && chk.pass;
  if (!v.pass) {
    v.reason = "failed:";
    for (const auto& chk : v.checks)
      if (!chk.pass) v.reason += " " + chk.name;
  }
  return v;
}

}  // namespace cartan
