#include "cartan/development.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace cartan {

namespace {

// Spot check that the stored derivative samples describe the stored values.
void check_samples(const GeometryHandle& G, const SampledPath& p) {
  const int n = p.intervals();
  int stride = std::max(1, n / 24);
  for (int k = 0; k < n; k += stride) {
    double dt = p.grid[k + 1] - p.grid[k];
    double mid = (p.grid[k] + p.grid[k + 1]) / 2.0;
    bool skip = false;
    for (double b : p.breakpoints)
      if (std::abs(mid - b) <= dt) skip = true;
    if (skip) continue;
    Mat chord = mat_log(solve(p.values[k], p.values[k + 1]));
    Mat w = omega_at(G, p.values[k], p.values[k] * chord);
    if ((w - dt * p.omega[k]).frobenius_norm() / dt > 0.2 * (1.0 + w.frobenius_norm() / dt))
      throw std::invalid_argument("develop: inconsistent derivative samples");
  }
}

struct StepResult {
  Mat point;
  std::optional<double> escape_fraction;  // within the step
};

// One midpoint exponential step of omega(gamma') = v from p.
StepResult bundle_step(const GeometryHandle& G, const Mat& p, const Mat& v, double dt) {
  Mat V = omega_inv_algebra(G, p, v);
  if (G.variant == GeometryVariant::Perturbed) {
    Mat half = p * mat_exp((0.5 * dt) * V);
    V = omega_inv_algebra(G, half, v);
  }
  Mat next = p * mat_exp(dt * V);
  if (G.in_domain(next)) return {next, std::nullopt};
  double lo = 0.0, hi = 1.0;
  for (int it = 0; it < 60; ++it) {
    double mid = 0.5 * (lo + hi);
    (G.in_domain(p * mat_exp(mid * dt * V)) ? lo : hi) = mid;
  }
  return {p * mat_exp(lo * dt * V), lo};
}

AntidevelopResult integrate_samples(const GeometryHandle& G, const Mat& start,
                                    const std::vector<double>& grid,
                                    const std::vector<Mat>& omega,
                                    const std::vector<double>& breakpoints) {
  if (!G.in_domain(start)) throw std::domain_error("integrate: start outside domain");
  AntidevelopResult out;
  out.path.grid = {grid[0]};
  out.path.values = {start};
  out.path.breakpoints = breakpoints;
  Mat p = start;
  for (size_t k = 0; k + 1 < grid.size(); ++k) {
    double dt = grid[k + 1] - grid[k];
    StepResult s = bundle_step(G, p, omega[k], dt);
    out.path.omega.push_back(omega[k]);
    if (s.escape_fraction) {
      double te = grid[k] + *s.escape_fraction * dt;
      out.path.grid.push_back(te);
      out.path.values.push_back(s.point);
      out.escape_time = te;
      return out;
    }
    p = s.point;
    out.path.grid.push_back(grid[k + 1]);
    out.path.values.push_back(p);
  }
  return out;
}

}  // namespace

SampledPath develop(const GeometryHandle& G, const SampledPath& gamma) {
  check_samples(G, gamma);
  const Field f = G.model.field();
  const int n = G.model.matrix_size();
  SampledPath out;
  out.grid = gamma.grid;
  out.breakpoints = gamma.breakpoints;
  out.omega = gamma.omega;
  out.values.reserve(gamma.values.size());
  Mat g = Mat::identity(f, n);
  out.values.push_back(g);
  for (int k = 0; k < gamma.intervals(); ++k) {
    g = g * mat_exp((gamma.grid[k + 1] - gamma.grid[k]) * gamma.omega[k]);
    out.values.push_back(g);
  }
  return out;
}

Mat develop_endpoint(const GeometryHandle& G, const SampledPath& gamma) {
  return develop(G, gamma).end();
}

Mat develop_endpoint_reparam(const GeometryHandle& G, const SampledPath& gamma,
                             std::function<double(double)> tau,
                             std::function<double(double)> tau_prime, int n_intervals) {
  return develop_endpoint(G, reparametrize(gamma, std::move(tau), std::move(tau_prime), n_intervals));
}

AntidevelopResult antidevelop(const GeometryHandle& G, const SampledPath& gamma_model,
                              const Mat& start) {
  const Mat id = Mat::identity(gamma_model.start().field, gamma_model.start().rows);
  if (!gamma_model.start().equals(id, 1e-10))
    throw std::invalid_argument("antidevelop: model path must start at the identity");
  return integrate_samples(G, start, gamma_model.grid, gamma_model.omega,
                           gamma_model.breakpoints);
}

AntidevelopResult integrate_omega(const GeometryHandle& G, const Mat& start,
                                  const std::function<Mat(double)>& f, int n_intervals) {
  std::vector<double> grid(n_intervals + 1);
  std::vector<Mat> omega;
  omega.reserve(n_intervals);
  for (int k = 0; k <= n_intervals; ++k) grid[k] = static_cast<double>(k) / n_intervals;
  for (int k = 0; k < n_intervals; ++k) omega.push_back(f((k + 0.5) / n_intervals));
  return integrate_samples(G, start, grid, omega, {});
}

ContinuityProbeReport develop_continuity_probe(const GeometryHandle& G, const Mat& start,
                                               const std::vector<std::function<Mat(double)>>& fks,
                                               const std::function<Mat(double)>& finf,
                                               int n_intervals, const MetricG& metric) {
  AntidevelopResult ref = integrate_omega(G, start, finf, n_intervals);
  if (ref.escaped()) throw std::domain_error("continuity probe: limit solution escaped");

  ContinuityProbeReport report;
  for (const auto& fk : fks) {
    AntidevelopResult sol = integrate_omega(G, start, fk, n_intervals);
    if (sol.escaped()) throw std::domain_error("continuity probe: solution escaped");
    ContinuityProbeEntry e;
    for (int k = 0; k < n_intervals; ++k) {
      double mid = (k + 0.5) / n_intervals;
      e.sup_gap = std::max(e.sup_gap, metric.norm(fk(mid) - finf(mid)));
    }
    e.distance = path_distance(G, sol.path, ref.path, metric).total();
    e.ratio = e.sup_gap > 0 ? e.distance / e.sup_gap : 0.0;
    report.entries.push_back(e);
    report.max_ratio = std::max(report.max_ratio, e.ratio);
  }
  return report;
}

double antidev_radius(const GeometryHandle& G, const Mat& pt, const MetricG& metric,
                      int n_directions, std::mt19937_64& rng, double length_cap) {
  if (G.variant != GeometryVariant::OpenRestriction)
    return std::numeric_limits<double>::infinity();

  std::vector<Mat> dirs;
  if (G.model.kind == ModelKind::Affine || G.model.kind == ModelKind::Euclid) {
    const int m = G.model.m, n = m + 1;
    for (int i = 0; i < m; ++i)
      for (double sgn : {1.0, -1.0}) {
        Mat X = Mat::zeros(Field::Real, n, n);
        X.at(i, m) = Scalar::real(sgn);
        dirs.push_back(X);
      }
  }
  while (static_cast<int>(dirs.size()) < n_directions)
    dirs.push_back(random_algebra_element(G.model, rng));

  double best = length_cap;
  for (Mat X : dirs) {
    double nx = metric.norm(X);
    if (nx < 1e-12) continue;
    X = (1.0 / nx) * X;
    FlowResult r = flow_const(G, pt, X, length_cap, 512);
    if (r.escaped()) best = std::min(best, *r.escape_time);
  }
  return 0.9 * best;
}

SampledPath lift_base_path(const GeometryHandle& G, const std::vector<Mat>& chart_points,
                           const Mat& start) {
  if (chart_points.size() < 2) throw std::invalid_argument("lift: need at least two samples");
  Mat L0 = gminus_section(G.model, chart_points.front());
  Mat h0 = solve(L0, start);
  if (!subgroup_member(G.model, h0, Subgroup::P, 1e-8))
    throw std::domain_error("lift: start point is not in the fiber over the loop start");

  const int n = static_cast<int>(chart_points.size()) - 1;
  SampledPath p;
  p.grid.resize(n + 1);
  p.values.reserve(n + 1);
  for (int k = 0; k <= n; ++k) {
    p.grid[k] = static_cast<double>(k) / n;
    Mat v = gminus_section(G.model, chart_points[k]) * h0;
    if (!G.in_domain(v)) throw std::domain_error("lift: path escaped the domain");
    p.values.push_back(v);
  }
  for (int k = 0; k < n; ++k) {
    Mat chord = mat_log(solve(p.values[k], p.values[k + 1]));
    p.omega.push_back(static_cast<double>(n) *
                      omega_at(G, p.values[k], p.values[k] * chord));
  }
  return p;
}

HolonomyResult holonomy(const GeometryHandle& G, const std::vector<Mat>& base_loop,
                        const Mat& start, double tol) {
  if (base_loop.size() < 3) throw std::invalid_argument("holonomy: loop needs samples");

  std::vector<Mat> chart_points = base_loop;
  Mat deck = Mat::identity(G.model.field(), G.model.matrix_size());
  if (G.variant == GeometryVariant::Quotient) {
    for (int i = 0; i < G.model.m; ++i) {
      double d = base_loop.back().at(i, 0).w - base_loop.front().at(i, 0).w;
      if (std::abs(d - std::lround(d)) > tol)
        throw std::invalid_argument("holonomy: base loop does not close in the torus");
    }
    LiftResult lift = quotient_lift(G, base_loop);
    chart_points = lift.chart_points;
    deck = deck_matrix(G, lift.total_deck);
  } else {
    Mat gap = base_loop.back() - base_loop.front();
    if (gap.frobenius_norm() > tol)
      throw std::invalid_argument("holonomy: base loop does not close");
  }

  SampledPath gamma = lift_base_path(G, chart_points, start);
  Mat h = solve(deck * gamma.start(), gamma.end());
  if (!subgroup_member(G.model, h, Subgroup::P, 1e-6))
    throw std::domain_error("holonomy: fiber discrepancy not in H");
  Mat dev = develop_endpoint(G, gamma);
  return {dev * inverse(h), h};
}

DevelopingMapResult developing_map_check(const GeometryHandle& G, const SampledPath& route1,
                                         const SampledPath& route2, double tol) {
  if (!route1.start().equals(route2.start(), 1e-9))
    throw std::invalid_argument("developing_map: routes start at different points");
  if (!route1.end().equals(route2.end(), 1e-9))
    throw std::invalid_argument("developing_map: routes end at different points");
  Mat d1 = develop_endpoint(G, route1);
  Mat d2 = develop_endpoint(G, route2);
  DevelopingMapResult r;
  r.value = d1;
  r.discrepancy = (d1 - d2).frobenius_norm();
  r.path_dependent = r.discrepancy > tol;
  return r;
}

DevelopingMapResult developing_map(const GeometryHandle& G, const Mat& start, const Mat& pt,
                                   int n_intervals, double tol) {
  // align the grid with the detour segment boundaries so the piecewise
  // one-parameter route integrates exactly
  n_intervals = 3 * ((n_intervals + 2) / 3);
  Mat L = mat_log(solve(start, pt));

  // fixed detour direction, kept inside the model algebra
  Mat B0;
  if (G.model.parabolic()) {
    auto basis = grading_basis(G.model, -1);
    B0 = basis.back();
  } else {
    const int m = G.model.m;
    B0 = Mat::zeros(Field::Real, m + 1, m + 1);
    B0.at(m - 1, m) = Scalar::real(1);
  }
  Mat D = (0.3 * std::max(0.1, L.frobenius_norm())) * B0;

  Mat w = start * mat_exp(0.5 * L);
  Mat L2 = mat_log(mat_exp(-D) * mat_exp(0.5 * L));

  auto make_route = [&](std::function<Mat(double)> vf, std::function<Mat(double)> omega_G,
                        std::vector<double> bps) {
    return sample_path(vf,
                       [G, vf, omega_G](double t) {
                         Mat p = vf(t);
                         return omega_at(G, p, p * omega_G(t));
                       },
                       n_intervals, std::move(bps));
  };

  SampledPath route1 =
      make_route([&](double t) { return start * mat_exp(t * L); }, [&](double) { return L; }, {});
  SampledPath route2 = make_route(
      [&](double t) {
        if (t <= 1.0 / 3) return start * mat_exp(3 * t * 0.5 * L);
        if (t <= 2.0 / 3) return w * mat_exp((3 * t - 1) * D);
        return w * mat_exp(D) * mat_exp((3 * t - 2) * L2);
      },
      [&](double t) {
        if (t <= 1.0 / 3) return 1.5 * L;
        if (t <= 2.0 / 3) return 3.0 * D;
        return 3.0 * L2;
      },
      {1.0 / 3, 2.0 / 3});
  return developing_map_check(G, route1, route2, tol);
}

}  // namespace cartan
