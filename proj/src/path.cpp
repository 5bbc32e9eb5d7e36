#include "cartan/path.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cartan {

namespace {

std::vector<double> uniform_grid(int n) {
  std::vector<double> g(n + 1);
  for (int k = 0; k <= n; ++k) g[k] = static_cast<double>(k) / n;
  return g;
}

bool near_breakpoint(const SampledPath& p, double t, double dt) {
  for (double b : p.breakpoints)
    if (std::abs(t - b) <= dt) return true;
  return false;
}

}  // namespace

SampledPath sample_path(std::function<Mat(double)> value_fn, std::function<Mat(double)> omega_fn,
                        int n_intervals, std::vector<double> breakpoints) {
  if (n_intervals < 1) throw std::invalid_argument("sample_path: need at least one interval");
  SampledPath p;
  p.grid = uniform_grid(n_intervals);
  p.values.reserve(n_intervals + 1);
  p.omega.reserve(n_intervals);
  for (int k = 0; k <= n_intervals; ++k) p.values.push_back(value_fn(p.grid[k]));
  for (int k = 0; k < n_intervals; ++k) p.omega.push_back(omega_fn((k + 0.5) / n_intervals));
  p.breakpoints = std::move(breakpoints);
  p.value_fn = std::move(value_fn);
  p.omega_fn = std::move(omega_fn);
  return p;
}

SampledPath exp_path(const Mat& g0, const Mat& X, int n_intervals) {
  return sample_path([g0, X](double t) { return g0 * mat_exp(t * X); },
                     [X](double) { return X; }, n_intervals);
}

SampledPath resample(const SampledPath& p, int n_intervals) {
  if (!p.has_generator()) throw std::invalid_argument("resample: path has no generator");
  return sample_path(p.value_fn, p.omega_fn, n_intervals, p.breakpoints);
}

SampledPath reparametrize(const SampledPath& p, std::function<double(double)> tau,
                          std::function<double(double)> tau_prime, int n_intervals) {
  if (!p.has_generator()) throw std::invalid_argument("reparametrize: path has no generator");
  if (std::abs(tau(0.0)) > 1e-12 || std::abs(tau(1.0) - 1.0) > 1e-12)
    throw std::invalid_argument("reparametrize: tau must fix the endpoints");
  for (int k = 0; k < 64; ++k)
    if (tau_prime((k + 0.5) / 64.0) <= 0.0)
      throw std::invalid_argument("reparametrize: tau must be orientation-preserving");

  auto vf = p.value_fn, of = p.omega_fn;
  std::vector<double> bps;
  // breakpoints move by the inverse reparametrization; locate by bisection
  for (double b : p.breakpoints) {
    double lo = 0.0, hi = 1.0;
    for (int it = 0; it < 60; ++it) {
      double mid = 0.5 * (lo + hi);
      (tau(mid) < b ? lo : hi) = mid;
    }
    bps.push_back(0.5 * (lo + hi));
  }
  return sample_path([vf, tau](double t) { return vf(tau(t)); },
                     [of, tau, tau_prime](double t) { return tau_prime(t) * of(tau(t)); },
                     n_intervals, std::move(bps));
}

SampledPath concat(const SampledPath& a, const SampledPath& b, double tol) {
  if (!a.end().equals(b.start(), tol)) throw std::invalid_argument("concat: endpoint mismatch");

  SampledPath p;
  const int na = a.intervals(), nb = b.intervals();
  p.grid.reserve(na + nb + 1);
  for (int k = 0; k <= na; ++k) p.grid.push_back(0.5 * a.grid[k]);
  for (int k = 1; k <= nb; ++k) p.grid.push_back(0.5 + 0.5 * b.grid[k]);
  p.values = a.values;
  p.values.insert(p.values.end(), b.values.begin() + 1, b.values.end());
  p.omega.reserve(na + nb);
  for (const Mat& w : a.omega) p.omega.push_back(2.0 * w);
  for (const Mat& w : b.omega) p.omega.push_back(2.0 * w);
  for (double bp : a.breakpoints) p.breakpoints.push_back(0.5 * bp);
  p.breakpoints.push_back(0.5);
  for (double bp : b.breakpoints) p.breakpoints.push_back(0.5 + 0.5 * bp);

  if (a.has_generator() && b.has_generator()) {
    auto av = a.value_fn, bv = b.value_fn, ao = a.omega_fn, bo = b.omega_fn;
    p.value_fn = [av, bv](double t) { return t <= 0.5 ? av(2 * t) : bv(2 * t - 1); };
    p.omega_fn = [ao, bo](double t) {
      return t <= 0.5 ? 2.0 * ao(2 * t) : 2.0 * bo(2 * t - 1);
    };
  }
  return p;
}

SampledPath reverse(const SampledPath& p) {
  SampledPath r;
  const int n = p.intervals();
  r.grid = p.grid;  // uniform grids are symmetric
  r.values.assign(p.values.rbegin(), p.values.rend());
  for (int k = n - 1; k >= 0; --k) r.omega.push_back(-p.omega[k]);
  for (double b : p.breakpoints) r.breakpoints.push_back(1.0 - b);
  std::sort(r.breakpoints.begin(), r.breakpoints.end());
  if (p.has_generator()) {
    auto vf = p.value_fn, of = p.omega_fn;
    r.value_fn = [vf](double t) { return vf(1.0 - t); };
    r.omega_fn = [of](double t) { return -of(1.0 - t); };
  }
  return r;
}

SampledPath right_translate(const SampledPath& p, const Mat& h) {
  SampledPath r = p;
  Mat hinv = inverse(h);
  for (Mat& v : r.values) v = v * h;
  for (Mat& w : r.omega) w = hinv * w * h;
  if (p.has_generator()) {
    auto vf = p.value_fn, of = p.omega_fn;
    r.value_fn = [vf, h](double t) { return vf(t) * h; };
    r.omega_fn = [of, hinv, h](double t) { return hinv * of(t) * h; };
  }
  return r;
}

SampledPath left_translate(const SampledPath& p, const Mat& g0) {
  SampledPath r = p;
  for (Mat& v : r.values) v = g0 * v;
  if (p.has_generator()) {
    auto vf = p.value_fn;
    r.value_fn = [vf, g0](double t) { return g0 * vf(t); };
    r.omega_fn = p.omega_fn;
  }
  return r;
}

double path_length(const SampledPath& p, const MetricG& metric) {
  double len = 0.0;
  for (int k = 0; k < p.intervals(); ++k)
    len += metric.norm(p.omega[k]) * (p.grid[k + 1] - p.grid[k]);
  return len;
}

PathMetricValue path_distance(const GeometryHandle& G, const SampledPath& a, const SampledPath& b,
                              const MetricG& metric) {
  const SampledPath *pa = &a, *pb = &b;
  SampledPath ra, rb;
  if (a.grid.size() != b.grid.size()) {
    int n = std::max(a.intervals(), b.intervals());
    if (!a.has_generator() || !b.has_generator())
      throw std::invalid_argument("path_distance: incompatible grids and no generators");
    ra = resample(a, n);
    rb = resample(b, n);
    pa = &ra;
    pb = &rb;
  }
  for (size_t k = 0; k < pa->grid.size(); ++k)
    if (std::abs(pa->grid[k] - pb->grid[k]) > 1e-12)
      throw std::invalid_argument("path_distance: grids do not match");

  PathMetricValue d;
  for (size_t k = 0; k < pa->values.size(); ++k) {
    Mat chord = mat_log(solve(pa->values[k], pb->values[k]));
    Mat w = omega_at(G, pa->values[k], pa->values[k] * chord);
    d.point_term = std::max(d.point_term, metric.norm(w));
  }
  const int n = pa->intervals();
  double dt = 1.0 / n;
  for (int k = 0; k < n; ++k) {
    double mid = (pa->grid[k] + pa->grid[k + 1]) / 2.0;
    if (near_breakpoint(*pa, mid, dt) || near_breakpoint(*pb, mid, dt)) continue;
    d.derivative_term = std::max(d.derivative_term, metric.norm(pa->omega[k] - pb->omega[k]));
  }
  return d;
}

double derivative_consistency(const GeometryHandle& G, const SampledPath& p) {
  double worst = 0.0;
  const int n = p.intervals();
  for (int k = 0; k < n; ++k) {
    double dt = p.grid[k + 1] - p.grid[k];
    double mid = (p.grid[k] + p.grid[k + 1]) / 2.0;
    if (near_breakpoint(p, mid, dt)) continue;
    Mat chord = mat_log(solve(p.values[k], p.values[k + 1]));
    Mat w = omega_at(G, p.values[k], p.values[k] * chord);
    worst = std::max(worst, (w - dt * p.omega[k]).frobenius_norm() / dt);
  }
  return worst;
}

}  // namespace cartan
