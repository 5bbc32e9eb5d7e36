#pragma once

#include <functional>
#include <vector>

#include "cartan/geometry.hpp"

namespace cartan {

// Piecewise-smooth path on a uniform grid: values at the nodes and omega
// derivative samples at the interval midpoints. When the generating
// functions are attached, the path can be resampled and reparametrized
// exactly; purely sampled paths cannot.
struct SampledPath {
  std::vector<double> grid;        // t_0 = 0 < ... < t_N = 1
  std::vector<Mat> values;         // N + 1 nodes
  std::vector<Mat> omega;          // N midpoint omega values
  std::vector<double> breakpoints;

  std::function<Mat(double)> value_fn;  // optional generators
  std::function<Mat(double)> omega_fn;

  int intervals() const { return static_cast<int>(omega.size()); }
  const Mat& start() const { return values.front(); }
  const Mat& end() const { return values.back(); }
  bool has_generator() const { return static_cast<bool>(value_fn) && static_cast<bool>(omega_fn); }
};

// Sample a path from its value and omega-derivative functions.
SampledPath sample_path(std::function<Mat(double)> value_fn, std::function<Mat(double)> omega_fn,
                        int n_intervals, std::vector<double> breakpoints = {});

// One-parameter family g0 * exp(tau(t) X) with derivative tau'(t) X.
SampledPath exp_path(const Mat& g0, const Mat& X, int n_intervals);

SampledPath resample(const SampledPath& p, int n_intervals);

// Orientation-preserving reparametrization; tau(0)=0, tau(1)=1, tau' > 0.
SampledPath reparametrize(const SampledPath& p, std::function<double(double)> tau,
                          std::function<double(double)> tau_prime, int n_intervals);

// Half-speed concatenation with the breakpoint recorded at 1/2.
SampledPath concat(const SampledPath& a, const SampledPath& b, double tol = 1e-10);

SampledPath reverse(const SampledPath& p);

// Constant right translation: values g h, omega Ad_{h^{-1}} omega.
SampledPath right_translate(const SampledPath& p, const Mat& h);
// Constant left translation: values g0 g, omega unchanged.
SampledPath left_translate(const SampledPath& p, const Mat& g0);

// Midpoint-rule length of the path in the omega-constant metric.
double path_length(const SampledPath& p, const MetricG& metric = {});

struct PathMetricValue {
  double point_term = 0.0;
  double derivative_term = 0.0;
  double total() const { return point_term + derivative_term; }
};

// First-order compact-open distance: sup of pointwise distances (chord
// length along connecting flows) plus sup of omega-derivative gaps, the
// latter skipping intervals adjacent to breakpoints of either path.
PathMetricValue path_distance(const GeometryHandle& G, const SampledPath& a, const SampledPath& b,
                              const MetricG& metric = {});

// Midpoint consistency of derivative samples against value differences:
// max over interior smooth intervals of |log(g_k^{-1} g_{k+1}) - dt omega_k| / dt.
double derivative_consistency(const GeometryHandle& G, const SampledPath& p);

}  // namespace cartan
