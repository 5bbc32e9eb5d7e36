#pragma once

#include "cartan/path.hpp"

namespace cartan {

// Development of a bundle path: the model-group solution of
// gamma_G' = gamma_G omega(gamma') with gamma_G(0) = e, integrated by
// midpoint exponential steps on the stored derivative samples.
SampledPath develop(const GeometryHandle& G, const SampledPath& gamma);
Mat develop_endpoint(const GeometryHandle& G, const SampledPath& gamma);

// Endpoint of the development of gamma o tau. Requires generators on gamma;
// rejects non-monotone tau.
Mat develop_endpoint_reparam(const GeometryHandle& G, const SampledPath& gamma,
                             std::function<double(double)> tau,
                             std::function<double(double)> tau_prime, int n_intervals);

struct AntidevelopResult {
  SampledPath path;
  std::optional<double> escape_time;
  bool escaped() const { return escape_time.has_value(); }
};

// Path in the geometry through `start` whose development is gamma_model.
// Reports the escape time when the solution leaves an open restriction.
AntidevelopResult antidevelop(const GeometryHandle& G, const SampledPath& gamma_model,
                              const Mat& start);

// Solve omega(gamma') = f(t) from `start`; the integration core shared by
// development, antidevelopment and the continuity probe.
AntidevelopResult integrate_omega(const GeometryHandle& G, const Mat& start,
                                  const std::function<Mat(double)>& f, int n_intervals);

struct ContinuityProbeEntry {
  double sup_gap = 0.0;       // sup_t |f_k(t) - f_inf(t)|_g
  double distance = 0.0;      // d(solution_k, solution_inf)
  double ratio = 0.0;         // distance / sup_gap (0 when sup_gap = 0)
};

struct ContinuityProbeReport {
  std::vector<ContinuityProbeEntry> entries;
  double max_ratio = 0.0;
};

ContinuityProbeReport develop_continuity_probe(const GeometryHandle& G, const Mat& start,
                                               const std::vector<std::function<Mat(double)>>& fks,
                                               const std::function<Mat(double)>& finf,
                                               int n_intervals, const MetricG& metric = {});

// Certified lower bound for the antidevelopment radius at pt: minimum
// escape length over sampled omega-constant rays, shrunk by a 10% safety
// margin. +infinity for variants without a domain boundary.
double antidev_radius(const GeometryHandle& G, const Mat& pt, const MetricG& metric,
                      int n_directions, std::mt19937_64& rng, double length_cap = 64.0);

struct HolonomyResult {
  Mat element;        // gamma_G(1) h^{-1}
  Mat fiber_return;   // h
};

// Holonomy of a base loop given in chart coordinates, lifted through
// `start`. For quotient geometries the loop closes in the torus and the
// deck transformation found by unfolding enters the fiber comparison.
HolonomyResult holonomy(const GeometryHandle& G, const std::vector<Mat>& base_loop,
                        const Mat& start, double tol = 1e-10);

// Lift of a base chart path through `start` (section composed with the
// unfolded chart motion), with omega samples from midpoint chords.
SampledPath lift_base_path(const GeometryHandle& G, const std::vector<Mat>& chart_points,
                           const Mat& start);

struct DevelopingMapResult {
  Mat value;
  bool path_dependent = false;
  double discrepancy = 0.0;
};

// Value of the developing map at the endpoint of route1, cross-checked on
// route2 (both from the same start). A mismatch flags path dependence
// instead of returning a value.
DevelopingMapResult developing_map_check(const GeometryHandle& G, const SampledPath& route1,
                                         const SampledPath& route2, double tol = 1e-7);

// Automatic two-route query: one exp-chord route from start to pt and one
// detoured route with the same endpoint.
DevelopingMapResult developing_map(const GeometryHandle& G, const Mat& start, const Mat& pt,
                                   int n_intervals = 1000, double tol = 1e-7);

}  // namespace cartan
