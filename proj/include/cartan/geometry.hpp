#pragma once

#include <functional>
#include <optional>

#include "cartan/model.hpp"

namespace cartan {

enum class GeometryVariant { Klein, OpenRestriction, Quotient, Perturbed };

// Inner product on the algebra; pulls back to an omega-constant metric on
// the bundle. Frobenius by default.
struct MetricG {
  std::function<double(const Mat&, const Mat&)> inner = frobenius_inner;
  double norm(const Mat& X) const { return std::sqrt(inner(X, X)); }
};

// omega = omega_G + eps * f(base) * T(omega_G), where T projects onto the
// translation block and f is a compactly supported bump in the base chart.
// T commutes with Ad_H and kills the stabilizer algebra, so the perturbed
// form is again a Cartan geometry, with curvature eps * df ^ (translation
// part of omega_G). Only defined over the affine/euclid models.
struct PerturbationField {
  double epsilon = 0.0;
  double radius = 2.0;  // bump support radius in the base chart
};

// A Cartan geometry backed by group-valued bundle charts. Bundle points are
// model-group matrices; for the quotient variant they are representatives of
// left cosets under the integer translation lattice.
struct GeometryHandle {
  ModelSpec model;
  GeometryVariant variant = GeometryVariant::Klein;
  std::function<bool(const Mat&)> domain;  // OpenRestriction only
  int lattice_rank = 0;                    // Quotient only
  PerturbationField pert;                  // Perturbed only

  static GeometryHandle klein(const ModelSpec& model) { return {model, GeometryVariant::Klein, {}, 0, {}}; }
  static GeometryHandle open_restriction(const ModelSpec& model, std::function<bool(const Mat&)> dom) {
    return {model, GeometryVariant::OpenRestriction, std::move(dom), 0, {}};
  }
  // Left quotient by integer translations of an affine or euclidean model.
  static GeometryHandle torus_quotient(const ModelSpec& model);
  static GeometryHandle perturbed(const ModelSpec& model, double eps, double radius = 2.0);

  bool in_domain(const Mat& g) const {
    return variant != GeometryVariant::OpenRestriction || domain(g);
  }
  Mat identity_point() const { return Mat::identity(model.field(), model.matrix_size()); }
};

struct TangentSample {
  Mat point;
  Mat omega_value;
};

// Bump profile used by the perturbed variant: f = phi(|chart|^2 / radius^2),
// phi(u) = exp(1 - 1/(1-u)) on [0,1), 0 beyond.
double perturbation_bump(const GeometryHandle& G, const Mat& pt);

// Chart of the base point under a bundle element (translation part for
// affine/euclid, the q(e)-chart for parabolic models).
Mat base_chart(const GeometryHandle& G, const Mat& pt);

// omega of an ambient curve velocity at pt.
Mat omega_at(const GeometryHandle& G, const Mat& pt, const Mat& velocity);
// Ambient velocity with omega(v) = X.
Mat omega_inv_at(const GeometryHandle& G, const Mat& pt, const Mat& X);
// Algebra value V = omega_G(xi) such that omega(xi) = X at pt; flows step by
// pt * exp(dt V). Equals X except on the perturbed variant.
Mat omega_inv_algebra(const GeometryHandle& G, const Mat& pt, const Mat& X);

struct FlowResult {
  Mat endpoint;
  std::optional<double> escape_time;
  bool escaped() const { return escape_time.has_value(); }
};

// Endpoint of the integral curve of the omega-constant field omega^{-1}(Y)
// from pt over [0, t]. Exact right translation except on the perturbed
// variant, which integrates with midpoint exponential steps.
FlowResult flow_const(const GeometryHandle& G, const Mat& pt, const Mat& Y, double t,
                      int steps = 64);

// Finite-difference curvature Omega(omega^{-1}X, omega^{-1}Y) at pt via the
// commutator of flows; first order in h. Throws if a stencil flow escapes.
Mat curvature_fd(const GeometryHandle& G, const Mat& pt, const Mat& X, const Mat& Y, double h);

struct CrossingEvent {
  int interval = 0;            // grid interval where the crossing happened
  std::vector<long> jump;      // deck translation applied there
};

struct LiftResult {
  std::vector<Mat> chart_points;     // continuous unfolded chart coordinates
  std::vector<CrossingEvent> crossings;
  std::vector<long> total_deck;      // accumulated translation
};

// Continuous unfolding of a base path given in fundamental-domain chart
// coordinates; consecutive samples must move less than half a lattice cell.
LiftResult quotient_lift(const GeometryHandle& G, const std::vector<Mat>& base_points);

// Group element of the deck translation by an integer vector.
Mat deck_matrix(const GeometryHandle& G, const std::vector<long>& n);

// Representative with translation part reduced to the half-open unit cube.
Mat fundamental_rep(const GeometryHandle& G, const Mat& pt);

}  // namespace cartan
