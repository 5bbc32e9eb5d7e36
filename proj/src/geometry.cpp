#include "cartan/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace cartan {

namespace {

void require_translation_model(const ModelSpec& model, const char* what) {
  if (model.kind != ModelKind::Affine && model.kind != ModelKind::Euclid)
    throw std::invalid_argument(std::string(what) + ": affine or euclid model expected");
}

double bump_profile(double u) {
  if (u >= 1.0) return 0.0;
  return std::exp(1.0 - 1.0 / (1.0 - u));
}

}  // namespace

GeometryHandle GeometryHandle::torus_quotient(const ModelSpec& model) {
  require_translation_model(model, "torus_quotient");
  return {model, GeometryVariant::Quotient, {}, model.m, {}};
}

GeometryHandle GeometryHandle::perturbed(const ModelSpec& model, double eps, double radius) {
  require_translation_model(model, "perturbed");
  if (std::abs(eps) >= 0.9)
    throw std::invalid_argument("perturbed: eps too large, omega may degenerate");
  GeometryHandle G{model, GeometryVariant::Perturbed, {}, 0, {}};
  G.pert = {eps, radius};
  return G;
}

// translation-block projection of an algebra element of affine/euclid
static Mat translation_part(const ModelSpec& model, const Mat& V) {
  const int m = model.m;
  Mat T = Mat::zeros(Field::Real, m + 1, m + 1);
  T.set_block(0, m, V.block(0, m, m, 1));
  return T;
}

double perturbation_bump(const GeometryHandle& G, const Mat& pt) {
  Mat chart = base_chart(G, pt);
  double u = 0.0;
  for (const Scalar& e : chart.a) u += e.norm2();
  return bump_profile(u / (G.pert.radius * G.pert.radius));
}

Mat base_chart(const GeometryHandle& G, const Mat& pt) {
  return to_chart(act(pt, basepoint(G.model)));
}

Mat omega_at(const GeometryHandle& G, const Mat& pt, const Mat& velocity) {
  if (!G.in_domain(pt)) throw std::domain_error("omega_at: point outside domain");
  Mat V = solve(pt, velocity);
  if (G.variant != GeometryVariant::Perturbed) return V;
  double ef = G.pert.epsilon * perturbation_bump(G, pt);
  return V + ef * translation_part(G.model, V);
}

Mat omega_inv_algebra(const GeometryHandle& G, const Mat& pt, const Mat& X) {
  if (G.variant != GeometryVariant::Perturbed) return X;
  double ef = G.pert.epsilon * perturbation_bump(G, pt);
  Mat T = translation_part(G.model, X);
  return X - (ef / (1.0 + ef)) * T;
}

Mat omega_inv_at(const GeometryHandle& G, const Mat& pt, const Mat& X) {
  if (!G.in_domain(pt)) throw std::domain_error("omega_inv_at: point outside domain");
  return pt * omega_inv_algebra(G, pt, X);
}

FlowResult flow_const(const GeometryHandle& G, const Mat& pt, const Mat& Y, double t, int steps) {
  if (!G.in_domain(pt)) throw std::domain_error("flow_const: start outside domain");

  if (G.variant == GeometryVariant::Klein || G.variant == GeometryVariant::Quotient)
    return {pt * mat_exp(t * Y), std::nullopt};

  if (G.variant == GeometryVariant::Perturbed) {
    // f varies along the flow; midpoint exponential stepping
    Mat g = pt;
    double dt = t / steps;
    for (int k = 0; k < steps; ++k) {
      Mat half = g * mat_exp((0.5 * dt) * omega_inv_algebra(G, g, Y));
      g = g * mat_exp(dt * omega_inv_algebra(G, half, Y));
    }
    return {g, std::nullopt};
  }

  // open restriction: right translation with escape detection
  auto at = [&](double s) { return pt * mat_exp(s * Y); };
  double step = t / steps;
  double prev = 0.0;
  for (int k = 1; k <= steps; ++k) {
    double s = k * step;
    if (!G.domain(at(s))) {
      double lo = prev, hi = s;
      for (int it = 0; it < 60; ++it) {
        double mid = 0.5 * (lo + hi);
        (G.domain(at(mid)) ? lo : hi) = mid;
      }
      return {at(lo), lo};
    }
    prev = s;
  }
  return {at(t), std::nullopt};
}

Mat curvature_fd(const GeometryHandle& G, const Mat& pt, const Mat& X, const Mat& Y, double h) {
  if (h <= 0.0) throw std::invalid_argument("curvature_fd: h must be positive");
  auto step = [&](const Mat& p, const Mat& Z, double s) {
    FlowResult r = flow_const(G, p, Z, s, 8);
    if (r.escaped()) throw std::domain_error("curvature_fd: stencil flow escaped the domain");
    return r.endpoint;
  };
  Mat p = step(step(step(step(pt, X, h), Y, h), X, -h), Y, -h);
  Mat chord = (1.0 / (h * h)) * mat_log(solve(pt, p));
  Mat omega_comm = chord;
  if (G.variant == GeometryVariant::Perturbed) {
    double ef = G.pert.epsilon * perturbation_bump(G, pt);
    omega_comm = chord + ef * translation_part(G.model, chord);
  }
  Mat XY = X * Y - Y * X;
  return XY - omega_comm;
}

LiftResult quotient_lift(const GeometryHandle& G, const std::vector<Mat>& base_points) {
  if (G.variant != GeometryVariant::Quotient)
    throw std::invalid_argument("quotient_lift: quotient geometry expected");
  if (base_points.empty()) throw std::invalid_argument("quotient_lift: empty path");
  const int m = G.model.m;

  LiftResult out;
  out.total_deck.assign(m, 0);
  out.chart_points.push_back(base_points.front());
  std::vector<long> offset(m, 0);
  for (size_t k = 1; k < base_points.size(); ++k) {
    std::vector<long> jump(m, 0);
    bool crossed = false;
    for (int i = 0; i < m; ++i) {
      double d = base_points[k].at(i, 0).w - base_points[k - 1].at(i, 0).w;
      long n = std::lround(d);
      if (std::abs(d - n) >= 0.5 - 1e-12)
        throw std::domain_error("quotient_lift: samples move more than half a cell");
      if (n != 0) crossed = true;
      jump[i] = -n;  // unfold by removing the wrap
      offset[i] -= n;
      out.total_deck[i] -= n;
    }
    if (crossed) out.crossings.push_back({static_cast<int>(k - 1), jump});
    Mat lifted = base_points[k];
    for (int i = 0; i < m; ++i) lifted.at(i, 0).w += offset[i];
    out.chart_points.push_back(lifted);
  }
  return out;
}

Mat deck_matrix(const GeometryHandle& G, const std::vector<long>& n) {
  require_translation_model(G.model, "deck_matrix");
  const int m = G.model.m;
  Mat g = Mat::identity(Field::Real, m + 1);
  for (int i = 0; i < m; ++i) g.at(i, m) = Scalar::real(static_cast<double>(n[i]));
  return g;
}

Mat fundamental_rep(const GeometryHandle& G, const Mat& pt) {
  require_translation_model(G.model, "fundamental_rep");
  const int m = G.model.m;
  Mat g = pt;
  for (int i = 0; i < m; ++i) {
    double x = g.at(i, m).w;
    g.at(i, m).w = x - std::floor(x);
  }
  return g;
}

}  // namespace cartan
