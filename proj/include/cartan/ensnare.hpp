#pragma once

#include <string>

#include "cartan/path.hpp"

namespace cartan {

// Analytic description of the fixed set of the isotropy in G/P, with the
// real codimension of the defining conditions.
enum class FixedSetKind {
  BetaKernel,       // beta(x) = 0               (cproj, quat)
  CZero,            // c = 0                     (cr with beta = 0, s != 0)
  BetaKernelCZero,  // beta(x) = 0 and c = 0     (cr with beta != 0)
};

struct FixedSetDescriptor {
  FixedSetKind kind = FixedSetKind::BetaKernel;
  int codimension = 0;
};

// One verification case: a model, an isotropy a in P_+, and the data of the
// access path zeta_U into U = (G/P) \ Fix(a).
struct EnsnareCase {
  ModelSpec model;
  IsotropyElement a;
  Mat y;  // access direction (cproj/quat); ignored for cr
  FixedSetDescriptor fixed_set;

  // Validates beta(y) real and positive for the projective models (whenever
  // the isotropy is nontrivial).
  static EnsnareCase make(const ModelSpec& model, const Mat& beta, double s = 0.0,
                          const Mat& y = Mat());
  double beta_of_y() const;
};

struct DecaySeries {
  std::vector<double> ks;
  std::vector<double> values;
  double fitted_exponent = 0.0;  // log-log least squares over the last half
  int monotone_from = -1;        // first index past which values strictly decrease

  void finalize();
  double final_value() const { return values.empty() ? 0.0 : values.back(); }
};

double fit_power_law(const std::vector<double>& ks, const std::vector<double>& values);
std::vector<double> decay_k_grid(int k_max);

// Closed-form orbit a^k(pt); k need not be an integer. Throws when the
// image of the coordinate vector degenerates.
HomogeneousPoint orbit(const EnsnareCase& c, const HomogeneousPoint& pt, double k);

// Chart coordinates (as packed reals) of the orbit of a chart point;
// throws when the orbit leaves the chart (denominator vanishes).
std::vector<double> orbit_chart_reals(const EnsnareCase& c, const std::vector<double>& x, double k);

bool fixed_set_contains(const EnsnareCase& c, const HomogeneousPoint& pt, double tol = 1e-9);
HomogeneousPoint sample_fixed_point(const EnsnareCase& c, std::mt19937_64& rng);
HomogeneousPoint sample_moving_point(const EnsnareCase& c, std::mt19937_64& rng);

// zeta_U as homogeneous-coordinate value/velocity functions. Rejects cr
// isotropies that are null or trivial.
struct BasePathFn {
  std::function<Mat(double)> value;
  std::function<Mat(double)> velocity;
};
BasePathFn zeta_generator(const EnsnareCase& c);
// Sampled zeta_U: values and velocities are homogeneous coordinate columns.
SampledPath zeta_path(const EnsnareCase& c, int n_intervals);

double tau_k(const EnsnareCase& c, double k, double t);

// C1 chart distance of a^k (zeta_U o tau_k) to the constant path at q(e),
// per k in the decay grid.
DecaySeries shrink_check(const EnsnareCase& c, int k_max, int n_samples = 200);

// Compact chart ball, sampled on a uniform grid (masked to the open ball,
// at most max_samples points).
struct ChartBall {
  std::vector<double> center;
  double radius = 1.0;
  int per_axis = 0;  // 0: 11 per axis, reduced to keep under max_samples
  int max_samples = 10000;
};

std::vector<std::vector<double>> chart_ball_grid(const EnsnareCase& c, const ChartBall& ball);

// Operator norm of the chart Jacobian of a^k at x, by central differences.
double jacobian_norm_fd(const EnsnareCase& c, double k, const std::vector<double>& x,
                        double fd_step = 1e-5);
// Analytic directional derivative of the chart map of a^k (cproj only);
// the oracle for the finite-difference route.
Mat cproj_jacobian_analytic(const EnsnareCase& c, double k, const Mat& chart, const Mat& dir);

// sup over the ball grid of the Jacobian operator norm, per k. Rejects
// grids that touch the fixed set.
DecaySeries jacobian_decay(const EnsnareCase& c, const ChartBall& ball, int k_max,
                           double fd_step = 1e-5);

struct ContractionWitness {
  enum class Kind { Diverged, Constant, Inconclusive } kind = Kind::Inconclusive;
  long witness_k = 0;   // index where divergence was flagged
  double ratio = 0.0;   // distance growth relative to the initial distance
};

ContractionWitness conjugation_orbit_witness(const EnsnareCase& c, const Mat& g, long k_budget = 1000,
                                             double ratio_threshold = 1e3);

struct ContractionVerdict {
  bool unipotent_exact = false;
  int diverged = 0, constant = 0, inconclusive = 0;
  bool conclusive() const { return unipotent_exact && inconclusive == 0; }
};

ContractionVerdict contraction_hypothesis(const EnsnareCase& c, int n_samples,
                                          std::mt19937_64& rng, long k_budget = 1000);

struct EnsnareCheck {
  std::string name;
  bool pass = false;
  double measured = 0.0;
  double threshold = 0.0;
};

struct EnsnareTolerances {
  double fixed_exact = 1e-10;
  double complement_moves = 1e-6;
  double shrink_final = 1e-3;
  double jacobian_final = 1e-3;
  double min_decay_exponent = -0.8;  // at least first-order decay in k
  int k_max = 1000;
  int n_fixed_samples = 32;
  int n_complement_samples = 1000;
  int n_contraction_samples = 100;
  ChartBall ball;  // empty center: a default ball is placed per model
};

struct EnsnareVerdict {
  bool pass = false;
  std::string reason;
  int fixed_codimension = 0;
  std::vector<EnsnareCheck> checks;
  DecaySeries shrink, jacobian, orbit_decay;
};

EnsnareVerdict ensnare_verdict(const EnsnareCase& c, const EnsnareTolerances& tols,
                               std::mt19937_64& rng);

// Default chart ball at chart distance 1 from the fixed set, radius 1.
ChartBall default_chart_ball(const EnsnareCase& c);

}  // namespace cartan
