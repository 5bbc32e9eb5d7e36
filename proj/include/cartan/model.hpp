#pragma once

#include <map>
#include <random>
#include <vector>

#include "cartan/mat.hpp"

namespace cartan {

enum class ModelKind { CProj, Quat, CR, Affine, Euclid };

// A model geometry (G, P) in block-matrix form. CProj(m) and Quat(m) are the
// projective models on (m+1)x(m+1) matrices over C and H; CR(p,q) is the unitary
// model of the Hermitian form h_{p,q} on C^{p+q+2}; Affine(m) and Euclid(m) are
// the ungraded models R^m x GL_m(R) and R^m x O(m) on (m+1)x(m+1) real matrices.
struct ModelSpec {
  ModelKind kind = ModelKind::CProj;
  int m = 1;  // cproj/quat/affine/euclid
  int p = 1, q = 0;  // cr signature

  static ModelSpec cproj(int m) { return {ModelKind::CProj, m, 0, 0}; }
  static ModelSpec quat(int m) { return {ModelKind::Quat, m, 0, 0}; }
  static ModelSpec cr(int p, int q) { return {ModelKind::CR, 0, p, q}; }
  static ModelSpec affine(int m) { return {ModelKind::Affine, m, 0, 0}; }
  static ModelSpec euclid(int m) { return {ModelKind::Euclid, m, 0, 0}; }

  int matrix_size() const {
    return kind == ModelKind::CR ? p + q + 2 : m + 1;
  }
  Field field() const {
    switch (kind) {
      case ModelKind::CProj:
      case ModelKind::CR: return Field::Complex;
      case ModelKind::Quat: return Field::Quaternion;
      default: return Field::Real;
    }
  }
  Center center() const {
    switch (kind) {
      case ModelKind::CProj: return Center::ComplexScale;
      case ModelKind::Quat: return Center::RealScale;
      case ModelKind::CR: return Center::UnitPhase;
      default: return Center::None;
    }
  }
  bool parabolic() const {
    return kind == ModelKind::CProj || kind == ModelKind::Quat || kind == ModelKind::CR;
  }
  int depth() const { return kind == ModelKind::CR ? 2 : (parabolic() ? 1 : 0); }
  std::vector<int> grades() const;
  int grade_real_dim(int i) const;

  // cr helpers: signature diag(+1 x p, -1 x q) and the Gram matrix of h_{p,q}
  double signature(int l) const { return l < p ? 1.0 : -1.0; }
  Mat gram_matrix() const;

  bool operator==(const ModelSpec& o) const {
    return kind == o.kind && m == o.m && p == o.p && q == o.q;
  }
  const char* name() const;
};

struct AlgebraElement {
  ModelSpec model;
  Mat matrix;
};

// Point of G/P in homogeneous coordinates, considered up to a right scalar.
struct HomogeneousPoint {
  ModelSpec model;
  Mat coords;  // n x 1 over the model field
};

// Element of P_+ built from the covector beta (and s for cr), together with
// its closed-form powers a^k.
struct IsotropyElement {
  ModelSpec model;
  Mat beta;  // 1 x m (cproj/quat) or 1 x (p+q) (cr)
  double s = 0.0;  // cr only

  static IsotropyElement make(const ModelSpec& model, const Mat& beta, double s = 0.0);

  Mat matrix() const { return matrix_power(1.0); }
  Mat matrix_power(double k) const;
  // beta I_{p,q} conj(beta)^T for cr; |beta|^2 otherwise. Real by construction.
  double beta_pairing() const;
  bool is_trivial(double tol = 1e-14) const;
  bool non_null(double tol = 1e-12) const;
};

enum class Subgroup { GMinus, GZero, PPlus, P };

// --- algebra operations ------------------------------------------------

// Canonical representative of an algebra element modulo the model center.
Mat center_reduce(const ModelSpec& model, const Mat& X);
bool algebra_equiv(const ModelSpec& model, const Mat& X, const Mat& Y, double tol = 1e-10);

AlgebraElement bracket(const AlgebraElement& X, const AlgebraElement& Y);

// Residual of the defining relations of the model algebra (cr only; the
// projective models fill all of gl). Invariant under center shifts.
double algebra_membership_residual(const ModelSpec& model, const Mat& X);

// Block-pattern projection onto the grading component of degree i.
Mat grade_project(const ModelSpec& model, const Mat& X, int i);
// All components, keyed by degree; throws if X violates the defining
// relations beyond tol.
std::map<int, Mat> grade_split(const ModelSpec& model, const Mat& X, double tol = 1e-9);

// Real basis of the grading component of degree i.
std::vector<Mat> grading_basis(const ModelSpec& model, int i);

bool subgroup_member(const ModelSpec& model, const Mat& g, Subgroup which, double tol = 1e-10);

AlgebraElement adjoint(const ModelSpec& model, const Mat& g, const AlgebraElement& X);

// --- homogeneous space -------------------------------------------------

HomogeneousPoint basepoint(const ModelSpec& model);  // q(e)
HomogeneousPoint make_point(const ModelSpec& model, const Mat& coords);
HomogeneousPoint act(const Mat& g, const HomogeneousPoint& pt);
bool point_equiv(const HomogeneousPoint& a, const HomogeneousPoint& b, double tol = 1e-10);

// Value of the h_{p,q} quadratic form on a coordinate vector (cr only).
double null_form_value(const ModelSpec& model, const Mat& coords);

// Chart at q(e): first coordinate normalized to 1. For cr the chart column
// holds (x, Im c) with the real part of c recovered from the null relation;
// for affine/euclid the chart is the translation part. Throws when the
// normalizing coordinate vanishes.
Mat to_chart(const HomogeneousPoint& pt);
HomogeneousPoint from_chart(const ModelSpec& model, const Mat& chart);
// Section of the chart into the group (G_- for parabolic models, pure
// translations for affine/euclid): q_P(section(chart)) = from_chart(chart).
Mat gminus_section(const ModelSpec& model, const Mat& chart);
int chart_real_dim(const ModelSpec& model);
std::vector<double> chart_to_reals(const ModelSpec& model, const Mat& chart);
Mat chart_from_reals(const ModelSpec& model, const std::vector<double>& v);

// --- seeded sampling ---------------------------------------------------

Scalar random_scalar(Field f, std::mt19937_64& rng, double scale = 1.0);
Mat random_mat(Field f, int r, int c, std::mt19937_64& rng, double scale = 1.0);
// Random element of the grading component of degree i.
Mat random_grade_element(const ModelSpec& model, int i, std::mt19937_64& rng, double scale = 1.0);
// Random element of the full model algebra.
Mat random_algebra_element(const ModelSpec& model, std::mt19937_64& rng, double scale = 1.0);
// exp of a random grade-0 element: a sample of G_0.
Mat random_g0_element(const ModelSpec& model, std::mt19937_64& rng, double scale = 0.5);

}  // namespace cartan
