#pragma once

#include <vector>

#include "cartan/scalar.hpp"

namespace cartan {

// Which center is quotiented by projective equivalence.
enum class Center { None, RealScale, ComplexScale, UnitPhase };

// Dense matrix over one scalar field; all entries share the field tag.
// Sizes in this library are tiny (n <= 6), so everything is plain O(n^3).
struct Mat {
  Field field = Field::Real;
  int rows = 0, cols = 0;
  std::vector<Scalar> a;

  Mat() = default;
  Mat(Field f, int r, int c) : field(f), rows(r), cols(c), a(r * c, Scalar::zero(f)) {}

  static Mat zeros(Field f, int r, int c) { return Mat(f, r, c); }
  static Mat identity(Field f, int n) {
    Mat m(f, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
  }

  Scalar& at(int i, int j) { return a[i * cols + j]; }
  const Scalar& at(int i, int j) const { return a[i * cols + j]; }

  bool is_square() const { return rows == cols; }
  bool same_shape(const Mat& b) const {
    return rows == b.rows && cols == b.cols && field == b.field;
  }

  Mat block(int r0, int c0, int r, int c) const;
  void set_block(int r0, int c0, const Mat& b);

  Mat dagger() const;  // conjugate transpose

  double frobenius_norm() const;
  double max_entry_norm() const;
  Scalar trace() const;

  Mat operator-() const;
  friend Mat operator+(const Mat& a, const Mat& b);
  friend Mat operator-(const Mat& a, const Mat& b);
  friend Mat operator*(const Mat& a, const Mat& b);
  friend Mat operator*(double s, const Mat& a);
  Mat& operator+=(const Mat& b) { return *this = *this + b; }
  Mat& operator-=(const Mat& b) { return *this = *this - b; }

  // Noncommutative scalar action: entries are multiplied by s on the given side.
  Mat scale_left(const Scalar& s) const;
  Mat scale_right(const Scalar& s) const;

  bool equals(const Mat& b, double tol) const;
  bool exactly_zero() const;
};

// Real inner product Re tr(A^dagger B); the default metric on algebra values.
double frobenius_inner(const Mat& a, const Mat& b);

// Solve A X = B by Gaussian elimination with partial pivoting. Row
// operations multiply from the left, which is the correct order over H.
Mat solve(const Mat& A, const Mat& B);
Mat inverse(const Mat& A);

// Matrix exponential. Nilpotent inputs (some power exactly zero) are summed
// exactly; otherwise scaling-and-squaring with a diagonal Pade approximant
// of the given degree.
Mat mat_exp(const Mat& X, int pade_degree = 6);

// Principal logarithm via inverse scaling (Denman-Beavers square roots)
// and the log(1+E) series. Intended for group elements; throws when the
// iteration fails to contract.
Mat mat_log(const Mat& g);

Mat mat_pow(const Mat& A, long k);  // k may be negative

// Canonical representative modulo the given center: the first significant
// entry in column-major order is scaled to 1 (ComplexScale), to a unit with
// positive leading component (RealScale), or to a positive real (UnitPhase).
Mat canon_center(const Mat& A, Center c);
bool proj_equiv(const Mat& A, const Mat& B, Center c, double tol = 1e-10);

// Column vectors modulo a right scalar (right module convention). The
// canonical form makes the first significant coordinate exactly 1.
Mat canon_column(const Mat& v);
bool column_equiv(const Mat& v, const Mat& w, double tol = 1e-10);

// 2n x 2n complex image of a quaternionic matrix, q = z + w j |-> [z w; -conj(w) conj(z)].
Mat complex_embedding(const Mat& A);

}  // namespace cartan
