#include "cartan/mat.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cartan {

namespace {

void check_shapes(const Mat& a, const Mat& b) {
  if (!a.same_shape(b)) throw std::invalid_argument("matrix shape/field mismatch");
}

// Entries below this fraction of the largest entry are treated as zero when
// picking the leading entry of a projective representative.
constexpr double kLeadingFrac = 1e-8;

int leading_index(const std::vector<Scalar>& entries, double ref) {
  for (size_t k = 0; k < entries.size(); ++k)
    if (entries[k].norm() > kLeadingFrac * ref) return static_cast<int>(k);
  return -1;
}

}  // namespace

Mat Mat::block(int r0, int c0, int r, int c) const {
  Mat b(field, r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) b.at(i, j) = at(r0 + i, c0 + j);
  return b;
}

void Mat::set_block(int r0, int c0, const Mat& b) {
  for (int i = 0; i < b.rows; ++i)
    for (int j = 0; j < b.cols; ++j) at(r0 + i, c0 + j) = b.at(i, j);
}

Mat Mat::dagger() const {
  Mat t(field, cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j).conj();
  return t;
}

double Mat::frobenius_norm() const {
  double s = 0.0;
  for (const auto& e : a) s += e.norm2();
  return std::sqrt(s);
}

double Mat::max_entry_norm() const {
  double m = 0.0;
  for (const auto& e : a) m = std::max(m, e.norm());
  return m;
}

Scalar Mat::trace() const {
  if (!is_square()) throw std::invalid_argument("trace of non-square matrix");
  Scalar t = Scalar::zero(field);
  for (int i = 0; i < rows; ++i) t += at(i, i);
  return t;
}

Mat Mat::operator-() const {
  Mat r = *this;
  for (auto& e : r.a) e = -e;
  return r;
}

Mat operator+(const Mat& a, const Mat& b) {
  check_shapes(a, b);
  Mat r = a;
  for (size_t k = 0; k < r.a.size(); ++k) r.a[k] += b.a[k];
  return r;
}

Mat operator-(const Mat& a, const Mat& b) {
  check_shapes(a, b);
  Mat r = a;
  for (size_t k = 0; k < r.a.size(); ++k) r.a[k] -= b.a[k];
  return r;
}

Mat operator*(const Mat& a, const Mat& b) {
  if (a.cols != b.rows || a.field != b.field)
    throw std::invalid_argument("matrix product shape/field mismatch");
  Mat r(a.field, a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      const Scalar& aik = a.at(i, k);
      if (aik.w == 0.0 && aik.x == 0.0 && aik.y == 0.0 && aik.z == 0.0) continue;
      for (int j = 0; j < b.cols; ++j) r.at(i, j) += aik * b.at(k, j);
    }
  return r;
}

Mat operator*(double s, const Mat& a) {
  Mat r = a;
  for (auto& e : r.a) e = s * e;
  return r;
}

Mat Mat::scale_left(const Scalar& s) const {
  Mat r = *this;
  for (auto& e : r.a) e = s * e;
  return r;
}

Mat Mat::scale_right(const Scalar& s) const {
  Mat r = *this;
  for (auto& e : r.a) e = e * s;
  return r;
}

bool Mat::equals(const Mat& b, double tol) const {
  if (!same_shape(b)) return false;
  return (*this - b).frobenius_norm() <= tol;
}

bool Mat::exactly_zero() const {
  for (const auto& e : a)
    if (e.w != 0.0 || e.x != 0.0 || e.y != 0.0 || e.z != 0.0) return false;
  return true;
}

double frobenius_inner(const Mat& a, const Mat& b) {
  check_shapes(a, b);
  double s = 0.0;
  for (size_t k = 0; k < a.a.size(); ++k) {
    const Scalar &p = a.a[k], &q = b.a[k];
    s += p.w * q.w + p.x * q.x + p.y * q.y + p.z * q.z;
  }
  return s;
}

Mat solve(const Mat& A, const Mat& B) {
  if (!A.is_square() || A.rows != B.rows || A.field != B.field)
    throw std::invalid_argument("solve: shape/field mismatch");
  const int n = A.rows, m = B.cols;
  Mat U = A, X = B;
  for (int j = 0; j < n; ++j) {
    int piv = j;
    double best = U.at(j, j).norm();
    for (int r = j + 1; r < n; ++r)
      if (U.at(r, j).norm() > best) {
        best = U.at(r, j).norm();
        piv = r;
      }
    if (best < 1e-14 * (1.0 + U.max_entry_norm()))
      throw std::domain_error("solve: singular matrix");
    if (piv != j) {
      for (int c = 0; c < n; ++c) std::swap(U.at(j, c), U.at(piv, c));
      for (int c = 0; c < m; ++c) std::swap(X.at(j, c), X.at(piv, c));
    }
    Scalar inv_pivot = U.at(j, j).inverse();
    for (int r = j + 1; r < n; ++r) {
      Scalar f = U.at(r, j) * inv_pivot;
      if (f.norm() == 0.0) continue;
      for (int c = j; c < n; ++c) U.at(r, c) -= f * U.at(j, c);
      for (int c = 0; c < m; ++c) X.at(r, c) -= f * X.at(j, c);
    }
  }
  for (int j = n - 1; j >= 0; --j) {
    Scalar inv_pivot = U.at(j, j).inverse();
    for (int c = 0; c < m; ++c) {
      Scalar s = X.at(j, c);
      for (int k = j + 1; k < n; ++k) s -= U.at(j, k) * X.at(k, c);
      X.at(j, c) = inv_pivot * s;
    }
  }
  return X;
}

Mat inverse(const Mat& A) { return solve(A, Mat::identity(A.field, A.rows)); }

Mat mat_exp(const Mat& X, int pade_degree) {
  if (!X.is_square()) throw std::invalid_argument("mat_exp: non-square input");
  const int n = X.rows;

  // Nilpotent inputs terminate the series exactly.
  {
    Mat P = X;
    for (int p = 1; p <= n; ++p) {
      if (P.exactly_zero()) {
        Mat sum = Mat::identity(X.field, n);
        Mat term = Mat::identity(X.field, n);
        for (int j = 1; j < p; ++j) {
          term = (1.0 / j) * (term * X);
          sum += term;
        }
        return sum;
      }
      P = P * X;
    }
  }

  double nrm = X.frobenius_norm();
  int s = 0;
  if (nrm > 0.5) s = static_cast<int>(std::ceil(std::log2(nrm / 0.5)));
  Mat Y = std::ldexp(1.0, -s) * X;

  const int d = pade_degree;
  std::vector<double> c(d + 1);
  c[0] = 1.0;
  for (int j = 1; j <= d; ++j) c[j] = c[j - 1] * (d - j + 1) / ((2.0 * d - j + 1) * j);

  Mat power = Mat::identity(X.field, n);
  Mat P = c[0] * power, Q = c[0] * power;
  for (int j = 1; j <= d; ++j) {
    power = power * Y;
    P += c[j] * power;
    Q += ((j % 2 == 0) ? c[j] : -c[j]) * power;
  }
  Mat R = solve(Q, P);
  for (int k = 0; k < s; ++k) R = R * R;
  return R;
}

namespace {

// Denman-Beavers iteration; quadratically convergent for arguments with no
// spectrum on the closed negative real axis, which covers the near-identity
// group elements this is used on.
Mat db_sqrt(const Mat& A) {
  Mat Y = A, Z = Mat::identity(A.field, A.rows);
  for (int it = 0; it < 60; ++it) {
    Mat Yn = 0.5 * (Y + inverse(Z));
    Mat Zn = 0.5 * (Z + inverse(Y));
    double step = (Yn - Y).frobenius_norm();
    Y = Yn;
    Z = Zn;
    if (step < 1e-15 * (1.0 + Y.frobenius_norm())) return Y;
  }
  throw std::domain_error("mat_log: square-root iteration did not converge");
}

}  // namespace

Mat mat_log(const Mat& g) {
  if (!g.is_square()) throw std::invalid_argument("mat_log: non-square input");
  const int n = g.rows;
  const Mat I = Mat::identity(g.field, n);
  Mat A = g;
  int halvings = 0;
  while ((A - I).frobenius_norm() > 0.3) {
    if (++halvings > 50) throw std::domain_error("mat_log: argument too far from identity");
    A = db_sqrt(A);
  }
  Mat E = A - I;
  Mat term = E, L = E;
  for (int j = 2; j <= 96; ++j) {
    term = term * E;
    L += ((j % 2 == 0) ? -1.0 / j : 1.0 / j) * term;
    if (term.frobenius_norm() / j < 1e-17) break;
  }
  return std::ldexp(1.0, halvings) * L;
}

Mat mat_pow(const Mat& A, long k) {
  if (!A.is_square()) throw std::invalid_argument("mat_pow: non-square input");
  Mat base = k < 0 ? inverse(A) : A;
  unsigned long e = k < 0 ? -static_cast<unsigned long>(k) : static_cast<unsigned long>(k);
  Mat r = Mat::identity(A.field, A.rows);
  while (e) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

Mat canon_center(const Mat& A, Center c) {
  if (c == Center::None) return A;
  double ref = A.max_entry_norm();
  if (ref == 0.0) return A;

  // column-major scan for the leading entry
  int lead_i = -1, lead_j = -1;
  for (int j = 0; j < A.cols && lead_i < 0; ++j)
    for (int i = 0; i < A.rows; ++i)
      if (A.at(i, j).norm() > kLeadingFrac * ref) {
        lead_i = i;
        lead_j = j;
        break;
      }
  const Scalar& e = A.at(lead_i, lead_j);

  switch (c) {
    case Center::ComplexScale:
      return A.scale_left(e.inverse());
    case Center::UnitPhase: {
      Scalar phase = e.conj() / e.norm();
      return A.scale_left(phase);
    }
    case Center::RealScale: {
      double s = 1.0 / e.norm();
      Scalar u = s * e;
      double lead_comp = 0.0;
      for (double comp : {u.w, u.x, u.y, u.z})
        if (std::abs(comp) > kLeadingFrac) {
          lead_comp = comp;
          break;
        }
      if (lead_comp < 0.0) s = -s;
      return s * A;
    }
    default:
      return A;
  }
}

bool proj_equiv(const Mat& A, const Mat& B, Center c, double tol) {
  if (!A.same_shape(B)) throw std::invalid_argument("proj_equiv: shape/field mismatch");
  return canon_center(A, c).equals(canon_center(B, c), tol);
}

Mat canon_column(const Mat& v) {
  if (v.cols != 1) throw std::invalid_argument("canon_column: expected a column vector");
  double ref = v.max_entry_norm();
  if (ref == 0.0) throw std::domain_error("canon_column: zero vector");
  int k = leading_index(v.a, ref);
  return v.scale_right(v.a[k].inverse());
}

bool column_equiv(const Mat& v, const Mat& w, double tol) {
  if (!v.same_shape(w) || v.cols != 1)
    throw std::invalid_argument("column_equiv: shape/field mismatch");
  double ref = v.max_entry_norm();
  if (ref == 0.0 || w.max_entry_norm() == 0.0) throw std::domain_error("column_equiv: zero vector");
  // normalize both at the largest coordinate of v for stability
  int k = 0;
  for (int i = 1; i < v.rows; ++i)
    if (v.a[i].norm() > v.a[k].norm()) k = i;
  if (w.a[k].norm() <= tol * w.max_entry_norm()) return false;
  Mat vn = v.scale_right(v.a[k].inverse());
  Mat wn = w.scale_right(w.a[k].inverse());
  return vn.equals(wn, tol);
}

Mat complex_embedding(const Mat& A) {
  if (A.field != Field::Quaternion)
    throw std::invalid_argument("complex_embedding: quaternionic input expected");
  Mat E(Field::Complex, 2 * A.rows, 2 * A.cols);
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j) {
      const Scalar& q = A.at(i, j);
      E.at(i, j) = Scalar::complex(q.w, q.x);
      E.at(i, A.cols + j) = Scalar::complex(q.y, q.z);
      E.at(A.rows + i, j) = Scalar::complex(-q.y, q.z);
      E.at(A.rows + i, A.cols + j) = Scalar::complex(q.w, -q.x);
    }
  return E;
}

}  // namespace cartan
