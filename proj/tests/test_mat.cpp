#include <doctest.h>

#include <random>

#include "cartan/mat.hpp"

using namespace cartan;

namespace {

std::mt19937_64 rng(777);

Scalar random_scalar(Field f) {
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  switch (f) {
    case Field::Real: return Scalar::real(d(rng));
    case Field::Complex: return Scalar::complex(d(rng), d(rng));
    default: return Scalar::quat(d(rng), d(rng), d(rng), d(rng));
  }
}

Mat random_mat(Field f, int r, int c) {
  Mat m(f, r, c);
  for (auto& e : m.a) e = random_scalar(f);
  return m;
}

}  // namespace

TEST_CASE("shape and field checks on binary ops") {
  Mat a = random_mat(Field::Real, 2, 3), b = random_mat(Field::Real, 3, 3);
  CHECK_THROWS_AS((void)(a + b), std::invalid_argument);
  Mat c = random_mat(Field::Complex, 2, 3);
  CHECK_THROWS_AS((void)(a + c), std::invalid_argument);
  CHECK_NOTHROW((void)(a * b));
}

TEST_CASE("Frobenius norm is submultiplicative") {
  for (Field f : {Field::Real, Field::Complex, Field::Quaternion})
    for (int trial = 0; trial < 40; ++trial) {
      Mat a = random_mat(f, 3, 3), b = random_mat(f, 3, 3);
      CHECK((a * b).frobenius_norm() <= a.frobenius_norm() * b.frobenius_norm() + 1e-10);
    }
}

TEST_CASE("solve and inverse over all three fields") {
  for (Field f : {Field::Real, Field::Complex, Field::Quaternion})
    for (int trial = 0; trial < 30; ++trial) {
      Mat a = random_mat(f, 4, 4) + 3.0 * Mat::identity(f, 4);
      Mat id = Mat::identity(f, 4);
      CHECK((a * inverse(a)).equals(id, 1e-11));
      CHECK((inverse(a) * a).equals(id, 1e-11));
      Mat b = random_mat(f, 4, 2);
      CHECK((a * solve(a, b)).equals(b, 1e-11));
    }
  CHECK_THROWS_AS(inverse(Mat::zeros(Field::Real, 2, 2)), std::domain_error);
}

TEST_CASE("quaternionic inverse agrees with the complex embedding") {
  for (int trial = 0; trial < 20; ++trial) {
    Mat a = random_mat(Field::Quaternion, 3, 3) + 3.0 * Mat::identity(Field::Quaternion, 3);
    Mat b = random_mat(Field::Quaternion, 3, 3);
    CHECK(complex_embedding(a * b).equals(complex_embedding(a) * complex_embedding(b), 1e-12));
    CHECK(complex_embedding(inverse(a)).equals(inverse(complex_embedding(a)), 1e-11));
  }
}

TEST_CASE("mat_exp basics") {
  Mat zero = Mat::zeros(Field::Complex, 3, 3);
  CHECK(mat_exp(zero).equals(Mat::identity(Field::Complex, 3), 0.0));

  // nilpotent generator (0 p; 0 0) exponentiates exactly to (1 p; 0 1)
  Mat n = Mat::zeros(Field::Quaternion, 2, 2);
  n.at(0, 1) = Scalar::quat(0.5, -1.0, 2.0, 0.25);
  Mat g = mat_exp(n);
  CHECK(g.at(0, 0) == Scalar::one(Field::Quaternion));
  CHECK(g.at(1, 1) == Scalar::one(Field::Quaternion));
  CHECK(g.at(0, 1) == n.at(0, 1));
  CHECK(g.at(1, 0) == Scalar::zero(Field::Quaternion));
}

TEST_CASE("mat_exp against higher-degree Pade oracle") {
  for (int trial = 0; trial < 25; ++trial) {
    Mat x = random_mat(Field::Real, 3, 3);
    CHECK(mat_exp(x, 6).equals(mat_exp(x, 8), 1e-10));
  }
  for (int trial = 0; trial < 10; ++trial) {
    Mat x = random_mat(Field::Quaternion, 3, 3);
    CHECK(mat_exp(x, 6).equals(mat_exp(x, 8), 1e-10));
  }
}

TEST_CASE("exp(X) exp(-X) = 1 up to norm 5") {
  for (int trial = 0; trial < 25; ++trial) {
    Mat x = random_mat(Field::Complex, 3, 3);
    double target = 0.2 + 4.8 * trial / 24.0;
    x = (target / x.frobenius_norm()) * x;
    CHECK((mat_exp(x) * mat_exp(-x)).equals(Mat::identity(Field::Complex, 3), 1e-10));
  }
}

TEST_CASE("mat_log inverts mat_exp") {
  for (Field f : {Field::Real, Field::Complex, Field::Quaternion})
    for (int trial = 0; trial < 15; ++trial) {
      Mat x = 0.8 * random_mat(f, 3, 3);
      Mat g = mat_exp(x);
      CHECK(mat_exp(mat_log(g)).equals(g, 1e-11));
    }
}

TEST_CASE("mat_pow") {
  Mat a = random_mat(Field::Complex, 3, 3) + 2.0 * Mat::identity(Field::Complex, 3);
  Mat p = Mat::identity(Field::Complex, 3);
  for (int k = 0; k <= 7; ++k) {
    CHECK(mat_pow(a, k).equals(p, 1e-9 * p.frobenius_norm()));
    p = p * a;
  }
  CHECK((mat_pow(a, -3) * mat_pow(a, 3)).equals(Mat::identity(Field::Complex, 3), 1e-9));
}

TEST_CASE("projective equivalence by center type") {
  Mat a = random_mat(Field::Complex, 3, 3);
  CHECK(proj_equiv(a, 3.0 * a, Center::RealScale));
  CHECK(proj_equiv(a, a.scale_left(Scalar::complex(0, 1)), Center::UnitPhase));
  CHECK(proj_equiv(a, a.scale_left(Scalar::complex(2, 1)), Center::ComplexScale));
  // U(1) center does not absorb modulus changes
  CHECK_FALSE(proj_equiv(a, 3.0 * a, Center::UnitPhase));

  // generic perturbation of a single entry breaks equivalence
  Mat b = a;
  b.at(0, 0) += Scalar::complex(1e-3, 0);
  CHECK_FALSE(proj_equiv(a, b, Center::ComplexScale));
  CHECK_FALSE(proj_equiv(a, b, Center::RealScale));

  Mat q = random_mat(Field::Quaternion, 2, 2);
  CHECK(proj_equiv(q, -2.5 * q, Center::RealScale));

  CHECK_THROWS_AS(proj_equiv(a, random_mat(Field::Complex, 2, 2), Center::RealScale),
                  std::invalid_argument);
}

TEST_CASE("canonical representative is idempotent") {
  for (Center c : {Center::RealScale, Center::ComplexScale, Center::UnitPhase}) {
    Mat a = random_mat(c == Center::RealScale ? Field::Quaternion : Field::Complex, 3, 3);
    Mat once = canon_center(a, c);
    CHECK(canon_center(once, c).equals(once, 1e-14));
  }
}

TEST_CASE("proj_equiv is an equivalence relation on random triples") {
  std::uniform_real_distribution<double> d(0.2, 2.0);
  for (int trial = 0; trial < 30; ++trial) {
    Mat a = random_mat(Field::Complex, 3, 3);
    Mat b = a.scale_left(Scalar::complex(d(rng), d(rng)));
    Mat c = b.scale_left(Scalar::complex(d(rng), -d(rng)));
    CHECK(proj_equiv(a, a, Center::ComplexScale));
    CHECK(proj_equiv(a, b, Center::ComplexScale) == proj_equiv(b, a, Center::ComplexScale));
    CHECK((proj_equiv(a, b, Center::ComplexScale) && proj_equiv(b, c, Center::ComplexScale)));
    CHECK(proj_equiv(a, c, Center::ComplexScale));
  }
}

TEST_CASE("column equivalence under right scalars") {
  Mat v(Field::Quaternion, 3, 1);
  v.at(0, 0) = Scalar::quat(1, 0.5, 0, 0);
  v.at(1, 0) = Scalar::quat(0, 0, 1, 0);
  v.at(2, 0) = Scalar::quat(0.2, 0, 0, -1);
  Scalar lam = Scalar::quat(0.7, -0.3, 0.4, 0.1);
  CHECK(column_equiv(v, v.scale_right(lam)));
  Mat w = v;
  w.at(1, 0) += Scalar::quat(1e-3, 0, 0, 0);
  CHECK_FALSE(column_equiv(v, w));
  Mat cv = canon_column(v);
  CHECK(cv.at(0, 0).equals(Scalar::one(Field::Quaternion), 1e-14));
}
