#include <doctest.h>

#include <random>

#include "cartan/model.hpp"

using namespace cartan;

namespace {

std::mt19937_64 rng(424242);

const std::vector<ModelSpec> kParabolic = {
    ModelSpec::cproj(1), ModelSpec::cproj(2), ModelSpec::quat(1),
    ModelSpec::quat(2),  ModelSpec::cr(1, 1), ModelSpec::cr(2, 1),
};

}  // namespace

TEST_CASE("grading dimensions add up to dim g before the center quotient") {
  for (const auto& model : kParabolic) {
    int total = 0;
    for (int i : model.grades()) {
      CHECK(static_cast<int>(grading_basis(model, i).size()) == model.grade_real_dim(i));
      total += model.grade_real_dim(i);
    }
    int n = model.matrix_size();
    int expected = model.field() == Field::Quaternion ? 4 * n * n
                   : model.kind == ModelKind::CR      ? n * n
                                                      : 2 * n * n;
    CHECK(total == expected);
  }
}

TEST_CASE("cr algebra relations hold for every basis element") {
  for (const auto& model : {ModelSpec::cr(1, 1), ModelSpec::cr(2, 1), ModelSpec::cr(2, 0)})
    for (int i : model.grades())
      for (const Mat& b : grading_basis(model, i))
        CHECK(algebra_membership_residual(model, b) == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("bracket of an element with itself vanishes") {
  for (const auto& model : kParabolic) {
    Mat X = random_algebra_element(model, rng);
    CHECK(bracket({model, X}, {model, X}).matrix.frobenius_norm() <=
          1e-12 * (1.0 + X.frobenius_norm()));
  }
}

TEST_CASE("cproj m=1 mixed bracket against the 2x2 commutator oracle") {
  ModelSpec model = ModelSpec::cproj(1);
  Mat V = Mat::zeros(Field::Complex, 2, 2);
  V.at(1, 0) = Scalar::complex(0.7, -0.2);
  Mat Pl = Mat::zeros(Field::Complex, 2, 2);
  Pl.at(0, 1) = Scalar::complex(-0.4, 1.1);
  Mat direct = V * Pl - Pl * V;  // 2x2 oracle, independent of bracket()
  AlgebraElement B = bracket({model, V}, {model, Pl});
  CHECK(algebra_equiv(model, B.matrix, direct, 1e-14));
  // lands in grade 0
  CHECK((B.matrix - grade_project(model, B.matrix, 0)).frobenius_norm() <= 1e-14);
}

TEST_CASE("grading closure over every basis pair") {
  for (const auto& model : kParabolic) {
    auto grades = model.grades();
    int depth = model.depth();
    for (int i : grades)
      for (int j : grades)
        for (const Mat& X : grading_basis(model, i))
          for (const Mat& Y : grading_basis(model, j)) {
            Mat B = bracket({model, X}, {model, Y}).matrix;
            int k = i + j;
            Mat off = (k < -depth || k > depth) ? B : B - grade_project(model, B, k);
            CHECK(off.frobenius_norm() <= 1e-12);
          }
  }
}

TEST_CASE("Jacobi identity on random triples") {
  for (const auto& model : kParabolic)
    for (int trial = 0; trial < 10; ++trial) {
      AlgebraElement X{model, random_algebra_element(model, rng)};
      AlgebraElement Y{model, random_algebra_element(model, rng)};
      AlgebraElement Z{model, random_algebra_element(model, rng)};
      Mat sum = bracket(bracket(X, Y), Z).matrix + bracket(bracket(Y, Z), X).matrix +
                bracket(bracket(Z, X), Y).matrix;
      CHECK(sum.frobenius_norm() <= 1e-10);
    }
}

TEST_CASE("grade_split: pure components, reassembly, cr validation") {
  ModelSpec cr = ModelSpec::cr(1, 1);
  Mat X = random_grade_element(cr, -1, rng);
  auto parts = grade_split(cr, X);
  CHECK(parts.size() == 5);
  CHECK((parts.at(-1) - X).frobenius_norm() <= 1e-14);
  for (int i : {-2, 0, 1, 2}) CHECK(parts.at(i).frobenius_norm() <= 1e-14);

  for (const auto& model : kParabolic) {
    Mat Y = random_algebra_element(model, rng);
    auto split = grade_split(model, Y);
    Mat sum = Mat::zeros(model.field(), Y.rows, Y.cols);
    for (const auto& [g, comp] : split) {
      sum += comp;
      // each component is exactly its own projection
      CHECK((comp - grade_project(model, comp, g)).frobenius_norm() <= 1e-14);
    }
    CHECK((sum - Y).frobenius_norm() <= 1e-14);
  }

  Mat bad = random_mat(Field::Complex, 4, 4, rng);
  CHECK_THROWS_AS(grade_split(ModelSpec::cr(1, 1), bad), std::domain_error);
}

TEST_CASE("subgroup membership") {
  for (const auto& model : kParabolic) {
    Mat id = Mat::identity(model.field(), model.matrix_size());
    for (Subgroup s : {Subgroup::GMinus, Subgroup::GZero, Subgroup::PPlus, Subgroup::P})
      CHECK(subgroup_member(model, id, s));

    Mat gm = mat_exp(random_grade_element(model, -1, rng));
    CHECK(subgroup_member(model, gm, Subgroup::GMinus));
    CHECK_FALSE(subgroup_member(model, gm, Subgroup::P));

    Mat pp_alg = random_grade_element(model, 1, rng);
    if (model.depth() == 2) pp_alg += random_grade_element(model, 2, rng);
    Mat pp = mat_exp(pp_alg);
    CHECK(subgroup_member(model, pp, Subgroup::PPlus));
    CHECK(subgroup_member(model, pp, Subgroup::P));

    // nontrivial mixed product sits in neither unipotent subgroup
    Mat mixed = pp * gm;
    CHECK_FALSE(subgroup_member(model, mixed, Subgroup::PPlus));
    CHECK_FALSE(subgroup_member(model, mixed, Subgroup::GMinus));

    Mat g0 = random_g0_element(model, rng);
    CHECK(subgroup_member(model, g0, Subgroup::GZero));
    CHECK(subgroup_member(model, g0, Subgroup::P));
  }
}

TEST_CASE("P_+ is closed under multiplication and unipotent as typed") {
  std::uniform_real_distribution<double> d(-1, 1);
  for (const auto& model : kParabolic) {
    int n = model.matrix_size();
    Mat id = Mat::identity(model.field(), n);
    int bdim = model.kind == ModelKind::CR ? model.p + model.q : model.m;
    Mat b1 = random_mat(model.field(), 1, bdim, rng);
    Mat b2 = random_mat(model.field(), 1, bdim, rng);
    Mat a1 = IsotropyElement::make(model, b1, d(rng)).matrix();
    Mat a2 = IsotropyElement::make(model, b2, d(rng)).matrix();
    CHECK(subgroup_member(model, a1 * a2, Subgroup::PPlus));

    Mat N = a1 - id;
    if (model.kind == ModelKind::CR)
      CHECK((N * N * N).exactly_zero());
    else
      CHECK((N * N).exactly_zero());
  }
}

TEST_CASE("adjoint basics and G0 preserving each grading component") {
  for (const auto& model : kParabolic) {
    Mat id = Mat::identity(model.field(), model.matrix_size());
    AlgebraElement X{model, random_algebra_element(model, rng)};
    CHECK(algebra_equiv(model, adjoint(model, id, X).matrix, X.matrix, 1e-14));

    for (int i : model.grades()) {
      Mat g0 = random_g0_element(model, rng);
      Mat Y = random_grade_element(model, i, rng);
      Mat ad = adjoint(model, g0, {model, Y}).matrix;
      CHECK((ad - grade_project(model, ad, i)).frobenius_norm() <=
            1e-10 * (1 + ad.frobenius_norm()));
    }
  }
}

TEST_CASE("adjoint by isotropy powers grows linearly in grade 0, quadratically in grade 1") {
  ModelSpec model = ModelSpec::cproj(1);
  Scalar beta = Scalar::complex(0.8, 0.3), v = Scalar::complex(-0.5, 0.9);
  Mat B(Field::Complex, 1, 1);
  B.at(0, 0) = beta;
  IsotropyElement a = IsotropyElement::make(model, B);
  Mat X = Mat::zeros(Field::Complex, 2, 2);
  X.at(1, 0) = v;
  for (int k : {1, 2, 5, 9}) {
    double kk = k;
    Mat ad = adjoint(model, a.matrix_power(k), {model, X}).matrix;
    // symbolic 2x2 expansion: Ad_{a^k} X = [[k beta v, -k^2 beta v beta], [v, -k v beta]]
    Mat expect = Mat::zeros(Field::Complex, 2, 2);
    expect.at(0, 0) = kk * (beta * v);
    expect.at(0, 1) = -(kk * kk) * (beta * v * beta);
    expect.at(1, 0) = v;
    expect.at(1, 1) = -kk * (v * beta);
    CHECK(algebra_equiv(model, ad, expect, 1e-10 * expect.frobenius_norm()));
  }
}

TEST_CASE("act: identity, composition, orbit chart example") {
  for (const auto& model : kParabolic) {
    HomogeneousPoint pt = basepoint(model);
    CHECK(point_equiv(act(Mat::identity(model.field(), model.matrix_size()), pt), pt));

    Mat g = mat_exp(random_algebra_element(model, rng, 0.4));
    Mat h = mat_exp(random_algebra_element(model, rng, 0.4));
    CHECK(point_equiv(act(g * h, pt), act(g, act(h, pt)), 1e-10));
  }

  // cproj m=1, beta=1, start (1,1): after a^3 the chart value is 1/4
  ModelSpec model = ModelSpec::cproj(1);
  Mat B(Field::Complex, 1, 1);
  B.at(0, 0) = Scalar::complex(1, 0);
  IsotropyElement a = IsotropyElement::make(model, B);
  Mat v(Field::Complex, 2, 1);
  v.at(0, 0) = Scalar::complex(1, 0);
  v.at(1, 0) = Scalar::complex(1, 0);
  HomogeneousPoint pt = make_point(model, v);
  HomogeneousPoint moved = act(a.matrix_power(3), pt);
  Mat expect(Field::Complex, 2, 1);
  expect.at(0, 0) = Scalar::complex(4, 0);
  expect.at(1, 0) = Scalar::complex(1, 0);
  CHECK(point_equiv(moved, make_point(model, expect), 1e-12));
  CHECK(to_chart(moved).at(0, 0).equals(Scalar::complex(0.25, 0), 1e-12));
}

TEST_CASE("chart round trips and the cr null constraint") {
  for (const auto& model : kParabolic) {
    Mat chart = random_mat(model.kind == ModelKind::CR ? Field::Complex : model.field(),
                           model.kind == ModelKind::CR ? model.p + model.q + 1 : model.m, 1, rng);
    if (model.kind == ModelKind::CR) chart.at(chart.rows - 1, 0).x = 0;  // Im c slot is real
    HomogeneousPoint pt = from_chart(model, chart);
    CHECK(to_chart(pt).equals(chart, 1e-12));
    HomogeneousPoint back = from_chart(model, to_chart(pt));
    CHECK(point_equiv(pt, back, 1e-10));

    if (model.kind == ModelKind::CR) {
      CHECK(std::abs(null_form_value(model, pt.coords)) <= 1e-12);
      // unitary action keeps points on the cone
      Mat g = mat_exp(random_algebra_element(model, rng, 0.4));
      HomogeneousPoint moved = act(g, pt);
      double scale = moved.coords.frobenius_norm();
      CHECK(std::abs(null_form_value(model, moved.coords)) <= 1e-10 * scale * scale);
    }
  }

  // chart-to-reals round trip
  for (const auto& model : kParabolic) {
    std::vector<double> v(chart_real_dim(model));
    std::uniform_real_distribution<double> d(-1, 1);
    for (auto& c : v) c = d(rng);
    CHECK(chart_to_reals(model, chart_from_reals(model, v)) == v);
  }
}

TEST_CASE("isotropy powers satisfy the group law and flag nullity") {
  ModelSpec model = ModelSpec::cr(2, 1);
  Mat beta = random_mat(Field::Complex, 1, 3, rng);
  IsotropyElement a = IsotropyElement::make(model, beta, 0.7);
  CHECK((a.matrix_power(3) * a.matrix_power(4)).equals(a.matrix_power(7), 1e-12));
  CHECK((a.matrix() * inverse(a.matrix())).equals(Mat::identity(Field::Complex, 5), 1e-12));

  // null covector: beta I_{p,q} conj(beta)^T = 0 with beta != 0
  ModelSpec m11 = ModelSpec::cr(1, 1);
  Mat nullb(Field::Complex, 1, 2);
  nullb.at(0, 0) = Scalar::complex(1, 0);
  nullb.at(0, 1) = Scalar::complex(0, 1);
  CHECK_FALSE(IsotropyElement::make(m11, nullb, 0.0).non_null());
  Mat zb = Mat::zeros(Field::Complex, 1, 2);
  CHECK(IsotropyElement::make(m11, zb, 1.0).non_null());
  CHECK_FALSE(IsotropyElement::make(m11, zb, 0.0).non_null());

  Mat goodb(Field::Complex, 1, 2);
  goodb.at(0, 0) = Scalar::complex(2, 0);
  goodb.at(0, 1) = Scalar::complex(0, 1);
  CHECK(IsotropyElement::make(m11, goodb, 0.0).non_null());
}

TEST_CASE("quaternionic point normalization uses right scalars") {
  ModelSpec model = ModelSpec::quat(1);
  Mat v(Field::Quaternion, 2, 1);
  v.at(0, 0) = Scalar::quat(0, 0, 1, 0);  // j
  v.at(1, 0) = Scalar::one(Field::Quaternion);
  // chart x r^{-1} = 1 * j^{-1} = -j
  Mat chart = to_chart(make_point(model, v));
  CHECK(chart.at(0, 0).equals(Scalar::quat(0, 0, -1, 0), 1e-14));
}
