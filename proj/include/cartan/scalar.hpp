#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace cartan {

enum class Field { Real, Complex, Quaternion };

inline const char* field_name(Field f) {
  switch (f) {
    case Field::Real: return "real";
    case Field::Complex: return "complex";
    default: return "quaternion";
  }
}

// Element of R, C or H. Components are (w, x, y, z) for w + x*i + y*j + z*ij;
// unused imaginary parts stay exactly zero.
struct Scalar {
  Field field = Field::Real;
  double w = 0.0, x = 0.0, y = 0.0, z = 0.0;

  Scalar() = default;
  Scalar(Field f, double w_, double x_ = 0.0, double y_ = 0.0, double z_ = 0.0)
      : field(f), w(w_), x(x_), y(y_), z(z_) {}

  static Scalar real(double v) { return {Field::Real, v}; }
  static Scalar complex(double re, double im) { return {Field::Complex, re, im}; }
  static Scalar quat(double w, double x, double y, double z) {
    return {Field::Quaternion, w, x, y, z};
  }
  static Scalar zero(Field f) { return {f, 0.0}; }
  static Scalar one(Field f) { return {f, 1.0}; }
  static Scalar i(Field f) {
    if (f == Field::Real) throw std::invalid_argument("no imaginary unit in R");
    return {f, 0.0, 1.0};
  }

  double norm2() const { return w * w + x * x + y * y + z * z; }
  double norm() const { return std::sqrt(norm2()); }
  bool is_zero(double tol = 0.0) const { return norm() <= tol; }

  Scalar conj() const { return {field, w, -x, -y, -z}; }

  Scalar operator-() const { return {field, -w, -x, -y, -z}; }

  Scalar inverse() const {
    double n2 = norm2();
    if (n2 == 0.0) throw std::domain_error("inverse of zero scalar");
    return {field, w / n2, -x / n2, -y / n2, -z / n2};
  }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    check_fields(a, b);
    return {a.field, a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) {
    check_fields(a, b);
    return {a.field, a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z};
  }

  // Hamilton product; reduces to complex/real multiplication when the
  // higher imaginary parts vanish.
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    check_fields(a, b);
    return {a.field,
            a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
  }

  friend Scalar operator*(double s, const Scalar& a) {
    return {a.field, s * a.w, s * a.x, s * a.y, s * a.z};
  }
  friend Scalar operator*(const Scalar& a, double s) { return s * a; }
  friend Scalar operator/(const Scalar& a, double s) { return (1.0 / s) * a; }

  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

  bool equals(const Scalar& b, double tol) const {
    return field == b.field && (*this - b).norm() <= tol;
  }
  bool operator==(const Scalar& b) const {
    return field == b.field && w == b.w && x == b.x && y == b.y && z == b.z;
  }

  double re() const { return w; }
  double im() const { return x; }

  std::string str() const;

 private:
  static void check_fields(const Scalar& a, const Scalar& b) {
    if (a.field != b.field)
      throw std::invalid_argument(std::string("scalar field mismatch: ") +
                                  field_name(a.field) + " vs " + field_name(b.field));
  }
};

inline Scalar quat_mul(const Scalar& a, const Scalar& b) {
  if (a.field != Field::Quaternion || b.field != Field::Quaternion)
    throw std::invalid_argument("quat_mul expects quaternionic scalars");
  return a * b;
}

}  // namespace cartan
