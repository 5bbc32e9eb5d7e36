#include "cartan/scalar.hpp"

#include <sstream>

namespace cartan {

std::string Scalar::str() const {
  std::ostringstream os;
  switch (field) {
    case Field::Real:
      os << w;
      break;
    case Field::Complex:
      os << w << (x < 0 ? "-" : "+") << std::abs(x) << "i";
      break;
    case Field::Quaternion:
      os << w << (x < 0 ? "-" : "+") << std::abs(x) << "i" << (y < 0 ? "-" : "+")
         << std::abs(y) << "j" << (z < 0 ? "-" : "+") << std::abs(z) << "k";
      break;
  }
  return os.str();
}

}  // namespace cartan
