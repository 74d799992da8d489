#include "lieframe/algebra.hpp"

#include <algorithm>
#include <string>

#include "lieframe/error.hpp"

namespace lieframe {

LieStructure preset_structure(std::string_view name) {
  if (name == "abelian") return LieStructure::abelian();
  if (name == "so3") return LieStructure::so3();
  if (name == "su2") return LieStructure::su2();
  throw Error(ErrorCode::InvalidArgument,
              "unknown structure preset '" + std::string(name) + "' (expected abelian, so3 or su2)");
}

AlgebraVector bracket(const AlgebraVector& x, const AlgebraVector& y, const LieStructure& lie) {
  return (2.0 * lie.tau_G) * cross(x, y);
}

AlgebraVector covariant_derivative(const AlgebraVector& w_dot, const AlgebraVector& tangent,
                                   const AlgebraVector& w, const LieStructure& lie) {
  return w_dot + 0.5 * bracket(tangent, w, lie);
}

double orthonormality_defect(const AlgebraVector& t, const AlgebraVector& n, const AlgebraVector& b) {
  const double entries[] = {
      std::fabs(inner(t, t) - 1.0), std::fabs(inner(n, n) - 1.0), std::fabs(inner(b, b) - 1.0),
      std::fabs(inner(t, n)),       std::fabs(inner(t, b)),       std::fabs(inner(n, b)),
  };
  return *std::max_element(std::begin(entries), std::end(entries));
}

double tauG_from_frame(const AlgebraVector& t, const AlgebraVector& n, const AlgebraVector& b,
                       const LieStructure& lie) {
  const double defect = orthonormality_defect(t, n, b);
  if (!(defect <= kFrameTolerance)) {
    throw Error(ErrorCode::FrameNotOrthonormal,
                "frame deviates from orthonormal by " + std::to_string(defect));
  }
  return 0.5 * inner(bracket(t, n, lie), b);
}

}  // namespace lieframe
