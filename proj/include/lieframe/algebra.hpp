#pragma once

#include <cmath>
#include <string_view>

namespace lieframe {

/// Coordinates of an element of a three-dimensional Lie algebra in a fixed
/// orthonormal basis {X1, X2, X3}.
struct AlgebraVector {
  double x1{0.0};
  double x2{0.0};
  double x3{0.0};

  constexpr AlgebraVector& operator+=(const AlgebraVector& o) {
    x1 += o.x1;
    x2 += o.x2;
    x3 += o.x3;
    return *this;
  }
  constexpr AlgebraVector& operator-=(const AlgebraVector& o) {
    x1 -= o.x1;
    x2 -= o.x2;
    x3 -= o.x3;
    return *this;
  }
  constexpr AlgebraVector& operator*=(double a) {
    x1 *= a;
    x2 *= a;
    x3 *= a;
    return *this;
  }

  friend constexpr bool operator==(const AlgebraVector&, const AlgebraVector&) = default;
};

constexpr AlgebraVector operator+(AlgebraVector a, const AlgebraVector& b) { return a += b; }
constexpr AlgebraVector operator-(AlgebraVector a, const AlgebraVector& b) { return a -= b; }
constexpr AlgebraVector operator-(const AlgebraVector& a) { return {-a.x1, -a.x2, -a.x3}; }
constexpr AlgebraVector operator*(double s, AlgebraVector a) { return a *= s; }
constexpr AlgebraVector operator*(AlgebraVector a, double s) { return a *= s; }
constexpr AlgebraVector operator/(AlgebraVector a, double s) { return a *= (1.0 / s); }

/// Bi-invariant metric in the orthonormal basis.
constexpr double inner(const AlgebraVector& a, const AlgebraVector& b) {
  return a.x1 * b.x1 + a.x2 * b.x2 + a.x3 * b.x3;
}

constexpr AlgebraVector cross(const AlgebraVector& a, const AlgebraVector& b) {
  return {a.x2 * b.x3 - a.x3 * b.x2, a.x3 * b.x1 - a.x1 * b.x3, a.x1 * b.x2 - a.x2 * b.x1};
}

inline double norm(const AlgebraVector& a) { return std::sqrt(inner(a, a)); }

inline AlgebraVector normalized(const AlgebraVector& a) { return a / norm(a); }

inline double max_abs_component(const AlgebraVector& a) {
  return std::fmax(std::fabs(a.x1), std::fmax(std::fabs(a.x2), std::fabs(a.x3)));
}

/// The geometric context of a three-dimensional Lie group with bi-invariant
/// metric. The whole structure reduces to the constant tau_G; the bracket is
/// modeled as [X, Y] = 2 tau_G (X x Y).
struct LieStructure {
  double tau_G{0.0};

  static constexpr LieStructure abelian() { return {0.0}; }
  static constexpr LieStructure so3() { return {0.5}; }
  // SU(2) is the only three-dimensional special unitary group.
  static constexpr LieStructure su2() { return {1.0}; }
};

/// Resolves "abelian", "so3" or "su2". Throws Error(InvalidArgument) otherwise.
LieStructure preset_structure(std::string_view name);

/// Orthonormal moving frame {T, N, B}.
struct Frame {
  AlgebraVector T{1.0, 0.0, 0.0};
  AlgebraVector N{0.0, 1.0, 0.0};
  AlgebraVector B{0.0, 0.0, 1.0};
};

AlgebraVector bracket(const AlgebraVector& x, const AlgebraVector& y, const LieStructure& lie);

/// D_{alpha'} W = dW/ds + 1/2 [T, W]
AlgebraVector covariant_derivative(const AlgebraVector& w_dot, const AlgebraVector& tangent,
                                   const AlgebraVector& w, const LieStructure& lie);

/// Largest deviation of the Gram matrix of {T, N, B} from the identity.
double orthonormality_defect(const AlgebraVector& t, const AlgebraVector& n, const AlgebraVector& b);

constexpr double kFrameTolerance = 1e-8;

/// tau_G = 1/2 <[T, N], B>. Throws Error(FrameNotOrthonormal) when the frame
/// deviates from orthonormal by more than kFrameTolerance.
double tauG_from_frame(const AlgebraVector& t, const AlgebraVector& n, const AlgebraVector& b,
                       const LieStructure& lie);

}  // namespace lieframe
