#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "lieframe/frenet.hpp"

namespace lieframe::fixtures {

CurveSpec make_spec(ScalarFunction kappa, ScalarFunction twist, double s0, double s1, std::size_t n, double tau_G);

/// Mate with lambda kappa + mu (tau - tau_G) = 1 and H = tan(s):
/// kappa = 1 / (lambda + mu tan s).
CurveSpec bertrand_family(double tau_G, double s0 = 0.1, double s1 = 1.0, std::size_t n = 2001,
                          double lambda = 0.5, double mu = 0.3);

/// Bertrand mate (lambda = 1, mu = -1, rho = 1) that is also a slant helix
/// with sigma = 2. With w = 0.2 + s / (2 sqrt 2):
/// kappa = (w / sqrt(1 - w^2) + 1) / 2, tau - tau_G = kappa - 1, s in [0, 1.1].
CurveSpec slant_bertrand_family(double tau_G, std::size_t n = 2001);

/// kappa = 1 and H = u / sqrt(1 - u^2) with u = s / 2 on [0, 1], so that
/// sigma = kappa (1 + H^2)^{3/2} / H' = 2 exactly.
CurveSpec slant_helix_family(double tau_G, std::size_t n = 2001);

/// Bertrand mate (lambda = 0.5, mu = 0.3) whose curvature solves
/// (3 kappa'^2 - kappa'' kappa)(1 + rho^2) = 3 kappa'^2 rho (H - rho) on [0, 1]
/// with kappa(0) = 1, kappa'(0) = -0.3. Solved by RK4 at half the grid step
/// and interpolated by cubic Hermite polynomials.
CurveSpec normal_planarity_condition_family(double tau_G, std::size_t n = 2001);

/// Ten smooth inputs on [0.1, 1] that are neither helices nor Bertrand curves.
std::vector<CurveSpec> non_bertrand_inputs(double tau_G, std::size_t n = 2001);

/// kappa a quadratic with kappa > 0.3 on [0, 1], tau - tau_G a cubic; n = 2001.
CurveSpec random_smooth_spec(std::mt19937_64& rng, double tau_G);

/// Uniform coordinates in [-bound, bound].
AlgebraVector random_vector(std::mt19937_64& rng, double bound);

}  // namespace lieframe::fixtures
