#include <gtest/gtest.h>

#include <cmath>

#include "checks.hpp"
#include "families.hpp"
#include "lieframe/indicatrix.hpp"
#include "lieframe/verify.hpp"

using namespace lieframe;
using namespace lieframe::indicatrix_form;
using lieframe::fixtures::interior_max_abs;

namespace {

const AlgebraVector kT{1, 0, 0}, kN{0, 1, 0}, kB{0, 0, 1};

MatePoint point(double kappa, double dkappa, double ddkappa, double H, double rho) {
  return {kappa, dkappa, ddkappa, H, rho};
}

struct Case {
  const char* name;
  CurveSpec spec;
};

std::vector<Case> bertrand_cases() {
  std::vector<Case> out;
  for (double g : {0.0, 0.5, 1.0}) {
    out.push_back({"pair", fixtures::bertrand_family(g, 0.6, 1.3)});
    out.push_back({"slant", fixtures::slant_bertrand_family(g)});
  }
  return out;
}

/// max |Frenet-image torsion| over oracle samples away from the ends.
double oracle_twist_max(const ApparatusField& mate, const IndicatrixApparatus& ind, const LieStructure& lie) {
  const std::size_t stride = oracle_stride(mate.grid);
  const OracleApparatus o = oracle_apparatus(ind.curve, mate.grid, lie, stride);
  double m = 0.0;
  const std::size_t band = 3 * kBoundaryBand * stride;
  for (std::size_t i = band; i + band < mate.size(); ++i) {
    if (o.defined[i]) m = std::fmax(m, std::fabs(o.field.twist(i)));
  }
  return m;
}

}  // namespace

TEST(IndicatrixKind, Parse) {
  EXPECT_EQ(parse_indicatrix_kind("t"), IndicatrixKind::Tangent);
  EXPECT_EQ(parse_indicatrix_kind("normal"), IndicatrixKind::Normal);
  EXPECT_EQ(parse_indicatrix_kind("b"), IndicatrixKind::Binormal);
  EXPECT_THROW(parse_indicatrix_kind("x"), Error);
}

TEST(PointwiseForms, TangentExamples) {
  EXPECT_NEAR(tangent_kappa(point(1, 0, 0, 1, 0)), std::sqrt(2.0), 1e-15);
  const MatePoint p = point(1, 0.3, 0, 1, 0.4);
  EXPECT_NEAR(inner(tangent_T(kN), tangent_N(p, kT, kB)), 0.0, 1e-15);
  EXPECT_EQ(tangent_twist(point(1.7, 0, 0.2, 0.8, 0.3)), 0.0);
}

TEST(PointwiseForms, NormalExamples) {
  EXPECT_NEAR(normal_kappa(point(1, 0, 0, 1, 0.5)), 1.0, 1e-15);
  EXPECT_EQ(normal_twist(point(1.2, 0.4, 0.1, 0.9, 0.9), 1), 0.0);
  const AlgebraVector tn = normal_T(point(1, 0.2, 0, 1.3, 0.1), -1, kT, kB);
  EXPECT_NEAR(inner(tn, tn), 1.0, 1e-15);
}

TEST(PointwiseForms, BinormalExamples) {
  EXPECT_NEAR(binormal_kappa(point(1, 0, 0, 1, 2)), std::sqrt(10.0), 1e-15);
}

TEST(PointwiseForms, ResidualExamples) {
  EXPECT_EQ(spherical_helix_residual(point(1, 1, 0, 1, 1)), -6.0);
  EXPECT_EQ(normal_planarity_residual(point(1, 1, 0, 1, 1)), 6.0);
  EXPECT_EQ(spherical_helix_residual(point(2, 0, 0, 0.3, 0.9)), 0.0);
  EXPECT_EQ(normal_planarity_residual(point(2, 0, 0, 0.3, 0.9)), 0.0);
}

TEST(PointwiseForms, GammaVanishesAtRhoEqualH) {
  EXPECT_EQ(principal_image_gamma(point(1, 0.5, 0.1, 0.7, 0.7)), 0.0);
}

TEST(StructuralIdentities, ExactAtEverySample) {
  for (const Case& c : bertrand_cases()) {
    const auto mate = integrate_frenet(c.spec);
    for (int eps : {1, -1}) {
      const double e = eps;
      const auto t = tangent_indicatrix(mate, eps);
      const auto b = binormal_indicatrix(mate, eps);
      const auto gt = gamma_tangent(mate);
      const auto gb = gamma_binormal(mate);
      for (std::size_t i = 0; i < mate.size(); ++i) {
        if (t.singular[i] || b.singular[i]) continue;
        EXPECT_LE(max_abs_component(b.B[i] - t.B[i]), 1e-12) << c.name;
        EXPECT_LE(max_abs_component(b.T[i] + e * t.T[i]), 1e-12) << c.name;
        EXPECT_LE(max_abs_component(b.N[i] + e * t.N[i]), 1e-12) << c.name;
        EXPECT_LE(std::fabs(b.twist[i] + e * t.twist[i]), 1e-12) << c.name;
        EXPECT_LE(std::fabs(b.kappa[i] + t.kappa[i]), 1e-12) << c.name;
        EXPECT_LE(std::fabs(gt.values[i] - gb.values[i]), 1e-12) << c.name;
        EXPECT_EQ(t.T[i], -mate.N[i]);
        EXPECT_EQ(b.T[i], e * mate.N[i]);
      }
    }
  }
}

TEST(SphereConfinement, AllThreeIndicatrices) {
  for (const Case& c : bertrand_cases()) {
    const auto mate = integrate_frenet(c.spec);
    for (int eps : {1, -1}) {
      for (IndicatrixKind k : {IndicatrixKind::Tangent, IndicatrixKind::Normal, IndicatrixKind::Binormal}) {
        const auto ind = indicatrix(mate, k, eps);
        for (std::size_t i = 0; i < ind.size(); ++i) {
          EXPECT_LT(std::fabs(norm(ind.curve[i]) - 1.0), 1e-9) << c.name;
          EXPECT_LT(orthonormality_defect(ind.T[i], ind.N[i], ind.B[i]), 1e-6) << c.name;
        }
      }
    }
  }
}

TEST(ArcLength, AbsoluteIntegralIsMonotone) {
  const auto mate = integrate_frenet(fixtures::bertrand_family(0.5, 0.6, 1.3));
  for (IndicatrixKind k : {IndicatrixKind::Tangent, IndicatrixKind::Normal, IndicatrixKind::Binormal}) {
    const auto ind = indicatrix(mate, k, 1);
    EXPECT_EQ(ind.s.front(), 0.0);
    for (std::size_t i = 1; i < ind.size(); ++i) EXPECT_GE(ind.s[i], ind.s[i - 1]);
  }
}

TEST(OracleCurvature, PositiveAndMatchesNormalAndBinormalImages) {
  for (const Case& c : bertrand_cases()) {
    const auto mate = integrate_frenet(c.spec);
    const LieStructure lie = c.spec.structure;
    const std::size_t stride = oracle_stride(mate.grid);
    const std::size_t band = 3 * kBoundaryBand * stride;
    for (IndicatrixKind k : {IndicatrixKind::Tangent, IndicatrixKind::Normal, IndicatrixKind::Binormal}) {
      const auto ind = indicatrix(mate, k, 1);
      const OracleApparatus o = oracle_apparatus(ind.curve, mate.grid, lie, stride);
      for (std::size_t i = band; i + band < mate.size(); ++i) {
        if (!o.defined[i]) continue;
        EXPECT_GT(o.field.kappa[i], 0.0);
        if (k != IndicatrixKind::Tangent) {
          EXPECT_NEAR(o.field.kappa[i], std::fabs(ind.kappa[i]), 1e-3) << c.name;
        }
      }
    }
  }
}

TEST(SphericalHelixCondition, VanishesExactlyOnSlantMates) {
  for (double g : {0.0, 0.5, 1.0}) {
    const auto slant = integrate_frenet(fixtures::slant_bertrand_family(g));
    ASSERT_TRUE(classify(slant).slant_helix);
    EXPECT_LT(interior_max_abs(tangent_spherical_helix_residual(slant)), 1e-4);

    const auto pair = integrate_frenet(fixtures::bertrand_family(g, 0.6, 1.3));
    ASSERT_FALSE(classify(pair).slant_helix);
    EXPECT_GT(interior_max_abs(tangent_spherical_helix_residual(pair)), 1e-2);
  }
}

// On a slant mate the principal normal image is a circle: the oracle torsion
// vanishes while the printed planarity residual and torsion do not.
TEST(NormalPlanarity, OracleSeesPlanarImageOnSlantMates) {
  for (double g : {0.0, 0.5, 1.0}) {
    const auto mate = integrate_frenet(fixtures::slant_bertrand_family(g));
    const auto ind = normal_indicatrix(mate, 1);
    EXPECT_LT(oracle_twist_max(mate, ind, LieStructure{g}), 1e-6);
    EXPECT_GT(interior_max_abs(normal_planarity_residual(mate)), 1e-1);
    EXPECT_GT(interior_max_abs(ind.twist), 1e-1);
  }
}

// A mate built to satisfy the printed planarity condition: the printed residual
// and torsion vanish together, yet the image is not planar.
TEST(NormalPlanarity, PrintedConditionFamily) {
  const auto mate = integrate_frenet(fixtures::normal_planarity_condition_family(0.5));
  ASSERT_TRUE(check_bertrand(mate, 1).is_pair);
  const auto ind = normal_indicatrix(mate, 1);
  EXPECT_LT(interior_max_abs(normal_planarity_residual(mate)), 1e-6);
  EXPECT_LT(interior_max_abs(ind.twist), 1e-6);
  EXPECT_GT(oracle_twist_max(mate, ind, LieStructure{0.5}), 1e-2);
}
