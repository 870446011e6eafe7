#include "paircorr/theory.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "paircorr/errors.hpp"
#include "quadrature.hpp"

namespace paircorr::theory {
namespace {

constexpr double kPi = std::numbers::pi;

DistributionSpec dim(int n) { return DistributionSpec::automatic(n); }

TEST(DistributionSpec, Validation) {
  EXPECT_THROW(DistributionSpec(0, EvalMode::direct), DomainError);
  EXPECT_THROW(DistributionSpec(301, EvalMode::direct), DomainError);
  EXPECT_NO_THROW(DistributionSpec(300, EvalMode::direct));
  EXPECT_NO_THROW(DistributionSpec(5, EvalMode::log_domain));
  EXPECT_EQ(DistributionSpec::automatic(300).mode(), EvalMode::direct);
  EXPECT_EQ(DistributionSpec::automatic(1001).mode(), EvalMode::log_domain);
}

TEST(Lambda, Validation) {
  EXPECT_THROW(Lambda(-1e-12), DomainError);
  EXPECT_THROW(Lambda(2.0000001), DomainError);
  EXPECT_THROW(Lambda(std::nan("")), DomainError);
  EXPECT_EQ(Lambda(2.0).value(), 2.0);
}

TEST(RegionVolume, FullRegionIsSquaredBallVolume) {
  EXPECT_NEAR(region_volume(dim(2), Lambda(2.0)), kPi * kPi, 1e-12);
  EXPECT_NEAR(region_volume(dim(3), Lambda(2.0)), std::pow(4.0 * kPi / 3.0, 2), 1e-11);
  for (int n = 1; n <= 10; ++n) {
    const double ball = unit_ball_volume(n);
    EXPECT_NEAR(region_volume(dim(n), Lambda(2.0)), ball * ball, 1e-10) << "n = " << n;
  }
}

TEST(RegionVolume, EmptyAtZeroAndMonotone) {
  for (int n : {1, 2, 3, 7}) {
    EXPECT_EQ(region_volume(dim(n), Lambda(0.0)), 0.0);
    double previous = 0.0;
    for (int i = 0; i <= 400; ++i) {
      const double v = region_volume(dim(n), Lambda(i / 200.0));
      EXPECT_GE(v, previous - 1e-15);
      previous = v;
    }
  }
}

TEST(RegionVolume, LogDomainMatchesDirect) {
  for (int n : {1, 4, 12}) {
    for (double l : {0.3, 1.0, 1.9}) {
      EXPECT_NEAR(region_volume(DistributionSpec(n, EvalMode::log_domain), Lambda(l)),
                  region_volume(DistributionSpec(n, EvalMode::direct), Lambda(l)),
                  1e-12);
    }
  }
}

TEST(Cdf, Endpoints) {
  for (int n = 1; n <= 20; ++n) {
    EXPECT_EQ(cdf(dim(n), Lambda(0.0)), 0.0);
    EXPECT_NEAR(cdf(dim(n), Lambda(2.0)), 1.0, 1e-12) << "n = " << n;
  }
}

TEST(Cdf, ThreeDimensionalPolynomialValue) {
  // integral_0^1 of 3l^2 - 9l^3/4 + 3l^5/16 = 1 - 9/16 + 1/32.
  EXPECT_NEAR(cdf(dim(3), Lambda(1.0)), 0.46875, 1e-13);
}

TEST(Cdf, IsRegionVolumeRatio) {
  for (int n : {1, 2, 3, 6, 11}) {
    const double full = region_volume(dim(n), Lambda(2.0));
    for (double l = 0.0; l <= 2.0; l += 0.125) {
      EXPECT_NEAR(cdf(dim(n), Lambda(l)), region_volume(dim(n), Lambda(l)) / full,
                  1e-12);
    }
  }
}

TEST(Cdf, DerivativeIsPdf) {
  const double h = 1e-5;
  for (int n : {2, 3, 5, 10}) {
    for (double l = 0.1; l < 1.9; l += 0.05) {
      const double slope =
          (cdf(dim(n), Lambda(l + h)) - cdf(dim(n), Lambda(l - h))) / (2 * h);
      EXPECT_NEAR(slope, pdf(dim(n), Lambda(l)), 1e-6) << "n = " << n << " l = " << l;
    }
  }
}

TEST(Cdf, LogDomainAgreesWithDirect) {
  for (int n : {2, 9, 40, 150}) {
    for (double l = 0.05; l < 2.0; l += 0.15) {
      EXPECT_NEAR(cdf(DistributionSpec(n, EvalMode::log_domain), Lambda(l)),
                  cdf(DistributionSpec(n, EvalMode::direct), Lambda(l)), 1e-11);
    }
  }
}

TEST(Pdf, Examples) {
  EXPECT_NEAR(pdf(dim(2), Lambda(1.0)), 4.0 / 3.0 - std::sqrt(3.0) / kPi, 1e-13);
  EXPECT_NEAR(pdf(dim(3), Lambda(1.0)), 0.9375, 1e-13);
  for (int n = 1; n <= 30; ++n) EXPECT_EQ(pdf(dim(n), Lambda(2.0)), 0.0);
  // I_x(1, 1/2) = 1 - sqrt(1 - x) at x = 15/16.
  EXPECT_NEAR(pdf(dim(1), Lambda(0.5)), 0.75, 1e-14);
  EXPECT_NEAR(pdf(dim(1), Lambda(0.0)), 1.0, 1e-15);
}

TEST(Pdf, LogDomainAgreesWithDirect) {
  for (int n : {1, 2, 3, 17, 120, 300}) {
    for (double l = 0.0; l <= 2.0; l += 0.1) {
      const double direct = pdf(DistributionSpec(n, EvalMode::direct), Lambda(l));
      const double logged = pdf(DistributionSpec(n, EvalMode::log_domain), Lambda(l));
      EXPECT_NEAR(logged, direct, 1e-10 * std::max(1.0, direct))
          << "n = " << n << " l = " << l;
    }
  }
}

TEST(Pdf, FiniteForHugeDimensions) {
  for (int n : {1001, 5000}) {
    for (double l = 0.0; l <= 2.0; l += 0.01) {
      const double v = pdf(dim(n), Lambda(l));
      EXPECT_TRUE(std::isfinite(v));
      EXPECT_GE(v, 0.0);
    }
  }
}

TEST(Pdf, NormalizedByQuadrature) {
  for (int n = 1; n <= 20; ++n) {
    const auto spec = dim(n);
    const double mass =
        testing::integrate([&](double l) { return pdf(spec, Lambda(l)); }, 0.0, 2.0);
    EXPECT_NEAR(mass, 1.0, 1e-9) << "n = " << n;
  }
}

TEST(PdfClosedForm, Examples) {
  EXPECT_NEAR(pdf_closed_form(2, Lambda(2.0)), 0.0, 1e-15);
  EXPECT_EQ(pdf_closed_form(3, Lambda(2.0)), 0.0);
  EXPECT_NEAR(pdf_closed_form(2, Lambda(1.0)), 4.0 / 3.0 - std::sqrt(3.0) / kPi, 1e-15);
  EXPECT_NEAR(pdf_closed_form(2, Lambda(1.0)), 0.78200443791154128, 1e-15);
  EXPECT_THROW(pdf_closed_form(4, Lambda(1.0)), UnsupportedError);
  EXPECT_THROW(pdf_closed_form(1, Lambda(1.0)), UnsupportedError);
}

TEST(PdfClosedForm, AgreesWithGeneralPdf) {
  for (int n : {2, 3}) {
    for (int i = 0; i < 1000; ++i) {
      const Lambda l(2.0 * i / 999.0);
      EXPECT_NEAR(pdf(dim(n), l), pdf_closed_form(n, l), 1e-12)
          << "n = " << n << " l = " << l.value();
    }
  }
}

TEST(CapVolume, Examples) {
  EXPECT_NEAR(cap_volume(2, 0.0), kPi / 2, 1e-14);
  EXPECT_EQ(cap_volume(3, 2.0), 0.0);
  // Spherical cap of height h = 1/2 in 3D: pi h^2 (3 - h) / 3.
  EXPECT_NEAR(cap_volume(3, 1.0), kPi * 0.25 * 2.5 / 3.0, 1e-14);
  EXPECT_NEAR(cap_volume(3, 1.0), 5.0 * kPi / 24.0, 1e-15);
  EXPECT_THROW(cap_volume(2, 2.5), DomainError);
}

TEST(UnitBallVolume, KnownValues) {
  EXPECT_NEAR(unit_ball_volume(1), 2.0, 1e-15);
  EXPECT_NEAR(unit_ball_volume(2), kPi, 1e-15);
  EXPECT_NEAR(unit_ball_volume(3), 4.0 * kPi / 3.0, 1e-14);
  EXPECT_NEAR(unit_ball_volume(4), kPi * kPi / 2.0, 1e-14);
}

// Oracle: dense scan of the n = 2 closed form, independent of mode().
double scan_closed_form_mode_n2() {
  double best = 0.0;
  double best_value = -1.0;
  for (int i = 0; i <= 2'000'000; ++i) {
    const double l = i * 1e-6;
    const double v = 4.0 * l / kPi * std::acos(l / 2.0) -
                     l * l * std::sqrt(4.0 - l * l) / kPi;
    if (v > best_value) {
      best_value = v;
      best = l;
    }
  }
  return best;
}

TEST(Mode, TwoDimensionsMatchesGridScan) {
  const double oracle = scan_closed_form_mode_n2();
  EXPECT_NEAR(oracle, 0.836222, 1e-6);
  EXPECT_NEAR(mode(dim(2)).value(), oracle, 2e-6);
}

TEST(Mode, ConcentratesAtSqrtTwo) {
  const double root2 = std::sqrt(2.0);
  EXPECT_LT(std::fabs(mode(dim(100)).value() - root2), 0.05);
  const auto big = DistributionSpec(1000, EvalMode::log_domain);
  EXPECT_LT(std::fabs(mode(big).value() - root2), 0.005);

  double previous = 1.0;
  for (int n : {10, 50, 100, 500, 1000}) {
    const double gap = std::fabs(mode(dim(n)).value() - root2);
    EXPECT_LT(gap, previous) << "n = " << n;
    previous = gap;
  }
}

TEST(Mode, MatchesHighPrecisionRoots) {
  // Roots of d/dl ln P_n from mpmath.
  EXPECT_NEAR(mode(dim(10)).value(), 1.30965927960737, 1e-7);
  EXPECT_NEAR(mode(dim(500)).value(), 1.41209413745458, 1e-7);
}

TEST(Mode, RequiresTwoDimensions) { EXPECT_THROW(mode(dim(1)), DomainError); }

}  // namespace
}  // namespace paircorr::theory
