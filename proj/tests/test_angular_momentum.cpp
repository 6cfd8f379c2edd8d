#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "revivals/angular_momentum.hpp"
#include "revivals/bursts.hpp"

using namespace revivals;

constexpr double kPi = std::numbers::pi;

namespace {

TriModeLabel modes(CoherentLabel b, CoherentLabel c) { return {{0.3, -0.2}, b, c}; }

int oracle_truncation(const TriModeLabel& l) {
  return auto_truncation(std::max(l.beta.nu(), l.gamma.nu()));
}

// 4<Lx^2> closed form.
double lx2_closed(const TriModeLabel& l, double chi, double t) {
  const double r2 = l.beta.nu();
  const double r3 = l.gamma.nu();
  const double damping = std::exp(-(r2 + r3) * (1.0 - std::cos(4.0 * chi * t)));
  const double phase = 2.0 * (l.gamma.theta() - l.beta.theta()) + (r2 - r3) * std::sin(4.0 * chi * t);
  return 0.25 * (2.0 * r2 * r3 + r2 + r3 - damping * 2.0 * r2 * r3 * std::cos(phase));
}

double lx1_closed(const TriModeLabel& l, double chi, double t) {
  const double damping =
      std::exp(-(l.beta.nu() + l.gamma.nu()) * (1.0 - std::cos(2.0 * chi * t)));
  const Complex z = std::conj(l.beta.alpha()) * l.gamma.alpha() *
                    std::polar(1.0, (l.beta.nu() - l.gamma.nu()) * std::sin(2.0 * chi * t));
  return damping * z.imag();
}

}  // namespace

TEST(LxExpand, FirstPower) {
  const auto sum = lx_power_expand(1);
  ASSERT_EQ(sum.terms.size(), 2u);
  for (const auto& term : sum.terms) {
    if (term.powers == std::array<int, 4>{1, 0, 0, 1}) {
      EXPECT_NEAR(term.coefficient.imag(), -0.5, 1e-15);
    } else {
      EXPECT_EQ(term.powers, (std::array<int, 4>{0, 1, 1, 0}));
      EXPECT_NEAR(term.coefficient.imag(), 0.5, 1e-15);
    }
    EXPECT_EQ(term.coefficient.real(), 0.0);
  }
}

TEST(LxExpand, SecondPowerTerms) {
  // -(1/4)(b^dag^2 c^2 + c^dag^2 b^2 - b^dag b (c^dag c + 1) - c^dag c (b^dag b + 1))
  std::map<std::array<int, 4>, double> expected = {
      {{2, 0, 0, 2}, -0.25}, {{0, 2, 2, 0}, -0.25}, {{1, 1, 1, 1}, 0.5},
      {{1, 1, 0, 0}, 0.25},  {{0, 0, 1, 1}, 0.25}};
  const auto sum = lx_power_expand(2);
  ASSERT_EQ(sum.terms.size(), expected.size());
  for (const auto& term : sum.terms) {
    ASSERT_TRUE(expected.count(term.powers));
    EXPECT_NEAR(term.coefficient.real(), expected[term.powers], 1e-15);
    EXPECT_NEAR(term.coefficient.imag(), 0.0, 1e-15);
  }
}

TEST(LxExpand, RangeChecked) {
  EXPECT_THROW(lx_power_expand(0), std::invalid_argument);
  EXPECT_THROW(lx_power_expand(5), std::invalid_argument);
  EXPECT_THROW(lx_moment(5, {}, 1.0, 0.0), std::invalid_argument);
}

TEST(LxMoment, VanishesForEqualDiagonalLabels) {
  const auto l = modes({1.5, 1.5}, {1.5, 1.5});
  for (int i = 0; i < 50; ++i) EXPECT_NEAR(lx_moment(1, l, 1.0, 0.063 * i), 0.0, 1e-12);
}

TEST(LxMoment, DiagonalLabelsWithUnequalNuDoNotVanish) {
  // beta* gamma is real, but the relative phase (nu2 - nu3) sin 2 chi t survives.
  const auto l = modes({1.5, 1.5}, {0.7, 0.7});
  const int n = oracle_truncation(l);
  EXPECT_NEAR(lx_moment(1, l, 1.0, 0.0), 0.0, 1e-14);
  const double t = 0.3;
  const double value = lx_moment(1, l, 1.0, t);
  EXPECT_GT(std::abs(value), 0.1);
  EXPECT_NEAR(value, lx_moment_oracle(1, l, 1.0, t, n), 1e-10);
  EXPECT_NEAR(value, lx1_closed(l, 1.0, t), 1e-12);
}

TEST(LxMoment, InitialValueIsImBetaStarGamma) {
  const auto l = modes({1.0, 2.0}, {-0.5, 0.8});
  const double expected = (l.beta.p * l.gamma.q - l.beta.q * l.gamma.p) / 2.0;
  EXPECT_NEAR(lx_moment(1, l, 1.0, 0.0), expected, 1e-14);
}

TEST(LxMoment, MatchesCorrectedClosedForms) {
  const auto l = modes({1.0, 2.0}, {3.0, 0.5});
  for (int i = 0; i < 200; ++i) {
    const double t = kPi * i / 199.0;
    EXPECT_NEAR(lx_moment(1, l, 1.0, t), lx1_closed(l, 1.0, t), 1e-10);
    EXPECT_NEAR(lx_moment(2, l, 1.0, t), lx2_closed(l, 1.0, t), 1e-10);
  }
}

TEST(LxMoment, OracleAgreementAllPowers) {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> coord(-2.4, 2.4);  // per-mode nu <= 5.76
  std::uniform_real_distribution<double> time(0.0, kPi);
  for (int trial = 0; trial < 3; ++trial) {
    const auto l = modes({coord(rng), coord(rng)}, {coord(rng), coord(rng)});
    const int n = oracle_truncation(l);
    for (int k = 1; k <= 4; ++k) {
      for (int s = 0; s < 5; ++s) {
        const double t = time(rng);
        const double closed = lx_moment(k, l, 1.0, t);
        const double brute = lx_moment_oracle(k, l, 1.0, t, n);
        EXPECT_NEAR(closed, brute, 1e-8 * std::max(1.0, std::abs(closed)))
            << "n=" << k << " t=" << t;
      }
    }
  }
}

TEST(LxMoment, OracleReferenceCase) {
  const auto l = modes({1.0, 2.0}, {3.0, 4.0});
  const int n = oracle_truncation(l);
  EXPECT_NEAR(lx_moment(2, l, 1.0, 0.0), lx_moment_oracle(2, l, 1.0, 0.0, n), 1e-8);
  const auto same = modes({1.0, 2.0}, {1.0, 2.0});
  EXPECT_NEAR(lx_moment_oracle(1, same, 1.0, 0.0, n), 0.0, 1e-12);
}

TEST(LxMoment, FullRevivalPeriodicity) {
  const auto l = modes({1.2, -0.4}, {0.5, 2.0});
  const double chi = 10.0 / kPi;
  for (int k = 1; k <= 4; ++k) {
    for (double t : {0.05, 0.17, 0.29}) {
      EXPECT_NEAR(lx_moment(k, l, chi, t), lx_moment(k, l, chi, t + kPi / chi), 1e-9);
    }
  }
}

TEST(LxMoment, HermitianForRandomLabels) {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> coord(-3.0, 3.0);
  for (int trial = 0; trial < 20; ++trial) {
    const auto l = modes({coord(rng), coord(rng)}, {coord(rng), coord(rng)});
    for (int k = 1; k <= 4; ++k) EXPECT_NO_THROW(lx_moment(k, l, 1.0, 0.1 * trial));
  }
}

TEST(AngularMoment, AxesArePermutations) {
  const TriModeLabel l{{0.5, 1.0}, {1.5, -0.3}, {-0.8, 0.9}};
  const TriModeLabel to_x_for_y{{}, l.gamma, l.alpha};
  const TriModeLabel to_x_for_z{{}, l.alpha, l.beta};
  for (int k = 1; k <= 4; ++k) {
    EXPECT_DOUBLE_EQ(angular_moment(Axis::y, k, l, 1.0, 0.4), lx_moment(k, to_x_for_y, 1.0, 0.4));
    EXPECT_DOUBLE_EQ(angular_moment(Axis::z, k, l, 1.0, 0.4), lx_moment(k, to_x_for_z, 1.0, 0.4));
  }
  EXPECT_NEAR(angular_moment(Axis::z, 2, l, 1.0, 0.4),
              angular_moment_oracle(Axis::z, 2, l, 1.0, 0.4, 30), 1e-8);
}

TEST(LxOracle, MemoryGuard) {
  EXPECT_THROW(lx_moment_oracle(1, modes({1, 1}, {1, 1}), 1.0, 0.0, 2000), std::length_error);
}

namespace {

ObservableTrace lx_trace(int k, const TriModeLabel& l, double chi) {
  const auto times = linspace(0.0, kPi / chi, 20001);
  return sample_trace(times, [&](double t) { return lx_moment(k, l, chi, t); }, "Lx^n");
}

// beta at 45 degrees and gamma at 135 degrees: the second-moment dip is maximal.
TriModeLabel perpendicular(double nu) {
  const double a = std::sqrt(nu);
  return modes({a, a}, {-a, a});
}

TriModeLabel equal(double nu) {
  const double a = std::sqrt(nu);
  return modes({a, a}, {a, a});
}

}  // namespace

TEST(LxBursts, SecondPowerHalfRevival) {
  const auto report = detect_bursts(lx_trace(2, perpendicular(50.0), 1.0), kPi, 4);
  EXPECT_TRUE(report.detected_at(1, 2));
  EXPECT_FALSE(report.detected_at(1, 3));
  EXPECT_FALSE(report.detected_at(1, 4));
}

TEST(LxBursts, ThirdPowerThirdRevivals) {
  // At nu = 50 per mode the T/3 dips are wider than the window and stay
  // below threshold; they still dominate the other fractional windows.
  const auto weak = detect_bursts(lx_trace(3, perpendicular(50.0), 1.0), kPi, 4);
  EXPECT_GT(weak.find(1, 3)->ratio, weak.find(1, 2)->ratio);
  EXPECT_GT(weak.find(2, 3)->ratio, weak.find(1, 4)->ratio);
  const auto strong = detect_bursts(lx_trace(3, perpendicular(200.0), 1.0), kPi, 4);
  EXPECT_TRUE(strong.detected_at(1, 3));
  EXPECT_TRUE(strong.detected_at(2, 3));
  EXPECT_FALSE(strong.detected_at(1, 2));
}

TEST(LxBursts, EqualLabelsThirdAndFourthPowers) {
  const auto three = detect_bursts(lx_trace(3, equal(100.0), 1.0), kPi, 4);
  EXPECT_EQ(three.find(1, 3)->ratio, 0.0);
  EXPECT_EQ(three.find(2, 3)->ratio, 0.0);
  const auto four = detect_bursts(lx_trace(4, equal(100.0), 1.0), kPi, 4);
  EXPECT_TRUE(four.detected_at(1, 4));
  EXPECT_TRUE(four.detected_at(3, 4));
  EXPECT_FALSE(four.detected_at(1, 3));
}
