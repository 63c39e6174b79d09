#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <sstream>

#include "pwlmap/oracle.hpp"
#include "pwlmap/patterngen.hpp"
#include "support.hpp"

using namespace pwlmap;
using namespace pwlmap::testing;

namespace {

Pattern P(const char* s) { return Pattern::parse(s); }
const Params half_third{Rational(1, 2), Rational(1, 3)};
const Params example21{Rational(17, 20), Rational(4, 5)};

}  // namespace

TEST(Step, WorkedExample) {
  const RealParams p = RealParams::from(half_third);
  EXPECT_NEAR(step(-6.0 / 25, p, 0.6), 12.0 / 25, 1e-15);
  EXPECT_NEAR(step(12.0 / 25, p, 0.6), -6.0 / 25, 1e-15);
  EXPECT_EQ(step(0.0, p, 0.6), 0.6);
  EXPECT_EQ(step(1e-300, p, 0.6), p.b * 1e-300 + 0.6 - 1);
}

TEST(Regime, NegativeGap) {
  const Regime five = classify_regime(half_third, Rational(3, 5));
  EXPECT_EQ(five.case_number, 5);
  EXPECT_FALSE(five.x_left);
  EXPECT_FALSE(five.x_right);

  const Regime four = classify_regime(half_third, Rational(-1, 2));
  EXPECT_EQ(four.case_number, 4);
  ASSERT_TRUE(four.x_left);
  EXPECT_EQ(*four.x_left, Rational(-1));

  const Regime six = classify_regime(half_third, Rational(3, 2));
  EXPECT_EQ(six.case_number, 6);
  ASSERT_TRUE(six.x_right);
  EXPECT_EQ(*six.x_right, Rational(3, 4));
}

TEST(Regime, PositiveGap) {
  const Params p{Rational(1, 2), Rational(1, 3), Rational(1)};
  EXPECT_EQ(classify_regime(p, Rational(1, 2)).case_number, 1);
  const Regime both = classify_regime(p, Rational(-1, 2));
  EXPECT_EQ(both.case_number, 2);
  EXPECT_TRUE(both.x_left && both.x_right);
  EXPECT_EQ(classify_regime(p, Rational(-2)).case_number, 3);
}

TEST(Regime, BorderCollisionsAtZeroAndMinusL) {
  // x_L reaches the border at mu = 0, x_R at mu = -l.
  for (int i = -300; i <= 300; ++i) {
    const Rational mu(i, 100);
    const int c = classify_regime(half_third, mu).case_number;
    if (mu <= 0) EXPECT_EQ(c, 4);
    else if (mu <= 1) EXPECT_EQ(c, 5);
    else EXPECT_EQ(c, 6);
  }
  for (int i = -300; i <= 300; ++i) {
    const Params p{Rational(1, 2), Rational(1, 3), Rational(3, 2)};
    const Rational mu(i, 100);
    const int c = classify_regime(p, mu).case_number;
    if (mu > 0) EXPECT_EQ(c, 1);
    else if (mu > Rational(-3, 2)) EXPECT_EQ(c, 2);
    else EXPECT_EQ(c, 3);
  }
}

TEST(FindOrbit, LRWorkedExample) {
  const OrbitReport r = find_orbit(RealParams::from(half_third), 0.6);
  ASSERT_TRUE(r.found);
  EXPECT_EQ(r.period, 2);
  EXPECT_TRUE(cyclically_equal(r.pattern, P("LR")));
  EXPECT_LE(r.residual, 1e-10);
  EXPECT_FALSE(r.border_ambiguous);
  const double lo = std::min(r.points[0], r.points[1]);
  const double hi = std::max(r.points[0], r.points[1]);
  EXPECT_NEAR(lo, -0.24, 1e-10);
  EXPECT_NEAR(hi, 0.48, 1e-10);
}

TEST(FindOrbit, TwentyOneSymbolExample) {
  const OrbitReport r = find_orbit(RealParams::from(example21), 0.3655);
  ASSERT_TRUE(r.found);
  EXPECT_EQ(r.period, 21);
  EXPECT_TRUE(cyclically_equal(r.pattern, P("RLRLLRLLRLRLLRLRLLRLL")));
}

TEST(FindOrbit, AtomicMidpoint) {
  const MuInterval iv = atomic_interval_L(3, half_third);
  const OrbitReport r = find_orbit(RealParams::from(half_third), to_double(iv.midpoint()));
  ASSERT_TRUE(r.found);
  EXPECT_EQ(r.period, 4);
  EXPECT_EQ(canonical(r.pattern), P("LLLR"));
}

TEST(FindOrbit, FixedPointOutsideOrbitRegime) {
  const OrbitReport r = find_orbit(RealParams::from(half_third), -0.5);
  ASSERT_TRUE(r.found);
  EXPECT_EQ(r.period, 1);
  EXPECT_NEAR(r.points[0], -1.0, 1e-12);
  EXPECT_EQ(r.pattern, P("L"));
}

TEST(FindOrbit, ReportsFailureWhenPeriodTooLarge) {
  OrbitOptions opt;
  opt.max_period = 10;
  const OrbitReport r = find_orbit(RealParams::from(example21), 0.3655, opt);
  EXPECT_FALSE(r.found);
  EXPECT_EQ(r.period, 0);
}

TEST(FindOrbit, ContractionMakesTheStartIrrelevant) {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> u(0.01, 0.99), start(-5, 5);
  for (int trial = 0; trial < 100; ++trial) {
    const RealParams p{u(rng), u(rng), -1};
    const double mu = u(rng);
    double x = start(rng), y = start(rng);
    // Both trajectories end up on the unique attractor; compare orbits as sets
    // through the distance of y to x's recent history.
    for (int i = 0; i < 20000; ++i) {
      x = step(x, p, mu);
      y = step(y, p, mu);
    }
    double best = 1e300;
    double z = x;
    for (int i = 0; i < 2000; ++i) {
      best = std::min(best, std::abs(z - y));
      z = step(z, p, mu);
    }
    EXPECT_LE(best, 1e-10);
  }
}

TEST(FindOrbit, AgreesWithAnalyticIntervals) {
  for (const Params& params : {half_third, example21}) {
    const RealParams real = RealParams::from(params);
    for (const Pattern& p : generated_up_to(10)) {
      const MuInterval iv = mu_interval(p, params);
      const OrbitReport r = find_orbit(real, to_double(iv.midpoint()));
      ASSERT_TRUE(r.found) << p;
      EXPECT_EQ(r.period, static_cast<int>(p.size())) << p;
      EXPECT_TRUE(cyclically_equal(r.pattern, p)) << p << " got " << r.pattern;
      EXPECT_LE(r.residual, 1e-10);
      EXPECT_FALSE(r.border_ambiguous);
    }
  }
}

TEST(FindOrbit, ClosedEndTouchesTheBorder) {
  for (const Params& params : {half_third, example21}) {
    const RealParams real = RealParams::from(params);
    for (const Pattern& p : generated_up_to(10)) {
      const MuInterval iv = mu_interval(p, params);
      const double hi = to_double(iv.hi);
      const double guard = std::min(1e-9, to_double(iv.hi - iv.lo) / 4);
      // At mu2 some orbit point sits on x = 0; the float coding of that point
      // is undecidable, so the report must flag it.
      EXPECT_TRUE(find_orbit(real, hi).border_ambiguous) << p;
      const OrbitReport inside = find_orbit(real, hi - guard);
      EXPECT_TRUE(inside.found && cyclically_equal(inside.pattern, p)) << p;
      const OrbitReport beyond = find_orbit(real, hi + 1e-9);
      EXPECT_FALSE(beyond.found && cyclically_equal(beyond.pattern, p)) << p;
    }
  }
}

TEST(Sweep, PlateausStayInsideAnalyticIntervals) {
  const RealParams real = RealParams::from(half_third);
  const auto records = sweep(real, 0.01, 0.99, 1000);
  ASSERT_EQ(records.size(), 1000u);
  const double h = 0.98 / 999;
  std::map<Pattern, std::pair<double, double>> extent;
  for (const SweepRecord& r : records) {
    ASSERT_TRUE(r.orbit.found) << r.mu;
    const Pattern key = canonical(r.orbit.pattern);
    const MuInterval iv = mu_interval(key, half_third);
    EXPECT_GT(r.mu, to_double(iv.lo) - h) << key;
    EXPECT_LT(r.mu, to_double(iv.hi) + h) << key;
    auto [it, inserted] = extent.try_emplace(key, r.mu, r.mu);
    it->second.first = std::min(it->second.first, r.mu);
    it->second.second = std::max(it->second.second, r.mu);
  }
  // The LR plateau spans (1/3, 3/4] up to grid resolution.
  ASSERT_TRUE(extent.contains(P("LR")));
  EXPECT_NEAR(extent[P("LR")].first, 1.0 / 3, h);
  EXPECT_NEAR(extent[P("LR")].second, 0.75, h);
  // The period-5 molecule between LLR and LR shows up.
  EXPECT_TRUE(extent.contains(P("LLRLR")));
  // Sweep order is the grid order.
  for (std::size_t i = 1; i < records.size(); ++i) EXPECT_LT(records[i - 1].mu, records[i].mu);
}

TEST(Sweep, CsvLayout) {
  const auto records = sweep(RealParams::from(half_third), 0.5, 0.6, 2);
  std::ostringstream os;
  write_csv(os, records);
  std::istringstream is(os.str());
  std::string header, first, second;
  std::getline(is, header);
  std::getline(is, first);
  std::getline(is, second);
  EXPECT_EQ(header, "mu,period,pattern,residual,flags");
  EXPECT_EQ(first.substr(0, 9), "0.5,2,LR,");
  EXPECT_EQ(second.substr(0, 9), "0.6,2,LR,");
  EXPECT_THROW(sweep(RealParams::from(half_third), 0.6, 0.5, 10), error);
  EXPECT_THROW(sweep(RealParams::from(half_third), 0.5, 0.6, 1), error);
}

TEST(Sweep, MissingOrbitsRecordedAsPeriodZero) {
  OrbitOptions opt;
  opt.max_period = 3;
  const auto records = sweep(RealParams::from(example21), 0.3651, 0.3655, 3, opt);
  std::ostringstream os;
  write_csv(os, records);
  EXPECT_NE(os.str().find(",0,,,NoOrbitFound"), std::string::npos);
}
