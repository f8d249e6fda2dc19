#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include <gtest/gtest.h>

#include "latbench/error.hpp"
#include "latbench/trajectory/io.hpp"
#include "latbench/trajectory/path.hpp"
#include "latbench/trajectory/suite.hpp"
#include "latbench/trajectory/trajectory.hpp"
#include "support/gen.hpp"

namespace latbench::trajectory {
namespace {

// ----- path construction -----

TEST(BuildPath, StraightSamples) {
  const auto p = build_path({Straight{100, std::nullopt}}, 1.0);
  ASSERT_EQ(p.size(), 101u);
  for (const auto& q : p) EXPECT_EQ(q.curvature, 0.0);
  EXPECT_NEAR(p.back().x, 100.0, 1e-12);
  EXPECT_NEAR(p.back().s, 100.0, 1e-12);
}

TEST(BuildPath, HalfCircleEndsAtDiameter) {
  const auto p = build_path({Arc{50, std::numbers::pi, std::nullopt}}, 0.5);
  EXPECT_NEAR(std::hypot(p.back().x - p.front().x, p.back().y - p.front().y), 100.0, 1e-6);
  EXPECT_NEAR(p.back().y, 100.0, 1e-6);  // positive radius turns left
  EXPECT_NEAR(p.back().heading, std::numbers::pi, 1e-9);
}

TEST(BuildPath, ClothoidCurvatureLinearAndHeadingIntegral) {
  const auto p = build_path({Clothoid{0, 0.02, 50, std::nullopt}}, 0.5);
  for (const auto& q : p) EXPECT_NEAR(q.curvature, 0.02 * q.s / 50.0, 1e-12);
  EXPECT_NEAR(p.back().heading, 0.5, 1e-4);
  // Position against a fine midpoint quadrature of the Fresnel integrals.
  double x = 0, y = 0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    const double s = (i + 0.5) * 50.0 / n;
    const double th = 0.01 * s * s / 50.0;
    x += std::cos(th) * 50.0 / n;
    y += std::sin(th) * 50.0 / n;
  }
  EXPECT_NEAR(p.back().x, x, 1e-6);
  EXPECT_NEAR(p.back().y, y, 1e-6);
}

TEST(BuildPath, HeadingMismatchIsAConstructionError) {
  EXPECT_THROW(build_path({Straight{10, std::nullopt}, Straight{10, 0.3}}, 0.5), ConstructionError);
  EXPECT_NO_THROW(build_path({Straight{10, 0.0}, Arc{20, 0.5, 0.0}, Straight{10, 0.5}}, 0.5));
  EXPECT_THROW(build_path({Arc{0, 1, std::nullopt}}, 0.5), ConstructionError);
  EXPECT_THROW(build_path({Straight{10, std::nullopt}}, 0.0), ConstructionError);
}

TEST(BuildPath, EndPoseAgreesWithSamples) {
  const std::vector<Segment> segs{Straight{12.3, std::nullopt}, Arc{-20, 0.7, std::nullopt},
                                  Clothoid{-0.05, 0.01, 17.1, std::nullopt}};
  const auto p = build_path(segs, 0.5);
  const auto e = end_pose(segs);
  EXPECT_NEAR(p.back().x, e.x, 1e-9);
  EXPECT_NEAR(p.back().y, e.y, 1e-9);
  EXPECT_NEAR(p.back().heading, e.heading, 1e-12);
}

TEST(BuildPath, HalfStepResamplingKeepsCurvature) {
  const std::vector<Segment> segs = curve(40, 1.0, 15);
  const auto coarse = build_path(segs, 0.5);
  const auto fine = build_path(segs, 0.25);
  for (std::size_t i = 0; i < coarse.size(); ++i) EXPECT_NEAR(fine[2 * i].curvature, coarse[i].curvature, 1e-3);
}

TEST(WrapAngle, IntoPrincipalRange) {
  // Odd multiples of pi sit on the branch cut; either end is acceptable.
  EXPECT_NEAR(std::abs(wrap_angle(3 * std::numbers::pi)), std::numbers::pi, 1e-12);
  EXPECT_NEAR(wrap_angle(3 * std::numbers::pi - 0.1), std::numbers::pi - 0.1, 1e-12);
  EXPECT_NEAR(wrap_angle(-0.5), -0.5, 1e-15);
  EXPECT_NEAR(wrap_angle(2 * std::numbers::pi + 0.1), 0.1, 1e-12);
}

// ----- speed profile -----

TEST(SpeedProfile, StraightSaturatesAtLimit) {
  const auto p = build_path({Straight{400, std::nullopt}}, 0.5);
  const auto v = plan_speed_profile(p, {35, 1, 1, 1});
  EXPECT_NEAR(*std::max_element(v.begin(), v.end()), 35 / 3.6, 1e-9);
  EXPECT_NEAR(35 / 3.6, 9.72, 5e-3);
  EXPECT_EQ(v.front(), 0.0);
  EXPECT_EQ(v.back(), 0.0);
}

TEST(SpeedProfile, ArcCruisesAtLateralLimit) {
  const auto p = build_path({Arc{100, 3.0, std::nullopt}}, 0.5);
  const auto v = plan_speed_profile(p, {300, 10, 10, 4}, {20, 20});
  for (double x : v) EXPECT_NEAR(x, 20.0, 1e-9);
}

TEST(SpeedProfile, ForwardPassIsConstantAcceleration) {
  const auto p = build_path({Straight{300, std::nullopt}}, 0.5);
  const auto v = plan_speed_profile(p, {200, 1, 1, 1});
  for (std::size_t i = 0; i < p.size() / 3; ++i) EXPECT_NEAR(v[i], std::sqrt(2 * p[i].s), 1e-9);
}

TEST(SpeedProfile, BoundarySpeedsAreCapped) {
  const auto p = build_path({Straight{100, std::nullopt}}, 0.5);
  const auto v = plan_speed_profile(p, {36, 1, 1, 1}, {50, 3});
  EXPECT_NEAR(v.front(), 10.0, 1e-9);
  EXPECT_NEAR(v.back(), 3.0, 1e-9);
}

TEST(SpeedProfileProperty, RaisingALimitNeverSlows) {
  testing::for_all(41, 20, [](testing::Gen& g) {
    std::vector<Segment> segs{Straight{g.real(10, 80), std::nullopt}};
    for (int k = 0; k < 3; ++k) {
      const double radius = g.real(15, 150), turn = g.real(0.3, 1.5);
      const auto c = curve((g.coin() ? 1 : -1) * radius, turn, g.real(0.1, 0.4) * turn * radius);
      segs.insert(segs.end(), c.begin(), c.end());
      segs.push_back(Straight{g.real(10, 80), std::nullopt});
    }
    const auto p = build_path(segs, 0.5);
    const DrivingLimits base{g.real(30, 100), g.real(0.5, 2), g.real(0.5, 3), g.real(1, 4)};
    const auto v0 = plan_speed_profile(p, base);
    for (int field = 0; field < 4; ++field) {
      DrivingLimits more = base;
      double* f[] = {&more.v_max_kmh, &more.a_x_max, &more.a_x_min, &more.a_y_max};
      *f[field] *= g.real(1.01, 2.0);
      const auto v1 = plan_speed_profile(p, more);
      for (std::size_t i = 0; i < p.size(); ++i) ASSERT_GE(v1[i], v0[i] - 1e-9) << g.where() << " field " << field;
    }
  });
}

// ----- straight sections -----

Trajectory constant_speed(const std::vector<Segment>& segs, double speed) {
  Trajectory t;
  t.path = build_path(segs, 0.5);
  t.speed.assign(t.path.size(), speed);
  t.limits = {200, 1, 1, 10};
  return t;
}

TEST(StraightSections, AllStraightIsOneSection) {
  const auto t = constant_speed({Straight{200, std::nullopt}}, 10);
  const auto s = straight_sections(t);
  ASSERT_EQ(s.size(), 1u);
  EXPECT_NEAR(s[0].s_start, 0.0, 1e-12);
  EXPECT_NEAR(s[0].s_end, 200.0, 1e-12);
}

TEST(StraightSections, ShortStraightIsDropped) {
  EXPECT_TRUE(straight_sections(constant_speed({Straight{40, std::nullopt}}, 10)).empty());
}

TEST(StraightSections, ArcSplitsTwoStraights) {
  const auto t =
      constant_speed({Straight{100, std::nullopt}, Arc{50, 2.0, std::nullopt}, Straight{100, std::nullopt}}, 10);
  const auto s = straight_sections(t);
  ASSERT_EQ(s.size(), 2u);
  EXPECT_NEAR(s[0].s_start, 0.0, 1e-9);
  EXPECT_NEAR(s[0].s_end, 100.0, 0.5 + 1e-9);
  EXPECT_NEAR(s[1].s_start, 200.0, 0.5 + 1e-9);
  EXPECT_NEAR(s[1].s_end, 300.0, 1e-9);
}

TEST(Traversal, ConstantSpeedTime) {
  const auto t = constant_speed({Straight{100, std::nullopt}}, 10);
  EXPECT_NEAR(traversal_time(t, 0, t.path.size() - 1), 10.0, 1e-9);
}

TEST(Mirror, FlipsLateralQuantities) {
  const auto t = benchmark_trajectory("T3");
  const auto m = mirrored(t);
  ASSERT_EQ(m.path.size(), t.path.size());
  for (std::size_t i = 0; i < t.path.size(); i += 17) {
    EXPECT_EQ(m.path[i].x, t.path[i].x);
    EXPECT_EQ(m.path[i].y, -t.path[i].y);
    EXPECT_EQ(m.path[i].curvature, -t.path[i].curvature);
    EXPECT_EQ(m.speed[i], t.speed[i]);
  }
}

// ----- benchmark suite -----

TEST(Suite, LengthsAndPeakSpeeds) {
  const double lengths[] = {471.0, 1391.8, 354.3, 500.0, 2119.6, 1959.3};
  const auto suite = benchmark_suite();
  ASSERT_EQ(suite.size(), 6u);
  for (std::size_t i = 0; i < 6; ++i) {
    const auto& t = suite[i];
    EXPECT_EQ(t.name, "T" + std::to_string(i + 1));
    EXPECT_NEAR(t.length(), lengths[i], 0.02 * lengths[i]) << t.name;
    const double peak = *std::max_element(t.speed.begin(), t.speed.end());
    EXPECT_NEAR(peak, t.limits.v_max(), 0.05 * t.limits.v_max()) << t.name;
    EXPECT_FALSE(t.purpose.empty());
  }
  EXPECT_NEAR(suite[0].limits.v_max_kmh, 35.0, 1e-12);
  EXPECT_NEAR(suite[3].limits.v_max_kmh, 120.0, 1e-12);
  EXPECT_DOUBLE_EQ(suite[3].limits.a_y_max, 4.0);
  EXPECT_TRUE(suite[0].used_for_tuning && suite[4].used_for_tuning && suite[5].used_for_tuning);
  EXPECT_FALSE(suite[1].used_for_tuning);
}

TEST(Suite, PlannedProfilesRespectLimits) {
  for (const auto& t : benchmark_suite()) {
    double peak_ay = 0.0;
    for (std::size_t i = 0; i < t.path.size(); ++i) {
      const double ay = t.speed[i] * t.speed[i] * std::abs(t.path[i].curvature);
      EXPECT_LE(ay, t.limits.a_y_max * (1 + 1e-9)) << t.name;
      EXPECT_LE(t.speed[i], t.limits.v_max() + 1e-9);
      peak_ay = std::max(peak_ay, ay);
      if (i == 0) continue;
      const double ds = t.path[i].s - t.path[i - 1].s;
      const double ax = (t.speed[i] * t.speed[i] - t.speed[i - 1] * t.speed[i - 1]) / (2 * ds);
      EXPECT_LE(ax, t.limits.a_x_max * 1.02) << t.name << " i=" << i;
      EXPECT_GE(ax, -t.limits.a_x_min * 1.02) << t.name << " i=" << i;
    }
    // The lateral limit binds somewhere on every analog.
    EXPECT_GT(peak_ay, 0.98 * t.limits.a_y_max) << t.name;
  }
}

TEST(Suite, UnknownNameThrows) { EXPECT_THROW(benchmark_trajectory("T7"), ArgumentError); }

TEST(Suite, EveryAnalogHasStraightSections) {
  for (const auto& t : benchmark_suite()) EXPECT_FALSE(straight_sections(t).empty()) << t.name;
}

// ----- CSV -----

TEST(TrajectoryCsv, RoundTrip) {
  const auto t = benchmark_trajectory("T1");
  std::stringstream ss;
  write_trajectory_csv(ss, t, "# provenance");
  const auto back = read_trajectory_csv(ss, "T1", t.limits);
  ASSERT_EQ(back.path.size(), t.path.size());
  for (std::size_t i = 0; i < t.path.size(); i += 13) {
    EXPECT_NEAR(back.path[i].x, t.path[i].x, 1e-9);
    EXPECT_NEAR(back.path[i].curvature, t.path[i].curvature, 1e-12);
    EXPECT_NEAR(back.speed[i], t.speed[i], 1e-9);
  }
}

TEST(TrajectoryCsv, BadHeaderRejected) {
  std::stringstream ss("a,b,c\n1,2,3\n");
  EXPECT_ANY_THROW(read_trajectory_csv(ss, "x", {}));
}

TEST(Limits, JsonRoundTrip) {
  const DrivingLimits l{66, 2.2, 3, 4};
  const auto back = limits_from_json(limits_to_json(l));
  EXPECT_EQ(back.v_max_kmh, 66);
  EXPECT_EQ(back.a_x_min, 3);
  const auto manifest = suite_manifest(benchmark_suite());
  EXPECT_EQ(manifest["trajectories"].size(), 6u);
}

}  // namespace
}  // namespace latbench::trajectory
