#include <gtest/gtest.h>

#include <set>

#include "braidrep/collinearity.hpp"
#include "support/generators.hpp"

namespace braidrep {
namespace {

Path still(Point2 p) { return {{0.0, p}, {1.0, p}}; }

struct SampledEvent {
  double time;
  std::array<std::size_t, 3> sorted;
  std::size_t middle;
};

// Dense-sampling oracle: sign changes of the raw orientation determinant on a
// uniform grid, with the middle point taken from pairwise distances.
std::vector<SampledEvent> sample_events(const TrajectorySet& ts, std::size_t samples) {
  std::vector<SampledEvent> out;
  const std::size_t n = ts.points();
  for (std::size_t a = 1; a <= n; ++a)
    for (std::size_t b = a + 1; b <= n; ++b)
      for (std::size_t c = b + 1; c <= n; ++c) {
        auto f = [&](double t) {
          const Point2 pa = ts.position(a, t);
          return cross(ts.position(b, t) - pa, ts.position(c, t) - pa);
        };
        double prev = f(0.0);
        for (std::size_t k = 1; k <= samples; ++k) {
          const double t = static_cast<double>(k) / static_cast<double>(samples);
          const double cur = f(t);
          if ((prev < 0) != (cur < 0)) {
            const double tm = t - 0.5 / static_cast<double>(samples);
            const double dab = norm(ts.position(a, tm) - ts.position(b, tm));
            const double dac = norm(ts.position(a, tm) - ts.position(c, tm));
            const double dbc = norm(ts.position(b, tm) - ts.position(c, tm));
            const std::size_t middle = (dab >= dac && dab >= dbc) ? c : (dac >= dbc ? b : a);
            out.push_back({tm, {a, b, c}, middle});
          }
          prev = cur;
        }
      }
  std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) { return l.time < r.time; });
  return out;
}

void expect_matches_oracle(const TrajectorySet& ts) {
  const auto events = detect_events(ts);
  const auto sampled = sample_events(ts, 20000);
  ASSERT_EQ(events.size(), sampled.size());
  for (std::size_t e = 0; e < events.size(); ++e) {
    std::array<std::size_t, 3> sorted = events[e].paths;
    std::sort(sorted.begin(), sorted.end());
    EXPECT_EQ(sorted, sampled[e].sorted) << "event " << e;
    EXPECT_EQ(events[e].paths[1], sampled[e].middle) << "event " << e;
    EXPECT_NEAR(events[e].time, sampled[e].time, 1e-4) << "event " << e;
  }
}

// Every point wanders through two random waypoints and returns home.
TrajectorySet random_loops(testing::Rng& rng, std::size_t n) {
  std::uniform_real_distribution<double> coord(-2.0, 2.0);
  std::vector<Path> paths;
  for (std::size_t p = 1; p <= n; ++p) {
    const Point2 home{coord(rng), coord(rng)};
    paths.push_back({{0.0, home}, {0.3 + 0.01 * static_cast<double>(p), {coord(rng), coord(rng)}},
                     {0.7 - 0.01 * static_cast<double>(p), {coord(rng), coord(rng)}}, {1.0, home}});
  }
  return TrajectorySet(std::move(paths));
}

TEST(SigmaMotion, OnlyTheSwappedPairMoves) {
  const TrajectorySet ts = sigma_motion(5, 1);
  for (std::size_t p = 3; p <= 5; ++p) EXPECT_EQ(ts.path(p).size(), 2u);
  EXPECT_EQ(ts.path(1).back().pos, circle_position(5, 2));
  EXPECT_EQ(ts.path(2).back().pos, circle_position(5, 1));
  EXPECT_EQ(ts.final_labels(), Permutation::transposition(5, 1));
  EXPECT_THROW(sigma_motion(5, 5), DomainError);
  EXPECT_THROW(sigma_motion(2, 1), DomainError);
}

TEST(Detect, SigmaOneAtFive) {
  const auto events = detect_events(sigma_motion(5, 1));
  ASSERT_EQ(events.size(), 3u);
  EXPECT_EQ(events[0].triple, (GnGenerator{5, 2, 1}));
  EXPECT_EQ(events[1].triple, (GnGenerator{4, 2, 1}));
  EXPECT_EQ(events[2].triple, (GnGenerator{3, 2, 1}));
  EXPECT_NEAR(events[1].time, 0.5, 1e-9);
  for (std::size_t e = 1; e < events.size(); ++e) EXPECT_LT(events[e - 1].time, events[e].time);
}

TEST(Detect, SigmaTwoAtFour) {
  const GnWord w = events_to_word(detect_events(sigma_motion(4, 2)), 4);
  EXPECT_EQ(w, phi_generator(4, 2).word);
  ASSERT_EQ(w.length(), 2u);
  EXPECT_EQ(w.letters()[0].gen.i, 1u);
  EXPECT_EQ(w.letters()[1].gen.i, 4u);
}

TEST(Detect, StationaryHasNoEvents) {
  const TrajectorySet ts({still({0, 0}), still({1, 0.1}), still({0.3, 1}), still({-0.8, 0.6})});
  EXPECT_TRUE(detect_events(ts).empty());
}

TEST(Detect, HandBuiltLoop) {
  // Point 3 drops through the segment 1-2, then comes back up outside it.
  const TrajectorySet ts({still({-1, 0}), still({1, 0}),
                          {{0.0, {0, 1}}, {0.4, {0, -1}}, {0.6, {3, -1}}, {0.8, {3, 1}}, {1.0, {0, 1}}}});
  const auto events = detect_events(ts);
  ASSERT_EQ(events.size(), 2u);
  EXPECT_NEAR(events[0].time, 0.2, 1e-10);
  EXPECT_NEAR(events[1].time, 0.7, 1e-10);
  EXPECT_EQ(events[0].triple, (GnGenerator{1, 3, 2}));
  EXPECT_EQ(events[1].triple, (GnGenerator{1, 2, 3}));
}

TEST(Detect, TangencyIsDegenerate) {
  const TrajectorySet ts({still({-1, 0}), still({1, 0}), {{0.0, {0, 1}}, {0.5, {0.2, 0}}, {1.0, {0, 1}}}});
  EXPECT_THROW(detect_events(ts), DegenerateEventError);
}

TEST(Detect, CollinearStartIsDegenerate) {
  const TrajectorySet ts({still({-1, 0}), still({1, 0}), still({3, 0})});
  EXPECT_THROW(detect_events(ts), DegenerateEventError);
}

TEST(Detect, Deterministic) {
  const auto a = detect_events(sigma_motion(6, 3));
  const auto b = detect_events(sigma_motion(6, 3));
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t e = 0; e < a.size(); ++e) {
    EXPECT_EQ(a[e].time, b[e].time);
    EXPECT_EQ(a[e].triple, b[e].triple);
  }
}

TEST(Detect, MatchesSamplingOracleOnGeneratorMotions) {
  for (std::size_t n = 3; n <= 6; ++n)
    for (std::size_t i = 1; i < n; ++i) {
      SCOPED_TRACE("n=" + std::to_string(n) + " i=" + std::to_string(i));
      expect_matches_oracle(sigma_motion(n, i, 64));
    }
}

TEST(Detect, MatchesSamplingOracleOnRandomLoops) {
  testing::Rng rng(71);
  for (int trial = 0; trial < 20; ++trial) {
    SCOPED_TRACE("trial " + std::to_string(trial));
    expect_matches_oracle(random_loops(rng, 5));
  }
}

TEST(Detect, ReversedMotionGivesInverseGenerator) {
  for (std::size_t n = 3; n <= 6; ++n)
    for (std::size_t i = 1; i < n; ++i) {
      const TrajectorySet back = sigma_motion(n, i).reversed();
      const GnWord w = events_to_word(detect_events(back), n);
      EXPECT_TRUE(free_equal(w, phi_generator(n, i, -1).word)) << w.to_string();
    }
}

TEST(Trajectories, Validation) {
  auto single = [](Path p) { return TrajectorySet(std::vector<Path>{std::move(p)}); };
  EXPECT_THROW(single({{0.1, {0, 0}}, {1.0, {0, 0}}}), DomainError);
  EXPECT_THROW(single({{0.0, {0, 0}}, {0.9, {0, 0}}}), DomainError);
  EXPECT_THROW(single({{0.0, {0, 0}}, {0.5, {0, 0}}, {0.5, {0, 0}}, {1.0, {0, 0}}}), DomainError);
  EXPECT_THROW(TrajectorySet({still({0, 0}), still({0, 0})}), DomainError);
  EXPECT_THROW(TrajectorySet({still({0, 0}), {{0.0, {1, 0}}, {1.0, {2, 0}}}}), DomainError);
  EXPECT_THROW(TrajectorySet({still({0, 0}), still({std::nan(""), 0})}), DomainError);
}

TEST(Calibration, ExactForSmallN) {
  for (std::size_t n = 3; n <= 6; ++n) {
    const CalibrationReport r = calibrate_against_phi(n);
    EXPECT_TRUE(r.all_exact()) << "n=" << n;
    ASSERT_EQ(r.entries.size(), n - 1);
    for (const auto& e : r.entries) EXPECT_EQ(e.events, n - 2);
  }
}

}  // namespace
}  // namespace braidrep
