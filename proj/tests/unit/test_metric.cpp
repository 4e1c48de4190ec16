#include <chainproj/metric.hpp>
#include <chainproj/projection.hpp>

#include <gtest/gtest.h>

#include "expect_error.hpp"
#include "oracle.hpp"

using namespace chainproj;

namespace {

MetricConfig line3() {
  MetricConfig c;
  c.positions = {"a", "b", "c"};
  c.sq_dist = {{0, 1, 4}, {1, 0, 1}, {4, 1, 0}};
  return c;
}

}  // namespace

TEST(Metric, TriangleInequalityInSquaredForm) {
  EXPECT_TRUE(satisfies_triangle(4, 1, 1));
  EXPECT_FALSE(satisfies_triangle(9, 1, 1));
  EXPECT_TRUE(satisfies_triangle(Rational(49, 4), 4, Rational(9, 4)));
  EXPECT_FALSE(satisfies_triangle(Rational(50, 4), 4, Rational(9, 4)));
}

TEST(Metric, InvalidMetricRejected) {
  MetricConfig c = line3();
  c.sq_dist[0][2] = c.sq_dist[2][0] = 9;  // 3 > 1 + 1
  EXPECT_ERROR_CODE(c.validate(), ErrorCode::InvalidMetric);

  MetricConfig asym = line3();
  asym.sq_dist[0][1] = 2;
  EXPECT_ERROR_CODE(asym.validate(), ErrorCode::InvalidMetric);

  MetricConfig zero = line3();
  zero.sq_dist[0][1] = zero.sq_dist[1][0] = 0;
  EXPECT_ERROR_CODE(zero.validate(), ErrorCode::InvalidMetric);

  EXPECT_NO_THROW(line3().validate());
}

TEST(Metric, CausalRuleExamples) {
  MetricPoset mp = build_metric_poset(line3(), {{"a", tick_range(4), ""}, {"c", tick_range(4), ""}});
  EventId a0 = mp.event_at("a", 0), c1 = mp.event_at("c", 1), c2 = mp.event_at("c", 2);
  EXPECT_FALSE(mp.poset.leq(a0, c1));
  EXPECT_TRUE(mp.poset.leq(a0, c2));
  EXPECT_FALSE(mp.poset.leq(c2, a0));
  EXPECT_TRUE(mp.poset.frozen());
}

TEST(Metric, BuildErrors) {
  EXPECT_ERROR_CODE(build_metric_poset(line3(), {{"a", {}, ""}}), ErrorCode::EmptyWorldline);
  EXPECT_ERROR_CODE(build_metric_poset(line3(), {{"zz", {0}, ""}}), ErrorCode::BadParams);
  EXPECT_ERROR_CODE(build_metric_poset(line3(), {{"a", {1, 0}, ""}}), ErrorCode::BadParams);
  EXPECT_ERROR_CODE(build_metric_poset(line3(), {{"a", {0}, "A"}, {"a", {0}, "B"}}), ErrorCode::BadParams);
}

TEST(Metric, OrderMatchesMetricRuleEverywhere) {
  MetricPoset mp = lattice_1p1(4, 12);
  for (EventId a : mp.poset.events())
    for (EventId b : mp.poset.events()) ASSERT_EQ(mp.poset.leq(a, b), oracle::metric_leq(mp, a, b));
  EXPECT_TRUE(mp.poset.check_order_axioms().ok());
}

TEST(Metric, LatticeCountsAndIds) {
  MetricPoset mp = lattice_1p1(5, 40);
  EXPECT_EQ(mp.poset.size(), 246u);
  EXPECT_EQ(mp.chains.size(), 6u);
  EXPECT_EQ(mp.chains[2].id(), "P2");
  EventId e = lattice_event(40, 7, 3);
  EXPECT_EQ(raw(e), 3u * 41u + 7u);
  EXPECT_EQ(mp.site(e).position, 3u);
  EXPECT_EQ(mp.site(e).time, Rational(7));
  EXPECT_EQ(lattice_1p1(8, 60).poset.size(), 549u);
}

TEST(Metric, SimplexAndCollinearPresets) {
  MetricPoset s = simplex_config(4, 1, 10);
  EXPECT_EQ(s.poset.size(), 44u);
  for (const auto& a : s.chains)
    for (const auto& b : s.chains)
      if (!(a == b)) EXPECT_EQ(s.sq_dist(a, b), Rational(1));
  MetricPoset c = collinear_config(3, 2, 10);
  EXPECT_EQ(c.sq_dist(c.chains[0], c.chains[2]), Rational(16));
}

TEST(Metric, ForwardProjectionIsLightconeTick) {
  MetricPoset mp = lattice_1p1(6, 30);
  for (EventId x : mp.poset.events()) {
    const auto& sx = mp.site(x);
    for (const Chain& P : mp.chains) {
      auto fwd = forward_project(mp.poset, x, P);
      auto ref = oracle::scan_forward(mp, x, P);
      ASSERT_EQ(fwd, ref);
      Integer d = sx.position > mp.site(P.at(0)).position ? sx.position - mp.site(P.at(0)).position
                                                          : mp.site(P.at(0)).position - sx.position;
      Integer t = lightcone_tick(numerator(sx.time), Rational(d * d));
      if (t <= 30) {
        ASSERT_TRUE(fwd);
        EXPECT_EQ(mp.site(*fwd).time, Rational(t));
      } else {
        EXPECT_FALSE(fwd);
      }
      EXPECT_EQ(backward_project(mp.poset, x, P), oracle::scan_backward(mp, x, P));
    }
  }
}

TEST(Metric, TickAlignment) {
  MetricPoset mp = planar_config({{"A", {0, 0}, tick_range(20)}, {"B", {3, 4}, tick_range(20)},
                                  {"C", {1, 1}, tick_range(20)}});
  EXPECT_TRUE(tick_aligned(mp, mp.chain("A"), mp.chain("B")));
  EXPECT_FALSE(tick_aligned(mp, mp.chain("A"), mp.chain("C")));
  EXPECT_EQ(sq_norm({0, 0}, {3, 4}), Rational(25));
}

TEST(Metric, GridLayoutNames) {
  GridLayout g = grid_config(3, 4, {3, 0}, {0, 4}, 30);
  EXPECT_EQ(g.ids[0][0], "P_1_1");
  EXPECT_EQ(g.ids[2][3], "P_3_4");
  EXPECT_EQ(g.points[2][3].x, Rational(9));
  EXPECT_EQ(g.points[2][3].y, Rational(8));
  EXPECT_EQ(g.mp.chains.size(), 12u);
}

TEST(Metric, PythagorasLayoutZeroLegs) {
  PythagorasLayout l = pythagoras_layout(0, 5);
  EXPECT_EQ(l.p_chain, "O");
  EXPECT_EQ(l.p, l.o);
  EXPECT_ERROR_CODE(pythagoras_layout(0, 0), ErrorCode::BadParams);
}

TEST(Metric, RandomDagExtremes) {
  Poset empty = random_dag(30, 0.0, 1);
  for (EventId a : empty.events())
    for (EventId b : empty.events()) EXPECT_EQ(empty.leq(a, b), a == b);
  Poset total = random_dag(30, 1.0, 1);
  for (EventId a : total.events())
    for (EventId b : total.events()) EXPECT_TRUE(total.comparable(a, b));
  EXPECT_ERROR_CODE(random_dag(10, 2.0, 1), ErrorCode::BadParams);
  EXPECT_ERROR_CODE(random_dag(10, -0.5, 1), ErrorCode::BadParams);
}

TEST(Metric, RandomDagDeterministic) {
  Poset a = random_dag(80, 0.05, 42), b = random_dag(80, 0.05, 42), c = random_dag(80, 0.05, 43);
  EXPECT_EQ(a.cover_pairs(), b.cover_pairs());
  EXPECT_NE(a.cover_pairs(), c.cover_pairs());
}

TEST(Metric, ExtractChainsAreChains) {
  Poset p = random_dag(120, 0.05, 7);
  auto chains = extract_chains(p, 4);
  ASSERT_FALSE(chains.empty());
  for (const Chain& c : chains) {
    EXPECT_NO_THROW(c.validate(p));
    EXPECT_GE(c.size(), 2u);
  }
}
