#include <chainproj/chain.hpp>
#include <chainproj/metric.hpp>
#include <chainproj/poset.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "expect_error.hpp"
#include "oracle.hpp"

using namespace chainproj;

namespace {

EventId E(std::uint32_t i) { return EventId{i}; }

Poset make_poset(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  Poset p;
  for (std::size_t i = 0; i < n; ++i) p.add_event(E(static_cast<std::uint32_t>(i)));
  for (auto [a, b] : edges) p.add_influence(E(static_cast<std::uint32_t>(a)), E(static_cast<std::uint32_t>(b)));
  return p;
}

std::vector<std::pair<std::size_t, std::size_t>> random_edges(std::size_t n, double prob, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(prob);
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin(rng)) edges.emplace_back(i, j);
  std::shuffle(edges.begin(), edges.end(), rng);
  return edges;
}

}  // namespace

// ---------------------------------------------------------------------------
// closure
// ---------------------------------------------------------------------------

TEST(Poset, ThreeEventChainClosesTransitively) {
  Poset p = make_poset(3, {{0, 1}, {1, 2}});
  EXPECT_TRUE(p.leq(E(0), E(2)));
  EXPECT_FALSE(p.leq(E(2), E(0)));
  EXPECT_TRUE(p.covers(E(0), E(1)));
  EXPECT_TRUE(p.covers(E(1), E(2)));
  EXPECT_FALSE(p.covers(E(0), E(2)));
  auto c = p.cover_pairs();
  ASSERT_EQ(c.size(), 2u);
}

TEST(Poset, ReflexiveOnEveryEvent) {
  Poset p = make_poset(5, {});
  for (EventId e : p.events()) EXPECT_TRUE(p.leq(e, e));
  EXPECT_FALSE(p.less(E(1), E(1)));
  EXPECT_FALSE(p.comparable(E(1), E(2)));
}

TEST(Poset, ClosureMatchesFloydWarshallOnRandomDags) {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    std::size_t n = 20 + 15 * seed;  // up to 200
    auto edges = random_edges(n, 0.03, seed);
    Poset p = make_poset(n, edges);
    auto ref = oracle::closure(n, edges);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        ASSERT_EQ(p.leq(E(a), E(b)), ref[a][b]) << "seed " << seed << " " << a << "<=" << b;
    EXPECT_TRUE(p.check_order_axioms().ok());
  }
}

TEST(Poset, CoverPairsMatchReduction) {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    std::size_t n = 60;
    auto edges = random_edges(n, 0.08, seed);
    Poset p = make_poset(n, edges);
    auto ref = oracle::covers(oracle::closure(n, edges));
    std::vector<std::pair<std::size_t, std::size_t>> got;
    for (auto [a, b] : p.cover_pairs()) got.emplace_back(raw(a), raw(b));
    std::sort(ref.begin(), ref.end());
    std::sort(got.begin(), got.end());
    EXPECT_EQ(got, ref);
  }
}

TEST(Poset, CoversRecomputedAfterNewInfluence) {
  Poset p = make_poset(3, {{0, 2}});
  EXPECT_TRUE(p.covers(E(0), E(2)));
  p.add_influence(E(0), E(1));
  p.add_influence(E(1), E(2));
  EXPECT_FALSE(p.covers(E(0), E(2)));
}

TEST(Poset, AddInfluenceIsIdempotent) {
  Poset p = make_poset(4, {{0, 1}, {1, 2}});
  auto before = p.cover_pairs();
  p.add_influence(E(0), E(1));
  p.add_influence(E(0), E(2));
  EXPECT_EQ(p.cover_pairs(), before);
}

TEST(Poset, SparseIdentifiers) {
  Poset p;
  p.add_event(E(10));
  p.add_event(E(3));
  p.add_influence(E(10), E(3));
  EXPECT_TRUE(p.leq(E(10), E(3)));
  EXPECT_EQ(p.index_of(E(3)), 1u);
  EXPECT_EQ(raw(p.add_event()), 11u);
}

// ---------------------------------------------------------------------------
// errors
// ---------------------------------------------------------------------------

TEST(Poset, DuplicateEventRejected) {
  Poset p = make_poset(2, {});
  EXPECT_ERROR_CODE(p.add_event(E(1)), ErrorCode::DuplicateEvent);
}

TEST(Poset, CycleRejectedAndClosureUnchanged) {
  Poset p = make_poset(3, {{0, 1}, {1, 2}});
  EXPECT_ERROR_CODE(p.add_influence(E(2), E(0)), ErrorCode::CycleViolation);
  EXPECT_FALSE(p.leq(E(2), E(0)));
  EXPECT_TRUE(p.check_order_axioms().ok());
}

TEST(Poset, UnknownEventRejected) {
  Poset p = make_poset(2, {});
  EXPECT_ERROR_CODE(p.add_influence(E(0), E(7)), ErrorCode::UnknownEvent);
  EXPECT_ERROR_CODE(p.index_of(E(7)), ErrorCode::UnknownEvent);
}

TEST(Poset, FrozenPosetRefusesMutation) {
  Poset p = make_poset(2, {});
  p.freeze();
  EXPECT_ERROR_CODE(p.add_event(E(5)), ErrorCode::FrozenPoset);
  EXPECT_ERROR_CODE(p.add_influence(E(0), E(1)), ErrorCode::FrozenPoset);
  EXPECT_NO_THROW(require_frozen(p));
  EXPECT_ERROR_CODE(require_frozen(make_poset(1, {})), ErrorCode::NotFrozen);
}

TEST(Poset, FromClosureAuditsBrokenRelation) {
  // 0<=1 and 1<=2 without 0<=2
  std::vector<Bitset> up(3, Bitset(3));
  for (std::size_t i = 0; i < 3; ++i) up[i].set(i);
  up[0].set(1);
  up[1].set(2);
  Poset p = Poset::from_closure({E(0), E(1), E(2)}, up);
  auto ax = p.check_order_axioms();
  EXPECT_TRUE(ax.reflexive);
  EXPECT_TRUE(ax.antisymmetric);
  EXPECT_FALSE(ax.transitive);
}

// ---------------------------------------------------------------------------
// dual
// ---------------------------------------------------------------------------

TEST(Poset, DualReversesEveryPair) {
  auto edges = random_edges(40, 0.1, 9);
  Poset p = make_poset(40, edges);
  Poset d = p.dual();
  for (EventId a : p.events())
    for (EventId b : p.events()) ASSERT_EQ(p.leq(a, b), d.leq(b, a));
  Poset dd = d.dual();
  for (EventId a : p.events())
    for (EventId b : p.events()) ASSERT_EQ(p.leq(a, b), dd.leq(a, b));
}

// ---------------------------------------------------------------------------
// chains
// ---------------------------------------------------------------------------

TEST(Chain, RejectsBadValuations) {
  EXPECT_ERROR_CODE(Chain("A", {E(0), E(1)}, {1, 1}), ErrorCode::InvalidChain);
  EXPECT_ERROR_CODE(Chain("A", {E(0), E(1)}, {1}), ErrorCode::InvalidChain);
  EXPECT_ERROR_CODE(Chain("A", {E(0), E(0)}, {1, 2}), ErrorCode::InvalidChain);
}

TEST(Chain, ValidateAgainstPoset) {
  Poset p = make_poset(3, {{0, 1}});
  Chain ok("A", {E(0), E(1)}, {0, 1});
  EXPECT_NO_THROW(ok.validate(p));
  Chain bad("B", {E(1), E(2)}, {0, 1});
  EXPECT_ERROR_CODE(bad.validate(p), ErrorCode::InvalidChain);
  EXPECT_TRUE(p.is_chain(std::vector<EventId>{E(0), E(1)}));
  EXPECT_FALSE(p.is_chain(std::vector<EventId>{E(0), E(1), E(2)}));
}

TEST(Chain, DualNegatesAndReverses) {
  Chain c("A", {E(0), E(1), E(2)}, {0, 2, 5});
  Chain d = c.dual();
  ASSERT_EQ(d.size(), 3u);
  EXPECT_EQ(d.at(0), E(2));
  EXPECT_EQ(d.value_at(0), Rational(-5));
  EXPECT_EQ(d.value_at(2), Rational(0));
}

TEST(Chain, LookupErrors) {
  Chain c("A", {E(0)}, {0});
  EXPECT_ERROR_CODE(c.valuation(E(4)), ErrorCode::UnknownEvent);
  std::vector<Chain> chains{c};
  EXPECT_ERROR_CODE(find_chain(chains, "Z"), ErrorCode::UnknownChain);
}

// ---------------------------------------------------------------------------
// rationals
// ---------------------------------------------------------------------------

TEST(Rational, CanonicalText) {
  EXPECT_EQ(to_string(Rational(-6, 4)), "-3/2");
  EXPECT_EQ(to_string(Rational(5)), "5/1");
  EXPECT_EQ(parse_rational("-6/4"), Rational(-3, 2));
  EXPECT_EQ(parse_rational("7"), Rational(7));
  EXPECT_EQ(parse_rational("1/-2"), Rational(-1, 2));
  EXPECT_EQ(parse_rational("-3/-6"), Rational(1, 2));
  EXPECT_ERROR_CODE(parse_rational("1/0"), ErrorCode::ParseError);
  EXPECT_ERROR_CODE(parse_rational("x"), ErrorCode::ParseError);
}

TEST(Rational, CeilSqrtAgainstScan) {
  for (int num = 0; num <= 200; ++num)
    for (int den : {1, 2, 3, 7}) {
      Rational r(num, den);
      Integer k = ceil_sqrt(r);
      EXPECT_GE(Rational(k * k), r);
      if (k > 0) EXPECT_LT(Rational((k - 1) * (k - 1)), r);
    }
  Rational root;
  EXPECT_TRUE(is_perfect_square(Rational(9, 4), &root));
  EXPECT_EQ(root, Rational(3, 2));
  EXPECT_FALSE(is_perfect_square(Rational(2)));
}
