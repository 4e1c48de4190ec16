#include <chainproj/collinearity.hpp>
#include <chainproj/metric.hpp>

#include <gtest/gtest.h>

#include <set>

#include "expect_error.hpp"
#include "oracle.hpp"

using namespace chainproj;

namespace {

constexpr std::int64_t kTicks = 40;

EventId e(std::int64_t t, std::int64_t p) { return lattice_event(kTicks, t, p); }

const MetricPoset& lattice() {
  static const MetricPoset mp = lattice_1p1(9, kTicks);
  return mp;
}

const std::set<std::string>& legal_strings() {
  static const std::set<std::string> s = {"2201", "1010", "0122", "0221", "2102"};
  return s;
}

CollinearityCase flip(CollinearityCase c) {
  if (c == CollinearityCase::CaseIV) return CollinearityCase::CaseV;
  if (c == CollinearityCase::CaseV) return CollinearityCase::CaseIV;
  return c;
}

}  // namespace

// ---------------------------------------------------------------------------
// code table
// ---------------------------------------------------------------------------

TEST(Collinearity, LegalCodeStrings) {
  const auto& codes = legal_codes();
  EXPECT_EQ(codes[0].str(), "2201");
  EXPECT_EQ(codes[1].str(), "1010");
  EXPECT_EQ(codes[2].str(), "0122");
  EXPECT_EQ(codes[3].str(), "0221");
  EXPECT_EQ(codes[4].str(), "2102");
  for (int c = 0; c < 5; ++c) EXPECT_EQ(case_of(codes[c]), static_cast<CollinearityCase>(c));
  ProjCode odd;
  odd.digits = {0, 0, 1, 1};
  EXPECT_EQ(case_of(odd), CollinearityCase::NotCollinear);
  EXPECT_EQ(ProjCode{}.str(), "xxxx");
}

TEST(Collinearity, MasksResolveByPriority) {
  // every identity holds in every row: an event on both chains' crossing
  CodeMasks all{7, 7, 7, 7};
  EXPECT_EQ(code_from_masks(all).str(), "1010");
  CodeMasks only_i{4, 4, 1, 2};
  EXPECT_EQ(code_from_masks(only_i).str(), "2201");
  CodeMasks none{0, 0, 2, 0};
  EXPECT_EQ(code_from_masks(none).str(), "xx1x");
}

TEST(Collinearity, BetweenEventIsCaseII) {
  const auto& mp = lattice();
  ProjCode c = projection_code(mp.poset, e(4, 2), mp.chain("P0"), mp.chain("P5"));
  EXPECT_EQ(c.str(), "1010");
}

TEST(Collinearity, CaseGeography) {
  const auto& mp = lattice();
  const Chain& P = mp.chain("P3");
  const Chain& Q = mp.chain("P6");
  EXPECT_EQ(projection_code(mp.poset, e(20, 2), P, Q).str(), "2201");
  EXPECT_EQ(projection_code(mp.poset, e(20, 4), P, Q).str(), "1010");
  EXPECT_EQ(projection_code(mp.poset, e(20, 8), P, Q).str(), "0122");
  EXPECT_EQ(side_of(mp.poset, e(20, 2), P, Q), Sidedness::PSide);
  EXPECT_EQ(side_of(mp.poset, e(20, 4), P, Q), Sidedness::Between);
  EXPECT_EQ(side_of(mp.poset, e(20, 8), P, Q), Sidedness::QSide);
  for (std::int64_t t = 12; t <= 28; ++t)
    for (std::int64_t p = 0; p <= 9; ++p) {
      if (p == 3 || p == 6) continue;
      Sidedness want = p < 3 ? Sidedness::PSide : (p < 6 ? Sidedness::Between : Sidedness::QSide);
      EXPECT_EQ(side_of(mp.poset, e(t, p), P, Q), want) << t << "," << p;
      EXPECT_TRUE(in_subspace(mp.poset, e(t, p), P, Q));
    }
}

TEST(Collinearity, SideSwapsWithChainOrder) {
  const auto& mp = lattice();
  const Chain& P = mp.chain("P3");
  const Chain& Q = mp.chain("P6");
  for (std::int64_t p = 0; p <= 9; ++p) {
    Sidedness a = side_of(mp.poset, e(20, p), P, Q), b = side_of(mp.poset, e(20, p), Q, P);
    if (a == Sidedness::PSide) EXPECT_EQ(b, Sidedness::QSide);
    if (a == Sidedness::QSide) EXPECT_EQ(b, Sidedness::PSide);
    if (a == Sidedness::Between) EXPECT_EQ(b, Sidedness::Between);
  }
}

TEST(Collinearity, MissingProjectionAndIdenticalChains) {
  const auto& mp = lattice();
  EXPECT_ERROR_CODE(projection_code(mp.poset, e(0, 0), mp.chain("P3"), mp.chain("P6")),
                    ErrorCode::MissingProjection);
  EXPECT_ERROR_CODE(projection_code(mp.poset, e(20, 0), mp.chain("P3"), mp.chain("P3")),
                    ErrorCode::IdenticalChains);
  EXPECT_FALSE(in_subspace(mp.poset, e(0, 0), mp.chain("P3"), mp.chain("P6")));
}

TEST(Collinearity, CodesAgreeWithScanOracle) {
  const auto& mp = lattice();
  for (auto [i, j] : all_ordered_pairs(mp.chains.size())) {
    const Chain& P = mp.chains[i];
    const Chain& Q = mp.chains[j];
    for (EventId x : mp.poset.events()) {
      std::string sets = oracle::code_sets(mp, x, P, Q);
      if (sets.empty()) {
        EXPECT_ERROR_CODE(projection_code(mp.poset, x, P, Q), ErrorCode::MissingProjection);
        continue;
      }
      ProjCode code = projection_code(mp.poset, x, P, Q);
      std::size_t row = 0;
      std::string cell;
      for (char ch : sets + "|") {
        if (ch != '|') {
          cell += ch;
          continue;
        }
        std::int8_t d = code.digits[row];
        if (cell.empty()) EXPECT_EQ(d, ProjCode::kUndefined);
        else ASSERT_NE(cell.find(static_cast<char>('0' + d)), std::string::npos) << sets << " vs " << code.str();
        cell.clear();
        ++row;
      }
    }
  }
}

// ---------------------------------------------------------------------------
// chain order
// ---------------------------------------------------------------------------

TEST(Collinearity, ChainOrderAllArrangements) {
  const auto& mp = lattice();
  using A = std::array<std::string, 3>;
  EXPECT_EQ(chain_order(mp.poset, mp.chain("P1"), mp.chain("P3"), mp.chain("P6")), (A{"P1", "P3", "P6"}));
  EXPECT_EQ(chain_order(mp.poset, mp.chain("P3"), mp.chain("P1"), mp.chain("P6")), (A{"P1", "P3", "P6"}));
  EXPECT_EQ(chain_order(mp.poset, mp.chain("P6"), mp.chain("P1"), mp.chain("P3")), (A{"P1", "P3", "P6"}));
  EXPECT_EQ(chain_order(mp.poset, mp.chain("P3"), mp.chain("P6"), mp.chain("P1")), (A{"P6", "P3", "P1"}));
}

TEST(Collinearity, ChainOrderInconsistentSides) {
  const auto& mp = lattice();
  Chain X("X", {e(10, 1), e(30, 8)}, {0, 1});
  X.validate(mp.poset);
  EXPECT_ERROR_CODE(chain_order(mp.poset, X, mp.chain("P3"), mp.chain("P6")), ErrorCode::InconsistentSides);
}

TEST(Collinearity, ChainsProperlyCollinearOnLattice) {
  const auto& mp = lattice();
  EXPECT_TRUE(chains_properly_collinear(mp.poset, mp.chain("P4"), mp.chain("P3"), mp.chain("P6")));
  EXPECT_TRUE(chains_properly_collinear(mp.poset, mp.chain("P0"), mp.chain("P3"), mp.chain("P6")));
}

TEST(Collinearity, SparseChainLeavesGapsInImages) {
  MetricConfig c;
  c.positions = {"a", "b", "c"};
  c.sq_dist = {{0, 1, 9}, {1, 0, 4}, {9, 4, 0}};
  MetricPoset mp = build_metric_poset(c, {{"a", tick_range(40), "P"}, {"b", tick_range(40, 2), "X"},
                                          {"c", tick_range(40), "Q"}});
  EXPECT_FALSE(chains_properly_collinear(mp.poset, mp.chain("X"), mp.chain("P"), mp.chain("Q")));
}

// ---------------------------------------------------------------------------
// census
// ---------------------------------------------------------------------------

TEST(Collinearity, LatticeCensusLegalOnly) {
  MetricPoset mp = lattice_1p1(6, 30);
  auto pairs = all_ordered_pairs(mp.chains.size());
  EXPECT_EQ(pairs.size(), 42u);
  Census c = census(mp.poset, mp.chains, pairs);
  EXPECT_TRUE(c.legal_codes_only);
  EXPECT_GT(c.classified, 0u);
  for (const auto& [code, n] : c.histogram) EXPECT_TRUE(legal_strings().count(code)) << code;
}

TEST(Collinearity, SingleChainCensusIsEmpty) {
  MetricPoset mp = lattice_1p1(0, 10);
  Census c = census(mp.poset, mp.chains, all_ordered_pairs(mp.chains.size()));
  EXPECT_TRUE(c.histogram.empty());
  EXPECT_EQ(c.classified, 0u);
  EXPECT_TRUE(c.legal_codes_only);
}

TEST(Collinearity, RandomDagCensusLegalOnly) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    Poset p = random_dag(60, 0.08, seed);
    auto chains = extract_chains(p, 4, 3);
    Census c = census(p, chains, all_ordered_pairs(chains.size()));
    for (const auto& [code, n] : c.histogram)
      if (code.find('x') == std::string::npos) EXPECT_TRUE(legal_strings().count(code)) << "seed " << seed << ": " << code;
  }
}

TEST(Collinearity, CaseIVIsNotProperlyCollinear) {
  bool found_iv = false, found_v = false;
  for (std::uint64_t seed = 1; seed <= 200 && !(found_iv && found_v); ++seed) {
    Poset p = random_dag(50, 0.08, seed);
    auto chains = extract_chains(p, 4, 3);
    for (auto [i, j] : all_ordered_pairs(chains.size()))
      for (EventId x : p.events()) {
        CollinearityCase c;
        try {
          c = classify_collinearity(p, x, chains[i], chains[j]);
        } catch (const Error&) {
          continue;
        }
        if (c == CollinearityCase::CaseIV || c == CollinearityCase::CaseV) {
          (c == CollinearityCase::CaseIV ? found_iv : found_v) = true;
          EXPECT_FALSE(is_properly_collinear(p, x, chains[i], chains[j]));
          EXPECT_FALSE(in_subspace(p, x, chains[i], chains[j]));
        }
      }
  }
  EXPECT_TRUE(found_iv);
  EXPECT_TRUE(found_v);
}

// ---------------------------------------------------------------------------
// order reversal
// ---------------------------------------------------------------------------

TEST(Collinearity, DualityPreservesProperCasesAndSwapsIVandV) {
  std::size_t seen = 0;
  auto check = [&](const Poset& poset, const std::vector<Chain>& chains) {
    Poset dual = poset.dual();
    dual.freeze();
    std::vector<Chain> dual_chains;
    for (const Chain& c : chains) dual_chains.push_back(c.dual());
    for (auto [i, j] : all_ordered_pairs(chains.size()))
      for (EventId x : poset.events()) {
        CollinearityCase a;
        try {
          a = classify_collinearity(poset, x, chains[i], chains[j]);
        } catch (const Error&) {
          continue;
        }
        ++seen;
        ASSERT_EQ(classify_collinearity(dual, x, dual_chains[i], dual_chains[j]), flip(a));
      }
  };
  MetricPoset mp = lattice_1p1(5, 24);
  check(mp.poset, mp.chains);
  std::size_t on_lattice = seen;
  EXPECT_GT(on_lattice, 0u);
  for (std::uint64_t seed = 3; seed <= 12; ++seed) {
    Poset p = random_dag(40, 0.1, seed);
    check(p, extract_chains(p, 4, 3));
  }
  EXPECT_GT(seen, on_lattice);
}
