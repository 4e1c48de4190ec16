#pragma once

#include <chainproj/chain.hpp>
#include <chainproj/poset.hpp>
#include <chainproj/rational.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace chainproj {

// Projections. Absence is a value here; quantification turns it into
// Unquantifiable. Chain order makes `x <= p_i` monotone in i, so both
// directions are binary searches.
std::optional<std::size_t> forward_index(const Poset& poset, EventId x, const Chain& P);
std::optional<std::size_t> backward_index(const Poset& poset, EventId x, const Chain& P);

/// min{p in P : x <= p}
std::optional<EventId> forward_project(const Poset& poset, EventId x, const Chain& P);
/// max{p in P : p <= x}
std::optional<EventId> backward_project(const Poset& poset, EventId x, const Chain& P);

struct QuantPair {
  Rational first;
  Rational second;
  std::vector<std::string> basis;  // one chain id, or an ordered pair

  friend bool operator==(const QuantPair& a, const QuantPair& b) {
    return a.first == b.first && a.second == b.second;
  }
};

QuantPair quant_pair(const Rational& first, const Rational& second);

enum class IntervalClass {
  ChainLike,
  PurelyChainLike,
  AntichainLike,
  PurelyAntichainLike,
  ProjectionLike,
  Degenerate,
};

std::string to_string(IntervalClass c);

/// (v(Px), v(P̄x)). Throws Unquantifiable.
QuantPair quantify_event(const Poset& poset, EventId x, const Chain& P);

enum class Side { SameSide, Straddling };

/// SameSide: (p_y - p_x, p̄_y - p̄_x). Straddling: (p_y - p̄_x, p̄_y - p_x).
QuantPair quantify_interval_one_chain(const Poset& poset, EventId x, EventId y, const Chain& P, Side side);

/// (p_y - p_x, q_y - q_x) with both endpoints between P and Q.
/// Throws NotBetween, Unquantifiable, IdenticalChains.
QuantPair quantify_interval_two_chains(const Poset& poset, EventId x, EventId y, const Chain& P, const Chain& Q);

/// Same formula without the betweenness requirement.
QuantPair quantify_pair_raw(const Poset& poset, EventId x, EventId y, const Chain& P, const Chain& Q);

IntervalClass classify_interval(const QuantPair& pair);

/// For a (0,0) pair the endpoints decide: x == y stays Degenerate, distinct
/// comparable endpoints give ChainLike, incomparable ones AntichainLike.
/// Other pairs classify as usual.
IntervalClass refine_degenerate(const Poset& poset, EventId x, EventId y, const QuantPair& pair);

Rational interval_scalar(const QuantPair& pair);

/// ((dt, dt), (dx, -dx)) with dt = (a+b)/2 and dx = (a-b)/2.
std::pair<QuantPair, QuantPair> sym_antisym_decompose(const QuantPair& pair);

/// (p_x - p̄_x) / 2, never negative. Throws MissingProjection.
Rational event_chain_distance(const Poset& poset, EventId x, const Chain& P);
Rational event_chain_distance_sq(const Poset& poset, EventId x, const Chain& P);

/// (p_x + p̄_x) / 2. Throws MissingProjection.
Rational time_coordinate(const Poset& poset, EventId x, const Chain& P);

}  // namespace chainproj
