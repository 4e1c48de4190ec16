#include <chainproj/collinearity.hpp>
#include <chainproj/error.hpp>
#include <chainproj/projection.hpp>

namespace chainproj {

std::optional<std::size_t> forward_index(const Poset& poset, EventId x, const Chain& P) {
  std::size_t lo = 0, hi = P.size();
  while (lo < hi) {
    std::size_t mid = lo + (hi - lo) / 2;
    if (poset.leq(x, P.at(mid))) hi = mid;
    else lo = mid + 1;
  }
  if (lo == P.size()) return std::nullopt;
  return lo;
}

std::optional<std::size_t> backward_index(const Poset& poset, EventId x, const Chain& P) {
  std::size_t lo = 0, hi = P.size();
  while (lo < hi) {
    std::size_t mid = lo + (hi - lo) / 2;
    if (poset.leq(P.at(mid), x)) lo = mid + 1;
    else hi = mid;
  }
  if (lo == 0) return std::nullopt;
  return lo - 1;
}

std::optional<EventId> forward_project(const Poset& poset, EventId x, const Chain& P) {
  auto i = forward_index(poset, x, P);
  if (!i) return std::nullopt;
  return P.at(*i);
}

std::optional<EventId> backward_project(const Poset& poset, EventId x, const Chain& P) {
  auto i = backward_index(poset, x, P);
  if (!i) return std::nullopt;
  return P.at(*i);
}

QuantPair quant_pair(const Rational& first, const Rational& second) { return QuantPair{first, second, {}}; }

std::string to_string(IntervalClass c) {
  switch (c) {
    case IntervalClass::ChainLike: return "ChainLike";
    case IntervalClass::PurelyChainLike: return "PurelyChainLike";
    case IntervalClass::AntichainLike: return "AntichainLike";
    case IntervalClass::PurelyAntichainLike: return "PurelyAntichainLike";
    case IntervalClass::ProjectionLike: return "ProjectionLike";
    case IntervalClass::Degenerate: return "Degenerate";
  }
  return "?";
}

namespace {

struct EventValues {
  Rational fwd;
  Rational bwd;
};

EventValues values_or_throw(const Poset& poset, EventId x, const Chain& P, ErrorCode code) {
  auto f = forward_index(poset, x, P);
  auto b = backward_index(poset, x, P);
  if (!f || !b) {
    throw Error(code, "e" + std::to_string(raw(x)) + " has no " + (f ? "backward" : "forward") +
                          " projection onto '" + P.id() + "'");
  }
  return {P.value_at(*f), P.value_at(*b)};
}

const Rational& forward_value(const Poset& poset, EventId x, const Chain& P) {
  auto f = forward_index(poset, x, P);
  if (!f) {
    throw Error(ErrorCode::Unquantifiable,
                "e" + std::to_string(raw(x)) + " has no forward projection onto '" + P.id() + "'");
  }
  return P.value_at(*f);
}

}  // namespace

QuantPair quantify_event(const Poset& poset, EventId x, const Chain& P) {
  auto v = values_or_throw(poset, x, P, ErrorCode::Unquantifiable);
  return {v.fwd, v.bwd, {P.id()}};
}

QuantPair quantify_interval_one_chain(const Poset& poset, EventId x, EventId y, const Chain& P, Side side) {
  auto vx = values_or_throw(poset, x, P, ErrorCode::Unquantifiable);
  auto vy = values_or_throw(poset, y, P, ErrorCode::Unquantifiable);
  if (side == Side::SameSide) return {vy.fwd - vx.fwd, vy.bwd - vx.bwd, {P.id()}};
  return {vy.fwd - vx.bwd, vy.bwd - vx.fwd, {P.id()}};
}

QuantPair quantify_pair_raw(const Poset& poset, EventId x, EventId y, const Chain& P, const Chain& Q) {
  return {forward_value(poset, y, P) - forward_value(poset, x, P),
          forward_value(poset, y, Q) - forward_value(poset, x, Q),
          {P.id(), Q.id()}};
}

QuantPair quantify_interval_two_chains(const Poset& poset, EventId x, EventId y, const Chain& P,
                                       const Chain& Q) {
  if (P == Q) throw Error(ErrorCode::IdenticalChains, "quantifying chains must differ");
  for (EventId e : {x, y}) {
    std::optional<Sidedness> s;
    try {
      s = side_of(poset, e, P, Q);
    } catch (const Error& err) {
      if (err.code() != ErrorCode::MissingProjection) throw;
      throw Error(ErrorCode::Unquantifiable, err.what());
    }
    if (*s != Sidedness::Between) {
      throw Error(ErrorCode::NotBetween,
                  "e" + std::to_string(raw(e)) + " is not between '" + P.id() + "' and '" + Q.id() + "'");
    }
  }
  return quantify_pair_raw(poset, x, y, P, Q);
}

IntervalClass classify_interval(const QuantPair& pair) {
  int a = sign(pair.first);
  int b = sign(pair.second);
  if (a == 0 && b == 0) return IntervalClass::Degenerate;
  if (a == 0 || b == 0) return IntervalClass::ProjectionLike;
  if (a == b) {
    return (a > 0 && pair.first == pair.second) ? IntervalClass::PurelyChainLike : IntervalClass::ChainLike;
  }
  return pair.first == -pair.second ? IntervalClass::PurelyAntichainLike : IntervalClass::AntichainLike;
}

IntervalClass refine_degenerate(const Poset& poset, EventId x, EventId y, const QuantPair& pair) {
  IntervalClass c = classify_interval(pair);
  if (c != IntervalClass::Degenerate || x == y) return c;
  return poset.comparable(x, y) ? IntervalClass::ChainLike : IntervalClass::AntichainLike;
}

Rational interval_scalar(const QuantPair& pair) { return pair.first * pair.second; }

std::pair<QuantPair, QuantPair> sym_antisym_decompose(const QuantPair& pair) {
  Rational dt = (pair.first + pair.second) / 2;
  Rational dx = (pair.first - pair.second) / 2;
  return {QuantPair{dt, dt, pair.basis}, QuantPair{dx, -dx, pair.basis}};
}

Rational event_chain_distance(const Poset& poset, EventId x, const Chain& P) {
  auto v = values_or_throw(poset, x, P, ErrorCode::MissingProjection);
  return (v.fwd - v.bwd) / 2;
}

Rational event_chain_distance_sq(const Poset& poset, EventId x, const Chain& P) {
  Rational d = event_chain_distance(poset, x, P);
  return d * d;
}

Rational time_coordinate(const Poset& poset, EventId x, const Chain& P) {
  auto v = values_or_throw(poset, x, P, ErrorCode::MissingProjection);
  return (v.fwd + v.bwd) / 2;
}

}  // namespace chainproj
