#include <chainproj/coordination.hpp>
#include <chainproj/error.hpp>

#include <algorithm>
#include <sstream>

namespace chainproj {

std::optional<Window> default_window(const Poset& poset, const Chain& P, const Chain& Q) {
  // Forward projections exist on a prefix of P, backward ones on a suffix.
  std::optional<std::size_t> lo, hi;
  for (std::size_t i = 0; i < P.size(); ++i) {
    if (backward_index(poset, P.at(i), Q)) {
      lo = i;
      break;
    }
  }
  for (std::size_t i = P.size(); i-- > 0;) {
    if (forward_index(poset, P.at(i), Q)) {
      hi = i;
      break;
    }
  }
  if (!lo || !hi || *lo > *hi) return std::nullopt;
  return Window{*lo, *hi};
}

namespace {

bool window_ok(const Chain& c, Window w) { return w.lo <= w.hi && w.hi < c.size(); }

bool one_way(const Poset& poset, const Chain& from, Window w, const Chain& to) {
  for (bool forward : {true, false}) {
    std::optional<std::size_t> prev;
    for (std::size_t i = w.lo; i <= w.hi; ++i) {
      auto j = forward ? forward_index(poset, from.at(i), to) : backward_index(poset, from.at(i), to);
      if (!j) {
        throw Error(ErrorCode::Unquantifiable, "e" + std::to_string(raw(from.at(i))) + " of '" + from.id() +
                                                   "' does not project onto '" + to.id() + "'");
      }
      if (prev) {
        if (*j != *prev + 1) return false;
        if (to.value_at(*j) - to.value_at(*prev) != from.value_at(i) - from.value_at(i - 1)) return false;
      }
      prev = j;
    }
  }
  return true;
}

}  // namespace

bool are_coordinated(const Poset& poset, const Chain& P, const Chain& Q, Window p_window, Window q_window) {
  if (!window_ok(P, p_window) || !window_ok(Q, q_window)) {
    throw Error(ErrorCode::BadParams, "window outside chain");
  }
  return one_way(poset, P, p_window, Q) && one_way(poset, Q, q_window, P);
}

bool are_coordinated(const Poset& poset, const Chain& P, const Chain& Q) { return coordinate(poset, P, Q).has_value(); }

std::optional<CoordinatedPair> coordinate(const Poset& poset, const Chain& P, const Chain& Q) {
  auto wp = default_window(poset, P, Q);
  auto wq = default_window(poset, Q, P);
  if (!wp || !wq) return std::nullopt;
  if (!are_coordinated(poset, P, Q, *wp, *wq)) return std::nullopt;
  return CoordinatedPair{P.id(), Q.id(), *wp, *wq};
}

Rational chain_distance(const Poset& poset, const Chain& P, const Chain& Q) {
  std::optional<Rational> d;
  for (EventId p : P.elements()) {
    auto f = forward_index(poset, p, Q);
    auto b = backward_index(poset, p, Q);
    if (!f || !b) continue;
    Rational here = (Q.value_at(*f) - Q.value_at(*b)) / 2;
    if (d && *d != here) {
      throw Error(ErrorCode::NotCoordinated,
                  "distance from '" + P.id() + "' to '" + Q.id() + "' varies along the chain");
    }
    d = here;
  }
  if (!d) throw Error(ErrorCode::MissingProjection, "no event of '" + P.id() + "' projects onto '" + Q.id() + "'");
  return *d;
}

namespace {

EventId project_or_throw(const Poset& poset, EventId x, const Chain& C, bool forward) {
  auto e = forward ? forward_project(poset, x, C) : backward_project(poset, x, C);
  if (!e) {
    throw Error(ErrorCode::MissingProjection, "e" + std::to_string(raw(x)) + " has no " +
                                                  (forward ? "forward" : "backward") + " projection onto '" +
                                                  C.id() + "'");
  }
  return *e;
}

QuantPair raw_or_missing(const Poset& poset, EventId x, EventId y, const Chain& P, const Chain& Q) {
  try {
    return quantify_pair_raw(poset, x, y, P, Q);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Unquantifiable) throw Error(ErrorCode::MissingProjection, e.what());
    throw;
  }
}

bool is_zero(const QuantPair& q) { return q.first == 0 && q.second == 0; }

}  // namespace

OrthogonalityReport check_orthogonal_subspaces(const Poset& poset, const Chain& P, const Chain& Q, const Chain& R,
                                               const Chain& S, EventId p, EventId q) {
  OrthogonalityReport out;
  out.pq_wrt_pq = raw_or_missing(poset, p, q, P, Q);
  out.pq_wrt_rs = raw_or_missing(poset, p, q, R, S);
  EventId rb = project_or_throw(poset, p, R, false);
  EventId sb = project_or_throw(poset, p, S, false);
  EventId rf = project_or_throw(poset, p, R, true);
  EventId sf = project_or_throw(poset, p, S, true);
  out.backward_images = raw_or_missing(poset, rb, sb, P, Q);
  out.forward_images = raw_or_missing(poset, rf, sf, P, Q);
  out.pass = classify_interval(out.pq_wrt_pq) == IntervalClass::PurelyAntichainLike && is_zero(out.pq_wrt_rs) &&
             is_zero(out.backward_images) && is_zero(out.forward_images);
  return out;
}

ScalarTriple concatenate_orthogonal(const QuantPair& pair_a, const QuantPair& pair_b) {
  for (const QuantPair* q : {&pair_a, &pair_b}) {
    IntervalClass c = classify_interval(*q);
    if (c != IntervalClass::PurelyAntichainLike && c != IntervalClass::Degenerate) {
      throw Error(ErrorCode::NotAntichainLike, "pair (" + to_string(q->first) + ", " + to_string(q->second) +
                                                   ") is not purely antichain-like");
    }
  }
  Rational a = interval_scalar(pair_a);
  Rational b = interval_scalar(pair_b);
  return {a, b, a + b};
}

PythagorasResult pythagoras_check(const PythagorasLayout& layout) {
  const MetricPoset& mp = layout.mp;
  const Poset& poset = mp.poset;
  const Chain& P = mp.chain(layout.p_chain);
  const Chain& O = mp.chain("O");
  const Chain& R = mp.chain(layout.r_chain);
  for (auto [u, v] : {std::pair{&P, &O}, std::pair{&O, &R}, std::pair{&P, &R}}) {
    if (*u == *v) continue;
    if (!tick_aligned(mp, *u, *v)) {
      throw Error(ErrorCode::AlignmentError, "distance between '" + u->id() + "' and '" + v->id() +
                                                 "' does not fall on a tick");
    }
  }
  PythagorasResult out;
  out.leg_a = quantify_pair_raw(poset, layout.p, layout.o, P, O);
  out.leg_b = quantify_pair_raw(poset, layout.o, layout.r, O, R);
  out.hypotenuse = quantify_pair_raw(poset, layout.p, layout.r, P, R);
  out.scalars = concatenate_orthogonal(out.leg_a, out.leg_b);
  out.hypotenuse_scalar = interval_scalar(out.hypotenuse);
  if (layout.a > 0 && layout.b > 0) {
    out.orthogonal = check_orthogonal_subspaces(poset, P, mp.chain(layout.q_chain), R, mp.chain(layout.s_chain),
                                                layout.p, layout.q)
                         .pass;
  } else {
    out.orthogonal = true;
  }
  const Rational& da = out.leg_a.first;
  const Rational& db = out.leg_b.first;
  const Rational& dc = out.hypotenuse.first;
  out.pass = out.orthogonal && out.scalars.combined == out.hypotenuse_scalar && da * da + db * db == dc * dc;
  return out;
}

PairTable simplex_table(const Poset& poset, std::span<const Chain> chains, SimplexMode mode,
                        std::optional<Rational> time) {
  std::size_t n = chains.size();
  if (n < 2) throw Error(ErrorCode::BadParams, "a table needs at least two chains");
  if (!time) time = chains[0].value_at(chains[0].size() / 2);
  std::vector<EventId> at;
  for (const Chain& c : chains) {
    const auto& values = c.valuations();
    auto it = std::lower_bound(values.begin(), values.end(), *time);
    if (it == values.end() || *it != *time) {
      throw Error(ErrorCode::BadParams, "chain '" + c.id() + "' has no event at " + to_string(*time));
    }
    at.push_back(c.at(static_cast<std::size_t>(it - values.begin())));
  }
  PairTable table(n, std::vector<std::optional<QuantPair>>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Chain& P = mode == SimplexMode::Collinear ? chains[0] : chains[i];
      const Chain& Q = mode == SimplexMode::Collinear ? chains[n - 1] : chains[j];
      table[i][j] = quantify_interval_two_chains(poset, at[i], at[j], P, Q);
    }
  }
  return table;
}

std::string table_csv(const PairTable& table, std::span<const Chain> chains) {
  std::ostringstream out;
  for (const Chain& c : chains) out << ',' << c.id();
  out << '\n';
  for (std::size_t i = 0; i < table.size(); ++i) {
    out << chains[i].id();
    for (std::size_t j = 0; j < table.size(); ++j) {
      out << ',';
      if (table[i][j]) out << to_string(table[i][j]->first) << ';' << to_string(table[i][j]->second);
    }
    out << '\n';
  }
  return out.str();
}

std::pair<int, int> dimension_count(const PairTable& table, bool pairwise_equidistant) {
  std::size_t n = table.size();
  if (n < 2 || !table[0][1]) throw Error(ErrorCode::MixedConfiguration, "table is empty");
  const QuantPair& unit = *table[0][1];
  if (classify_interval(unit) != IntervalClass::PurelyAntichainLike) {
    throw Error(ErrorCode::MixedConfiguration, "adjacent pair is not purely antichain-like");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!table[i][j]) throw Error(ErrorCode::MixedConfiguration, "table has a missing entry");
      Rational k = pairwise_equidistant ? Rational(1) : Rational(static_cast<long long>(j - i));
      if (!(*table[i][j] == quant_pair(unit.first * k, unit.second * k))) {
        throw Error(ErrorCode::MixedConfiguration, pairwise_equidistant ? "chains are not pairwise equidistant"
                                                                        : "chains are not evenly collinear");
      }
    }
  }
  if (pairwise_equidistant) return {static_cast<int>(n) - 1, 1};
  return {1, 1};
}

}  // namespace chainproj
