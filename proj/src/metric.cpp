#include <chainproj/error.hpp>
#include <chainproj/metric.hpp>

#include <algorithm>
#include <limits>
#include <random>
#include <set>

namespace chainproj {

bool satisfies_triangle(const Rational& ac, const Rational& ab, const Rational& bc) {
  // sqrt(ac) <= sqrt(ab) + sqrt(bc)  <=>  ac - ab - bc <= 2 sqrt(ab bc)
  Rational lhs = ac - ab - bc;
  if (lhs <= 0) return true;
  return lhs * lhs <= 4 * ab * bc;
}

void MetricConfig::validate() const {
  std::size_t n = positions.size();
  if (sq_dist.size() != n) throw Error(ErrorCode::InvalidMetric, "distance matrix size mismatch");
  for (const auto& row : sq_dist) {
    if (row.size() != n) throw Error(ErrorCode::InvalidMetric, "distance matrix is not square");
  }
  std::set<std::string> seen;
  for (std::size_t i = 0; i < n; ++i) {
    if (!seen.insert(positions[i]).second) {
      throw Error(ErrorCode::InvalidMetric, "duplicate position '" + positions[i] + "'");
    }
    if (sq_dist[i][i] != 0) throw Error(ErrorCode::InvalidMetric, "nonzero self distance at " + positions[i]);
    for (std::size_t j = 0; j < n; ++j) {
      if (sq_dist[i][j] != sq_dist[j][i]) throw Error(ErrorCode::InvalidMetric, "asymmetric distances");
      if (i != j && sq_dist[i][j] <= 0) {
        throw Error(ErrorCode::InvalidMetric,
                    "distinct positions " + positions[i] + ", " + positions[j] + " need positive distance");
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (!satisfies_triangle(sq_dist[i][k], sq_dist[i][j], sq_dist[j][k])) {
          throw Error(ErrorCode::InvalidMetric, "triangle inequality fails for " + positions[i] + ", " +
                                                    positions[j] + ", " + positions[k]);
        }
      }
}

std::size_t MetricConfig::index_of(const std::string& position) const {
  auto it = std::find(positions.begin(), positions.end(), position);
  if (it == positions.end()) throw Error(ErrorCode::BadParams, "unknown position '" + position + "'");
  return static_cast<std::size_t>(it - positions.begin());
}

const Chain& MetricPoset::chain(const std::string& id) const { return find_chain(chains, id); }

EventId MetricPoset::event_at(const std::string& chain_id, const Rational& time) const {
  const Chain& c = chain(chain_id);
  const auto& values = c.valuations();
  auto it = std::lower_bound(values.begin(), values.end(), time);
  if (it == values.end() || *it != time) {
    throw Error(ErrorCode::UnknownEvent, "chain '" + chain_id + "' has no tick at " + to_string(time));
  }
  return c.at(static_cast<std::size_t>(it - values.begin()));
}

const Rational& MetricPoset::sq_dist(const Chain& a, const Chain& b) const {
  const EventSite& sa = site(a.at(0));
  const EventSite& sb = site(b.at(0));
  return config.sq_dist[sa.position][sb.position];
}

MetricPoset build_metric_poset(MetricConfig config, std::vector<WorldlineSpec> worldlines) {
  config.validate();
  std::vector<std::size_t> position_of;
  std::set<std::size_t> used;
  std::vector<std::size_t> offset;
  std::size_t total = 0;
  for (auto& w : worldlines) {
    if (w.tick_times.empty()) throw Error(ErrorCode::EmptyWorldline, "worldline at '" + w.position_id + "' has no ticks");
    for (std::size_t i = 1; i < w.tick_times.size(); ++i) {
      if (!(w.tick_times[i - 1] < w.tick_times[i])) {
        throw Error(ErrorCode::BadParams, "tick times at '" + w.position_id + "' are not strictly increasing");
      }
    }
    std::size_t pos = config.index_of(w.position_id);
    if (!used.insert(pos).second) {
      throw Error(ErrorCode::BadParams, "two worldlines share position '" + w.position_id + "'");
    }
    if (w.chain_id.empty()) w.chain_id = w.position_id;
    position_of.push_back(pos);
    offset.push_back(total);
    total += w.tick_times.size();
  }
  if (total > std::numeric_limits<std::uint32_t>::max()) throw Error(ErrorCode::BadParams, "too many events");

  MetricPoset out;
  std::vector<EventId> ids(total);
  out.sites.resize(total);
  for (std::size_t w = 0; w < worldlines.size(); ++w) {
    for (std::size_t i = 0; i < worldlines[w].tick_times.size(); ++i) {
      std::size_t e = offset[w] + i;
      ids[e] = EventId{static_cast<std::uint32_t>(e)};
      out.sites[e] = EventSite{position_of[w], w, worldlines[w].tick_times[i]};
    }
  }

  // The reachable ticks of worldline B from a tick of A form a suffix of B.
  std::vector<Bitset> up(total, Bitset(total));
  for (std::size_t a = 0; a < worldlines.size(); ++a) {
    const auto& ta = worldlines[a].tick_times;
    for (std::size_t b = 0; b < worldlines.size(); ++b) {
      const auto& tb = worldlines[b].tick_times;
      const Rational& d2 = config.sq_dist[position_of[a]][position_of[b]];
      for (std::size_t i = 0; i < ta.size(); ++i) {
        const Rational& t = ta[i];
        auto first = std::partition_point(tb.begin(), tb.end(), [&](const Rational& s) {
          if (s < t) return true;
          Rational dt = s - t;
          return dt * dt < d2;
        });
        std::size_t j = static_cast<std::size_t>(first - tb.begin());
        if (j < tb.size()) up[offset[a] + i].set(offset[b] + j, tb.size() - j, true);
      }
    }
  }
  out.poset = Poset::from_closure(std::move(ids), std::move(up));
  out.poset.freeze();

  for (std::size_t w = 0; w < worldlines.size(); ++w) {
    std::vector<EventId> elements;
    for (std::size_t i = 0; i < worldlines[w].tick_times.size(); ++i) {
      elements.push_back(EventId{static_cast<std::uint32_t>(offset[w] + i)});
    }
    out.chains.emplace_back(worldlines[w].chain_id, std::move(elements), worldlines[w].tick_times);
  }
  out.config = std::move(config);
  return out;
}

bool tick_aligned(const MetricPoset& mp, const Chain& a, const Chain& b) {
  Rational d;
  if (!is_perfect_square(mp.sq_dist(a, b), &d)) return false;
  auto check = [&](const Chain& from, const Chain& to) {
    const auto& times = to.valuations();
    for (const Rational& t : from.valuations()) {
      for (const Rational& target : {Rational(t + d), Rational(t - d)}) {
        if (target < times.front() || target > times.back()) continue;
        if (!std::binary_search(times.begin(), times.end(), target)) return false;
      }
    }
    return true;
  };
  return check(a, b) && check(b, a);
}

Integer lightcone_tick(const Integer& t, const Rational& d2) { return t + ceil_sqrt(d2); }

std::vector<Rational> tick_range(std::int64_t ticks, const Rational& step) {
  if (ticks < 0) throw Error(ErrorCode::BadParams, "ticks must be non-negative");
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(ticks) + 1);
  for (std::int64_t k = 0; k <= ticks; ++k) out.push_back(step * k);
  return out;
}

namespace {

MetricPoset line_config(const std::string& prefix, int n, const Rational& spacing, std::int64_t ticks,
                        bool equidistant) {
  if (n < 1) throw Error(ErrorCode::BadParams, "need at least one chain");
  if (spacing <= 0) throw Error(ErrorCode::BadParams, "spacing must be positive");
  MetricConfig config;
  Rational step(1, denominator(spacing));
  std::vector<WorldlineSpec> worldlines;
  for (int i = 0; i < n; ++i) {
    config.positions.push_back(prefix + std::to_string(i));
    std::vector<Rational> row;
    for (int j = 0; j < n; ++j) {
      Rational gap = equidistant ? Rational(i == j ? 0 : 1) : Rational(i - j);
      row.push_back(gap * gap * spacing * spacing);
    }
    config.sq_dist.push_back(std::move(row));
    worldlines.push_back({config.positions.back(), tick_range(ticks, step), {}});
  }
  return build_metric_poset(std::move(config), std::move(worldlines));
}

}  // namespace

MetricPoset lattice_1p1(std::int64_t width, std::int64_t ticks) {
  if (width < 0 || ticks < 0) throw Error(ErrorCode::BadParams, "width and ticks must be non-negative");
  return line_config("P", static_cast<int>(width + 1), 1, ticks, false);
}

EventId lattice_event(std::int64_t ticks, std::int64_t tick, std::int64_t position) {
  return EventId{static_cast<std::uint32_t>(position * (ticks + 1) + tick)};
}

MetricPoset simplex_config(int n_chains, const Rational& spacing, std::int64_t ticks) {
  if (n_chains < 2) throw Error(ErrorCode::BadParams, "a simplex needs at least two chains");
  return line_config("S", n_chains, spacing, ticks, true);
}

MetricPoset collinear_config(int n_chains, const Rational& spacing, std::int64_t ticks) {
  if (n_chains < 2) throw Error(ErrorCode::BadParams, "need at least two chains");
  return line_config("C", n_chains, spacing, ticks, false);
}

Rational sq_norm(const Point2& a, const Point2& b) {
  Rational dx = a.x - b.x;
  Rational dy = a.y - b.y;
  return dx * dx + dy * dy;
}

MetricPoset planar_config(const std::vector<PlanarSite>& sites) {
  MetricConfig config;
  std::vector<WorldlineSpec> worldlines;
  for (const auto& s : sites) {
    config.positions.push_back(s.id);
    std::vector<Rational> row;
    for (const auto& other : sites) row.push_back(sq_norm(s.at, other.at));
    config.sq_dist.push_back(std::move(row));
    worldlines.push_back({s.id, s.ticks, s.id});
  }
  return build_metric_poset(std::move(config), std::move(worldlines));
}

GridLayout grid_config(int rows, int cols, Point2 along, Point2 across, std::int64_t ticks) {
  if (rows < 1 || cols < 1) throw Error(ErrorCode::BadParams, "grid needs positive dimensions");
  GridLayout out;
  out.rows = rows;
  out.cols = cols;
  std::vector<PlanarSite> sites;
  auto range = tick_range(ticks);
  out.ids.assign(rows, std::vector<std::string>(cols));
  out.points.assign(rows, std::vector<Point2>(cols));
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      Point2 at{along.x * c + across.x * r, along.y * c + across.y * r};
      std::string id = "P_" + std::to_string(r + 1) + "_" + std::to_string(c + 1);
      out.ids[r][c] = id;
      out.points[r][c] = at;
      sites.push_back({id, at, range});
    }
  }
  out.mp = planar_config(sites);
  return out;
}

PythagorasLayout pythagoras_layout(const Integer& a, const Integer& b) {
  if (a < 0 || b < 0) throw Error(ErrorCode::BadParams, "legs must be non-negative");
  if (a == 0 && b == 0) throw Error(ErrorCode::BadParams, "at least one leg must be positive");
  Integer reach = std::max({Integer(2 * a), Integer(2 * b), ceil_sqrt(Rational(a * a + b * b))});
  std::int64_t span = static_cast<std::int64_t>(reach);
  std::int64_t mid = 3 * span;
  auto range = tick_range(6 * span);
  Rational ra(a), rb(b);
  PythagorasLayout out;
  out.a = a;
  out.b = b;
  std::vector<PlanarSite> sites{{"O", {0, 0}, range}};
  if (a > 0) {
    sites.push_back({"P", {-ra, 0}, range});
    sites.push_back({"Q", {ra, 0}, range});
  } else {
    out.p_chain = out.q_chain = "O";
  }
  if (b > 0) {
    sites.push_back({"R", {0, rb}, range});
    sites.push_back({"S", {0, -rb}, range});
  } else {
    out.r_chain = out.s_chain = "O";
  }
  out.mp = planar_config(sites);
  out.p = out.mp.event_at(out.p_chain, mid);
  out.q = out.mp.event_at(out.q_chain, mid);
  out.o = out.mp.event_at("O", mid);
  out.r = out.mp.event_at(out.r_chain, mid);
  return out;
}

DotLayout dot_layout(int n_chains, const Rational& spacing, const std::vector<Point2>& probes) {
  if (n_chains < 1 || spacing <= 0) throw Error(ErrorCode::BadParams, "bad fence parameters");
  DotLayout out;
  for (int i = 0; i < n_chains; ++i) out.fence_points.push_back({spacing * i, 0});
  Rational reach = 1;
  std::vector<Point2> all = out.fence_points;
  all.insert(all.end(), probes.begin(), probes.end());
  for (const auto& u : all)
    for (const auto& v : all) reach = std::max(reach, Rational(ceil_sqrt(sq_norm(u, v))));
  std::int64_t span = static_cast<std::int64_t>(ceil(reach));
  out.probe_time = 3 * span;
  auto range = tick_range(6 * span);
  std::vector<PlanarSite> sites;
  for (int i = 0; i < n_chains; ++i) {
    out.fence_ids.push_back("F" + std::to_string(i));
    sites.push_back({out.fence_ids.back(), out.fence_points[i], range});
  }
  for (std::size_t k = 0; k < probes.size(); ++k) {
    sites.push_back({"probe" + std::to_string(k), probes[k], {out.probe_time}});
  }
  out.mp = planar_config(sites);
  out.probe_points = probes;
  for (std::size_t k = 0; k < probes.size(); ++k) {
    out.probes.push_back(out.mp.event_at("probe" + std::to_string(k), out.probe_time));
  }
  return out;
}

Poset random_dag(std::size_t n_events, double edge_probability, std::uint64_t seed) {
  if (!(edge_probability >= 0.0 && edge_probability <= 1.0)) {
    throw Error(ErrorCode::BadParams, "edge probability must lie in [0, 1]");
  }
  std::mt19937_64 rng(seed);
  // Compare raw 64-bit draws against a fixed threshold so the result does
  // not depend on the standard library's distribution implementations.
  long double scaled = static_cast<long double>(edge_probability) * 18446744073709551616.0L;
  bool always = edge_probability >= 1.0;
  std::uint64_t threshold = always ? 0 : static_cast<std::uint64_t>(scaled);

  std::vector<EventId> ids(n_events);
  std::vector<Bitset> up(n_events, Bitset(n_events));
  std::vector<std::vector<std::size_t>> succ(n_events);
  for (std::size_t i = 0; i < n_events; ++i) {
    ids[i] = EventId{static_cast<std::uint32_t>(i)};
    for (std::size_t j = i + 1; j < n_events; ++j) {
      std::uint64_t draw = rng();
      if (always || draw < threshold) succ[i].push_back(j);
    }
  }
  for (std::size_t i = n_events; i-- > 0;) {
    up[i].set(i);
    for (std::size_t j : succ[i]) up[i] |= up[j];
  }
  Poset poset = Poset::from_closure(std::move(ids), std::move(up));
  poset.freeze();
  return poset;
}

std::vector<Chain> extract_chains(const Poset& poset, std::size_t count, std::size_t min_length) {
  std::size_t n = poset.size();
  std::vector<bool> used(n, false);
  std::vector<Chain> out;
  for (std::size_t k = 0; k < count; ++k) {
    // Longest path through unused events in creation order.
    std::vector<std::size_t> best(n, 0);
    std::vector<std::size_t> prev(n, n);
    std::size_t top = n;
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j]) continue;
      best[j] = 1;
      const Bitset& below = poset.down_set(j);
      for (auto i = below.find_first(); i != Bitset::npos && i < j; i = below.find_next(i)) {
        if (!used[i] && best[i] + 1 > best[j]) {
          best[j] = best[i] + 1;
          prev[j] = i;
        }
      }
      if (top == n || best[j] > best[top]) top = j;
    }
    if (top == n || best[top] < min_length) break;
    std::vector<EventId> elements;
    for (std::size_t at = top; at != n; at = prev[at]) {
      elements.push_back(poset.id_at(at));
      used[at] = true;
    }
    std::reverse(elements.begin(), elements.end());
    std::vector<Rational> values;
    for (std::size_t i = 0; i < elements.size(); ++i) values.emplace_back(static_cast<long long>(i));
    out.emplace_back("K" + std::to_string(k), std::move(elements), std::move(values));
  }
  return out;
}

}  // namespace chainproj
