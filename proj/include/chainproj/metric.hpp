#pragma once

#include <chainproj/chain.hpp>
#include <chainproj/poset.hpp>
#include <chainproj/rational.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace chainproj {

// Finite metric over worldline positions, stored as exact squared distances.
struct MetricConfig {
  std::vector<std::string> positions;
  std::vector<std::vector<Rational>> sq_dist;

  /// Throws InvalidMetric: non-square matrix, asymmetry, negative entries,
  /// nonzero diagonal, zero distance between distinct positions, or a
  /// triangle inequality violation (checked exactly in squared form).
  void validate() const;

  std::size_t index_of(const std::string& position) const;
};

/// sqrt(ac) <= sqrt(ab) + sqrt(bc), decided without square roots.
bool satisfies_triangle(const Rational& ac, const Rational& ab, const Rational& bc);

struct WorldlineSpec {
  std::string position_id;
  std::vector<Rational> tick_times;  // strictly increasing
  std::string chain_id;              // defaults to position_id
};

struct EventSite {
  std::size_t position = 0;  // index into MetricConfig::positions
  std::size_t worldline = 0;
  Rational time;
};

// A poset whose order is induced by a metric: (t1,p1) <= (t2,p2) iff
// t2 - t1 >= 0 and (t2 - t1)^2 >= sq_dist(p1,p2). Each worldline is a chain
// valued by its tick times. Event ids are dense, worldline-major.
struct MetricPoset {
  Poset poset;  // frozen
  std::vector<Chain> chains;
  MetricConfig config;
  std::vector<EventSite> sites;  // indexed by raw(EventId)

  const Chain& chain(const std::string& id) const;
  const EventSite& site(EventId id) const { return sites.at(raw(id)); }

  /// Event of chain `chain_id` at `time`. Throws UnknownEvent.
  EventId event_at(const std::string& chain_id, const Rational& time) const;

  const Rational& sq_dist(const Chain& a, const Chain& b) const;
};

/// Throws InvalidMetric, EmptyWorldline, BadParams (unknown position,
/// unsorted ticks, two worldlines on one position).
MetricPoset build_metric_poset(MetricConfig config, std::vector<WorldlineSpec> worldlines);

/// True when every light-cone crossing between the two worldlines lands
/// exactly on a tick, i.e. chain projections reproduce the metric distance.
bool tick_aligned(const MetricPoset& mp, const Chain& a, const Chain& b);

/// First integer tick reachable from integer tick `t` across squared
/// distance `d2`: t + ceil(sqrt(d2)).
Integer lightcone_tick(const Integer& t, const Rational& d2);

// --- presets --------------------------------------------------------------

/// Integer tick times 0..ticks in steps of `step`.
std::vector<Rational> tick_range(std::int64_t ticks, const Rational& step = 1);

/// Positions 0..width on a line at unit spacing, chains "P0".."P<width>",
/// integer ticks 0..ticks. Event e(t, p) has id p*(ticks+1) + t.
MetricPoset lattice_1p1(std::int64_t width, std::int64_t ticks);
EventId lattice_event(std::int64_t ticks, std::int64_t tick, std::int64_t position);

/// n chains "S0".. with every pairwise squared distance spacing^2.
MetricPoset simplex_config(int n_chains, const Rational& spacing, std::int64_t ticks);

/// n chains "C0".. on a line at arithmetic spacing.
MetricPoset collinear_config(int n_chains, const Rational& spacing, std::int64_t ticks);

struct Point2 {
  Rational x;
  Rational y;
};

struct PlanarSite {
  std::string id;
  Point2 at;
  std::vector<Rational> ticks;
};

/// Euclidean layout in the plane; squared distances come from coordinates.
MetricPoset planar_config(const std::vector<PlanarSite>& sites);

Rational sq_norm(const Point2& a, const Point2& b);

/// rows x cols chains "P_<r>_<c>" (1-based) at origin + (c-1)*along + (r-1)*across.
struct GridLayout {
  MetricPoset mp;
  int rows = 0;
  int cols = 0;
  std::vector<std::vector<std::string>> ids;  // [row][col]
  std::vector<std::vector<Point2>> points;
};
GridLayout grid_config(int rows, int cols, Point2 along, Point2 across, std::int64_t ticks);

// Orthogonal two-subspace layout: O at the origin, P and Q at (-a,0),(a,0),
// R and S at (0,b),(0,-b); events p, q, o, r share the middle tick. A zero
// leg collapses its pair onto O: with a = 0 there is no P or Q, p_chain is
// "O" and p == q == o.
struct PythagorasLayout {
  MetricPoset mp;
  Integer a;
  Integer b;
  std::string p_chain = "P", q_chain = "Q", r_chain = "R", s_chain = "S";
  EventId p{}, q{}, o{}, r{};
};
PythagorasLayout pythagoras_layout(const Integer& a, const Integer& b);

// Fence of `n` chains "F0".. along the x-axis at `spacing`, plus one-tick
// probe worldlines at the given points, all at the middle tick.
struct DotLayout {
  MetricPoset mp;
  std::vector<std::string> fence_ids;
  std::vector<EventId> probes;
  std::vector<Point2> probe_points;
  std::vector<Point2> fence_points;
  Rational probe_time;
};
DotLayout dot_layout(int n_chains, const Rational& spacing, const std::vector<Point2>& probes);

/// Layered random DAG: event i precedes event j (i < j) with probability p,
/// closed transitively. Deterministic for a given seed. Frozen.
Poset random_dag(std::size_t n_events, double edge_probability, std::uint64_t seed);

/// Greedily peels up to `count` longest chains (valued 0,1,2,...) off a poset
/// whose creation order is a linear extension.
std::vector<Chain> extract_chains(const Poset& poset, std::size_t count, std::size_t min_length = 2);

}  // namespace chainproj
