#include <chainproj/collinearity.hpp>
#include <chainproj/coordination.hpp>
#include <chainproj/document.hpp>
#include <chainproj/error.hpp>
#include <chainproj/fence.hpp>
#include <chainproj/grid.hpp>
#include <chainproj/metric.hpp>
#include <chainproj/projection.hpp>
#include <chainproj/suites.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>

namespace chainproj {

using nlohmann::json;

bool RunReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

void RunReport::add(std::string check, json in, const Rational& value, bool ok) {
  checks.push_back({std::move(check), std::move(in), to_string(value), ok});
}

json RunReport::to_json() const {
  json list = json::array();
  for (const auto& c : checks) {
    list.push_back({{"check", c.check}, {"inputs", c.inputs}, {"value", c.value}, {"pass", c.pass}});
  }
  json out{{"command", command}, {"inputs", inputs}, {"checks", list}, {"pass", pass()}};
  if (!details.is_null()) out["details"] = details;
  out["wall_time_us"] = wall_time_us;
  return out;
}

namespace {

Rational count(std::size_t n) { return Rational(static_cast<long long>(n)); }

json pair_json(const QuantPair& q) { return json::array({to_string(q.first), to_string(q.second)}); }

void suite_census(RunReport& r, const SuiteParams&) {
  auto mp = lattice_1p1(8, 60);
  auto pairs = all_ordered_pairs(mp.chains.size());
  Census c = census(mp.poset, mp.chains, pairs);
  json hist = json::object();
  std::size_t full = 0;
  for (const auto& [code, n] : c.histogram) {
    hist[code] = n;
    if (code.find('x') == std::string::npos) full += n;
  }
  r.add("legal_codes_only", {{"width", 8}, {"ticks", 60}, {"pairs", pairs.size()}, {"histogram", hist}},
        count(full), c.legal_codes_only);
}

void suite_geography(RunReport& r, const SuiteParams&) {
  auto mp = lattice_1p1(9, 40);
  const Chain& P = mp.chains[3];
  const Chain& Q = mp.chains[6];
  std::size_t checked = 0, wrong = 0;
  for (int pos = 0; pos <= 9; ++pos) {
    if (pos == 3 || pos == 6) continue;
    Sidedness want = pos < 3 ? Sidedness::PSide : pos < 6 ? Sidedness::Between : Sidedness::QSide;
    for (int t = 0; t <= 40; ++t) {
      EventId x = lattice_event(40, t, pos);
      Sidedness got;
      try {
        got = side_of(mp.poset, x, P, Q);
      } catch (const Error&) {
        continue;
      }
      ++checked;
      if (got != want) ++wrong;
    }
  }
  r.add("side_by_position", {{"P", 3}, {"Q", 6}, {"events", checked}}, count(wrong), wrong == 0 && checked > 0);
}

void suite_duality(RunReport& r, const SuiteParams& params) {
  auto flip = [](CollinearityCase c) {
    if (c == CollinearityCase::CaseIV) return CollinearityCase::CaseV;
    if (c == CollinearityCase::CaseV) return CollinearityCase::CaseIV;
    return c;
  };
  auto run = [&](const std::string& name, const Poset& poset, const std::vector<Chain>& chains) {
    Poset dual = poset.dual();
    dual.freeze();
    std::vector<Chain> dual_chains;
    for (const Chain& c : chains) dual_chains.push_back(c.dual());
    std::size_t checked = 0, wrong = 0;
    for (auto [i, j] : all_ordered_pairs(chains.size())) {
      for (EventId x : poset.events()) {
        CollinearityCase a;
        try {
          a = classify_collinearity(poset, x, chains[i], chains[j]);
        } catch (const Error&) {
          continue;
        }
        ++checked;
        if (classify_collinearity(dual, x, dual_chains[i], dual_chains[j]) != flip(a)) ++wrong;
      }
    }
    r.add("dual_" + name, {{"events", checked}}, count(wrong), wrong == 0);
  };
  auto lattice = lattice_1p1(6, 30);
  run("lattice", lattice.poset, lattice.chains);
  std::mt19937_64 rng(params.seed);
  for (int k = 0; k < 5; ++k) {
    std::uint64_t seed = rng();
    Poset p = random_dag(40, 0.1, seed);
    run("randomdag_" + std::to_string(k), p, extract_chains(p, 4, 3));
  }
}

void suite_simplex(RunReport& r, const SuiteParams&) {
  struct Case {
    std::string name;
    bool pairwise;
    int n;
  };
  for (const Case& c : {Case{"collinear3", false, 3}, Case{"collinear4", false, 4}, Case{"pairwise3", true, 3},
                        Case{"pairwise4", true, 4}}) {
    MetricPoset mp = c.pairwise ? simplex_config(c.n, 1, 20) : collinear_config(c.n, 1, 20);
    PairTable table =
        simplex_table(mp.poset, mp.chains, c.pairwise ? SimplexMode::Pairwise : SimplexMode::Collinear);
    bool ok = true;
    json cells = json::array();
    for (int i = 0; i < c.n; ++i) {
      for (int j = i + 1; j < c.n; ++j) {
        Rational k = c.pairwise ? Rational(1) : Rational(j - i);
        ok = ok && *table[i][j] == quant_pair(k, -k);
        cells.push_back(pair_json(*table[i][j]));
      }
    }
    r.add("table_" + c.name, {{"pairs", cells}}, count(cells.size()), ok);
    auto dims = dimension_count(table, c.pairwise);
    int want = c.pairwise ? c.n - 1 : 1;
    r.add("dimension_" + c.name, {{"temporal", dims.second}}, Rational(dims.first), dims.first == want && dims.second == 1);
  }
}

std::vector<std::pair<int, int>> triples(int max_leg) {
  std::vector<std::pair<int, int>> out;
  for (int a = 1; a <= max_leg; ++a) {
    for (int b = 1; b <= max_leg; ++b) {
      Rational root;
      if (is_perfect_square(Rational(a * a + b * b), &root)) out.emplace_back(a, b);
    }
  }
  return out;
}

void suite_pythagoras(RunReport& r, const SuiteParams& params) {
  r.inputs["max_leg"] = params.max_leg;
  for (auto [a, b] : triples(params.max_leg)) {
    PythagorasResult res = pythagoras_check(pythagoras_layout(a, b));
    bool ok = res.pass && res.scalars.a == -a * a && res.scalars.b == -b * b;
    r.add("pythagoras", {{"a", a}, {"b", b}, {"legs", json::array({pair_json(res.leg_a), pair_json(res.leg_b)})},
                         {"hypotenuse", pair_json(res.hypotenuse)}},
          res.hypotenuse_scalar, ok);
  }
}

void suite_orthogonal(RunReport& r, const SuiteParams&) {
  auto ticks = tick_range(60);
  for (bool on_bisector : {true, false}) {
    Rational rx = on_bisector ? 3 : 6;
    Rational ry = on_bisector ? 4 : 8;
    auto mp = planar_config({{"P", {0, 0}, ticks}, {"Q", {6, 0}, ticks}, {"R", {rx, ry}, ticks}, {"S", {rx, -ry}, ticks}});
    auto rep = check_orthogonal_subspaces(mp.poset, mp.chain("P"), mp.chain("Q"), mp.chain("R"), mp.chain("S"),
                                          mp.event_at("P", 30), mp.event_at("Q", 30));
    r.add(on_bisector ? "bisector" : "off_bisector",
          {{"pq_wrt_pq", pair_json(rep.pq_wrt_pq)},
           {"pq_wrt_rs", pair_json(rep.pq_wrt_rs)},
           {"backward_images", pair_json(rep.backward_images)},
           {"forward_images", pair_json(rep.forward_images)}},
          rep.pq_wrt_pq.first, rep.pass == on_bisector);
  }
}

void suite_parallel(RunReport& r, const SuiteParams& params) {
  auto mp = lattice_1p1(20, 100);
  std::map<std::pair<int, int>, Fence> fences;
  auto fence = [&](int lo, int hi) -> const Fence& {
    auto it = fences.find({lo, hi});
    if (it == fences.end()) {
      std::vector<Chain> run(mp.chains.begin() + lo, mp.chains.begin() + hi + 1);
      it = fences.emplace(std::pair{lo, hi}, validate_fence(mp.poset, run)).first;
    }
    return it->second;
  };
  std::mt19937_64 rng(params.seed);
  auto pick = [&]() {
    int lo = static_cast<int>(rng() % 19);
    int hi = lo + 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(19 - lo));
    return std::pair{lo, hi};
  };
  std::size_t sharing = 0, failures = 0, events = 0;
  for (int t = 0; t < params.trials; ++t) {
    auto [a, b] = pick();
    auto [c, d] = pick();
    ParallelResult res = parallel_postulate_check(mp.poset, fence(a, b), fence(c, d));
    if (res.shared.ids.size() >= 2) ++sharing;
    events += res.events_checked;
    if (!res.pass) ++failures;
  }
  r.add("parallel_postulate", {{"trials", params.trials}, {"sharing_two_or_more", sharing}, {"events_replayed", events}},
        count(failures), failures == 0);
}

// Probe points with integer distance to every chain of a three-chain fence
// at spacing s along the x-axis.
std::vector<Point2> integral_probes(int s) {
  std::vector<Point2> out;
  for (int x = 0; x <= 2 * s; ++x) {
    for (int y = 1; y <= 3 * s; ++y) {
      bool ok = true;
      for (int k = 0; k < 3 && ok; ++k) ok = is_perfect_square(Rational((x - k * s) * (x - k * s) + y * y));
      if (ok) out.push_back({x, y});
    }
  }
  return out;
}

void suite_dot(RunReport& r, const SuiteParams&) {
  {
    auto dl = dot_layout(3, 3, {{0, 4}});
    std::vector<Chain> chains;
    for (const auto& id : dl.fence_ids) chains.push_back(dl.mp.chain(id));
    Fence f = validate_fence(dl.mp.poset, chains);
    EventId x = dl.probes[0];
    EventId p = dl.mp.event_at("F0", dl.probe_time);
    EventId q = dl.mp.event_at("F1", dl.probe_time);
    const Poset& poset = dl.mp.poset;
    auto same = dot_product(poset, x, x, f, "F0", "F1");
    r.add("special_case_same_event", {}, same.signed_value, same.signed_value == 0);
    auto pq = dot_product(poset, p, q, f, "F0", "F1");
    r.add("special_case_p_to_q", {}, pq.signed_value, pq.signed_value == 3);
    auto qp = dot_product(poset, q, p, f, "F0", "F1");
    r.add("special_case_q_to_p", {}, qp.signed_value, qp.signed_value == -3);
    auto ex = dot_product(poset, x, q, f, "F0", "F1");
    r.add("probe_example", {{"x", "(0,4)"}, {"y", "(3,0)"}}, ex.signed_value, ex.signed_value == 3);
  }
  std::size_t layouts = 0;
  for (int s : {3, 4, 6, 8, 9, 12}) {
    auto probes = integral_probes(s);
    if (probes.empty()) continue;
    auto dl = dot_layout(3, s, probes);
    std::vector<Chain> chains;
    for (const auto& id : dl.fence_ids) chains.push_back(dl.mp.chain(id));
    Fence f = validate_fence(dl.mp.poset, chains);
    for (std::size_t k = 0; k < probes.size(); ++k) {
      for (int c = 0; c < 3; ++c) {
        EventId y = dl.mp.event_at(dl.fence_ids[c], dl.probe_time);
        Rational want = dl.fence_points[c].x - probes[k].x;
        bool independent = true;
        Rational value = dot_product(dl.mp.poset, dl.probes[k], y, f, "F0", "F1").signed_value;
        for (auto [i, j] : {std::pair{0, 2}, std::pair{1, 2}}) {
          independent = independent &&
                        dot_product(dl.mp.poset, dl.probes[k], y, f, dl.fence_ids[i], dl.fence_ids[j]).signed_value == value;
        }
        r.add("euclidean_inner_product",
              {{"spacing", s}, {"probe", json::array({to_string(probes[k].x), to_string(probes[k].y)})}, {"chain", c}},
              value, value == want && independent);
        ++layouts;
      }
    }
  }
  r.add("layout_count", {}, count(layouts), layouts >= 20);
}

struct GridCase {
  std::size_t r1, c1, r2, c2, row, k, l;
};

std::vector<GridCase> aligned_cases(const GridLayout& g) {
  std::map<std::pair<std::string, std::string>, bool> memo;
  auto aligned = [&](std::size_t ra, std::size_t ca, std::size_t rb, std::size_t cb) {
    if (ra == rb && ca == cb) return true;
    auto key = std::pair{g.ids[ra][ca], g.ids[rb][cb]};
    auto it = memo.find(key);
    if (it == memo.end()) {
      it = memo.emplace(key, tick_aligned(g.mp, g.mp.chain(key.first), g.mp.chain(key.second))).first;
    }
    return it->second;
  };
  std::vector<GridCase> out;
  std::size_t n = static_cast<std::size_t>(g.rows), m = static_cast<std::size_t>(g.cols);
  for (std::size_t r1 = 0; r1 < n; ++r1)
    for (std::size_t c1 = 0; c1 < m; ++c1)
      for (std::size_t r2 = 0; r2 < n; ++r2)
        for (std::size_t c2 = 0; c2 < m; ++c2)
          for (std::size_t row = 0; row < n; ++row)
            for (std::size_t k = 0; k < m; ++k)
              for (std::size_t l = 0; l < m; ++l) {
                if (k == l) continue;
                if (aligned(r1, c1, row, k) && aligned(r1, c1, row, l) && aligned(r2, c2, row, k) &&
                    aligned(r2, c2, row, l)) {
                  out.push_back({r1, c1, r2, c2, row, k, l});
                }
              }
  return out;
}

void suite_grid(RunReport& r, bool identity) {
  std::size_t layouts = 0;
  for (auto [a, b] : std::vector<std::pair<int, int>>{{3, 4}, {4, 3}, {6, 8}, {5, 12}}) {
    int reach = 2 * static_cast<int>(ceil_sqrt(Rational(a * a + b * b)));
    GridLayout g = grid_config(3, 3, {a, 0}, {0, b}, 6 * reach);
    std::vector<std::vector<Chain>> arr(3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) arr[i].push_back(g.mp.chain(g.ids[i][j]));
    Grid grid = validate_grid(g.mp.poset, arr);
    const Poset& poset = g.mp.poset;
    Rational t = 3 * reach;
    std::vector<GridCase> cases = aligned_cases(g);
    std::size_t stride = std::max<std::size_t>(1, cases.size() / 40);
    for (std::size_t n = 0; n < cases.size(); n += stride) {
      const GridCase& c = cases[n];
      EventId x = g.mp.event_at(g.ids[c.r1][c.c1], t);
      EventId y = g.mp.event_at(g.ids[c.r2][c.c2], t);
      const std::string& pk = g.ids[c.row][c.k];
      const std::string& pl = g.ids[c.row][c.l];
      Point2 u = g.points[c.row][c.k], v = g.points[c.row][c.l];
      Point2 px = g.points[c.r1][c.c1], py = g.points[c.r2][c.c2];
      Rational lx = v.x - u.x, ly = v.y - u.y, dx = py.x - px.x, dy = py.y - px.y;
      json in{{"cell", json::array({a, b})}, {"x", g.ids[c.r1][c.c1]}, {"y", g.ids[c.r2][c.c2]}, {"P_ik", pk}, {"P_il", pl}};
      if (identity) {
        GeometricResult res = geometric_identity_check(poset, x, y, grid, pk, pl);
        r.add("geometric_identity", in, res.distance_sq * res.leg_sq, res.pass);
      } else {
        Rational w = wedge_product(poset, x, y, grid, pk, pl);
        Rational wr = wedge_product(poset, y, x, grid, pk, pl);
        r.add("wedge_cross_product", in, w, w == lx * dy - ly * dx && wr == -w);
      }
      ++layouts;
    }
  }
  r.add("layout_count", {}, count(layouts), layouts >= 20);
}

void suite_structural(RunReport& r, const SuiteParams& params) {
  auto mp = lattice_1p1(5, 40);
  std::size_t idem = 0, mono = 0;
  for (const Chain& P : mp.chains) {
    for (EventId x : mp.poset.events()) {
      auto f = forward_project(mp.poset, x, P);
      if (f && forward_project(mp.poset, *f, P) != f) ++idem;
      auto b = backward_project(mp.poset, x, P);
      if (b && backward_project(mp.poset, *b, P) != b) ++idem;
    }
  }
  r.add("projection_idempotence", {}, count(idem), idem == 0);
  std::mt19937_64 rng(params.seed);
  for (int k = 0; k < 2000; ++k) {
    EventId x = mp.poset.id_at(rng() % mp.poset.size());
    EventId y = mp.poset.id_at(rng() % mp.poset.size());
    if (!mp.poset.leq(x, y)) continue;
    const Chain& P = mp.chains[rng() % mp.chains.size()];
    auto fx = forward_project(mp.poset, x, P), fy = forward_project(mp.poset, y, P);
    auto bx = backward_project(mp.poset, x, P), by = backward_project(mp.poset, y, P);
    if (fx && fy && !mp.poset.leq(*fx, *fy)) ++mono;
    if (bx && by && !mp.poset.leq(*bx, *by)) ++mono;
  }
  r.add("projection_monotonicity", {}, count(mono), mono == 0);
  std::size_t round = 0;
  for (int a = -6; a <= 6; ++a)
    for (int b = -6; b <= 6; ++b) {
      auto [s, t] = sym_antisym_decompose(quant_pair(Rational(a, 2), b));
      if (!(quant_pair(s.first + t.first, s.second + t.second) == quant_pair(Rational(a, 2), b))) ++round;
    }
  r.add("decomposition_round_trip", {}, count(round), round == 0);
  Poset dag = random_dag(150, 0.05, params.seed);
  OrderAxioms ax = dag.check_order_axioms();
  r.add("order_axioms", {{"events", 150}}, count(dag.cover_pairs().size()), ax.ok());
  std::string text = chainproj::to_json(mp.poset, mp.chains).dump();
  PosetDocument back = parse_document(text);
  r.add("json_round_trip", {{"bytes", text.size()}}, count(text.size()),
        chainproj::to_json(back.poset, back.chains).dump() == text);
}

using SuiteFn = std::function<void(RunReport&, const SuiteParams&)>;

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites{
      {"census", suite_census},
      {"geography", suite_geography},
      {"duality", suite_duality},
      {"simplex", suite_simplex},
      {"pythagoras", suite_pythagoras},
      {"orthogonal", suite_orthogonal},
      {"parallel", suite_parallel},
      {"dot", suite_dot},
      {"wedge", [](RunReport& r, const SuiteParams&) { suite_grid(r, false); }},
      {"geoproduct", [](RunReport& r, const SuiteParams&) { suite_grid(r, true); }},
      {"structural", suite_structural},
  };
  return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

RunReport run_suite(const std::string& name, const SuiteParams& params) {
  const auto& suites = registry();
  auto it = std::find_if(suites.begin(), suites.end(), [&](const auto& s) { return s.first == name; });
  if (it == suites.end()) throw Error(ErrorCode::UnknownSuite, "no suite named '" + name + "'");
  RunReport report;
  report.command = "verify";
  report.inputs = {{"suite", name}, {"seed", params.seed}};
  auto start = std::chrono::steady_clock::now();
  it->second(report, params);
  report.wall_time_us =
      std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace chainproj
