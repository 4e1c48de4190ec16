#include <chainproj/coordination.hpp>
#include <chainproj/error.hpp>
#include <chainproj/grid.hpp>
#include <chainproj/projection.hpp>

namespace chainproj {

std::optional<std::pair<std::size_t, std::size_t>> Grid::find(const std::string& chain_id) const {
  for (std::size_t r = 0; r < chains.size(); ++r)
    for (std::size_t c = 0; c < chains[r].size(); ++c)
      if (chains[r][c].id() == chain_id) return std::pair{r, c};
  return std::nullopt;
}

std::pair<std::size_t, std::size_t> Grid::locate(EventId e) const {
  for (std::size_t r = 0; r < chains.size(); ++r)
    for (std::size_t c = 0; c < chains[r].size(); ++c)
      if (chains[r][c].contains(e)) return {r, c};
  throw Error(ErrorCode::NotOnGrid, "e" + std::to_string(raw(e)) + " is not on a grid chain");
}

namespace {

void require_parallel(const std::vector<Fence>& fences, const char* what) {
  for (std::size_t i = 0; i < fences.size(); ++i) {
    for (std::size_t j = i + 1; j < fences.size(); ++j) {
      if (fences[i].spacing != fences[j].spacing || shared_chains(fences[i], fences[j]).kind != Sharing::NoChain) {
        throw Error(ErrorCode::NotParallel,
                    std::string(what) + " " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " are not parallel");
      }
    }
  }
}

}  // namespace

Grid validate_grid(const Poset& poset, std::vector<std::vector<Chain>> chains) {
  if (chains.size() < 3 || chains[0].size() < 3) {
    throw Error(ErrorCode::TooFewChains, "a grid needs at least three rows and three columns");
  }
  for (const auto& row : chains) {
    if (row.size() != chains[0].size()) throw Error(ErrorCode::BadParams, "grid rows differ in length");
  }
  Grid g;
  for (const auto& row : chains) g.rows.push_back(validate_fence(poset, row));
  for (std::size_t c = 0; c < chains[0].size(); ++c) {
    std::vector<Chain> col;
    for (const auto& row : chains) col.push_back(row[c]);
    g.cols.push_back(validate_fence(poset, col));
  }
  require_parallel(g.rows, "rows");
  require_parallel(g.cols, "columns");
  g.chains = std::move(chains);
  return g;
}

namespace {

Rational sq(const Rational& r) { return r * r; }

Rational dist_sq(const Poset& poset, const Chain& a, const Chain& b) {
  if (a == b) return 0;
  return sq(chain_distance(poset, a, b));
}

}  // namespace

bool is_orthogonal_grid(const Poset& poset, const Grid& grid) {
  const auto& g = grid.chains;
  for (std::size_t r = 0; r + 1 < grid.row_count(); ++r) {
    for (std::size_t c = 0; c + 1 < grid.col_count(); ++c) {
      const Chain& a = g[r][c];
      const Chain& b = g[r][c + 1];
      const Chain& d = g[r + 1][c];
      const Chain& e = g[r + 1][c + 1];
      if (dist_sq(poset, a, e) != dist_sq(poset, a, b) + dist_sq(poset, b, e)) return false;
      if (dist_sq(poset, b, d) != dist_sq(poset, b, a) + dist_sq(poset, a, d)) return false;
    }
  }
  return true;
}

namespace {

struct RowPair {
  std::size_t row;
  std::size_t k;
  std::size_t l;
};

RowPair row_pair(const Grid& grid, const std::string& P_ik, const std::string& P_il) {
  auto a = grid.find(P_ik);
  auto b = grid.find(P_il);
  if (!a) throw Error(ErrorCode::NotOnGrid, "'" + P_ik + "' is not a grid chain");
  if (!b) throw Error(ErrorCode::NotOnGrid, "'" + P_il + "' is not a grid chain");
  if (a->first != b->first || a->second == b->second) {
    throw Error(ErrorCode::BadParams, "'" + P_ik + "' and '" + P_il + "' must be distinct chains of one row");
  }
  return {a->first, a->second, b->second};
}

}  // namespace

Rational wedge_product(const Poset& poset, EventId x, EventId y, const Grid& grid, const std::string& P_ik,
                       const std::string& P_il) {
  RowPair rp = row_pair(grid, P_ik, P_il);
  if (!is_orthogonal_grid(poset, grid)) throw Error(ErrorCode::NotOrthogonal, "grid is not orthogonal");
  std::size_t cx = grid.locate(x).second;
  std::size_t cy = grid.locate(y).second;
  Rational vx = event_chain_distance(poset, x, grid.chains[0][cx]);
  Rational vy = event_chain_distance(poset, y, grid.chains[0][cy]);
  Rational leg = chain_distance(poset, grid.chains[rp.row][rp.k], grid.chains[rp.row][rp.l]);
  Rational w = (vy - vx) * leg;
  return rp.l > rp.k ? w : Rational(-w);
}

GeometricResult geometric_identity_check(const Poset& poset, EventId x, EventId y, const Grid& grid,
                                         const std::string& P_ik, const std::string& P_il) {
  RowPair rp = row_pair(grid, P_ik, P_il);
  GeometricResult out;
  out.wedge = wedge_product(poset, x, y, grid, P_ik, P_il);
  auto [rx, cx] = grid.locate(x);
  auto [ry, cy] = grid.locate(y);
  const auto& g = grid.chains;
  out.distance_sq = dist_sq(poset, g[rx][cx], g[rx][cy]) + dist_sq(poset, g[rx][cy], g[ry][cy]);
  out.leg_sq = dist_sq(poset, g[rp.row][rp.k], g[rp.row][rp.l]);
  out.dot_scaled = dot_product(poset, x, y, grid.rows[rp.row], P_ik, P_il).scaled;
  out.pass = out.distance_sq * out.leg_sq == out.dot_scaled * out.dot_scaled + out.wedge * out.wedge;
  return out;
}

}  // namespace chainproj
