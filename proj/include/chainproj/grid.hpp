#pragma once

#include <chainproj/chain.hpp>
#include <chainproj/fence.hpp>
#include <chainproj/poset.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace chainproj {

// chains[r][c]; every row and every column is a fence, rows are mutually
// parallel and so are columns.
struct Grid {
  std::vector<std::vector<Chain>> chains;
  std::vector<Fence> rows;
  std::vector<Fence> cols;

  std::size_t row_count() const { return chains.size(); }
  std::size_t col_count() const { return chains.empty() ? 0 : chains[0].size(); }

  std::optional<std::pair<std::size_t, std::size_t>> find(const std::string& chain_id) const;
  /// Cell of the chain holding the event. Throws NotOnGrid.
  std::pair<std::size_t, std::size_t> locate(EventId e) const;
};

/// Throws TooFewChains (fewer than 3 rows or columns), the fence errors,
/// and NotParallel when two rows (or columns) share a chain or differ in
/// spacing.
Grid validate_grid(const Poset& poset, std::vector<std::vector<Chain>> chains);

/// Every unit cell satisfies the discrete Pythagorean relation on both
/// diagonals.
bool is_orthogonal_grid(const Poset& poset, const Grid& grid);

/// (v(y) - v(x)) * D(P_ik, P_il), signed by the direction from k to l, where
/// v(e) is the distance from e to the first-row chain of its column.
/// P_ik and P_il must be distinct chains of one row. Throws NotOrthogonal,
/// NotOnGrid, BadParams.
Rational wedge_product(const Poset& poset, EventId x, EventId y, const Grid& grid, const std::string& P_ik,
                       const std::string& P_il);

struct GeometricResult {
  Rational distance_sq;  // D(x,y)² via the legs through the corner chain
  Rational leg_sq;       // D(P_ik, P_il)²
  Rational dot_scaled;
  Rational wedge;
  bool pass = false;
};

/// D(x,y)² D(P_ik,P_il)² = dot² + wedge².
GeometricResult geometric_identity_check(const Poset& poset, EventId x, EventId y, const Grid& grid,
                                         const std::string& P_ik, const std::string& P_il);

}  // namespace chainproj
