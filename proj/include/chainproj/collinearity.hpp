#pragma once

#include <chainproj/chain.hpp>
#include <chainproj/poset.hpp>

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace chainproj {

// Digits for the rows Px, P̄x, Qx, Q̄x. Column meanings:
//
//   Px : 0 PQx   1 PQ̄x   2 P̄Qx
//   P̄x : 0 P̄Qx   1 P̄Q̄x   2 PQ̄x
//   Qx : 0 QPx   1 QP̄x   2 Q̄Px
//   Q̄x : 0 Q̄Px   1 Q̄P̄x   2 QP̄x
//
// Composites apply right to left: P̄Qx = P̄(Q(x)).
struct ProjCode {
  static constexpr std::int8_t kUndefined = -1;
  std::array<std::int8_t, 4> digits{kUndefined, kUndefined, kUndefined, kUndefined};

  bool fully_defined() const;
  std::string str() const;  // e.g. "1010", 'x' for undefined digits
  friend bool operator==(const ProjCode&, const ProjCode&) = default;
};

/// Bit d of mask[row] is set when identity d holds for that row. An
/// identity holds only when both sides are defined and equal.
using CodeMasks = std::array<std::uint8_t, 4>;

enum class CollinearityCase { CaseI, CaseII, CaseIII, CaseIV, CaseV, NotCollinear };
enum class Sidedness { PSide, Between, QSide, None };

std::string to_string(CollinearityCase c);
std::string to_string(Sidedness s);

const std::array<ProjCode, 5>& legal_codes();  // I..V
CollinearityCase case_of(const ProjCode& code);
ProjCode code_of(CollinearityCase c);

/// Throws MissingProjection when one of Px, P̄x, Qx, Q̄x is absent,
/// IdenticalChains when P and Q are the same chain.
CodeMasks projection_masks(const Poset& poset, EventId x, const Chain& P, const Chain& Q);

/// Events on a chain satisfy several identities at once. The code is the
/// first legal code (order II, I, III, IV, V) consistent with every row;
/// otherwise each row takes its lowest holding column.
ProjCode code_from_masks(const CodeMasks& masks);

ProjCode projection_code(const Poset& poset, EventId x, const Chain& P, const Chain& Q);
CollinearityCase classify_collinearity(const Poset& poset, EventId x, const Chain& P, const Chain& Q);
bool is_properly_collinear(const Poset& poset, EventId x, const Chain& P, const Chain& Q);
Sidedness side_of(const Poset& poset, EventId x, const Chain& P, const Chain& Q);

/// Never throws for missing projections; they give false.
bool in_subspace(const Poset& poset, EventId x, const Chain& P, const Chain& Q);

/// True when the four direct and eight composite projections all exist.
bool fully_projectable(const Poset& poset, EventId x, const Chain& P, const Chain& Q);

/// Orders the chain ids so that the chain on the P side comes first:
/// PSide gives (X, P, Q), Between (P, X, Q), QSide (P, Q, X). Only events
/// of X with all four projections are consulted. Throws NotCollinear,
/// InconsistentSides, MissingProjection (no event classifiable).
std::array<std::string, 3> chain_order(const Poset& poset, const Chain& X, const Chain& P, const Chain& Q);

/// Every fully projectable event of X is properly collinear, there is at
/// least one, and the forward image on P, the backward image on P, and the
/// same two images on Q each cover a contiguous closed subchain.
bool chains_properly_collinear(const Poset& poset, const Chain& X, const Chain& P, const Chain& Q);

struct Census {
  std::map<std::string, std::size_t> histogram;  // code string -> count
  std::size_t classified = 0;
  std::size_t skipped = 0;  // events missing a direct projection
  bool legal_codes_only = true;
};

/// Codes every event of the poset against every listed (P, Q) pair.
Census census(const Poset& poset, std::span<const Chain> chains,
              std::span<const std::pair<std::size_t, std::size_t>> pairs);

/// All ordered pairs of distinct chains.
std::vector<std::pair<std::size_t, std::size_t>> all_ordered_pairs(std::size_t n);

}  // namespace chainproj
