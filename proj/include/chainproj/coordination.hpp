#pragma once

#include <chainproj/chain.hpp>
#include <chainproj/metric.hpp>
#include <chainproj/poset.hpp>
#include <chainproj/projection.hpp>

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace chainproj {

// Closed run of chain indices [lo, hi].
struct Window {
  std::size_t lo = 0;
  std::size_t hi = 0;
  std::size_t size() const { return hi - lo + 1; }
};

/// Largest window of P whose events project both ways onto Q.
std::optional<Window> default_window(const Poset& poset, const Chain& P, const Chain& Q);

/// Forward and backward projections from each window into the other chain
/// must be injective, land on a contiguous run and preserve every gap.
/// Throws Unquantifiable when a window event lacks a projection.
bool are_coordinated(const Poset& poset, const Chain& P, const Chain& Q, Window p_window, Window q_window);

/// Same over the default windows; false when either is empty.
bool are_coordinated(const Poset& poset, const Chain& P, const Chain& Q);

struct CoordinatedPair {
  std::string P;
  std::string Q;
  Window p_window;
  Window q_window;
};
std::optional<CoordinatedPair> coordinate(const Poset& poset, const Chain& P, const Chain& Q);

/// D(P,Q) = D(p,Q) for p in P. Throws MissingProjection when no event of P
/// projects both ways, NotCoordinated when the value varies along P.
Rational chain_distance(const Poset& poset, const Chain& P, const Chain& Q);

struct OrthogonalityReport {
  QuantPair pq_wrt_pq;        // expected (d, -d), d != 0
  QuantPair pq_wrt_rs;        // expected (0, 0)
  QuantPair backward_images;  // [R̄p, S̄p] wrt PQ, expected (0, 0)
  QuantPair forward_images;   // [Rp, Sp] wrt PQ, expected (0, 0)
  bool pass = false;
};

/// Throws MissingProjection.
OrthogonalityReport check_orthogonal_subspaces(const Poset& poset, const Chain& P, const Chain& Q, const Chain& R,
                                               const Chain& S, EventId p, EventId q);

struct ScalarTriple {
  Rational a;
  Rational b;
  Rational combined;  // a + b
};

/// Inputs must be purely antichain-like or (0,0). Throws NotAntichainLike.
ScalarTriple concatenate_orthogonal(const QuantPair& pair_a, const QuantPair& pair_b);

struct PythagorasResult {
  QuantPair leg_a;       // [p,o] wrt (P,O)
  QuantPair leg_b;       // [o,r] wrt (O,R)
  QuantPair hypotenuse;  // [p,r] wrt (P,R)
  ScalarTriple scalars;
  Rational hypotenuse_scalar;
  bool orthogonal = false;
  bool pass = false;
};

/// Throws AlignmentError when a leg or the hypotenuse is not tick-aligned.
PythagorasResult pythagoras_check(const PythagorasLayout& layout);

enum class SimplexMode { Collinear, Pairwise };

// table[i][j] for i < j holds [x_i, x_j] where x_k is the event of chain k at
// the common time. Collinear mode quantifies against the outer chains,
// Pairwise mode against chains i and j.
using PairTable = std::vector<std::vector<std::optional<QuantPair>>>;

PairTable simplex_table(const Poset& poset, std::span<const Chain> chains, SimplexMode mode,
                        std::optional<Rational> time = std::nullopt);

/// CSV matrix, cells "first;second", empty on and below the diagonal.
std::string table_csv(const PairTable& table, std::span<const Chain> chains);

/// (spatial, temporal). Throws MixedConfiguration when the table does not
/// show the requested pattern.
std::pair<int, int> dimension_count(const PairTable& table, bool pairwise_equidistant);

}  // namespace chainproj
