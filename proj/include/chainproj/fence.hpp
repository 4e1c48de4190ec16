#pragma once

#include <chainproj/chain.hpp>
#include <chainproj/poset.hpp>
#include <chainproj/rational.hpp>

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace chainproj {

// Three or more coordinated, collinear chains at uniform spacing, in order.
struct Fence {
  std::vector<Chain> chains;
  Rational spacing;

  std::size_t size() const { return chains.size(); }
  std::optional<std::size_t> position_of(const std::string& chain_id) const;
  const Chain& at(std::size_t i) const { return chains[i]; }
};

/// Throws TooFewChains, NotCoordinated, NonUniformSpacing, NotCollinear.
Fence validate_fence(const Poset& poset, std::span<const Chain> chains);

enum class Sharing { NoChain, OneChain, SomeChains, AllChains };

struct SharedChains {
  Sharing kind = Sharing::NoChain;
  std::vector<std::string> ids;  // in F1 order
};

std::string to_string(Sharing s);
SharedChains shared_chains(const Fence& f1, const Fence& f2);

struct ParallelResult {
  bool pass = true;
  SharedChains shared;
  std::size_t steps = 0;           // chains reached by walking from the shared pair
  std::size_t events_checked = 0;  // events whose projection equalities were replayed
  std::string note;
};

/// When the fences share two or more chains, walks outward from an adjacent
/// shared pair (A, B). With C the next chain of F1 and C' that of F2, every
/// event x of A must satisfy C(Bx) = C'(Bx), Cx = C(Bx) and C̄x = C̄(B̄x),
/// and likewise for C'; then C and C' must be the same chain.
/// Throws SpacingMismatch.
ParallelResult parallel_postulate_check(const Poset& poset, const Fence& f1, const Fence& f2);

struct DotResult {
  Rational signed_value;  // normalized by D(P,Q)
  Rational magnitude;
  Rational scaled;  // signed_value * D(P,Q)
};

/// (D(y,P)² - D(x,P)² - D(y,Q)² + D(x,Q)²) / (2 D(P,Q)). P and Q must be
/// distinct fence chains. Throws MissingProjection, TimeMismatch, UnknownChain.
DotResult dot_product(const Poset& poset, EventId x, EventId y, const Fence& fence, const std::string& P,
                      const std::string& Q);

}  // namespace chainproj
