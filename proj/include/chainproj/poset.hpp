#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <memory>
#include <mutex>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

namespace chainproj {

/// Opaque event identifier, unique within a Poset.
enum class EventId : std::uint32_t {};

constexpr std::uint32_t raw(EventId id) noexcept { return static_cast<std::uint32_t>(id); }

using Bitset = boost::dynamic_bitset<std::uint64_t>;

struct OrderAxioms {
  bool reflexive = true;
  bool antisymmetric = true;
  bool transitive = true;

  bool ok() const { return reflexive && antisymmetric && transitive; }
};

// Finite partially-ordered set of events.
//
// The closure is kept as one reachability row per event (up-set) plus its
// transpose (down-set), both indexed by the dense creation index. Order
// queries are O(1); add_influence updates the closure incrementally. The
// cover relation (transitive reduction) is derived lazily and cached.
//
// A poset is mutable until freeze(); afterwards it only answers queries and
// is safe to share between threads.
class Poset {
 public:
  Poset() = default;

  /// Throws DuplicateEvent if `id` is present, FrozenPoset after freeze().
  void add_event(EventId id);

  /// Adds an event with the next unused identifier and returns it.
  EventId add_event();

  /// Records a <= b and closes transitively. Idempotent. Throws
  /// UnknownEvent, or CycleViolation when b < a already holds.
  void add_influence(EventId a, EventId b);

  bool leq(EventId a, EventId b) const;
  bool less(EventId a, EventId b) const { return a != b && leq(a, b); }
  bool comparable(EventId a, EventId b) const { return leq(a, b) || leq(b, a); }

  /// True iff b covers a: a < b with nothing strictly between.
  bool covers(EventId a, EventId b) const;

  bool is_chain(std::span<const EventId> events) const;

  /// All cover pairs (a, b), sorted by creation index of a then b.
  std::vector<std::pair<EventId, EventId>> cover_pairs() const;

  bool contains(EventId id) const;
  std::size_t size() const { return ids_.size(); }
  const std::vector<EventId>& events() const { return ids_; }

  /// Dense creation index of an event. Throws UnknownEvent.
  std::size_t index_of(EventId id) const;
  EventId id_at(std::size_t index) const { return ids_[index]; }

  /// Row of the closure: bit j is set iff event(index) <= event(j).
  const Bitset& up_set(std::size_t index) const { return up_[index]; }
  const Bitset& down_set(std::size_t index) const { return down_[index]; }

  void freeze() { frozen_ = true; }
  bool frozen() const { return frozen_; }

  /// The order-reversed poset over the same identifiers (unfrozen).
  Poset dual() const;

  /// Brute-force check of reflexivity, antisymmetry and transitivity of the
  /// stored closure.
  OrderAxioms check_order_axioms() const;

  /// Builds a poset from a complete closure. `up[i]` must contain bit j iff
  /// ids[i] <= ids[j]; the relation is trusted, use check_order_axioms() to
  /// audit it.
  static Poset from_closure(std::vector<EventId> ids, std::vector<Bitset> up);

 private:
  struct CoverCache {
    std::once_flag once;
    std::vector<Bitset> rows;
  };

  void require_mutable() const;
  void invalidate_covers();
  const std::vector<Bitset>& cover_rows() const;

  std::vector<EventId> ids_;
  std::unordered_map<EventId, std::size_t> index_;
  bool dense_ = true;  // ids_[i] == i for every i
  std::vector<Bitset> up_;
  std::vector<Bitset> down_;
  bool frozen_ = false;
  mutable std::shared_ptr<CoverCache> covers_ = std::make_shared<CoverCache>();
};

/// Throws NotFrozen unless the poset has been frozen.
void require_frozen(const Poset& poset);

}  // namespace chainproj
