#pragma once

#include <chainproj/poset.hpp>
#include <chainproj/rational.hpp>

#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace chainproj {

// A totally ordered run of events with a strictly monotone valuation. The
// elements are stored least-first; projections binary-search them.
class Chain {
 public:
  Chain() = default;

  /// Throws InvalidChain on size mismatch, repeated events or a
  /// valuation that is not strictly increasing.
  Chain(std::string id, std::vector<EventId> elements, std::vector<Rational> valuations);

  const std::string& id() const { return id_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }

  std::span<const EventId> elements() const { return elements_; }
  const std::vector<Rational>& valuations() const { return valuations_; }

  EventId at(std::size_t index) const { return elements_[index]; }
  const Rational& value_at(std::size_t index) const { return valuations_[index]; }

  std::optional<std::size_t> index_of(EventId id) const;
  bool contains(EventId id) const { return index_of(id).has_value(); }

  /// Throws UnknownEvent if the event is not on this chain.
  const Rational& valuation(EventId id) const;

  /// Checks that consecutive elements are strictly ordered in `poset`.
  /// Throws InvalidChain.
  void validate(const Poset& poset) const;

  /// The same events under the reversed order, with negated valuations so
  /// they stay strictly increasing.
  Chain dual() const;

  friend bool operator==(const Chain& a, const Chain& b) { return a.id_ == b.id_; }

 private:
  std::string id_;
  std::vector<EventId> elements_;
  std::vector<Rational> valuations_;
  std::unordered_map<EventId, std::size_t> index_;
};

/// Looks a chain up by id. Throws UnknownChain.
const Chain& find_chain(std::span<const Chain> chains, const std::string& id);

}  // namespace chainproj
