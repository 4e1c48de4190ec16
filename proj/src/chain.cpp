#include <chainproj/chain.hpp>
#include <chainproj/error.hpp>

#include <algorithm>

namespace chainproj {

Chain::Chain(std::string id, std::vector<EventId> elements, std::vector<Rational> valuations)
    : id_(std::move(id)), elements_(std::move(elements)), valuations_(std::move(valuations)) {
  if (elements_.size() != valuations_.size()) {
    throw Error(ErrorCode::InvalidChain, "chain '" + id_ + "' has " + std::to_string(elements_.size()) +
                                             " events but " + std::to_string(valuations_.size()) +
                                             " valuations");
  }
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (!index_.emplace(elements_[i], i).second) {
      throw Error(ErrorCode::InvalidChain, "chain '" + id_ + "' repeats an event");
    }
    if (i > 0 && !(valuations_[i - 1] < valuations_[i])) {
      throw Error(ErrorCode::InvalidChain, "valuation of chain '" + id_ + "' is not strictly increasing");
    }
  }
}

std::optional<std::size_t> Chain::index_of(EventId id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const Rational& Chain::valuation(EventId id) const {
  auto idx = index_of(id);
  if (!idx) {
    throw Error(ErrorCode::UnknownEvent,
                "e" + std::to_string(raw(id)) + " is not on chain '" + id_ + "'");
  }
  return valuations_[*idx];
}

void Chain::validate(const Poset& poset) const {
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (!poset.contains(elements_[i])) {
      throw Error(ErrorCode::InvalidChain, "chain '" + id_ + "' references an unknown event");
    }
    if (i > 0 && !poset.less(elements_[i - 1], elements_[i])) {
      throw Error(ErrorCode::InvalidChain, "chain '" + id_ + "' is not totally ordered at position " +
                                               std::to_string(i));
    }
  }
}

Chain Chain::dual() const {
  std::vector<EventId> elements(elements_.rbegin(), elements_.rend());
  std::vector<Rational> values;
  values.reserve(valuations_.size());
  for (auto it = valuations_.rbegin(); it != valuations_.rend(); ++it) values.push_back(-*it);
  return Chain(id_, std::move(elements), std::move(values));
}

const Chain& find_chain(std::span<const Chain> chains, const std::string& id) {
  auto it = std::find_if(chains.begin(), chains.end(), [&](const Chain& c) { return c.id() == id; });
  if (it == chains.end()) throw Error(ErrorCode::UnknownChain, "no chain named '" + id + "'");
  return *it;
}

}  // namespace chainproj
