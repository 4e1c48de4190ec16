#include <chainproj/error.hpp>
#include <chainproj/poset.hpp>

#include <algorithm>
#include <string>

namespace chainproj {

namespace {

std::string label(EventId id) { return "e" + std::to_string(raw(id)); }

}  // namespace

void require_frozen(const Poset& poset) {
  if (!poset.frozen()) throw Error(ErrorCode::NotFrozen, "geometry queries need a frozen poset");
}

void Poset::require_mutable() const {
  if (frozen_) throw Error(ErrorCode::FrozenPoset, "poset is frozen");
}

void Poset::invalidate_covers() { covers_ = std::make_shared<CoverCache>(); }

void Poset::add_event(EventId id) {
  require_mutable();
  if (contains(id)) throw Error(ErrorCode::DuplicateEvent, label(id) + " already present");
  std::size_t n = ids_.size();
  if (raw(id) != n) dense_ = false;
  ids_.push_back(id);
  index_.emplace(id, n);
  for (auto& row : up_) row.push_back(false);
  for (auto& row : down_) row.push_back(false);
  up_.emplace_back(n + 1);
  down_.emplace_back(n + 1);
  up_[n].set(n);
  down_[n].set(n);
  invalidate_covers();
}

EventId Poset::add_event() {
  std::uint32_t next = 0;
  for (EventId id : ids_) next = std::max(next, raw(id) + 1);
  EventId id{next};
  add_event(id);
  return id;
}

bool Poset::contains(EventId id) const {
  if (dense_) return raw(id) < ids_.size();
  return index_.count(id) != 0;
}

std::size_t Poset::index_of(EventId id) const {
  if (dense_) {
    if (raw(id) < ids_.size()) return raw(id);
  } else if (auto it = index_.find(id); it != index_.end()) {
    return it->second;
  }
  throw Error(ErrorCode::UnknownEvent, label(id) + " is not in the poset");
}

void Poset::add_influence(EventId a, EventId b) {
  require_mutable();
  std::size_t ia = index_of(a);
  std::size_t ib = index_of(b);
  if (up_[ia].test(ib)) return;
  if (up_[ib].test(ia)) {
    throw Error(ErrorCode::CycleViolation, label(a) + " <= " + label(b) + " would close a cycle");
  }
  // Everything below a now reaches everything above b.
  const Bitset above = up_[ib];
  const Bitset below = down_[ia];
  for (auto u = below.find_first(); u != Bitset::npos; u = below.find_next(u)) up_[u] |= above;
  for (auto v = above.find_first(); v != Bitset::npos; v = above.find_next(v)) down_[v] |= below;
  invalidate_covers();
}

bool Poset::leq(EventId a, EventId b) const { return up_[index_of(a)].test(index_of(b)); }

const std::vector<Bitset>& Poset::cover_rows() const {
  auto cache = covers_;
  std::call_once(cache->once, [&] {
    std::size_t n = ids_.size();
    cache->rows.assign(n, Bitset(n));
    for (std::size_t a = 0; a < n; ++a) {
      Bitset strict = up_[a];
      strict.reset(a);
      Bitset result = strict;
      for (auto z = strict.find_first(); z != Bitset::npos; z = strict.find_next(z)) {
        if (!result.any()) break;
        Bitset beyond = up_[z];
        beyond.reset(z);
        result -= beyond;
      }
      cache->rows[a] = std::move(result);
    }
  });
  return cache->rows;
}

bool Poset::covers(EventId a, EventId b) const {
  std::size_t ia = index_of(a);
  std::size_t ib = index_of(b);
  return cover_rows()[ia].test(ib);
}

std::vector<std::pair<EventId, EventId>> Poset::cover_pairs() const {
  const auto& rows = cover_rows();
  std::vector<std::pair<EventId, EventId>> out;
  for (std::size_t a = 0; a < rows.size(); ++a) {
    for (auto b = rows[a].find_first(); b != Bitset::npos; b = rows[a].find_next(b)) {
      out.emplace_back(ids_[a], ids_[b]);
    }
  }
  return out;
}

bool Poset::is_chain(std::span<const EventId> events) const {
  for (std::size_t i = 0; i < events.size(); ++i) {
    for (std::size_t j = i + 1; j < events.size(); ++j) {
      if (!comparable(events[i], events[j])) return false;
    }
  }
  return true;
}

Poset Poset::dual() const {
  Poset out;
  out.ids_ = ids_;
  out.index_ = index_;
  out.dense_ = dense_;
  out.up_ = down_;
  out.down_ = up_;
  return out;
}

OrderAxioms Poset::check_order_axioms() const {
  OrderAxioms axioms;
  std::size_t n = ids_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!up_[i].test(i)) axioms.reflexive = false;
    for (auto j = up_[i].find_next(i); j != Bitset::npos; j = up_[i].find_next(j)) {
      if (up_[j].test(i)) axioms.antisymmetric = false;
    }
    for (auto j = up_[i].find_first(); j != Bitset::npos; j = up_[i].find_next(j)) {
      if (j < i && up_[j].test(i)) axioms.antisymmetric = false;
      if (!up_[j].is_subset_of(up_[i])) axioms.transitive = false;
    }
  }
  return axioms;
}

Poset Poset::from_closure(std::vector<EventId> ids, std::vector<Bitset> up) {
  std::size_t n = ids.size();
  if (up.size() != n) throw Error(ErrorCode::BadParams, "closure row count does not match events");
  Poset out;
  out.ids_ = std::move(ids);
  for (std::size_t i = 0; i < n; ++i) {
    if (raw(out.ids_[i]) != i) out.dense_ = false;
    if (!out.index_.emplace(out.ids_[i], i).second) {
      throw Error(ErrorCode::DuplicateEvent, label(out.ids_[i]) + " listed twice");
    }
    if (up[i].size() != n) throw Error(ErrorCode::BadParams, "closure row has the wrong width");
    up[i].set(i);
  }
  out.down_.assign(n, Bitset(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (auto j = up[i].find_first(); j != Bitset::npos; j = up[i].find_next(j)) out.down_[j].set(i);
  }
  out.up_ = std::move(up);
  return out;
}

}  // namespace chainproj
