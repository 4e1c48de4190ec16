#include <chainproj/collinearity.hpp>
#include <chainproj/coordination.hpp>
#include <chainproj/error.hpp>
#include <chainproj/fence.hpp>
#include <chainproj/projection.hpp>

#include <algorithm>

namespace chainproj {

std::optional<std::size_t> Fence::position_of(const std::string& chain_id) const {
  for (std::size_t i = 0; i < chains.size(); ++i) {
    if (chains[i].id() == chain_id) return i;
  }
  return std::nullopt;
}

namespace {

bool between(const Poset& poset, const Chain& X, const Chain& P, const Chain& Q) {
  if (!chains_properly_collinear(poset, X, P, Q)) return false;
  try {
    auto order = chain_order(poset, X, P, Q);
    return order[1] == X.id();
  } catch (const Error&) {
    return false;
  }
}

}  // namespace

Fence validate_fence(const Poset& poset, std::span<const Chain> chains) {
  if (chains.size() < 3) throw Error(ErrorCode::TooFewChains, "a fence needs at least three chains");
  Fence out;
  out.chains.assign(chains.begin(), chains.end());
  for (std::size_t i = 0; i + 1 < chains.size(); ++i) {
    if (!are_coordinated(poset, chains[i], chains[i + 1])) {
      throw Error(ErrorCode::NotCoordinated,
                  "'" + chains[i].id() + "' and '" + chains[i + 1].id() + "' are not coordinated");
    }
    Rational d = chain_distance(poset, chains[i], chains[i + 1]);
    if (i == 0) {
      out.spacing = d;
    } else if (d != out.spacing) {
      throw Error(ErrorCode::NonUniformSpacing, "spacing " + to_string(d) + " between '" + chains[i].id() +
                                                    "' and '" + chains[i + 1].id() + "' differs from " +
                                                    to_string(out.spacing));
    }
  }
  const Chain& first = chains.front();
  const Chain& last = chains.back();
  for (std::size_t i = 1; i + 1 < chains.size(); ++i) {
    bool ok = between(poset, chains[i], chains[i - 1], chains[i + 1]);
    if (ok && chains.size() > 3) ok = between(poset, chains[i], first, last);
    if (!ok) {
      throw Error(ErrorCode::NotCollinear, "'" + chains[i].id() + "' does not lie between its neighbours");
    }
  }
  return out;
}

std::string to_string(Sharing s) {
  switch (s) {
    case Sharing::NoChain: return "NoChain";
    case Sharing::OneChain: return "OneChain";
    case Sharing::SomeChains: return "SomeChains";
    case Sharing::AllChains: return "AllChains";
  }
  return "?";
}

SharedChains shared_chains(const Fence& f1, const Fence& f2) {
  SharedChains out;
  for (const Chain& c : f1.chains) {
    if (f2.position_of(c.id())) out.ids.push_back(c.id());
  }
  if (out.ids.empty()) out.kind = Sharing::NoChain;
  else if (out.ids.size() == 1) out.kind = Sharing::OneChain;
  else if (out.ids.size() == f1.size() && out.ids.size() == f2.size()) out.kind = Sharing::AllChains;
  else out.kind = Sharing::SomeChains;
  return out;
}

namespace {

using Opt = std::optional<EventId>;

Opt fwd(const Poset& poset, Opt x, const Chain& c) { return x ? forward_project(poset, *x, c) : std::nullopt; }
Opt bwd(const Poset& poset, Opt x, const Chain& c) { return x ? backward_project(poset, *x, c) : std::nullopt; }

// One proof step: A, B known shared and adjacent, C and C' the next chains
// of the two fences. Returns false on any broken equality.
bool replay_step(const Poset& poset, const Chain& A, const Chain& B, const Chain& C, const Chain& C2,
                 ParallelResult& out) {
  for (EventId x : A.elements()) {
    Opt bx = forward_project(poset, x, B);
    Opt bbx = backward_project(poset, x, B);
    Opt cbx = fwd(poset, bx, C);
    Opt c2bx = fwd(poset, bx, C2);
    if (!cbx && !c2bx) continue;
    ++out.events_checked;
    if (cbx != c2bx) return false;
    for (const Chain* next : {&C, &C2}) {
      Opt direct = forward_project(poset, x, *next);
      Opt back_direct = backward_project(poset, x, *next);
      Opt back_via = bwd(poset, bbx, *next);
      if (direct != cbx) return false;
      if (back_direct && back_via && back_direct != back_via) return false;
    }
  }
  return C.id() == C2.id();
}

}  // namespace

ParallelResult parallel_postulate_check(const Poset& poset, const Fence& f1, const Fence& f2) {
  if (f1.spacing != f2.spacing) {
    throw Error(ErrorCode::SpacingMismatch,
                "fence spacings " + to_string(f1.spacing) + " and " + to_string(f2.spacing) + " differ");
  }
  ParallelResult out;
  out.shared = shared_chains(f1, f2);
  if (out.shared.ids.size() < 2) {
    out.note = to_string(out.shared.kind) + ": fewer than two shared chains, nothing to prove";
    return out;
  }
  std::optional<std::size_t> start;
  for (std::size_t i = 0; i + 1 < f1.size() && !start; ++i) {
    if (f2.position_of(f1.at(i).id()) && f2.position_of(f1.at(i + 1).id())) start = i;
  }
  if (!start) {
    out.pass = false;
    out.note = "shared chains are not adjacent in the first fence";
    return out;
  }
  std::size_t ja = *f2.position_of(f1.at(*start).id());
  std::size_t jb = *f2.position_of(f1.at(*start + 1).id());
  if (ja + 1 != jb && jb + 1 != ja) {
    out.pass = false;
    out.note = "shared pair is not adjacent in the second fence";
    return out;
  }
  long dir = jb > ja ? 1 : -1;
  auto walk = [&](long i_prev, long i_cur, long di, long j_prev, long j_cur, long dj) {
    long n1 = static_cast<long>(f1.size());
    long n2 = static_cast<long>(f2.size());
    while (i_cur + di >= 0 && i_cur + di < n1 && j_cur + dj >= 0 && j_cur + dj < n2) {
      const Chain& A = f1.at(static_cast<std::size_t>(i_prev));
      const Chain& B = f1.at(static_cast<std::size_t>(i_cur));
      const Chain& C = f1.at(static_cast<std::size_t>(i_cur + di));
      const Chain& C2 = f2.at(static_cast<std::size_t>(j_cur + dj));
      if (f2.at(static_cast<std::size_t>(j_prev)).id() != A.id() || f2.at(static_cast<std::size_t>(j_cur)).id() != B.id()) {
        return false;
      }
      ++out.steps;
      if (!replay_step(poset, A, B, C, C2, out)) return false;
      i_prev = i_cur;
      i_cur += di;
      j_prev = j_cur;
      j_cur += dj;
    }
    return true;
  };
  long i0 = static_cast<long>(*start);
  bool up = walk(i0, i0 + 1, 1, static_cast<long>(ja), static_cast<long>(jb), dir);
  bool down = walk(i0 + 1, i0, -1, static_cast<long>(jb), static_cast<long>(ja), -dir);
  out.pass = up && down;
  if (!out.pass) out.note = "fences diverge after sharing two chains";
  return out;
}

DotResult dot_product(const Poset& poset, EventId x, EventId y, const Fence& fence, const std::string& P,
                      const std::string& Q) {
  auto ip = fence.position_of(P);
  auto iq = fence.position_of(Q);
  if (!ip) throw Error(ErrorCode::UnknownChain, "'" + P + "' is not in the fence");
  if (!iq) throw Error(ErrorCode::UnknownChain, "'" + Q + "' is not in the fence");
  if (*ip == *iq) throw Error(ErrorCode::IdenticalChains, "dot product needs two distinct fence chains");
  const Chain& cp = fence.at(*ip);
  const Chain& cq = fence.at(*iq);
  for (const Chain* c : {&cp, &cq}) {
    if (time_coordinate(poset, x, *c) != time_coordinate(poset, y, *c)) {
      throw Error(ErrorCode::TimeMismatch, "events differ in time with respect to '" + c->id() + "'");
    }
  }
  Rational dpq = chain_distance(poset, cp, cq);
  Rational numerator = event_chain_distance_sq(poset, y, cp) - event_chain_distance_sq(poset, x, cp) -
                       event_chain_distance_sq(poset, y, cq) + event_chain_distance_sq(poset, x, cq);
  DotResult out;
  out.signed_value = numerator / (2 * dpq);
  out.magnitude = abs(out.signed_value);
  out.scaled = out.signed_value * dpq;
  return out;
}

}  // namespace chainproj
