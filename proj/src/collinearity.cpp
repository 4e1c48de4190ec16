#include <chainproj/collinearity.hpp>
#include <chainproj/error.hpp>
#include <chainproj/projection.hpp>

#include <algorithm>

namespace chainproj {

bool ProjCode::fully_defined() const {
  return std::none_of(digits.begin(), digits.end(), [](std::int8_t d) { return d == kUndefined; });
}

std::string ProjCode::str() const {
  std::string out;
  for (std::int8_t d : digits) out.push_back(d == kUndefined ? 'x' : static_cast<char>('0' + d));
  return out;
}

std::string to_string(CollinearityCase c) {
  switch (c) {
    case CollinearityCase::CaseI: return "CaseI";
    case CollinearityCase::CaseII: return "CaseII";
    case CollinearityCase::CaseIII: return "CaseIII";
    case CollinearityCase::CaseIV: return "CaseIV";
    case CollinearityCase::CaseV: return "CaseV";
    case CollinearityCase::NotCollinear: return "NotCollinear";
  }
  return "?";
}

std::string to_string(Sidedness s) {
  switch (s) {
    case Sidedness::PSide: return "PSide";
    case Sidedness::Between: return "Between";
    case Sidedness::QSide: return "QSide";
    case Sidedness::None: return "None";
  }
  return "?";
}

const std::array<ProjCode, 5>& legal_codes() {
  static const std::array<ProjCode, 5> codes{{
      {{2, 2, 0, 1}},
      {{1, 0, 1, 0}},
      {{0, 1, 2, 2}},
      {{0, 2, 2, 1}},
      {{2, 1, 0, 2}},
  }};
  return codes;
}

CollinearityCase case_of(const ProjCode& code) {
  const auto& legal = legal_codes();
  for (std::size_t i = 0; i < legal.size(); ++i) {
    if (legal[i] == code) return static_cast<CollinearityCase>(i);
  }
  return CollinearityCase::NotCollinear;
}

ProjCode code_of(CollinearityCase c) {
  if (c == CollinearityCase::NotCollinear) return ProjCode{};
  return legal_codes()[static_cast<std::size_t>(c)];
}

namespace {

using Opt = std::optional<std::size_t>;

// Projection indices of one event against a chain pair. Composite entries
// are indices into the outer chain.
struct Projections {
  Opt p, pb, q, qb;
  Opt pq, pqb, pbq, pbqb;  // P(Qx), P(Q̄x), P̄(Qx), P̄(Q̄x)
  Opt qp, qpb, qbp, qbpb;  // Q(Px), Q(P̄x), Q̄(Px), Q̄(P̄x)
};

Opt through(const Poset& poset, const Chain& via, Opt at, const Chain& onto, bool forward) {
  if (!at) return std::nullopt;
  EventId e = via.at(*at);
  return forward ? forward_index(poset, e, onto) : backward_index(poset, e, onto);
}

Projections project_all(const Poset& poset, EventId x, const Chain& P, const Chain& Q) {
  if (P == Q) throw Error(ErrorCode::IdenticalChains, "chains P and Q must differ");
  Projections r;
  r.p = forward_index(poset, x, P);
  r.pb = backward_index(poset, x, P);
  r.q = forward_index(poset, x, Q);
  r.qb = backward_index(poset, x, Q);
  r.pq = through(poset, Q, r.q, P, true);
  r.pqb = through(poset, Q, r.qb, P, true);
  r.pbq = through(poset, Q, r.q, P, false);
  r.pbqb = through(poset, Q, r.qb, P, false);
  r.qp = through(poset, P, r.p, Q, true);
  r.qpb = through(poset, P, r.pb, Q, true);
  r.qbp = through(poset, P, r.p, Q, false);
  r.qbpb = through(poset, P, r.pb, Q, false);
  return r;
}

void require_direct(const Projections& r, EventId x, const Chain& P, const Chain& Q) {
  if (!r.p || !r.pb || !r.q || !r.qb) {
    throw Error(ErrorCode::MissingProjection, "e" + std::to_string(raw(x)) +
                                                  " lacks a projection onto '" + P.id() + "' or '" + Q.id() + "'");
  }
}

std::uint8_t row_mask(const Opt& lhs, std::initializer_list<Opt> candidates) {
  std::uint8_t mask = 0;
  std::uint8_t bit = 1;
  for (const Opt& c : candidates) {
    if (lhs && c && *lhs == *c) mask |= bit;
    bit <<= 1;
  }
  return mask;
}

CodeMasks masks_of(const Projections& r) {
  return {row_mask(r.p, {r.pq, r.pqb, r.pbq}), row_mask(r.pb, {r.pbq, r.pbqb, r.pqb}),
          row_mask(r.q, {r.qp, r.qpb, r.qbp}), row_mask(r.qb, {r.qbp, r.qbpb, r.qpb})};
}

}  // namespace

CodeMasks projection_masks(const Poset& poset, EventId x, const Chain& P, const Chain& Q) {
  Projections r = project_all(poset, x, P, Q);
  require_direct(r, x, P, Q);
  return masks_of(r);
}

ProjCode code_from_masks(const CodeMasks& masks) {
  static constexpr std::array<std::size_t, 5> priority{1, 0, 2, 3, 4};
  for (std::size_t i : priority) {
    const ProjCode& code = legal_codes()[i];
    bool consistent = true;
    for (std::size_t row = 0; row < 4 && consistent; ++row) {
      consistent = (masks[row] >> code.digits[row]) & 1u;
    }
    if (consistent) return code;
  }
  ProjCode out;
  for (std::size_t row = 0; row < 4; ++row) {
    for (std::int8_t d = 0; d < 3; ++d) {
      if ((masks[row] >> d) & 1u) {
        out.digits[row] = d;
        break;
      }
    }
  }
  return out;
}

ProjCode projection_code(const Poset& poset, EventId x, const Chain& P, const Chain& Q) {
  return code_from_masks(projection_masks(poset, x, P, Q));
}

CollinearityCase classify_collinearity(const Poset& poset, EventId x, const Chain& P, const Chain& Q) {
  return case_of(projection_code(poset, x, P, Q));
}

bool is_properly_collinear(const Poset& poset, EventId x, const Chain& P, const Chain& Q) {
  CollinearityCase c = classify_collinearity(poset, x, P, Q);
  return c == CollinearityCase::CaseI || c == CollinearityCase::CaseII || c == CollinearityCase::CaseIII;
}

Sidedness side_of(const Poset& poset, EventId x, const Chain& P, const Chain& Q) {
  switch (classify_collinearity(poset, x, P, Q)) {
    case CollinearityCase::CaseI: return Sidedness::PSide;
    case CollinearityCase::CaseII: return Sidedness::Between;
    case CollinearityCase::CaseIII: return Sidedness::QSide;
    default: return Sidedness::None;
  }
}

bool in_subspace(const Poset& poset, EventId x, const Chain& P, const Chain& Q) {
  if (P == Q) return false;
  Projections r = project_all(poset, x, P, Q);
  if (!r.p || !r.pb || !r.q || !r.qb) return false;
  CollinearityCase c = case_of(code_from_masks(masks_of(r)));
  return c == CollinearityCase::CaseI || c == CollinearityCase::CaseII || c == CollinearityCase::CaseIII;
}

bool fully_projectable(const Poset& poset, EventId x, const Chain& P, const Chain& Q) {
  Projections r = project_all(poset, x, P, Q);
  for (const Opt* o : {&r.p, &r.pb, &r.q, &r.qb, &r.pq, &r.pqb, &r.pbq, &r.pbqb, &r.qp, &r.qpb, &r.qbp, &r.qbpb}) {
    if (!*o) return false;
  }
  return true;
}

std::array<std::string, 3> chain_order(const Poset& poset, const Chain& X, const Chain& P, const Chain& Q) {
  if (X == P || X == Q || P == Q) throw Error(ErrorCode::IdenticalChains, "chain_order needs three distinct chains");
  std::optional<Sidedness> side;
  for (EventId x : X.elements()) {
    Projections r = project_all(poset, x, P, Q);
    if (!r.p || !r.pb || !r.q || !r.qb) continue;
    CollinearityCase c = case_of(code_from_masks(masks_of(r)));
    Sidedness s = c == CollinearityCase::CaseI     ? Sidedness::PSide
                  : c == CollinearityCase::CaseII  ? Sidedness::Between
                  : c == CollinearityCase::CaseIII ? Sidedness::QSide
                                                   : Sidedness::None;
    if (s == Sidedness::None) {
      throw Error(ErrorCode::NotCollinear, "e" + std::to_string(raw(x)) + " of '" + X.id() +
                                               "' is not properly collinear with '" + P.id() + "', '" + Q.id() + "'");
    }
    if (side && *side != s) {
      throw Error(ErrorCode::InconsistentSides, "events of '" + X.id() + "' lie on different sides");
    }
    side = s;
  }
  if (!side) throw Error(ErrorCode::MissingProjection, "no event of '" + X.id() + "' projects onto both chains");
  switch (*side) {
    case Sidedness::PSide: return {X.id(), P.id(), Q.id()};
    case Sidedness::Between: return {P.id(), X.id(), Q.id()};
    default: return {P.id(), Q.id(), X.id()};
  }
}

bool chains_properly_collinear(const Poset& poset, const Chain& X, const Chain& P, const Chain& Q) {
  if (X == P || X == Q || P == Q) throw Error(ErrorCode::IdenticalChains, "chains must be distinct");
  // Forward and backward images, each onto P and onto Q.
  std::array<std::vector<bool>, 4> hit{std::vector<bool>(P.size()), std::vector<bool>(P.size()),
                                       std::vector<bool>(Q.size()), std::vector<bool>(Q.size())};
  bool any = false;
  for (EventId x : X.elements()) {
    Projections r = project_all(poset, x, P, Q);
    bool complete = true;
    for (const Opt* o : {&r.p, &r.pb, &r.q, &r.qb, &r.pq, &r.pqb, &r.pbq, &r.pbqb, &r.qp, &r.qpb, &r.qbp, &r.qbpb}) {
      complete = complete && o->has_value();
    }
    if (!complete) continue;
    CollinearityCase c = case_of(code_from_masks(masks_of(r)));
    if (c != CollinearityCase::CaseI && c != CollinearityCase::CaseII && c != CollinearityCase::CaseIII) return false;
    any = true;
    hit[0][*r.p] = hit[1][*r.pb] = true;
    hit[2][*r.q] = hit[3][*r.qb] = true;
  }
  if (!any) return false;
  auto contiguous = [](const std::vector<bool>& hit) {
    auto first = std::find(hit.begin(), hit.end(), true);
    auto last = std::find(hit.rbegin(), hit.rend(), true).base();
    return std::all_of(first, last, [](bool b) { return b; });
  };
  return std::all_of(hit.begin(), hit.end(), contiguous);
}

Census census(const Poset& poset, std::span<const Chain> chains,
              std::span<const std::pair<std::size_t, std::size_t>> pairs) {
  Census out;
  for (auto [i, j] : pairs) {
    const Chain& P = chains[i];
    const Chain& Q = chains[j];
    for (EventId x : poset.events()) {
      Projections r = project_all(poset, x, P, Q);
      if (!r.p || !r.pb || !r.q || !r.qb) {
        ++out.skipped;
        continue;
      }
      ProjCode code = code_from_masks(masks_of(r));
      ++out.histogram[code.str()];
      ++out.classified;
      if (code.fully_defined() && case_of(code) == CollinearityCase::NotCollinear) out.legal_codes_only = false;
    }
  }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> all_ordered_pairs(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) out.emplace_back(i, j);
  return out;
}

}  // namespace chainproj
