#include <chainproj/error.hpp>
#include <chainproj/rational.hpp>

#include <cctype>

namespace chainproj {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicateEvent: return "DuplicateEvent";
    case ErrorCode::UnknownEvent: return "UnknownEvent";
    case ErrorCode::CycleViolation: return "CycleViolation";
    case ErrorCode::FrozenPoset: return "FrozenPoset";
    case ErrorCode::NotFrozen: return "NotFrozen";
    case ErrorCode::InvalidChain: return "InvalidChain";
    case ErrorCode::UnknownChain: return "UnknownChain";
    case ErrorCode::InvalidMetric: return "InvalidMetric";
    case ErrorCode::EmptyWorldline: return "EmptyWorldline";
    case ErrorCode::Unquantifiable: return "Unquantifiable";
    case ErrorCode::NotBetween: return "NotBetween";
    case ErrorCode::MissingProjection: return "MissingProjection";
    case ErrorCode::IdenticalChains: return "IdenticalChains";
    case ErrorCode::InconsistentSides: return "InconsistentSides";
    case ErrorCode::NotCollinear: return "NotCollinear";
    case ErrorCode::NotCoordinated: return "NotCoordinated";
    case ErrorCode::NonUniformSpacing: return "NonUniformSpacing";
    case ErrorCode::TooFewChains: return "TooFewChains";
    case ErrorCode::SpacingMismatch: return "SpacingMismatch";
    case ErrorCode::TimeMismatch: return "TimeMismatch";
    case ErrorCode::NotAntichainLike: return "NotAntichainLike";
    case ErrorCode::AlignmentError: return "AlignmentError";
    case ErrorCode::MixedConfiguration: return "MixedConfiguration";
    case ErrorCode::NotParallel: return "NotParallel";
    case ErrorCode::NotOrthogonal: return "NotOrthogonal";
    case ErrorCode::NotOnGrid: return "NotOnGrid";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::UnknownSuite: return "UnknownSuite";
    case ErrorCode::UnknownFormat: return "UnknownFormat";
  }
  return "UnknownError";
}

std::string to_string(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

namespace {

Integer parse_integer(std::string_view text, std::string_view whole) {
  std::size_t i = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) i = 1;
  if (i == text.size()) throw Error(ErrorCode::ParseError, "bad rational '" + std::string(whole) + "'");
  for (std::size_t k = i; k < text.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(text[k])))
      throw Error(ErrorCode::ParseError, "bad rational '" + std::string(whole) + "'");
  }
  Integer value(std::string(text.substr(i)));
  return text[0] == '-' ? Integer(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  Integer num = parse_integer(text.substr(0, slash), text);
  Integer den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(num, den);
}

Integer numerator(const Rational& r) { return boost::multiprecision::numerator(r); }

Integer denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

Integer floor(const Rational& r) {
  Integer n = numerator(r);
  Integer d = denominator(r);
  Integer q = n / d;
  if (n < 0 && q * d != n) q -= 1;
  return q;
}

Integer ceil(const Rational& r) {
  Integer f = floor(r);
  return Rational(f) == r ? f : Integer(f + 1);
}

Integer ceil_sqrt(const Rational& r) {
  if (r < 0) throw Error(ErrorCode::BadParams, "ceil_sqrt of a negative rational");
  // k*k >= n/d  <=>  k*k*d >= n; start from isqrt(n/d) and step up.
  Integer n = numerator(r);
  Integer d = denominator(r);
  Integer k = boost::multiprecision::sqrt(Integer(n / d));
  while (k * k * d < n) ++k;
  return k;
}

bool is_perfect_square(const Rational& r, Rational* root) {
  if (r < 0) return false;
  Integer n = numerator(r);
  Integer d = denominator(r);
  Integer sn = boost::multiprecision::sqrt(n);
  Integer sd = boost::multiprecision::sqrt(d);
  if (sn * sn != n || sd * sd != d) return false;
  if (root) *root = Rational(sn, sd);
  return true;
}

}  // namespace chainproj
