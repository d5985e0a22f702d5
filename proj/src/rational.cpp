#include "spearlab/rational.hpp"

#include <cctype>
#include <cmath>

#include "spearlab/error.hpp"

namespace spearlab {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "dimension-mismatch";
    case ErrorCode::ResourceCapExceeded: return "resource-cap-exceeded";
    case ErrorCode::NotFullDimensional: return "not-full-dimensional";
    case ErrorCode::UnboundedBody: return "unbounded-body";
    case ErrorCode::EmptyBody: return "empty-body";
    case ErrorCode::OriginNotInterior: return "origin-not-interior";
    case ErrorCode::NotUnitNorm: return "not-unit-norm";
    case ErrorCode::NotUnitDualNorm: return "not-unit-dual-norm";
    case ErrorCode::NotNormOne: return "not-norm-one";
    case ErrorCode::NonpositiveEpsilon: return "nonpositive-epsilon";
    case ErrorCode::EmptyInput: return "empty-input";
    case ErrorCode::ElementOutsideBall: return "element-outside-ball";
    case ErrorCode::SpaceMismatch: return "space-mismatch";
    case ErrorCode::UnknownSpec: return "unknown-spec";
    case ErrorCode::UnknownLabel: return "unknown-label";
    case ErrorCode::MalformedInput: return "malformed-input";
    case ErrorCode::InvalidArgument: return "invalid-argument";
  }
  return "unknown";
}

Rational::Rational(long long num, long long den) {
  require(den != 0, ErrorCode::InvalidArgument, "zero denominator");
  q_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  require(!o.is_zero(), ErrorCode::InvalidArgument, "division by zero");
  q_ /= o.q_;
  return *this;
}

namespace {

bool is_integer_literal(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

mpz_class parse_int(std::string_view s) {
  if (s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  std::string_view s = trim(text);
  auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    require(is_integer_literal(s, true), ErrorCode::MalformedInput,
            "not a rational literal: '" + std::string(text) + "'");
    return Rational(mpq_class(parse_int(s)));
  }
  auto num = trim(s.substr(0, slash));
  auto den = trim(s.substr(slash + 1));
  require(is_integer_literal(num, true) && is_integer_literal(den, false), ErrorCode::MalformedInput,
          "not a rational literal: '" + std::string(text) + "'");
  mpz_class d = parse_int(den);
  require(d > 0, ErrorCode::MalformedInput, "denominator must be positive: '" + std::string(text) + "'");
  return Rational(mpq_class(parse_int(num), d));
}

Rational Rational::from_double(double value) {
  require(std::isfinite(value), ErrorCode::InvalidArgument, "non-finite double");
  mpq_class q;
  q = value;
  return Rational(q);
}

std::string Rational::to_string() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

}  // namespace spearlab

std::size_t std::hash<spearlab::Rational>::operator()(const spearlab::Rational& r) const noexcept {
  std::size_t h1 = mpz_get_ui(r.value().get_num_mpz_t());
  std::size_t h2 = mpz_get_ui(r.value().get_den_mpz_t());
  return h1 * 1000003u ^ (h2 + (r.sign() < 0 ? 0x9e3779b97f4a7c15ull : 0));
}
