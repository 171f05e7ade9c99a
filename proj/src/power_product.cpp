#include "rr/power_product.hpp"

#include <algorithm>
#include <numeric>

#include "rr/errors.hpp"

namespace rr {

namespace {

void require_same_length(const PowerProduct& s, const PowerProduct& t) {
  if (s.size() != t.size()) throw DomainError("power products of different lengths");
}

std::strong_ordering lex(const PowerProduct& s, const PowerProduct& t) {
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (s.exponents[k] != t.exponents[k]) return s.exponents[k] <=> t.exponents[k];
  }
  return std::strong_ordering::equal;
}

}  // namespace

std::uint64_t PowerProduct::degree() const noexcept {
  return std::accumulate(exponents.begin(), exponents.end(), std::uint64_t{0});
}

bool PowerProduct::is_one() const noexcept {
  return std::all_of(exponents.begin(), exponents.end(), [](std::uint32_t e) { return e == 0; });
}

PowerProduct pp_mul(const PowerProduct& s, const PowerProduct& t) {
  require_same_length(s, t);
  PowerProduct out = s;
  for (std::size_t k = 0; k < s.size(); ++k) out.exponents[k] += t.exponents[k];
  return out;
}

PowerProduct pp_lcm(const PowerProduct& s, const PowerProduct& t) {
  require_same_length(s, t);
  PowerProduct out = s;
  for (std::size_t k = 0; k < s.size(); ++k) out.exponents[k] = std::max(s.exponents[k], t.exponents[k]);
  return out;
}

bool pp_divides(const PowerProduct& s, const PowerProduct& t) {
  require_same_length(s, t);
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (s.exponents[k] > t.exponents[k]) return false;
  }
  return true;
}

PowerProduct pp_quotient(const PowerProduct& t, const PowerProduct& s) {
  if (!pp_divides(s, t)) throw DomainError("pp_quotient: divisor does not divide");
  PowerProduct out = t;
  for (std::size_t k = 0; k < s.size(); ++k) out.exponents[k] -= s.exponents[k];
  return out;
}

std::string to_string(TermOrderKind kind) {
  switch (kind) {
    case TermOrderKind::Lex: return "lex";
    case TermOrderKind::DegLex: return "deglex";
    case TermOrderKind::DegRevLex: return "degrevlex";
  }
  return "?";
}

TermOrderKind parse_term_order(std::string_view name) {
  if (name == "lex") return TermOrderKind::Lex;
  if (name == "deglex") return TermOrderKind::DegLex;
  if (name == "degrevlex") return TermOrderKind::DegRevLex;
  throw DomainError("unknown term order '" + std::string(name) + "'");
}

std::strong_ordering TermOrder::compare(const PowerProduct& s, const PowerProduct& t) const {
  require_same_length(s, t);
  if (s.size() != variables_) throw DomainError("power product does not match the variable count");
  if (kind_ == TermOrderKind::Lex) return lex(s, t);
  if (auto by_degree = s.degree() <=> t.degree(); by_degree != 0) return by_degree;
  if (kind_ == TermOrderKind::DegLex) return lex(s, t);
  // Reverse lexicographic tie-break: smaller exponent in the last differing variable wins.
  for (std::size_t k = s.size(); k-- > 0;) {
    if (s.exponents[k] != t.exponents[k]) return t.exponents[k] <=> s.exponents[k];
  }
  return std::strong_ordering::equal;
}

}  // namespace rr
