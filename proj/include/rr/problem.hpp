#pragma once

// Line-oriented problem files:
//
//   # comment
//   ring zmod:24          (q | z | zmod:N | zmod N)
//   vars x, y             (optional; makes the ring polynomial)
//   order degrevlex       (lex | deglex | degrevlex; default degrevlex)
//   gens:
//   x^2*y + 3
//   2*y
//   probes:
//   x*y
//
// Elements stay as source text until a domain is built, so element parse
// errors can still be reported against their file position.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "rr/errors.hpp"
#include "rr/polynomial.hpp"
#include "rr/power_product.hpp"
#include "rr/scalar_domains.hpp"

namespace rr {

enum class CoefficientKind { Rational, Integer, Modular };

struct RingSpec {
  CoefficientKind kind = CoefficientKind::Rational;
  std::int64_t modulus = 0;
  std::vector<std::string> variables;
  TermOrderKind order = TermOrderKind::DegRevLex;

  bool polynomial() const noexcept { return !variables.empty(); }
};

struct SourceText {
  std::string text;
  std::size_t line = 0;
  std::size_t column = 1;
};

struct ProblemFile {
  RingSpec ring;
  bool has_ring = false;
  std::vector<SourceText> gens;
  std::vector<SourceText> probes;
};

/// q | z | zmod:N | zmod N (case-insensitive keyword).
RingSpec parse_ring_selector(std::string_view selector);
std::string render_ring_selector(const RingSpec& ring);
/// Comma- or whitespace-separated identifiers.
std::vector<std::string> parse_variable_list(std::string_view text);

ProblemFile parse_problem(std::string_view content);
/// Canonical text form; parse_problem(render_problem(p)) reproduces p's ring and element texts.
std::string render_problem(const ProblemFile& problem);

/// Parses `source` with the domain, rethrowing errors at the source position.
template <class D>
typename D::Element parse_element(const D& dom, const SourceText& source) {
  try {
    return dom.parse(source.text);
  } catch (const ParseError& e) {
    throw ParseError(e.what(), source.line, source.column + e.column() - 1);
  } catch (const DomainError& e) {
    throw ParseError(e.what(), source.line, source.column);
  }
}

/// Builds the concrete domain for `ring` and invokes `f` with it. Every
/// branch must return the same type.
template <class F>
decltype(auto) with_domain(const RingSpec& ring, F&& f) {
  switch (ring.kind) {
    case CoefficientKind::Rational:
      if (ring.polynomial()) return f(PolynomialRing<RationalField>(RationalField{}, ring.variables, ring.order));
      return f(RationalField{});
    case CoefficientKind::Integer:
      if (ring.polynomial()) return f(PolynomialRing<IntegerRing>(IntegerRing{}, ring.variables, ring.order));
      return f(IntegerRing{});
    case CoefficientKind::Modular:
      if (ring.polynomial()) {
        return f(PolynomialRing<IntegerModRing>(IntegerModRing(ring.modulus), ring.variables, ring.order));
      }
      return f(IntegerModRing(ring.modulus));
  }
  throw DomainError("unknown ring kind");
}

}  // namespace rr
