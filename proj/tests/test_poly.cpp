#include <map>
#include <random>
#include <vector>

#include "doctest.h"
#include "rr/axioms.hpp"
#include "rr/buchberger.hpp"
#include "rr/errors.hpp"
#include "rr/oracles.hpp"
#include "rr/polynomial.hpp"
#include "rr/power_product.hpp"
#include "rr/scalar_domains.hpp"

using rr::IntegerModRing;
using rr::IntegerRing;
using rr::PolynomialRing;
using rr::PowerProduct;
using rr::RationalField;
using rr::TermOrder;
using rr::TermOrderKind;

namespace {

constexpr TermOrderKind kAllOrders[] = {TermOrderKind::Lex, TermOrderKind::DegLex, TermOrderKind::DegRevLex};

PowerProduct random_pp(std::mt19937_64& rng, std::size_t n, std::uint32_t max_exp) {
  std::uniform_int_distribution<std::uint32_t> e(0, max_exp);
  PowerProduct pp(n);
  for (auto& x : pp.exponents) x = e(rng);
  return pp;
}

// Coefficient function of a polynomial, keyed by exponent tuple.
template <class C>
std::map<std::vector<std::uint32_t>, C> coefficients(const rr::Polynomial<C>& p) {
  std::map<std::vector<std::uint32_t>, C> out;
  for (const auto& t : p.terms) out[t.power_product.exponents] = t.coefficient;
  return out;
}

PowerProduct to_pp(const std::vector<std::uint32_t>& e) {
  PowerProduct pp;
  pp.exponents = e;
  return pp;
}

}  // namespace

TEST_CASE("term orders") {
  const PowerProduct one{0, 0}, x{1, 0}, y2{0, 2};
  for (auto kind : kAllOrders) CHECK(TermOrder(kind, 2).less(one, x));
  CHECK(TermOrder(TermOrderKind::Lex, 2).compare(x, y2) > 0);
  CHECK(TermOrder(TermOrderKind::DegLex, 2).compare(x, y2) < 0);
  // degrevlex on x, y, z: y^2 beats x*z.
  const TermOrder grevlex(TermOrderKind::DegRevLex, 3);
  CHECK(grevlex.compare(PowerProduct{0, 2, 0}, PowerProduct{1, 0, 1}) > 0);
  CHECK(grevlex.compare(PowerProduct{1, 1, 0}, PowerProduct{2, 0, 0}) < 0);
  CHECK(TermOrder(TermOrderKind::DegLex, 3).compare(PowerProduct{0, 2, 0}, PowerProduct{1, 0, 1}) < 0);
  CHECK_THROWS_AS(grevlex.compare(PowerProduct{1, 0}, PowerProduct{1, 0, 0}), rr::DomainError);

  CHECK(rr::parse_term_order("deglex") == TermOrderKind::DegLex);
  CHECK(rr::to_string(TermOrderKind::DegRevLex) == "degrevlex");
  CHECK_THROWS_AS(rr::parse_term_order("revlex"), rr::DomainError);
}

TEST_CASE("property: term orders are total, multiplicative, with 1 least") {
  std::mt19937_64 rng(17);
  for (auto kind : kAllOrders) {
    const TermOrder order(kind, 3);
    for (int trial = 0; trial < 2000; ++trial) {
      const auto s = random_pp(rng, 3, 4), t = random_pp(rng, 3, 4), u = random_pp(rng, 3, 4);
      const auto c = order.compare(s, t);
      CHECK((c == 0) == (s == t));
      CHECK(order.compare(t, s) == (0 <=> c));
      if (order.less(s, t)) CHECK(order.less(rr::pp_mul(s, u), rr::pp_mul(t, u)));
      if (order.less(s, t) && order.less(t, u)) CHECK(order.less(s, u));
      if (!s.is_one()) CHECK(order.less(PowerProduct(3), s));
    }
  }
}

TEST_CASE("power product operations") {
  CHECK(rr::pp_mul(PowerProduct{1, 0}, PowerProduct{0, 2}) == PowerProduct{1, 2});
  CHECK(rr::pp_lcm(PowerProduct{2, 1}, PowerProduct{1, 3}) == PowerProduct{2, 3});
  CHECK_FALSE(rr::pp_divides(PowerProduct{1, 1}, PowerProduct{1, 0}));
  CHECK(rr::pp_divides(PowerProduct{1, 0}, PowerProduct{1, 1}));
  CHECK(rr::pp_quotient(PowerProduct{2, 3}, PowerProduct{1, 1}) == PowerProduct{1, 2});
  CHECK_THROWS_AS(rr::pp_quotient(PowerProduct{1, 0}, PowerProduct{0, 1}), rr::DomainError);
  CHECK(PowerProduct{2, 3}.degree() == 5);
}

TEST_CASE("arithmetic") {
  const PolynomialRing<RationalField> q(RationalField{}, {"x", "y"}, TermOrderKind::Lex);
  CHECK(q.add(q.parse("x + 1"), q.parse("-x")) == q.parse("1"));
  CHECK(q.mul(q.parse("x + y"), q.parse("x - y")) == q.parse("x^2 - y^2"));
  CHECK(q.add(q.parse("x"), q.neg(q.parse("x"))).is_zero());

  const PolynomialRing<IntegerRing> z(IntegerRing{}, {"x"}, TermOrderKind::Lex);
  CHECK(z.mono_mul({mpz_class(2), PowerProduct{1}}, z.parse("x + 3")) == z.parse("2*x^2 + 6*x"));

  const PolynomialRing<IntegerModRing> z6(IntegerModRing(6), {"x"}, TermOrderKind::Lex);
  CHECK(z6.mul(z6.parse("2*x + 3"), z6.parse("3*x + 2")) == z6.parse("x"));  // 6x^2 + 13x + 6
}

TEST_CASE("coefficient_at and leading_monomial") {
  const PolynomialRing<RationalField> q(RationalField{}, {"x", "y"}, TermOrderKind::DegLex);
  const auto p = q.parse("x^2 + 3*y");
  CHECK(q.coefficient_at(p, PowerProduct{0, 1}) == 3);
  CHECK(q.coefficient_at(p, PowerProduct{1, 1}) == 0);
  CHECK(q.coefficient_at(q.add(p, q.parse("-3*y")), PowerProduct{0, 1}) == 0);

  CHECK(q.leading_monomial(q.parse("x*y^2 + x^2*y")).power_product == PowerProduct{2, 1});
  CHECK(q.leading_monomial(q.parse("5*x")).coefficient == 5);
  CHECK_THROWS_AS(q.leading_monomial(q.zero()), rr::DomainError);

  const PolynomialRing<RationalField> grevlex(RationalField{}, {"x", "y", "z"}, TermOrderKind::DegRevLex);
  CHECK(grevlex.leading_monomial(grevlex.parse("x*z + y^2")).power_product == PowerProduct{0, 2, 0});
}

TEST_CASE("parser and printer") {
  const PolynomialRing<RationalField> q(RationalField{}, {"x", "y"}, TermOrderKind::DegRevLex);
  CHECK(q.render(q.parse("3*x^2*y - 1/2*y + 5")) == "3*x^2*y - 1/2*y + 5");
  CHECK(q.parse("5 + y*(-1/2) + 3 x**2 y") == q.parse("3*x^2*y - 1/2*y + 5"));
  CHECK(q.parse("(x + y)^2") == q.parse("x^2 + 2*x*y + y^2"));
  CHECK(q.render(q.zero()) == "0");
  CHECK(q.render(q.parse("-x + 1")) == "-x + 1");
  CHECK(q.render(q.parse("x - x")) == "0");

  auto column_of = [&](const char* text) {
    try {
      q.parse(text);
    } catch (const rr::ParseError& e) {
      return e.column();
    }
    return std::size_t{0};
  };
  CHECK(column_of("x + z") == 5);
  CHECK(column_of("x +") == 4);
  CHECK(column_of("x ^ y") == 5);
  CHECK_THROWS_AS(q.parse("(x"), rr::ParseError);
  CHECK_THROWS_AS(PolynomialRing<RationalField>(RationalField{}, {"x", "x"}, TermOrderKind::Lex), rr::DomainError);
}

TEST_CASE("property: parse(render(p)) == p on every coefficient ring") {
  std::mt19937_64 rng(23);
  const PolynomialRing<RationalField> q(RationalField{}, {"x", "y", "z"}, TermOrderKind::Lex);
  const PolynomialRing<IntegerRing> z(IntegerRing{}, {"x", "y"}, TermOrderKind::DegLex);
  const PolynomialRing<IntegerModRing> m(IntegerModRing(24), {"a", "b"}, TermOrderKind::DegRevLex);
  for (int trial = 0; trial < 300; ++trial) {
    const auto p = q.sample(rng);
    CHECK(q.parse(q.render(p)) == p);
    const auto r = z.sample(rng);
    CHECK(z.parse(z.render(r)) == r);
    const auto s = m.sample(rng);
    CHECK(m.parse(m.render(s)) == s);
  }
}

TEST_CASE("property: coefficient functions add and convolve pointwise") {
  std::mt19937_64 rng(29);
  const PolynomialRing<IntegerRing> z(IntegerRing{}, {"x", "y"}, TermOrderKind::DegRevLex);
  for (int trial = 0; trial < 300; ++trial) {
    const auto p = z.sample(rng), r = z.sample(rng);
    auto expected_sum = coefficients(p);
    for (const auto& [e, c] : coefficients(r)) expected_sum[e] += c;
    std::map<std::vector<std::uint32_t>, mpz_class> expected_prod;
    for (const auto& [e1, c1] : coefficients(p))
      for (const auto& [e2, c2] : coefficients(r)) {
        std::vector<std::uint32_t> e(2);
        for (int k = 0; k < 2; ++k) e[k] = e1[k] + e2[k];
        expected_prod[e] += c1 * c2;
      }
    const auto sum = z.add(p, r), prod = z.mul(p, r);
    for (const auto& [e, c] : expected_sum) CHECK(z.coefficient_at(sum, to_pp(e)) == c);
    for (const auto& [e, c] : expected_prod) CHECK(z.coefficient_at(prod, to_pp(e)) == c);
    // Representation invariants: strictly descending, no zero coefficients.
    for (std::size_t k = 0; k < prod.terms.size(); ++k) {
      CHECK(prod.terms[k].coefficient != 0);
      if (k > 0) CHECK(z.order().less(prod.terms[k].power_product, prod.terms[k - 1].power_product));
    }
  }
}

TEST_CASE("polynomial rings satisfy the sampled axioms") {
  CHECK(rr::check_axioms(PolynomialRing<RationalField>(RationalField{}, {"x", "y"}, TermOrderKind::Lex), 400)
            .all_passed());
  CHECK(rr::check_axioms(PolynomialRing<IntegerRing>(IntegerRing{}, {"x", "y"}, TermOrderKind::DegLex), 400)
            .all_passed());
  CHECK(rr::check_axioms(PolynomialRing<IntegerModRing>(IntegerModRing(24), {"x", "y"}, TermOrderKind::DegRevLex),
                         400)
            .all_passed());
}

TEST_CASE("reduction rewrites the greatest reducible term") {
  const PolynomialRing<IntegerRing> z(IntegerRing{}, {"x"}, TermOrderKind::Lex);
  // Lead 1*x^2 is not reducible by 4*x, but 8*x is.
  const auto m = z.find_multiplier(z.parse("x^2 + 8*x"), z.parse("4*x"), 0);
  REQUIRE(m);
  CHECK(*m == z.parse("2"));
  CHECK_FALSE(z.find_multiplier(z.parse("x^2 + x"), z.parse("4*x"), 0));
  // Over Z, 1 reduces modulo 2 to -1.
  CHECK(*z.find_multiplier(z.parse("x^2"), z.parse("2*x"), 0) == z.parse("x"));
  CHECK(z.less(z.parse("x^2"), z.parse("x^2 + 1")));
  CHECK(z.less(z.parse("x^2 - 1"), z.parse("x^2 + 1")));
  CHECK(z.less(z.parse("x"), z.parse("-x^2")));
}

TEST_CASE("mntcrs over fields are monic lcms and coprime leads add nothing") {
  const PolynomialRing<RationalField> q(RationalField{}, {"x", "y"}, TermOrderKind::Lex);
  CHECK(q.mntcrs(q.parse("3*x^2*y + 1"), 0, q.parse("2*x*y^3"), 0) == std::vector{q.parse("x^2*y^3")});
  const auto result = rr::gb(q, std::vector{q.parse("x"), q.parse("y")});
  CHECK(result.basis.size() == 2);
  CHECK(result.stats.additions == 0);
}

TEST_CASE("Z/24[x,y] completion passes the criterion and certificates") {
  const PolynomialRing<IntegerModRing> ring(IntegerModRing(24), {"x", "y"}, TermOrderKind::DegRevLex);
  const std::vector input{ring.parse("6*x^2*y + 4*y"), ring.parse("9*x*y^2 + 2*x")};
  const auto result = rr::gb(ring, input);
  CHECK(rr::is_groebner_basis(ring, result.basis));
  CHECK(rr::verify_cofactors(ring, result.rows, input));
  for (const auto& g : input) CHECK(rr::member_ideal(ring, g, result.basis));
}
