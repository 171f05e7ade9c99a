#include <vector>

#include "doctest.h"
#include "rr/buchberger.hpp"
#include "rr/errors.hpp"
#include "rr/oracles.hpp"
#include "rr/polynomial.hpp"
#include "rr/reduction.hpp"
#include "rr/relations.hpp"
#include "rr/scalar_domains.hpp"

using rr::IntegerModRing;
using rr::IntegerRing;
using rr::PolynomialRing;
using rr::RationalField;
using rr::Residue;
using rr::TermOrderKind;

namespace {

template <class E>
std::span<const E> sp(const std::vector<E>& v) {
  return std::span<const E>(v);
}

template <class D>
std::vector<typename D::Element> parse_all(const D& dom, std::initializer_list<const char*> texts) {
  std::vector<typename D::Element> out;
  for (const char* t : texts) out.push_back(dom.parse(t));
  return out;
}

}  // namespace

TEST_CASE("critical_pair") {
  const RationalField q;
  const auto [a1, a2] = rr::critical_pair(q, mpq_class(1), mpq_class(2), 0, mpq_class(3), 0);
  CHECK(a1 == 0);
  CHECK(a2 == 0);

  const IntegerRing z;
  for (const auto& w : z.mntcrs(mpz_class(6), 0, mpz_class(6), 0)) {
    const auto [s1, s2] = rr::critical_pair(z, w, mpz_class(6), 0, mpz_class(6), 0);
    CHECK(s1 == s2);
  }

  for (const auto& w : z.mntcrs(mpz_class(4), 0, mpz_class(6), 0)) {
    const auto cp = rr::critical_pair_with_multipliers(z, w, mpz_class(4), 0, mpz_class(6), 0);
    // Replay: each side is one certified reduction step of w.
    CHECK(cp.first == w - cp.multiplier1 * 4);
    CHECK(cp.second == w - cp.multiplier2 * 6);
    CHECK(z.less(cp.first, w));
    CHECK(z.less(cp.second, w));
  }

  CHECK_THROWS_AS(rr::critical_pair(z, mpz_class(1), mpz_class(4), 0, mpz_class(6), 0), rr::ContractViolation);
}

TEST_CASE("gb on scalar domains") {
  const RationalField q;
  const auto empty = rr::gb(q, std::vector<mpq_class>{});
  CHECK(empty.basis.empty());
  CHECK(empty.rows.empty());

  const auto single = rr::gb(q, std::vector<mpq_class>{mpq_class(0), mpq_class(5)});
  CHECK(single.basis == std::vector<mpq_class>{5});

  const IntegerRing z;
  const std::vector<mpz_class> input{4, 6};
  const auto result = rr::gb(z, input);
  CHECK(std::equal(input.begin(), input.end(), result.basis.begin()));
  CHECK(rr::member_ideal(z, mpz_class(2), result.basis));
  CHECK_FALSE(rr::member_ideal(z, mpz_class(3), result.basis));
  CHECK(rr::member_ideal(z, mpz_class(10), result.basis));
  CHECK(rr::member_ideal(z, mpz_class(0), result.basis));
  CHECK(rr::verify_cofactors(z, result.rows, input));
  CHECK(rr::is_groebner_basis(z, result.basis));
}

TEST_CASE("is_groebner_basis") {
  const RationalField q;
  CHECK(rr::is_groebner_basis(q, std::vector<mpq_class>{}));
  CHECK(rr::is_groebner_basis(q, std::vector<mpq_class>{1}));

  // Z with (4, 6) fails the criterion; the projected relation on a ball is not Church-Rosser either.
  const IntegerRing z;
  const std::vector<mpz_class> g{4, 6};
  CHECK_FALSE(rr::is_groebner_basis(z, g));
  std::vector<mpz_class> ball;
  for (long a = -12; a <= 12; ++a) ball.push_back(a);
  const auto rel = rr::project_reduction_relation(z, sp(g), sp(ball));
  CHECK_FALSE(rr::is_church_rosser(rel));
}

TEST_CASE("verify_cofactors") {
  const IntegerRing z;
  CHECK(rr::verify_cofactors(z, std::vector<rr::CofactorRow<mpz_class>>{}, std::vector<mpz_class>{4}));
  const std::vector<mpz_class> input{15, 21, 35};
  auto result = rr::gb(z, input);
  REQUIRE_FALSE(result.rows.empty());
  CHECK(rr::verify_cofactors(z, result.rows, input));
  result.rows.back().cofactors[0] += 1;
  CHECK_FALSE(rr::verify_cofactors(z, result.rows, input));
}

TEST_CASE("chain criterion predicate") {
  const PolynomialRing<RationalField> ring(RationalField{}, {"x", "y"}, TermOrderKind::Lex);
  using P = rr::Polynomial<mpq_class>;

  rr::GbState<P> two;
  two.basis = parse_all(ring, {"x", "y"});
  CHECK_FALSE(rr::chain_criterion_skip(ring, two, 0, 1, ring.parse("x*y")));

  // z = x^2*y^2 is divisible by the lead of the third element x*y.
  rr::GbState<P> state;
  state.basis = parse_all(ring, {"x^2 + 1", "y^2 + 1", "x*y"});
  std::size_t witness = 99;
  state.enqueue({0, 2});
  state.enqueue({1, 2});
  CHECK_FALSE(rr::chain_criterion_skip(ring, state, 0, 1, ring.parse("x^2*y^2")));  // both side pairs pending
  state.pop();
  CHECK_FALSE(rr::chain_criterion_skip(ring, state, 0, 1, ring.parse("x^2*y^2")));  // (1,2) still pending
  state.pop();
  CHECK(rr::chain_criterion_skip(ring, state, 0, 1, ring.parse("x^2*y^2"), &witness));
  CHECK(witness == 2);
  // A third element whose lead does not divide z never witnesses.
  state.basis[2] = ring.parse("x^3");
  CHECK_FALSE(rr::chain_criterion_skip(ring, state, 0, 1, ring.parse("x^2*y^2")));
}

TEST_CASE("trace is deterministic and replays the basis") {
  const PolynomialRing<IntegerModRing> ring(IntegerModRing(24), {"x", "y"}, TermOrderKind::DegRevLex);
  const auto input = parse_all(ring, {"4*x*y + 3", "6*x^2 - y", "8*y^2 + x"});
  rr::GbOptions options;
  options.chain_criterion = true;
  const auto a = rr::gb(ring, input, options);
  const auto b = rr::gb(ring, input, options);
  CHECK(a.trace.to_text() == b.trace.to_text());
  CHECK(a.trace.digest() == b.trace.digest());

  std::vector<std::string> rendered;
  for (const auto& e : a.basis) rendered.push_back(ring.render(e));
  CHECK(a.trace.replay_basis() == rendered);
  CHECK(a.trace.final_basis() == rendered);
  CHECK(a.trace.to_json().size() == a.trace.events.size());
  CHECK(a.stats.additions == a.basis.size() - input.size());
}

TEST_CASE("step cap raises NonTerminationError") {
  const IntegerRing z;
  rr::GbOptions options;
  options.max_steps = 2;
  CHECK_THROWS_AS(rr::gb(z, std::vector<mpz_class>{12, 18}, options), rr::NonTerminationError);
}

TEST_CASE("polynomial completion over Z and Z/n contains sampled ideal members") {
  const PolynomialRing<IntegerRing> zx(IntegerRing{}, {"x", "y"}, TermOrderKind::DegRevLex);
  const PolynomialRing<IntegerModRing> z24(IntegerModRing(24), {"x", "y"}, TermOrderKind::Lex);
  const PolynomialRing<IntegerModRing> z4(IntegerModRing(4), {"x"}, TermOrderKind::Lex);

  auto exercise = [](const auto& ring, std::initializer_list<const char*> texts, bool chain) {
    const auto input = parse_all(ring, texts);
    rr::GbOptions options;
    options.chain_criterion = chain;
    const auto result = rr::gb(ring, input, options);
    CHECK(rr::is_groebner_basis(ring, result.basis));
    CHECK(rr::verify_cofactors(ring, result.rows, input));
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const auto member = rr::oracle::sample_ideal_element(ring, sp(input), seed, 4);
      CHECK(rr::member_ideal(ring, member.element, result.basis));
    }
  };
  for (bool chain : {false, true}) {
    exercise(zx, {"2*x*y + 1", "3*x^2 - y"}, chain);
    exercise(zx, {"6*x + 4", "4*y^2 - 2*x"}, chain);
    exercise(z24, {"4*x*y + 3", "6*x^2 - y"}, chain);
    exercise(z24, {"12*x + 8*y", "9*y^2"}, chain);
    exercise(z4, {"2*x + 1"}, chain);
  }

  // 2x+1 is a unit in Z/4[x]: (2x+1)^2 = 1.
  const auto unit = rr::gb(z4, parse_all(z4, {"2*x + 1"})).basis;
  CHECK(rr::member_ideal(z4, z4.one(), unit));
}
