#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "doctest.h"
#include "rr/axioms.hpp"
#include "rr/buchberger.hpp"
#include "rr/errors.hpp"
#include "rr/scalar_domains.hpp"

using rr::IntegerModRing;
using rr::IntegerRing;
using rr::RationalField;
using rr::Residue;

namespace {

// Brute-force reducibility on Z: some multiplier within range lowers a.
bool z_reducible_brute(const IntegerRing& z, long a, long c) {
  for (long m = -2 * std::abs(a) - 2; m <= 2 * std::abs(a) + 2; ++m) {
    if (z.less(mpz_class(a - m * c), mpz_class(a))) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("rational field") {
  const RationalField q;
  CHECK(q.less(0, mpq_class(-3)));
  CHECK_FALSE(q.less(mpq_class(1), mpq_class(2)));
  CHECK(*q.find_multiplier(mpq_class(1, 2), mpq_class(3), 0) == mpq_class(1, 6));
  CHECK_FALSE(q.find_multiplier(mpq_class(0), mpq_class(3), 0));
  CHECK(q.mntcrs(mpq_class(2), 0, mpq_class(-7, 3), 0) == std::vector<mpq_class>{1});

  const std::vector<mpq_class> two{2};
  CHECK(rr::normal_form(q, mpq_class(5), std::span<const mpq_class>(two)).value == 0);
  const auto result = rr::gb(q, std::vector<mpq_class>{mpq_class(-4, 9)});
  CHECK(result.basis == std::vector<mpq_class>{mpq_class(-4, 9)});
  CHECK(result.stats.additions == 0);

  CHECK(q.parse("3/6") == mpq_class(1, 2));
  CHECK(q.parse(" -7 ") == -7);
  CHECK(q.render(q.parse("-2/4")) == "-1/2");
  CHECK_THROWS_AS(q.parse("1/0"), rr::DomainError);
  CHECK_THROWS_AS(q.parse("x"), rr::DomainError);

  const auto report = rr::check_axioms(q, 2000);
  CHECK(report.all_passed());
  CHECK(report.find("zero-least")->status == rr::AxiomStatus::Pass);
}

TEST_CASE("integer order and multipliers") {
  const IntegerRing z;
  CHECK(z.less(mpz_class(-3), mpz_class(3)));
  CHECK(z.less(mpz_class(3), mpz_class(-4)));
  CHECK(z.less(mpz_class(0), mpz_class(-1)));
  CHECK_FALSE(z.less(mpz_class(3), mpz_class(3)));

  CHECK(*z.find_multiplier(mpz_class(7), mpz_class(3), 0) == 2);
  CHECK_FALSE(z.find_multiplier(mpz_class(1), mpz_class(4), 0));
  CHECK_FALSE(z.find_multiplier(mpz_class(-2), mpz_class(4), 0));
  CHECK(*z.find_multiplier(mpz_class(2), mpz_class(4), 0) == 1);  // 2 -> -2

  CHECK(rr::normalize_sign(mpz_class(-2)) == 2);
  CHECK(rr::normalize_sign(mpz_class(0)) == 0);
  CHECK(rr::normalize_sign(mpz_class(7)) == 7);

  CHECK(z.parse("+12") == 12);
  CHECK_THROWS_AS(z.parse("1.5"), rr::DomainError);
}

TEST_CASE("integer multipliers agree with brute force") {
  const IntegerRing z;
  for (long a = -30; a <= 30; ++a) {
    for (long c = -9; c <= 9; ++c) {
      if (c == 0) continue;
      const auto m = z.find_multiplier(mpz_class(a), mpz_class(c), 0);
      CHECK(m.has_value() == z_reducible_brute(z, a, c));
      if (!m) continue;
      // The witness is optimal among all multipliers.
      const mpz_class best = a - *m * c;
      for (long k = -40; k <= 40; ++k) CHECK_FALSE(z.less(mpz_class(a - k * c), best));
    }
  }
}

TEST_CASE("integer common reducibles: least class matches enumeration") {
  const IntegerRing z;
  for (long c1 = -12; c1 <= 12; ++c1) {
    for (long c2 = -12; c2 <= 12; ++c2) {
      if (c1 == 0 || c2 == 0) continue;
      const auto zs = z.mntcrs(mpz_class(c1), 0, mpz_class(c2), 0);
      // Enumerate 0 < |w| <= |c1| + |c2|, keep the common reducibles.
      std::vector<long> common;
      const long bound = std::abs(c1) + std::abs(c2);
      for (long w = -bound; w <= bound; ++w) {
        if (w != 0 && z_reducible_brute(z, w, c1) && z_reducible_brute(z, w, c2)) common.push_back(w);
      }
      REQUIRE_FALSE(common.empty());
      const long least = *std::min_element(common.begin(), common.end(), [&](long x, long y) {
        return z.less(mpz_class(x), mpz_class(y));
      });
      const long m = std::max(std::abs(c1), std::abs(c2));
      CHECK(std::abs(least) == (m + 1) / 2);
      CHECK(zs.front() == (m + 1) / 2);
      for (const auto& w : zs) {
        CHECK(z.find_multiplier(w, mpz_class(c1), 0).has_value());
        CHECK(z.find_multiplier(w, mpz_class(c2), 0).has_value());
      }
    }
  }
}

TEST_CASE("integer completion decides divisibility by the gcd") {
  const IntegerRing z;
  const auto g = rr::gb(z, std::vector<mpz_class>{9, 6}).basis;
  CHECK(rr::is_groebner_basis(z, g));
  for (long x = -60; x <= 60; ++x) CHECK(rr::member_ideal(z, mpz_class(x), g) == (x % 3 == 0));

  const auto report = rr::check_axioms(z, 2000);
  CHECK(report.all_passed());
}

TEST_CASE("Z/n multipliers") {
  const IntegerModRing z24(24);
  const auto m = z24.find_multiplier({20}, {4}, 0);
  REQUIRE(m);
  CHECK(z24.mul(*m, {4}).value == 20);
  CHECK_FALSE(z24.find_multiplier({2}, {4}, 0));
  CHECK_FALSE(z24.find_multiplier({0}, {4}, 0));

  // Both indices reach the same reduct; index 1 differs by an annihilator of c.
  for (std::uint64_t a = 0; a < 24; ++a) {
    for (std::uint64_t c = 1; c < 24; ++c) {
      const auto m0 = z24.find_multiplier({a}, {c}, 0);
      const auto m1 = z24.find_multiplier({a}, {c}, 1);
      REQUIRE(m0.has_value() == m1.has_value());
      if (!m0) {
        CHECK(a < std::gcd(c, std::uint64_t{24}));
        continue;
      }
      const auto r0 = rr::sub(z24, Residue{a}, z24.mul(*m0, {c}));
      const auto r1 = rr::sub(z24, Residue{a}, z24.mul(*m1, {c}));
      CHECK(r0 == r1);
      CHECK(r0.value == a % std::gcd(c, std::uint64_t{24}));
      if (std::gcd(c, std::uint64_t{24}) > 1) CHECK_FALSE(*m0 == *m1);
    }
  }
}

TEST_CASE("Z/n common reducibles: least element matches enumeration") {
  for (std::uint64_t n : {6u, 12u, 24u, 30u}) {
    const IntegerModRing zn(static_cast<std::int64_t>(n));
    for (std::uint64_t c1 = 1; c1 < n; ++c1) {
      for (std::uint64_t c2 = 1; c2 < n; ++c2) {
        std::optional<std::uint64_t> least;
        for (std::uint64_t w = 1; w < n && !least; ++w) {
          if (zn.find_multiplier({w}, {c1}, 0) && zn.find_multiplier({w}, {c2}, 0)) least = w;
        }
        const auto zs = zn.mntcrs({c1}, 0, {c2}, 0);
        REQUIRE(least);
        CHECK(zs.front().value == *least);
      }
    }
  }
}

TEST_CASE("Z/n edge cases") {
  CHECK_THROWS_AS(IntegerModRing(0), rr::DomainError);
  CHECK_THROWS_AS(IntegerModRing(-5), rr::DomainError);
  const IntegerModRing trivial(1);
  CHECK(trivial.carrier()->size() == 1);
  CHECK(rr::gb(trivial, std::vector<Residue>{{0}, trivial.parse("7")}).basis.empty());

  const IntegerModRing z24(24);
  CHECK(z24.parse("-1").value == 23);
  CHECK(z24.parse("50").value == 2);
  CHECK(z24.render({5}) == "5");
  CHECK(z24.name() == "Z/24");

  const IntegerModRing big((std::int64_t{1} << 61) - 1);
  CHECK(big.mul({(std::uint64_t{1} << 60)}, {4}).value == 2);
}

TEST_CASE("Z/n axioms hold exhaustively") {
  for (std::int64_t n : {1, 2, 6, 24, 60}) {
    const auto report = rr::check_axioms(IntegerModRing(n));
    CHECK_MESSAGE(report.all_passed(), report.to_text());
  }
}
