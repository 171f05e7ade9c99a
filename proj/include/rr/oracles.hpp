#pragma once

// Ground-truth oracles for tests and acceptance. None of them reuse the
// completion engine: membership in Z goes through gcd, membership in Z_n
// through explicit ideal closure, and the classical Buchberger oracle has its
// own polynomial representation, term comparison and reduction.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "rr/domain.hpp"
#include "rr/polynomial.hpp"
#include "rr/power_product.hpp"

namespace rr::oracle {

struct OracleVerdict {
  std::string subject;
  std::string expected;
  std::string actual;
  bool pass = false;
};

OracleVerdict make_verdict(std::string subject, std::string expected, std::string actual);

/// gcd(generators) divides probe; all-zero generators admit only 0.
bool gcd_membership(std::span<const mpz_class> generators, const mpz_class& probe);

/// probe in the ideal of Z_n generated by `generators`, by closure under
/// addition and multiplication by every residue.
bool exhaustive_ideal(std::uint64_t n, std::span<const std::uint64_t> generators, std::uint64_t probe);

/// Coefficient function with finite support.
using Exponents = std::vector<std::uint32_t>;
using SparsePoly = std::map<Exponents, mpq_class>;

/// Textbook Buchberger over Q: S-polynomials of monic leading terms and
/// leading-term division, no criteria.
std::vector<SparsePoly> classical_buchberger(std::vector<SparsePoly> system, TermOrderKind order);

/// Remainder of full multivariate division of f by g.
SparsePoly classical_remainder(const SparsePoly& f, const std::vector<SparsePoly>& g, TermOrderKind order);

inline SparsePoly to_sparse(const Polynomial<mpq_class>& p) {
  SparsePoly out;
  for (const auto& t : p.terms) out[t.power_product.exponents] = t.coefficient;
  return out;
}

template <class Ring>
typename Ring::Element from_sparse(const Ring& ring, const SparsePoly& p) {
  typename Ring::Element out = ring.zero();
  for (const auto& [exps, c] : p) {
    PowerProduct pp;
    pp.exponents = exps;
    out = ring.add(out, ring.monomial(c, std::move(pp)));
  }
  return out;
}

template <class E>
struct IdealSample {
  E element;
  std::vector<E> cofactors;  // element = sum cofactors[k] * generators[k]
};

/// A pseudo-random combination of `budget` terms m * g_k; the multiplier
/// sampler defaults to the domain's own sampler.
template <ReductionRing D>
IdealSample<ElementOf<D>> sample_ideal_element(
    const D& dom, std::span<const ElementOf<D>> generators, std::uint64_t seed, std::size_t budget,
    const std::function<ElementOf<D>(std::mt19937_64&)>& multiplier = {}) {
  std::mt19937_64 rng(seed);
  IdealSample<ElementOf<D>> out{dom.zero(), std::vector<ElementOf<D>>(generators.size(), dom.zero())};
  if (generators.empty()) return out;
  std::uniform_int_distribution<std::size_t> pick(0, generators.size() - 1);
  for (std::size_t t = 0; t < budget; ++t) {
    const std::size_t k = pick(rng);
    const auto m = multiplier ? multiplier(rng) : dom.sample(rng);
    out.cofactors[k] = dom.add(out.cofactors[k], m);
    out.element = dom.add(out.element, dom.mul(m, generators[k]));
  }
  return out;
}

}  // namespace rr::oracle
