#include "rr/oracles.hpp"

#include <numeric>
#include <utility>

namespace rr::oracle {

OracleVerdict make_verdict(std::string subject, std::string expected, std::string actual) {
  const bool pass = expected == actual;
  return {std::move(subject), std::move(expected), std::move(actual), pass};
}

bool gcd_membership(std::span<const mpz_class> generators, const mpz_class& probe) {
  mpz_class g = 0;
  for (const auto& a : generators) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
  if (g == 0) return probe == 0;
  return mpz_divisible_p(probe.get_mpz_t(), g.get_mpz_t()) != 0;
}

bool exhaustive_ideal(std::uint64_t n, std::span<const std::uint64_t> generators, std::uint64_t probe) {
  std::vector<bool> in(n, false);
  std::vector<std::uint64_t> frontier{0};
  in[0] = true;
  while (!frontier.empty()) {
    const std::uint64_t x = frontier.back();
    frontier.pop_back();
    for (std::uint64_t g : generators) {
      for (std::uint64_t m = 0; m < n; ++m) {
        const std::uint64_t y = (x + (m * (g % n)) % n) % n;
        if (!in[y]) {
          in[y] = true;
          frontier.push_back(y);
        }
      }
    }
  }
  return in[probe % n];
}

namespace {

// true iff s > t.
bool greater(const Exponents& s, const Exponents& t, TermOrderKind order) {
  const auto lex_greater = [&] {
    for (std::size_t k = 0; k < s.size(); ++k) {
      if (s[k] != t[k]) return s[k] > t[k];
    }
    return false;
  };
  if (order == TermOrderKind::Lex) return lex_greater();
  const auto ds = std::accumulate(s.begin(), s.end(), 0ULL);
  const auto dt = std::accumulate(t.begin(), t.end(), 0ULL);
  if (ds != dt) return ds > dt;
  if (order == TermOrderKind::DegLex) return lex_greater();
  for (std::size_t k = s.size(); k-- > 0;) {
    if (s[k] != t[k]) return s[k] < t[k];
  }
  return false;
}

std::pair<Exponents, mpq_class> leading(const SparsePoly& f, TermOrderKind order) {
  auto best = f.begin();
  for (auto it = f.begin(); it != f.end(); ++it) {
    if (greater(it->first, best->first, order)) best = it;
  }
  return *best;
}

bool divides(const Exponents& s, const Exponents& t) {
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (s[k] > t[k]) return false;
  }
  return true;
}

// f -= c * x^shift * g
void subtract_multiple(SparsePoly& f, const mpq_class& c, const Exponents& shift, const SparsePoly& g) {
  for (const auto& [e, a] : g) {
    Exponents pp = e;
    for (std::size_t k = 0; k < pp.size(); ++k) pp[k] += shift[k];
    mpq_class& slot = f[pp];
    slot -= c * a;
    if (slot == 0) f.erase(pp);
  }
}

SparsePoly monic(SparsePoly f, TermOrderKind order) {
  const mpq_class lc = leading(f, order).second;
  for (auto& [e, a] : f) a /= lc;
  return f;
}

SparsePoly s_polynomial(const SparsePoly& f, const SparsePoly& g, TermOrderKind order) {
  const auto [ef, cf] = leading(f, order);
  const auto [eg, cg] = leading(g, order);
  Exponents lcm(ef.size());
  for (std::size_t k = 0; k < lcm.size(); ++k) lcm[k] = std::max(ef[k], eg[k]);
  Exponents uf(lcm.size()), ug(lcm.size());
  for (std::size_t k = 0; k < lcm.size(); ++k) {
    uf[k] = lcm[k] - ef[k];
    ug[k] = lcm[k] - eg[k];
  }
  SparsePoly s;
  subtract_multiple(s, -1 / cf, uf, f);
  subtract_multiple(s, 1 / cg, ug, g);
  return s;
}

}  // namespace

SparsePoly classical_remainder(const SparsePoly& f, const std::vector<SparsePoly>& g, TermOrderKind order) {
  SparsePoly p = f;
  SparsePoly r;
  while (!p.empty()) {
    const auto [e, c] = leading(p, order);
    bool divided = false;
    for (const auto& gi : g) {
      if (gi.empty()) continue;
      const auto [eg, cg] = leading(gi, order);
      if (!divides(eg, e)) continue;
      Exponents shift(e.size());
      for (std::size_t k = 0; k < e.size(); ++k) shift[k] = e[k] - eg[k];
      subtract_multiple(p, c / cg, shift, gi);
      divided = true;
      break;
    }
    if (!divided) {
      r[e] += c;
      p.erase(e);
    }
  }
  return r;
}

std::vector<SparsePoly> classical_buchberger(std::vector<SparsePoly> system, TermOrderKind order) {
  std::vector<SparsePoly> g;
  for (auto& f : system) {
    if (!f.empty()) g.push_back(monic(std::move(f), order));
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 0; j < g.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
  while (!pairs.empty()) {
    const auto [i, j] = pairs.back();
    pairs.pop_back();
    SparsePoly r = classical_remainder(s_polynomial(g[i], g[j], order), g, order);
    if (r.empty()) continue;
    g.push_back(monic(std::move(r), order));
    for (std::size_t k = 0; k + 1 < g.size(); ++k) pairs.emplace_back(k, g.size() - 1);
  }
  return g;
}

}  // namespace rr::oracle
