#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "rr/domain.hpp"
#include "rr/errors.hpp"
#include "rr/relations.hpp"

namespace rr {

inline constexpr std::size_t kDefaultMaxReductionSteps = 1'000'000;

template <class E>
struct NormalForm {
  E value;
  std::vector<ReductionCertificate<E>> chain;
};

/// First (reducer, index) in list order that admits a multiplier wins.
template <ReductionRing D>
std::optional<std::pair<ElementOf<D>, ReductionCertificate<ElementOf<D>>>> reduce_step(
    const D& dom, const ElementOf<D>& a, std::span<const ElementOf<D>> basis) {
  if (is_zero(dom, a)) return std::nullopt;
  const std::size_t indices = dom.multiplier_indices();
  for (std::size_t pos = 0; pos < basis.size(); ++pos) {
    const auto& c = basis[pos];
    for (std::size_t idx = 0; idx < indices; ++idx) {
      auto m = dom.find_multiplier(a, c, idx);
      if (!m) continue;
      auto after = sub(dom, a, dom.mul(*m, c));
      ReductionCertificate<ElementOf<D>> cert{c, pos, idx, std::move(*m), a, after};
      return std::make_pair(std::move(after), std::move(cert));
    }
  }
  return std::nullopt;
}

template <ReductionRing D>
bool is_reducible(const D& dom, const ElementOf<D>& a, std::span<const ElementOf<D>> basis) {
  return reduce_step(dom, a, basis).has_value();
}

/// Total reduction to an irreducible element, keeping the certificate chain.
template <ReductionRing D>
NormalForm<ElementOf<D>> normal_form(const D& dom, ElementOf<D> a, std::span<const ElementOf<D>> basis,
                                     std::size_t max_steps = kDefaultMaxReductionSteps) {
  NormalForm<ElementOf<D>> out{std::move(a), {}};
  while (auto step = reduce_step(dom, out.value, basis)) {
    if (out.chain.size() >= max_steps) {
      throw NonTerminationError("normal_form: reduction step bound exceeded");
    }
    out.value = std::move(step->first);
    out.chain.push_back(std::move(step->second));
  }
  return out;
}

/// Replays a certificate chain from `start`: every step must recompute exactly,
/// decrease, and the chain must end at `result`.
template <ReductionRing D>
bool replay_certificates(const D& dom, const ElementOf<D>& start, const ElementOf<D>& result,
                         std::span<const ReductionCertificate<ElementOf<D>>> chain) {
  ElementOf<D> current = start;
  for (const auto& cert : chain) {
    if (!dom.equal(cert.before, current)) return false;
    const auto expected = sub(dom, cert.before, dom.mul(cert.multiplier, cert.reducer));
    if (!dom.equal(expected, cert.after)) return false;
    if (!dom.less(cert.after, cert.before)) return false;
    current = cert.after;
  }
  if (!dom.equal(current, result)) return false;
  // a - h must equal the certified combination.
  ElementOf<D> combo = dom.zero();
  for (const auto& cert : chain) combo = dom.add(combo, dom.mul(cert.multiplier, cert.reducer));
  return dom.equal(sub(dom, start, result), combo);
}

/// The reduction relation modulo `basis`, restricted to `universe`: a -> b iff
/// b < a and b = a - m*c for some c in basis and m in `multipliers`.
template <ReductionRing D>
FiniteRelation<ElementOf<D>> project_reduction_relation(const D& dom, std::span<const ElementOf<D>> basis,
                                                        std::span<const ElementOf<D>> universe,
                                                        std::span<const ElementOf<D>> multipliers) {
  FiniteRelation<ElementOf<D>> rel(std::vector<ElementOf<D>>(universe.begin(), universe.end()));
  for (std::size_t ia = 0; ia < universe.size(); ++ia) {
    const auto& a = universe[ia];
    for (const auto& c : basis) {
      for (const auto& m : multipliers) {
        const auto b = sub(dom, a, dom.mul(m, c));
        if (!dom.less(b, a)) continue;
        if (auto ib = rel.find(b)) rel.add_step(ia, *ib);
      }
    }
  }
  return rel;
}

template <ReductionRing D>
FiniteRelation<ElementOf<D>> project_reduction_relation(const D& dom, std::span<const ElementOf<D>> basis,
                                                        std::span<const ElementOf<D>> universe) {
  return project_reduction_relation(dom, basis, universe, universe);
}

/// a - b in the ideal generated by `gens`. Exact when the domain has a finite
/// carrier (closure over all multipliers); otherwise searches combinations
/// sum m_i * c_i with every m_i drawn from `multipliers`.
template <ReductionRing D>
bool ideal_congruence_holds(const D& dom, const ElementOf<D>& a, const ElementOf<D>& b,
                            std::span<const ElementOf<D>> gens, std::span<const ElementOf<D>> multipliers = {}) {
  const auto target = sub(dom, a, b);
  if (is_zero(dom, target)) return true;
  if (auto carrier = dom.carrier()) {
    std::vector<ElementOf<D>> ideal{dom.zero()};
    auto contains = [&](const ElementOf<D>& x) {
      for (const auto& y : ideal) {
        if (dom.equal(x, y)) return true;
      }
      return false;
    };
    for (std::size_t k = 0; k < ideal.size(); ++k) {
      for (const auto& c : gens) {
        for (const auto& m : *carrier) {
          auto next = dom.add(ideal[k], dom.mul(m, c));
          if (!contains(next)) ideal.push_back(std::move(next));
        }
      }
    }
    return contains(target);
  }
  // Bounded search over multiplier tuples.
  std::vector<std::size_t> choice(gens.size(), 0);
  if (multipliers.empty()) return false;
  while (true) {
    ElementOf<D> sum = dom.zero();
    for (std::size_t k = 0; k < gens.size(); ++k) sum = dom.add(sum, dom.mul(multipliers[choice[k]], gens[k]));
    if (dom.equal(sum, target)) return true;
    std::size_t k = 0;
    while (k < choice.size() && ++choice[k] == multipliers.size()) choice[k++] = 0;
    if (k == choice.size()) return false;
  }
}

}  // namespace rr
