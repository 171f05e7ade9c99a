#pragma once

// Critical-pair completion over an arbitrary reduction ring.
//
// The engine walks a FIFO queue of basis index pairs (i, j), i <= j, self-pairs
// included. For each pair and each pair of multiplier indices it forms the
// critical pair of every common reducible z returned by the domain, totally
// reduces both constituents modulo the current basis and appends the
// difference h when it is nonzero. Pairs (k, new) for k <= new are enqueued in
// increasing k. Indices are 0-based throughout.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "rr/domain.hpp"
#include "rr/errors.hpp"
#include "rr/reduction.hpp"

namespace rr {

struct GbOptions {
  bool chain_criterion = false;
  std::size_t max_steps = 1'000'000;  // bound on common reducibles examined
  std::size_t max_reduction_steps = kDefaultMaxReductionSteps;
  bool record_trace = true;
  bool track_cofactors = true;
};

struct IndexPair {
  std::size_t i = 0;
  std::size_t j = 0;
  friend auto operator<=>(const IndexPair&, const IndexPair&) = default;
};

/// h = sum_k cofactors[k] * original[k], over the positions of the original input.
template <class E>
struct CofactorRow {
  E element;
  std::vector<E> cofactors;
};

template <class E>
struct PendingMntcr {
  E z;
  std::size_t index1 = 0;
  std::size_t index2 = 0;
};

template <class E>
class GbState {
 public:
  std::vector<E> basis;
  std::optional<IndexPair> current;
  std::deque<PendingMntcr<E>> pending;

  const std::deque<IndexPair>& pair_queue() const noexcept { return queue_; }

  void enqueue(IndexPair p) {
    queue_.push_back(p);
    queued_.insert(p);
  }

  IndexPair pop() {
    const IndexPair p = queue_.front();
    queue_.pop_front();
    queued_.erase(p);
    return p;
  }

  /// Both indices exist and the pair is neither queued nor current.
  bool processed(std::size_t a, std::size_t b) const {
    const IndexPair p{std::min(a, b), std::max(a, b)};
    if (p.j >= basis.size()) return false;
    if (current && *current == p) return false;
    return !queued_.contains(p);
  }

 private:
  std::deque<IndexPair> queue_;
  std::set<IndexPair> queued_;
};

enum class TraceKind { Input, PairSelected, Mntcr, ChainSkip, CriticalPair, Reduced, Added, Final };

struct TraceEvent {
  TraceKind kind = TraceKind::Input;
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t index1 = 0;
  std::size_t index2 = 0;
  std::size_t witness = 0;  // chain-criterion third element
  std::size_t steps1 = 0;
  std::size_t steps2 = 0;
  std::vector<std::string> values;  // rendered elements

  std::string to_text() const;
  nlohmann::json to_json() const;
};

struct GbTrace {
  std::vector<TraceEvent> events;

  std::string to_text() const;
  nlohmann::json to_json() const;
  /// FNV-1a of to_text().
  std::uint64_t digest() const;
  /// Input elements followed by every added h, as recorded.
  std::vector<std::string> replay_basis() const;
  /// The basis listed by the final events.
  std::vector<std::string> final_basis() const;
};

struct GbStats {
  std::size_t pairs_processed = 0;
  std::size_t mntcrs_examined = 0;
  std::size_t critical_pairs_reduced = 0;
  std::size_t chain_skips = 0;
  std::size_t additions = 0;
};

template <class E>
struct GbResult {
  std::vector<E> basis;
  std::vector<CofactorRow<E>> rows;
  GbTrace trace;
  GbStats stats;
};

template <class E>
struct CriticalPair {
  E first;
  E second;
  E multiplier1;
  E multiplier2;
};

/// (z - m1*g1, z - m2*g2) with m_k = find_multiplier(z, g_k, i_k).
template <ReductionRing D>
CriticalPair<ElementOf<D>> critical_pair_with_multipliers(const D& dom, const ElementOf<D>& z, const ElementOf<D>& g1,
                                                          std::size_t i1, const ElementOf<D>& g2, std::size_t i2) {
  auto m1 = dom.find_multiplier(z, g1, i1);
  auto m2 = dom.find_multiplier(z, g2, i2);
  if (!m1 || !m2) {
    throw ContractViolation("common reducible " + dom.render(z) + " is not reducible by both generators");
  }
  auto a1 = sub(dom, z, dom.mul(*m1, g1));
  auto a2 = sub(dom, z, dom.mul(*m2, g2));
  return {std::move(a1), std::move(a2), std::move(*m1), std::move(*m2)};
}

template <ReductionRing D>
std::pair<ElementOf<D>, ElementOf<D>> critical_pair(const D& dom, const ElementOf<D>& z, const ElementOf<D>& g1,
                                                    std::size_t i1, const ElementOf<D>& g2, std::size_t i2) {
  auto cp = critical_pair_with_multipliers(dom, z, g1, i1, g2, i2);
  return {std::move(cp.first), std::move(cp.second)};
}

/// Some k other than i, j has z reducible modulo {basis[k]} and both (i, k)
/// and (j, k) already processed. Always false for domains without a
/// single-reducibility test.
template <ReductionRing D>
bool chain_criterion_skip(const D& dom, const GbState<ElementOf<D>>& state, std::size_t i, std::size_t j,
                          const ElementOf<D>& z, std::size_t* witness = nullptr) {
  if constexpr (HasSingleReducibilityTest<D>) {
    for (std::size_t k = 0; k < state.basis.size(); ++k) {
      if (k == i || k == j) continue;
      if (!state.processed(i, k) || !state.processed(j, k)) continue;
      if (dom.single_reducible(z, state.basis[k])) {
        if (witness) *witness = k;
        return true;
      }
    }
  } else {
    (void)dom, (void)state, (void)i, (void)j, (void)z, (void)witness;
  }
  return false;
}

namespace detail {

template <ReductionRing D>
void enqueue_pairs_for(GbState<ElementOf<D>>& state, std::size_t newest) {
  for (std::size_t k = 0; k <= newest; ++k) state.enqueue({k, newest});
}

template <ReductionRing D>
std::deque<PendingMntcr<ElementOf<D>>> mntcrs_for_pair(const D& dom, const std::vector<ElementOf<D>>& basis,
                                                       IndexPair p) {
  std::deque<PendingMntcr<ElementOf<D>>> out;
  const std::size_t indices = dom.multiplier_indices();
  for (std::size_t i1 = 0; i1 < indices; ++i1) {
    for (std::size_t i2 = (p.i == p.j ? i1 : 0); i2 < indices; ++i2) {
      for (auto& z : dom.mntcrs(basis[p.i], i1, basis[p.j], i2)) out.push_back({std::move(z), i1, i2});
    }
  }
  return out;
}

}  // namespace detail

template <ReductionRing D>
GbResult<ElementOf<D>> gb(const D& dom, std::span<const ElementOf<D>> input, const GbOptions& options = {}) {
  using E = ElementOf<D>;
  GbResult<E> result;
  GbState<E> state;
  std::vector<std::vector<E>> cofactors;  // per basis position, over input positions

  auto trace = [&](TraceEvent ev) {
    if (options.record_trace) result.trace.events.push_back(std::move(ev));
  };

  for (std::size_t pos = 0; pos < input.size(); ++pos) {
    if (is_zero(dom, input[pos])) continue;
    state.basis.push_back(input[pos]);
    if (options.track_cofactors) {
      std::vector<E> unit(input.size(), dom.zero());
      unit[pos] = dom.one();
      cofactors.push_back(std::move(unit));
    }
    if (options.record_trace) trace({TraceKind::Input, state.basis.size() - 1, pos, 0, 0, 0, 0, 0, {dom.render(input[pos])}});
  }
  for (std::size_t j = 0; j < state.basis.size(); ++j) detail::enqueue_pairs_for<D>(state, j);

  while (!state.pair_queue().empty()) {
    const IndexPair p = state.pop();
    state.current = p;
    ++result.stats.pairs_processed;
    trace({TraceKind::PairSelected, p.i, p.j, 0, 0, 0, 0, 0, {}});
    state.pending = detail::mntcrs_for_pair(dom, state.basis, p);

    while (!state.pending.empty()) {
      PendingMntcr<E> pm = std::move(state.pending.front());
      state.pending.pop_front();
      if (++result.stats.mntcrs_examined > options.max_steps) {
        throw NonTerminationError("gb: step bound exceeded");
      }
      if (options.record_trace) trace({TraceKind::Mntcr, p.i, p.j, pm.index1, pm.index2, 0, 0, 0, {dom.render(pm.z)}});

      std::size_t witness = 0;
      if (options.chain_criterion && chain_criterion_skip(dom, state, p.i, p.j, pm.z, &witness)) {
        ++result.stats.chain_skips;
        trace({TraceKind::ChainSkip, p.i, p.j, pm.index1, pm.index2, witness, 0, 0, {}});
        continue;
      }

      auto cp = critical_pair_with_multipliers(dom, pm.z, state.basis[p.i], pm.index1, state.basis[p.j], pm.index2);
      if (options.record_trace) {
        trace({TraceKind::CriticalPair, p.i, p.j, pm.index1, pm.index2, 0, 0, 0,
               {dom.render(cp.first), dom.render(cp.second)}});
      }
      const std::span<const E> basis(state.basis);
      auto nf1 = normal_form(dom, cp.first, basis, options.max_reduction_steps);
      auto nf2 = normal_form(dom, cp.second, basis, options.max_reduction_steps);
      ++result.stats.critical_pairs_reduced;
      E h = sub(dom, nf1.value, nf2.value);
      const bool zero = is_zero(dom, h);
      if (options.record_trace) {
        trace({TraceKind::Reduced, p.i, p.j, pm.index1, pm.index2, 0, nf1.chain.size(), nf2.chain.size(),
               {dom.render(h)}});
      }
      if (zero) continue;

      if (options.track_cofactors) {
        // h = nf1 - nf2 = (-m1*g_i - sum1) - (-m2*g_j - sum2); z cancels.
        std::vector<E> row(input.size(), dom.zero());
        auto accumulate = [&](const E& scale, std::size_t pos) {
          for (std::size_t k = 0; k < row.size(); ++k) row[k] = dom.add(row[k], dom.mul(scale, cofactors[pos][k]));
        };
        accumulate(dom.neg(cp.multiplier1), p.i);
        accumulate(cp.multiplier2, p.j);
        for (const auto& cert : nf1.chain) accumulate(dom.neg(cert.multiplier), cert.reducer_position);
        for (const auto& cert : nf2.chain) accumulate(cert.multiplier, cert.reducer_position);
        result.rows.push_back({h, row});
        cofactors.push_back(std::move(row));
      }
      state.basis.push_back(h);
      ++result.stats.additions;
      trace({TraceKind::Added, state.basis.size() - 1, 0, 0, 0, 0, 0, 0, {dom.render(h)}});
      detail::enqueue_pairs_for<D>(state, state.basis.size() - 1);
    }
    state.current.reset();
  }

  if (options.record_trace) {
    for (std::size_t k = 0; k < state.basis.size(); ++k) trace({TraceKind::Final, k, 0, 0, 0, 0, 0, 0, {dom.render(state.basis[k])}});
  }
  result.basis = std::move(state.basis);
  return result;
}

template <ReductionRing D>
GbResult<ElementOf<D>> gb(const D& dom, const std::vector<ElementOf<D>>& input, const GbOptions& options = {}) {
  return gb(dom, std::span<const ElementOf<D>>(input), options);
}

/// The finite criterion: every critical pair of every pair (self-pairs
/// included) and every multiplier-index pair has normal forms that agree.
template <ReductionRing D>
bool is_groebner_basis(const D& dom, std::span<const ElementOf<D>> g,
                       std::size_t max_reduction_steps = kDefaultMaxReductionSteps) {
  const std::vector<ElementOf<D>> basis(g.begin(), g.end());
  for (std::size_t j = 0; j < g.size(); ++j) {
    for (std::size_t i = 0; i <= j; ++i) {
      for (const auto& pm : detail::mntcrs_for_pair(dom, basis, {i, j})) {
        auto [a1, a2] = critical_pair(dom, pm.z, g[i], pm.index1, g[j], pm.index2);
        const auto h1 = normal_form(dom, std::move(a1), g, max_reduction_steps).value;
        const auto h2 = normal_form(dom, std::move(a2), g, max_reduction_steps).value;
        if (!dom.equal(h1, h2)) return false;
      }
    }
  }
  return true;
}

template <ReductionRing D>
bool is_groebner_basis(const D& dom, const std::vector<ElementOf<D>>& g) {
  return is_groebner_basis(dom, std::span<const ElementOf<D>>(g));
}

/// Decides a in <G> for a Groebner basis G: the normal form is zero.
template <ReductionRing D>
bool member_ideal(const D& dom, const ElementOf<D>& a, std::span<const ElementOf<D>> g,
                  std::size_t max_reduction_steps = kDefaultMaxReductionSteps) {
  return is_zero(dom, normal_form(dom, a, g, max_reduction_steps).value);
}

template <ReductionRing D>
bool member_ideal(const D& dom, const ElementOf<D>& a, const std::vector<ElementOf<D>>& g) {
  return member_ideal(dom, a, std::span<const ElementOf<D>>(g));
}

template <ReductionRing D>
bool verify_cofactors(const D& dom, std::span<const CofactorRow<ElementOf<D>>> rows,
                      std::span<const ElementOf<D>> original) {
  for (const auto& row : rows) {
    if (row.cofactors.size() != original.size()) return false;
    ElementOf<D> sum = dom.zero();
    for (std::size_t k = 0; k < original.size(); ++k) sum = dom.add(sum, dom.mul(row.cofactors[k], original[k]));
    if (!dom.equal(sum, row.element)) return false;
  }
  return true;
}

template <ReductionRing D>
bool verify_cofactors(const D& dom, const std::vector<CofactorRow<ElementOf<D>>>& rows,
                      const std::vector<ElementOf<D>>& original) {
  return verify_cofactors(dom, std::span<const CofactorRow<ElementOf<D>>>(rows), std::span<const ElementOf<D>>(original));
}

}  // namespace rr
