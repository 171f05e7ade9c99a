#pragma once

// Finite abstract rewriting: an explicitly enumerated carrier plus a step set.
// Every confluence question on such a relation is decidable by search, which
// is what the tests use as ground truth for the completion engine.

#include <algorithm>
#include <cstddef>
#include <deque>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "rr/errors.hpp"

namespace rr {

template <class T>
class FiniteRelation {
 public:
  FiniteRelation() = default;

  explicit FiniteRelation(std::vector<T> elements) : elements_(std::move(elements)) {
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (elements_[i] == elements_[j]) throw DomainError("FiniteRelation: duplicate element");
      }
    }
    successors_.resize(elements_.size());
  }

  const std::vector<T>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }

  std::optional<std::size_t> find(const T& value) const {
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      if (elements_[i] == value) return i;
    }
    return std::nullopt;
  }

  std::size_t index_of(const T& value) const {
    if (auto i = find(value)) return *i;
    throw DomainError("FiniteRelation: element not in carrier");
  }

  void add_step(std::size_t from, std::size_t to) {
    if (from >= size() || to >= size()) throw DomainError("FiniteRelation: step index out of range");
    auto& succ = successors_[from];
    if (std::find(succ.begin(), succ.end(), to) == succ.end()) {
      succ.push_back(to);
      ++step_count_;
    }
  }

  void add_step(const T& from, const T& to) { add_step(index_of(from), index_of(to)); }

  bool has_step(std::size_t from, std::size_t to) const {
    const auto& succ = successors_.at(from);
    return std::find(succ.begin(), succ.end(), to) != succ.end();
  }

  const std::vector<std::size_t>& successors(std::size_t i) const { return successors_.at(i); }
  std::size_t step_count() const noexcept { return step_count_; }

 private:
  std::vector<T> elements_;
  std::vector<std::vector<std::size_t>> successors_;
  std::size_t step_count_ = 0;
};

namespace detail {

// Reflexive-transitive closure from a single start index.
template <class T>
std::vector<bool> reach_mask(const FiniteRelation<T>& rel, std::size_t start) {
  std::vector<bool> seen(rel.size(), false);
  std::vector<std::size_t> stack{start};
  seen[start] = true;
  while (!stack.empty()) {
    const std::size_t u = stack.back();
    stack.pop_back();
    for (std::size_t v : rel.successors(u)) {
      if (!seen[v]) {
        seen[v] = true;
        stack.push_back(v);
      }
    }
  }
  return seen;
}

template <class T>
std::vector<std::vector<std::size_t>> undirected_adjacency(const FiniteRelation<T>& rel) {
  std::vector<std::vector<std::size_t>> adj(rel.size());
  for (std::size_t u = 0; u < rel.size(); ++u) {
    for (std::size_t v : rel.successors(u)) {
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
  }
  return adj;
}

template <class T>
std::vector<std::size_t> component_ids(const FiniteRelation<T>& rel) {
  const auto adj = undirected_adjacency(rel);
  constexpr auto unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> comp(rel.size(), unset);
  std::size_t next = 0;
  for (std::size_t s = 0; s < rel.size(); ++s) {
    if (comp[s] != unset) continue;
    std::vector<std::size_t> stack{s};
    comp[s] = next;
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t v : adj[u]) {
        if (comp[v] == unset) {
          comp[v] = next;
          stack.push_back(v);
        }
      }
    }
    ++next;
  }
  return comp;
}

inline bool intersects(const std::vector<bool>& a, const std::vector<bool>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] && b[i]) return true;
  }
  return false;
}

template <class T>
std::vector<std::vector<bool>> all_reach_masks(const FiniteRelation<T>& rel) {
  std::vector<std::vector<bool>> reach;
  reach.reserve(rel.size());
  for (std::size_t i = 0; i < rel.size(); ++i) reach.push_back(reach_mask(rel, i));
  return reach;
}

template <class T, class Less>
bool connectible_below_idx(const FiniteRelation<T>& rel, const std::vector<std::vector<std::size_t>>& adj,
                           Less&& less, std::size_t a, std::size_t b, const T& bound) {
  const auto& el = rel.elements();
  if (!less(el[a], bound) || !less(el[b], bound)) return false;
  if (a == b) return true;
  std::vector<bool> seen(rel.size(), false);
  std::deque<std::size_t> queue{a};
  seen[a] = true;
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t v : adj[u]) {
      if (seen[v] || !less(el[v], bound)) continue;
      if (v == b) return true;
      seen[v] = true;
      queue.push_back(v);
    }
  }
  return false;
}

}  // namespace detail

/// All b with a ->* b, in carrier order (a itself included).
template <class T>
std::vector<T> reachable(const FiniteRelation<T>& rel, const T& a) {
  const auto mask = detail::reach_mask(rel, rel.index_of(a));
  std::vector<T> out;
  for (std::size_t i = 0; i < mask.size(); ++i) {
    if (mask[i]) out.push_back(rel.elements()[i]);
  }
  return out;
}

/// a <->* b: same connected component of the undirected step graph.
template <class T>
bool equivalent(const FiniteRelation<T>& rel, const T& a, const T& b) {
  const std::size_t ia = rel.index_of(a);
  const std::size_t ib = rel.index_of(b);
  const auto comp = detail::component_ids(rel);
  return comp[ia] == comp[ib];
}

template <class T>
bool is_church_rosser(const FiniteRelation<T>& rel) {
  const auto comp = detail::component_ids(rel);
  const auto reach = detail::all_reach_masks(rel);
  for (std::size_t i = 0; i < rel.size(); ++i) {
    for (std::size_t j = i + 1; j < rel.size(); ++j) {
      if (comp[i] == comp[j] && !detail::intersects(reach[i], reach[j])) return false;
    }
  }
  return true;
}

template <class T>
bool is_locally_confluent(const FiniteRelation<T>& rel) {
  const auto reach = detail::all_reach_masks(rel);
  for (std::size_t a = 0; a < rel.size(); ++a) {
    const auto& succ = rel.successors(a);
    for (std::size_t x = 0; x < succ.size(); ++x) {
      for (std::size_t y = x + 1; y < succ.size(); ++y) {
        if (!detail::intersects(reach[succ[x]], reach[succ[y]])) return false;
      }
    }
  }
  return true;
}

/// Undirected chain from a to b whose every element (endpoints included) is strictly below z.
template <class T, class Less>
bool connectible_below(const FiniteRelation<T>& rel, Less&& less, const T& a, const T& b, const T& z) {
  const std::size_t ia = rel.index_of(a);
  const std::size_t ib = rel.index_of(b);
  rel.index_of(z);
  return detail::connectible_below_idx(rel, detail::undirected_adjacency(rel), less, ia, ib, z);
}

/// Throws PreconditionError unless `less` is irreflexive and acyclic on the carrier.
template <class T, class Less>
void require_well_founded(const FiniteRelation<T>& rel, Less&& less) {
  const auto& el = rel.elements();
  const std::size_t n = el.size();
  // 0 = unvisited, 1 = on stack, 2 = done; edges go from x to every y with y < x.
  std::vector<int> state(n, 0);
  std::function<void(std::size_t)> visit = [&](std::size_t u) {
    state[u] = 1;
    for (std::size_t v = 0; v < n; ++v) {
      if (!less(el[v], el[u])) continue;
      if (state[v] == 1) throw PreconditionError("order is not well-founded on the carrier (cycle)");
      if (state[v] == 0) visit(v);
    }
    state[u] = 2;
  };
  for (std::size_t u = 0; u < n; ++u) {
    if (state[u] == 0) visit(u);
  }
}

/// Premise of the Generalized Newman Lemma: every one-step divergence b <- a -> c
/// is connectible below a.
template <class T, class Less>
bool generalized_newman_holds(const FiniteRelation<T>& rel, Less&& less) {
  require_well_founded(rel, less);
  const auto adj = detail::undirected_adjacency(rel);
  const auto& el = rel.elements();
  for (std::size_t a = 0; a < rel.size(); ++a) {
    const auto& succ = rel.successors(a);
    for (std::size_t x = 0; x < succ.size(); ++x) {
      for (std::size_t y = x + 1; y < succ.size(); ++y) {
        if (!detail::connectible_below_idx(rel, adj, less, succ[x], succ[y], el[a])) return false;
      }
    }
  }
  return true;
}

}  // namespace rr
