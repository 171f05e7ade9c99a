#pragma once

// The reduction-ring interface. A domain is a commutative ring with identity
// plus a Noetherian strict order `less` and, for every element c, finitely many
// indexed multiplier sets M_c^i. Multiplier sets are never enumerated: the
// domain answers `find_multiplier(a, c, i)` with some m in M_c^i such that
// a - m*c < a, or nothing if no such m exists.

#include <concepts>
#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace rr {

template <class D>
concept ReductionRing = std::copy_constructible<D> &&
    requires(const D& d, const typename D::Element& a, std::size_t idx, std::mt19937_64& rng,
             std::string_view text) {
      typename D::Element;
      { d.zero() } -> std::convertible_to<typename D::Element>;
      { d.one() } -> std::convertible_to<typename D::Element>;
      { d.add(a, a) } -> std::convertible_to<typename D::Element>;
      { d.neg(a) } -> std::convertible_to<typename D::Element>;
      { d.mul(a, a) } -> std::convertible_to<typename D::Element>;
      { d.equal(a, a) } -> std::convertible_to<bool>;
      { d.less(a, a) } -> std::convertible_to<bool>;
      { d.multiplier_indices() } -> std::convertible_to<std::size_t>;
      { d.find_multiplier(a, a, idx) } -> std::same_as<std::optional<typename D::Element>>;
      { d.mntcrs(a, idx, a, idx) } -> std::same_as<std::vector<typename D::Element>>;
      { d.carrier() } -> std::same_as<std::optional<std::vector<typename D::Element>>>;
      { d.sample(rng) } -> std::convertible_to<typename D::Element>;
      { d.render(a) } -> std::convertible_to<std::string>;
      { d.parse(text) } -> std::convertible_to<typename D::Element>;
      { d.name() } -> std::convertible_to<std::string>;
    };

/// Optional hook used by the chain criterion: z reducible modulo {g} at some index.
template <class D>
concept HasSingleReducibilityTest =
    ReductionRing<D> && requires(const D& d, const typename D::Element& z, const typename D::Element& g) {
      { d.single_reducible(z, g) } -> std::convertible_to<bool>;
    };

template <ReductionRing D>
using ElementOf = typename D::Element;

template <ReductionRing D>
ElementOf<D> sub(const D& dom, const ElementOf<D>& a, const ElementOf<D>& b) {
  return dom.add(a, dom.neg(b));
}

template <ReductionRing D>
bool is_zero(const D& dom, const ElementOf<D>& a) {
  return dom.equal(a, dom.zero());
}

/// One reduction step: after = before - multiplier * reducer, and after < before.
template <class E>
struct ReductionCertificate {
  E reducer;
  std::size_t reducer_position = 0;  // position of `reducer` in the list reduced against
  std::size_t index = 0;             // multiplier index
  E multiplier;
  E before;
  E after;
};

}  // namespace rr
