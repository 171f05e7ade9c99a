#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace rr {

/// Exact rationals as a reduction ring. Every nonzero element reduces to 0
/// modulo any nonzero c, and 0 is below everything else; all nonzero elements
/// are associates, so one common-reducible representative (1) covers all classes.
class RationalField {
 public:
  using Element = mpq_class;

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element neg(const Element& a) const { return -a; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  bool equal(const Element& a, const Element& b) const { return a == b; }
  bool less(const Element& a, const Element& b) const { return sgn(a) == 0 && sgn(b) != 0; }

  std::size_t multiplier_indices() const { return 1; }
  std::optional<Element> find_multiplier(const Element& a, const Element& c, std::size_t index) const;
  std::vector<Element> mntcrs(const Element& c1, std::size_t i1, const Element& c2, std::size_t i2) const;
  std::optional<std::vector<Element>> carrier() const { return std::nullopt; }

  Element sample(std::mt19937_64& rng) const;
  std::string render(const Element& a) const { return a.get_str(); }
  Element parse(std::string_view text) const;
  std::string name() const { return "Q"; }
};

/// The integers, ordered by absolute value with -k below k.
class IntegerRing {
 public:
  using Element = mpz_class;

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element neg(const Element& a) const { return -a; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  bool equal(const Element& a, const Element& b) const { return a == b; }
  bool less(const Element& a, const Element& b) const;

  std::size_t multiplier_indices() const { return 1; }
  /// Best of the two nearest quotients, if it strictly decreases a.
  std::optional<Element> find_multiplier(const Element& a, const Element& c, std::size_t index) const;
  /// {ceil(M/2), M, lcm(|c1|,|c2|)} with M = max(|c1|,|c2|), duplicates removed.
  std::vector<Element> mntcrs(const Element& c1, std::size_t i1, const Element& c2, std::size_t i2) const;
  std::optional<std::vector<Element>> carrier() const { return std::nullopt; }

  Element sample(std::mt19937_64& rng) const;
  std::string render(const Element& a) const { return a.get_str(); }
  Element parse(std::string_view text) const;
  std::string name() const { return "Z"; }
};

/// Display-only canonical sign for integer basis elements.
mpz_class normalize_sign(const mpz_class& a);

struct Residue {
  std::uint64_t value = 0;
  friend bool operator==(Residue, Residue) = default;
};

/// Z/nZ on the carrier {0, ..., n-1}, ordered as natural numbers.
///
/// Reduction by c sends a to a mod gcd(c, n). Index 0 uses the least such
/// multiplier; index 1 shifts it by n/gcd(c, n), which generates the
/// annihilator of c. Over Z_n itself both indices reduce identically, but in
/// polynomial rings over Z_n the pair (g, 0, g, 1) yields the annihilator
/// multiple of g as a critical pair.
class IntegerModRing {
 public:
  using Element = Residue;

  explicit IntegerModRing(std::int64_t modulus);

  std::uint64_t modulus() const noexcept { return n_; }

  Element zero() const { return {0}; }
  Element one() const { return {1 % n_}; }
  Element add(Element a, Element b) const { return {(a.value + b.value) % n_}; }
  Element neg(Element a) const { return {(n_ - a.value) % n_}; }
  Element mul(Element a, Element b) const;
  bool equal(Element a, Element b) const { return a.value == b.value; }
  bool less(Element a, Element b) const { return a.value < b.value; }

  std::size_t multiplier_indices() const { return 2; }
  std::optional<Element> find_multiplier(Element a, Element c, std::size_t index) const;
  /// {max(d1, d2)} plus lcm(d1, d2) when it is a nonzero residue, d_k = gcd(c_k, n).
  std::vector<Element> mntcrs(Element c1, std::size_t i1, Element c2, std::size_t i2) const;
  std::optional<std::vector<Element>> carrier() const;

  Element sample(std::mt19937_64& rng) const;
  std::string render(Element a) const { return std::to_string(a.value); }
  Element parse(std::string_view text) const;
  std::string name() const { return "Z/" + std::to_string(n_); }

  Element from_integer(const mpz_class& value) const;

 private:
  std::uint64_t n_;
};

}  // namespace rr
