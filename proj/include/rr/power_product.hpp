#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace rr {

/// Exponent tuple, one entry per variable.
struct PowerProduct {
  std::vector<std::uint32_t> exponents;

  PowerProduct() = default;
  explicit PowerProduct(std::size_t variables) : exponents(variables, 0) {}
  PowerProduct(std::initializer_list<std::uint32_t> e) : exponents(e) {}

  std::size_t size() const noexcept { return exponents.size(); }
  std::uint64_t degree() const noexcept;
  bool is_one() const noexcept;

  friend bool operator==(const PowerProduct&, const PowerProduct&) = default;
};

PowerProduct pp_mul(const PowerProduct& s, const PowerProduct& t);
PowerProduct pp_lcm(const PowerProduct& s, const PowerProduct& t);
/// s divides t componentwise.
bool pp_divides(const PowerProduct& s, const PowerProduct& t);
/// t / s; throws DomainError unless s divides t.
PowerProduct pp_quotient(const PowerProduct& t, const PowerProduct& s);

enum class TermOrderKind { Lex, DegLex, DegRevLex };

std::string to_string(TermOrderKind kind);
TermOrderKind parse_term_order(std::string_view name);

/// Admissible order on power products; variables are ranked x_0 > x_1 > ...
class TermOrder {
 public:
  TermOrder(TermOrderKind kind, std::size_t variables) : kind_(kind), variables_(variables) {}

  TermOrderKind kind() const noexcept { return kind_; }
  std::size_t variables() const noexcept { return variables_; }

  std::strong_ordering compare(const PowerProduct& s, const PowerProduct& t) const;
  bool less(const PowerProduct& s, const PowerProduct& t) const { return compare(s, t) < 0; }

 private:
  TermOrderKind kind_;
  std::size_t variables_;
};

}  // namespace rr
