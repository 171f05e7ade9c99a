#pragma once

// Multivariate polynomials over an arbitrary coefficient reduction ring,
// stored as tuples of monomials sorted strictly descending by the term order.
//
// The polynomial order compares monomial tuples position by position: first
// the power product (term order), then the coefficient (coefficient order);
// a proper prefix is below its extension and 0 is least. A polynomial f is
// reduced by g at the greatest term t of f that lpp(g) divides and whose
// coefficient is reducible by lc(g); the multiplier is m*(t/lpp(g)) with m
// the coefficient ring's multiplier. Common reducibles of g1, g2 are c*L for
// every coefficient common reducible c of lc(g1), lc(g2) and L the lcm of the
// leading power products.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rr/domain.hpp"
#include "rr/errors.hpp"
#include "rr/power_product.hpp"

namespace rr {

template <class C>
struct Monomial {
  C coefficient;
  PowerProduct power_product;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.power_product == b.power_product && a.coefficient == b.coefficient;
  }
};

template <class C>
struct Polynomial {
  std::vector<Monomial<C>> terms;

  bool is_zero() const noexcept { return terms.empty(); }
  std::size_t size() const noexcept { return terms.size(); }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms == b.terms; }
};

template <ReductionRing Coeff>
class PolynomialRing {
 public:
  using Coefficient = ElementOf<Coeff>;
  using Element = Polynomial<Coefficient>;
  using Term = Monomial<Coefficient>;

  static constexpr bool restricted_multipliers = true;

  PolynomialRing(Coeff coeff, std::vector<std::string> variables, TermOrderKind order)
      : coeff_(std::move(coeff)), variables_(std::move(variables)), order_(order, variables_.size()) {
    for (std::size_t k = 0; k < variables_.size(); ++k) {
      const auto& v = variables_[k];
      if (v.empty() || !(std::isalpha(static_cast<unsigned char>(v[0])) || v[0] == '_')) {
        throw DomainError("invalid variable name '" + v + "'");
      }
      for (std::size_t l = 0; l < k; ++l) {
        if (variables_[l] == v) throw DomainError("duplicate variable '" + v + "'");
      }
    }
  }

  const Coeff& coefficients() const noexcept { return coeff_; }
  const std::vector<std::string>& variables() const noexcept { return variables_; }
  const TermOrder& order() const noexcept { return order_; }

  // ---- construction ----

  Element monomial(const Coefficient& c, PowerProduct pp) const {
    check_pp(pp);
    if (is_zero(coeff_, c)) return {};
    return Element{{Term{c, std::move(pp)}}};
  }
  Element constant(const Coefficient& c) const { return monomial(c, PowerProduct(variables_.size())); }
  Element variable(std::size_t k) const {
    PowerProduct pp(variables_.size());
    pp.exponents.at(k) = 1;
    return monomial(coeff_.one(), std::move(pp));
  }

  // ---- ring operations ----

  Element zero() const { return {}; }
  Element one() const { return constant(coeff_.one()); }

  Element add(const Element& p, const Element& q) const {
    Element out;
    out.terms.reserve(p.size() + q.size());
    std::size_t a = 0;
    std::size_t b = 0;
    while (a < p.size() && b < q.size()) {
      const auto cmp = order_.compare(p.terms[a].power_product, q.terms[b].power_product);
      if (cmp > 0) {
        out.terms.push_back(p.terms[a++]);
      } else if (cmp < 0) {
        out.terms.push_back(q.terms[b++]);
      } else {
        auto c = coeff_.add(p.terms[a].coefficient, q.terms[b].coefficient);
        if (!is_zero(coeff_, c)) out.terms.push_back(Term{std::move(c), p.terms[a].power_product});
        ++a;
        ++b;
      }
    }
    out.terms.insert(out.terms.end(), p.terms.begin() + static_cast<std::ptrdiff_t>(a), p.terms.end());
    out.terms.insert(out.terms.end(), q.terms.begin() + static_cast<std::ptrdiff_t>(b), q.terms.end());
    return out;
  }

  Element neg(const Element& p) const {
    Element out = p;
    for (auto& t : out.terms) t.coefficient = coeff_.neg(t.coefficient);
    return out;
  }

  /// m * p; term order is multiplicative so the result stays sorted.
  Element mono_mul(const Term& m, const Element& p) const {
    Element out;
    out.terms.reserve(p.size());
    for (const auto& t : p.terms) {
      auto c = coeff_.mul(m.coefficient, t.coefficient);
      if (is_zero(coeff_, c)) continue;
      out.terms.push_back(Term{std::move(c), pp_mul(m.power_product, t.power_product)});
    }
    return out;
  }

  Element mul(const Element& p, const Element& q) const {
    if (p.size() == 1) return mono_mul(p.terms.front(), q);
    if (q.size() == 1) return mono_mul(q.terms.front(), p);
    std::vector<Term> products;
    products.reserve(p.size() * q.size());
    for (const auto& s : p.terms) {
      for (const auto& t : q.terms) {
        products.push_back(Term{coeff_.mul(s.coefficient, t.coefficient), pp_mul(s.power_product, t.power_product)});
      }
    }
    std::stable_sort(products.begin(), products.end(), [this](const Term& x, const Term& y) {
      return order_.compare(x.power_product, y.power_product) > 0;
    });
    Element out;
    for (auto& term : products) {
      if (!out.terms.empty() && out.terms.back().power_product == term.power_product) {
        out.terms.back().coefficient = coeff_.add(out.terms.back().coefficient, term.coefficient);
      } else {
        if (!out.terms.empty() && is_zero(coeff_, out.terms.back().coefficient)) out.terms.pop_back();
        out.terms.push_back(std::move(term));
      }
    }
    if (!out.terms.empty() && is_zero(coeff_, out.terms.back().coefficient)) out.terms.pop_back();
    return out;
  }

  bool equal(const Element& p, const Element& q) const {
    if (p.size() != q.size()) return false;
    for (std::size_t k = 0; k < p.size(); ++k) {
      if (p.terms[k].power_product != q.terms[k].power_product) return false;
      if (!coeff_.equal(p.terms[k].coefficient, q.terms[k].coefficient)) return false;
    }
    return true;
  }

  bool less(const Element& p, const Element& q) const {
    for (std::size_t k = 0;; ++k) {
      if (k == p.size()) return k < q.size();
      if (k == q.size()) return false;
      const auto cmp = order_.compare(p.terms[k].power_product, q.terms[k].power_product);
      if (cmp != 0) return cmp < 0;
      const auto& a = p.terms[k].coefficient;
      const auto& b = q.terms[k].coefficient;
      if (!coeff_.equal(a, b)) return coeff_.less(a, b);
    }
  }

  // ---- coefficient view ----

  Coefficient coefficient_at(const Element& p, const PowerProduct& t) const {
    for (const auto& term : p.terms) {
      if (term.power_product == t) return term.coefficient;
    }
    return coeff_.zero();
  }

  const Term& leading_monomial(const Element& p) const {
    if (p.is_zero()) throw DomainError("leading monomial of the zero polynomial");
    return p.terms.front();
  }

  // ---- reduction-ring structure ----

  std::size_t multiplier_indices() const { return coeff_.multiplier_indices(); }

  std::optional<Element> find_multiplier(const Element& f, const Element& g, std::size_t index) const {
    if (g.is_zero()) return std::nullopt;
    const Term& lead = g.terms.front();
    for (const auto& t : f.terms) {
      if (!pp_divides(lead.power_product, t.power_product)) continue;
      auto m = coeff_.find_multiplier(t.coefficient, lead.coefficient, index);
      if (!m || is_zero(coeff_, *m)) continue;
      return Element{{Term{std::move(*m), pp_quotient(t.power_product, lead.power_product)}}};
    }
    return std::nullopt;
  }

  std::vector<Element> mntcrs(const Element& g1, std::size_t i1, const Element& g2, std::size_t i2) const {
    if (g1.is_zero() || g2.is_zero()) return {};
    const Term& l1 = g1.terms.front();
    const Term& l2 = g2.terms.front();
    const PowerProduct lcm = pp_lcm(l1.power_product, l2.power_product);
    std::vector<Element> out;
    for (auto& c : coeff_.mntcrs(l1.coefficient, i1, l2.coefficient, i2)) out.push_back(monomial(c, lcm));
    return out;
  }

  /// Leading-term divisibility plus coefficient reducibility at some index.
  bool single_reducible(const Element& z, const Element& g) const {
    if (z.is_zero() || g.is_zero()) return false;
    const Term& lz = z.terms.front();
    const Term& lg = g.terms.front();
    if (!pp_divides(lg.power_product, lz.power_product)) return false;
    for (std::size_t i = 0; i < coeff_.multiplier_indices(); ++i) {
      if (coeff_.find_multiplier(lz.coefficient, lg.coefficient, i)) return true;
    }
    return false;
  }

  std::optional<std::vector<Element>> carrier() const { return std::nullopt; }

  /// Up to four terms, exponents at most 2 per variable.
  Element sample(std::mt19937_64& rng) const {
    std::uniform_int_distribution<int> terms(0, 4);
    std::uniform_int_distribution<std::uint32_t> exponent(0, 2);
    Element out;
    const int count = terms(rng);
    for (int k = 0; k < count; ++k) {
      PowerProduct pp(variables_.size());
      for (auto& e : pp.exponents) e = exponent(rng);
      out = add(out, monomial(coeff_.sample(rng), std::move(pp)));
    }
    return out;
  }

  std::string name() const {
    std::string vars;
    for (const auto& v : variables_) vars += (vars.empty() ? "" : ",") + v;
    return coeff_.name() + "[" + vars + "] " + to_string(order_.kind());
  }

  // ---- text ----

  std::string render(const Element& p) const {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t k = 0; k < p.size(); ++k) {
      const auto& term = p.terms[k];
      std::string c = coeff_.render(term.coefficient);
      const bool negative = !c.empty() && c.front() == '-';
      if (negative) c.erase(0, 1);
      if (k == 0) {
        if (negative) out += '-';
      } else {
        out += negative ? " - " : " + ";
      }
      const std::string pp = render_pp(term.power_product);
      if (pp.empty()) {
        out += c;
      } else {
        if (c != "1") out += c + "*";
        out += pp;
      }
    }
    return out;
  }

  std::string render_pp(const PowerProduct& pp) const {
    std::string out;
    for (std::size_t k = 0; k < pp.size(); ++k) {
      if (pp.exponents[k] == 0) continue;
      if (!out.empty()) out += '*';
      out += variables_[k];
      if (pp.exponents[k] > 1) out += "^" + std::to_string(pp.exponents[k]);
    }
    return out;
  }

  /// `3*x^2*y - 1/2*y + 5`; accepts `**`, implicit products (`3x`, `x y`),
  /// parentheses and unordered terms. Throws ParseError with a 1-based column.
  Element parse(std::string_view text) const { return Parser{*this, text}.run(); }

 private:
  void check_pp(const PowerProduct& pp) const {
    if (pp.size() != variables_.size()) throw DomainError("power product does not match the variable count");
  }

  struct Parser {
    const PolynomialRing& ring;
    std::string_view text;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, 1, pos + 1); }

    void skip_space() {
      while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    char peek() {
      skip_space();
      return pos < text.size() ? text[pos] : '\0';
    }
    bool starts_factor() {
      const char ch = peek();
      return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '(';
    }

    Element run() {
      if (peek() == '\0') fail("empty polynomial");
      Element value = expression();
      if (peek() != '\0') fail(std::string("unexpected '") + text[pos] + "'");
      return value;
    }

    Element expression() {
      Element value = product();
      while (true) {
        const char ch = peek();
        if (ch == '+') {
          ++pos;
          value = ring.add(value, product());
        } else if (ch == '-') {
          ++pos;
          value = ring.add(value, ring.neg(product()));
        } else {
          return value;
        }
      }
    }

    Element product() {
      Element value = signed_power();
      while (true) {
        const char ch = peek();
        if (ch == '*' && !(pos + 1 < text.size() && text[pos + 1] == '*')) {
          ++pos;
          value = ring.mul(value, signed_power());
        } else if (starts_factor()) {
          value = ring.mul(value, signed_power());
        } else {
          return value;
        }
      }
    }

    Element signed_power() {
      const char ch = peek();
      if (ch == '-') {
        ++pos;
        return ring.neg(signed_power());
      }
      if (ch == '+') {
        ++pos;
        return signed_power();
      }
      return power();
    }

    Element power() {
      Element base = primary();
      skip_space();
      bool has_exponent = false;
      if (pos < text.size() && text[pos] == '^') {
        pos += 1;
        has_exponent = true;
      } else if (pos + 1 < text.size() && text[pos] == '*' && text[pos + 1] == '*') {
        pos += 2;
        has_exponent = true;
      }
      if (!has_exponent) return base;
      skip_space();
      const std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (start == pos) fail("expected a non-negative integer exponent");
      const unsigned long e = std::stoul(std::string(text.substr(start, pos - start)));
      Element out = ring.one();
      for (unsigned long k = 0; k < e; ++k) out = ring.mul(out, base);
      return out;
    }

    Element primary() {
      const char ch = peek();
      if (ch == '(') {
        ++pos;
        Element inner = expression();
        if (peek() != ')') fail("expected ')'");
        ++pos;
        return inner;
      }
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        const std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos + 1 < text.size() && text[pos] == '/' && std::isdigit(static_cast<unsigned char>(text[pos + 1]))) {
          ++pos;
          while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        }
        const std::string literal(text.substr(start, pos - start));
        try {
          return ring.constant(ring.coeff_.parse(literal));
        } catch (const DomainError& e) {
          pos = start;
          fail(e.what());
        }
      }
      if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
        const std::size_t start = pos;
        while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) ++pos;
        const std::string_view ident = text.substr(start, pos - start);
        for (std::size_t k = 0; k < ring.variables_.size(); ++k) {
          if (ring.variables_[k] == ident) return ring.variable(k);
        }
        pos = start;
        fail("unknown variable '" + std::string(ident) + "'");
      }
      if (ch == '\0') fail("unexpected end of input");
      fail(std::string("unexpected '") + ch + "'");
    }
  };

  Coeff coeff_;
  std::vector<std::string> variables_;
  TermOrder order_;
};

}  // namespace rr
