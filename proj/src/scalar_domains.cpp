#include "rr/scalar_domains.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>
#include <string>

#include <boost/integer/mod_inverse.hpp>

#include "rr/errors.hpp"

namespace rr {

namespace {

std::string trimmed(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  return std::string(text);
}

mpz_class parse_integer(std::string_view text) {
  std::string s = trimmed(text);
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  const std::size_t digits_from = (!s.empty() && s.front() == '-') ? 1 : 0;
  if (s.size() == digits_from ||
      !std::all_of(s.begin() + static_cast<std::ptrdiff_t>(digits_from), s.end(),
                   [](unsigned char ch) { return std::isdigit(ch) != 0; })) {
    throw DomainError("not an integer: '" + std::string(text) + "'");
  }
  return mpz_class(s, 10);
}

}  // namespace

// ---- RationalField ----

std::optional<mpq_class> RationalField::find_multiplier(const mpq_class& a, const mpq_class& c,
                                                        std::size_t /*index*/) const {
  if (sgn(a) == 0 || sgn(c) == 0) return std::nullopt;
  mpq_class m = a / c;
  m.canonicalize();
  return m;
}

std::vector<mpq_class> RationalField::mntcrs(const mpq_class& c1, std::size_t, const mpq_class& c2,
                                             std::size_t) const {
  if (sgn(c1) == 0 || sgn(c2) == 0) return {};
  return {mpq_class(1)};
}

mpq_class RationalField::sample(std::mt19937_64& rng) const {
  std::uniform_int_distribution<long> num(-50, 50);
  std::uniform_int_distribution<long> den(1, 20);
  mpq_class q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

mpq_class RationalField::parse(std::string_view text) const {
  const std::string s = trimmed(text);
  const auto slash = s.find('/');
  if (slash == std::string::npos) return mpq_class(parse_integer(s));
  const mpz_class p = parse_integer(std::string_view(s).substr(0, slash));
  const mpz_class q = parse_integer(std::string_view(s).substr(slash + 1));
  if (q == 0) throw DomainError("zero denominator in '" + s + "'");
  mpq_class out(p, q);
  out.canonicalize();
  return out;
}

// ---- IntegerRing ----

bool IntegerRing::less(const mpz_class& a, const mpz_class& b) const {
  const int c = mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t());
  if (c != 0) return c < 0;
  return a < b;
}

std::optional<mpz_class> IntegerRing::find_multiplier(const mpz_class& a, const mpz_class& c,
                                                      std::size_t /*index*/) const {
  if (c == 0) return std::nullopt;
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), c.get_mpz_t());
  const mpz_class r0 = a - q * c;
  const mpz_class r1 = r0 - c;
  const bool take_next = less(r1, r0);
  const mpz_class& best = take_next ? r1 : r0;
  if (!less(best, a)) return std::nullopt;
  return take_next ? mpz_class(q + 1) : q;
}

std::vector<mpz_class> IntegerRing::mntcrs(const mpz_class& c1, std::size_t, const mpz_class& c2,
                                           std::size_t) const {
  if (c1 == 0 || c2 == 0) return {};
  const mpz_class m = mpz_cmpabs(c1.get_mpz_t(), c2.get_mpz_t()) >= 0 ? mpz_class(abs(c1)) : mpz_class(abs(c2));
  mpz_class half;
  mpz_cdiv_q_ui(half.get_mpz_t(), m.get_mpz_t(), 2);
  mpz_class l;
  mpz_lcm(l.get_mpz_t(), c1.get_mpz_t(), c2.get_mpz_t());
  std::vector<mpz_class> out;
  for (const mpz_class& z : {half, m, l}) {
    if (std::find(out.begin(), out.end(), z) == out.end()) out.push_back(z);
  }
  return out;
}

mpz_class IntegerRing::sample(std::mt19937_64& rng) const {
  std::uniform_int_distribution<int> coin(0, 1);
  if (coin(rng) != 0) {
    std::uniform_int_distribution<long> small(-20, 20);
    return small(rng);
  }
  std::uniform_int_distribution<long> wide(-1'000'000, 1'000'000);
  return wide(rng);
}

mpz_class IntegerRing::parse(std::string_view text) const { return parse_integer(text); }

mpz_class normalize_sign(const mpz_class& a) { return abs(a); }

// ---- IntegerModRing ----

IntegerModRing::IntegerModRing(std::int64_t modulus) {
  if (modulus <= 0) throw DomainError("modulus must be positive");
  if (modulus > (std::int64_t{1} << 62)) throw DomainError("modulus too large");
  n_ = static_cast<std::uint64_t>(modulus);
}

Residue IntegerModRing::mul(Residue a, Residue b) const {
  const auto wide = static_cast<unsigned __int128>(a.value) * b.value;
  return {static_cast<std::uint64_t>(wide % n_)};
}

std::optional<Residue> IntegerModRing::find_multiplier(Residue a, Residue c, std::size_t index) const {
  const std::uint64_t d = std::gcd(c.value, n_);
  const std::uint64_t r = a.value % d;
  if (r == a.value) return std::nullopt;
  const std::uint64_t reduced_n = n_ / d;
  std::uint64_t m = 0;
  if (reduced_n > 1) {
    const auto inv = boost::integer::mod_inverse<std::int64_t>(static_cast<std::int64_t>((c.value / d) % reduced_n),
                                                              static_cast<std::int64_t>(reduced_n));
    const auto t = ((a.value - r) / d) % reduced_n;
    m = static_cast<std::uint64_t>((static_cast<unsigned __int128>(t) * static_cast<std::uint64_t>(inv)) % reduced_n);
  }
  if (index == 1) m = (m + reduced_n) % n_;
  return Residue{m};
}

std::vector<Residue> IntegerModRing::mntcrs(Residue c1, std::size_t, Residue c2, std::size_t) const {
  if (c1.value == 0 || c2.value == 0) return {};
  const std::uint64_t d1 = std::gcd(c1.value, n_);
  const std::uint64_t d2 = std::gcd(c2.value, n_);
  std::vector<Residue> out{{std::max(d1, d2)}};
  const std::uint64_t l = std::lcm(d1, d2);
  if (l < n_ && l != out.front().value) out.push_back({l});
  return out;
}

std::optional<std::vector<Residue>> IntegerModRing::carrier() const {
  std::vector<Residue> out;
  out.reserve(n_);
  for (std::uint64_t i = 0; i < n_; ++i) out.push_back({i});
  return out;
}

Residue IntegerModRing::sample(std::mt19937_64& rng) const {
  std::uniform_int_distribution<std::uint64_t> dist(0, n_ - 1);
  return {dist(rng)};
}

Residue IntegerModRing::from_integer(const mpz_class& value) const {
  mpz_class r;
  const mpz_class n(std::to_string(n_), 10);
  mpz_fdiv_r(r.get_mpz_t(), value.get_mpz_t(), n.get_mpz_t());
  return {std::stoull(r.get_str())};
}

Residue IntegerModRing::parse(std::string_view text) const { return from_integer(parse_integer(text)); }

}  // namespace rr
