#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "motive/certificate.hpp"
#include "motive/errors.hpp"
#include "motive/exact_math.hpp"

namespace motive {

// Finite Q-linear combination of atoms in canonical (ordered) form.
// Atoms must be totally ordered and expose `std::uint64_t hash() const`.
template <class Atom>
class FormalSum {
 public:
  explicit FormalSum(int level = 3) : level_(level) {}

  static FormalSum of(int level, const Atom& a, Rational c = 1) {
    FormalSum s(level);
    s.add(a, c);
    return s;
  }

  int level() const { return level_; }
  const std::map<Atom, Rational>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  Rational coefficient(const Atom& a) const {
    auto it = terms_.find(a);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add(const Atom& a, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(a, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  FormalSum& operator+=(const FormalSum& o) {
    require_same_level(level_, o.level_);
    for (const auto& [a, c] : o.terms_) add(a, c);
    return *this;
  }
  FormalSum& operator-=(const FormalSum& o) {
    require_same_level(level_, o.level_);
    for (const auto& [a, c] : o.terms_) add(a, -c);
    return *this;
  }
  friend FormalSum operator+(FormalSum a, const FormalSum& b) { return a += b; }
  friend FormalSum operator-(FormalSum a, const FormalSum& b) { return a -= b; }
  FormalSum operator-() const { return Rational(-1) * *this; }
  friend FormalSum operator*(const Rational& k, FormalSum a) {
    if (k.is_zero()) return FormalSum(a.level_);
    for (auto& [atom, c] : a.terms_) c *= k;
    return a;
  }
  friend bool operator==(const FormalSum& a, const FormalSum& b) {
    return a.level_ == b.level_ && a.terms_ == b.terms_;
  }

  // Canonical rendering; `name` maps an atom to its text form.
  template <class Namer>
  std::string render(Namer&& name) const {
    std::vector<std::pair<std::string, std::string>> parts;
    parts.reserve(terms_.size());
    for (const auto& [a, c] : terms_) parts.emplace_back(c.to_string(), name(a));
    return render_terms(parts);
  }

 private:
  int level_;
  std::map<Atom, Rational> terms_;
};

namespace detail {

__extension__ typedef __int128 i128;
__extension__ typedef unsigned __int128 u128;

template <class Atom>
struct AtomHash {
  std::size_t operator()(const Atom& a) const {
    std::uint64_t h = a.hash();
    h ^= h >> 33;
    h *= 0xff51afd7ed558ccdULL;
    h ^= h >> 33;
    return static_cast<std::size_t>(h);
  }
};

inline unsigned bit_length(const mpz_class& z) { return sgn(z) == 0 ? 0 : static_cast<unsigned>(mpz_sizeinbase(z.get_mpz_t(), 2)); }

inline mpz_class from_i128(i128 v) {
  bool neg = v < 0;
  u128 u = neg ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v);
  mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
  mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

template <class Atom>
struct Scaled {
  mpz_class denominator = 1;
  std::vector<std::pair<Atom, std::int64_t>> small;
  std::vector<std::pair<Atom, mpz_class>> big;
  unsigned max_bits = 0;
  bool fits = true;
};

template <class Atom>
Scaled<Atom> scale_to_integers(const FormalSum<Atom>& x) {
  Scaled<Atom> s;
  for (const auto& [a, c] : x.terms())
    mpz_lcm(s.denominator.get_mpz_t(), s.denominator.get_mpz_t(), c.raw().get_den_mpz_t());
  s.big.reserve(x.size());
  for (const auto& [a, c] : x.terms()) {
    mpz_class v = c.raw().get_num() * (s.denominator / c.raw().get_den());
    s.max_bits = std::max(s.max_bits, bit_length(v));
    s.big.emplace_back(a, std::move(v));
  }
  s.fits = s.max_bits <= 62;
  if (s.fits) {
    s.small.reserve(s.big.size());
    for (auto& [a, v] : s.big) s.small.emplace_back(a, v.get_si());
  }
  return s;
}

}  // namespace detail

// Bilinear extension of an atom-level product. `rule(after, before, emit)`
// calls emit(atom, k) with small integer k for each output term.
// Coefficients are accumulated as scaled integers when the bound allows,
// otherwise with GMP rationals; both paths are exact.
template <class Atom, class Rule>
FormalSum<Atom> compose_bilinear(const FormalSum<Atom>& after, const FormalSum<Atom>& before, Rule&& rule,
                                 unsigned max_rule_bits = 8, unsigned max_fanout_bits = 8) {
  require_same_level(after.level(), before.level());
  FormalSum<Atom> out(after.level());
  if (after.is_zero() || before.is_zero()) return out;

  auto sa = detail::scale_to_integers(after);
  auto sb = detail::scale_to_integers(before);
  unsigned pair_bits = detail::bit_length(mpz_class(static_cast<unsigned long>(after.size()))) +
                       detail::bit_length(mpz_class(static_cast<unsigned long>(before.size())));
  bool fast = sa.fits && sb.fits && sa.max_bits + sb.max_bits + pair_bits + max_rule_bits + max_fanout_bits < 120;
  mpz_class denom = sa.denominator * sb.denominator;

  if (fast) {
    std::unordered_map<Atom, detail::i128, detail::AtomHash<Atom>> acc;
    acc.reserve(std::max(after.size(), before.size()) * 2);
    for (const auto& [x, cx] : sa.small)
      for (const auto& [y, cy] : sb.small) {
        detail::i128 p = static_cast<detail::i128>(cx) * cy;
        rule(x, y, [&](const Atom& z, long k) { acc[z] += p * k; });
      }
    for (const auto& [z, v] : acc) {
      if (v == 0) continue;
      out.add(z, Rational(detail::from_i128(v), denom));
    }
    return out;
  }

  std::map<Atom, mpz_class> acc;
  for (const auto& [x, cx] : sa.big)
    for (const auto& [y, cy] : sb.big) {
      mpz_class p = cx * cy;
      rule(x, y, [&](const Atom& z, long k) { acc[z] += p * k; });
    }
  for (const auto& [z, v] : acc)
    if (v != 0) out.add(z, Rational(v, denom));
  return out;
}

}  // namespace motive
