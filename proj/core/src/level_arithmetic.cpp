#include "motive/level_arithmetic.hpp"

#include <stdexcept>

#include "motive/errors.hpp"
#include "motive/exact_math.hpp"

namespace motive {

namespace {

Rational cusp_count_exact(long level) {
  Rational c = Rational(level * level, 2);
  long n = level;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    c *= Rational(p * p - 1, p * p);
  }
  if (n > 1) c *= Rational(n * n - 1, n * n);
  return c;
}

long checked_integer(const Rational& r, const char* what) {
  if (!r.is_integer()) throw std::logic_error(std::string(what) + " is not an integer: " + r.to_string());
  return r.to_long();
}

}  // namespace

long cusp_count(long level) {
  require_level(level);
  return checked_integer(cusp_count_exact(level), "cusp count");
}

long cusp_form_dimension(const LevelInvariants& inv, long weight) {
  Rational d = Rational(weight - 1) * Rational(inv.genus - 1) + Rational(weight - 2) * Rational(inv.cusp_count, 2);
  return checked_integer(d, "cusp form dimension");
}

LevelInvariants level_invariants(long level) {
  require_level(level);
  LevelInvariants inv;
  inv.level = level;
  inv.cusp_count = cusp_count(level);
  inv.euler_index = level * inv.cusp_count;
  Rational g = Rational(1) + Rational(inv.euler_index * (level - 6), 12 * level);
  inv.genus = checked_integer(g, "genus");
  inv.s3 = cusp_form_dimension(inv, 3);
  inv.s4 = cusp_form_dimension(inv, 4);
  if (inv.genus < 0 || inv.s3 < 0 || inv.s4 < 0) throw std::logic_error("negative level invariant");
  return inv;
}

long binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

long local_multiplicity(long q, long r) {
  if (q < 0 || q > 4 || r < 0 || r > 2) return 0;
  if ((q - r) % 2 != 0) return 0;
  long a = (q - r) / 2;
  long b = (q + r) / 2;
  return binomial(2, a) * binomial(2, b) - binomial(2, a - 1) * binomial(2, b + 1);
}

}  // namespace motive
