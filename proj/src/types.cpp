#include "isel/types.hpp"

#include "isel/errors.hpp"

#include <cmath>

namespace isel {

Rational pow_abs(const Rational& base, int p) {
  if (p < 1) throw UsageError("norm order must be a positive integer");
  Rational a = base < 0 ? Rational(-base) : base;
  Rational r = 1;
  for (int i = 0; i < p; ++i) r *= a;
  return r;
}

Rational rational_from_double(double x) {
  if (!std::isfinite(x))
    throw UsageError("non-finite value has no exact rational form");
  if (x == 0.0) return Rational(0);
  int exp = 0;
  const double mant = std::frexp(x, &exp);   // x = mant * 2^exp, |mant| in [0.5, 1)
  const auto scaled = static_cast<long long>(std::ldexp(mant, 53));  // exact
  BigInt num = scaled;
  const int shift = 53 - exp;
  if (shift >= 0) return Rational(num, BigInt(1) << shift);
  return Rational(num << (-shift), BigInt(1));
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace isel
