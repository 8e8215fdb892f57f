#include "pqech/arith.hpp"

#include <cmath>
#include <numeric>

namespace pqech::arith {

__extension__ using Wide = __int128;

Int isqrt(Int n) {
  if (n < 0) throw InputError("isqrt of a negative number");
  // Start from the floating estimate and correct; the corrections make the
  // result exact even where the double rounds.
  auto r = static_cast<Int>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && static_cast<Wide>(r) * r > n) --r;
  while (static_cast<Wide>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

Int floor_div(Int a, Int b) {
  if (b == 0) throw InputError("division by zero");
  if (b == -1) return neg(a);
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Int mod(Int a, Int m) {
  if (m <= 0) throw InputError("modulus must be positive");
  Int r = a % m;
  return r < 0 ? r + m : r;
}

Int gcd(Int a, Int b) {
  if (a == INT64_MIN || b == INT64_MIN) overflow("gcd");
  return std::gcd(a, b);
}

}  // namespace pqech::arith
