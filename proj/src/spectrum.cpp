#include "pqech/spectrum.hpp"

#include <algorithm>
#include <string>

#include "pqech/generators.hpp"

namespace pqech {

using arith::add;
using arith::mul;
using arith::sub;

namespace {

void require_abs_e(Int abs_e) {
  if (abs_e < 1) throw InputError("|e| must be positive, got " + std::to_string(abs_e));
}

std::string at(Int abs_e, Int k) { return " (|e|=" + std::to_string(abs_e) + ", k=" + std::to_string(k) + ")"; }

}  // namespace

Int capacity_sphere(Int abs_e, Int k) {
  require_abs_e(abs_e);
  if (k < 0) throw InputError("k must be nonnegative");
  const Int two_k = mul(2, k);
  std::optional<Int> found;
  for (Int d = 0;; ++d) {
    const Int lo = add(mul(2, d), mul(d, d - 1, abs_e));
    if (lo > two_k) break;
    const Int hi = add(mul(2, d), mul(d, d + 1, abs_e));
    if (two_k <= hi) {
      if (found) throw InvariantError("two degrees satisfy the sphere capacity inequality" + at(abs_e, k));
      found = d;
    }
  }
  if (!found) throw InvariantError("no degree satisfies the sphere capacity inequality" + at(abs_e, k));
  return mul(2, *found, abs_e);
}

std::optional<SphereState> sphere_u_step(Int abs_e, SphereState gen) {
  require_abs_e(abs_e);
  if (gen.m_minus < 0 || gen.m_plus < 0) throw InputError("multiplicities must be nonnegative");
  if (gen.m_minus == 0 && gen.m_plus == 0) throw InputError("U is not applied to the empty orbit set");
  if (arith::mod(add(gen.m_minus, gen.m_plus), abs_e) != 0) {
    throw InputError("m- + m+ must be divisible by |e|");
  }
  if (gen.m_plus >= 1) return SphereState{add(gen.m_minus, 1), gen.m_plus - 1};
  const Int rest = gen.m_minus - abs_e;
  if (rest == 0) return std::nullopt;
  return SphereState{0, rest};
}

Int capacity_sphere_via_u(Int abs_e, Int k) {
  require_abs_e(abs_e);
  const SpherePair start = sphere_pair_for_k(abs_e, k);
  std::optional<SphereState> state = SphereState{start.m_minus, start.m_plus};
  if (k == 0) {
    if (start.m_minus != 0 || start.m_plus != 0) throw InvariantError("grading-0 sphere generator is not empty");
    return 0;
  }
  for (Int step = 1; step <= k; ++step) {
    if (!state) throw InvariantError("U-orbit reached the empty set after " + std::to_string(step - 1) + " steps" + at(abs_e, k));
    state = sphere_u_step(abs_e, *state);
  }
  if (state) throw InvariantError("U-orbit did not reach the empty set in k steps" + at(abs_e, k));
  return mul(2, add(start.m_minus, start.m_plus));
}

bool is_torus_witness(Int abs_e, Int k, const TorusWitness& w) {
  if (w.d < 0 || w.m_plus < 0 || w.m_minus < 0) return false;
  if (w.m1 < 0 || w.m1 > 1 || w.m2 < 0 || w.m2 > 1) return false;
  return add(mul(w.d, w.d, abs_e), w.m_plus, arith::neg(w.m_minus)) == mul(2, k) &&
         add(w.m_plus, w.m1, w.m2, w.m_minus) == mul(w.d, abs_e);
}

std::optional<TorusWitness> torus_witness(Int abs_e, Int k, Int d) {
  require_abs_e(abs_e);
  if (d < 0) return std::nullopt;
  const Int m = mul(d, abs_e);
  const Int s = sub(mul(2, k), mul(d, d, abs_e));
  const Int abs_s = s < 0 ? arith::neg(s) : s;
  for (Int h = 0; h <= 2 && h <= m; ++h) {
    const Int slack = m - h - abs_s;
    if (slack < 0 || slack % 2 != 0) continue;
    const Int t = slack / 2;
    TorusWitness w{d, std::max<Int>(s, 0) + t, h >= 1 ? 1 : 0, h == 2 ? 1 : 0, std::max<Int>(-s, 0) + t};
    return w;
  }
  return std::nullopt;
}

bool torus_window_contains(Int abs_e, Int k, Int d) {
  const Int two_k = mul(2, k);
  return mul(d, d - 1, abs_e) <= two_k && two_k <= mul(d, d + 1, abs_e);
}

TorusDegreeBounds torus_d_bounds(Int abs_e, Int k) {
  require_abs_e(abs_e);
  if (k < 1) throw InputError("torus capacities need k >= 1, got " + std::to_string(k));
  // A feasible d satisfies d(d-1)|e| <= 2k <= d(d+1)|e|, which pins it to
  // {r, r+1} with r = isqrt(floor(2k/|e|)); the scan is one wider each side.
  const Int r = arith::isqrt(mul(2, k) / abs_e);
  std::optional<TorusWitness> lowest;
  std::optional<TorusWitness> highest;
  for (Int d = std::max<Int>(0, r - 1); d <= r + 2; ++d) {
    if (auto w = torus_witness(abs_e, k, d)) {
      if (!is_torus_witness(abs_e, k, *w)) throw InvariantError("constructed torus witness fails verification");
      if (!lowest) lowest = w;
      highest = w;
    }
  }
  if (!lowest) throw InvariantError("no feasible degree for the torus system" + at(abs_e, k));
  TorusDegreeBounds out{lowest->d, highest->d, *lowest, *highest};
  if (out.d_plus - out.d_minus > 1) throw InvariantError("torus degree bounds differ by more than one" + at(abs_e, k));
  return out;
}

CapacityResult capacity_torus_bounds(Int abs_e, Int k) {
  const TorusDegreeBounds b = torus_d_bounds(abs_e, k);
  CapacityResult out;
  out.lower = mul(2, b.d_minus, abs_e);
  out.upper = mul(2, b.d_plus, abs_e);
  out.exact = b.d_minus == b.d_plus;
  out.witness_lower = b.witness_minus;
  out.witness_upper = b.witness_plus;
  return out;
}

CapacityResult capacity_sphere_result(Int abs_e, Int k) {
  const SpherePair p = sphere_pair_for_k(abs_e, k);
  const Int c = capacity_sphere(abs_e, k);
  if (c != mul(2, p.degree, abs_e)) throw InvariantError("sphere generator degree disagrees with capacity" + at(abs_e, k));
  TorusWitness w{p.degree, p.m_plus, 0, 0, p.m_minus};
  return {c, c, true, w, w};
}

TriangularIndexError::TriangularIndexError(Int k, Int n)
    : InputError("closed form excludes k = " + std::to_string(k) + " = n(n-1)/2 with n = " + std::to_string(n)),
      n_(n) {}

std::optional<Int> triangular_root(Int k) {
  if (k < 0) return std::nullopt;
  const Int disc = add(mul(8, k), 1);
  const Int s = arith::isqrt(disc);
  if (mul(s, s) != disc) return std::nullopt;
  return (1 + s) / 2;  // disc is odd, so s is odd
}

Int capacity_torus_closed_form(Int k) {
  if (k < 1) throw InputError("torus capacities need k >= 1, got " + std::to_string(k));
  if (auto n = triangular_root(k)) throw TriangularIndexError(k, *n);
  const Int two_k = mul(2, k);
  Int d = arith::isqrt(two_k) + 1;
  while (mul(d, d - 1) > two_k) --d;
  while (mul(d + 1, d) <= two_k) ++d;
  return mul(2, d);
}

}  // namespace pqech
