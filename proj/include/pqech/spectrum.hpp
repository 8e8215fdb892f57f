#pragma once

// ECH capacities of prequantization bundles over the sphere and the torus,
// reported in the unperturbed limit (pure integers 2d|e|).

#include <optional>

#include "pqech/arith.hpp"

namespace pqech {

/// c_k over the sphere: 2d|e| for the unique d >= 0 with
/// 2d + d|e|(d-1) <= 2k <= 2d + d|e|(d+1). The whole admissible d-range is
/// scanned; InvariantError if the solution is not unique.
Int capacity_sphere(Int abs_e, Int k);

/// Sphere generator e-^{m_minus} e+^{m_plus}.
struct SphereState {
  Int m_minus = 0;
  Int m_plus = 0;
  friend bool operator==(const SphereState&, const SphereState&) = default;
};

/// One application of the sphere U map:
///   U(e+^i e-^j) = e+^{i-1} e-^{j+1}  for i >= 1,
///   U(e-^j)      = e+^{j-|e|}.
/// std::nullopt stands for the empty orbit set. The input must be a
/// null-class generator other than the empty set.
std::optional<SphereState> sphere_u_step(Int abs_e, SphereState gen);

/// Independent route to capacity_sphere: take the unique grading-2k
/// generator, apply the U map k times, require that it lands on the empty
/// set exactly at step k, and return the generator's action 2M.
Int capacity_sphere_via_u(Int abs_e, Int k);

/// A solution (d, m+, m1, m2, m-) of
///   d^2|e| + m+ - m- = 2k,  m+ + m1 + m2 + m- = d|e|,  m1, m2 in {0, 1}.
struct TorusWitness {
  Int d = 0;
  Int m_plus = 0;
  Int m1 = 0;
  Int m2 = 0;
  Int m_minus = 0;
  friend bool operator==(const TorusWitness&, const TorusWitness&) = default;
};

/// True iff `w` satisfies the torus system for (abs_e, k) with nonnegative
/// entries.
bool is_torus_witness(Int abs_e, Int k, const TorusWitness& w);

/// Direct solver for the torus system at a fixed degree d; returns a witness
/// or nullopt when none exists.
std::optional<TorusWitness> torus_witness(Int abs_e, Int k, Int d);

/// The closed window test d(d-1)|e| <= 2k <= d(d+1)|e|.
bool torus_window_contains(Int abs_e, Int k, Int d);

struct TorusDegreeBounds {
  Int d_minus = 0;
  Int d_plus = 0;
  TorusWitness witness_minus;
  TorusWitness witness_plus;
};

/// Minimal and maximal feasible degree for the torus system, each with a
/// witness. Requires k >= 1. InvariantError if no degree is feasible or the
/// two differ by more than one.
TorusDegreeBounds torus_d_bounds(Int abs_e, Int k);

struct CapacityResult {
  Int lower = 0;
  Int upper = 0;
  bool exact = false;
  TorusWitness witness_lower;
  TorusWitness witness_upper;
};

/// 2 d_- |e| <= c_k <= 2 d_+ |e| over the torus.
CapacityResult capacity_torus_bounds(Int abs_e, Int k);

/// Sphere capacity packaged like the torus result (exact, shared witness
/// with m1 = m2 = 0).
CapacityResult capacity_sphere_result(Int abs_e, Int k);

/// Thrown by capacity_torus_closed_form when k = n(n-1)/2.
class TriangularIndexError : public InputError {
 public:
  TriangularIndexError(Int k, Int n);
  Int n() const { return n_; }

 private:
  Int n_;
};

/// c_k = 2 floor(sqrt(2k + 1/4) + 1/2) for the torus with |e| = 1, evaluated
/// as 2 * max{d : d(d-1) <= 2k} in integers. Requires k >= 1 and k not of
/// the form n(n-1)/2.
Int capacity_torus_closed_form(Int k);

/// n with n(n-1)/2 = k, if any (n >= 1).
std::optional<Int> triangular_root(Int k);

}  // namespace pqech
