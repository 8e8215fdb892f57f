#pragma once

// Exhaustive enumeration of ECH generators in the null homology class.

#include <vector>

#include "pqech/bundle.hpp"

namespace pqech {

struct GradedGenerator {
  OrbitSet orbit_set;
  Int grading = 0;
  ExactAction action;
  Int degree = 0;  ///< M / |e|

  friend bool operator==(const GradedGenerator&, const GradedGenerator&) = default;
};

/// Canonical output order: action ascending, then tie_break_less.
bool canonical_less(const GradedGenerator& a, const GradedGenerator& b);

/// Largest degree d at which a null-class generator can have the given
/// grading. At degree d every grading is at least d^2|e| + d chi - d|e|
/// (all multiplicity on e-), and that lower bound eventually grows past
/// any target, so every solution has d <= this value.
Int max_degree_for_grading(const PrequantizationBundle& bundle, Int target_grading);

/// Every null-class ECH generator with the given grading, in canonical order.
/// Throws InputError for a negative or odd target.
std::vector<GradedGenerator> enumerate_by_grading(const PrequantizationBundle& bundle, Int target_grading,
                                                  const MorseProfile& profile);
std::vector<GradedGenerator> enumerate_by_grading(const PrequantizationBundle& bundle, Int target_grading);

/// Every null-class ECH generator with action strictly below `limit`,
/// ascending. Gradings here may be odd (odd number of hyperbolic orbits).
std::vector<GradedGenerator> enumerate_by_action(const PrequantizationBundle& bundle, const MorseProfile& profile,
                                                 const ExactAction& limit);

/// The generator e-^{m_minus} e+^{m_plus} of grading 2k over the sphere.
struct SpherePair {
  Int m_minus = 0;
  Int m_plus = 0;
  Int degree = 0;
  friend bool operator==(const SpherePair&, const SpherePair&) = default;
};

/// Solves m- + m+ = d|e|, 2k = 2d + d^2|e| + m+ - m- by scanning every
/// admissible d. Throws InvariantError unless exactly one solution exists.
SpherePair sphere_pair_for_k(Int abs_e, Int k);

}  // namespace pqech
