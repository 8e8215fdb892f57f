#pragma once

// Capacity sequences of model domains, and the embedding obstruction they
// give: if X embeds symplectically into Y then c_k(X) <= c_k(Y) for every k.

#include <optional>
#include <string>
#include <vector>

#include "pqech/bundle.hpp"
#include "pqech/rational.hpp"

namespace pqech {

struct CapacitySequence {
  std::vector<Rational> values;  ///< values[k] = c_k, starting at k = 0
  std::string label;
};

/// c_k(B(a)) = d a for d(d+1)/2 <= k < (d+1)(d+2)/2, k = 0..k_max.
CapacitySequence ball_capacities(const Rational& a, Int k_max);

/// First k_max + 1 entries of the sorted multiset {m a + n b : m, n >= 0}.
CapacitySequence ellipsoid_capacities(const Rational& a, const Rational& b, Int k_max);

struct ObstructionResult {
  bool obstructed = false;
  std::optional<Int> first_violation;  ///< minimal k with source[k] > target[k]
};

/// Throws InputError when the sequences differ in length.
ObstructionResult obstructs_embedding(const CapacitySequence& source, const CapacitySequence& target);

struct GromovReport {
  Int universal_bound = 1;           ///< c_Gr(DE) <= 1, any genus with negative e
  std::optional<Int> capacity_c1;    ///< c_1 = 2|e| where it is known exactly
  std::optional<Int> best_bound;     ///< min of the available bounds
  bool genus_in_scope = true;        ///< false for genus >= 2
};

/// Gromov width bounds for the unit disk bundle. c_1 is known for the sphere
/// and for the torus with |e| >= 2. For genus >= 2 only the universal bound
/// is reported and genus_in_scope is false; no best bound is asserted.
GromovReport gromov_width_report(const PrequantizationBundle& bundle);

}  // namespace pqech
