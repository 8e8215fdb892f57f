#pragma once

// Closed-form ECH and Fredholm indices for orbit sets in a prequantization
// bundle. A relative class is written Z_alpha + d[Sigma], where Z_alpha is
// the union of fiber disks over the orbits of alpha and d is the coefficient
// of the zero section. Everything here is exact; overflow throws.

#include <vector>

#include "pqech/bundle.hpp"

namespace pqech {

/// Ends of a holomorphic curve C in class Z_alpha + d[Sigma].
struct CurveEndData {
  Int genus_c = 0;     ///< genus of the curve
  Int h_ends = 0;      ///< ends at hyperbolic orbits
  Int eplus_ends = 0;  ///< ends at covers of e+
  Int total_multiplicity = 0;  ///< M of the asymptotic orbit set
  Int degree = 0;      ///< d
};

/// I(Z_alpha + d[Sigma]) = M + m+ - m- + 2dM + d^2 e + d e + d chi.
/// Negative d is accepted.
Int ech_index(const PrequantizationBundle& bundle, const OrbitSet& alpha, Int d);

/// Shift rule I(Z + d[Sigma]) = I(Z) + 2d Z.Sigma + I(d Sigma) with
/// Z.Sigma = M and I(d Sigma) = d chi + d e + d^2 e. Computed independently of
/// ech_index so the two can be cross-checked.
Int index_ambiguity(const PrequantizationBundle& bundle, const OrbitSet& alpha, Int z_alpha_index, Int d);

/// ind C = 2g(C) - 2 + h(C) + 2e+(C) + 2M + 2d chi + 2d e.
///
/// Throws InputError unless every count is nonnegative and
/// eplus_ends + h_ends <= M. M = 0 (a closed curve) is accepted since the
/// formula is total there, but it lies outside the punctured-curve setting
/// the formula comes from.
Int fredholm_index(const PrequantizationBundle& bundle, const CurveEndData& c);

/// 2I(C) - ind(C) = 2m+ - 2m- + 4dM - 2d^2|e| + 2 - 2g(C) - h(C) - 2e+(C),
/// evaluated directly. Requires c.total_multiplicity = M(alpha),
/// c.degree = d and c.h_ends = sum of hyperbolic multiplicities (simple
/// hyperbolic ends); throws InputError otherwise.
Int two_i_minus_ind(const PrequantizationBundle& bundle, const OrbitSet& alpha, Int d, const CurveEndData& c);

/// I(alpha, beta) for orbit sets in the same Z/|e| class, anchored at
/// d_beta = 0 and d_alpha = (M_alpha - M_beta)/|e|.
Int relative_index(const PrequantizationBundle& bundle, const OrbitSet& alpha, const OrbitSet& beta);

/// Absolute grading I(alpha, empty) = d^2|e| + m+ - m- + d chi, d = M/|e|.
/// Requires an ECH generator in the null class. Its parity equals the number
/// of hyperbolic orbits in alpha, so it is even on the sphere.
Int grading(const PrequantizationBundle& bundle, const OrbitSet& alpha);

enum class OrbitKind { PositiveElliptic, NegativeElliptic, PositiveHyperbolic };

/// Partition of total multiplicity m forced by the ECH partition conditions
/// for a curve with positive ends only. e+ is positive elliptic, e- is
/// negative elliptic and every h_i is positive hyperbolic.
std::vector<Int> partition_of(OrbitKind kind, Int m);

}  // namespace pqech
