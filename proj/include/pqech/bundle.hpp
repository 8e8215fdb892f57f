#pragma once

// Combinatorial model of a prequantization circle bundle after a Morse-Bott
// perturbation by a perfect Morse function H on the base. Below any action
// cutoff the Reeb orbits are covers of three kinds of fibers: e+ over the
// maximum of H, e- over the minimum, and h_1..h_2g over the saddles. An orbit
// set is just a multiplicity for each of those fibers.

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "pqech/arith.hpp"
#include "pqech/rational.hpp"

namespace pqech {

/// Circle bundle over a closed genus-g surface with Euler number e <= -1.
class PrequantizationBundle {
 public:
  /// Throws InputError unless genus >= 0 and euler <= -1.
  PrequantizationBundle(Int genus, Int euler);

  Int genus() const { return genus_; }
  Int euler() const { return euler_; }
  Int abs_e() const { return -euler_; }
  /// Euler characteristic of the base surface, 2 - 2g.
  Int chi() const { return 2 - 2 * genus_; }
  Int hyperbolic_count() const { return 2 * genus_; }

  friend bool operator==(const PrequantizationBundle&, const PrequantizationBundle&) = default;

 private:
  Int genus_;
  Int euler_;
};

/// Multiplicities over the alphabet {e+, h_1..h_2g, e-}.
class OrbitSet {
 public:
  OrbitSet() = default;
  /// Throws InputError on a negative multiplicity.
  OrbitSet(Int m_plus, std::vector<Int> m_hyp, Int m_minus);

  /// The empty orbit set for a base of the given genus.
  static OrbitSet empty(Int genus);
  /// Convenience for g = 0 bases, which have no hyperbolic orbits.
  static OrbitSet sphere(Int m_minus, Int m_plus) { return {m_plus, {}, m_minus}; }

  Int m_plus() const { return m_plus_; }
  Int m_minus() const { return m_minus_; }
  const std::vector<Int>& m_hyp() const { return m_hyp_; }
  Int hyperbolic_total() const;
  /// Total multiplicity M.
  Int total() const;
  bool is_empty() const { return total() == 0; }

  /// Componentwise union; both sets must have the same hyperbolic alphabet.
  friend OrbitSet operator+(const OrbitSet& a, const OrbitSet& b);
  friend bool operator==(const OrbitSet&, const OrbitSet&) = default;

  /// Renders in the orbit-set grammar, e.g. "e+^2 h1 e-^3"; "empty" for the
  /// empty set. Zero factors are omitted.
  std::string str() const;

  /// Parses "e+^a h1^b ... e-^c". Factors may appear in any order, a missing
  /// exponent means 1, omitted factors are 0, and "" or "empty" is the empty
  /// set. `genus` fixes the length of the hyperbolic list.
  static OrbitSet parse(std::string_view notation, Int genus);

 private:
  Int m_plus_ = 0;
  std::vector<Int> m_hyp_;
  Int m_minus_ = 0;
};

/// Values of the perturbing Morse function at its critical points.
class MorseProfile {
 public:
  /// Throws InputError unless h_min < every saddle < h_max.
  MorseProfile(Rational h_min, std::vector<Rational> h_saddle, Rational h_max);

  /// h_min = 0, every saddle = 1/2, h_max = 1.
  static MorseProfile standard(Int genus);

  const Rational& h_min() const { return h_min_; }
  const Rational& h_max() const { return h_max_; }
  const std::vector<Rational>& h_saddle() const { return h_saddle_; }

 private:
  Rational h_min_;
  std::vector<Rational> h_saddle_;
  Rational h_max_;
};

/// Action 2M + eps * correction in the eps -> 0+ limit. Ordering is
/// lexicographic, which is the true order for every small enough eps > 0.
struct ExactAction {
  Int leading = 0;
  Rational correction;

  friend bool operator==(const ExactAction&, const ExactAction&) = default;
  friend std::strong_ordering operator<=>(const ExactAction& a, const ExactAction& b) {
    if (auto c = a.leading <=> b.leading; c != 0) return c;
    return a.correction <=> b.correction;
  }
  friend ExactAction operator+(const ExactAction& a, const ExactAction& b) {
    return {arith::add(a.leading, b.leading), a.correction + b.correction};
  }
};

/// Class of an orbit set in the torsion summand Z/|e| of H_1.
struct GammaResidue {
  Int value = 0;
  friend bool operator==(const GammaResidue&, const GammaResidue&) = default;
};

GammaResidue gamma_class(const PrequantizationBundle& bundle, const OrbitSet& alpha);

/// Hyperbolic multiplicities must be 0 or 1; elliptic ones are unrestricted.
bool is_ech_generator(const OrbitSet& alpha);

/// Throws InputError if the hyperbolic alphabets differ in length.
ExactAction action_of(const OrbitSet& alpha, const MorseProfile& profile);

/// Tie-break among orbit sets of equal action: m- descending, then m+
/// ascending, then hyperbolic multiplicities lexicographically ascending.
bool tie_break_less(const OrbitSet& a, const OrbitSet& b);

/// Throws InputError if `alpha` does not fit `bundle`'s hyperbolic alphabet.
void check_fits(const PrequantizationBundle& bundle, const OrbitSet& alpha);

}  // namespace pqech
