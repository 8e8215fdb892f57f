#include "pqech/obstruction.hpp"

#include <algorithm>

#include "pqech/spectrum.hpp"

namespace pqech {

namespace {

void require_positive(const Rational& r, const char* what) {
  if (!(r > Rational(0))) throw InputError(std::string(what) + " must be positive, got " + r.str());
}

void require_k_max(Int k_max) {
  if (k_max < 0) throw InputError("k_max must be nonnegative");
}

}  // namespace

CapacitySequence ball_capacities(const Rational& a, Int k_max) {
  require_positive(a, "ball size");
  require_k_max(k_max);
  CapacitySequence seq;
  seq.label = "ball(" + a.str() + ")";
  seq.values.reserve(static_cast<std::size_t>(k_max) + 1);
  // Block d occupies the d + 1 indices starting at d(d+1)/2.
  for (Int d = 0; static_cast<Int>(seq.values.size()) <= k_max; ++d) {
    const Rational value = Rational(d) * a;
    for (Int i = 0; i <= d && static_cast<Int>(seq.values.size()) <= k_max; ++i) seq.values.push_back(value);
  }
  return seq;
}

CapacitySequence ellipsoid_capacities(const Rational& a, const Rational& b, Int k_max) {
  require_positive(a, "ellipsoid axis a");
  require_positive(b, "ellipsoid axis b");
  require_k_max(k_max);
  const auto needed = static_cast<std::size_t>(k_max) + 1;
  // Every value <= cutoff is collected, so once at least `needed` values are
  // in hand the smallest `needed` of them are the true prefix.
  Rational cutoff = std::max(a, b);
  std::vector<Rational> values;
  for (;;) {
    values.clear();
    const Int m_cap = (cutoff / a).ceil();
    const Int n_cap = (cutoff / b).ceil();
    for (Int m = 0; m <= m_cap; ++m) {
      for (Int n = 0; n <= n_cap; ++n) {
        Rational v = Rational(m) * a + Rational(n) * b;
        if (v <= cutoff) values.push_back(v);
      }
    }
    if (values.size() >= needed) break;
    cutoff = cutoff * Rational(2);
  }
  std::sort(values.begin(), values.end());
  values.resize(needed);
  return {std::move(values), "ellipsoid(" + a.str() + "," + b.str() + ")"};
}

ObstructionResult obstructs_embedding(const CapacitySequence& source, const CapacitySequence& target) {
  if (source.values.size() != target.values.size()) {
    throw InputError("capacity sequences differ in length (" + std::to_string(source.values.size()) + " vs " +
                     std::to_string(target.values.size()) + ")");
  }
  for (std::size_t k = 0; k < source.values.size(); ++k) {
    if (source.values[k] > target.values[k]) return {true, static_cast<Int>(k)};
  }
  return {};
}

GromovReport gromov_width_report(const PrequantizationBundle& bundle) {
  GromovReport report;
  const Int abs_e = bundle.abs_e();
  if (bundle.genus() == 0) {
    report.capacity_c1 = capacity_sphere(abs_e, 1);
  } else if (bundle.genus() == 1) {
    const CapacityResult c1 = capacity_torus_bounds(abs_e, 1);
    if (abs_e >= 2) {
      if (!c1.exact) throw InvariantError("torus c_1 is not exact for |e| >= 2");
      report.capacity_c1 = c1.lower;
    }
  } else {
    report.genus_in_scope = false;
    return report;
  }
  report.best_bound = report.capacity_c1 ? std::min(report.universal_bound, *report.capacity_c1) : report.universal_bound;
  return report;
}

}  // namespace pqech
