#include "pqech/index.hpp"

namespace pqech {

using arith::add;
using arith::mul;
using arith::sub;

Int ech_index(const PrequantizationBundle& bundle, const OrbitSet& alpha, Int d) {
  check_fits(bundle, alpha);
  const Int m = alpha.total();
  const Int e = bundle.euler();
  return add(m, alpha.m_plus(), arith::neg(alpha.m_minus()), mul(2, d, m), mul(d, d, e), mul(d, e),
             mul(d, bundle.chi()));
}

Int index_ambiguity(const PrequantizationBundle& bundle, const OrbitSet& alpha, Int z_alpha_index, Int d) {
  check_fits(bundle, alpha);
  const Int intersection = alpha.total();  // Z_alpha . Sigma
  const Int e = bundle.euler();
  const Int self_index = add(mul(d, bundle.chi()), mul(d, e), mul(d, d, e));
  return add(z_alpha_index, mul(2, d, intersection), self_index);
}

Int fredholm_index(const PrequantizationBundle& bundle, const CurveEndData& c) {
  if (c.genus_c < 0 || c.h_ends < 0 || c.eplus_ends < 0 || c.total_multiplicity < 0) {
    throw InputError("curve end data must be nonnegative");
  }
  if (add(c.eplus_ends, c.h_ends) > c.total_multiplicity) {
    throw InputError("more ends than total multiplicity");
  }
  return add(sub(mul(2, c.genus_c), 2), c.h_ends, mul(2, c.eplus_ends), mul(2, c.total_multiplicity),
             mul(2, c.degree, bundle.chi()), mul(2, c.degree, bundle.euler()));
}

Int two_i_minus_ind(const PrequantizationBundle& bundle, const OrbitSet& alpha, Int d, const CurveEndData& c) {
  check_fits(bundle, alpha);
  const Int m = alpha.total();
  if (c.total_multiplicity != m) throw InputError("curve multiplicity does not match orbit set");
  if (c.degree != d) throw InputError("curve degree does not match relative class");
  if (c.h_ends != alpha.hyperbolic_total()) throw InputError("hyperbolic ends must be simple (h_ends = sum m_hyp)");
  if (c.genus_c < 0 || c.eplus_ends < 0) throw InputError("curve end data must be nonnegative");
  return add(mul(2, alpha.m_plus()), mul(-2, alpha.m_minus()), mul(4, d, m), mul(-2, d, d, bundle.abs_e()), 2,
             mul(-2, c.genus_c), arith::neg(c.h_ends), mul(-2, c.eplus_ends));
}

Int relative_index(const PrequantizationBundle& bundle, const OrbitSet& alpha, const OrbitSet& beta) {
  check_fits(bundle, alpha);
  check_fits(bundle, beta);
  const Int diff = sub(alpha.total(), beta.total());
  if (arith::mod(diff, bundle.abs_e()) != 0) {
    throw InputError("orbit sets lie in different Z/" + std::to_string(bundle.abs_e()) + " classes");
  }
  const Int d_alpha = diff / bundle.abs_e();
  return sub(ech_index(bundle, alpha, d_alpha), ech_index(bundle, beta, 0));
}

Int grading(const PrequantizationBundle& bundle, const OrbitSet& alpha) {
  check_fits(bundle, alpha);
  if (!is_ech_generator(alpha)) throw InputError("grading is defined for ECH generators only");
  const Int m = alpha.total();
  if (m % bundle.abs_e() != 0) throw InputError("grading is defined for the null class only (M must be divisible by |e|)");
  const Int d = m / bundle.abs_e();
  return add(mul(d, d, bundle.abs_e()), alpha.m_plus(), arith::neg(alpha.m_minus()), mul(d, bundle.chi()));
}

std::vector<Int> partition_of(OrbitKind kind, Int m) {
  if (m <= 0) throw InputError("partition needs a positive multiplicity");
  switch (kind) {
    case OrbitKind::NegativeElliptic:
      return {m};
    case OrbitKind::PositiveElliptic:
    case OrbitKind::PositiveHyperbolic:
      return std::vector<Int>(static_cast<std::size_t>(m), 1);
  }
  throw InputError("unknown orbit kind");
}

}  // namespace pqech
