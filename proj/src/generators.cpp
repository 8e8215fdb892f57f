#include "pqech/generators.hpp"

#include <algorithm>

#include "pqech/index.hpp"

namespace pqech {

using arith::add;
using arith::mul;
using arith::sub;

bool canonical_less(const GradedGenerator& a, const GradedGenerator& b) {
  if (auto c = a.action <=> b.action; c != 0) return c < 0;
  return tie_break_less(a.orbit_set, b.orbit_set);
}

namespace {

// Calls fn(mask) for every 0/1 vector of length n with exactly `ones` ones.
template <typename Fn>
void for_each_hyperbolic_choice(std::size_t n, std::size_t ones, Fn&& fn) {
  if (ones > n) return;
  std::vector<Int> mask(n, 0);
  std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(ones), 1);
  do {
    fn(mask);
  } while (std::prev_permutation(mask.begin(), mask.end()));
}

Int min_grading_at_degree(const PrequantizationBundle& bundle, Int d) {
  return mul(d, sub(add(mul(d, bundle.abs_e()), bundle.chi()), bundle.abs_e()));
}

GradedGenerator make_generator(const PrequantizationBundle& bundle, const MorseProfile& profile, OrbitSet alpha) {
  GradedGenerator g;
  g.grading = grading(bundle, alpha);
  g.action = action_of(alpha, profile);
  g.degree = alpha.total() / bundle.abs_e();
  g.orbit_set = std::move(alpha);
  return g;
}

}  // namespace

Int max_degree_for_grading(const PrequantizationBundle& bundle, Int target_grading) {
  // {d >= 0 : min_grading_at_degree(d) <= target} is an interval starting at 0
  // because the bound is a convex quadratic vanishing at d = 0.
  Int d = 0;
  while (min_grading_at_degree(bundle, d + 1) <= target_grading) ++d;
  return d;
}

std::vector<GradedGenerator> enumerate_by_grading(const PrequantizationBundle& bundle, Int target_grading,
                                                  const MorseProfile& profile) {
  if (target_grading < 0 || target_grading % 2 != 0) {
    throw InputError("target grading must be even and nonnegative, got " + std::to_string(target_grading));
  }
  const auto n_hyp = static_cast<std::size_t>(bundle.hyperbolic_count());
  if (profile.h_saddle().size() != n_hyp) throw InputError("Morse profile does not match the bundle genus");

  std::vector<GradedGenerator> out;
  const Int d_max = max_degree_for_grading(bundle, target_grading);
  for (Int d = 0; d <= d_max; ++d) {
    const Int m = mul(d, bundle.abs_e());
    // m+ - m- is forced; the hyperbolic count h only changes m+ + m-.
    const Int s = sub(target_grading, add(mul(d, d, bundle.abs_e()), mul(d, bundle.chi())));
    const Int h_max = std::min<Int>(static_cast<Int>(n_hyp), m);
    for (Int h = 0; h <= h_max; ++h) {
      const Int elliptic = m - h;
      if (s > elliptic || -s > elliptic || (elliptic + s) % 2 != 0) continue;
      const Int m_plus = (elliptic + s) / 2;
      const Int m_minus = elliptic - m_plus;
      for_each_hyperbolic_choice(n_hyp, static_cast<std::size_t>(h), [&](const std::vector<Int>& mask) {
        out.push_back(make_generator(bundle, profile, OrbitSet(m_plus, mask, m_minus)));
      });
    }
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::vector<GradedGenerator> enumerate_by_grading(const PrequantizationBundle& bundle, Int target_grading) {
  return enumerate_by_grading(bundle, target_grading, MorseProfile::standard(bundle.genus()));
}

std::vector<GradedGenerator> enumerate_by_action(const PrequantizationBundle& bundle, const MorseProfile& profile,
                                                 const ExactAction& limit) {
  if (limit.leading < 0) throw InputError("action limit must be nonnegative");
  const auto n_hyp = static_cast<std::size_t>(bundle.hyperbolic_count());
  if (profile.h_saddle().size() != n_hyp) throw InputError("Morse profile does not match the bundle genus");

  std::vector<GradedGenerator> out;
  const Int m_cap = limit.leading / 2;
  for (Int m = 0; m <= m_cap; m = add(m, bundle.abs_e())) {
    const Int h_max = std::min<Int>(static_cast<Int>(n_hyp), m);
    for (Int h = 0; h <= h_max; ++h) {
      for_each_hyperbolic_choice(n_hyp, static_cast<std::size_t>(h), [&](const std::vector<Int>& mask) {
        for (Int m_plus = 0; m_plus <= m - h; ++m_plus) {
          OrbitSet alpha(m_plus, mask, m - h - m_plus);
          if (action_of(alpha, profile) < limit) out.push_back(make_generator(bundle, profile, std::move(alpha)));
        }
      });
    }
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

SpherePair sphere_pair_for_k(Int abs_e, Int k) {
  if (abs_e < 1) throw InputError("|e| must be positive");
  if (k < 0) throw InputError("k must be nonnegative");
  const Int two_k = mul(2, k);
  std::vector<SpherePair> found;
  // Below degree d the grading is at least 2d + d(d-1)|e|, increasing in d.
  for (Int d = 0; add(mul(2, d), mul(d, d - 1, abs_e)) <= two_k; ++d) {
    const Int m = mul(d, abs_e);
    const Int s = sub(two_k, add(mul(2, d), mul(d, d, abs_e)));
    if (s > m || -s > m || (m + s) % 2 != 0) continue;
    const Int m_plus = (m + s) / 2;
    found.push_back({m - m_plus, m_plus, d});
  }
  if (found.size() != 1) {
    throw InvariantError("expected exactly one sphere generator in grading " + std::to_string(two_k) + ", found " +
                         std::to_string(found.size()));
  }
  return found.front();
}

}  // namespace pqech
